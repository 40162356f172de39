#!/usr/bin/env python3
"""Print the operating-point estimates for every built-in preset.

For each preset the table shows the pipeline couplings, the
cooperativities and the locked-resonance efficiency from both the matrix
solver and the closed form, which must agree to solver precision.
"""

from afm_transducer.closed_forms import (
    cooperativities,
    eta_with_cavity_full,
    eta_without_cavity_full,
)
from afm_transducer.constants import ordinary
from afm_transducer.presets import PRESET_NAMES, assemble, get_preset
from afm_transducer.scattering import Configuration, scatter


def main() -> None:
    header = (
        f"{'preset':27s} {'g_b/2pi':>12s} {'zeta_b/2pi':>12s} {'xi_b/2pi':>12s} "
        f"{'C_em':>10s} {'C_om':>10s} {'eta (solver)':>13s} {'eta (closed)':>13s}"
    )
    print(header)
    print("-" * len(header))
    for name in PRESET_NAMES:
        assembled = assemble(get_preset(name))
        system = assembled.system
        res = scatter(system, assembled.probe)
        coop = cooperativities(system)
        if system.configuration is Configuration.WITH_OPTICAL_CAVITY:
            closed = eta_with_cavity_full(system, assembled.probe)
        else:
            closed = eta_without_cavity_full(system, assembled.probe)
        print(
            f"{name:27s} {ordinary(system.g_beta):12.4e} "
            f"{ordinary(system.zeta_beta):12.4e} {ordinary(system.xi_beta):12.4e} "
            f"{coop.c_em_beta:10.3e} {coop.c_om_beta:10.3e} "
            f"{res.eta:13.4e} {closed:13.4e}"
        )


if __name__ == "__main__":
    main()
