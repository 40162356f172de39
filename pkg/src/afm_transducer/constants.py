"""Physical constants and unit helpers.

All internal frequencies and rates are angular (rad/s).  Anything that
crosses the package boundary (configs, CSV/JSON output, CLI) is an
ordinary frequency in Hz; use the two converters below at the boundary
and nowhere else.
"""

import math

HBAR = 1.054571817e-34      # J s
SPEED_OF_LIGHT = 299792458.0  # m/s
VACUUM_PERMEABILITY = 1.25663706212e-6  # T^2 m^3 / J

TWO_PI = 2.0 * math.pi


def angular(frequency_hz: float) -> float:
    """Ordinary frequency in Hz to angular frequency in rad/s."""
    return TWO_PI * frequency_hz


def ordinary(omega: float) -> float:
    """Angular frequency in rad/s to ordinary frequency in Hz."""
    return omega / TWO_PI
