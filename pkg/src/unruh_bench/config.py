"""Configuration constants for unruh-bench."""

import math
from pathlib import Path

# Version
__version__ = "0.1.0"

# Directory paths (relative to project root)
PROJECT_ROOT = Path(__file__).parent.parent.parent
CONFIGS_DIR = PROJECT_ROOT / "configs"
"""Shipped scenario files"""
OUTPUT_DIR = PROJECT_ROOT / "output"
"""Default directory for sweep, spread and oracle outputs"""

# Physical constants
SPEED_OF_LIGHT_M_PER_S = 299_792_458.0
"""Default speed of light; scenario files may override it (the standard figures use 3e8)"""

FREQUENCY_CONVENTION = "angular"
"""GHz figures are read as angular frequencies: 1 GHz is 1e9 rad/s"""

# State defaults
DEFAULT_AMPLITUDE = 1.0 / math.sqrt(2.0)
"""Default P and Q of the helicity-entangled state"""

DEFAULT_OMEGA0_RAD_PER_S = 1.0e9
DEFAULT_SIGMA_RAD_PER_S = 1.0e7

MIN_CENTER_TO_WIDTH = 5.0
"""Smallest accepted omega0/sigma; below it the profile leaks onto omega <= 0"""

PROFILE_SUPPORT_WIDTHS = 8.0
"""Profile integrals run over omega0 +/- this many sigma"""

# Detector defaults
DEFAULT_DETECTOR_CENTER_PER_S = 1.0e9
DEFAULT_DETECTOR_WIDTH_PER_S = 2.0e6
DEFAULT_DETECTOR_SHAPE = "top_hat"

# Acceleration and sweep defaults
DEFAULT_A_PROPER_M_PER_S2 = 3.0e17
DEFAULT_SWEEP_A_MIN_M_PER_S2 = 3.0e16
DEFAULT_SWEEP_A_MAX_M_PER_S2 = 3.0e18
DEFAULT_SWEEP_POINTS = 50
"""Log-spaced accelerations per sweep"""

# Truncation defaults
DEFAULT_N_MAX = 15
"""Engine A cutoff per detector mode (dimension 2 * 16 * 16 = 512)"""

DEFAULT_TAIL_TOL = 1.0e-3

DEFAULT_BRUTE_N_MAX = 4
"""Recommended cutoff for the brute-force engine"""

# Grid defaults
DEFAULT_OMEGA_NODES = 256
"""Minimum Gauss-Legendre nodes for omega integrals"""

OMEGA_NODES_PER_PERIOD = 20
"""Kernel oscillation periods are resolved by at least this many nodes"""

OMEGA_PANEL_NODES = 32

DEFAULT_SPREAD_NODES = 2000
DEFAULT_BAND_NODES = 32
DEFAULT_BINS = 1
DEFAULT_BINS_CAP = 3

# Engine defaults
DEFAULT_BUDGET_TERMS = 4_000_000
"""Largest predicted sparse support the brute-force engine will allocate"""

DEFAULT_ORACLE_TOLERANCE = 1.0e-10

# Numerical thresholds
VALIDITY_THRESHOLD = 0.1
"""Peaked-detector ratio must stay below this"""

VALIDITY_WARN_THRESHOLD = 0.05
"""Ratios in [0.05, 0.1) pass with a warning"""

PARSEVAL_FAILURE = 1.0e-2
"""Spreads losing more than this much norm are rejected"""

WINDOW_IMPROVEMENT = 1.0e-6
"""Spread window doubling stops once the Parseval defect improves by less than this"""

MAX_WINDOW_DOUBLINGS = 12

PRUNE_THRESHOLD = 1.0e-16
"""Sparse amplitudes below this magnitude are dropped"""

EIGENVALUE_TOL_SCALE = 1.0e-12
"""Negativity tolerance per unit dimension and trace norm"""

LARGE_OMEGA_SERIES = 1.0e-8
"""Below this value of exp(-pi * Omega) the squeezing parameter uses the series branch"""
