"""
Default constants for the workbench.

Library code falls back to these values when no environment configuration
is passed in explicitly.
"""
# Irr G_lambda truncation: total boxes of the partition part
DEFAULT_TRUNC_BOXES = 3

# Irr G_lambda truncation: largest |determinant power|
DEFAULT_TRUNC_DET = 2

# Upper bound on stored form memo entries
FORM_CACHE_SIZE = 200000

# Extremality BFS may visit this many times the W_cl-orbit size
EXTREMAL_BFS_FACTOR = 10

# Total boxes accepted by the monomial Littlewood-Richardson oracle
ORACLE_MAX_BOXES = 8

# Consecutive out-of-range roots after which a PBW scan stops
PBW_SCAN_SLACK = 1

# Default delta-degree cutoff for root listings
DEFAULT_DELTA_CUTOFF = 2

# Bound on the delta-degree used by inversion-set length checks
INVERSION_DELTA_BOUND = 12
