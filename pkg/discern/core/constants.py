# Rank threshold for Gram-Schmidt, relative to the largest input norm
ORTHONORMALIZE_TOLERANCE = 1e-10

# Hermiticity check on eigendecomposition input, relative to the max-norm
HERMITIAN_TOLERANCE = 1e-10

# Cyclic Jacobi: stop once every off-diagonal entry is below this fraction of the Frobenius norm
JACOBI_TOLERANCE = 1e-15
JACOBI_MAX_SWEEPS = 100

# Eigenvalues below this fraction of the largest are treated as zero by psd_sqrt
PSD_CLIP = 1e-14

# Subspaces are in general position when every Jordan cosine stays below 1 - tolerance
GENERAL_POSITION_TOLERANCE = 1e-8

# Smallest sin(theta) a sector may have before its complement frame is undefined
SECTOR_SIN_TOLERANCE = 1e-8

# Weights and state norms
WEIGHT_SUM_TOLERANCE = 1e-12
NORM_TOLERANCE = 1e-10

# POVM validation thresholds
COMPLETENESS_TOLERANCE = 1e-10
POSITIVITY_TOLERANCE = 1e-9
UNAMBIGUITY_TOLERANCE = 1e-10
RANK_TOLERANCE = 1e-8
CONSISTENCY_TOLERANCE = 1e-10

# Born probabilities below this are rounding noise and never sampled
PROBABILITY_FLOOR = 1e-12

REGIME_BELOW = 'Below'
REGIME_INTERIOR = 'Interior'
REGIME_ABOVE = 'Above'

IDENTIFY1 = 'Identify1'
IDENTIFY2 = 'Identify2'
FAIL = 'Fail'
OUTCOMES = (FAIL, IDENTIFY1, IDENTIFY2)

REGIONS = ('I', 'II', 'III', 'IV', 'V')

MEASUREMENT_PROJECTIVE = 'projective'
MEASUREMENT_POVM = 'povm'
MEASUREMENT_MIXED = 'mixed'

# Census probe grid, used when a region is empty at alpha = 0.5
CENSUS_PROBE_ALPHA = 0.5
CENSUS_SCAN_POINTS = 99

CSV_DIVIDER_HEADER = ('alpha', 'beta1', 'beta2', 'beta3', 'beta4')
CSV_SWEEP_HEADER = ('eta', 'q_total', 'fidelity_bound')
