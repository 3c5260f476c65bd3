import math

DEFAULT_TOL = 1e-10  # absolute tolerance on complex entries
UNITARY_TOL = 1e-12  # flagged unitary/hermitian operators
NORM_TOL = 1e-12  # flagged normalized states
SCALES_TOL = 1e-12  # a*g*N = 2*pi
ORTHONORMAL_TOL = 1e-10
EIG_RESIDUAL_TOL = 1e-9
NORMALITY_TOL = 1e-10
LABEL_MATCH_TOL = 1e-6
PHASE_TIE_TOL = 1e-9  # ties between largest components when fixing eigenvector phases
DEGENERACY_TOL = 1e-9

SINGULAR_GUARD = 1e-8  # |sin(pi r / N)| below this never reaches a generic quotient
SUM_TOL = 1e-9
RANDOM_R_BAND = 0.05  # random sum parameters are drawn with |sin(pi r / N)| above this
N_RANDOM_R = 100

COMPATIBILITY_TOL = 1e-12
XP_BIAS_THRESHOLD = 1e-3
REVIVAL_TOL = 1e-9

DEFAULT_MASS = 1.0
DEFAULT_SEED = 0
SWEEP_DIMS = (8, 16, 32, 64)
COMMUTATOR_LIMIT_TOL = 1e-6
ROUNDING_FLOOR = 1e-13  # probe deviations below this are rounding noise and are not ordered

TWO_PI = 2 * math.pi
