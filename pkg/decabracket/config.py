"""
Global configuration for the decabracket engine.

Every value here is a plain module-level constant. Nothing is read from the
environment or from files: run-time choices are made with command-line flags.
"""

# Schema tag written into every serialized table document
SCHEMA_VERSION = "decabracket/1"

# The plane P^n whose line bundles carry the construction
PLANE_DIMENSION = 2

# Twists used by the bracket family on P^5 = P(H^0(O(2))^*)
SECTION_DEGREE = 2  # O(2): the six coordinates of P^5
CUBIC_DEGREE = 3  # anticanonical cubics F
SERRE_DEGREE = -5  # H^2(O(-5)) pairs with H^0(O(2))

# Homotopy-identity sweep: all basis elements with max |e_i| <= this bound
CECH_SWEEP_BOUND = 4

# Spot-check bound for the other plane dimensions (n = 1 and n = 3)
CECH_SPOT_CHECK_BOUND = 2

# Sampled checks
PENCIL_SAMPLES = 20
RANDOM_SEED = 1729
PENCIL_NUMERATOR_RANGE = (-9, 9)
PENCIL_DENOMINATOR_RANGE = (1, 7)

# Verification runner
DEFAULT_JOBS = 1
DEFAULT_SUITE = "all"

# Logging
LOG_FORMAT = "%(levelname)s: %(message)s"
