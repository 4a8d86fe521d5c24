"""
Application constants and default values.
"""


class Constants:
    """
    Application-wide constants and default values.
    """

    # Precision settings
    DEFAULT_PRECISION_BITS = 256
    MIN_PRECISION_BITS = 16
    GUARD_BITS = 64
    BITS_PER_DIGIT = 4

    # Verifiers whose sides are both Euler-Maclaurin or closed forms aim this close to full precision
    TIGHT_EPS_MARGIN_BITS = 24

    # Direct summation
    DEFAULT_TERMS = 1000000
    DEFAULT_CHUNK_SIZE = 4096
    DEFAULT_WORKERS = 1

    # Rounding allowances (ulps) charged per term of a direct sum
    INTEGER_POWER_ULPS = 4
    REAL_POWER_ULPS = 8

    # Euler-Maclaurin resource caps
    EM_MIN_N = 10
    EM_MAX_N = 200000
    EM_MAX_J = 400

    # Ramanujan / Plouffe series cap
    LAMBERT_MAX_TERMS = 100

    # Output formats
    FORMAT_TEXT = "text"
    FORMAT_CSV = "csv"
    FORMAT_JSON = "json"
    OUTPUT_FORMATS = [FORMAT_TEXT, FORMAT_CSV, FORMAT_JSON]

    # Exit codes
    EXIT_OK = 0
    EXIT_VERIFICATION_FAILED = 1
    EXIT_USAGE = 2
    EXIT_SHORTFALL = 3

    # Identity ids
    IDENTITY_LEMMA1 = "lemma1"
    IDENTITY_POLYGAMMA = "polygamma"
    IDENTITY_DELTA = "delta"
    IDENTITY_SPLIT = "split"
    IDENTITY_LEMMA4 = "lemma4"
    IDENTITY_LEMMA4_NUMERATOR = "lemma4-numerator"
    IDENTITY_COROLLARY = "corollary"
    IDENTITY_TOTH = "toth"
    IDENTITY_THEOREM1 = "theorem1"
    IDENTITY_THEOREM1_COEFFICIENTS = "theorem1-coefficients"
    IDENTITY_AC_RATIO = "allouche-cohen-ratio"
    IDENTITY_AC_RECURSION = "allouche-cohen-recursion"
    IDENTITY_EULER_EVEN = "euler-even"
    IDENTITY_RAMANUJAN = "ramanujan-zeta3"
    IDENTITY_PLOUFFE = "plouffe-zeta7"
    IDENTITY_CATALAN = "catalan"
    IDENTITY_ODD_SHIFTS = "odd-shifts"

    # Default verification grids
    DEFAULT_K_VALUES = [1, 2, 3, 4]
    DEFAULT_S_VALUES = ["1.5", "2", "2.5", "3", "5", "7"]
    DELTA_S_VALUES = ["2.5", "3", "5", "7"]
    TOTH_S_VALUES = ["1.5", "2", "3", "5"]
    AC_S_VALUES = ["2", "3"]
    AC_RECURSION_K = 40
    AC_RECURSION_K_TIGHT = 60
    LARGE_TERMS = 1000000
    SMALL_TERMS = 100000
    SPLIT_S_VALUES = [2, 3, 5]
    SPLIT_N_VALUES = [4, 64, 1024]
    COEFFICIENT_CHECK_TERMS = 10000

    # Sequence names accepted by the seq subcommand
    SEQUENCE_NAMES = ["thue-morse", "paperfolding", "epsilon", "beta"]

    # Tables accepted by the table subcommand
    TABLE_NAMES = ["coefficients", "euler", "bernoulli", "pi-coefficients",
                   "corollary-denominators", "lemma4-listing", "theorem1-streams"]

    # Lemma 4 coefficients as listed in the source sequence reference
    LEMMA4_LISTED_VALUES = [8, 496, 8128, 130816, 2096128, 33550336]

    # Error messages
    ERROR_UNKNOWN_IDENTITY = "Unknown identity: {}. Valid identities are: {}"
    ERROR_UNDEFINED_B0 = "b_0 is not determined by the paperfolding recurrence; start at n >= 1"
