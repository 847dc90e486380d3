"""Constants for matroid-hvectors."""

# Vertex sets are bitmasks; vertex i is bit i-1.
MAX_VERTICES = 31
MAX_DEFINITIONAL_VERTICES = 20
MAX_IDEAL_VERTICES = 20

MAX_PARTITION_N = 60
# Past MAX_PARTITION_N membership is decided recursively; recursion depth grows with h₁.
MAX_RECURSIVE_H1 = 400
MIN_TABLE_N = 2
MAX_TABLE_N = 60

# Exhaustive graph census bounds (2^C(n,2) graphs).
MIN_CENSUS_N = 2
MAX_CENSUS_N = 7
# Running the library tests on every graph is too slow past n = 6 unless asked for.
LIBRARY_SWEEP_MAX_N = 6
DEFAULT_CHUNK_SIZE = 1 << 16

BROWN_COLBOURN_ALPHAS = (1, 2, 3)

ENV_WORKERS = "MATROID_HVECTORS_WORKERS"
ENV_CHUNK_SIZE = "MATROID_HVECTORS_CHUNK_SIZE"
DEFAULT_WORKERS = 1

TABLE_FORMATS = ("text", "csv", "json")
SHADED_MARK = "*"
EMPTY_CELL = "--"
