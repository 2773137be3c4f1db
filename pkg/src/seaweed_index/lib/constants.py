from pathlib import Path

from platformdirs import user_log_dir

# Application
APP_NAME = "seaweed-index"
APP_ORGANIZATION = "seaweed-index"

# Logging
LOG_DIR = Path(user_log_dir(APP_NAME, APP_ORGANIZATION))
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# Output
OUTPUT_FORMATS = ("text", "csv", "json")
OUTPUT_FORMAT_DEFAULT = "text"

# CLI bounds
N_MAX_CAP = 200
JOBS_DEFAULT = 1

# Winding
WINDING_STEP_CAP_FACTOR = 10

# Statistics
MIN_REPEATS_DEFAULT = 3
STABILIZATION_WINDOW_TAIL = 5
INT64_MAX = 2**63 - 1

# Periodicity theorem: d -> (onset, values indexed from the onset)
THEOREM_TAILS = {
    1: (3, (0,)),
    2: (5, (1, 0)),
    3: (13, (2, 0)),
    4: (17, (4, 2, 3, 0)),
}

# Example tails for d = 5, 6, 7: d -> (onset, values indexed from the onset)
EXAMPLE_TAILS = {
    5: (21, (7, 3, 5, 3)),
    6: (37, (14, 5, 9, 3, 11, 5, 11, 3, 12, 5, 8, 3)),
    7: (41, (19, 9, 18, 7, 19, 9, 17, 7, 20, 9, 17, 7)),
}

# Periods as stated in prose next to the example tails
CLAIMED_PERIODS = {
    5: 4,
    6: 14,
    7: 14,
}

# d = 8 breakdown witnesses n = 8m + 1
BREAKDOWN_M_DEFAULT = (2, 3, 4, 5)
# Smallest --m-max that yields two rows to compare
BREAKDOWN_M_MIN = 3
