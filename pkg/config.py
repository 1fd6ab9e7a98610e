"""
Max-Distance Toolkit - Centralized Configuration
Process-wide settings only. Point generation never reads the environment,
so fixtures stay reproducible from (kind, n, seed, aspect) alone.
"""
import os
import logging
from dotenv import load_dotenv
from datetime import datetime
from typing import List
import pytz

logger = logging.getLogger(__name__)

load_dotenv()

# === Logging ===
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()

# === Verification ===
VERIFY_RTOL = float(os.getenv("VERIFY_RTOL", "1e-12"))
VERIFY_WORKERS = int(os.getenv("VERIFY_WORKERS", "4"))

# === Benchmark ===
BRUTE_N_MAX = int(os.getenv("BRUTE_N_MAX", "100000"))  # brute force is O(N^2), cap it
BENCH_REPS = int(os.getenv("BENCH_REPS", "3"))
BENCH_SEED = int(os.getenv("BENCH_SEED", "42"))

# === Timezone ===
TIMEZONE = pytz.timezone(os.getenv("TIMEZONE", "UTC"))


def get_now() -> datetime:
    """Get current time in configured timezone."""
    return datetime.now(TIMEZONE)


def validate_config() -> List[str]:
    """Validate settings on startup. Returns list of errors."""
    errors = []

    if not isinstance(logging.getLevelName(LOG_LEVEL), int):
        errors.append(f"LOG_LEVEL '{LOG_LEVEL}' is not a logging level")
    if not VERIFY_RTOL > 0:
        errors.append("VERIFY_RTOL must be positive")
    if VERIFY_WORKERS < 1:
        errors.append("VERIFY_WORKERS must be at least 1")
    if BRUTE_N_MAX < 2:
        errors.append("BRUTE_N_MAX must be at least 2")
    if BENCH_REPS < 1:
        errors.append("BENCH_REPS must be at least 1")

    if BRUTE_N_MAX > 200_000:
        logger.warning(f"BRUTE_N_MAX={BRUTE_N_MAX}: brute force runs will take minutes")

    return errors
