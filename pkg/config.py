"""
Single source of truth for configuration.
Everything imports from here. No other module reads the environment.
"""

import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()


def _env_bool(key: str, default: str) -> bool:
    return os.getenv(key, default).strip().lower() in ("1", "true", "yes", "on")


# ─── Size bounds ──────────────────────────────────────────────────────────
MAX_SIZE = int(os.getenv("SRL_MAX_SIZE", "4"))  # default catalog bound for `suite full`
ENUM_CAP = int(os.getenv("SRL_ENUM_CAP", "5"))
ENUM_HARD_CAP = 6  # enumeration beyond this is out of scope whatever the env says
CONGRUENCE_MAX = int(os.getenv("SRL_CONGRUENCE_MAX", "16"))
SCS_MAX = int(os.getenv("SRL_SCS_MAX", "16"))
CANONICAL_MAX = int(os.getenv("SRL_CANONICAL_MAX", "10"))
CANDIDATE_MAX = 3  # table-complete candidate sweep for the basis cross-check

# ─── Verification ─────────────────────────────────────────────────────────
VERIFY_THEORY = _env_bool("SRL_VERIFY_THEORY", "true")  # CLI --fast overrides to False
RELABEL_TRIALS = int(os.getenv("SRL_RELABEL_TRIALS", "100"))
RANDOM_SEED = int(os.getenv("SRL_RANDOM_SEED", "0"))
WORKERS = int(os.getenv("SRL_WORKERS", "1"))

# ─── Project paths ────────────────────────────────────────────────────────
PROJECT_ROOT = Path(__file__).resolve().parent
CATALOG_DIR = Path(os.getenv("SRL_CATALOG_DIR", str(PROJECT_ROOT / "catalog")))
LOGS_DIR = PROJECT_ROOT / "logs"
LOGS_DIR.mkdir(exist_ok=True)

ENUMERATION_LOG = str(LOGS_DIR / "enumeration.log")
SUITE_LOG = str(LOGS_DIR / "suite.log")

CATALOG_DB_NAME = "catalog.db"
CATALOG_INDEX_NAME = "index.tsv"
