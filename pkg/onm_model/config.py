# config.py
import logging
import os

ENGINE_VERSION = "1.0.0"

DEFAULT_DEPTH = int(os.getenv("ONM_DEPTH", "3"))
DEFAULT_TRIALS = int(os.getenv("ONM_TRIALS", "10"))
DEFAULT_SEED = int(os.getenv("ONM_SEED", "0"))
DEFAULT_WORKERS = int(os.getenv("ONM_WORKERS", "4"))
LOG_LEVEL = os.getenv("ONM_LOG_LEVEL", "WARNING").upper()

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: str = None) -> None:
    logging.basicConfig(level=getattr(logging, level or LOG_LEVEL, logging.WARNING), format=LOG_FORMAT)
