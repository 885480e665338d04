import logging
import sys
from typing import Optional, TextIO

from halvecut.core import config

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(level: Optional[str] = None, stream: Optional[TextIO] = None) -> None:
    """Configures the root logger once per process.

    Records go to stderr by default so that results printed on stdout stay parseable.
    """
    logging.basicConfig(
        level=(level or config.LOG_LEVEL).upper(),
        format=LOG_FORMAT,
        handlers=[logging.StreamHandler(stream or sys.stderr)],
        force=True,
    )
    # Keep third-party records out of DEBUG runs
    logging.getLogger("networkx").setLevel(logging.WARNING)
