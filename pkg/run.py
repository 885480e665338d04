import sys  # Must be one of the first

from halvecut.core.bootstrap import early_load_env_file, split_env_file_argument

# --- Early .env file loading logic ---
# Runs before any halvecut module that reads environment variables is imported.
_env_file_to_load, _cli_args = split_env_file_argument(sys.argv[1:])
_loaded = early_load_env_file(_env_file_to_load)
# --- End of early .env file loading ---

import logging

from halvecut.cli import main

logger = logging.getLogger(__name__)


if __name__ == "__main__":
    try:
        exit_code = main(_cli_args)
    except KeyboardInterrupt:
        # Using print here as logging may not be configured if parsing was interrupted
        print("Interrupted by user (Ctrl+C).", file=sys.stderr)
        exit_code = 130
    if _loaded:
        logger.debug(f"Settings were loaded from {_loaded}")
    sys.exit(exit_code)
