import sys
from typing import Optional, Sequence

from halvecut.core.bootstrap import early_load_env_file, split_env_file_argument


def main(argv: Optional[Sequence[str]] = None) -> int:
    env_path, remaining = split_env_file_argument(list(sys.argv[1:] if argv is None else argv))
    early_load_env_file(env_path)

    # Imported only now: halvecut.core.config reads the environment at import time.
    from halvecut.cli import main as cli_main

    return cli_main(remaining)


if __name__ == "__main__":
    sys.exit(main())
