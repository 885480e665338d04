import os
import sys
from typing import List, Optional, Tuple

from dotenv import find_dotenv, load_dotenv

ENV_FILE_FLAG = "--env-file"


def early_load_env_file(env_path: Optional[str] = None) -> Optional[str]:
    """
    Loads environment variables from a .env file before halvecut.core.config is imported.
    Returns the path that was loaded, if any. Uses stderr because logging is not configured yet.
    """
    if env_path:
        if os.path.exists(env_path):
            load_dotenv(dotenv_path=env_path)
            return env_path
        print(f"[bootstrap] Specified .env file not found: {env_path}. Trying default locations.", file=sys.stderr)

    dotenv_path_found = find_dotenv(usecwd=True)
    if dotenv_path_found and os.path.exists(dotenv_path_found):
        load_dotenv(dotenv_path_found)
        return dotenv_path_found
    return None


def split_env_file_argument(argv: List[str]) -> Tuple[Optional[str], List[str]]:
    """Pulls '--env-file PATH' (or '--env-file=PATH') out of argv."""
    remaining: List[str] = []
    env_path: Optional[str] = None
    skip_next = False
    for position, arg in enumerate(argv):
        if skip_next:
            skip_next = False
            continue
        if arg == ENV_FILE_FLAG:
            if position + 1 < len(argv):
                env_path = argv[position + 1]
                skip_next = True
            continue
        if arg.startswith(ENV_FILE_FLAG + "="):
            env_path = arg.split("=", 1)[1]
            continue
        remaining.append(arg)
    return env_path, remaining
