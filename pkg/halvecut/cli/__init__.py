from .commands import EXIT_INVALID, EXIT_OK, EXIT_USAGE, UsageError, build_parser, main

__all__ = ["EXIT_INVALID", "EXIT_OK", "EXIT_USAGE", "UsageError", "build_parser", "main"]
