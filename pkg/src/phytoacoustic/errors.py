"""Exception types with fixed CLI exit codes."""


class ConfigError(ValueError):
    """Bad configuration file or value (exit code 2)."""

    exit_code = 2


class NumericAbort(RuntimeError):
    """A simulation became unstable or non-finite (exit code 3)."""

    exit_code = 3
