"""Exception types mapped to CLI exit codes (config 2, capacity 3, numerics 4)."""


class ConfigError(ValueError):
    """Invalid or unknown configuration keys/values."""


class CapacityError(ValueError):
    """Requested problem size exceeds the declared desk-scale limits."""


class NumericalError(RuntimeError):
    """Propagation or decomposition failed beyond recoverable fallbacks."""
