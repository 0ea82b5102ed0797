"""Exception types shared across the simulator."""


class ParameterError(ValueError):
    """A physical or numeric parameter is outside its valid range."""


class ConfigError(ValueError):
    """A configuration file is malformed or missing required fields."""


class DegenerateGeometryError(ValueError):
    """Two nodes coincide, so link angles and distance are undefined."""
