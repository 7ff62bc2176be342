"""Maximum likelihood degrees of algebraic statistical models, computed exactly."""

__version__ = "0.1.0"
