"""Chaotic-iterations pseudo-random bit generator, test battery and analysis tools."""

from ._ciprng import *  # noqa: F401,F403
from ._ciprng import ConfigError, DegenerateSeedError, Generator, GeneratorConfig

__all__ = [name for name in dir() if not name.startswith("_")]
