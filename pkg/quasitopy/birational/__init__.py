from .blowdown import *
from .mckay import *

__all__ = [s for s in dir() if not s.startswith("_")]  # Remove dunders
