from .lattice import *
from .model import *

__all__ = [s for s in dir() if not s.startswith("_")]  # Remove dunders
