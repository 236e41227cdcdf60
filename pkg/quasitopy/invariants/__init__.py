from .cohomology import *
from .localgroup import *

__all__ = [s for s in dir() if not s.startswith("_")]  # Remove dunders
