from .charts import *
from .identities import *
from .sampling import *

__all__ = [s for s in dir() if not s.startswith("_")]  # Remove dunders
