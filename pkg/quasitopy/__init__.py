from quasitopy.birational.blowdown import (
    BlowdownSite,
    Side,
    blowdown,
    blowdown_site,
    blowup,
    is_crepant,
)
from quasitopy.birational.mckay import (
    McKayReport,
    mckay_check,
)
from quasitopy.core.lattice import (
    LatticeVector,
    det2,
    is_primitive,
    unimodular_complement,
)
from quasitopy.core.model import (
    QuasitoricModel,
    ValidationReport,
    parse_model,
    serialize_model,
    validate,
)
from quasitopy.errors import (
    DomainError,
    ParseError,
    QuasitopyError,
    ValidationError,
)
from quasitopy.invariants.cohomology import (
    BettiTable,
    CRBettiTable,
    cr_betti,
    singular_betti,
    todd_genus,
)
from quasitopy.invariants.localgroup import (
    is_SL,
    local_group,
    singularity_type,
)

from . import (
    birational,
    charts,
    invariants,
    random,
)

__all__ = ["birational", "charts", "invariants", "random"]

__version__ = "0.1.0"
