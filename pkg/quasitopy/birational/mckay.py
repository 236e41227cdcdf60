"""
Comparison of Chen-Ruan Betti numbers across a blowdown.
"""
from dataclasses import dataclass
import logging
from typing import (
    Any,
    Dict,
)

from quasitopy.core.model import QuasitoricModel
from quasitopy.invariants.cohomology import (
    BettiTable,
    CRBettiTable,
    cr_betti,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class McKayReport:
    """
    Chen-Ruan Betti numbers of X and Y side by side.

    ``degreewise_diff`` holds the nonzero entries of ``table_x - table_y``;
    ``total_diff`` is the difference of the total dimensions, X minus Y.
    """

    table_x: CRBettiTable
    table_y: CRBettiTable
    equal: bool
    degreewise_diff: BettiTable
    total_diff: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "equal": self.equal,
            "table_x": self.table_x.to_json_dict(),
            "table_y": self.table_y.to_json_dict(),
            "degreewise_diff": self.degreewise_diff.to_json_dict(),
            "total_diff": self.total_diff,
        }


def mckay_check(model_x: QuasitoricModel, model_y: QuasitoricModel) -> McKayReport:
    """
    Compare the Chen-Ruan Betti numbers of two models degree by degree.

    For Y a blowdown of X the tables agree exactly when the blowdown is crepant.

    Parameters
    ----------
    model_x, model_y : QuasitoricModel
        Valid models.

    Returns
    -------
    McKayReport

    Examples
    --------
    >>> M = QuasitoricModel.from_edges([(1, 0), (0, 1), (-1, 3), (0, -1)])
    >>> report = mckay_check(M, blowdown(M, blowdown_site(M, 1)))
    >>> report.equal, report.total_diff
    (False, -1)
    """
    table_x = cr_betti(model_x)
    table_y = cr_betti(model_y)

    diff = table_x.sub(table_y, fill_value=0).astype("int64")
    diff = BettiTable.from_dimensions(diff.to_dict())
    total_diff = table_x.total() - table_y.total()

    logger.debug("total Chen-Ruan dimensions %d and %d", table_x.total(), table_y.total())
    return McKayReport(table_x, table_y, diff.empty, diff, total_diff)
