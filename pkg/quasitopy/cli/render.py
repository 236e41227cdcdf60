"""
Output of the command line front end: one canonical JSON document on standard
output, optional aligned tables on standard error.
"""
import json
from typing import (
    Any,
    Dict,
    Optional,
    TextIO,
)

import pandas as pd

from quasitopy.core.model import QuasitoricModel

SEPARATORS = (",", ":")


def dumps(document: Dict[str, Any]) -> str:
    """Minimal whitespace, keys in insertion order."""
    return json.dumps(document, separators=SEPARATORS)


def write_document(document: Dict[str, Any], stream: TextIO) -> None:
    stream.write(dumps(document))
    stream.write("\n")
    stream.flush()


def error_document(exc: BaseException, name: Optional[str] = None) -> Dict[str, Any]:
    document: Dict[str, Any] = {
        "error": name or type(exc).__name__,
        "message": str(exc),
    }
    reason = getattr(exc, "reason", None)
    if reason is not None:
        document["reason"] = reason
    return document


def edge_frame(model: QuasitoricModel) -> pd.DataFrame:
    frame = pd.DataFrame(model.to_list(), columns=["x", "y"])
    frame.index.name = "edge"
    return frame


def write_table(table: Any, stream: TextIO) -> None:
    if isinstance(table, (pd.Series, pd.DataFrame)):
        stream.write(table.to_string())
    else:
        stream.write(str(table))
    stream.write("\n")
    stream.flush()
