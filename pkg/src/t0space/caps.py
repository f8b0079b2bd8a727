"""Size caps for exhaustive operations.

Every cap counts points. WORKBENCH_CAP in the environment overrides all of
them uniformly; per-operation defaults below reflect where combinatorial
blowup starts (power spaces are exponential in the point count, double power
spaces doubly so).
"""

import os

from .errors import CapExceededError

POINT_CAP = 12          # core ops: topology generation, poset topologies
SMYTH_MEMBER_CAP = 64   # max |K(X)| materialized as a Smyth space
UNION_MAP_CAP = 3       # union_map_check builds K(P_S(X))
TRANSFER_CAP = 4        # smyth_transfer classifies P_S(X)
PRODUCT_CAP = 12        # total points of a product space
EXTENSION_ENUM_CAP = 5  # extend_map uniqueness enumeration, per side


def effective(default: int) -> int:
    raw = os.environ.get("WORKBENCH_CAP")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        return default


def check(value: int, default: int, what: str) -> None:
    cap = effective(default)
    if value > cap:
        raise CapExceededError(f"{what}: {value} exceeds cap {cap}")
