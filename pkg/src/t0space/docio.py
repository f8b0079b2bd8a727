"""Space documents: JSON form of finite spaces with named points.

A document holds `points` plus exactly one of `opens`, `subbasis`, or
`poset`. The canonical writer sorts point names and emits the full open
family, so canonicalization is idempotent and golden files are stable.
"""

import json

from .bitsets import bits, sort_key
from .core import FinitePoset, FiniteSpace, generate_topology, poset_topology
from .errors import CapExceededError, ParseError

SPACE_FORMS = ("opens", "subbasis", "poset")


def space_from_doc(doc: dict) -> FiniteSpace:
    if not isinstance(doc, dict):
        raise ParseError("space document must be an object")
    points = doc.get("points")
    if not isinstance(points, list) or not points:
        raise ParseError("'points' must be a nonempty list of names")
    if len(set(points)) != len(points):
        raise ParseError("point names must be distinct")
    names = [str(p) for p in points]
    present = [k for k in SPACE_FORMS if k in doc]
    if len(present) != 1:
        raise ParseError(f"exactly one of {SPACE_FORMS} is required")
    index = {p: i for i, p in enumerate(names)}

    def to_mask(lst):
        if not isinstance(lst, list):
            raise ParseError("point sets must be lists of names")
        m = 0
        for p in lst:
            if str(p) not in index:
                raise ParseError(f"unknown point name {p!r}")
            m |= 1 << index[str(p)]
        return m

    form = present[0]
    try:
        if form == "poset":
            spec = doc["poset"]
            if not isinstance(spec, dict) or "pairs" not in spec:
                raise ParseError("'poset' needs relation 'pairs'")
            kind = spec.get("kind", "alexandroff")
            pairs = []
            for pair in spec["pairs"]:
                if not isinstance(pair, list) or len(pair) != 2:
                    raise ParseError("relation pairs are two-element lists")
                lo, hi = str(pair[0]), str(pair[1])
                if lo not in index or hi not in index:
                    raise ParseError(f"unknown point in pair {pair!r}")
                pairs.append((index[lo], index[hi]))
            poset = FinitePoset.from_pairs(len(names), pairs)
            sp = poset_topology(poset, kind)
            return FiniteSpace(sp.n, sp.opens, tuple(names))
        masks = [to_mask(lst) for lst in doc[form]]
        return generate_topology(len(names), masks, names)
    except (ParseError, CapExceededError):
        raise
    except Exception as exc:  # validation errors surface as parse errors
        raise ParseError(str(exc)) from exc


def space_to_doc(space: FiniteSpace) -> dict:
    """Canonical document: points sorted by name, opens listed canonically."""
    names = [space.point_name(i) for i in range(space.n)]
    order = sorted(range(space.n), key=lambda i: names[i])
    rank = {old: new for new, old in enumerate(order)}

    def remap(mask):
        out = 0
        for i in bits(mask):
            out |= 1 << rank[i]
        return out

    opens = sorted((remap(u) for u in space.opens), key=sort_key)
    sorted_names = [names[i] for i in order]
    return {
        "points": sorted_names,
        "opens": [
            [sorted_names[i] for i in bits(u)] for u in opens
        ],
    }


def load_space(path: str) -> FiniteSpace:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read space document {path}: {exc}") from exc
    return space_from_doc(doc)


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
