"""Hasse diagrams of specialization orders: DOT text and matplotlib figures."""

from .bitsets import bits
from .core import FinitePoset, FiniteSpace, specialization_order


def cover_edges(poset: FinitePoset) -> list[tuple[int, int]]:
    """(lower, upper) pairs with nothing strictly between, sorted."""
    edges = []
    for i in range(poset.n):
        for j in bits(poset.up[i]):
            if i == j:
                continue
            between = any(
                k != i and k != j and poset.up[i] >> k & 1 and poset.up[k] >> j & 1
                for k in range(poset.n)
            )
            if not between:
                edges.append((i, j))
    return sorted(edges)


def to_dot(space: FiniteSpace, title: str = "space") -> str:
    """Hasse diagram of the specialization order, deterministically ordered."""
    poset = specialization_order(space)
    lines = [f'digraph "{title}" {{']
    lines.append("  rankdir=BT;")
    for i in range(space.n):
        lines.append(f'  n{i} [label="{space.point_name(i)}"];')
    for lo, hi in cover_edges(poset):
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _ranks(poset: FinitePoset) -> list[int]:
    """Longest chain length below each element."""
    rank = [0] * poset.n
    changed = True
    while changed:
        changed = False
        for lo, hi in cover_edges(poset):
            if rank[hi] < rank[lo] + 1:
                rank[hi] = rank[lo] + 1
                changed = True
    return rank


def render_figure(space: FiniteSpace, path: str, title: str = "") -> None:
    """Draw the Hasse diagram with matplotlib and save it. The layout is
    layered by rank with nodes spread evenly per layer."""
    from matplotlib.backends.backend_agg import FigureCanvasAgg
    from matplotlib.figure import Figure

    poset = specialization_order(space)
    rank = _ranks(poset)
    layers: dict[int, list[int]] = {}
    for i in range(space.n):
        layers.setdefault(rank[i], []).append(i)
    pos = {}
    for r, members in sorted(layers.items()):
        for k, i in enumerate(sorted(members)):
            pos[i] = (k - (len(members) - 1) / 2.0, r)

    fig = Figure(figsize=(4, 3))
    FigureCanvasAgg(fig)
    ax = fig.add_subplot(111)
    for lo, hi in cover_edges(poset):
        (x1, y1), (x2, y2) = pos[lo], pos[hi]
        ax.plot([x1, x2], [y1, y2], color="0.4", zorder=1)
    xs = [pos[i][0] for i in range(space.n)]
    ys = [pos[i][1] for i in range(space.n)]
    ax.scatter(xs, ys, s=600, c="white", edgecolors="black", zorder=2)
    for i in range(space.n):
        ax.annotate(
            space.point_name(i), pos[i], ha="center", va="center", zorder=3
        )
    ax.set_axis_off()
    if title:
        ax.set_title(title)
    ax.margins(0.2)
    fig.savefig(path, bbox_inches="tight")
