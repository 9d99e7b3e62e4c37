"""Weighted Ferrers diagrams behind the Weyr form of the codimension count.

For a Jordan structure, column ``i`` has height ``q_i`` and every cell in it
weighs ``2i - 1``; the rows then have lengths ``W_i`` and weigh ``W_i**2``.

For right minimal indices ``a``, column ``j`` has height ``a_j + 1`` and row
``i`` (counted from ``0`` at the bottom) has ``r_i`` real cells.  Rows below
the top are padded with ``r_0 - r_i`` fake cells of weight ``r_{i+1}``, so the
fake weights add up to ``sum (a_j - a_k - 1)`` over ``a_j > a_k``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .eigenstruct import as_partition, conjugate, fmt_list, weyr_of_min_indices


@dataclass(frozen=True)
class FerrersDiagram:
    title: str
    rows: tuple[tuple[str, ...], ...]  # top row first
    row_sums: tuple[int, ...]  # bottom row first
    total: int

    def render(self) -> str:
        width = max((len(c) for row in self.rows for c in row), default=1)
        lines = [self.title]
        lines += ["  " + " ".join(c.rjust(width) for c in row).rstrip() for row in self.rows]
        lines.append("row sums (bottom up): " + " + ".join(str(s) for s in self.row_sums) + f" = {self.total}")
        return "\n".join(lines)


def jordan_ferrers(segre) -> FerrersDiagram:
    q = as_partition(segre)
    w = conjugate(q)
    rows = [tuple(str(2 * j + 1) for j in range(wi)) for wi in w]
    sums = tuple(wi * wi for wi in w)
    return FerrersDiagram(
        f"Jordan structure: Segre {fmt_list(q)}, Weyr {fmt_list(w)}",
        tuple(reversed(rows)),
        sums,
        sum(sums),
    )


def min_index_ferrers(indices) -> FerrersDiagram:
    a = tuple(sorted(indices, reverse=True))
    r = weyr_of_min_indices(a)
    rows, sums = [], []
    top = len(r) - 1
    for i, ri in enumerate(r):
        fake = 0 if i in (0, top) else r[0] - ri
        weight = r[i + 1] if i + 1 < len(r) else 0
        rows.append(tuple(["."] * ri + [str(weight)] * fake))
        sums.append(fake * weight)
    return FerrersDiagram(
        f"Right minimal indices: Segre {fmt_list(a)}, Weyr {fmt_list(r)} (real cells '.', fake cells weighted)",
        tuple(reversed(rows)),
        tuple(sums),
        sum(sums),
    )
