"""Smith form of polynomial matrices over Q[lambda] by elementary reduction."""

from __future__ import annotations

from dataclasses import dataclass

from .poly import RationalPoly, RationalPolyMatrix

_ONE = RationalPoly.const(1)
_ZERO = RationalPoly()


@dataclass(frozen=True)
class SmithForm:
    """Normal rank and monic invariant polynomials ``p_1 | p_2 | ... | p_rank``.

    ``left`` and ``right`` are unimodular matrices with ``left * P * right``
    equal to the diagonal Smith form; they are only filled in on request.
    """

    rank: int
    invariant_polys: tuple[RationalPoly, ...]
    left: tuple[tuple[RationalPoly, ...], ...] | None = None
    right: tuple[tuple[RationalPoly, ...], ...] | None = None


def _identity(n: int) -> list[list[RationalPoly]]:
    return [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]


class _Reducer:
    def __init__(self, P: RationalPolyMatrix, track: bool):
        self.A = [list(row) for row in P.entries]
        self.m, self.n = P.rows, P.cols
        self.U = _identity(self.m) if track else None
        self.V = _identity(self.n) if track else None

    def swap_rows(self, i: int, j: int) -> None:
        if i == j:
            return
        self.A[i], self.A[j] = self.A[j], self.A[i]
        if self.U is not None:
            self.U[i], self.U[j] = self.U[j], self.U[i]

    def swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        for row in self.A:
            row[i], row[j] = row[j], row[i]
        if self.V is not None:
            for row in self.V:
                row[i], row[j] = row[j], row[i]

    def add_row(self, target: int, src: int, q: RationalPoly) -> None:
        # row[target] += q * row[src]
        self.A[target] = [a + q * b for a, b in zip(self.A[target], self.A[src])]
        if self.U is not None:
            self.U[target] = [a + q * b for a, b in zip(self.U[target], self.U[src])]

    def add_col(self, target: int, src: int, q: RationalPoly) -> None:
        for row in self.A:
            row[target] = row[target] + q * row[src]
        if self.V is not None:
            for row in self.V:
                row[target] = row[target] + q * row[src]

    def scale_row(self, i: int, c) -> None:
        self.A[i] = [c * a for a in self.A[i]]
        if self.U is not None:
            self.U[i] = [c * a for a in self.U[i]]

    def pivot(self, t: int) -> bool:
        """Move a lowest-degree nonzero entry of the trailing block to ``(t, t)``."""
        best = None
        for i in range(t, self.m):
            for j in range(t, self.n):
                x = self.A[i][j]
                if x and (best is None or x.degree < best[0]):
                    best = (x.degree, i, j)
                    if best[0] == 0:
                        break
        if best is None:
            return False
        self.swap_rows(t, best[1])
        self.swap_cols(t, best[2])
        return True

    def eliminate(self, t: int) -> None:
        A = self.A
        while True:
            for i in range(t + 1, self.m):
                if A[i][t]:
                    self.add_row(i, t, -(A[i][t] // A[t][t]))
            for j in range(t + 1, self.n):
                if A[t][j]:
                    self.add_col(j, t, -(A[t][j] // A[t][t]))
            # leftover remainders have lower degree than the pivot
            rest = [(A[i][t].degree, i, t) for i in range(t + 1, self.m) if A[i][t]]
            rest += [(A[t][j].degree, t, j) for j in range(t + 1, self.n) if A[t][j]]
            if rest:
                _, i, j = min(rest)
                self.swap_rows(t, i)
                self.swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, self.m) for j in range(t + 1, self.n) if not A[t][t].divides(A[i][j])),
                None,
            )
            if bad is None:
                break
            self.add_row(t, bad, _ONE)
        self.scale_row(t, 1 / A[t][t].lead)


def smith_form(P: RationalPolyMatrix, transforms: bool = False) -> SmithForm:
    """Invariant polynomials of ``P`` over the rationals.

    Pivots are chosen by minimal degree; row and column remainders are fed
    back as new pivots until the pivot divides every trailing entry.  With
    ``transforms=True`` the unimodular certificates are returned too.
    """
    red = _Reducer(P, transforms)
    invariants = []
    for t in range(min(red.m, red.n)):
        if not red.pivot(t):
            break
        red.eliminate(t)
        invariants.append(red.A[t][t])
    left = right = None
    if transforms:
        left = tuple(tuple(row) for row in red.U)
        right = tuple(tuple(row) for row in red.V)
    return SmithForm(len(invariants), tuple(invariants), left, right)


def matmul(A, B) -> list[list[RationalPoly]]:
    inner = len(B)
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        new = []
        for j in range(cols):
            acc = _ZERO
            for k in range(inner):
                if row[k] and B[k][j]:
                    acc = acc + row[k] * B[k][j]
            new.append(acc)
        out.append(new)
    return out
