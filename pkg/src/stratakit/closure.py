"""Orbit- and bundle-closure inclusion for pencils and matrix polynomials.

Orbit closures of pencils are decided by three weak majorizations of Weyr
characteristics, shifted by the rank drop ``h = rank L - rank M``.  Bundle
closures add a search over coalescence maps of the eigenvalues of ``L``.
Polynomials reduce to their companion pencils throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Callable, Iterator, Sequence

from .combinatorics import set_partitions
from .eigenstruct import (
    BundleKey,
    CoalescenceMap,
    EigenvalueKey,
    Eigenstructure,
    bundle_key,
    companion_structure,
    validate,
    weyr_union,
)
from .errors import BudgetExceeded, IncomparableKeys, InvalidInput, SizeMismatch, ValidationError

RANK_GAP = "RankGap"
RIGHT_MAJORIZATION = "RightMajorization"
LEFT_MAJORIZATION = "LeftMajorization"
WEYR_MAJORIZATION = "WeyrMajorization"


@dataclass(frozen=True)
class FailedCondition:
    kind: str
    eigenvalue: EigenvalueKey | None = None

    def to_json(self) -> dict:
        return {"kind": self.kind, "eigenvalue": None if self.eigenvalue is None else str(self.eigenvalue)}

    def __str__(self) -> str:
        return self.kind if self.eigenvalue is None else f"{self.kind}({self.eigenvalue})"


@dataclass(frozen=True)
class ClosureReport:
    contained: bool
    h: int
    witness_map: CoalescenceMap | None = None
    failed_condition: FailedCondition | None = None

    def __bool__(self) -> bool:
        return self.contained

    def to_json(self) -> dict:
        return {
            "contained": self.contained,
            "h": self.h,
            "witness_map": self.witness_map.to_json() if self.witness_map else None,
            "failed_condition": self.failed_condition.to_json() if self.failed_condition else None,
        }


def weakly_majorizes(a: Sequence[int], b: Sequence[int], shift: int = 0) -> bool:
    """True iff ``a + (shift, shift, ...)`` majorizes ``b`` weakly.

    That is, every prefix sum of ``b`` is at most the corresponding prefix
    sum of ``a`` plus ``j * shift``.  Totals need not agree.  Indices past the
    end of ``b`` never fail, so only ``len(b)`` prefixes are compared.
    """
    if not b:
        return True
    a = list(a) + [0] * max(0, len(b) - len(a))
    sa = accumulate(a)
    sb = accumulate(b)
    return all(y <= x + (j + 1) * shift for j, (x, y) in enumerate(zip(sa, sb)))


def _same_size(L: Eigenstructure, M: Eigenstructure, grade: int | None = None) -> None:
    for e in (L, M):
        try:
            validate(e)
        except ValidationError as exc:
            raise InvalidInput(str(exc)) from exc
    if (L.rows, L.cols) != (M.rows, M.cols):
        raise SizeMismatch(f"sizes differ: {L.rows}x{L.cols} vs {M.rows}x{M.cols}")
    if grade is not None and (L.grade != grade or M.grade != grade):
        raise InvalidInput(f"expected grade {grade}, got {L.grade} and {M.grade}")
    if L.grade != M.grade:
        raise SizeMismatch(f"grades differ: {L.grade} vs {M.grade}")


def _check_comparable(L: Eigenstructure, M: Eigenstructure) -> None:
    # A symbol seen on one side only could equal any concrete value on the other.
    for a, b in ((L, M), (M, L)):
        lone = [k for k in a.spectrum if k.is_symbol and k not in b.spectrum]
        concrete = [k for k in b.spectrum if not k.is_symbol]
        if lone and concrete:
            raise IncomparableKeys(
                f"cannot compare symbolic {lone[0]} with concrete eigenvalue {concrete[0]}"
            )


def _singular_conditions(L: Eigenstructure, M: Eigenstructure) -> ClosureReport | None:
    h = L.rank - M.rank
    if h < 0:
        return ClosureReport(False, h, failed_condition=FailedCondition(RANK_GAP))
    if not weakly_majorizes(L.right_weyr, M.right_weyr, h):
        return ClosureReport(False, h, failed_condition=FailedCondition(RIGHT_MAJORIZATION))
    if not weakly_majorizes(L.left_weyr, M.left_weyr, h):
        return ClosureReport(False, h, failed_condition=FailedCondition(LEFT_MAJORIZATION))
    return None


def _weyr_condition(w_lower: Sequence[int], w_upper: Sequence[int], h: int) -> bool:
    # W(lambda, L) must be majorized by W(lambda, M) + (h, h, ...)
    return weakly_majorizes(w_upper, w_lower, h)


def _orbit_report(L: Eigenstructure, M: Eigenstructure) -> ClosureReport:
    early = _singular_conditions(L, M)
    if early is not None:
        return early
    h = L.rank - M.rank
    for key in sorted(set(L.spectrum) | set(M.spectrum)):
        if not _weyr_condition(L.weyr(key), M.weyr(key), h):
            return ClosureReport(False, h, failed_condition=FailedCondition(WEYR_MAJORIZATION, key))
    return ClosureReport(True, h)


def orbit_closure_contains_pencil(L: Eigenstructure, M: Eigenstructure) -> ClosureReport:
    """Decide whether the pencil structure ``M`` lies in the orbit closure of ``L``."""
    _same_size(L, M, grade=1)
    _check_comparable(L, M)
    return _orbit_report(L, M)


def orbit_closure_contains_poly(Q: Eigenstructure, P: Eigenstructure) -> ClosureReport:
    """Decide whether ``P`` lies in the orbit closure of ``Q`` (same size and grade)."""
    _same_size(Q, P)
    _check_comparable(Q, P)
    return _orbit_report(companion_structure(Q), companion_structure(P))


def _fresh_keys(avoid: Sequence[EigenvalueKey], count: int) -> list[EigenvalueKey]:
    out, i = [], 1
    while len(out) < count:
        k = EigenvalueKey.symbol(f"fresh{i}")
        if k not in avoid:
            out.append(k)
        i += 1
    return out


def _assignments(
    merged: Sequence[tuple[int, ...]], targets: Sequence[EigenvalueKey], fits: Callable
) -> Iterator[list[int | None]]:
    """Injective partial assignments block -> target index, ``None`` meaning a fresh key.

    Lexicographic order with each block trying the targets in order and the
    fresh key last; infeasible prefixes are pruned.
    """
    chosen: list[int | None] = []
    used: set[int] = set()

    def rec(i: int) -> Iterator[list[int | None]]:
        if i == len(merged):
            yield list(chosen)
            return
        for t in list(range(len(targets))) + [None]:
            if t is not None and t in used:
                continue
            if not fits(merged[i], t):
                continue
            chosen.append(t)
            if t is not None:
                used.add(t)
            yield from rec(i + 1)
            chosen.pop()
            used.discard(t)

    yield from rec(0)


def _bundle_search(L: Eigenstructure, M: Eigenstructure, max_eigenvalues: int | None) -> ClosureReport:
    if max_eigenvalues is not None and len(L.spectrum) > max_eigenvalues:
        raise BudgetExceeded(
            f"coalescence search over {len(L.spectrum)} eigenvalues exceeds the limit of {max_eigenvalues}"
        )
    early = _singular_conditions(L, M)
    if early is not None:
        return early
    h = L.rank - M.rank
    targets = list(M.spectrum)
    target_weyr = [M.weyr(t) for t in targets]

    def fits(w: tuple[int, ...], t: int | None) -> bool:
        return _weyr_condition(w, () if t is None else target_weyr[t], h)

    for blocks in set_partitions(list(L.spectrum)):
        merged = [weyr_union(*(L.weyr(k) for k in b)) for b in blocks]
        for assignment in _assignments(merged, targets, fits):
            fresh = iter(_fresh_keys(targets, assignment.count(None)))
            keys = [next(fresh) if t is None else targets[t] for t in assignment]
            return ClosureReport(True, h, witness_map=CoalescenceMap(blocks, keys))
    return ClosureReport(False, h, failed_condition=FailedCondition(WEYR_MAJORIZATION))


def bundle_closure_contains_pencil(
    L: Eigenstructure, M: Eigenstructure, max_eigenvalues: int | None = None
) -> ClosureReport:
    """Decide whether ``M`` lies in the bundle closure of ``L`` (pencils).

    Searches set partitions of the eigenvalues of ``L`` (restricted growth
    order) and, for each, injective assignments of the merged blocks to
    eigenvalues of ``M`` or to fresh values; the first success is returned as
    the witness map.
    """
    _same_size(L, M, grade=1)
    return _bundle_search(L, M, max_eigenvalues)


def bundle_closure_contains_poly(
    Q: Eigenstructure, P: Eigenstructure, max_eigenvalues: int | None = None
) -> ClosureReport:
    """Decide whether ``P`` lies in the bundle closure of ``Q`` (any grade).

    Coalescence commutes with taking companion structures, so the search
    runs on the companion pencils; the witness map is stated in terms of the
    eigenvalues of ``Q``.
    """
    _same_size(Q, P)
    return _bundle_search(companion_structure(Q), companion_structure(P), max_eigenvalues)


def bundle_closure_decomposition(e: Eigenstructure, max_eigenvalues: int | None = None) -> list[BundleKey]:
    """All bundles contained in the closure of the bundle of ``e``, own bundle first.

    The remaining keys follow in canonical order.
    """
    from .strata import enumerate_bundles

    own = bundle_key(e)
    out = [own]
    for key in enumerate_bundles(e.rows, e.cols, e.grade):
        if key != own and bundle_closure_contains_poly(e, key.representative(), max_eigenvalues):
            out.append(key)
    return out

