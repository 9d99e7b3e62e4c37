"""Concrete matrices realising a given eigenstructure, and companion pencils."""

from __future__ import annotations

from typing import Mapping

from ..eigenstruct import EigenvalueKey, Eigenstructure, validate
from ..errors import GradeZero, InvalidAssignment, InvalidInput, Unsupported, ValidationError
from .poly import LAMBDA, RationalPoly, RationalPolyMatrix

_ONE = RationalPoly.const(1)
_ZERO = RationalPoly()


def companion_pencil(P: RationalPolyMatrix) -> RationalPolyMatrix:
    """First Frobenius companion pencil of ``P``.

    Size ``(m + (d-1) n) x dn``: first block row ``lambda A_d + A_{d-1}``,
    ``A_{d-2}``, ..., ``A_0``; below it ``-I`` on the block subdiagonal and
    ``lambda I`` on the block diagonal.
    """
    d = P.grade
    if d < 1:
        raise GradeZero("the companion pencil needs grade >= 1")
    if d == 1:
        return P
    m, n = P.rows, P.cols
    A = P.coefficients()
    rows, cols = m + (d - 1) * n, d * n
    ent = [[_ZERO] * cols for _ in range(rows)]
    for a in range(m):
        for b in range(n):
            ent[a][b] = RationalPoly([A[d - 1][a][b], A[d][a][b]])
            for j in range(1, d):
                ent[a][j * n + b] = RationalPoly.const(A[d - 1 - j][a][b])
    for blk in range(1, d):
        for i in range(n):
            r = m + (blk - 1) * n + i
            ent[r][(blk - 1) * n + i] = RationalPoly.const(-1)
            ent[r][blk * n + i] = LAMBDA
    return RationalPolyMatrix(rows, cols, 1, ent)


def resolve_values(e: Eigenstructure, values: Mapping | None) -> dict[EigenvalueKey, EigenvalueKey]:
    """Concrete (rational or infinite) value for every eigenvalue of ``e``.

    Symbolic keys must be assigned; concrete keys stand for themselves and
    may only be "assigned" their own value.  The result must be injective.
    """
    given = {}
    for k, v in (values or {}).items():
        try:
            given[EigenvalueKey.parse(k)] = EigenvalueKey.parse(v)
        except ValueError as exc:
            raise InvalidAssignment(str(exc)) from exc
    out = {}
    for key in e.spectrum:
        if key.is_symbol:
            if key not in given:
                raise InvalidAssignment(f"no value assigned to {key}")
            val = given[key]
            if val.is_symbol:
                raise InvalidAssignment(f"{key} must be assigned a rational or inf, not {val}")
        else:
            val = key
            if given.get(key, key) != key:
                raise InvalidAssignment(f"concrete eigenvalue {key} cannot be reassigned")
        out[key] = val
    if len(set(out.values())) != len(out):
        raise InvalidAssignment("eigenvalue assignment is not injective")
    return out


def _checked(e: Eigenstructure) -> None:
    try:
        validate(e)
    except ValidationError as exc:
        raise InvalidInput(str(exc)) from exc


def _place(ent, r0: int, c0: int, block) -> None:
    for i, row in enumerate(block):
        for j, x in enumerate(row):
            ent[r0 + i][c0 + j] = x


def _jordan(mu: EigenvalueKey, s: int):
    if mu.is_infinite:
        diag, sup = _ONE, LAMBDA
    else:
        diag, sup = LAMBDA - mu.value, _ONE
    return [[diag if i == j else sup if j == i + 1 else _ZERO for j in range(s)] for i in range(s)]


def _right_block(eps: int):
    # eps x (eps+1), lambda on the diagonal and 1 just right of it
    return [[LAMBDA if j == i else _ONE if j == i + 1 else _ZERO for j in range(eps + 1)] for i in range(eps)]


def _left_block(eta: int):
    return [list(col) for col in zip(*_right_block(eta))]


def kcf_witness(e: Eigenstructure, values: Mapping | None = None) -> RationalPolyMatrix:
    """Block-diagonal Kronecker canonical pencil with the structure ``e``."""
    _checked(e)
    if e.grade != 1:
        raise InvalidInput(f"kcf_witness needs a grade-1 structure, got grade {e.grade}")
    vals = resolve_values(e, values)
    ent = [[_ZERO] * e.cols for _ in range(e.rows)]
    r = c = 0
    for eps in e.right_min:
        _place(ent, r, c, _right_block(eps))
        r, c = r + eps, c + eps + 1
    for eta in e.left_min:
        if eta:
            _place(ent, r, c, _left_block(eta))
        r, c = r + eta + 1, c + eta
    for key, part in e.eigen:
        for s in part:
            _place(ent, r, c, _jordan(vals[key], s))
            r, c = r + s, c + s
    assert (r, c) == (e.rows, e.cols)
    return RationalPolyMatrix(e.rows, e.cols, 1, ent)


def _diagonal_slots(e: Eigenstructure, vals) -> list[list[tuple[EigenvalueKey, int]]] | None:
    """Distribute the partial multiplicities over ``rank`` diagonal entries.

    Each eigenvalue puts at most one part in any entry, and every entry must
    reach exactly ``grade`` (degree plus infinite part).  Depth-first search
    placing larger parts first; ``None`` when impossible.
    """
    n, d = e.rank, e.grade
    parts = sorted(((s, k) for k, p in e.eigen for s in p), key=lambda t: (-t[0], t[1]))
    slots: list[list[tuple[EigenvalueKey, int]]] = [[] for _ in range(n)]
    load = [0] * n

    def rec(i: int) -> bool:
        if i == len(parts):
            return all(x == d for x in load)
        s, key = parts[i]
        tried = set()
        for j in range(n):
            if load[j] + s > d or any(k == key for k, _ in slots[j]):
                continue
            state = (load[j], tuple(sorted(k for k, _ in slots[j])))
            if state in tried:
                continue
            tried.add(state)
            slots[j].append((key, s))
            load[j] += s
            if rec(i + 1):
                return True
            slots[j].pop()
            load[j] -= s
        return False

    return slots if rec(0) else None


def diagonal_witness(e: Eigenstructure, values: Mapping | None = None) -> RationalPolyMatrix | None:
    """Diagonal ``diag(f_1, ..., f_n)`` realising a regular ``e``, or ``None``."""
    if not e.is_regular or e.rows != e.cols:
        return None
    vals = resolve_values(e, values)
    slots = _diagonal_slots(e, vals)
    if slots is None:
        return None
    diag = []
    for slot in slots:
        f = _ONE
        for key, s in slot:
            mu = vals[key]
            if not mu.is_infinite:
                f = f * (LAMBDA - mu.value) ** s
        diag.append(f)
    ent = [[diag[i] if i == j else _ZERO for j in range(e.cols)] for i in range(e.rows)]
    return RationalPolyMatrix(e.rows, e.cols, e.grade, ent)


def poly_witness(e: Eigenstructure, values: Mapping | None = None) -> RationalPolyMatrix:
    """Best-effort matrix polynomial with eigenstructure ``e``.

    Pencils use the Kronecker form, regular structures a diagonal
    realisation, and the 2x2 quadratic bundles the built-in table templates.
    Anything else raises :class:`Unsupported`.
    """
    _checked(e)
    if e.grade == 1:
        return kcf_witness(e, values)
    vals = resolve_values(e, values)
    diag = diagonal_witness(e, values)
    if diag is not None:
        return diag
    if (e.rows, e.cols, e.grade) == (2, 2, 2) and not any(v.is_infinite for v in vals.values()):
        from .fixtures import template_witness

        found = template_witness(e, vals)
        if found is not None:
            return found
    raise Unsupported(
        f"no construction for this {e.rows}x{e.cols} grade-{e.grade} structure "
        "(only pencils, diagonal-realisable regular structures and 2x2 quadratic templates are built in)"
    )
