"""Exact eigenstructure of a concrete rational matrix polynomial."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from sympy import Poly, QQ, Symbol
from sympy.polys.matrices import DomainMatrix

from ..eigenstruct import INFINITY, EigenvalueKey, Eigenstructure, validate
from .poly import LAMBDA, RationalPoly, RationalPolyMatrix
from .smith import smith_form

RIGHT = "right"
LEFT = "left"

_X = Symbol("x")


def _qq(x: Fraction):
    return QQ(x.numerator, x.denominator)


def _convolution_rank(coeffs: list[list[list[Fraction]]], k: int) -> int:
    """Rank of the map ``x -> P x`` on vectors of degree at most ``k``.

    The matrix has ``k + 1`` block columns and ``k + d + 1`` block rows, with
    ``A_i`` in block position ``(i + j, j)``.
    """
    d = len(coeffs) - 1
    m, n = len(coeffs[0]), len(coeffs[0][0])
    rows = [[QQ(0)] * (n * (k + 1)) for _ in range(m * (k + d + 1))]
    for j in range(k + 1):
        for i, A in enumerate(coeffs):
            for a in range(m):
                for b in range(n):
                    if A[a][b]:
                        rows[(i + j) * m + a][j * n + b] = _qq(A[a][b])
    return DomainMatrix(rows, (m * (k + d + 1), n * (k + 1)), QQ).rank()


def minimal_indices(P: RationalPolyMatrix, side: str = RIGHT, rank: int | None = None) -> tuple[int, ...]:
    """Right (or left) minimal indices, non-increasing.

    The nullity ``n_k`` of the degree-``k`` convolution map grows by the
    number of minimal indices ``<= k``; scanning ``k = 0, 1, ...`` recovers
    them.  Every index is at most ``grade * rank``.
    """
    if side == LEFT:
        return minimal_indices(P.transpose(), RIGHT, rank)
    if side != RIGHT:
        raise ValueError(f"side must be {RIGHT!r} or {LEFT!r}")
    if rank is None:
        rank = smith_form(P).rank
    want = P.cols - rank
    coeffs = P.coefficients()
    found: list[int] = []
    prev_nullity = 0
    k = 0
    while len(found) < want:
        if k > P.grade * rank:
            raise ArithmeticError("minimal index scan overran its bound")
        nullity = P.cols * (k + 1) - _convolution_rank(coeffs, k)
        # n_k - n_{k-1} counts indices <= k, so the new ones are the excess over that
        at_most_k = nullity - prev_nullity
        found.extend([k] * (at_most_k - len(found)))
        prev_nullity = nullity
        k += 1
    return tuple(sorted(found, reverse=True))


def _to_sympy(p: RationalPoly) -> Poly:
    return Poly([_qq(c) for c in reversed(p.coeffs)], _X, domain=QQ)


def _from_sympy(p: Poly) -> RationalPoly:
    return RationalPoly(Fraction(int(c.numerator), int(c.denominator)) for c in reversed(p.all_coeffs()))


def irreducible_factors(p: RationalPoly, hints: Iterable = ()) -> list[RationalPoly]:
    """Distinct monic irreducible factors of ``p`` over the rationals.

    Linear factors for hinted roots are split off first; the remainder goes
    through sympy's rational factorisation.
    """
    out: list[RationalPoly] = []
    rest = p.monic()
    for h in hints:
        f = LAMBDA - Fraction(h)
        if f.divides(rest):
            out.append(f)
            while f.divides(rest):
                rest = rest // f
    if rest.degree > 0:
        _, factors = _to_sympy(rest).factor_list()
        out.extend(_from_sympy(f).monic() for f, _ in factors)
    return out


def _factor_keys(f: RationalPoly) -> list[EigenvalueKey]:
    if f.degree == 1:
        return [EigenvalueKey.rational(-f.coeffs[0])]
    name = str(f).replace(" ", "")
    return [EigenvalueKey.symbol(f"{name}#{i + 1}") for i in range(f.degree)]


def _partition_at(invariants, factor: RationalPoly) -> tuple[int, ...]:
    return tuple(sorted((x for x in (p.multiplicity(factor) for p in invariants) if x), reverse=True))


def eigenstructure_of(P: RationalPolyMatrix, finite_roots_hint: Iterable = ()) -> Eigenstructure:
    """Minimal indices and partial multiplicities (including at infinity) of ``P``.

    Irreducible factors of degree ``g > 1`` of the last invariant polynomial
    give ``g`` symbolic eigenvalues named after the factor, all carrying the
    same partition.
    """
    sf = smith_form(P)
    eigen: dict[EigenvalueKey, tuple[int, ...]] = {}
    if sf.rank:
        for f in irreducible_factors(sf.invariant_polys[-1], finite_roots_hint):
            part = _partition_at(sf.invariant_polys, f)
            for key in _factor_keys(f):
                eigen[key] = part
        rev = smith_form(P.reversal())
        inf_part = _partition_at(rev.invariant_polys, LAMBDA)
        if inf_part:
            eigen[INFINITY] = inf_part
    e = Eigenstructure(
        P.rows,
        P.cols,
        P.grade,
        minimal_indices(P, RIGHT, sf.rank),
        minimal_indices(P, LEFT, sf.rank),
        eigen,
    )
    return validate(e)
