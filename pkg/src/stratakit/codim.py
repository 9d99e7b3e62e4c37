"""Codimensions of orbits and bundles.

The primary formula works on Weyr characteristics::

    codim O(L) = l_0 n + r_0 m - sum r_i r_{i+1} - sum l_i l_{i+1} + sum_k sum_i W_i(lambda_k)^2

and :func:`codim_orbit_segre_oracle` recomputes the same number from Segre
lists with the classical five-term count, as an independent check.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .eigenstruct import Eigenstructure, companion_structure, conjugate, validate, weyr_of_min_indices
from .errors import InvalidInput, ValidationError


class Convention(str, enum.Enum):
    """How the codimension of a grade-``d`` polynomial orbit is measured."""

    COMPANION = "companion"
    DIRECT = "direct"


@dataclass(frozen=True)
class CodimReport:
    orbit_codim: int
    bundle_codim: int
    distinct_eigenvalue_count: int
    convention: Convention | None
    ambient_note: str
    convention_divergence: bool = False

    def to_json(self) -> dict:
        return {
            "orbit_codim": self.orbit_codim,
            "bundle_codim": self.bundle_codim,
            "distinct_eigenvalue_count": self.distinct_eigenvalue_count,
            "convention": self.convention.value if self.convention else None,
            "ambient_note": self.ambient_note,
            "convention_divergence": self.convention_divergence,
        }


def _adjacent_products(w: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(w, w[1:]))


def weyr_orbit_codim(
    m: int, n: int, right_min: Iterable[int], left_min: Iterable[int], segres: Iterable[Sequence[int]]
) -> int:
    """Orbit codimension of an ``m x n`` pencil from its Weyr characteristics."""
    r = weyr_of_min_indices(right_min)
    l = weyr_of_min_indices(left_min)
    r0 = r[0] if r else 0
    l0 = l[0] if l else 0
    jordan = sum(w * w for q in segres for w in conjugate(q))
    return l0 * n + r0 * m - _adjacent_products(r) - _adjacent_products(l) + jordan


def _pencil(e: Eigenstructure) -> Eigenstructure:
    try:
        validate(e)
    except ValidationError as exc:
        raise InvalidInput(str(exc)) from exc
    if e.grade != 1:
        raise InvalidInput(f"expected a pencil (grade 1), got grade {e.grade}")
    return e


def codim_orbit_pencil(e: Eigenstructure) -> int:
    _pencil(e)
    return weyr_orbit_codim(e.rows, e.cols, e.right_min, e.left_min, (p for _, p in e.eigen))


def codim_orbit_segre_oracle(e: Eigenstructure) -> int:
    """Orbit codimension as the sum of the five Segre-based contributions.

    Jordan blocks, right blocks among themselves, left blocks among
    themselves, Jordan-versus-singular interaction, right-versus-left
    interaction.
    """
    _pencil(e)
    a, b = e.right_min, e.left_min
    jordan = sum((2 * i + 1) * q for _, p in e.eigen for i, q in enumerate(p))
    right = sum(x - y - 1 for x in a for y in a if x > y)
    left = sum(x - y - 1 for x in b for y in b if x > y)
    interaction = e.multiplicity_total * (len(a) + len(b))
    right_left = sum(x + y + 2 for x in a for y in b)
    return jordan + right + left + interaction + right_left


def codim_bundle_pencil(e: Eigenstructure) -> CodimReport:
    orbit = codim_orbit_pencil(e)
    k = len(e.eigen)
    return CodimReport(
        orbit_codim=orbit,
        bundle_codim=orbit - k,
        distinct_eigenvalue_count=k,
        convention=None,
        ambient_note=f"pencil space of dimension 2*{e.rows}*{e.cols} = {2 * e.rows * e.cols}",
    )


def codim_poly(e: Eigenstructure, convention: Convention | str = Convention.COMPANION) -> CodimReport:
    """Orbit and bundle codimension of a grade-``d`` polynomial structure.

    ``companion`` measures the companion pencil's orbit inside the full
    pencil space of size ``(m+(d-1)n) x dn``.  ``direct`` applies the Weyr
    formula to the polynomial's own lists with its own ``m`` and ``n``.  The
    two agree on regular structures and differ in general on singular ones;
    ``convention_divergence`` records whether they differ for ``e``.
    """
    convention = Convention(convention)
    try:
        validate(e)
    except ValidationError as exc:
        raise InvalidInput(str(exc)) from exc
    if e.grade < 1:
        raise InvalidInput("codimension needs grade >= 1")
    k = len(e.eigen)
    c = companion_structure(e)
    companion = weyr_orbit_codim(c.rows, c.cols, c.right_min, c.left_min, (p for _, p in c.eigen))
    direct = weyr_orbit_codim(e.rows, e.cols, e.right_min, e.left_min, (p for _, p in e.eigen))
    if convention is Convention.COMPANION:
        orbit = companion
        note = (
            f"companion pencil space of {c.rows}x{c.cols} pencils "
            f"(dimension {2 * c.rows * c.cols}); equals the codimension inside the "
            f"space of companion pencils"
        )
    else:
        orbit = direct
        note = f"Weyr formula applied to the {e.rows}x{e.cols} grade-{e.grade} lists directly"
    return CodimReport(orbit, orbit - k, k, convention, note, companion != direct)
