"""The nineteen 2x2 quadratic bundle representatives and the degeneration sequences."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from ..eigenstruct import BundleKey, EigenvalueKey, Eigenstructure, Partition, bundle_key, conjugate
from ..eigenstruct import weyr_of_min_indices
from ..errors import InvalidInput
from .poly import LAMBDA, RationalPoly, RationalPolyMatrix

DEFAULT_VALUES = (Fraction(0), Fraction(1), Fraction(2), Fraction(3))

_0 = RationalPoly()
_1 = RationalPoly.const(1)


def _x(mu) -> RationalPoly:
    return LAMBDA - mu


@dataclass(frozen=True)
class Fixture:
    """A named 2x2 grade-2 representative.

    ``segres`` lists the partial multiplicities of ``mu_1, mu_2, ...`` in
    order; ``build`` turns concrete values for them into the matrix entries.
    """

    name: str
    right_min: tuple[int, ...]
    left_min: tuple[int, ...]
    segres: tuple[Partition, ...]
    codim: int
    build: Callable[[Sequence[Fraction]], list[list[RationalPoly]]]

    @property
    def eigen_count(self) -> int:
        return len(self.segres)

    def default_values(self) -> tuple[Fraction, ...]:
        return DEFAULT_VALUES[: self.eigen_count]

    def _values(self, values: Sequence | None) -> tuple[Fraction, ...]:
        vals = self.default_values() if values is None else tuple(Fraction(v) for v in values)
        if len(vals) != self.eigen_count or len(set(vals)) != len(vals):
            raise InvalidInput(f"{self.name} needs {self.eigen_count} distinct values")
        return vals

    def matrix(self, values: Sequence | None = None) -> RationalPolyMatrix:
        return RationalPolyMatrix(2, 2, 2, self.build(self._values(values)))

    def structure(self, values: Sequence | None = None) -> Eigenstructure:
        vals = self._values(values)
        eigen = [(EigenvalueKey.rational(v), p) for v, p in zip(vals, self.segres)]
        return Eigenstructure(2, 2, 2, self.right_min, self.left_min, eigen)

    def weyr_row(self) -> tuple[Partition, Partition, tuple[Partition, ...]]:
        """``(r, l, W)`` with the ``W`` lists in the order of ``mu_1, mu_2, ...``."""
        return (
            weyr_of_min_indices(self.right_min),
            weyr_of_min_indices(self.left_min),
            tuple(conjugate(p) for p in self.segres),
        )

    def bundle_key(self) -> BundleKey:
        return bundle_key(self.structure())


def _diag(a: RationalPoly, b: RationalPoly):
    return [[a, _0], [_0, b]]


_TABLE = [
    ("P1", (), (), ((1,), (1,), (1,), (1,)), 0,
     lambda v: _diag(_x(v[0]) * _x(v[1]), _x(v[2]) * _x(v[3]))),
    ("P2", (), (), ((2,), (1,), (1,)), 1,
     lambda v: _diag(_x(v[0]) ** 2, _x(v[1]) * _x(v[2]))),
    ("P3", (), (), ((3,), (1,)), 2,
     lambda v: [[_x(v[0]) ** 2, _1], [_0, _x(v[0]) * _x(v[1])]]),
    ("P4", (), (), ((2,), (2,)), 2,
     lambda v: _diag(_x(v[0]) ** 2, _x(v[1]) ** 2)),
    ("P5", (0,), (2,), (), 2,
     lambda v: [[_1, _0], [LAMBDA ** 2, _0]]),
    ("P6", (1,), (1,), (), 2,
     lambda v: [[_1, LAMBDA], [LAMBDA, LAMBDA ** 2]]),
    ("P7", (2,), (0,), (), 2,
     lambda v: [[_1, LAMBDA ** 2], [_0, _0]]),
    ("P8", (), (), ((1, 1), (1,), (1,)), 3,
     lambda v: _diag(_x(v[0]) * _x(v[1]), _x(v[0]) * _x(v[2]))),
    ("P9", (), (), ((4,),), 3,
     lambda v: [[_x(v[0]) ** 2, _1], [_0, _x(v[0]) ** 2]]),
    ("P10", (0,), (1,), ((1,),), 3,
     lambda v: [[_x(v[0]), _0], [_x(v[0]) ** 2, _0]]),
    ("P11", (1,), (0,), ((1,),), 3,
     lambda v: [[_x(v[0]), _x(v[0]) ** 2], [_0, _0]]),
    ("P12", (0,), (0,), ((1,), (1,)), 4,
     lambda v: _diag(_x(v[0]) * _x(v[1]), _0)),
    ("P13", (), (), ((2, 1), (1,)), 4,
     lambda v: _diag(_x(v[0]) ** 2, _x(v[0]) * _x(v[1]))),
    ("P14", (), (), ((2,), (1, 1)), 4,
     lambda v: [[_x(v[0]) * _x(v[1]), _x(v[1])], [_0, _x(v[0]) * _x(v[1])]]),
    ("P15", (), (), ((3, 1),), 5,
     lambda v: [[_x(v[0]) ** 2, _x(v[0])], [_0, _x(v[0]) ** 2]]),
    ("P16", (0,), (0,), ((2,),), 5,
     lambda v: _diag(_x(v[0]) ** 2, _0)),
    ("P17", (), (), ((1, 1), (1, 1)), 6,
     lambda v: _diag(_x(v[0]) * _x(v[1]), _x(v[0]) * _x(v[1]))),
    ("P18", (), (), ((2, 2),), 7,
     lambda v: _diag(_x(v[0]) ** 2, _x(v[0]) ** 2)),
    ("P19", (0, 0), (0, 0), (), 8,
     lambda v: _diag(_0, _0)),
]

FIXTURES: dict[str, Fixture] = {row[0]: Fixture(*row) for row in _TABLE}


def get_fixture(name: str) -> Fixture:
    key = name.strip().upper()
    if key not in FIXTURES:
        raise InvalidInput(f"unknown fixture {name!r}; expected one of P1..P19")
    return FIXTURES[key]


def template_witness(e: Eigenstructure, vals: Mapping[EigenvalueKey, EigenvalueKey]) -> RationalPolyMatrix | None:
    """Instantiate the table template of ``e``'s bundle at the finite values ``vals``."""
    key = bundle_key(e)
    for fx in FIXTURES.values():
        if fx.bundle_key() != key:
            continue
        unused = list(e.eigen)
        chosen = []
        for p in fx.segres:
            k = next(k for k, q in unused if q == p)
            unused = [(k2, q) for k2, q in unused if k2 != k]
            chosen.append(vals[k].value)
        return fx.matrix(chosen)
    return None


def _frac_n(n: int | None) -> Fraction:
    # n=None stands for the limit n -> infinity
    return Fraction(0) if n is None else Fraction(1, n)


def q_sequence(n: int | None, mu1=0) -> RationalPolyMatrix:
    """``[[(x-mu1)^2, 1], [0, (x-mu1)(x-mu1+1/n)]]``; converges to the P9 shape."""
    t = _frac_n(n)
    return RationalPolyMatrix(2, 2, 2, [[_x(mu1) ** 2, _1], [_0, _x(mu1) * _x(Fraction(mu1) - t)]])


def r_sequence(n: int | None, mu1=0, mu3=2) -> RationalPolyMatrix:
    """``[[(x-mu1)^2, 1], [0, (x-mu1+1/n)(x-mu3)]]``; converges to the P3 shape."""
    t = _frac_n(n)
    return RationalPolyMatrix(2, 2, 2, [[_x(mu1) ** 2, _1], [_0, _x(Fraction(mu1) - t) * _x(mu3)]])


def s_sequence(n: int | None, mu1=0, mu2=1, mu3=2) -> RationalPolyMatrix:
    """``[[(x-mu1)(x-mu2), 1/n], [0, (x-mu1)(x-mu3)]]``; converges to the P8 shape."""
    t = _frac_n(n)
    return RationalPolyMatrix(
        2, 2, 2, [[_x(mu1) * _x(mu2), RationalPoly.const(t)], [_0, _x(mu1) * _x(mu3)]]
    )
