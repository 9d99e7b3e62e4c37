"""Univariate polynomials and polynomial matrices with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from ..errors import InputDegreeExceedsGrade, InvalidInput

Number = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


class RationalPoly:
    """Polynomial in ``lambda`` with ``Fraction`` coefficients, lowest degree first.

    Trailing zero coefficients are trimmed, so the zero polynomial has an
    empty coefficient tuple and degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        c = [_frac(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def const(cls, a: Number) -> "RationalPoly":
        return cls([a])

    @classmethod
    def from_roots(cls, roots: Iterable[Number], lead: Number = 1) -> "RationalPoly":
        p = cls.const(lead)
        for r in roots:
            p = p * cls([-_frac(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RationalPoly.const(other)
        return isinstance(other, RationalPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _coerce(self, other) -> "RationalPoly":
        if isinstance(other, RationalPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return RationalPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "RationalPoly":
        return RationalPoly([-x for x in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return RationalPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RationalPoly":
        out = RationalPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other: "RationalPoly") -> tuple["RationalPoly", "RationalPoly"]:
        other = self._coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.lead
        quot = [Fraction(0)] * max(0, len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lead
            if c:
                quot[i - dq] = c
                for j, y in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * y
        return RationalPoly(quot), RationalPoly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "RationalPoly":
        if not self.coeffs:
            return self
        return RationalPoly([x / self.lead for x in self.coeffs])

    def divides(self, other: "RationalPoly") -> bool:
        if not self.coeffs:
            return not other.coeffs
        return (other % self).is_zero()

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reversal(self, grade: int) -> "RationalPoly":
        """``lambda**grade * p(1/lambda)`` for ``grade >= degree``."""
        if self.degree > grade:
            raise InputDegreeExceedsGrade(f"degree {self.degree} exceeds grade {grade}")
        c = list(self.coeffs) + [Fraction(0)] * (grade + 1 - len(self.coeffs))
        return RationalPoly(reversed(c))

    def multiplicity(self, factor: "RationalPoly") -> int:
        """Largest ``k`` with ``factor**k`` dividing ``self`` (``self`` nonzero)."""
        if self.is_zero():
            raise ValueError("multiplicity in the zero polynomial is unbounded")
        k, p = 0, self
        while True:
            q, r = divmod(p, factor)
            if r:
                return k
            k, p = k + 1, q

    def to_strings(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    def __repr__(self) -> str:
        return f"RationalPoly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = str(abs(c)) + ("*" + mono if mono else "")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


LAMBDA = RationalPoly([0, 1])


def poly_gcd(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    """Monic gcd (zero if both arguments are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


def as_poly(x) -> RationalPoly:
    if isinstance(x, RationalPoly):
        return x
    if isinstance(x, (int, Fraction, str)):
        return RationalPoly([x])
    return RationalPoly(x)


@dataclass(frozen=True)
class RationalPolyMatrix:
    """``rows x cols`` matrix of :class:`RationalPoly` entries with a declared grade."""

    rows: int
    cols: int
    grade: int
    entries: tuple[tuple[RationalPoly, ...], ...]

    def __post_init__(self):
        ents = tuple(tuple(as_poly(x) for x in row) for row in self.entries)
        if len(ents) != self.rows or any(len(row) != self.cols for row in ents):
            raise InvalidInput(f"entries do not form a {self.rows}x{self.cols} array")
        if self.grade < 0:
            raise InvalidInput("grade must be non-negative")
        worst = max((x.degree for row in ents for x in row), default=-1)
        if worst > self.grade:
            raise InputDegreeExceedsGrade(f"an entry has degree {worst} > grade {self.grade}")
        object.__setattr__(self, "entries", ents)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], grade: int | None = None) -> "RationalPolyMatrix":
        ents = [[as_poly(x) for x in row] for row in rows]
        m = len(ents)
        n = len(ents[0]) if ents else 0
        if grade is None:
            grade = max(1, max((x.degree for row in ents for x in row), default=0))
        return cls(m, n, grade, ents)

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[Sequence[Sequence[Number]]]) -> "RationalPolyMatrix":
        """Build ``A_0 + lambda A_1 + ... + lambda^d A_d`` from the list ``[A_0, ..., A_d]``."""
        d = len(coeffs) - 1
        m, n = len(coeffs[0]), len(coeffs[0][0])
        ents = [[RationalPoly([coeffs[k][i][j] for k in range(d + 1)]) for j in range(n)] for i in range(m)]
        return cls(m, n, d, ents)

    def __getitem__(self, ij: tuple[int, int]) -> RationalPoly:
        i, j = ij
        return self.entries[i][j]

    def coefficient(self, k: int) -> list[list[Fraction]]:
        """The constant matrix ``A_k``."""
        return [[x.coeffs[k] if k < len(x.coeffs) else Fraction(0) for x in row] for row in self.entries]

    def coefficients(self) -> list[list[list[Fraction]]]:
        return [self.coefficient(k) for k in range(self.grade + 1)]

    def transpose(self) -> "RationalPolyMatrix":
        ents = [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return RationalPolyMatrix(self.cols, self.rows, self.grade, ents)

    def reversal(self) -> "RationalPolyMatrix":
        ents = [[x.reversal(self.grade) for x in row] for row in self.entries]
        return RationalPolyMatrix(self.rows, self.cols, self.grade, ents)

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "grade": self.grade,
            "entries": [[x.to_strings() for x in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "RationalPolyMatrix":
        try:
            ents = [[RationalPoly(_frac(c) for c in entry) for entry in row] for row in data["entries"]]
            return cls(int(data["rows"]), int(data["cols"]), int(data["grade"]), ents)
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, InputDegreeExceedsGrade):
                raise
            raise InvalidInput(f"malformed polynomial matrix record: {exc}") from exc

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(x) for x in row) for row in self.entries) + "]"
