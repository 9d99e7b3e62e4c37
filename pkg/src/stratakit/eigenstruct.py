"""Eigenstructures of matrix pencils and matrix polynomials.

An eigenstructure is stored in Segre form: the right and left minimal
indices as non-increasing tuples, and one partition of partial
multiplicities per eigenvalue.  Weyr characteristics are derived on demand
with :func:`conjugate` and :func:`weyr_of_min_indices`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import total_ordering
from typing import Any, Iterable, Mapping

from .combinatorics import multisets_of_partitions, padded_partitions
from .errors import (
    GeometricMultiplicityViolation,
    IndexSumViolation,
    InvalidInput,
    InvalidMap,
    SizeMismatch,
)

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    p = tuple(sorted((int(x) for x in parts), reverse=True))
    if p and p[-1] < 1:
        raise ValueError(f"partition parts must be positive: {p}")
    return p


def conjugate(p: Iterable[int]) -> Partition:
    """Conjugate partition: entry ``i`` counts the parts that are ``>= i+1``."""
    p = tuple(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= i) for i in range(1, max(p) + 1))


def weyr_of_min_indices(idx: Iterable[int]) -> Partition:
    """Weyr characteristic ``(r_0, r_1, ...)`` of a list of minimal indices.

    ``r_i`` is the number of indices ``>= i``; so ``r_0`` is the length of the
    list.  Trailing zeros are dropped.

    >>> weyr_of_min_indices((4, 3, 3, 3, 1))
    (5, 5, 4, 4, 1)
    """
    idx = tuple(idx)
    if not idx:
        return ()
    return tuple(sum(1 for x in idx if x >= i) for i in range(max(idx) + 1))


def weyr_union(*weyrs: Iterable[int]) -> Partition:
    """Multiset union of Weyr characteristics, sorted non-increasing."""
    return tuple(sorted((x for w in weyrs for x in w), reverse=True))


def _natural_key(text: str) -> tuple:
    return tuple(int(t) if t.isdigit() else t for t in re.split(r"(\d+)", text))


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


@total_ordering
@dataclass(frozen=True)
class EigenvalueKey:
    """A point of the extended complex line, or a symbolic stand-in for one.

    ``kind`` is ``"rational"``, ``"infinity"`` or ``"symbol"``.  Rational
    values are stored as :class:`fractions.Fraction` (hence in lowest terms).
    """

    kind: str
    value: Fraction | str | None = None

    def __post_init__(self):
        if self.kind == "rational":
            object.__setattr__(self, "value", Fraction(self.value))
        elif self.kind == "symbol":
            if not isinstance(self.value, str) or not self.value:
                raise ValueError("symbol keys need a non-empty name")
        elif self.kind == "infinity":
            object.__setattr__(self, "value", None)
        else:
            raise ValueError(f"unknown eigenvalue kind {self.kind!r}")

    @classmethod
    def rational(cls, num: int | Fraction | str, den: int = 1) -> "EigenvalueKey":
        return cls("rational", Fraction(num) / den)

    @classmethod
    def symbol(cls, name: str) -> "EigenvalueKey":
        return cls("symbol", name)

    @classmethod
    def parse(cls, text: "str | int | Fraction | EigenvalueKey") -> "EigenvalueKey":
        """Parse ``"inf"``, ``"p/q"``, ``"p"`` or ``"@name"``."""
        if isinstance(text, EigenvalueKey):
            return text
        if isinstance(text, (int, Fraction)):
            return cls.rational(text)
        s = str(text).strip()
        if s.lower() in ("inf", "infinity", "oo"):
            return INFINITY
        if s.startswith("@"):
            return cls.symbol(s[1:])
        m = _RATIONAL_RE.match(s)
        if not m:
            raise ValueError(f"cannot parse eigenvalue {text!r}")
        return cls.rational(int(m.group(1)), int(m.group(2) or 1))

    @property
    def is_symbol(self) -> bool:
        return self.kind == "symbol"

    @property
    def is_infinite(self) -> bool:
        return self.kind == "infinity"

    def sort_key(self) -> tuple:
        if self.kind == "rational":
            return (0, self.value, ())
        if self.kind == "infinity":
            return (1, 0, ())
        return (2, 0, _natural_key(self.value))

    def __lt__(self, other: "EigenvalueKey") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if self.kind == "rational":
            return f"{self.value.numerator}/{self.value.denominator}"
        if self.kind == "infinity":
            return "inf"
        return "@" + self.value

    def __repr__(self) -> str:
        return f"EigenvalueKey({str(self)!r})"


INFINITY = EigenvalueKey("infinity")


@dataclass(frozen=True)
class Eigenstructure:
    """Size, grade, minimal indices and partial multiplicities of a matrix polynomial.

    ``eigen`` accepts any mapping from eigenvalue (key or parseable string) to
    an iterable of partial multiplicities; it is normalised to a tuple of
    ``(key, partition)`` pairs sorted by key, with empty partitions dropped.
    """

    rows: int
    cols: int
    grade: int
    right_min: tuple[int, ...] = ()
    left_min: tuple[int, ...] = ()
    eigen: Any = field(default=())

    def __post_init__(self):
        for name in ("right_min", "left_min"):
            vals = tuple(sorted((int(x) for x in getattr(self, name)), reverse=True))
            if vals and vals[-1] < 0:
                raise ValueError(f"{name} must be non-negative: {vals}")
            object.__setattr__(self, name, vals)
        items = self.eigen.items() if isinstance(self.eigen, Mapping) else self.eigen
        pairs = {}
        for key, parts in items:
            key = EigenvalueKey.parse(key)
            if key in pairs:
                raise ValueError(f"duplicate eigenvalue {key}")
            p = as_partition(parts)
            if p:
                pairs[key] = p
        object.__setattr__(self, "eigen", tuple(sorted(pairs.items())))

    @property
    def rank(self) -> int:
        return self.cols - len(self.right_min)

    @property
    def spectrum(self) -> tuple[EigenvalueKey, ...]:
        return tuple(k for k, _ in self.eigen)

    @property
    def eigen_map(self) -> dict[EigenvalueKey, Partition]:
        return dict(self.eigen)

    def partition(self, key: EigenvalueKey) -> Partition:
        return self.eigen_map.get(key, ())

    def weyr(self, key: EigenvalueKey) -> Partition:
        return conjugate(self.partition(key))

    @property
    def right_weyr(self) -> Partition:
        return weyr_of_min_indices(self.right_min)

    @property
    def left_weyr(self) -> Partition:
        return weyr_of_min_indices(self.left_min)

    @property
    def multiplicity_total(self) -> int:
        return sum(sum(p) for _, p in self.eigen)

    @property
    def is_regular(self) -> bool:
        return not self.right_min and not self.left_min

    def relabel(self, mapping: Mapping[EigenvalueKey, EigenvalueKey]) -> "Eigenstructure":
        """Rename eigenvalues; keys absent from ``mapping`` are kept."""
        return replace(self, eigen=[(mapping.get(k, k), p) for k, p in self.eigen])

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "grade": self.grade,
            "right_minimal_indices": list(self.right_min),
            "left_minimal_indices": list(self.left_min),
            "eigenvalues": [{"value": str(k), "segre": list(p)} for k, p in self.eigen],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Eigenstructure":
        try:
            return cls(
                rows=int(data["rows"]),
                cols=int(data["cols"]),
                grade=int(data["grade"]),
                right_min=data.get("right_minimal_indices", ()),
                left_min=data.get("left_minimal_indices", ()),
                eigen=[(e["value"], e["segre"]) for e in data.get("eigenvalues", ())],
            )
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"malformed eigenstructure record: {exc}") from exc


def validate(e: Eigenstructure) -> Eigenstructure:
    """Check realizability of ``e``; return it unchanged or raise a ValidationError.

    The rules: rank read off both sides agrees and lies in ``[0, min(m, n)]``;
    partial multiplicities plus minimal indices add up to ``grade * rank``; no
    eigenvalue has more partial multiplicities than the rank.
    """
    if e.rows < 1 or e.cols < 1 or e.grade < 0:
        raise SizeMismatch(f"bad size/grade {e.rows}x{e.cols}, grade {e.grade}")
    r = e.rank
    if e.rows - len(e.left_min) != r:
        raise SizeMismatch(
            f"rank from right side is {r} but rows - #left indices = {e.rows - len(e.left_min)}"
        )
    if not 0 <= r <= min(e.rows, e.cols):
        raise SizeMismatch(f"rank {r} outside [0, {min(e.rows, e.cols)}]")
    budget = e.multiplicity_total + sum(e.right_min) + sum(e.left_min)
    if budget != e.grade * r:
        raise IndexSumViolation(f"index sum {budget} != grade*rank = {e.grade * r}")
    for key, p in e.eigen:
        if len(p) > r:
            raise GeometricMultiplicityViolation(
                f"eigenvalue {key} has {len(p)} partial multiplicities but rank is {r}"
            )
    return e


def is_valid(e: Eigenstructure) -> bool:
    try:
        validate(e)
    except (SizeMismatch, IndexSumViolation, GeometricMultiplicityViolation):
        return False
    return True


def _checked(e: Eigenstructure) -> Eigenstructure:
    try:
        return validate(e)
    except (SizeMismatch, IndexSumViolation, GeometricMultiplicityViolation) as exc:
        raise InvalidInput(str(exc)) from exc


def companion_structure(e: Eigenstructure) -> Eigenstructure:
    """Eigenstructure of the first Frobenius companion pencil of a grade-``d`` polynomial.

    Partial multiplicities and left minimal indices carry over; every right
    minimal index grows by ``d - 1``.
    """
    _checked(e)
    d = e.grade
    if d < 1:
        raise InvalidInput("companion structure needs grade >= 1")
    return Eigenstructure(
        rows=e.rows + (d - 1) * e.cols,
        cols=d * e.cols,
        grade=1,
        right_min=[x + d - 1 for x in e.right_min],
        left_min=e.left_min,
        eigen=e.eigen,
    )


@dataclass(frozen=True)
class CoalescenceMap:
    """Merges eigenvalues: every block of source keys goes to one target key."""

    blocks: tuple[tuple[EigenvalueKey, ...], ...]
    targets: tuple[EigenvalueKey, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(sorted(b)) for b in self.blocks))
        object.__setattr__(self, "targets", tuple(self.targets))

    @classmethod
    def identity(cls, e: Eigenstructure) -> "CoalescenceMap":
        return cls(tuple((k,) for k in e.spectrum), e.spectrum)

    def check(self, e: Eigenstructure) -> None:
        if len(self.blocks) != len(self.targets):
            raise InvalidMap("one target is needed per block")
        seen = [k for b in self.blocks for k in b]
        if any(not b for b in self.blocks):
            raise InvalidMap("empty block")
        if len(seen) != len(set(seen)) or set(seen) != set(e.spectrum):
            raise InvalidMap("blocks must partition the eigenvalues of the source")
        if len(set(self.targets)) != len(self.targets):
            raise InvalidMap("targets must be pairwise distinct")

    def image(self, key: EigenvalueKey) -> EigenvalueKey:
        for b, t in zip(self.blocks, self.targets):
            if key in b:
                return t
        raise KeyError(key)

    def to_json(self) -> dict:
        return {
            "blocks": [[str(k) for k in b] for b in self.blocks],
            "targets": [str(t) for t in self.targets],
        }


def coalesce(e: Eigenstructure, c: CoalescenceMap) -> Eigenstructure:
    """Apply ``c``: each target receives the union of its block's Weyr characteristics."""
    _checked(e)
    c.check(e)
    eigen = {}
    for block, target in zip(c.blocks, c.targets):
        w = weyr_union(*(e.weyr(k) for k in block))
        eigen[target] = conjugate(w)
    return replace(e, eigen=eigen)


@dataclass(frozen=True)
class BundleKey:
    """Eigenstructure with eigenvalue labels erased; identifies a bundle."""

    rows: int
    cols: int
    grade: int
    rank: int
    right_min: tuple[int, ...]
    left_min: tuple[int, ...]
    eigen_multiset: tuple[Partition, ...]

    def sort_key(self) -> tuple:
        return (-self.rank, self.right_min, self.left_min, self.eigen_multiset)

    @property
    def is_regular(self) -> bool:
        return not self.right_min and not self.left_min

    def representative(self, prefix: str = "e") -> Eigenstructure:
        """Concrete structure with symbolic eigenvalues ``@e1, @e2, ...`` in multiset order."""
        return Eigenstructure(
            self.rows,
            self.cols,
            self.grade,
            self.right_min,
            self.left_min,
            [(EigenvalueKey.symbol(f"{prefix}{i + 1}"), p) for i, p in enumerate(self.eigen_multiset)],
        )

    def weyr_triple(self) -> tuple[Partition, Partition, tuple[Partition, ...]]:
        """``(r, l, W)`` as printed in strata tables (eigen Weyr lists sorted non-increasing)."""
        ws = tuple(sorted((conjugate(p) for p in self.eigen_multiset), reverse=True))
        return weyr_of_min_indices(self.right_min), weyr_of_min_indices(self.left_min), ws

    def label(self) -> str:
        r, l, ws = self.weyr_triple()
        w = ";".join(fmt_list(x) for x in ws) if ws else "(0)"
        return f"r={fmt_list(r)}; l={fmt_list(l)}; W={w}"

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "grade": self.grade,
            "rank": self.rank,
            "right_minimal_indices": list(self.right_min),
            "left_minimal_indices": list(self.left_min),
            "segre_multiset": [list(p) for p in self.eigen_multiset],
        }


def fmt_list(x: Iterable[int]) -> str:
    x = tuple(x)
    return "(" + ",".join(str(v) for v in x) + ")" if x else "(0)"


def bundle_key(e: Eigenstructure) -> BundleKey:
    _checked(e)
    multiset = tuple(sorted((p for _, p in e.eigen), reverse=True))
    return BundleKey(e.rows, e.cols, e.grade, e.rank, e.right_min, e.left_min, multiset)


def iter_bundle_keys(m: int, n: int, d: int):
    """Every realizable bundle key of ``m x n`` polynomials of grade ``d`` (unsorted)."""
    for r in range(min(m, n) + 1):
        p, q = n - r, m - r
        total = d * r
        for s_right in range(total + 1):
            if p == 0 and s_right:
                break
            for right in padded_partitions(s_right, p):
                for s_left in range(total - s_right + 1):
                    if q == 0 and s_left:
                        break
                    for left in padded_partitions(s_left, q):
                        rest = total - s_right - s_left
                        if rest and r == 0:
                            continue
                        for eig in multisets_of_partitions(rest, r):
                            yield BundleKey(m, n, d, r, right, left, eig)
