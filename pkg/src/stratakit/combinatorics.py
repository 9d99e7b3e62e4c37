"""Small enumeration helpers: integer partitions, multisets, set partitions."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence, TypeVar

T = TypeVar("T")


@lru_cache(maxsize=None)
def partitions(n: int, max_parts: int | None = None, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All partitions of ``n`` as non-increasing tuples, in reverse lexicographic order.

    ``max_parts`` bounds the number of parts, ``max_part`` the largest part.
    """
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return ((),)
    if max_parts == 0:
        return ()
    out = []
    for first in range(max_part, 0, -1):
        rest_parts = None if max_parts is None else max_parts - 1
        for rest in partitions(n - first, rest_parts, first):
            out.append((first,) + rest)
    return tuple(out)


def padded_partitions(total: int, length: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of exactly ``length`` non-negative integers summing to ``total``."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for p in partitions(total, length):
        yield p + (0,) * (length - len(p))


def multisets_of_partitions(total: int, max_parts: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Multisets of non-empty partitions with sizes adding up to ``total``.

    Each partition has at most ``max_parts`` parts.  Multisets are yielded as
    tuples sorted in non-increasing lexicographic order.
    """
    pool = [p for size in range(total, 0, -1) for p in partitions(size, max_parts)]
    pool.sort(reverse=True)

    def rec(remaining: int, start: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if remaining == 0:
            yield ()
            return
        for i in range(start, len(pool)):
            p = pool[i]
            s = sum(p)
            if s <= remaining:
                for tail in rec(remaining - s, i):
                    yield (p,) + tail

    yield from rec(total, 0)


def set_partitions(items: Sequence[T]) -> Iterator[tuple[tuple[T, ...], ...]]:
    """Set partitions of ``items`` in restricted-growth-string order.

    The single-block partition comes first and the all-singletons one last;
    inside a partition, blocks are ordered by their first member.
    """
    n = len(items)
    if n == 0:
        yield ()
        return
    rgs = [0] * n

    def rec(i: int, top: int) -> Iterator[tuple[tuple[T, ...], ...]]:
        if i == n:
            blocks: list[list[T]] = [[] for _ in range(top + 1)]
            for item, b in zip(items, rgs):
                blocks[b].append(item)
            yield tuple(tuple(b) for b in blocks)
            return
        for b in range(top + 2):
            rgs[i] = b
            yield from rec(i + 1, max(top, b))

    rgs[0] = 0
    yield from rec(1, 0)


def bell(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]
