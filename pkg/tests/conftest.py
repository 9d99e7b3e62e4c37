from __future__ import annotations

from itertools import permutations

from stratakit.eigenstruct import EigenvalueKey, Eigenstructure, iter_bundle_keys

VALUE_POOL = ("0", "1", "2", "3", "4", "inf")


def labeled_structures(m: int, n: int, d: int, values=VALUE_POOL) -> list[Eigenstructure]:
    """Every valid structure of the given size whose eigenvalues come from ``values``.

    Bundle keys are enumerated and each one is labelled in all injective ways;
    duplicates (equal partitions swapped) are removed.
    """
    keys = [EigenvalueKey.parse(v) for v in values]
    out = set()
    for bk in iter_bundle_keys(m, n, d):
        parts = bk.eigen_multiset
        if len(parts) > len(keys):
            continue
        for labels in permutations(keys, len(parts)):
            out.add(Eigenstructure(m, n, d, bk.right_min, bk.left_min, list(zip(labels, parts))))
    return sorted(out, key=repr)


def zero_structure(m: int, n: int, d: int = 1) -> Eigenstructure:
    return Eigenstructure(m, n, d, [0] * n, [0] * m)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(f"criterion {number}: {RESULTS[number]}")
