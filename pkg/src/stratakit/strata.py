"""Enumeration of all bundles of a given size and grade, and their closure order."""

from __future__ import annotations

from dataclasses import dataclass, field

from .closure import bundle_closure_contains_pencil, bundle_closure_contains_poly, bundle_closure_decomposition
from .codim import CodimReport, Convention, codim_poly
from .eigenstruct import BundleKey, companion_structure, iter_bundle_keys
from .errors import BudgetExceeded

MAX_INDEX_BUDGET = 14
MAX_KEYS = 20000


def enumerate_bundles(m: int, n: int, d: int, max_keys: int = MAX_KEYS) -> list[BundleKey]:
    """Every bundle of ``m x n`` matrix polynomials of grade ``d``, canonically sorted.

    Refuses inputs with ``d * min(m, n) > 14`` or more than ``max_keys`` keys.
    """
    if m < 1 or n < 1 or d < 1:
        raise ValueError("m, n and d must be positive")
    if d * min(m, n) > MAX_INDEX_BUDGET:
        raise BudgetExceeded(f"d*min(m,n) = {d * min(m, n)} exceeds {MAX_INDEX_BUDGET}")
    keys = []
    for key in iter_bundle_keys(m, n, d):
        keys.append(key)
        if len(keys) > max_keys:
            raise BudgetExceeded(f"more than {max_keys} bundles for ({m},{n},{d})")
    keys.sort(key=BundleKey.sort_key)
    return keys


@dataclass(frozen=True)
class StrataNode:
    key: BundleKey
    direct: CodimReport
    companion: CodimReport

    def label(self) -> str:
        return f"{self.key.label()}; codim={self.direct.bundle_codim}/{self.companion.bundle_codim}"


@dataclass
class StrataGraph:
    """Bundles with their closure order.

    ``full_order`` holds every strict inclusion ``(upper, lower)`` as node
    indices; ``edges`` is its transitive reduction (the Hasse diagram).
    """

    m: int
    n: int
    d: int
    nodes: list[StrataNode]
    full_order: list[tuple[int, int]]
    edges: list[tuple[int, int]]

    @property
    def name(self) -> str:
        return f"strata_{self.m}x{self.n}_{self.d}"

    def index(self, key: BundleKey) -> int:
        return [node.key for node in self.nodes].index(key)

    def below(self, i: int) -> set[int]:
        return {lo for up, lo in self.full_order if up == i}

    def maximal(self) -> list[int]:
        lower = {lo for _, lo in self.full_order}
        return [i for i in range(len(self.nodes)) if i not in lower]

    def minimal(self) -> list[int]:
        upper = {up for up, _ in self.full_order}
        return [i for i in range(len(self.nodes)) if i not in upper]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "nodes": [
                {
                    "id": i,
                    "label": node.label(),
                    "key": node.key.to_json(),
                    "codim_direct": node.direct.to_json(),
                    "codim_companion": node.companion.to_json(),
                }
                for i, node in enumerate(self.nodes)
            ],
            "edges": [list(e) for e in self.edges],
            "full_order": [list(e) for e in self.full_order],
        }

    def to_dot(self) -> str:
        lines = [f"digraph {self.name} {{"]
        for i, node in enumerate(self.nodes):
            lines.append(f'  n{i} [label="{node.label()}"];')
        for up, lo in self.edges:
            lines.append(f"  n{up} -> n{lo};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def transitive_reduction(order: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Covering pairs of a strict partial order given as its full relation."""
    rel = set(order)
    below: dict[int, set[int]] = {}
    for up, lo in rel:
        below.setdefault(up, set()).add(lo)
    return sorted(
        (up, lo) for up, lo in rel if not any(lo in below.get(mid, ()) for mid in below[up] if mid != lo)
    )


def build_hasse(m: int, n: int, d: int, max_keys: int = MAX_KEYS) -> StrataGraph:
    keys = enumerate_bundles(m, n, d, max_keys)
    nodes = [
        StrataNode(k, codim_poly(k.representative(), Convention.DIRECT), codim_poly(k.representative()))
        for k in keys
    ]
    reps = [k.representative() for k in keys]
    order = [
        (i, j)
        for i in range(len(keys))
        for j in range(len(keys))
        if i != j and bundle_closure_contains_poly(reps[i], reps[j])
    ]
    return StrataGraph(m, n, d, nodes, order, transitive_reduction(order))


@dataclass
class VerificationReport:
    m: int
    n: int
    d: int
    node_count: int
    edge_count: int
    violations: list[str] = field(default_factory=list)
    informational: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        if self.passed:
            return f"{self.node_count} bundles, all strictness checks pass"
        return f"{self.node_count} bundles, {len(self.violations)} violations"

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "d": self.d,
            "nodes": self.node_count,
            "covering_edges": self.edge_count,
            "passed": self.passed,
            "violations": self.violations,
            "informational": self.informational,
            "summary": self.summary(),
        }


def _companion_key(k: BundleKey) -> BundleKey:
    c = companion_structure(k.representative())
    return BundleKey(c.rows, c.cols, 1, c.rank, c.right_min, c.left_min, k.eigen_multiset)


def _companion_level_down_set(
    node: BundleKey, from_companion: dict[BundleKey, BundleKey], pencil_keys: list[BundleKey]
) -> set[BundleKey]:
    """Bundles below ``node`` found on the companion-pencil side.

    Pencil bundles in the closure of the companion bundle are kept when they
    are companion structures of some polynomial bundle, then mapped back.
    """
    comp = companion_structure(node.representative())
    return {
        from_companion[pk]
        for pk in pencil_keys
        if pk in from_companion and bundle_closure_contains_pencil(comp, pk.representative())
    }


def verify_stratification(
    m: int, n: int, d: int, companion_check: bool = True, max_keys: int = MAX_KEYS
) -> VerificationReport:
    """Check the closure order of all ``(m, n, d)`` bundles for strictness and consistency.

    Checked: the inclusion relation is a strict partial order; every strict
    inclusion raises the companion-convention bundle codimension; each node's
    closure decomposition is exactly the node plus its down-set; and, for
    ``d > 1`` with ``companion_check``, the same down-set is recovered from
    the pencil bundles of the companion size.  Direct-convention codimension
    drops are reported as informational only.
    """
    g = build_hasse(m, n, d, max_keys)
    rep = VerificationReport(m, n, d, len(g.nodes), len(g.edges))
    N = len(g.nodes)
    rel = set(g.full_order)
    keys = [node.key for node in g.nodes]

    for i, j in rel:
        if (j, i) in rel:
            rep.violations.append(f"antisymmetry: {keys[i].label()} <-> {keys[j].label()}")
    for i, j in rel:
        for k in range(N):
            if (j, k) in rel and k != i and (i, k) not in rel:
                rep.violations.append(f"transitivity: {i} > {j} > {k} but not {i} > {k}")

    for up, lo in sorted(rel):
        cu, cl = g.nodes[up].companion.bundle_codim, g.nodes[lo].companion.bundle_codim
        if not cl > cu:
            rep.violations.append(
                f"codimension not increasing: {keys[up].label()} ({cu}) > {keys[lo].label()} ({cl})"
            )
        du, dl = g.nodes[up].direct.bundle_codim, g.nodes[lo].direct.bundle_codim
        if not dl > du:
            rep.informational.append(
                f"direct codimension not increasing: {keys[up].label()} ({du}) > {keys[lo].label()} ({dl})"
            )

    for i, key in enumerate(keys):
        decomposition = bundle_closure_decomposition(key.representative())
        expected = {key} | {keys[j] for j in g.below(i)}
        if decomposition[0] != key or set(decomposition) != expected or len(decomposition) != len(expected):
            rep.violations.append(f"decomposition mismatch at {key.label()}")

    if companion_check and d > 1:
        c = companion_structure(keys[0].representative())
        try:
            pencil_keys = enumerate_bundles(c.rows, c.cols, 1, max_keys)
        except BudgetExceeded as exc:
            rep.informational.append(f"companion-level check skipped: {exc}")
        else:
            from_companion = {_companion_key(k): k for k in keys}
            for i, key in enumerate(keys):
                got = _companion_level_down_set(key, from_companion, pencil_keys)
                expected = {key} | {keys[j] for j in g.below(i)}
                if got != expected:
                    rep.violations.append(f"companion-level decomposition mismatch at {key.label()}")
    return rep
