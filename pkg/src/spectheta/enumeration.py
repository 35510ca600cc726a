"""Isomorph-free generation of graphs by edge count, and extremal search.

Generation uses canonical augmentation: level-k graphs (k edges, minimum
degree one) grow by one edge, either between existing vertices, to one new
vertex, or as a fresh disjoint edge.  A child survives only when deleting
its canonical edge (dropping vertices this isolates) regenerates the
parent it came from, which makes every isomorphism class reachable from
exactly one parent class; children of a single parent are deduplicated by
certificate because equivalent augmentations of one parent pass the same
test.  Memory stays bounded by one parent's child list per level.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cmp_to_key

from .canon import canonical_edge, canonical_form, canonical_label, canonical_order
from .graph6 import to_graph6
from .graphs import MAX_N, Graph, complete
from .spectral import COMPARISON_TOL, spectral_radius
from .theta import ThetaSpec, contains_theta

DEFAULT_EDGE_BUDGET = 12
ORDER_BUDGET = 8


class BudgetError(Exception):
    """Requested enumeration exceeds the configured guard."""


def _delete_with_cleanup(g: Graph, u: int, v: int) -> Graph:
    h = g.without_edge(u, v)
    keep = [w for w in range(h.n) if h.adj[w]]
    if len(keep) == h.n:
        return h
    return h.induced(keep)


def _augmentations(g: Graph):
    n = g.n
    for u in range(n):
        row = g.adj[u]
        for v in range(u + 1, n):
            if not (row >> v) & 1:
                yield g.with_edge(u, v)
    if n + 1 <= MAX_N:
        base = list(g.edges())
        for u in range(n):
            yield Graph(n + 1, base + [(u, n)])
        if n + 2 <= MAX_N:
            yield Graph(n + 2, base + [(n, n + 1)])


def _accepts(child: Graph, parent_cert: bytes, parent_degrees) -> bool:
    u, v = canonical_edge(child)
    canonical_parent = _delete_with_cleanup(child, u, v)
    if sorted(r.bit_count() for r in canonical_parent.adj) != parent_degrees:
        return False
    return canonical_label(canonical_parent).data == parent_cert


def _subtree(g: Graph, cert: bytes, level: int, m: int, connected_only: bool, prune_spec):
    if level == m:
        if not connected_only or g.is_connected():
            yield g, cert
        return
    remaining_after = m - level - 1
    parent_degrees = sorted(r.bit_count() for r in g.adj)
    seen = set()
    for child in _augmentations(g):
        if connected_only and child.component_count() - 1 > remaining_after:
            continue
        if prune_spec is not None and contains_theta(child, prune_spec) is not None:
            continue
        ccert = canonical_label(child).data
        if ccert in seen:
            continue
        seen.add(ccert)
        if not _accepts(child, cert, parent_degrees):
            continue
        yield from _subtree(child, ccert, level + 1, m, connected_only, prune_spec)


def _stream(m: int, connected_only: bool, prune_spec, threads: int):
    root = complete(2)
    root_cert = canonical_label(root).data
    if threads <= 1 or m <= 1:
        yield from _subtree(root, root_cert, 1, m, connected_only, prune_spec)
        return
    # Split the generation tree at the root's children; emitting each
    # subtree's output in root-child order reproduces the serial stream
    # byte for byte regardless of the worker count.
    if m == 1:
        yield from _subtree(root, root_cert, 1, m, connected_only, prune_spec)
        return
    first_level = []
    parent_degrees = sorted(r.bit_count() for r in root.adj)
    seen = set()
    for child in _augmentations(root):
        ccert = canonical_label(child).data
        if ccert in seen:
            continue
        seen.add(ccert)
        if _accepts(child, root_cert, parent_degrees):
            first_level.append((child, ccert))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [
            pool.submit(
                lambda c=child, cc=ccert: list(
                    _subtree(c, cc, 2, m, connected_only, prune_spec)
                )
            )
            for child, ccert in first_level
        ]
        for fut in futures:
            yield from fut.result()


def _check_edge_budget(m: int, budget: int):
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"edge count must be a positive integer, got {m!r}")
    if m > budget:
        raise BudgetError(
            f"edge count {m} exceeds the enumeration budget {budget}; "
            f"raise the budget explicitly to go further"
        )


def enumerate_by_edges(m: int, connected_only: bool = False, *,
                       budget: int = DEFAULT_EDGE_BUDGET, threads: int = 1):
    """One representative per isomorphism class with m edges and no isolated vertices.

    The order n of the yielded graphs floats over every feasible value
    (2..2m).  With connected_only, only connected classes are yielded.
    """
    _check_edge_budget(m, budget)
    return (g for g, _ in _stream(m, connected_only, None, threads))


def enumerate_by_order(n: int, *, budget: int = ORDER_BUDGET):
    """One representative per isomorphism class on exactly n vertices.

    Isolated vertices are allowed here; this enumerator exists to
    cross-check detectors and counts on complete small-order corpora.
    Vertex augmentation with canonical-vertex deletion: a child survives
    only when removing the vertex in its last canonical position
    regenerates the parent.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"order must be a positive integer, got {n!r}")
    if n > budget:
        raise BudgetError(f"order {n} exceeds the enumeration budget {budget}")

    def grow(g, cert):
        if g.n == n:
            yield g
            return
        parent_degrees = sorted(r.bit_count() for r in g.adj)
        base = list(g.edges())
        seen = set()
        for neighbor_mask in range(1 << g.n):
            child = Graph(
                g.n + 1,
                base + [(u, g.n) for u in range(g.n) if (neighbor_mask >> u) & 1],
            )
            ccert = canonical_label(child).data
            if ccert in seen:
                continue
            seen.add(ccert)
            last = canonical_order(child)[-1]
            parent = child.induced([w for w in range(child.n) if w != last])
            if sorted(r.bit_count() for r in parent.adj) != parent_degrees:
                continue
            if canonical_label(parent).data != cert:
                continue
            yield from grow(child, ccert)

    root = Graph(1)
    yield from grow(root, canonical_label(root).data)


def count_connected_by_order(n: int, *, budget: int = ORDER_BUDGET) -> int:
    """Number of connected isomorphism classes on n vertices."""
    return sum(1 for g in enumerate_by_order(n, budget=budget) if g.is_connected())


def _lambda_any(g: Graph) -> float:
    if g.is_connected():
        return spectral_radius(g).lam
    return max(spectral_radius(g.induced(comp)).lam for comp in g.components())


def _rank(a, b):
    # Larger lambda first; ties within tolerance break toward smaller order,
    # then lexicographically least certificate.
    if a[0] > b[0] + COMPARISON_TOL:
        return -1
    if b[0] > a[0] + COMPARISON_TOL:
        return 1
    if a[1] != b[1]:
        return -1 if a[1] < b[1] else 1
    if a[2] != b[2]:
        return -1 if a[2] < b[2] else 1
    return 0


@dataclass
class ExtremalRecord:
    """Argmax of the spectral radius over the theta-free classes with m edges."""

    m: int
    spec: ThetaSpec
    best_graph: Graph
    best_lambda: float
    num_candidates: int
    runner_ups: tuple[tuple[str, float], ...]

    @property
    def best_graph6(self) -> str:
        return to_graph6(canonical_form(self.best_graph))

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "spec": [self.spec.r, self.spec.p, self.spec.q],
            "best_graph6": self.best_graph6,
            "best_lambda": self.best_lambda,
            "num_candidates": self.num_candidates,
            "runner_ups": [
                {"graph6": g6, "lambda": lam} for g6, lam in self.runner_ups
            ],
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def extremal_search(m: int, spec: ThetaSpec, connected_only: bool = True, *,
                    budget: int = DEFAULT_EDGE_BUDGET, threads: int = 1) -> ExtremalRecord:
    """Maximize the spectral radius over spec-free classes with m edges.

    Subtrees of the generation tree rooted at a graph already containing
    the theta are pruned: containment is monotone under adding edges and
    vertices, so no spec-free descendant is lost.
    """
    _check_edge_budget(m, budget)
    entries = []
    for g, cert in _stream(m, connected_only, spec, threads):
        lam = _lambda_any(g)
        entries.append((lam, g.n, cert, g))
    if not entries:
        raise RuntimeError(f"no {spec}-free class with {m} edges; this cannot happen for m >= 1")
    entries.sort(key=cmp_to_key(_rank))
    best = entries[0]
    runner_ups = tuple(
        (to_graph6(canonical_form(e[3])), e[0]) for e in entries[1:6]
    )
    return ExtremalRecord(
        m=m,
        spec=spec,
        best_graph=best[3],
        best_lambda=best[0],
        num_candidates=len(entries),
        runner_ups=runner_ups,
    )


def extremal_table(m_list, spec: ThetaSpec, *, budget: int = DEFAULT_EDGE_BUDGET,
                   threads: int = 1) -> list[dict]:
    """Rows comparing the searched maximum against the closed-form bound.

    The gap may be negative for small m; the closed form is only claimed
    from a much larger size onward, so small-m rows are empirical data.
    """
    from .spectral import bound_value

    rows = []
    for m in m_list:
        rec = extremal_search(m, spec, budget=budget, threads=threads)
        bound = bound_value(m)
        rows.append(
            {
                "m": m,
                "best_lambda": rec.best_lambda,
                "bound": bound,
                "gap": bound - rec.best_lambda,
                "best_graph6": rec.best_graph6,
            }
        )
    return rows
