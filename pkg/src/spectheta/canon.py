"""Canonical labeling by equitable refinement plus individualization search.

Each connected component is labeled on its own: the search explores all
vertex orderings compatible with the refined partition, keeps the
lexicographically least upper-triangle bit string, prunes branches whose
fixed prefix already exceeds the best string, and individualizes only one
representative per twin class (vertices with identical open or closed
neighborhoods are swapped by an automorphism, so the skipped branches
cannot improve the minimum).  The whole-graph certificate concatenates the
component certificates in sorted order, which makes disjoint unions of
many small components cheap instead of catastrophically symmetric.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graphs import Graph, bit_indices


@dataclass(frozen=True)
class CanonicalLabel:
    """Isomorphism-class certificate: equal data iff isomorphic graphs."""

    data: bytes


def _refine(adj, cells, work):
    # cells: ordered list of vertex lists; work: stack of splitter masks.
    # Fragments are ordered by neighbor count toward the splitter, which is
    # label-independent, so the final cell order is an isomorphism invariant.
    while work:
        smask = work.pop()
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            buckets = {}
            for v in cell:
                buckets.setdefault((adj[v] & smask).bit_count(), []).append(v)
            if len(buckets) == 1:
                out.append(cell)
            else:
                for key in sorted(buckets):
                    frag = buckets[key]
                    out.append(frag)
                    fmask = 0
                    for v in frag:
                        fmask |= 1 << v
                    work.append(fmask)
        cells = out
    return cells


def _twin_representatives(adj, cell):
    # One vertex per twin class; twins have equal rows (non-adjacent) or
    # rows differing exactly in each other's bits (adjacent).
    classes = []
    for v in cell:
        for cls in classes:
            u = cls[0]
            if adj[u] == adj[v] or (adj[u] ^ adj[v]) == ((1 << u) | (1 << v)):
                cls.append(v)
                break
        else:
            classes.append([v])
    return [cls[0] for cls in classes]


def _component_canonical(adj, k):
    """Least adjacency bit string over refinement-compatible orderings.

    Returns (bits, order): bits is the upper triangle packed column-major
    into an int of k*(k-1)/2 bits, order maps canonical positions to local
    vertex ids.
    """
    total_bits = k * (k - 1) // 2
    best_bits = None
    best_order = None

    def descend(cells):
        nonlocal best_bits, best_order
        order = []
        for cell in cells:
            if len(cell) != 1:
                break
            order.append(cell[0])
        val = 0
        nbits = 0
        for j in range(1, len(order)):
            aj = adj[order[j]]
            col = 0
            for i in range(j):
                col = (col << 1) | ((aj >> order[i]) & 1)
            val = (val << j) | col
            nbits += j
        if best_bits is not None and nbits and val > (best_bits >> (total_bits - nbits)):
            return
        if len(order) == k:
            if best_bits is None or val < best_bits:
                best_bits = val
                best_order = tuple(order)
            return
        target = cells[len(order)]
        for v in _twin_representatives(adj, target):
            rest = [w for w in target if w != v]
            branch = cells[: len(order)] + [[v], rest] + cells[len(order) + 1:]
            descend(_refine(adj, branch, [1 << v]))

    descend(_refine(adj, [list(range(k))], [(1 << k) - 1]))
    return best_bits, best_order


@lru_cache(maxsize=65536)
def _canonical_pieces(g: Graph):
    """Per-component (certificate, canonical original-vertex order), sorted."""
    pieces = []
    for comp in g.components():
        k = len(comp)
        pos = {v: i for i, v in enumerate(comp)}
        local = [0] * k
        for i, v in enumerate(comp):
            row = 0
            for w in bit_indices(g.adj[v]):
                row |= 1 << pos[w]
            local[i] = row
        bits, order = _component_canonical(local, k)
        nbytes = (k * (k - 1) // 2 + 7) // 8
        cert = k.to_bytes(2, "big") + bits.to_bytes(nbytes, "big")
        pieces.append((cert, tuple(comp[i] for i in order)))
    pieces.sort(key=lambda piece: piece[0])
    return tuple(pieces)


def canonical_label(g: Graph) -> CanonicalLabel:
    data = g.n.to_bytes(2, "big") + b"".join(cert for cert, _ in _canonical_pieces(g))
    return CanonicalLabel(data)


def canonical_order(g: Graph) -> tuple[int, ...]:
    """Original vertex ids listed by canonical position."""
    order = []
    for _, comp_order in _canonical_pieces(g):
        order.extend(comp_order)
    return tuple(order)


def canonical_form(g: Graph) -> Graph:
    """The canonically labeled copy; identical for all relabelings of g."""
    order = canonical_order(g)
    pos = {v: i for i, v in enumerate(order)}
    rows = [0] * g.n
    for v in range(g.n):
        row = 0
        for w in bit_indices(g.adj[v]):
            row |= 1 << pos[w]
        rows[pos[v]] = row
    return Graph._from_rows(rows)


def canonical_edge(g: Graph):
    """The edge occupying the least slot of the canonical form, in original ids.

    The slot is unique per isomorphism class; the concrete preimage is one
    representative of a single automorphism orbit.  Returns None on
    edgeless graphs.
    """
    if g.m == 0:
        return None
    order = canonical_order(g)
    for j in range(1, g.n):
        aj = g.adj[order[j]]
        for i in range(j):
            if (aj >> order[i]) & 1:
                u, v = order[i], order[j]
                return (u, v) if u < v else (v, u)
    return None
