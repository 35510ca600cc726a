"""Spectral radius and related checks for connected graphs.

Power iteration runs on A + I: bipartite graphs carry -lambda in their
spectrum and plain iteration on A would oscillate, while the shift keeps
the dominant eigenvector (the Perron vector) and adds exactly one to the
eigenvalue.  The all-ones start vector is strictly positive, hence never
orthogonal to the Perron direction, and makes runs deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, bit_indices

CONVERGENCE_TOL = 1e-12
IDENTITY_TOL = 1e-8
COMPARISON_TOL = 1e-9
EQUALITY_TOL = 1e-6
MAX_ITERATIONS = 10**6


class ConvergenceError(RuntimeError):
    """Power iteration failed to reach the residual target."""


@dataclass
class SpectralResult:
    lam: float
    perron: np.ndarray
    residual: float
    iterations: int

    def to_json(self) -> dict:
        return {
            "lambda": self.lam,
            "residual": self.residual,
            "iterations": self.iterations,
            "perron": [float(x) for x in self.perron],
        }


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u in range(g.n):
        for v in bit_indices(g.adj[u]):
            a[u, v] = 1.0
    return a


def spectral_radius(g: Graph, *, tol: float = CONVERGENCE_TOL,
                    max_iterations: int = MAX_ITERATIONS) -> SpectralResult:
    """Largest adjacency eigenvalue and unit Perron vector of a connected graph."""
    if g.n < 1:
        raise ValueError("spectral radius needs at least one vertex")
    if not g.is_connected():
        raise ValueError("spectral radius requires a connected graph")
    a = adjacency_matrix(g)
    x = np.full(g.n, 1.0 / math.sqrt(g.n))
    for it in range(max_iterations + 1):
        ax = a @ x
        lam = float(x @ ax)
        residual = float(np.max(np.abs(ax - lam * x)))
        if residual <= tol * max(1.0, lam):
            return SpectralResult(lam, x, residual, it)
        y = ax + x
        x = y / np.linalg.norm(y)
    raise ConvergenceError(
        f"no convergence after {max_iterations} iterations (n={g.n}, m={g.m})"
    )


def extremal_vertex(res: SpectralResult) -> int:
    """Smallest vertex id whose Perron entry is maximal within tolerance."""
    top = float(res.perron.max())
    for i, val in enumerate(res.perron):
        if val >= top - COMPARISON_TOL:
            return i
    raise RuntimeError("unreachable: empty Perron vector")


def bound_value(m: int) -> float:
    """The closed-form spectral bound (1 + sqrt(4m - 3)) / 2 for m edges."""
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"edge count must be a positive integer, got {m!r}")
    return (1.0 + math.sqrt(4 * m - 3)) / 2.0


def triangle_free(g: Graph) -> bool:
    for u in range(g.n):
        row = g.adj[u]
        for v in bit_indices(row >> (u + 1)):
            if row & g.adj[u + 1 + v]:
                return False
    return True


def _complete_bipartite_parts(g: Graph):
    # Two-color a connected graph; returns sorted part sizes when the graph
    # is complete bipartite, else None.
    color = [-1] * g.n
    color[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            for v in bit_indices(g.adj[u]):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    nxt.append(v)
                elif color[v] == color[u]:
                    return None
        frontier = nxt
    s = color.count(0)
    t = g.n - s
    if g.m != s * t:
        return None
    return tuple(sorted((s, t)))


def check_nosal(g: Graph) -> dict:
    """Triangle-free bound report: lambda against sqrt(m), with the equality structure.

    For a triangle-free connected graph the spectral radius is at most
    sqrt(m), with equality exactly for complete bipartite graphs; the
    report flags any violation of either part.
    """
    if not g.is_connected():
        raise ValueError("check_nosal requires a connected graph")
    res = spectral_radius(g)
    tri_free = triangle_free(g)
    sqrt_m = math.sqrt(g.m)
    report = {
        "triangle_free": tri_free,
        "lambda": res.lam,
        "sqrt_m": sqrt_m,
        "satisfied": True,
        "equality_structure": None,
    }
    if tri_free:
        ok = res.lam <= sqrt_m + COMPARISON_TOL
        if ok and g.m >= 1 and abs(res.lam - sqrt_m) <= EQUALITY_TOL:
            parts = _complete_bipartite_parts(g)
            if parts is None:
                ok = False
            else:
                report["equality_structure"] = parts
        report["satisfied"] = ok
    return report


def eigen_identity_check(g: Graph, res: SpectralResult, ustar: int) -> tuple[float, float]:
    """Residuals of the first- and second-order eigenvector identities at ustar.

    Both identities decompose the neighborhood of ustar: the walk count of
    length one equals the sum over neighbors, and the walk count of length
    two splits over the neighborhood's internal degrees and the outside
    vertices' degrees into the neighborhood.  They hold for any vertex of
    any connected graph up to eigensolver error.
    """
    g._check_vertex(ustar)
    lam = res.lam
    x = res.perron
    umask = g.adj[ustar]
    first = abs(lam * float(x[ustar]) - sum(float(x[u]) for u in bit_indices(umask)))
    rhs = umask.bit_count() * float(x[ustar])
    for u in bit_indices(umask):
        du = (g.adj[u] & umask).bit_count()
        if du:
            rhs += du * float(x[u])
    wmask = ((1 << g.n) - 1) & ~umask & ~(1 << ustar)
    for w in bit_indices(wmask):
        dw = (g.adj[w] & umask).bit_count()
        if dw:
            rhs += dw * float(x[w])
    second = abs(lam * lam * float(x[ustar]) - rhs)
    return first, second
