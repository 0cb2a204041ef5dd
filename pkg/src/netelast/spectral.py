"""Laplacian spectrum at desk scale and algebraic connectivity.

The eigensolver is a cyclic Jacobi rotation scheme implemented here rather
than delegated: dense, symmetric-only, and accurate to the off-diagonal
tolerance it is asked for.  A size guard keeps the n^2 memory and n^3 time
of the dense approach from being applied to graphs it was never meant for.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph

DEFAULT_TOL = 1e-10
DEFAULT_SIZE_GUARD = 4000
_MAX_SWEEPS = 100


class SizeGuardError(RuntimeError):
    """Matrix exceeds the dense-eigensolver size guard."""


@dataclass(frozen=True)
class SpectralSummary:
    """Full Laplacian spectrum (ascending) with its headline quantities."""

    eigenvalues: tuple[float, ...]
    lambda2: float | None
    mean_eigenvalue: float


def laplacian(g: Graph) -> np.ndarray:
    """Dense Laplacian L = D - A of the graph."""
    if g.n < 1:
        raise ValueError("laplacian requires at least one node")
    lap = np.zeros((g.n, g.n), dtype=np.float64)
    for u, v in g.edges:
        lap[u, v] = -1.0
        lap[v, u] = -1.0
    for v in range(g.n):
        lap[v, v] = float(g.degree(v))
    return lap


def _jacobi_spectrum(matrix: np.ndarray, tol: float) -> np.ndarray:
    a = np.array(matrix, dtype=np.float64, copy=True)
    n = a.shape[0]
    if n == 1:
        return a.diagonal().copy()
    fro = float(np.linalg.norm(a))
    if fro == 0.0:
        return a.diagonal().copy()
    stop = tol * fro
    # Rotations below this off-diagonal size cannot keep the matrix above
    # the stopping threshold, so skipping them is safe.
    skip = stop / n
    for _ in range(_MAX_SWEEPS):
        off = a - np.diag(a.diagonal())
        if float(np.abs(off).max()) < stop:
            return np.sort(a.diagonal())
        for p in range(n - 1):
            row = a[p]
            for q in range(p + 1, n):
                apq = row[q]
                if abs(apq) <= skip:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(1.0, theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rp = a[p].copy()
                rq = a[q].copy()
                a[p] = c * rp - s * rq
                a[q] = s * rp + c * rq
                a[:, p] = a[p]
                a[:, q] = a[q]
                a[p, p] = c * c * app - 2.0 * c * s * apq + s * s * aqq
                a[q, q] = s * s * app + 2.0 * c * s * apq + c * c * aqq
                a[p, q] = a[q, p] = 0.0
    raise RuntimeError("Jacobi eigensolver failed to converge")


def eigenvalues(
    lap: np.ndarray, tol: float = DEFAULT_TOL, size_guard: int = DEFAULT_SIZE_GUARD
) -> SpectralSummary:
    """Full symmetric eigendecomposition of a Laplacian, sorted ascending.

    Convergence: sweep until every off-diagonal magnitude drops below
    tol * ||L||_F.  Matrices above size_guard are refused; raise the guard
    deliberately (accepting the n^2/n^3 cost) if a larger graph's spectrum
    is truly needed.
    """
    if lap.shape[0] != lap.shape[1]:
        raise ValueError("Laplacian must be square")
    n = lap.shape[0]
    if n > size_guard:
        raise SizeGuardError(
            f"n={n} exceeds the dense-eigensolver guard ({size_guard}); "
            f"pass a larger size_guard to accept the cost"
        )
    spectrum = _jacobi_spectrum(lap, tol)
    values = tuple(float(x) for x in spectrum)
    return SpectralSummary(
        eigenvalues=values,
        lambda2=values[1] if n >= 2 else None,
        mean_eigenvalue=math.fsum(values) / n,
    )


def algebraic_connectivity(
    g: Graph, tol: float = DEFAULT_TOL, size_guard: int = DEFAULT_SIZE_GUARD
) -> float:
    """Second-smallest Laplacian eigenvalue; zero iff the graph is disconnected."""
    if g.n < 2:
        raise ValueError("algebraic connectivity requires n >= 2")
    summary = eigenvalues(laplacian(g), tol=tol, size_guard=size_guard)
    assert summary.lambda2 is not None
    return summary.lambda2
