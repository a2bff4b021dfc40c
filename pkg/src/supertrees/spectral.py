"""Adjacency matrix, spectral radius and principal eigenvector.

Entry ``(i, j)`` of the adjacency matrix is the sum of ``1/(|e|-1)`` over the
edges containing both ``i`` and ``j``.  Entries are assembled as exact
fractions; floating point enters only at eigensolver entry.

Two independent eigensolvers are provided.  The power method works on the
shifted operator ``A + Delta*I`` through an edge-wise mat-vec and never forms
the matrix.  The dense route runs cyclic Jacobi rotations on the full matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import Disconnected, NoConvergence, NonPositiveVector, TooLarge
from .hypergraph import Hypergraph, components, degree_profile, induced_component, is_connected

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 1_000_000
DENSE_MAX_ORDER = 2000
JACOBI_OFF_TOL = 1e-13


@dataclass(frozen=True)
class AdjMatrix:
    """Symmetric exact-rational matrix stored by its nonzero upper triangle."""

    order: int
    upper: dict[tuple[int, int], Fraction] = field(repr=False)

    def entry(self, i: int, j: int) -> Fraction:
        if i == j:
            return Fraction(0)
        key = (i, j) if i < j else (j, i)
        return self.upper.get(key, Fraction(0))

    def rows(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.order for _ in range(self.order)]
        for (i, j), val in self.upper.items():
            out[i][j] = val
            out[j][i] = val
        return out

    def row_sums(self) -> list[Fraction]:
        sums = [Fraction(0)] * self.order
        for (i, j), val in self.upper.items():
            sums[i] += val
            sums[j] += val
        return sums

    def to_array(self) -> np.ndarray:
        a = np.zeros((self.order, self.order))
        for (i, j), val in self.upper.items():
            a[i, j] = a[j, i] = float(val)
        return a


@dataclass(frozen=True, eq=False)
class SpectralResult:
    rho: float
    eigvec: np.ndarray
    iterations: int
    residual: float
    method: str


def adjacency_matrix(H: Hypergraph) -> AdjMatrix:
    upper: dict[tuple[int, int], Fraction] = {}
    for e in H.edges:
        w = Fraction(1, len(e) - 1)
        for a in range(len(e)):
            for b in range(a + 1, len(e)):
                key = (e[a], e[b])
                upper[key] = upper.get(key, Fraction(0)) + w
    return AdjMatrix(H.n, upper)


def edge_quadratic(x: Sequence[float], e: Sequence[int]) -> float:
    """Sum of ``x_u * x_v`` over unordered pairs ``u, v`` in ``e``."""
    vals = [x[v] for v in e]
    s = sum(vals)
    return (s * s - sum(v * v for v in vals)) / 2


class EdgeOperator:
    """Matrix-free ``y = A x`` accumulated per edge in O(sum |e|)."""

    def __init__(self, H: Hypergraph):
        self.n = H.n
        verts, owners, weights = [], [], []
        for i, e in enumerate(H.edges):
            verts.extend(e)
            owners.extend([i] * len(e))
            weights.append(1.0 / (len(e) - 1))
        self.m = H.m
        self._verts = np.asarray(verts, dtype=np.intp)
        self._owners = np.asarray(owners, dtype=np.intp)
        self._weights = np.asarray(weights, dtype=float)[self._owners] if H.m else np.zeros(0)

    def __matmul__(self, x: np.ndarray) -> np.ndarray:
        if self.m == 0:
            return np.zeros(self.n)
        xv = x[self._verts]
        edge_sums = np.bincount(self._owners, weights=xv, minlength=self.m)
        contrib = self._weights * (edge_sums[self._owners] - xv)
        return np.bincount(self._verts, weights=contrib, minlength=self.n)


def jacobi_eigh(a: np.ndarray, off_tol: float = JACOBI_OFF_TOL, max_sweeps: int = 100):
    """All eigenpairs of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps until the Frobenius norm of the off-diagonal part is at most
    ``off_tol``.  Returns ``(eigenvalues, eigenvectors)`` with eigenvectors as
    columns, in no particular order.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    for _ in range(max_sweeps):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= off_tol:
            return np.diag(a).copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # A <- J^T A J with J the (p, q) rotation
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    raise NoConvergence(max_sweeps, off)


def _dense_matrix(H: Hypergraph) -> np.ndarray:
    if H.n > DENSE_MAX_ORDER:
        raise TooLarge(f"dense route limited to n <= {DENSE_MAX_ORDER}, got {H.n}")
    return adjacency_matrix(H).to_array()


def dense_eigen_oracle(H: Hypergraph) -> float:
    """Largest adjacency eigenvalue via Jacobi rotations (equals rho for A >= 0)."""
    if H.n == 0:
        return 0.0
    w, _ = jacobi_eigh(_dense_matrix(H))
    return float(np.max(w))


def _finish(op, x: np.ndarray) -> tuple[float, float]:
    y = op @ x
    rho = float(x @ y)
    return rho, float(np.max(np.abs(y - rho * x)))


def _power(H: Hypergraph, tol: float, max_iter: int) -> SpectralResult:
    op = EdgeOperator(H)
    shift = float(degree_profile(H).Delta)
    x = np.ones(H.n) / math.sqrt(H.n)
    residual = math.inf
    for it in range(max_iter + 1):
        y = op @ x
        rho = float(x @ y)
        residual = float(np.max(np.abs(y - rho * x)))
        if residual <= tol:
            return SpectralResult(rho, x, it, residual, "power")
        z = y + shift * x
        x = z / np.linalg.norm(z)
    raise NoConvergence(max_iter, residual)


def _dense(H: Hypergraph, tol: float) -> SpectralResult:
    w, vecs = jacobi_eigh(_dense_matrix(H))
    idx = int(np.argmax(w))
    x = vecs[:, idx]
    x = x / np.linalg.norm(x)
    if x.sum() < 0:
        x = -x
    rho, residual = _finish(EdgeOperator(H), x)
    if residual > tol:
        raise NoConvergence(0, residual)
    return SpectralResult(rho, x, 0, residual, "dense")


def spectral_radius(
    H: Hypergraph,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    method: str = "power",
) -> SpectralResult:
    """Spectral radius and unit principal eigenvector of a connected hypergraph.

    ``rho`` is the Rayleigh quotient of the returned vector, and
    ``residual = max |A x - rho x|`` is at most ``tol``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not is_connected(H):
        raise Disconnected("spectral_radius needs a connected hypergraph; decompose first")
    if method == "power":
        return _power(H, tol, max_iter)
    if method == "dense":
        return _dense(H, tol)
    raise ValueError(f"unknown method {method!r}")


def spectral_radius_any(H: Hypergraph, method: str = "power", tol: float = DEFAULT_TOL) -> float:
    """Spectral radius of a possibly disconnected hypergraph: max over components."""
    best = 0.0
    for comp in components(H):
        if len(comp) == 1:
            continue
        sub, _ = induced_component(H, comp)
        best = max(best, spectral_radius(sub, tol=tol, method=method).rho)
    return best


def _positive(y: Sequence[float]) -> np.ndarray:
    y = np.asarray(y, dtype=float)
    if y.ndim != 1 or np.any(~(y > 0)):
        raise NonPositiveVector("vector must be strictly positive")
    return y


def collatz_wielandt(H: Hypergraph, y: Sequence[float]) -> tuple[float, float]:
    """``(min_v (Ay)_v / y_v, max_v (Ay)_v / y_v)``, which bracket rho."""
    if not is_connected(H):
        raise Disconnected("collatz_wielandt needs a connected hypergraph")
    y = _positive(y)
    if y.shape[0] != H.n:
        raise NonPositiveVector(f"vector has length {y.shape[0]}, expected {H.n}")
    ratios = (EdgeOperator(H) @ y) / y
    return float(ratios.min()), float(ratios.max())


def row_sum_bounds(H: Hypergraph) -> tuple[int, int, bool]:
    if not is_connected(H):
        raise Disconnected("row_sum_bounds needs a connected hypergraph")
    prof = degree_profile(H)
    return prof.delta, prof.Delta, prof.regular


def rayleigh_quotient(H: Hypergraph, x: Sequence[float]) -> float:
    x = np.asarray(x, dtype=float)
    return float(x @ (EdgeOperator(H) @ x)) / float(x @ x)


def write_matrix_market(A: AdjMatrix) -> str:
    """MatrixMarket coordinate text (symmetric real, lower triangle, 1-based).

    Values use Python's shortest round-tripping float repr (at most 17
    significant digits).
    """
    entries = sorted(((j, i), v) for (i, j), v in A.upper.items() if v != 0)
    lines = [
        "%%MatrixMarket matrix coordinate real symmetric",
        f"{A.order} {A.order} {len(entries)}",
    ]
    lines.extend(f"{r + 1} {c + 1} {float(v)!r}" for (r, c), v in entries)
    return "\n".join(lines) + "\n"
