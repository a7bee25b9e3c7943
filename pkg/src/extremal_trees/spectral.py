"""Adjacency spectra: dense symmetric eigensolver and block-circulant reduction.

Two independent routes to the spectrum of G(m,d):

* ``eigenvalues_dense`` runs the full symmetric eigensolver (Householder
  tridiagonalization followed by implicit-shift QL iteration) on the n x n
  adjacency matrix.

* ``eigenvalues_block_circulant`` exploits the block-circulant structure:
  for each (2m+1)-th root of unity zeta, the (d+1)-dimensional Hermitian
  block H_zeta = sum_k zeta^k b_k is solved by embedding H = A + iB into the
  real symmetric [[A, -B], [B, A]], whose spectrum is that of H with every
  multiplicity doubled; multiplicities are halved by greedy pairing of the
  sorted values.

The two multisets must agree, which the test suite asserts elementwise.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import CheckFailure, ParameterDomainError, SolverConvergenceError
from .graphs import Graph, build_extremal_graph

DEFAULT_TOL = 1e-12
PAIRING_TOL = 1e-9
BOUND_SLACK = 1e-9
MAX_SWEEPS = 50


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending, with the solver tolerance that produced them."""

    values: tuple[float, ...]
    tol: float

    def __len__(self) -> int:
        return len(self.values)

    def to_json(self, m: int | None = None, d: int | None = None, solver: str = "dense") -> str:
        meta = {"m": m, "d": d, "solver": solver, "tol": self.tol,
                "values": list(self.values)}
        return json.dumps(meta)


@dataclass(frozen=True)
class HermitianBlock:
    """Block H_zeta for zeta = exp(2*pi*i*t/(2m+1)), t in [1, 2m+1]."""

    zeta_index: int
    entries: np.ndarray


def _householder_tridiagonal(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Reduce a real symmetric matrix to tridiagonal (diag d, subdiag e) in place."""
    n = a.shape[0]
    d = np.zeros(n)
    e = np.zeros(max(n - 1, 0))
    for k in range(n - 2):
        x = a[k + 1 :, k].copy()
        normx = math.sqrt(float(x @ x))
        if normx == 0.0:
            e[k] = 0.0
            continue
        alpha = -math.copysign(normx, x[0]) if x[0] != 0.0 else -normx
        v = x
        v[0] -= alpha
        vtv = float(v @ v)
        if vtv == 0.0:
            e[k] = alpha
            continue
        b = a[k + 1 :, k + 1 :]
        w = (2.0 / vtv) * (b @ v)
        w -= (float(v @ w) / vtv) * v
        b -= np.outer(v, w) + np.outer(w, v)
        e[k] = alpha
        a[k + 1 :, k] = 0.0
        a[k, k + 1 :] = 0.0
        a[k + 1, k] = a[k, k + 1] = alpha
    if n >= 2:
        e[n - 2] = a[n - 1, n - 2]
    d[:] = np.diag(a)
    return d, e


def _ql_implicit(d: np.ndarray, e: np.ndarray, tol_abs: float) -> np.ndarray:
    """Implicit-shift QL on a symmetric tridiagonal matrix; eigenvalues ascending.

    Off-diagonals are treated as negligible below tol_abs (with a machine
    epsilon guard).  Raises after MAX_SWEEPS sweeps for any single eigenvalue.
    """
    n = len(d)
    dd = [float(v) for v in d]
    ee = [float(v) for v in e] + [0.0]
    eps = np.finfo(float).eps
    for l in range(n):
        sweeps = 0
        while True:
            mm = l
            while mm < n - 1:
                scale = abs(dd[mm]) + abs(dd[mm + 1])
                if abs(ee[mm]) <= max(tol_abs, eps * scale):
                    break
                mm += 1
            if mm == l:
                break
            sweeps += 1
            if sweeps > MAX_SWEEPS:
                raise SolverConvergenceError(
                    f"QL failed to converge for a matrix of size {n}"
                )
            g = (dd[l + 1] - dd[l]) / (2.0 * ee[l])
            r = math.hypot(g, 1.0)
            g = dd[mm] - dd[l] + ee[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(mm - 1, l - 1, -1):
                f = s * ee[i]
                b = c * ee[i]
                r = math.hypot(f, g)
                ee[i + 1] = r
                if r == 0.0:
                    dd[i + 1] -= p
                    ee[mm] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = dd[i + 1] - p
                r = (dd[i] - g) * s + 2.0 * c * b
                p = s * r
                dd[i + 1] = g + p
                g = c * r - b
            if underflow:
                continue
            dd[l] -= p
            ee[l] = g
            ee[mm] = 0.0
    return np.sort(np.array(dd))


def symmetric_eigenvalues(mat: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """All eigenvalues of a real symmetric matrix, ascending.

    tol is relative to the matrix max-norm and controls when off-diagonal
    entries of the tridiagonal reduction are treated as zero.
    """
    if tol <= 0:
        raise ParameterDomainError(f"tol must be positive, got {tol}")
    a = np.array(mat, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if a.shape[0] == 0:
        return np.zeros(0)
    scale = float(np.max(np.abs(a)))
    if scale == 0.0:
        return np.zeros(a.shape[0])
    d, e = _householder_tridiagonal(a)
    return _ql_implicit(d, e, tol * scale)


def eigenvalues_dense(g: Graph, tol: float = DEFAULT_TOL) -> Spectrum:
    """Spectrum of the adjacency matrix by the dense symmetric solver."""
    vals = symmetric_eigenvalues(g.adjacency_matrix(), tol)
    return Spectrum(tuple(vals[::-1]), tol)


def blocks_of(m: int, d: int) -> list[np.ndarray]:
    """The 2m+1 square blocks b_0..b_2m of the block-circulant adjacency matrix.

    b_0 is the adjacency matrix of one modified clique; for 1 <= i <= m the
    block b_i has a single unit entry (the cross edge at clique offset i) and
    b_(2m+1-i) = b_i^T.
    """
    if m < 1 or d < 2 * m + 2:
        raise ParameterDomainError(f"require d >= 2m+2 >= 4; got m={m}, d={d}")
    size = d + 1
    blocks = [np.zeros((size, size), dtype=np.int64) for _ in range(2 * m + 1)]
    for offset in range(1, m + 1):
        blocks[offset][2 * offset - 1, 2 * offset - 2] = 1
        blocks[2 * m + 1 - offset][2 * offset - 2, 2 * offset - 1] = 1
    b0 = np.ones((size, size), dtype=np.int64) - np.eye(size, dtype=np.int64)
    for offset in range(1, m + 1):
        b0[2 * offset - 2, 2 * offset - 1] = 0
        b0[2 * offset - 1, 2 * offset - 2] = 0
    blocks[0] = b0
    return blocks


def assemble_block_circulant(blocks: list[np.ndarray]) -> np.ndarray:
    """Block matrix whose (r, c) block is blocks[(c - r) mod len(blocks)]."""
    k = len(blocks)
    size = blocks[0].shape[0]
    out = np.zeros((k * size, k * size), dtype=blocks[0].dtype)
    for r in range(k):
        for c in range(k):
            out[r * size : (r + 1) * size, c * size : (c + 1) * size] = blocks[
                (c - r) % k
            ]
    return out


def hermitian_block(m: int, d: int, t: int) -> HermitianBlock:
    """H_zeta = sum_k zeta^k b_k for zeta = exp(2*pi*i*t/(2m+1))."""
    k = 2 * m + 1
    if not 1 <= t <= k:
        raise ParameterDomainError(f"zeta index t must be in [1, {k}], got {t}")
    blocks = blocks_of(m, d)
    zeta = complex(math.cos(2 * math.pi * t / k), math.sin(2 * math.pi * t / k))
    h = np.zeros((d + 1, d + 1), dtype=complex)
    for i, b in enumerate(blocks):
        h += (zeta**i) * b
    return HermitianBlock(t, h)


def hermitian_eigenvalues(h: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Eigenvalues of a complex Hermitian matrix, ascending, via real embedding.

    H = A + iB embeds into the real symmetric [[A, -B], [B, A]] whose spectrum
    doubles every multiplicity; the doubled values are paired greedily after
    sorting.  A pairing gap above PAIRING_TOL signals solver trouble.
    """
    herm_defect = float(np.max(np.abs(h - h.conj().T)))
    if herm_defect > 1e-9:
        raise ValueError(f"matrix is not Hermitian (defect {herm_defect:.2e})")
    a, b = h.real, h.imag
    embedded = np.block([[a, -b], [b, a]])
    doubled = symmetric_eigenvalues(embedded, tol)
    paired = []
    for j in range(0, len(doubled), 2):
        lo, hi = doubled[j], doubled[j + 1]
        if hi - lo > PAIRING_TOL:
            raise SolverConvergenceError(
                f"embedded eigenvalues failed to pair: gap {hi - lo:.3e}"
            )
        paired.append(0.5 * (lo + hi))
    return np.array(paired)


def eigenvalues_block_circulant(m: int, d: int, tol: float = DEFAULT_TOL) -> Spectrum:
    """Spectrum of G(m,d) as the union over roots of unity of the block spectra."""
    k = 2 * m + 1
    values: list[float] = []
    for t in range(1, k + 1):
        h = hermitian_block(m, d, t).entries
        if t == k:
            # zeta = 1: the block is real symmetric, no embedding needed
            vals = symmetric_eigenvalues(h.real, tol)
        else:
            vals = hermitian_eigenvalues(h, tol)
        values.extend(vals.tolist())
    values.sort(reverse=True)
    return Spectrum(tuple(values), tol)


def lambda2_window(m: int, d: int) -> tuple[float, float]:
    """The proven enclosure [d - (2m+1)/(d+1), d - (2m+1)/(d+3)) for lambda_2."""
    return d - (2 * m + 1) / (d + 1), d - (2 * m + 1) / (d + 3)


def lambda2(m: int, d: int, tol: float = DEFAULT_TOL, method: str = "dense") -> float:
    """Second-largest adjacency eigenvalue of G(m,d), checked against its window.

    Raises CheckFailure if the computed value escapes the two-sided bound by
    more than BOUND_SLACK (that would falsify the bound being verified, so
    it is treated as a failure, not a return value).
    """
    if method == "dense":
        spectrum = eigenvalues_dense(build_extremal_graph(m, d), tol)
    elif method == "blocks":
        spectrum = eigenvalues_block_circulant(m, d, tol)
    else:
        raise ValueError(f"unknown method {method!r} (use 'dense' or 'blocks')")
    lam1, lam2_ = spectrum.values[0], spectrum.values[1]
    if abs(lam1 - d) > 1e-8:
        raise CheckFailure(f"largest eigenvalue {lam1} != degree {d}")
    lo, hi = lambda2_window(m, d)
    if not (lo - BOUND_SLACK <= lam2_ < hi + BOUND_SLACK):
        raise CheckFailure(
            f"lambda2={lam2_!r} outside [{lo}, {hi}) for (m,d)=({m},{d})"
        )
    return lam2_
