"""Gram matrix of local-orbit tangent vectors and local orbit dimensions.

The tangent space of the local unitary orbit through a state W is spanned
by the commutators W_j = [e_j x I, W] and W_alpha = [I x f_alpha, W].
Their Gram matrix C_{mn} = 1/2 Tr(W_m W_n) is real symmetric and positive
semidefinite, of size K^2 + M^2 - 2; its rank is the orbit dimension.

``gram_closed_form`` evaluates C directly from the Bloch coefficients,

    A_{ij}      = (2 G_{k alpha} G_{m alpha} + M a_k a_m) c_{ikl} c_{jml}
    B_{i alpha} = 2 G_{k beta} G_{m gamma} c_{ikm} d_{alpha gamma beta}
    D_{alpha beta} = (2 G_{m gamma} G_{m delta} + K b_gamma b_delta)
                     d_{alpha gamma mu} d_{beta delta mu},

with c, d the su(K)/su(M) structure constants; it must agree with the
commutator route to machine precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .algebra import structure_constants, su_generators
from .states import BlochForm, DensityMatrix

__all__ = [
    "GramReport",
    "GramSplit2x2",
    "tangent_vectors",
    "gram_direct",
    "gram_closed_form",
    "local_orbit_dim",
    "orbit_dim_oracle",
    "pure_gram_spectrum",
    "gram_split_2x2",
    "b_block_residual",
]

RANK_TOL = 1e-9


@dataclass(frozen=True)
class GramReport:
    """Gram matrix of the tangent vectors plus its spectral summary."""

    k: int
    m: int
    matrix: np.ndarray
    spectrum: np.ndarray  # ascending
    rank: int

    @property
    def local_dim(self) -> int:
        return self.rank

    @property
    def block_a(self) -> np.ndarray:
        d = self.k**2 - 1
        return self.matrix[:d, :d]

    @property
    def block_b(self) -> np.ndarray:
        d = self.k**2 - 1
        return self.matrix[:d, d:]

    @property
    def block_d(self) -> np.ndarray:
        d = self.k**2 - 1
        return self.matrix[d:, d:]


@dataclass(frozen=True)
class GramSplit2x2:
    """Split C = C_G + C_ab of a 2x2 Gram matrix in canonical Bloch form."""

    c_g: np.ndarray
    c_ab: np.ndarray
    rho_eigs: np.ndarray  # predicted eigenvalues of c_g: 8 (mu_i +- mu_j)^2
    corank_cg: int
    corank_cab: int


@lru_cache(maxsize=16)
def _gens(n: int) -> tuple[np.ndarray, ...]:
    return tuple(su_generators(n))


@lru_cache(maxsize=16)
def _consts(n: int) -> np.ndarray:
    return structure_constants(list(su_generators(n)))


def tangent_vectors(w: DensityMatrix) -> list[np.ndarray]:
    """Commutators [e_j x I, W] followed by [I x f_alpha, W]; each is Hermitian."""
    k, m = w.k, w.m
    mat = w.matrix
    ik, im = np.eye(k, dtype=complex), np.eye(m, dtype=complex)
    out = []
    for e in _gens(k):
        l = np.kron(e, im)
        out.append(l @ mat - mat @ l)
    for f in _gens(m):
        l = np.kron(ik, f)
        out.append(l @ mat - mat @ l)
    return out


def _spectral_rank(spectrum: np.ndarray, tol: float) -> int:
    # relative threshold so the rule is scale-free; the max(., 1) guard keeps
    # near-zero matrices from promoting noise to rank
    top = max(float(spectrum.max(initial=0.0)), 1.0)
    return int(np.sum(spectrum > tol * top))


def _report(k: int, m: int, c: np.ndarray, tol: float) -> GramReport:
    c = 0.5 * (c + c.T)
    spectrum = np.linalg.eigvalsh(c)
    return GramReport(k, m, c, spectrum, _spectral_rank(spectrum, tol))


def gram_direct(w: DensityMatrix, tol: float = RANK_TOL) -> GramReport:
    """Gram matrix C_{mn} = 1/2 Tr(W_m W_n) from explicit commutators."""
    t = tangent_vectors(w)
    n = len(t)
    c = np.empty((n, n))
    for i in range(n):
        for j in range(i, n):
            val = 0.5 * np.trace(t[i] @ t[j]).real
            c[i, j] = val
            c[j, i] = val
    return _report(w.k, w.m, c, tol)


def gram_closed_form(f: BlochForm, tol: float = RANK_TOL) -> GramReport:
    """Gram matrix evaluated from the Bloch coefficients, no commutators."""
    k, m = f.k, f.m
    c = _consts(k)
    d = _consts(m)
    g, a, b = f.g, f.a, f.b
    ma = 2.0 * (g @ g.T) + m * np.outer(a, a)
    block_a = np.einsum("km,ikl,jml->ij", ma, c, c, optimize=True)
    block_b = 2.0 * np.einsum("kb,mg,ikm,agb->ia", g, g, c, d, optimize=True)
    md = 2.0 * (g.T @ g) + k * np.outer(b, b)
    block_d = np.einsum("gd,agu,bdu->ab", md, d, d, optimize=True)
    top = np.hstack([block_a, block_b])
    bot = np.hstack([block_b.T, block_d])
    return _report(k, m, np.vstack([top, bot]), tol)


def local_orbit_dim(report: GramReport, tol: float = RANK_TOL) -> int:
    """Rank of the Gram matrix: eigenvalues above tol * max(lambda_max, 1)."""
    return _spectral_rank(report.spectrum, tol)


def orbit_dim_oracle(w: DensityMatrix, tol: float = RANK_TOL) -> int:
    """Orbit dimension from an independent route: rank of the stacked
    real/imaginary parts of the vectorized tangent vectors, via singular
    values with the same relative threshold applied to their squares."""
    t = tangent_vectors(w)
    rows = np.array([np.concatenate([v.real.ravel(), v.imag.ravel()]) for v in t])
    s2 = np.linalg.svd(rows, compute_uv=False) ** 2
    return _spectral_rank(s2, tol)


def pure_gram_spectrum(c: float) -> np.ndarray:
    """Predicted Gram spectrum {0, 2c^2, 1+c, 1+c, 1-c, 1-c} of a 2x2 pure
    state with concurrence c, ascending."""
    if not -1e-12 <= c <= 1.0 + 1e-12:
        raise ValueError(f"concurrence must lie in [0, 1], got {c}")
    return np.sort(np.array([0.0, 2.0 * c * c, 1 + c, 1 + c, 1 - c, 1 - c]))


def _corank(values: np.ndarray, tol: float) -> int:
    top = max(float(np.max(np.abs(values), initial=0.0)), 1.0)
    return int(np.sum(np.abs(values) <= tol * top))


def gram_split_2x2(f: BlochForm, tol: float = RANK_TOL) -> GramSplit2x2:
    """Split the 2x2 Gram matrix into its G-only and (a, b)-only parts.

    Requires canonical form (G diagonal).  C_G is the Gram matrix of the
    state with a = b = 0; its six eigenvalues are 8 (mu_i + mu_j)^2 and
    8 (mu_i - mu_j)^2 over pairs i < j.  C_ab is block diagonal,
    8 (|a|^2 I - a a^T) on the first factor and 8 (|b|^2 I - b b^T) on the
    second, with eigenvalue pairs 8|a|^2, 8|b|^2 and two zeros.  The two
    parts are each positive semidefinite and sum to the full Gram matrix.
    """
    if (f.k, f.m) != (2, 2):
        raise ValueError(f"split is defined for 2x2 systems, got ({f.k},{f.m})")
    if np.max(np.abs(f.g - np.diag(np.diagonal(f.g)))) > 1e-12:
        raise ValueError("split requires a canonical (diagonal) G block")
    mu = np.diagonal(f.g)
    zero = np.zeros(3)
    c_g = gram_closed_form(BlochForm(2, 2, zero, zero, f.g), tol).matrix
    c_ab = np.zeros((6, 6))
    c_ab[:3, :3] = 8.0 * ((f.a @ f.a) * np.eye(3) - np.outer(f.a, f.a))
    c_ab[3:, 3:] = 8.0 * ((f.b @ f.b) * np.eye(3) - np.outer(f.b, f.b))
    pairs = [(0, 1), (0, 2), (1, 2)]
    rho = np.array(
        [8.0 * (mu[i] + mu[j]) ** 2 for i, j in pairs]
        + [8.0 * (mu[i] - mu[j]) ** 2 for i, j in pairs]
    )
    nu = np.array([8.0 * (f.a @ f.a)] * 2 + [8.0 * (f.b @ f.b)] * 2 + [0.0, 0.0])
    return GramSplit2x2(
        c_g=c_g,
        c_ab=c_ab,
        rho_eigs=rho,
        corank_cg=_corank(rho, tol),
        corank_cab=_corank(nu, tol),
    )


def b_block_residual(f: BlochForm) -> float:
    """Max-norm residual of the off-diagonal block identity
    B G^T = G^T B = -16 det(G) I for 2x2 Bloch forms (any G, not
    necessarily diagonal)."""
    if (f.k, f.m) != (2, 2):
        raise ValueError(f"the block identity is defined for 2x2 systems, got ({f.k},{f.m})")
    b = gram_closed_form(f).block_b
    target = -16.0 * np.linalg.det(f.g) * np.eye(3)
    return float(
        max(
            np.max(np.abs(b @ f.g.T - target)),
            np.max(np.abs(f.g.T @ b - target)),
        )
    )
