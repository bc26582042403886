"""Bipartite states: density matrices, Bloch forms, standard families, IO.

A state of a K x M system is stored together with its bipartition, since
every orbit quantity in this package depends on the split.  The Bloch form
writes a density matrix over the product generator basis,

    W = I/(KM) + i a_k (e_k x I) + i b_alpha (I x f_alpha)
        + G_{k alpha} (e_k x f_alpha),

with e_k, f_alpha the su(K)/su(M) generators from :mod:`orbit_atlas.algebra`
(antihermitian, Tr(e_j e_k) = -2 delta_jk).  The coefficients a, b, G are
real exactly when W is Hermitian.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .algebra import su_generators

__all__ = [
    "DensityMatrix",
    "PureState",
    "BlochForm",
    "validate_density",
    "pure_density",
    "maximally_mixed",
    "compose_bloch",
    "decompose_bloch",
    "schmidt_vector",
    "werner_state",
    "random_state",
    "haar_unitary",
    "random_su2",
    "random_local_unitary",
    "apply_local_unitary",
    "swap_sides",
    "state_to_json",
    "state_from_json",
    "bloch_to_json",
    "bloch_from_json",
]

PSD_TOL = 1e-10


@dataclass(frozen=True)
class DensityMatrix:
    """A (k*m, k*m) Hermitian matrix with a declared bipartition."""

    k: int
    m: int
    matrix: np.ndarray

    def __post_init__(self) -> None:
        mat = np.asarray(self.matrix, dtype=complex)
        n = self.k * self.m
        if self.k < 2 or self.m < 2:
            raise ValueError(f"bipartition ({self.k},{self.m}) needs both factors >= 2")
        if mat.shape != (n, n):
            raise ValueError(f"matrix shape {mat.shape} does not fit bipartition ({self.k},{self.m})")
        object.__setattr__(self, "matrix", mat)

    @property
    def dim(self) -> int:
        return self.k * self.m


@dataclass(frozen=True)
class PureState:
    """A unit vector in C^k x C^m, stored in the product basis |i m + j>."""

    k: int
    m: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amp = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amp.shape != (self.k * self.m,):
            raise ValueError(f"amplitude length {amp.shape} does not fit bipartition ({self.k},{self.m})")
        nrm = np.linalg.norm(amp)
        if abs(nrm - 1.0) > 1e-8:
            raise ValueError(f"pure state must be normalized, got norm {nrm}")
        object.__setattr__(self, "amplitudes", amp)


@dataclass(frozen=True)
class BlochForm:
    """Coefficients (a, b, G) of a density matrix over the product generator basis."""

    k: int
    m: int
    a: np.ndarray
    b: np.ndarray
    g: np.ndarray

    def __post_init__(self) -> None:
        a = np.asarray(self.a, dtype=float).reshape(-1)
        b = np.asarray(self.b, dtype=float).reshape(-1)
        g = np.asarray(self.g, dtype=float)
        da, db = self.k**2 - 1, self.m**2 - 1
        if a.shape != (da,) or b.shape != (db,) or g.shape != (da, db):
            raise ValueError(
                f"Bloch coefficient shapes {a.shape}, {b.shape}, {g.shape} do not fit ({self.k},{self.m})"
            )
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "g", g)


@lru_cache(maxsize=16)
def _gens(n: int) -> tuple[np.ndarray, ...]:
    return tuple(su_generators(n))


def validate_density(w: DensityMatrix, tol: float = PSD_TOL) -> None:
    """Raise ValueError unless w is Hermitian, unit trace, and PSD within tol."""
    mat = w.matrix
    if np.max(np.abs(mat - mat.conj().T)) > 1e-8:
        raise ValueError("matrix is not Hermitian")
    tr = np.trace(mat).real
    if abs(tr - 1.0) > 1e-8:
        raise ValueError(f"trace is {tr}, expected 1")
    low = np.linalg.eigvalsh(mat).min()
    if low < -tol:
        raise ValueError(f"matrix is not positive semidefinite (min eigenvalue {low})")


def pure_density(w: PureState) -> DensityMatrix:
    """Projector |w><w| as a DensityMatrix."""
    return DensityMatrix(w.k, w.m, np.outer(w.amplitudes, w.amplitudes.conj()))


def maximally_mixed(k: int, m: int) -> DensityMatrix:
    """The state I/(k m)."""
    return DensityMatrix(k, m, np.eye(k * m, dtype=complex) / (k * m))


def compose_bloch(f: BlochForm) -> DensityMatrix:
    """Build the density matrix of a Bloch form."""
    k, m = f.k, f.m
    ek, fa = _gens(k), _gens(m)
    ik, im = np.eye(k, dtype=complex), np.eye(m, dtype=complex)
    w = np.eye(k * m, dtype=complex) / (k * m)
    for j, aj in enumerate(f.a):
        if aj != 0.0:
            w += 1j * aj * np.kron(ek[j], im)
    for al, bal in enumerate(f.b):
        if bal != 0.0:
            w += 1j * bal * np.kron(ik, fa[al])
    for j in range(len(ek)):
        for al in range(len(fa)):
            gj = f.g[j, al]
            if gj != 0.0:
                w += gj * np.kron(ek[j], fa[al])
    return DensityMatrix(k, m, w)


def decompose_bloch(w: DensityMatrix) -> BlochForm:
    """Project a density matrix onto the product generator basis.

    Uses the trace orthogonality of the basis:
    a_j = Tr(W (e_j x I)) / (-2 i M), b_alpha = Tr(W (I x f_alpha)) / (-2 i K),
    G_{j alpha} = Tr(W (e_j x f_alpha)) / 4.
    """
    k, m = w.k, w.m
    ek, fa = _gens(k), _gens(m)
    ik, im = np.eye(k, dtype=complex), np.eye(m, dtype=complex)
    mat = w.matrix
    a = np.array([(np.trace(mat @ np.kron(e, im)) / (-2j * m)).real for e in ek])
    b = np.array([(np.trace(mat @ np.kron(ik, f)) / (-2j * k)).real for f in fa])
    g = np.array(
        [[(np.trace(mat @ np.kron(e, f)) / 4.0).real for f in fa] for e in ek]
    )
    return BlochForm(k, m, a, b, g)


def schmidt_vector(theta: float) -> PureState:
    """The 2x2 pure state cos(theta/2)|00> + sin(theta/2)|11> for theta in [0, pi/2]."""
    if not 0.0 <= theta <= np.pi / 2 + 1e-12:
        raise ValueError(f"theta must lie in [0, pi/2], got {theta}")
    return PureState(2, 2, np.array([np.cos(theta / 2), 0.0, 0.0, np.sin(theta / 2)]))


def werner_state(x: float, theta: float = np.pi / 2) -> DensityMatrix:
    """Mixture x |psi_theta><psi_theta| + (1 - x) I/4 on a 2x2 system."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"mixing weight x must lie in [0, 1], got {x}")
    psi = schmidt_vector(theta).amplitudes
    mat = x * np.outer(psi, psi.conj()) + (1.0 - x) * np.eye(4, dtype=complex) / 4.0
    return DensityMatrix(2, 2, mat)


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def haar_unitary(n: int, seed=None) -> np.ndarray:
    """Haar-distributed U(n) matrix via QR of a complex Ginibre sample."""
    rng = _rng(seed)
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_su2(seed=None) -> np.ndarray:
    """Haar-distributed SU(2) matrix from a uniform point on the 3-sphere."""
    rng = _rng(seed)
    q = rng.standard_normal(4)
    q /= np.linalg.norm(q)
    return np.array(
        [
            [q[0] + 1j * q[3], q[2] + 1j * q[1]],
            [-q[2] + 1j * q[1], q[0] - 1j * q[3]],
        ]
    )


def random_local_unitary(k: int, m: int, seed=None) -> np.ndarray:
    """Product unitary U_A x U_B with independent Haar factors."""
    rng = _rng(seed)
    return np.kron(haar_unitary(k, rng), haar_unitary(m, rng))


def apply_local_unitary(w: DensityMatrix, u: np.ndarray) -> DensityMatrix:
    """Conjugate a state by a (k*m, k*m) unitary, keeping the bipartition."""
    return DensityMatrix(w.k, w.m, u @ w.matrix @ u.conj().T)


def swap_sides(f: BlochForm) -> BlochForm:
    """Bloch form of the same state with the two subsystems exchanged."""
    return BlochForm(f.m, f.k, f.b, f.a, f.g.T)


def random_state(kind: str, k: int, m: int, seed=None):
    """Sample a random state of a K x M system.

    kind="pure": Haar-uniform unit vector (returned as PureState).
    kind="mixed": Hilbert-Schmidt sample G G^dag / Tr(G G^dag) with G a
    square complex Ginibre matrix (returned as DensityMatrix).
    A fixed integer seed gives a reproducible sample.
    """
    rng = _rng(seed)
    n = k * m
    if kind == "pure":
        amp = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        amp /= np.linalg.norm(amp)
        return PureState(k, m, amp)
    if kind == "mixed":
        g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        mat = g @ g.conj().T
        return DensityMatrix(k, m, mat / np.trace(mat).real)
    raise ValueError(f"unknown state kind {kind!r}; expected 'pure' or 'mixed'")


def state_to_json(w: DensityMatrix, indent: int | None = None) -> str:
    """Serialize a density matrix as JSON with [re, im] entry pairs."""
    mat = [[[float(z.real), float(z.imag)] for z in row] for row in w.matrix]
    return json.dumps({"k": w.k, "m": w.m, "matrix": mat}, indent=indent)


def state_from_json(payload) -> DensityMatrix:
    """Parse a density matrix from a JSON string or a decoded dict."""
    data = json.loads(payload) if isinstance(payload, (str, bytes)) else payload
    try:
        k, m = int(data["k"]), int(data["m"])
        raw = data["matrix"]
        mat = np.array([[complex(re, im) for re, im in row] for row in raw])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed state payload: {exc}") from exc
    return DensityMatrix(k, m, mat)


def bloch_to_json(f: BlochForm, indent: int | None = None) -> str:
    """Serialize a Bloch form as JSON with plain real arrays."""
    return json.dumps(
        {
            "k": f.k,
            "m": f.m,
            "a": [float(x) for x in f.a],
            "b": [float(x) for x in f.b],
            "g": [[float(x) for x in row] for row in f.g],
        },
        indent=indent,
    )


def bloch_from_json(payload) -> BlochForm:
    """Parse a Bloch form from a JSON string or a decoded dict."""
    data = json.loads(payload) if isinstance(payload, (str, bytes)) else payload
    try:
        return BlochForm(
            int(data["k"]), int(data["m"]),
            np.asarray(data["a"], dtype=float),
            np.asarray(data["b"], dtype=float),
            np.asarray(data["g"], dtype=float),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed Bloch payload: {exc}") from exc
