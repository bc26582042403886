"""su(n) generator bases, structure constants, and bipartite index plumbing.

The generator basis used throughout the package is ``i`` times the
generalized Gell-Mann matrices, ordered as: symmetric off-diagonal,
antisymmetric off-diagonal, diagonal.  All generators are antihermitian,
traceless, and normalized so that ``Tr(e_j e_k) = -2 delta_jk``.  For
``n = 2`` this is exactly ``{i*sigma_x, i*sigma_y, i*sigma_z}``.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "su_generators",
    "structure_constants",
    "commutator",
    "partial_transpose",
]


def su_generators(n: int) -> list[np.ndarray]:
    """Return the n^2 - 1 generators of su(n) as (n, n) complex arrays.

    Ordering: for each index pair (j, k) with j < k in lexicographic order,
    the symmetric generator i*(E_jk + E_kj); then the antisymmetric
    generators E_jk - E_kj for the same pairs; then the n - 1 diagonal
    generators i*sqrt(2/(l(l+1))) * diag(1, ..., 1, -l, 0, ..., 0).
    """
    if n < 2:
        raise ValueError(f"su(n) requires n >= 2, got n={n}")
    gens: list[np.ndarray] = []
    for j in range(n):
        for k in range(j + 1, n):
            g = np.zeros((n, n), dtype=complex)
            g[j, k] = 1j
            g[k, j] = 1j
            gens.append(g)
    for j in range(n):
        for k in range(j + 1, n):
            g = np.zeros((n, n), dtype=complex)
            g[j, k] = 1.0
            g[k, j] = -1.0
            gens.append(g)
    for l in range(1, n):
        d = np.zeros(n, dtype=complex)
        d[:l] = 1.0
        d[l] = -l
        gens.append(1j * np.sqrt(2.0 / (l * (l + 1))) * np.diag(d))
    return gens


def commutator(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Matrix commutator [x, y] = xy - yx."""
    return x @ y - y @ x


def structure_constants(gens: list[np.ndarray]) -> np.ndarray:
    """Structure constants c[j, k, l] = -1/2 Tr([e_j, e_k] e_l).

    With the normalization Tr(e_j e_k) = -2 delta_jk this makes
    [e_j, e_k] = c[j, k, l] e_l.  The result is real and totally
    antisymmetric; for su(2) it equals -2 * epsilon_{jkl}.
    """
    d = len(gens)
    stack = np.array(gens)
    comms = np.einsum("jab,kbc->jkac", stack, stack) - np.einsum(
        "kab,jbc->jkac", stack, stack
    )
    c = -0.5 * np.einsum("jkab,lba->jkl", comms, stack)
    if np.max(np.abs(c.imag)) > 1e-12:
        raise ValueError("structure constants are not real; generator basis is inconsistent")
    return np.ascontiguousarray(c.real.reshape(d, d, d))


def partial_transpose(matrix: np.ndarray, k: int, m: int) -> np.ndarray:
    """Partial transpose on the second factor of a (k*m, k*m) matrix."""
    matrix = np.asarray(matrix)
    n = k * m
    if matrix.shape != (n, n):
        raise ValueError(f"expected a {n}x{n} matrix for bipartition ({k},{m}), got {matrix.shape}")
    return (
        matrix.reshape(k, m, k, m).transpose(0, 3, 2, 1).reshape(n, n).copy()
    )
