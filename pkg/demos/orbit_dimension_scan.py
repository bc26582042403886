"""Histogram local-orbit dimensions of random mixed states.

A generic density matrix of a K x M system has a local orbit of dimension
K^2 + M^2 - 2: both marginal rotations act freely except for the two
overall phases.  Degenerate spectra or special alignments shrink the
orbit.  We draw random mixed states for several bipartitions, compute the
Gram-matrix rank, cross-check it against an independent tangent-space
oracle, and report how often the generic dimension is attained.
"""

import collections

import numpy as np

from orbit_atlas import gram_direct, local_orbit_dim, orbit_dim_oracle, random_state

rng = np.random.default_rng(11)
SAMPLES = 200

for k, m in [(2, 2), (2, 3), (3, 3)]:
    generic = k * k + m * m - 2
    counts: collections.Counter = collections.Counter()
    disagreements = 0
    for _ in range(SAMPLES):
        w = random_state("mixed", k, m, rng)
        rep = gram_direct(w)
        d = local_orbit_dim(rep)
        counts[d] += 1
        disagreements += d != orbit_dim_oracle(w)
    frac = counts[generic] / SAMPLES
    print(f"({k},{m}): generic dimension {generic}, attained by "
          f"{counts[generic]}/{SAMPLES} samples (fraction {frac:.3f})")
    print(f"       dimension histogram {dict(sorted(counts.items()))}, "
          f"oracle disagreements: {disagreements}")

print()
print("Full-rank spectra are generic for every continuous ensemble, so the")
print("fraction is 1.0; lower dimensions form measure-zero strata that the")
print("closed-form families in orbit_atlas.submaximal parametrize exactly.")
