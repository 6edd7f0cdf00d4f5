"""Checking and building orthonormal wavelet systems.

A family of q generators gives the N^2 vectors T_{Ak} phi_p.  They form an
orthonormal basis exactly when every q x q system matrix is unitary.

Run with ``python demos/03_verify_and_construct.py``.
"""

import numpy as np

from onws import catalog
from onws.digits import digit_set
from onws.lattice import IntMatrix2, make_dilation
from onws.wavelet import (
    construct_onws, construct_single_generator, random_unitary, system_matrix,
    translation_gram_deviation, verify_onws, verify_onws_gram, verify_single_generator,
)

# Two generators on Z_2^2
fam = catalog.example_family("2.12i")
print(fam.generators[0])
print(system_matrix(fam, (0, 1)))
print(verify_onws(fam).to_dict())
print(verify_onws_gram(fam).to_dict())

# The stored four-generator example fails on one frequency coset.
bad = catalog.example_family("2.12ii")
report = verify_onws(bad)
print(report.is_onws, report.max_unitarity_deviation, report.witness)

# Build a system from one unitary per frequency digit.
ctx = make_dilation(6, IntMatrix2(2, 0, 0, 3))
rng = np.random.default_rng(1)
dstar = digit_set(ctx, "D*")
built = construct_onws(ctx, dstar, {m: random_unitary(ctx.q, rng) for m in dstar})
print("q =", built.q, "generators, gram deviation", verify_onws_gram(built).max_gram_deviation)

# With |det A| = 1 a single generator suffices iff its spectrum is unimodular
phi = construct_single_generator(5, rng.uniform(0, 2 * np.pi, (5, 5)))
print(verify_single_generator(phi), translation_gram_deviation(phi))
