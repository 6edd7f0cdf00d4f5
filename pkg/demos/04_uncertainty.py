"""Sparsity in three bases at once.

A signal cannot be sparse in the standard basis, a wavelet basis and the
Fourier basis all together.  R0 and E0 control how far this goes.

Run with ``python demos/04_uncertainty.py``.
"""

import numpy as np

from onws import catalog
from onws.spectral import delta
from onws.uncertainty import (
    bound_sweep, check_uncertainty, expand, fourier_basis_vector, localization_constants,
)

fam = catalog.example_family("2.12i")
consts = localization_constants(fam)
print(consts.to_dict())

# S_f counts standard coefficients, W_f wavelet coefficients, C_f Fourier ones
for label, f in [("phi_0", fam.generators[0]),
                 ("delta", delta(2)),
                 ("flat", fourier_basis_vector(2, (0, 0)))]:
    rep = expand(f, fam)
    print(label, rep.counts())

# phi_0 meets S_f * W_f >= max(2, 1 / R0^2) with equality
for check in check_uncertainty(expand(fam.generators[0], fam), consts):
    print(check.to_dict())

# dense random signals never come close
_, results = bound_sweep(fam, 200, seed=0)
print(sum(r["passed"] for r in results), "of", len(results), "signals within bounds")
print(np.mean([r["Wf"] for r in results]))
