"""The 2-D DFT, translations and the modulation law.

Run with ``python demos/02_dft_and_translations.py``.
"""

import numpy as np

from onws.spectral import delta, dft, dft_direct, idft, inner, modulation, norm, translate

N = 6
rng = np.random.default_rng(0)
f = rng.standard_normal((N, N)) + 1j * rng.standard_normal((N, N))

# the fast transform agrees with the direct double sum
print("fft vs direct:", np.abs(dft(f) - dft_direct(f)).max())

# delta transforms to the constant 1, and back
print(np.allclose(dft(delta(N)), 1), np.allclose(idft(np.ones((N, N))), delta(N)))

# Plancherel: <f, g> = <F, G> / N^2
g = rng.standard_normal((N, N))
print(inner(f, g), inner(dft(f), dft(g)) / N**2)

# translation is a cyclic shift: (T_k f)(m) = f(m - k)
k = (2, 5)
Tf = translate(f, k)
print(Tf[2, 5] == f[0, 0], norm(Tf) - norm(f))

# and it becomes a phase factor on the spectrum
print(np.abs(dft(Tf) - modulation(N, k) * dft(f)).max())
