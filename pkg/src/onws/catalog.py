"""Built-in worked examples, keyed ``"2.8"``, ``"2.12i"`` and ``"2.12ii"``.

``"2.8"`` defines a dilation and its digits only.  ``"2.12i"`` stores two
generators on Z_2^2 in the signal domain; ``"2.12ii"`` stores four spectra on
Z_4^2, inverse-transformed at load time.  All values are kept exactly as
published.

The published ``"2.12ii"`` spectra are not an orthonormal wavelet system:
on the frequency coset of ``(0, 2)`` the system-matrix columns for ``p = 1``
and ``p = 2`` are not orthogonal.  Four different single-entry edits would
repair it, so no correction is applied.
"""

from __future__ import annotations

import numpy as np

from .lattice import DilationContext, IntMatrix2, make_dilation
from .wavelet import WaveletFamily

_S = np.sqrt(2.0)
_H = 1.0 / np.sqrt(2.0)
_I = 1j

NAMES = ("2.8", "2.12i", "2.12ii")

MATRICES = {
    "2.8": (2, IntMatrix2(2, 2, 1, 2)),
    "2.12i": (2, IntMatrix2(2, 2, 1, 2)),
    "2.12ii": (4, IntMatrix2(3, -1, 1, 1)),
}

EXAMPLE_2_12I_SIGNALS = (
    np.array([[_H, 0], [_H, 0]], dtype=complex),
    np.array([[_H, 0], [-_H, 0]], dtype=complex),
)

EXAMPLE_2_12I_SPECTRA = (
    np.array([[_S, _S], [0, 0]], dtype=complex),
    np.array([[0, 0], [_S, _S]], dtype=complex),
)

EXAMPLE_2_12II_SPECTRA = (
    np.array([
        [_S, 0, _S * _I, 0],
        [-_S * _I, 0, -_S, 0],
        [0, 1 - _I, 0, -_S],
        [0, _S, 0, -1 - _I],
    ]),
    np.array([
        [0, _S, 0, _S],
        [0, _S * _I, 0, -_S * _I],
        [-_S, 0, _S * _I, 0],
        [_S * _I, 0, _S, 0],
    ]),
    np.array([
        [0, _S * _I, 0, _S * _I],
        [0, -1 + _I, 0, 1 - _I],
        [-_S * _I, 0, 1 - _I, 0],
        [_S, 0, -_S * _I, 0],
    ]),
    np.array([
        [-1 - _I, 0, 1 - _I, 0],
        [1 + _I, 0, 1 - _I, 0],
        [0, -_S * _I, 0, -1 + _I],
        [0, 1 + _I, 0, -_S * _I],
    ]),
)


def _check(name: str) -> None:
    if name not in NAMES:
        raise KeyError(f"unknown example {name!r}; choose from {', '.join(NAMES)}")


def example_context(name: str) -> DilationContext:
    _check(name)
    N, A = MATRICES[name]
    return make_dilation(N, A)


def example_family(name: str) -> WaveletFamily:
    _check(name)
    if name == "2.8":
        raise KeyError("\"2.8\" defines digits only, no generators")
    ctx = example_context(name)
    if name == "2.12i":
        return WaveletFamily(ctx, EXAMPLE_2_12I_SIGNALS)
    return WaveletFamily.from_spectra(ctx, EXAMPLE_2_12II_SPECTRA)
