"""Signals on Z_N^2 and their discrete Fourier transform.

A signal is an ``(N, N)`` complex array whose entry ``[n1, n2]`` is
``f((n1, n2))``, so row index is the first lattice coordinate.

Conventions::

    dft(f)(m)  = sum_s f(s) exp(-2 pi i <m, s> / N)
    idft(g)(n) = N^-2 sum_l g(l) exp(+2 pi i <n, l> / N)
    <f, g>     = sum_n f(n) conj(g(n))
"""

from __future__ import annotations

import numpy as np

from .lattice import Point


class SizeMismatch(ValueError):
    pass


def as_signal(f, N: int | None = None) -> np.ndarray:
    """Coerce ``f`` to a square complex grid, checking shape and finiteness."""
    arr = np.asarray(f, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise SizeMismatch(f"signal must be a square N x N grid, got shape {arr.shape}")
    if N is not None and arr.shape[0] != N:
        raise SizeMismatch(f"signal has N={arr.shape[0]}, expected N={N}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("signal contains NaN or Inf")
    return arr


def delta(N: int, at: Point = (0, 0)) -> np.ndarray:
    f = np.zeros((N, N), dtype=complex)
    f[at[0] % N, at[1] % N] = 1.0
    return f


def dft(f) -> np.ndarray:
    # numpy's unnormalized forward fft2 is exactly the convention above
    return np.fft.fft2(as_signal(f))


def idft(g) -> np.ndarray:
    return np.fft.ifft2(as_signal(g))


def _kernel(N: int, sign: int) -> np.ndarray:
    idx = np.arange(N)
    phase = np.outer(idx, idx) % N  # exact integer reduction before scaling
    return np.exp(sign * 2j * np.pi * phase / N)


def dft_direct(f) -> np.ndarray:
    """Reference transform: the plain double sum, one output entry at a time."""
    f = as_signal(f)
    N = f.shape[0]
    W = _kernel(N, -1)
    out = np.empty((N, N), dtype=complex)
    for m1 in range(N):
        for m2 in range(N):
            out[m1, m2] = np.sum(f * np.outer(W[m1], W[m2]))
    return out


def idft_direct(g) -> np.ndarray:
    g = as_signal(g)
    N = g.shape[0]
    W = _kernel(N, 1)
    out = np.empty((N, N), dtype=complex)
    for n1 in range(N):
        for n2 in range(N):
            out[n1, n2] = np.sum(g * np.outer(W[n1], W[n2]))
    return out / (N * N)


def translate(f, k: Point) -> np.ndarray:
    """``T_k f(m) = f(m - k)``; an exact permutation of entries."""
    f = as_signal(f)
    N = f.shape[0]
    return np.roll(f, shift=(k[0] % N, k[1] % N), axis=(0, 1))


def inner(f, g) -> complex:
    f, g = as_signal(f), as_signal(g)
    if f.shape != g.shape:
        raise SizeMismatch(f"cannot pair N={f.shape[0]} with N={g.shape[0]}")
    return complex(np.vdot(g, f))


def norm(f) -> float:
    return float(np.linalg.norm(as_signal(f)))


def modulation(N: int, k: Point) -> np.ndarray:
    """Grid ``exp(-2 pi i <m, k> / N)`` over ``m``, the DFT factor of ``T_k``."""
    idx = np.arange(N)
    phase = (np.outer(idx, np.ones(N, dtype=int)) * k[0] + idx[None, :] * k[1]) % N
    return np.exp(-2j * np.pi * phase / N)
