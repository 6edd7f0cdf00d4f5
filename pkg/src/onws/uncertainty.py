"""Sparsity of a signal in three bases and the uncertainty bounds tying them.

The bases are the standard basis (written as ``T_{Ak} e_alpha``), a verified
wavelet system ``T_{Am} phi_p`` and the Fourier basis ``F_v``.  Coefficient
counts use the cutoff ``|c| > threshold * ||f||``.

Count names:

* ``S_f``: nonzero standard coefficients ``t``
* ``W_f``: nonzero wavelet coefficients ``s``
* ``C_f``: nonzero Fourier coefficients ``w``
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .digits import DigitKind, DigitSet, digit_set
from .lattice import Point
from .spectral import as_signal, translate
from .wavelet import DegenerateDeterminant, WaveletError, WaveletFamily

BOUND_SLACK = 1e-12


class NotVerified(WaveletError):
    pass


class ZeroSignal(ValueError):
    pass


def fourier_basis_vector(N: int, v: Point) -> np.ndarray:
    """``F_v(n) = exp(2 pi i <n, v> / N) / N``."""
    return _fourier_rows(N)[(v[0] % N) * N + v[1] % N].reshape(N, N)


@lru_cache(maxsize=32)
def _fourier_rows(N: int) -> np.ndarray:
    idx = np.arange(N)
    n1, n2 = np.meshgrid(idx, idx, indexing="ij")
    n = np.stack([n1.ravel(), n2.ravel()], axis=1)
    phase = (n @ n.T) % N  # symmetric: row v, column n
    rows = np.exp(2j * np.pi * phase / N) / N
    rows.setflags(write=False)
    return rows


@dataclass
class ExpansionReport:
    """Coefficients of ``f`` in the three bases.

    ``t[j, k]`` pairs with ``T_{Ak} e_{alpha_j}``, ``s[p, m]`` with
    ``T_{Am} phi_p`` (``k``, ``m`` indexing the digit set), and ``w`` is an
    ``(N, N)`` grid indexed by ``v``.
    """

    t: np.ndarray
    s: np.ndarray
    w: np.ndarray
    S_f: int
    W_f: int
    C_f: int
    norm_sq: float
    threshold: float

    def counts(self) -> dict:
        return {"Sf": self.S_f, "Wf": self.W_f, "Cf": self.C_f}


def _standard_index(fam: WaveletFamily, d: DigitSet, d0: DigitSet) -> tuple[np.ndarray, np.ndarray]:
    key = ("std-index", d.points, d0.points)
    if key not in fam._cache:
        A, N = fam.ctx.A, fam.N
        pts = np.array([
            [((a[0] + Ak[0]) % N, (a[1] + Ak[1]) % N) for Ak in (A.apply(k, N) for k in d)]
            for a in d0
        ])
        fam._cache[key] = (pts[..., 0], pts[..., 1])
    return fam._cache[key]


def _digits(fam: WaveletFamily, d: DigitSet | None, d0: DigitSet | None) -> tuple[DigitSet, DigitSet]:
    d = fam.digits if d is None else d
    d0 = digit_set(fam.ctx, DigitKind.FOR_A) if d0 is None else d0
    if d.kind is not DigitKind.FOR_B or d0.kind is not DigitKind.FOR_A:
        raise ValueError("expected digit sets of kinds FOR_B and FOR_A")
    return d, d0


def expand(
    f,
    fam: WaveletFamily,
    d: DigitSet | None = None,
    d0: DigitSet | None = None,
    threshold: float = 1e-9,
    tol: float = 1e-9,
) -> ExpansionReport:
    """Expand ``f`` in the standard, wavelet and Fourier bases and count nonzeros."""
    if not fam.is_onws(tol):
        raise NotVerified("the generators do not form an orthonormal wavelet system")
    d, d0 = _digits(fam, d, d0)
    f = as_signal(f, fam.N)
    N = fam.N
    flat = f.ravel()

    i1, i2 = _standard_index(fam, d, d0)
    t = f[i1, i2]
    if d is fam.digits:
        s = (fam.basis.conj() @ flat).reshape(fam.q, len(d))
    else:
        rows = np.array([translate(phi, fam.ctx.A.apply(k, N)).ravel()
                         for phi in fam.generators for k in d])
        s = (rows.conj() @ flat).reshape(fam.q, len(d))
    w = (_fourier_rows(N).conj() @ flat).reshape(N, N)

    norm_sq = float(np.vdot(flat, flat).real)
    cut = threshold * np.sqrt(norm_sq)
    return ExpansionReport(
        t=t, s=s, w=w,
        S_f=int(np.count_nonzero(np.abs(t) > cut)),
        W_f=int(np.count_nonzero(np.abs(s) > cut)),
        C_f=int(np.count_nonzero(np.abs(w) > cut)),
        norm_sq=norm_sq,
        threshold=threshold,
    )


@dataclass
class LocalizationConstants:
    """``R0``: largest generator sample.  ``E0``: largest ``||phi_p||_1 / N``."""

    R0: float
    E0: float
    frequency_delocalized: bool

    def to_dict(self) -> dict:
        return {"R0": self.R0, "E0": self.E0, "frequencyDelocalized": self.frequency_delocalized}


def localization_constants(
    fam: WaveletFamily,
    d: DigitSet | None = None,
    d0: DigitSet | None = None,
    tol: float = 1e-9,
) -> LocalizationConstants:
    """Compute ``R0`` over the ``alpha + A beta`` tiling, and ``E0``.

    Both lie in ``[1/N, 1]`` for an orthonormal wavelet system.  ``R0 = 1``
    means some generator is a phase times a standard basis vector, whose
    spectrum is flat; the flag ``frequency_delocalized`` marks that case.
    """
    if fam.q < 2:
        raise DegenerateDeterminant("localization constants need |det A| >= 2")
    d, d0 = _digits(fam, d, d0)
    i1, i2 = _standard_index(fam, d, d0)
    gens = np.stack(fam.generators)
    R0 = float(np.abs(gens[:, i1, i2]).max())
    E0 = float(np.abs(gens).sum(axis=(1, 2)).max() / fam.N)
    return LocalizationConstants(R0=R0, E0=E0, frequency_delocalized=abs(R0 - 1.0) <= tol)


@dataclass
class BoundCheck:
    name: str
    observed: float
    bound: float

    @property
    def passed(self) -> bool:
        return self.observed >= self.bound - BOUND_SLACK

    def to_dict(self) -> dict:
        return {"name": self.name, "observed": self.observed, "bound": self.bound,
                "passed": self.passed}


def check_uncertainty(report: ExpansionReport, consts: LocalizationConstants) -> list[BoundCheck]:
    """Evaluate the four sparsity bounds for one expansion.

    The integer floors 2 and 3 in the standard/wavelet pair rely on
    ``R0 < 1``; with ``R0 = 1`` a generator expanded in its own system
    gives ``S_f = W_f = 1``.
    """
    if report.norm_sq == 0:
        raise ZeroSignal("uncertainty bounds need a nonzero signal")
    S, W, C = report.S_f, report.W_f, report.C_f
    R0, E0 = consts.R0, consts.E0
    return [
        BoundCheck("Sf*Wf", S * W, max(2.0, 1.0 / R0 ** 2)),
        BoundCheck("Sf+Wf", S + W, max(3.0, 2.0 / R0)),
        BoundCheck("Cf*Wf", C * W, 1.0 / E0 ** 2),
        BoundCheck("Cf+Wf", C + W, 2.0 / E0),
    ]


def random_signal(N: int, rng: np.random.Generator) -> np.ndarray:
    return rng.standard_normal((N, N)) + 1j * rng.standard_normal((N, N))


def bound_sweep(
    fam: WaveletFamily,
    count: int,
    seed: int,
    threshold: float = 1e-9,
) -> tuple[LocalizationConstants, list[dict]]:
    """Check all four bounds on ``count`` seeded random signals.

    Signal ``i`` is drawn from ``default_rng([seed, i])``, so results do not
    depend on evaluation order.
    """
    consts = localization_constants(fam)
    results = []
    for i in range(count):
        f = random_signal(fam.N, np.random.default_rng([seed, i]))
        rep = expand(f, fam, threshold=threshold)
        checks = check_uncertainty(rep, consts)
        results.append({"index": i, **rep.counts(), "bounds": [c.to_dict() for c in checks],
                        "passed": all(c.passed for c in checks)})
    return consts, results
