"""Orthonormal wavelet systems ``{T_{Ak} phi_p : k in D, 0 <= p < q}`` on Z_N^2.

Two independent verification routes are provided:

* :func:`verify_onws` checks that the ``q x q`` system matrix
  ``S(k)[i, p] = phi_hat_p(k + gamma_i) / sqrt(q)``, ``gamma_i in C Z_N^2``,
  is unitary for every frequency ``k``.
* :func:`verify_onws_gram` builds all ``N^2`` translated generators and
  compares their Gram matrix with the identity.

The two must agree; the second is the brute-force oracle for the first.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .digits import DigitKind, DigitSet, digit_set
from .lattice import DilationContext, Point, all_points
from .spectral import as_signal, dft, idft, translate


class WaveletError(ValueError):
    pass


class WrongGeneratorCount(WaveletError):
    pass


class DegenerateDeterminant(WrongGeneratorCount):
    """``q = |det A| = 1``: use the single-generator functions instead."""


class NotUnitary(WaveletError):
    def __init__(self, m: Point, deviation: float):
        super().__init__(f"matrix at m={m} deviates from unitary by {deviation:.3e}")
        self.m = m
        self.deviation = deviation


@dataclass(frozen=True, eq=False)
class WaveletFamily:
    """Generators ``phi_0, ..., phi_{q-1}`` for a dilation context."""

    ctx: DilationContext
    generators: tuple[np.ndarray, ...]
    _cache: dict = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        gens = []
        for g in self.generators:
            g = as_signal(g, self.ctx.N).copy()
            g.setflags(write=False)
            gens.append(g)
        if len(gens) != self.ctx.q:
            raise WrongGeneratorCount(
                f"{len(gens)} generators given, |det A| = {self.ctx.q} required"
            )
        object.__setattr__(self, "generators", tuple(gens))

    @classmethod
    def from_spectra(cls, ctx: DilationContext, spectra) -> "WaveletFamily":
        return cls(ctx, tuple(idft(s) for s in spectra))

    @property
    def N(self) -> int:
        return self.ctx.N

    @property
    def q(self) -> int:
        return self.ctx.q

    @cached_property
    def spectra(self) -> np.ndarray:
        """Stacked DFTs, shape ``(q, N, N)``."""
        return np.stack([dft(g) for g in self.generators])

    @cached_property
    def digits(self) -> DigitSet:
        return digit_set(self.ctx, DigitKind.FOR_B)

    @cached_property
    def basis(self) -> np.ndarray:
        """All ``T_{Ak} phi_p`` flattened to rows, ``p``-major then ``k`` in digit order."""
        ctx = self.ctx
        rows = [
            translate(phi, ctx.A.apply(k, ctx.N)).ravel()
            for phi in self.generators
            for k in self.digits
        ]
        return np.array(rows)

    def is_onws(self, tol: float = 1e-9) -> bool:
        """Cached result of the characterization check at ``tol``."""
        key = ("onws", tol)
        if key not in self._cache:
            if self.q == 1:
                self._cache[key] = verify_single_generator(self.generators[0], tol)
            else:
                self._cache[key] = verify_onws(self, tol).is_onws
        return self._cache[key]


@dataclass
class VerificationReport:
    """Result of one verification route.

    ``max_unitarity_deviation`` is ``max_k |S(k)^* S(k) - I|`` and
    ``max_condition_deviation`` the same quantity for the raw coset sums
    (``q`` times larger).  ``max_gram_deviation`` is ``max |G - I|`` over the
    Gram matrix of the translated system.  Fields a route does not compute
    are ``None``.
    """

    is_onws: bool
    method: str
    tol: float
    max_unitarity_deviation: float | None = None
    max_condition_deviation: float | None = None
    max_gram_deviation: float | None = None
    witness: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "isONWS": self.is_onws,
            "method": self.method,
            "tol": self.tol,
            "maxUnitarityDeviation": self.max_unitarity_deviation,
            "maxConditionDeviation": self.max_condition_deviation,
            "maxGramDeviation": self.max_gram_deviation,
            "worstWitness": self.witness,
        }


def _require_multi(fam: WaveletFamily) -> None:
    if fam.q < 2:
        raise DegenerateDeterminant(
            "|det A| = 1: the system is {T_k phi_0}; use verify_single_generator"
        )
    if len(fam.generators) != fam.q:
        raise WrongGeneratorCount(f"{len(fam.generators)} generators, q = {fam.q}")


def _gather(fam: WaveletFamily, ks: np.ndarray) -> np.ndarray:
    """``out[j, i, p] = phi_hat_p(ks[j] + gamma_i)`` for ``gamma_i`` in ``C Z_N^2``."""
    N = fam.N
    gam = np.array(fam.ctx.image_C.points, dtype=np.int64)
    idx = (ks[:, None, :] + gam[None, :, :]) % N
    # spectra[p, a, b] -> (len(ks), q_gamma, q_p)
    return fam.spectra[:, idx[..., 0], idx[..., 1]].transpose(1, 2, 0)


def system_matrix(fam: WaveletFamily, k: Point) -> np.ndarray:
    """Return ``S(k)``: rows follow ``C Z_N^2`` in lexicographic order, columns ``p``."""
    k = np.array([k], dtype=np.int64)
    return _gather(fam, k)[0] / np.sqrt(fam.q)


def condition_sums(fam: WaveletFamily, k: Point) -> np.ndarray:
    """``Psi[p1, p2] = sum_gamma phi_hat_p1(k+gamma) conj(phi_hat_p2(k+gamma))``."""
    vals = _gather(fam, np.array([k], dtype=np.int64))[0]
    return vals.T @ vals.conj()


def verify_onws(fam: WaveletFamily, tol: float = 1e-9, chunk: int = 256) -> VerificationReport:
    """Characterization check: unitarity of ``S(k)`` for every ``k`` in Z_N^2.

    The coset sums are ``C Z_N^2``-periodic in ``k``, so covering all of
    Z_N^2 covers every frequency coset.
    """
    _require_multi(fam)
    N, q = fam.N, fam.q
    ks = np.array(all_points(N), dtype=np.int64)
    eye = np.eye(q)
    upper = np.triu(np.ones((q, q), dtype=bool))
    best_u = best_c = -1.0
    witness: dict = {}
    for start in range(0, len(ks), chunk):
        block = _gather(fam, ks[start:start + chunk])
        psi = np.einsum("jip,jiq->jpq", block, block.conj())
        cond = np.abs(psi - q * eye)
        S = block / np.sqrt(q)
        unit = np.abs(np.conj(S.transpose(0, 2, 1)) @ S - eye)
        best_c = max(best_c, float(cond.max()))
        masked = np.where(upper, unit, -1.0)
        flat = int(np.argmax(masked))  # first max = lexicographically smallest witness
        j, p1, p2 = np.unravel_index(flat, masked.shape)
        if masked[j, p1, p2] > best_u:
            best_u = float(masked[j, p1, p2])
            k = ks[start + j]
            witness = {"k": [int(k[0]), int(k[1])], "p1": int(p1), "p2": int(p2)}
    return VerificationReport(
        is_onws=best_u <= tol and best_c <= q * tol,
        method="system-matrix",
        tol=tol,
        max_unitarity_deviation=best_u,
        max_condition_deviation=best_c,
        witness=witness,
    )


def verify_onws_gram(fam: WaveletFamily, d: DigitSet | None = None, tol: float = 1e-9) -> VerificationReport:
    """Brute-force oracle: ``<T_{Am} phi_p1, T_{Ak} phi_p2> = delta_p1p2 delta_mk``.

    ``N^2`` orthonormal vectors in an ``N^2``-dimensional space are a basis,
    so no separate completeness check is needed.
    """
    _require_multi(fam)
    if d is not None and d.kind is not DigitKind.FOR_B:
        raise ValueError("Gram oracle needs the digit set for B Z_N^2")
    d = d if d is not None else fam.digits
    ctx = fam.ctx
    V = np.array([
        translate(phi, ctx.A.apply(k, ctx.N)).ravel()
        for phi in fam.generators
        for k in d
    ])
    G = V @ V.conj().T
    dev = np.abs(G - np.eye(len(V)))
    flat = int(np.argmax(dev))
    i, j = np.unravel_index(flat, dev.shape)
    r = len(d)
    witness = {
        "p1": int(i // r), "m": list(d.points[i % r]),
        "p2": int(j // r), "k": list(d.points[j % r]),
    }
    worst = float(dev[i, j])
    return VerificationReport(
        is_onws=worst <= tol and len(V) == ctx.N ** 2,
        method="gram",
        tol=tol,
        max_gram_deviation=worst,
        witness=witness,
    )


def random_unitary(q: int, rng: np.random.Generator) -> np.ndarray:
    """Gaussian complex matrix orthonormalized column by column (modified Gram-Schmidt)."""
    Q = rng.standard_normal((q, q)) + 1j * rng.standard_normal((q, q))
    for j in range(q):
        for i in range(j):
            Q[:, j] -= np.vdot(Q[:, i], Q[:, j]) * Q[:, i]
        Q[:, j] /= np.linalg.norm(Q[:, j])
    return Q


def unitary_deviation(U: np.ndarray) -> float:
    U = np.asarray(U, dtype=complex)
    return float(np.abs(U.conj().T @ U - np.eye(U.shape[1])).max())


def construct_onws(
    ctx: DilationContext,
    dstar: DigitSet,
    unitaries: Mapping[Point, np.ndarray],
    tol: float = 1e-9,
) -> WaveletFamily:
    """Build generators whose system matrix at each ``m`` in ``dstar`` is ``unitaries[m]``.

    Sets ``phi_hat_p(m + gamma_i) = sqrt(q) U(m)[i, p]``; because ``dstar``
    is a transversal of ``C Z_N^2`` this fills every frequency exactly once.
    """
    if ctx.q < 2:
        raise DegenerateDeterminant("|det A| = 1: use construct_single_generator")
    if dstar.kind is not DigitKind.FOR_C:
        raise ValueError("construction is indexed by the digit set for C Z_N^2")
    N, q = ctx.N, ctx.q
    gammas = ctx.image_C.points
    spectra = np.zeros((q, N, N), dtype=complex)
    filled = np.zeros((N, N), dtype=bool)
    for m in dstar:
        U = np.asarray(unitaries[tuple(m)], dtype=complex)
        if U.shape != (q, q):
            raise WrongGeneratorCount(f"matrix at m={m} has shape {U.shape}, need ({q}, {q})")
        dev = unitary_deviation(U)
        if dev > tol:
            raise NotUnitary(tuple(m), dev)
        for i, g in enumerate(gammas):
            a, b = (m[0] + g[0]) % N, (m[1] + g[1]) % N
            assert not filled[a, b], "digit set is not a transversal"
            filled[a, b] = True
            spectra[:, a, b] = np.sqrt(q) * U[i, :]
    assert filled.all()
    return WaveletFamily.from_spectra(ctx, spectra)


def random_onws(ctx: DilationContext, rng: np.random.Generator) -> WaveletFamily:
    """ONWS from independent random unitaries at every frequency digit."""
    dstar = digit_set(ctx, DigitKind.FOR_C)
    return construct_onws(ctx, dstar, {m: random_unitary(ctx.q, rng) for m in dstar})


def verify_single_generator(phi0, tol: float = 1e-9) -> bool:
    """True iff every DFT coefficient of ``phi0`` has unit modulus.

    Exactly then ``{T_k phi0 : k in Z_N^2}`` is an orthonormal basis.  Such a
    basis is never frequency localized, since ``|phi0_hat|`` is flat.
    """
    return bool(np.max(np.abs(np.abs(dft(phi0)) - 1.0)) <= tol)


def translation_gram_deviation(phi0) -> float:
    """``max |G - I|`` for the Gram matrix of all ``N^2`` translates of ``phi0``."""
    phi0 = as_signal(phi0)
    V = np.array([translate(phi0, k).ravel() for k in all_points(phi0.shape[0])])
    return float(np.abs(V @ V.conj().T - np.eye(len(V))).max())


def construct_single_generator(N: int, phases) -> np.ndarray:
    """``idft(exp(i * phases))``: a generator whose translates form an orthonormal basis."""
    phases = np.asarray(phases, dtype=float)
    if phases.shape != (N, N):
        raise ValueError(f"phases must have shape ({N}, {N}), got {phases.shape}")
    return idft(np.exp(1j * phases))
