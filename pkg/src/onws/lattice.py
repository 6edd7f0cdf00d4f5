"""Integer arithmetic on the finite lattice Z_N x Z_N.

Points of Z_N^2 are plain ``(n1, n2)`` tuples of reduced residues.  Every
set-valued result is returned in lexicographic order (``n1`` first).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

Point = tuple[int, int]


class LatticeError(ValueError):
    """Base class for invalid (N, A) pairs."""


class SingularMatrix(LatticeError):
    pass


class NonIntegerDual(LatticeError):
    """N * A^-1 has a non-integer entry, so (N, A) admits no integer dual."""


@dataclass(frozen=True)
class IntMatrix2:
    """A 2x2 integer matrix ``((a, b), (c, d))``."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in "abcd":
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise TypeError(f"matrix entry {name}={value!r} is not an integer")
            object.__setattr__(self, name, int(value))

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def parse(cls, text: str) -> "IntMatrix2":
        """Parse the row-major literal ``"a,b,c,d"``."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError(f"expected 4 comma-separated integers, got {text!r}")
        try:
            return cls(*(int(p) for p in parts))
        except ValueError:
            raise ValueError(f"matrix literal {text!r} has non-integer entries") from None

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def T(self) -> "IntMatrix2":
        return IntMatrix2(self.a, self.c, self.b, self.d)

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def to_list(self) -> list[int]:
        return [self.a, self.b, self.c, self.d]

    def to_array(self) -> np.ndarray:
        return np.array(self.rows(), dtype=np.int64)

    def apply(self, x: Point, N: int) -> Point:
        """Return ``M x mod N``."""
        x1, x2 = x
        return ((self.a * x1 + self.b * x2) % N, (self.c * x1 + self.d * x2) % N)

    def __matmul__(self, other: "IntMatrix2") -> "IntMatrix2":
        return IntMatrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __str__(self) -> str:
        return f"(({self.a},{self.b}),({self.c},{self.d}))"


def scaled_inverse(N: int, M: IntMatrix2) -> IntMatrix2:
    """Return ``N * M^-1``, raising if it is singular or non-integer."""
    det = M.det
    if det == 0:
        raise SingularMatrix(f"det {M} = 0")
    entries = [Fraction(N * v, det) for v in (M.d, -M.b, -M.c, M.a)]
    if any(e.denominator != 1 for e in entries):
        shown = ",".join(str(e) for e in entries)
        raise NonIntegerDual(
            f"N*A^-1 = ({shown}) is not an integer matrix for N={N}, A={M}"
        )
    return IntMatrix2(*(int(e) for e in entries))


@dataclass(frozen=True)
class DilationContext:
    """A validated dilation ``A`` on Z_N^2 with its duals ``B = N A^-1``, ``C = B^T``.

    ``q = |det A|`` is the number of generators of a wavelet system and
    ``r = N^2 / q`` the number of translates of each.
    """

    N: int
    A: IntMatrix2
    B: IntMatrix2
    C: IntMatrix2
    q: int
    r: int

    @property
    def multi_generator(self) -> bool:
        """True when ``q >= 2``; ``q == 1`` is the single-generator regime."""
        return self.q >= 2

    @cached_property
    def image_A(self) -> "Subgroup":
        return image_subgroup(self.A, self.N)

    @cached_property
    def image_B(self) -> "Subgroup":
        return image_subgroup(self.B, self.N)

    @cached_property
    def image_C(self) -> "Subgroup":
        return image_subgroup(self.C, self.N)


def make_dilation(N: int, A: IntMatrix2) -> DilationContext:
    """Validate ``(N, A)`` and build the context.

    Raises
    ------
    SingularMatrix
        If ``det A == 0``.
    NonIntegerDual
        If ``N A^-1`` is not an integer matrix.  This can happen even when
        ``det A`` divides ``N^2``, e.g. ``N=4, A=((3,1),(1,3))``.
    """
    if isinstance(N, bool) or not isinstance(N, (int, np.integer)) or N < 1:
        raise ValueError(f"N must be a positive integer, got {N!r}")
    N = int(N)
    B = scaled_inverse(N, A)
    q = abs(A.det)
    r = abs(B.det)
    # det(A) det(B) = N^2 follows from B = N A^-1 being integral
    assert q * r == N * N, (q, r, N)
    return DilationContext(N=N, A=A, B=B, C=B.T, q=q, r=r)


def all_points(N: int) -> list[Point]:
    return [(i, j) for i in range(N) for j in range(N)]


def _grid(N: int) -> np.ndarray:
    i, j = np.meshgrid(np.arange(N), np.arange(N), indexing="ij")
    return np.stack([i.ravel(), j.ravel()])


@dataclass(frozen=True)
class Subgroup:
    """The image ``M Z_N^2``, sorted lexicographically and duplicate-free."""

    points: tuple[Point, ...]
    generator: IntMatrix2
    N: int

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, x) -> bool:
        return tuple(x) in self._members

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.points)


def image_subgroup(M: IntMatrix2, N: int) -> Subgroup:
    """Return ``{M x mod N : x in Z_N^2}`` by direct enumeration."""
    images = (M.to_array() @ _grid(N)) % N
    uniq = np.unique(images.T, axis=0)  # np.unique sorts rows lexicographically
    points = tuple((int(u), int(v)) for u, v in uniq)
    return Subgroup(points=points, generator=M, N=N)


def inner_product_int(alpha: Point, beta: Point) -> int:
    """Integer dot product of the residue representatives, not reduced mod N."""
    return alpha[0] * beta[0] + alpha[1] * beta[1]


def add(x: Point, y: Point, N: int) -> Point:
    return ((x[0] + y[0]) % N, (x[1] + y[1]) % N)


def neg(x: Point, N: int) -> Point:
    return ((-x[0]) % N, (-x[1]) % N)


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def random_unimodular(rng: np.random.Generator, bound: int = 3) -> IntMatrix2:
    """Integer matrix with ``det = +-1`` and entries in ``[-bound, bound]``."""
    while True:
        a, b, c, d = (int(v) for v in rng.integers(-bound, bound + 1, size=4))
        if abs(a * d - b * c) == 1:
            return IntMatrix2(a, b, c, d)


def random_dilation(N: int, rng: np.random.Generator, min_q: int = 1) -> DilationContext:
    """Sample a valid context as ``A = U diag(d1, d2) V``.

    ``d1, d2`` divide ``N`` and ``U, V`` are unimodular, so ``N A^-1`` is
    integral by construction.
    """
    if min_q > N * N:
        raise ValueError(f"no dilation on Z_{N}^2 has |det A| >= {min_q}")
    divs = divisors(N)
    while True:
        d1, d2 = (int(v) for v in rng.choice(divs, size=2))
        if d1 * d2 < min_q:
            continue
        U = random_unimodular(rng)
        V = random_unimodular(rng)
        A = U @ IntMatrix2(d1, 0, 0, d2) @ V
        return make_dilation(N, A)
