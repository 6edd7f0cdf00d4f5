"""Digit sets: coset transversals of the image subgroups of A, B and C.

Three transversals are used throughout:

* ``DigitKind.FOR_B``: one digit per coset of ``B Z_N^2``; the translation
  indices of a wavelet system.  ``r`` elements.
* ``DigitKind.FOR_C``: one digit per coset of ``C Z_N^2``; frequency
  representatives.  ``r`` elements.
* ``DigitKind.FOR_A``: one digit per coset of ``A Z_N^2``; offsets of the
  standard basis partition.  ``q`` elements.

Representatives are the lexicographically smallest member of each coset.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .lattice import DilationContext, Point, Subgroup, add, all_points


class DigitError(ValueError):
    pass


class DigitInjectivityFailure(DigitError):
    pass


class PartitionFailure(DigitError):
    pass


class DigitKind(enum.Enum):
    FOR_B = "D"
    FOR_C = "D*"
    FOR_A = "D0"


@dataclass(frozen=True)
class DigitSet:
    kind: DigitKind
    points: tuple[Point, ...]
    context: DilationContext = field(repr=False)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @property
    def subgroup(self) -> Subgroup:
        return subgroup_for(self.context, self.kind)

    def index(self, x: Point) -> int:
        return self.points.index(tuple(x))


def subgroup_for(ctx: DilationContext, kind: DigitKind) -> Subgroup:
    return {
        DigitKind.FOR_B: ctx.image_B,
        DigitKind.FOR_C: ctx.image_C,
        DigitKind.FOR_A: ctx.image_A,
    }[kind]


def coset_labels(H: Subgroup) -> dict[Point, Point]:
    """Map every point of Z_N^2 to the smallest member of its coset ``x + H``."""
    label: dict[Point, Point] = {}
    for x in all_points(H.N):  # lexicographic, so the first hit is the minimum
        if x in label:
            continue
        for h in H:
            label[add(x, h, H.N)] = x
    return label


def digit_set(ctx: DilationContext, kind: DigitKind | str) -> DigitSet:
    """Lexicographic-minimum transversal of the subgroup matching ``kind``."""
    kind = DigitKind(kind) if isinstance(kind, str) else kind
    H = subgroup_for(ctx, kind)
    reps = tuple(sorted(set(coset_labels(H).values())))
    expected = ctx.q if kind is DigitKind.FOR_A else ctx.r
    if len(reps) != expected or reps[0] != (0, 0):
        raise DigitError(f"{kind.value}: got {len(reps)} digits, expected {expected}")
    if kind is DigitKind.FOR_B:
        seen: dict[Point, Point] = {}
        for d in reps:
            img = ctx.A.apply(d, ctx.N)
            if img in seen:
                raise DigitInjectivityFailure(
                    f"A{seen[img]} = A{d} = {img} mod {ctx.N}"
                )
            seen[img] = d
    return DigitSet(kind=kind, points=reps, context=ctx)


@dataclass
class PropertyReport:
    """Outcome of the six digit-set checks; ``witnesses`` holds a counterexample per failure."""

    cardinality: bool
    image_equals_subgroup: bool
    trivial_kernel: bool
    transversal: bool
    coset_sum_closure: bool
    difference_property: bool
    witnesses: dict[str, tuple] = field(default_factory=dict)

    @property
    def checks(self) -> dict[str, bool]:
        return {
            "cardinality": self.cardinality,
            "image_equals_subgroup": self.image_equals_subgroup,
            "trivial_kernel": self.trivial_kernel,
            "transversal": self.transversal,
            "coset_sum_closure": self.coset_sum_closure,
            "difference_property": self.difference_property,
        }

    @property
    def all_pass(self) -> bool:
        return all(self.checks.values())


def verify_digit_properties(ds: DigitSet) -> PropertyReport:
    """Check the six structural properties of a digit set for ``B Z_N^2``.

    The digits need not come from :func:`digit_set`; any candidate set is
    accepted, which makes this usable as a diagnostic on hand-built sets.
    """
    if ds.kind is not DigitKind.FOR_B:
        raise ValueError("property checks apply to digit sets of kind FOR_B")
    ctx, N = ds.context, ds.context.N
    D = list(ds.points)
    A_img = ctx.image_A
    image_of = {d: ctx.A.apply(d, N) for d in D}
    AD = set(image_of.values())
    w: dict[str, tuple] = {}

    # (i) |D| = |A Z_N^2| = |A(D)| = N^2/q
    card = len(D) == len(A_img) == len(AD) == N * N // ctx.q
    if not card:
        w["cardinality"] = (len(D), len(A_img), len(AD), N * N // ctx.q)

    # (ii)
    missing = sorted(set(A_img.points) - AD)
    image_ok = not missing and AD <= set(A_img.points)
    if not image_ok:
        w["image_equals_subgroup"] = tuple(missing[:1])

    # (iii) A beta = 0 only for beta = 0
    kernel = [d for d in D if d != (0, 0) and image_of[d] == (0, 0)]
    if kernel:
        w["trivial_kernel"] = (kernel[0],)

    # (iv) cosets of B Z_N^2 through D are disjoint and cover Z_N^2
    label = coset_labels(ctx.image_B)
    owner: dict[Point, Point] = {}
    trans_ok = True
    for d in D:
        lab = label[d]
        if lab in owner:
            trans_ok = False
            w.setdefault("transversal", (d, owner[lab]))
        else:
            owner[lab] = d
    if trans_ok and len(owner) != len(set(label.values())):
        trans_ok = False
        uncovered = min(set(label.values()) - set(owner))
        w["transversal"] = (uncovered,)

    # (v) beta1 + beta2 lies in the coset of some digit
    closure_ok = True
    for b1 in D:
        for b2 in D:
            if label[add(b1, b2, N)] not in owner:
                closure_ok = False
                w.setdefault("coset_sum_closure", (b1, b2))

    # (vi) A b1 - A b2 = A beta for some digit beta, with beta = 0 iff b1 = b2
    by_image: dict[Point, list[Point]] = {}
    for d in D:
        by_image.setdefault(image_of[d], []).append(d)
    diff_ok = True
    for b1 in D:
        for b2 in D:
            a1, a2 = image_of[b1], image_of[b2]
            target = ((a1[0] - a2[0]) % N, (a1[1] - a2[1]) % N)
            betas = by_image.get(target, [])
            good = bool(betas) and all(((beta == (0, 0)) == (b1 == b2)) for beta in betas)
            if not good:
                diff_ok = False
                w.setdefault("difference_property", (b1, b2))

    return PropertyReport(
        cardinality=card,
        image_equals_subgroup=image_ok,
        trivial_kernel=not kernel,
        transversal=trans_ok,
        coset_sum_closure=closure_ok,
        difference_property=diff_ok,
        witnesses=w,
    )


def standard_partition(ctx: DilationContext, d0: DigitSet, d: DigitSet) -> list[Point]:
    """Return ``[alpha + A k mod N for alpha in d0 for k in d]``.

    For valid digit sets this lists every point of Z_N^2 exactly once, i.e.
    the translates ``T_{Ak} e_alpha`` regenerate the standard basis.
    """
    if d0.kind is not DigitKind.FOR_A or d.kind is not DigitKind.FOR_B:
        raise ValueError("expected digit sets of kinds FOR_A and FOR_B")
    out: list[Point] = []
    seen: set[Point] = set()
    for alpha in d0:
        for k in d:
            x = add(alpha, ctx.A.apply(k, ctx.N), ctx.N)
            if x in seen:
                raise PartitionFailure(f"point {x} produced twice (alpha={alpha}, k={k})")
            seen.add(x)
            out.append(x)
    if len(out) != ctx.N * ctx.N:
        raise PartitionFailure(f"{len(out)} points cover only part of Z_{ctx.N}^2")
    return out


def character_table(ctx: DilationContext, d: DigitSet, dstar: DigitSet) -> np.ndarray:
    """Characters ``E_k(m) = exp(2 pi i <m, A k> / N) / sqrt(r)``.

    Rows follow ``d`` (k), columns follow ``dstar`` (m).  The rows form an
    orthonormal basis of functions on ``dstar``.
    """
    if d.kind is not DigitKind.FOR_B or dstar.kind is not DigitKind.FOR_C:
        raise ValueError("expected digit sets of kinds FOR_B and FOR_C")
    N = ctx.N
    Ak = np.array([ctx.A.apply(k, N) for k in d], dtype=np.int64)
    m = np.array(dstar.points, dtype=np.int64)
    phase = (Ak @ m.T) % N  # reduce before scaling to keep angles small
    return np.exp(2j * np.pi * phase / N) / np.sqrt(len(dstar))
