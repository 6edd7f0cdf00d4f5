import dataclasses

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from onws.digits import (
    DigitKind, DigitSet, PartitionFailure, character_table, coset_labels, digit_set,
    standard_partition, verify_digit_properties,
)
from onws.lattice import IntMatrix2, all_points, make_dilation, random_dilation


def lex_min_transversal(H, N):
    """Oracle: group points by coset via explicit membership tests."""
    reps = []
    for x in all_points(N):
        in_known = any(((x[0] - r[0]) % N, (x[1] - r[1]) % N) in H for r in reps)
        if not in_known:
            reps.append(x)
    return tuple(reps)


def test_example_28_digits(ctx_28):
    assert digit_set(ctx_28, DigitKind.FOR_B).points == ((0, 0), (1, 0))
    assert digit_set(ctx_28, DigitKind.FOR_A).points == ((0, 0), (1, 0))
    assert digit_set(ctx_28, "D*").points == ((0, 0), (0, 1))


def test_example_212ii_digits(ctx_212ii):
    assert digit_set(ctx_212ii, DigitKind.FOR_B).points == ((0, 0), (0, 1), (0, 2), (0, 3))
    assert ctx_212ii.image_C.points == ((0, 0), (1, 1), (2, 2), (3, 3))
    assert digit_set(ctx_212ii, DigitKind.FOR_C).points == lex_min_transversal(ctx_212ii.image_C, 4)
    assert digit_set(ctx_212ii, DigitKind.FOR_C).points == ((0, 0), (0, 1), (0, 2), (0, 3))


@pytest.mark.parametrize("name", ["ctx_28", "ctx_212ii"])
def test_catalog_digit_sets_satisfy_all_properties(name, request):
    report = verify_digit_properties(digit_set(request.getfixturevalue(name), DigitKind.FOR_B))
    assert report.all_pass, report.witnesses


def test_swapped_digit_breaks_transversal(ctx_28):
    D = digit_set(ctx_28, DigitKind.FOR_B)
    bad = dataclasses.replace(D, points=((0, 0), (0, 1)))
    report = verify_digit_properties(bad)
    assert not report.transversal
    assert report.witnesses["transversal"] == ((0, 1), (0, 0))
    # (0, 1) also lies in ker A, so the image checks fail too
    assert not report.trivial_kernel


def test_property_check_only_for_b_digits(ctx_28):
    with pytest.raises(ValueError):
        verify_digit_properties(digit_set(ctx_28, DigitKind.FOR_C))


def test_standard_partition_examples(ctx_28, ctx_212ii):
    for ctx in (ctx_28, ctx_212ii):
        pts = standard_partition(ctx, digit_set(ctx, "D0"), digit_set(ctx, "D"))
        assert len(pts) == ctx.N ** 2
        assert sorted(pts) == all_points(ctx.N)


def test_standard_partition_unimodular():
    ctx = make_dilation(3, IntMatrix2(2, 1, 1, 1))
    d0, d = digit_set(ctx, "D0"), digit_set(ctx, "D")
    assert d0.points == ((0, 0),)
    assert sorted(d.points) == all_points(3)
    assert sorted(standard_partition(ctx, d0, d)) == all_points(3)


def test_standard_partition_detects_duplicates(ctx_28):
    d = digit_set(ctx_28, "D")
    d0 = digit_set(ctx_28, "D0")
    bad = DigitSet(DigitKind.FOR_A, ((0, 0), (0, 1)), ctx_28)  # same A-coset twice
    with pytest.raises(PartitionFailure):
        standard_partition(ctx_28, bad, d)
    assert len(standard_partition(ctx_28, d0, d)) == 4


def gram_loops(E):
    r = E.shape[0]
    G = np.empty((r, r), dtype=complex)
    for i in range(r):
        for j in range(r):
            G[i, j] = sum(E[i, m] * np.conj(E[j, m]) for m in range(E.shape[1]))
    return G


@pytest.mark.parametrize("name", ["ctx_28", "ctx_212ii"])
def test_character_table_orthonormal(name, request):
    ctx = request.getfixturevalue(name)
    E = character_table(ctx, digit_set(ctx, "D"), digit_set(ctx, "D*"))
    assert E.shape == (ctx.r, ctx.r)
    assert np.abs(gram_loops(E) - np.eye(ctx.r)).max() < 1e-12
    assert np.allclose(E[0], 1 / np.sqrt(ctx.r), atol=0, rtol=1e-15)


@settings(max_examples=120, deadline=None)
@given(N=st.integers(1, 16), seed=st.integers(0, 2**32 - 1))
def test_generated_contexts(N, seed):
    ctx = random_dilation(N, np.random.default_rng(seed))
    d, ds, d0 = (digit_set(ctx, k) for k in DigitKind)  # never raises injectivity failure
    assert len(d) == len(ds) == ctx.r and len(d0) == ctx.q
    for ds_ in (d, ds, d0):
        assert ds_.points[0] == (0, 0)
        labels = coset_labels(ds_.subgroup)
        assert len({labels[x] for x in ds_}) == len(ds_)
    assert d.points == lex_min_transversal(ctx.image_B, N)
    assert verify_digit_properties(d).all_pass
    assert sorted(standard_partition(ctx, d0, d)) == all_points(N)
    E = character_table(ctx, d, ds)
    assert np.abs(E @ E.conj().T - np.eye(ctx.r)).max() < 1e-9
