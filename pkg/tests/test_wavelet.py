import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from onws.digits import DigitKind, digit_set
from onws.lattice import IntMatrix2, add, all_points, make_dilation, random_dilation
from onws.spectral import delta, dft, idft, inner, translate
from onws.wavelet import (
    DegenerateDeterminant, NotUnitary, WaveletFamily, WrongGeneratorCount,
    condition_sums, construct_onws, construct_single_generator, random_onws,
    random_unitary, system_matrix, translation_gram_deviation, unitary_deviation,
    verify_onws, verify_onws_gram, verify_single_generator,
)

from conftest import generated_families


def gram_oracle_loops(fam):
    """Pairwise inner products of the translated system, written out in full."""
    ctx = fam.ctx
    D = digit_set(ctx, DigitKind.FOR_B)
    vecs = [translate(phi, ctx.A.apply(k, ctx.N)) for phi in fam.generators for k in D]
    return max(abs(inner(u, v) - (1.0 if i == j else 0.0))
               for i, u in enumerate(vecs) for j, v in enumerate(vecs))


def test_system_matrix_example_212i(fam_212i):
    assert np.abs(system_matrix(fam_212i, (0, 0)) - np.eye(2)).max() < 1e-15
    S = system_matrix(fam_212i, (0, 1))
    assert unitary_deviation(S) < 1e-15


def test_system_matrix_entries(fam_212i):
    # rows follow C Z_2^2 = {(0,0), (1,0)}, columns follow p
    S = system_matrix(fam_212i, (1, 1))
    spectra = fam_212i.spectra
    expected = np.array([[spectra[p][1, 1] for p in (0, 1)],
                         [spectra[p][0, 1] for p in (0, 1)]]) / np.sqrt(2)
    assert np.array_equal(S, expected)


def test_verify_example_212i(fam_212i):
    a = verify_onws(fam_212i, tol=1e-12)
    b = verify_onws_gram(fam_212i, tol=1e-12)
    assert a.is_onws and b.is_onws
    assert a.max_unitarity_deviation < 1e-12 and b.max_gram_deviation < 1e-12
    assert gram_oracle_loops(fam_212i) < 1e-12


def test_duplicate_generator_fails_with_witness(fam_212i):
    bad = WaveletFamily(fam_212i.ctx, (fam_212i.generators[0],) * 2)
    a = verify_onws(bad)
    assert not a.is_onws
    assert a.witness == {"k": [0, 0], "p1": 0, "p2": 1}
    assert a.max_unitarity_deviation == pytest.approx(1.0)
    assert not verify_onws_gram(bad).is_onws


def test_perturbed_example_fails(fam_212i):
    rng = np.random.default_rng(5)
    noisy = WaveletFamily(fam_212i.ctx, tuple(g + 1e-3 * rng.standard_normal((2, 2))
                                              for g in fam_212i.generators))
    assert not verify_onws(noisy).is_onws
    assert not verify_onws_gram(noisy).is_onws
    assert gram_oracle_loops(noisy) > 1e-6


def test_published_212ii_spectra_fail_on_one_coset(fam_212ii):
    # The printed spectra are orthonormal on three of the four frequency
    # cosets but not on the coset of (0, 2).
    report = verify_onws(fam_212ii)
    assert not report.is_onws
    assert report.witness == {"k": [0, 2], "p1": 1, "p2": 2}
    assert report.max_unitarity_deviation == pytest.approx(np.cos(np.pi / 8), rel=1e-12)
    bad_coset = {(0, 2), (1, 3), (2, 0), (3, 1)}
    for k in all_points(4):
        psi = condition_sums(fam_212ii, k)
        ok = np.abs(psi - 4 * np.eye(4)).max() < 1e-12
        assert ok == (k not in bad_coset)
    assert not verify_onws_gram(fam_212ii).is_onws
    assert gram_oracle_loops(fam_212ii) > 0.2


def test_generator_count_enforced(fam_212i):
    with pytest.raises(WrongGeneratorCount):
        WaveletFamily(fam_212i.ctx, fam_212i.generators[:1])


def test_q1_routes_to_single_generator():
    ctx = make_dilation(3, IntMatrix2(1, 0, 0, 1))
    fam = WaveletFamily(ctx, (delta(3),))
    with pytest.raises(DegenerateDeterminant):
        verify_onws(fam)
    with pytest.raises(DegenerateDeterminant):
        verify_onws_gram(fam)
    assert fam.is_onws()


def test_construct_indicator_family(ctx_28):
    dstar = digit_set(ctx_28, DigitKind.FOR_C)
    fam = construct_onws(ctx_28, dstar, {m: np.eye(2) for m in dstar})
    gammas = ctx_28.image_C.points
    for p in range(2):
        support = {add(m, gammas[p], 2) for m in dstar}
        expected = np.zeros((2, 2))
        for a, b in support:
            expected[a, b] = np.sqrt(2)
        assert np.abs(fam.spectra[p] - expected).max() < 1e-12
    assert verify_onws_gram(fam).is_onws


def test_construct_round_trip_example_212i(fam_212i):
    ctx = fam_212i.ctx
    dstar = digit_set(ctx, DigitKind.FOR_C)
    rebuilt = construct_onws(ctx, dstar, {m: system_matrix(fam_212i, m) for m in dstar})
    for a, b in zip(rebuilt.generators, fam_212i.generators):
        assert np.abs(a - b).max() < 1e-12


def test_construct_rejects_non_unitary(ctx_28):
    dstar = digit_set(ctx_28, DigitKind.FOR_C)
    mats = {m: np.eye(2) for m in dstar}
    mats[(0, 1)] = np.array([[1, 0.1], [0, 1]])
    with pytest.raises(NotUnitary) as exc:
        construct_onws(ctx_28, dstar, mats)
    assert exc.value.m == (0, 1)
    assert exc.value.deviation > 0.09


def test_random_unitary_is_unitary():
    rng = np.random.default_rng(0)
    for q in (1, 2, 5, 16):
        assert unitary_deviation(random_unitary(q, rng)) < 1e-12


@settings(max_examples=40, deadline=None)
@given(N=st.integers(2, 12), seed=st.integers(0, 2**32 - 1))
def test_constructed_families_verify(N, seed):
    rng = np.random.default_rng(seed)
    ctx = random_dilation(N, rng, min_q=2)
    if ctx.q > 36:
        ctx = make_dilation(N, IntMatrix2(2, 0, 0, 1)) if N % 2 == 0 else make_dilation(N, IntMatrix2(N, 0, 0, 1))
    fam = random_onws(ctx, rng)
    a, b = verify_onws(fam), verify_onws_gram(fam)
    assert a.is_onws and b.is_onws
    # unitarity and coset-sum deviations differ by exactly the factor q
    assert a.max_condition_deviation == pytest.approx(fam.q * a.max_unitarity_deviation, abs=1e-12)
    # periodicity over C Z_N^2
    k = tuple(int(v) for v in rng.integers(0, N, 2))
    gam = ctx.image_C.points[int(rng.integers(len(ctx.image_C)))]
    S1, S2 = system_matrix(fam, k), system_matrix(fam, add(k, gam, N))
    assert sorted(map(tuple, np.round(S1, 12))) == sorted(map(tuple, np.round(S2, 12)))
    assert unitary_deviation(S1) == pytest.approx(unitary_deviation(S2), abs=1e-14)
    # round trip through the system matrices
    dstar = digit_set(ctx, DigitKind.FOR_C)
    rebuilt = construct_onws(ctx, dstar, {m: system_matrix(fam, m) for m in dstar})
    for g1, g2 in zip(rebuilt.generators, fam.generators):
        assert np.abs(g1 - g2).max() < 1e-9
    # N^2 distinct basis vectors
    assert len({tuple(np.round(v, 9)) for v in fam.basis}) == N * N


def test_equivalence_on_mixed_corpus():
    fams = generated_families(12, seed=11, max_q=36)
    rng = np.random.default_rng(12)
    for fam in fams:
        noisy = WaveletFamily(fam.ctx, tuple(g + 1e-4 * rng.standard_normal(g.shape)
                                             for g in fam.generators))
        for f in (fam, noisy):
            assert verify_onws(f).is_onws == verify_onws_gram(f).is_onws


def test_single_generator_examples(fam_212i):
    assert verify_single_generator(delta(4))
    assert not verify_single_generator(fam_212i.generators[0])
    assert translation_gram_deviation(delta(4)) == 0


def test_construct_single_generator():
    N = 5
    assert np.abs(construct_single_generator(N, np.zeros((N, N))) - delta(N)).max() < 1e-15
    v = (2, 3)
    n1, n2 = np.meshgrid(range(N), range(N), indexing="ij")
    phases = 2 * np.pi * (n1 * v[0] + n2 * v[1]) / N
    shifted = construct_single_generator(N, phases)
    assert np.abs(shifted - delta(N, (-v[0], -v[1]))).max() < 1e-12
    rng = np.random.default_rng(9)
    for _ in range(10):
        phi = construct_single_generator(N, rng.uniform(0, 2 * np.pi, (N, N)))
        assert verify_single_generator(phi, tol=1e-12)
        assert translation_gram_deviation(phi) < 1e-12


def test_single_generator_rejects_non_flat_spectrum():
    rng = np.random.default_rng(2)
    spectrum = np.exp(1j * rng.uniform(0, 2 * np.pi, (4, 4)))
    spectrum[1, 2] *= 1.01
    phi = idft(spectrum)
    assert not verify_single_generator(phi)
    assert translation_gram_deviation(phi) > 1e-4
    assert np.abs(np.abs(dft(phi)) - 1).max() == pytest.approx(0.01)
