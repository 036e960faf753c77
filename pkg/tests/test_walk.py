import math
from fractions import Fraction as F

import numpy as np
import pytest

from rieszwalk.cmv import DimensionMismatch, DimensionTooSmall, build_cmv, spectral_moment, unitarity_defect
from rieszwalk.riesz import MeasureVariant, caratheodory_series
from rieszwalk.walk import (
    HADAMARD_COIN,
    IDENTITY_COIN,
    CoinMatrix,
    NonUnitaryCoin,
    WalkState,
    ZeroCoin,
    coined_walk_matrix,
    constant_coin_schur_coeffs,
    evolve,
    first_return_numeric,
    hadamard_alpha,
    position_distribution,
    riesz_walk_matrix,
    traditional_walk_test,
)

R = 1 / math.sqrt(2)


def solve_diagonal_conjugation(U, C):
    """Find unit phases d with d_r U[r,c] / d_c = C[r,c] on all entries.

    Greedy propagation from d_0 = 1; returns None if the systems are
    inconsistent.  This is the oracle that pins down the Verblunsky sequence
    of the coined walk rather than assuming it.
    """
    dim = U.dimension
    d = np.full(dim, np.nan, dtype=complex)
    d[0] = 1.0
    entries = list(U.nonzero_entries())
    for _ in range(dim):
        progress = False
        for r, c, v in entries:
            cv = C.entry(r, c)
            if abs(cv) < 1e-14:
                return None
            known_r, known_c = not np.isnan(d[r].real), not np.isnan(d[c].real)
            if known_r and not known_c:
                d[c] = d[r] * v / cv
                progress = True
            elif known_c and not known_r:
                d[r] = d[c] * cv / v
                progress = True
        if not progress:
            break
    for r, c, v in entries:
        if np.isnan(d[r].real) or np.isnan(d[c].real):
            continue
        if abs(d[r] * v / d[c] - C.entry(r, c)) > 1e-13:
            return None
    return d


# -- coins and coined matrices --------------------------------------------------


def test_hadamard_coin_is_unitary():
    assert HADAMARD_COIN.unitarity_error() <= 1e-15


def test_non_unitary_coin_rejected():
    with pytest.raises(NonUnitaryCoin):
        coined_walk_matrix(CoinMatrix(1, 0, 0, 2), 8)


def test_identity_coins_shift_right():
    m = coined_walk_matrix(IDENTITY_COIN, 12)
    assert m.entry(0, 0) == 0
    assert m.entry(0, 2) == 1
    state = WalkState.origin_up(12)
    state = evolve(m, state, 2)
    assert state.amplitudes[4] == 1
    assert np.sum(np.abs(state.amplitudes)) == 1


def test_hadamard_rows():
    m = coined_walk_matrix(HADAMARD_COIN, 8)
    assert m.entry(0, 0) == pytest.approx(R)
    assert m.entry(0, 2) == pytest.approx(R)
    assert m.entry(1, 0) == pytest.approx(-R)
    assert m.entry(1, 2) == pytest.approx(R)
    assert m.entry(2, 1) == pytest.approx(R)
    assert m.entry(2, 4) == pytest.approx(R)


def test_coined_walk_interior_unitarity():
    assert unitarity_defect(coined_walk_matrix(HADAMARD_COIN, 200)) <= 1e-12


def test_coined_walk_validations():
    with pytest.raises(ValueError):
        coined_walk_matrix(HADAMARD_COIN, 3)
    with pytest.raises(ValueError):
        coined_walk_matrix([HADAMARD_COIN] * 2, 12)


# -- Verblunsky sequence of the Hadamard walk ------------------------------------


def test_hadamard_alpha_shape():
    seq = hadamard_alpha(10)
    assert seq[0].value == pytest.approx(R)
    assert all(seq[j].value == 0 for j in range(1, 10, 2))
    assert all(abs(abs(seq[j].value) - R) <= 1e-15 for j in range(0, 10, 2))


def test_hadamard_alpha_conjugation_oracle():
    # The CMV operator of the Hadamard walk's measure must be diagonally
    # phase-equivalent to the coined matrix, entry for entry.
    dim = 64
    U = coined_walk_matrix(HADAMARD_COIN, dim)
    C = build_cmv(hadamard_alpha(dim), dim)
    d = solve_diagonal_conjugation(U, C)
    assert d is not None
    known = ~np.isnan(d.real)
    assert np.max(np.abs(np.abs(d[known]) - 1)) <= 1e-13


def test_hadamard_alpha_entry_magnitudes():
    dim = 32
    U = coined_walk_matrix(HADAMARD_COIN, dim)
    C = build_cmv(hadamard_alpha(dim), dim)
    u_pattern = {(r, c): abs(v) for r, c, v in U.nonzero_entries()}
    c_pattern = {(r, c): abs(v) for r, c, v in C.nonzero_entries()}
    assert u_pattern.keys() == c_pattern.keys()
    for key, mag in u_pattern.items():
        assert abs(mag - c_pattern[key]) <= 1e-12


def test_hadamard_spectral_moments_agree():
    coined = coined_walk_matrix(HADAMARD_COIN, 108)
    cmv = build_cmv(hadamard_alpha(108), 108)
    for n in range(51):
        gap = abs(spectral_moment(coined, n) - spectral_moment(cmv, n))
        assert gap <= 1e-10


def test_constant_sign_alpha_does_not_match_the_walk():
    # A constant-sign sequence of the same magnitude describes a rotated
    # measure with different odd moments; the alternation is load-bearing.
    coined = coined_walk_matrix(HADAMARD_COIN, 28)
    const = build_cmv([R if j % 2 == 0 else 0.0 for j in range(28)], 28)
    assert abs(spectral_moment(coined, 3) - spectral_moment(const, 3)) > 0.5


# -- Riesz walk -------------------------------------------------------------------


def test_riesz_walk_entries():
    m = riesz_walk_matrix(8)
    assert m.entry(0, 2) == 1
    assert m.entry(3, 3) == 0
    assert m.entry(2, 3) == pytest.approx(0.5, abs=1e-15)


# -- evolution --------------------------------------------------------------------


def test_evolve_zero_steps_is_identity():
    m = riesz_walk_matrix(16)
    state = WalkState.origin_up(16)
    out = evolve(m, state, 0)
    assert np.array_equal(out.amplitudes, state.amplitudes)
    assert out.step_count == 0


def test_evolve_hadamard_one_step():
    m = coined_walk_matrix(HADAMARD_COIN, 10)
    out = evolve(m, WalkState.origin_up(10), 1)
    assert out.amplitudes[0] == pytest.approx(R)
    assert out.amplitudes[2] == pytest.approx(R)
    dist = position_distribution(out)
    assert dist.probabilities[0] == pytest.approx(0.5)
    assert dist.probabilities[1] == pytest.approx(0.5)
    assert dist.step_count == 1


def test_evolve_dim_guard():
    m = riesz_walk_matrix(16)
    with pytest.raises(DimensionTooSmall):
        evolve(m, WalkState.origin_up(16), 5)
    with pytest.raises(DimensionMismatch):
        evolve(m, WalkState.origin_up(8), 1)


def test_evolution_norm_and_support():
    steps = 100
    m = riesz_walk_matrix(2 * steps + 8)
    out = evolve(m, WalkState.origin_up(2 * steps + 8), steps)
    assert abs(out.norm() - 1) <= 1e-10
    dist = position_distribution(out)
    assert float(np.sum(dist.probabilities)) == pytest.approx(1.0, abs=1e-10)
    assert np.all(dist.probabilities[steps + 1 :] == 0)


def test_point_mass_distribution():
    dist = position_distribution(WalkState.origin_up(8))
    assert dist.probabilities[0] == 1
    assert np.all(dist.probabilities[1:] == 0)


# -- first-return amplitudes --------------------------------------------------------


def test_first_return_riesz_values():
    m = riesz_walk_matrix(2 * 28 + 8)
    amps = first_return_numeric(m, 28)
    assert abs(amps[3] - 0.5) <= 1e-9
    assert abs(amps[27] - (-17 / 128)) <= 1e-8
    assert np.max(np.abs(amps[:3])) <= 1e-12


def test_first_return_needs_dimension():
    with pytest.raises(DimensionTooSmall):
        first_return_numeric(riesz_walk_matrix(16), 10)


def test_hadamard_first_returns_vanish_at_even_steps():
    # The Schur function of the Hadamard walk is even, so its Taylor
    # coefficients vanish at odd orders; the step-n amplitude reads the
    # order n-1 coefficient, hence even steps are silent.
    m = coined_walk_matrix(HADAMARD_COIN, 248)
    amps = first_return_numeric(m, 120)
    even = [abs(amps[n - 1]) for n in range(2, 121, 2)]
    assert max(even) <= 1e-12
    assert abs(amps[0] - R) <= 1e-12
    assert abs(amps[2] - (-1 / (2 * math.sqrt(2)))) <= 1e-12


# -- constant-coin closed form --------------------------------------------------------


def test_constant_coin_coeffs_even():
    coeffs = constant_coin_schur_coeffs(R, 99)
    assert coeffs[0] == pytest.approx(R)
    assert max(abs(coeffs[k]) for k in range(1, 100, 2)) == 0


def test_constant_coin_matches_matrix_route():
    # Same measure, two unrelated computations: series square root of the
    # closed form vs renewal inversion of matrix powers.
    coeffs = constant_coin_schur_coeffs(R, 100)
    matrix = build_cmv([R if j % 2 == 0 else 0.0 for j in range(210)], 210)
    amps = first_return_numeric(matrix, 101)
    for n in range(1, 102):
        assert abs(amps[n - 1] - coeffs[n - 1]) <= 1e-8


def test_coined_walk_is_rotated_constant_coin():
    # The coined-walk amplitudes equal the closed-form coefficients up to
    # the alternating sign coming from rotating z by a quarter turn.
    coeffs = constant_coin_schur_coeffs(R, 100)
    m = coined_walk_matrix(HADAMARD_COIN, 210)
    amps = first_return_numeric(m, 101)
    for t in range(50):
        assert abs(amps[2 * t] - (-1) ** t * coeffs[2 * t]) <= 1e-10


def test_constant_coin_zero_rejected():
    with pytest.raises(ZeroCoin):
        constant_coin_schur_coeffs(0, 10)


def test_constant_coin_small_amplitude_finite():
    coeffs = constant_coin_schur_coeffs(0.01, 50)
    assert np.all(np.isfinite(coeffs))
    assert coeffs[0] == pytest.approx(0.01)


# -- traditional walk characterization --------------------------------------------------


def test_traditional_walk_test_riesz_exact():
    F_series = caratheodory_series(40, MeasureVariant.MU)
    assert traditional_walk_test(F_series.coefficients) is False


def test_traditional_walk_test_hadamard_numeric():
    m = coined_walk_matrix(HADAMARD_COIN, 128)
    moments = [spectral_moment(m, n) for n in range(61)]
    coeffs = [1.0 + 0j] + [2 * v for v in moments[1:]]
    assert traditional_walk_test(coeffs, tol=1e-10) is True


def test_traditional_walk_test_trivial():
    assert traditional_walk_test([F(1), F(0), F(0), F(0)]) is True
