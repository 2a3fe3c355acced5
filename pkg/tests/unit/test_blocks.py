"""Tests for region-II reduced pair blocks."""

import numpy as np
import pytest

from unruh_bench.engine.blocks import pair_block, pair_terms, thermal_block
from unruh_bench.squeezing import PairKind, SqueezeParam, TruncationConfig, squeeze_param


def _pair_matrix(kind: PairKind, sq: SqueezeParam, t: TruncationConfig) -> np.ndarray:
    """Amplitudes of one pair state as a (region I) x (region II) matrix."""
    matrix = np.zeros((t.n_max + 1, t.n_max + 1))
    for (n_i, n_ii), amp in pair_terms(kind, sq, t).items():
        matrix[n_i, n_ii] = amp
    return matrix


class TestPairBlock:
    """Tests for Tr_II |left><right| over one squeezed pair."""

    @pytest.mark.parametrize("left", list(PairKind))
    @pytest.mark.parametrize("right", list(PairKind))
    def test_matches_dense_partial_trace(self, left, right):
        """Each block equals M_left M_right^T on the truncated pair space."""
        sq = squeeze_param(1.0)
        t = TruncationConfig(n_max=6)
        expected = _pair_matrix(left, sq, t) @ _pair_matrix(right, sq, t).T
        np.testing.assert_allclose(pair_block(left, right, sq, t), expected, atol=1e-15)

    def test_right_excitation_is_upper_shift(self):
        """(R1, VAC) only has entries at [n+1, n]."""
        sq = squeeze_param(0.5)
        t = TruncationConfig(n_max=5)
        block = pair_block(PairKind.R1, PairKind.VAC, sq, t)
        assert np.count_nonzero(block - np.diag(np.diag(block, k=-1), k=-1)) == 0
        v = np.sqrt(sq.sech2_r) * sq.tanh_r ** np.arange(6)
        c = np.sqrt(np.arange(1, 6)) * sq.tanh_r ** np.arange(5) * sq.sech2_r
        np.testing.assert_allclose(np.diag(block, k=-1), c * v[:5])

    def test_left_excitation_is_lower_shift(self):
        """(L1, VAC) only has entries at [n, n+1]."""
        sq = squeeze_param(0.5)
        t = TruncationConfig(n_max=5)
        block = pair_block(PairKind.L1, PairKind.VAC, sq, t)
        assert np.count_nonzero(block - np.diag(np.diag(block, k=1), k=1)) == 0
        assert block[0, 1] > 0

    def test_swapping_arguments_gives_adjoint(self):
        """Blocks are real, so the swapped block is the transpose."""
        sq = squeeze_param(0.3)
        t = TruncationConfig(n_max=4)
        for left, right in [(PairKind.R1, PairKind.L1), (PairKind.R1, PairKind.VAC)]:
            np.testing.assert_allclose(pair_block(right, left, sq, t), pair_block(left, right, sq, t).T)

    def test_blocks_are_read_only(self):
        """Cached blocks cannot be modified in place."""
        block = thermal_block(squeeze_param(1.0), TruncationConfig(n_max=3))
        with pytest.raises(ValueError):
            block[0, 0] = 2.0


class TestThermalBlock:
    """Tests for the reduced squeezed vacuum."""

    def test_diagonal_geometric(self):
        """tau(r) is diagonal with entries tanh^2n / cosh^2."""
        sq = SqueezeParam.from_r(0.4)
        t = TruncationConfig(n_max=8)
        tau = thermal_block(sq, t)
        n = np.arange(9)
        np.testing.assert_allclose(tau, np.diag(sq.sech2_r * sq.tanh_r ** (2 * n)), atol=1e-16)

    def test_trace_is_kept_mass(self):
        """Its trace is 1 - tanh^(2(n_max+1))."""
        sq = SqueezeParam.from_r(0.4)
        t = TruncationConfig(n_max=8)
        assert np.trace(thermal_block(sq, t)) == pytest.approx(1.0 - sq.tanh_r**18, abs=1e-14)


def _mean_occupation(sq: SqueezeParam, n_max: int) -> float:
    tau = thermal_block(sq, TruncationConfig(n_max=n_max))
    return float(np.arange(n_max + 1) @ np.diag(tau))


def _mean_occupation_tail(sq: SqueezeParam, n_max: int) -> float:
    """sum_{n > n_max} n tanh^2n / cosh^2, the occupation the cutoff drops."""
    x = sq.tanh_r**2
    return x ** (n_max + 1) * ((n_max + 1) + x / (1.0 - x))


class TestThermalOccupation:
    """The reduced squeezed vacuum carries sinh^2 r quanta on average."""

    @pytest.mark.parametrize("r", [0.04, 0.5, 0.93])
    def test_mean_occupation_within_tail_bound(self, r):
        """At n_max = 15 the mean misses sinh^2 r by exactly the dropped tail."""
        sq = SqueezeParam.from_r(r)
        deficit = sq.sinh_r**2 - _mean_occupation(sq, 15)
        bound = _mean_occupation_tail(sq, 15)
        assert -1e-15 <= deficit <= bound * (1.0 + 1e-9) + 1e-15
        assert deficit == pytest.approx(bound, rel=1e-6, abs=1e-15)

    @pytest.mark.parametrize("r", [0.5, 0.93])
    def test_error_shrinks_with_cutoff(self, r):
        """Raising n_max strictly reduces the occupation error."""
        sq = SqueezeParam.from_r(r)
        errors = [sq.sinh_r**2 - _mean_occupation(sq, n_max) for n_max in range(2, 16)]
        assert all(later < earlier for earlier, later in zip(errors, errors[1:]))
