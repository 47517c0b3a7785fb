import numpy as np
import pytest

from tsbreak.periods import Period
from tsbreak.simulate import ProcessKind, ProcessSpec, generate


class TestDeterminism:
    @pytest.mark.parametrize("kind", list(ProcessKind))
    def test_same_seed_same_bits(self, kind):
        spec = ProcessSpec(kind, 100, seed=42, phi=0.5)
        a = generate(spec)
        b = generate(spec)
        assert a == b

    def test_different_seed_differs(self):
        a = generate(ProcessSpec(ProcessKind.WHITE_NOISE, 50, seed=1))
        b = generate(ProcessSpec(ProcessKind.WHITE_NOISE, 50, seed=2))
        assert not np.array_equal(a.values, b.values)


class TestStructure:
    def test_start_length_label(self):
        s = generate(ProcessSpec(ProcessKind.RANDOM_WALK, 30, seed=0), start=Period(1990, 6))
        assert s.start == Period(1990, 6)
        assert len(s) == 30
        assert s.label == "random_walk"

    def test_drift_walk_shares_noise_with_walk(self):
        walk = generate(ProcessSpec(ProcessKind.RANDOM_WALK, 80, seed=3))
        drifted = generate(ProcessSpec(ProcessKind.RANDOM_WALK_DRIFT, 80, seed=3, drift=0.7))
        t = np.arange(1.0, 81.0)
        np.testing.assert_allclose(drifted.values - walk.values, 0.7 * t, atol=1e-10)

    def test_y0_shifts_walk(self):
        base = generate(ProcessSpec(ProcessKind.RANDOM_WALK, 40, seed=3))
        lifted = generate(ProcessSpec(ProcessKind.RANDOM_WALK, 40, seed=3, y0=25.0))
        np.testing.assert_allclose(lifted.values - base.values, 25.0, atol=1e-10)

    def test_trend_stationary_slope(self):
        flat = generate(ProcessSpec(ProcessKind.TREND_STATIONARY, 60, seed=4, trend_slope=0.0))
        steep = generate(ProcessSpec(ProcessKind.TREND_STATIONARY, 60, seed=4, trend_slope=2.0))
        t = np.arange(1.0, 61.0)
        np.testing.assert_allclose(steep.values - flat.values, 2.0 * t, atol=1e-10)

    def test_sigma_scales_noise(self):
        unit = generate(ProcessSpec(ProcessKind.WHITE_NOISE, 60, seed=4))
        wide = generate(ProcessSpec(ProcessKind.WHITE_NOISE, 60, seed=4, sigma=3.0))
        np.testing.assert_allclose(wide.values, 3.0 * unit.values, atol=1e-10)


class TestMoments:
    def test_white_noise_moments(self):
        s = generate(ProcessSpec(ProcessKind.WHITE_NOISE, 5000, seed=11))
        assert abs(float(np.mean(s.values))) < 0.1
        assert float(np.std(s.values)) == pytest.approx(1.0, abs=0.05)

    def test_ar1_autocorrelation(self):
        s = generate(ProcessSpec(ProcessKind.AR1, 5000, seed=12, phi=0.6))
        v = s.values - s.values.mean()
        rho = float(v[1:] @ v[:-1]) / float(v @ v)
        assert rho == pytest.approx(0.6, abs=0.05)


class TestValidation:
    def test_ar1_requires_stationary_phi(self):
        with pytest.raises(ValueError, match="phi"):
            ProcessSpec(ProcessKind.AR1, 10, phi=1.0)

    def test_positive_sigma(self):
        with pytest.raises(ValueError, match="sigma"):
            ProcessSpec(ProcessKind.WHITE_NOISE, 10, sigma=0.0)

    def test_positive_length(self):
        with pytest.raises(ValueError, match="length"):
            ProcessSpec(ProcessKind.WHITE_NOISE, 0)
