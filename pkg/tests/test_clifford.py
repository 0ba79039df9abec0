# tests/test_clifford.py
import pytest
import numpy as np
from hypothesis import given, strategies as st

from ossermanCliff.clifford import (
    CliffordSystem, clifford_jacobi, clifford_profile, clifford_system_from_family,
    curvature_from_clifford, generate_hurwitz_family, radon_number, validate_clifford
)
from ossermanCliff.curvature import jacobi, jacobi_spectrum, validate_tensor
from ossermanCliff.exceptions import ExceedsRadonBound, InvalidMu, InvalidSystem, ShapeMismatch

RADON_TABLE = {1: 1, 2: 2, 3: 1, 4: 4, 6: 2, 8: 8, 12: 4, 16: 9, 24: 8, 32: 10, 48: 9, 64: 12, 128: 16, 256: 17}


@pytest.mark.parametrize("n,rho", sorted(RADON_TABLE.items()))
def test_radon_number_table(n, rho):
    assert radon_number(n) == rho


@given(st.integers(min_value=0, max_value=200))
def test_radon_number_is_unchanged_by_odd_factors(k):
    """ρ only depends on the 2-adic part of n."""
    odd = 2 * k + 1
    for power in (1, 2, 8, 16):
        assert radon_number(power * odd) == radon_number(power)


def test_radon_number_rejects_zero():
    with pytest.raises(ValueError):
        radon_number(0)


@pytest.mark.parametrize("n", [2, 4, 6, 8, 12, 16, 32])
def test_maximal_hurwitz_families_pass_validation(n):
    nu = radon_number(n) - 1
    J = generate_hurwitz_family(n, nu)
    assert len(J) == nu
    system = CliffordSystem(n, 0.0, np.arange(1, nu + 1, dtype=float), J)
    report = validate_clifford(system)
    assert report.passed, f"n={n}: failing {report.failing()} residuals {report.residuals}"


@pytest.mark.parametrize("n", [4, 8, 16])
def test_hurwitz_family_beyond_radon_bound(n):
    with pytest.raises(ExceedsRadonBound):
        generate_hurwitz_family(n, radon_number(n))


def test_system_rejects_mu_equal_to_lambda0():
    with pytest.raises(InvalidMu):
        CliffordSystem(4, 1.0, [1.0], generate_hurwitz_family(4, 1))


def test_system_shape_checks():
    with pytest.raises(ShapeMismatch):
        CliffordSystem(4, 1.0, [2.0, 3.0], generate_hurwitz_family(4, 1))
    empty = CliffordSystem(4, 1.0, [], [])
    assert empty.nu == 0 and validate_clifford(empty).passed


def test_validation_flags_non_anticommuting_pair():
    J = generate_hurwitz_family(4, 1)[0]
    system = CliffordSystem(4, 0.0, [1.0, 2.0], [J, J])
    report = validate_clifford(system)
    assert not report.passed
    assert "hurwitz" in report.failing()
    with pytest.raises(InvalidSystem):
        curvature_from_clifford(system)


def test_cliff1_on_r4_spectrum(rng):
    """λ₀ = 1, μ = 4: spectrum {(1, 2), (4, 1)} at every unit vector."""
    system = clifford_system_from_family(4, 1.0, [4.0])
    R = curvature_from_clifford(system)
    assert validate_tensor(R).passed
    for _ in range(5):
        X = rng.normal(size=4)
        X /= np.linalg.norm(X)
        profile = jacobi_spectrum(R, X)
        assert profile.multiplicities == [2, 1]
        np.testing.assert_allclose(profile.values, [1.0, 4.0], atol=1e-10)


def test_clifford_jacobi_matches_tensor(cliff3_r12, cliff3_r12_tensor, rng):
    X = rng.normal(size=12)
    np.testing.assert_allclose(clifford_jacobi(cliff3_r12, X), jacobi(cliff3_r12_tensor, X), atol=1e-10)


def test_clifford_profile(cliff3_r12):
    profile = clifford_profile(cliff3_r12)
    assert profile.multiplicities == [8, 2, 1]
    np.testing.assert_allclose(profile.values, [0.5, 1.5, 3.0])


def test_rotated_family_keeps_relations(cliff2_r8):
    assert validate_clifford(cliff2_r8).passed
    unrotated = clifford_system_from_family(8, 1.0, [3.0, 5.0])
    assert not np.allclose(unrotated.J, cliff2_r8.J)
