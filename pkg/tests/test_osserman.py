# tests/test_osserman.py
import pytest
import numpy as np

from ossermanCliff.clifford import clifford_system_from_family, curvature_from_clifford
from ossermanCliff.curvature import CurvatureTensor, sphere_tensor
from ossermanCliff.exceptions import TensorValidationError
from ossermanCliff.osserman import (
    OssermanReport, Prop2Class, classify, duality_check, osserman_check, prop1_hypotheses,
    radon_guarantees_hypotheses, sixteen_dimensional_criterion
)
from ossermanCliff.utils import SpectrumProfile


@pytest.mark.parametrize("n,nu,reported_nu", [(4, 1, 1), (4, 3, 2), (8, 3, 3), (8, 7, 6), (16, 8, 8)])
def test_clifford_tensors_are_osserman(n, nu, reported_nu):
    """
    Every Clifford tensor has a constant Jacobi spectrum.

    With distinct μ and no room left for λ₀ the largest multiplicity is 1, so
    the reported ν is n − 2 rather than the family size.
    """
    mu = np.linspace(2.0, 4.0, nu)
    R = curvature_from_clifford(clifford_system_from_family(n, 1.0, mu, seed=n + nu))
    report = osserman_check(R, samples=60, seed=3)
    assert report.is_osserman, f"Cliff({nu}) on R^{n}: deviation {report.max_deviation:.3e}"
    assert report.max_deviation < 1e-9 * 4.0
    assert report.nu == reported_nu and report.m0 == n - 1 - reported_nu
    assert report.n == n
    assert report.radon_bound_ok


def test_cliff3_on_r8_profile():
    R = curvature_from_clifford(clifford_system_from_family(8, 1.0, [2.0, 2.0, 2.0], seed=5))
    report = osserman_check(R, samples=50)
    assert report.profile.multiplicities == [4, 3]
    np.testing.assert_allclose(report.profile.values, [1.0, 2.0], atol=1e-10)
    assert report.prop2_class is Prop2Class.UNDETERMINED
    assert report.prop1_hypotheses == (False, True)


def test_sphere_and_zero_tensor():
    report = osserman_check(sphere_tensor(5), samples=20)
    assert report.is_osserman and report.nu == 0 and report.m0 == 4
    zero = osserman_check(CurvatureTensor.zeros(4), samples=20)
    assert zero.is_osserman and zero.profile.pairs == ((0.0, 3),)


def test_block_tensor_is_not_osserman(block_tensor):
    report = osserman_check(block_tensor, samples=200)
    assert not report.is_osserman
    assert report.max_deviation >= 0.5


def test_invalid_tensor_is_rejected():
    comps = np.array(sphere_tensor(3).comps)
    comps[0, 1, 0, 1] += 0.1
    with pytest.raises(TensorValidationError):
        osserman_check(CurvatureTensor(comps))
    with pytest.raises(ValueError):
        osserman_check(sphere_tensor(3), samples=1)


def test_symmetry_tolerance_is_configurable():
    comps = np.array(sphere_tensor(4).comps)
    comps[0, 1, 0, 1] += 1e-8
    R = CurvatureTensor(comps)
    with pytest.raises(TensorValidationError):
        osserman_check(R, samples=10, rel_tol=1e-6)
    report = osserman_check(R, samples=10, rel_tol=1e-6, symmetry_tol=1e-6)
    assert report.is_osserman and report.m0 == 3


def test_duality_holds_for_clifford_tensor(cliff3_r12_tensor):
    report = duality_check(cliff3_r12_tensor, samples=40, seed=1)
    assert report.passed, f"violations: {report.violations[:3]}"
    assert report.max_residual < 1e-9 * 3.0
    assert report.max_kernel_residual < 1e-9 * 3.0
    assert report.pairs_checked == 40


@pytest.mark.parametrize("n,nu", [(4, 1), (4, 3), (8, 3), (8, 7), (16, 8)])
def test_duality_holds_for_every_clifford_tensor(n, nu):
    R = curvature_from_clifford(clifford_system_from_family(n, 1.0, np.linspace(2.0, 4.0, nu), seed=n + nu))
    report = duality_check(R, samples=200, seed=n)
    assert report.passed, f"Cliff({nu}) on R^{n}: {report.violations[:3]}"
    assert report.pairs_checked == 200


def test_duality_fails_on_block_tensor(block_tensor):
    report = duality_check(block_tensor, samples=40, seed=1)
    assert not report.passed
    assert {v.kind for v in report.violations} <= {"eigen", "kernel"}
    assert report.to_dict()["violations"][0]["sample"] >= 0


@pytest.mark.parametrize("n,nu,expected", [
    (12, 3, Prop2Class.TWO_POINT_HOMOGENEOUS),
    (8, 2, Prop2Class.TWO_POINT_HOMOGENEOUS),
    (8, 3, Prop2Class.UNDETERMINED),
    (16, 7, Prop2Class.TWO_POINT_HOMOGENEOUS),
    (16, 8, Prop2Class.UNDETERMINED),
    (4, 1, Prop2Class.UNDETERMINED),
])
def test_classify(n, nu, expected):
    assert classify(n, nu) is expected


def test_classify_rejects_out_of_range_nu():
    with pytest.raises(ValueError):
        classify(4, 4)


def test_dimension_hypotheses():
    assert prop1_hypotheses(12, 3) == (True, True)
    assert prop1_hypotheses(16, 7) == (False, False)
    assert prop1_hypotheses(8, 7) == (False, False)
    assert radon_guarantees_hypotheses(32)
    assert not radon_guarantees_hypotheses(16)


def test_sixteen_dimensional_criterion():
    assert not sixteen_dimensional_criterion(SpectrumProfile(((1.0, 7), (2.0, 8))))
    assert sixteen_dimensional_criterion(SpectrumProfile(((1.0, 12), (2.0, 3))))


def test_report_round_trip(cliff2_r8_tensor):
    report = osserman_check(cliff2_r8_tensor, samples=30)
    again = OssermanReport.from_dict(report.to_dict())
    assert again == report
    frame = report.to_frame()
    assert frame.set_index("field").loc["nu", "value"] == 2
