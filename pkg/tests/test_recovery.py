# tests/test_recovery.py
import pytest
import numpy as np

from ossermanCliff.clifford import clifford_system_from_family, curvature_from_clifford
from ossermanCliff.config import RecoveryConfig
from ossermanCliff.curvature import jacobi, mixed_jacobi, sphere_tensor, CurvatureTensor
from ossermanCliff.exceptions import (
    FrameInconsistent, HypothesesViolated, InvalidMu, NotOrthonormal, NotOsserman,
    ObstructionDetected, SpectrumMismatch, TieBreakNeeded
)
from ossermanCliff.osserman import osserman_check
from ossermanCliff.pipeline import RecoveryTrace, recover_clifford
from ossermanCliff.recovery import (
    LambdaOp, align_pair, assemble_frame, factor_jacobi, frame_residual, gauge_generators,
    generic_pair, generic_triple, normalize, peel, phi, phi_semidefinite_gap, phi_spectrum,
    reduce_frame, select_target_eigenvalue, stable_subspace
)
from ossermanCliff.utils import SpectrumProfile, numeric_rank

FAST = RecoveryConfig(samples=40, check_samples=30, subspace_samples=20, triple_samples=16)


@pytest.fixture
def normalized_cliff2(cliff2_r8_tensor):
    report = osserman_check(cliff2_r8_tensor, samples=30)
    return normalize(cliff2_r8_tensor, report.profile)


@pytest.fixture
def cliff2_frame(normalized_cliff2):
    Rn, _, lam = normalized_cliff2
    return assemble_frame(Rn, lam, FAST)


def unit(rng, n):
    X = rng.normal(size=n)
    return X / np.linalg.norm(X)


def test_lambda_op_groups():
    lam = LambdaOp([4.0, 2.0, 2.0])
    assert lam.mu.tolist() == [2.0, 2.0, 4.0]
    groups = lam.groups()
    assert [v for v, _ in groups] == [2.0, 4.0]
    assert [idx.tolist() for _, idx in groups] == [[0, 1], [2]]
    assert lam.without(2.0) == LambdaOp([4.0])
    with pytest.raises(InvalidMu):
        LambdaOp([1.0, 0.0])


def test_normalize_cliff2(normalized_cliff2):
    """λ₀ = 1, μ = (3, 5) normalizes to Λ = (2, 4)."""
    Rn, lambda0, lam = normalized_cliff2
    assert lambda0 == pytest.approx(1.0)
    np.testing.assert_allclose(lam.mu, [2.0, 4.0], atol=1e-9)
    rank = numeric_rank(jacobi(Rn, unit(np.random.default_rng(0), 8)))
    assert rank == 2


def test_normalize_ties():
    R = sphere_tensor(5)
    with pytest.raises(TieBreakNeeded):
        normalize(R, SpectrumProfile(((-1.0, 2), (1.0, 2))))
    _, lambda0, lam = normalize(R, SpectrumProfile(((0.5, 2), (3.0, 2))))
    assert lambda0 == 0.5
    assert lam.mu.tolist() == [2.5, 2.5]


def test_factor_jacobi(normalized_cliff2, rng):
    Rn, _, lam = normalized_cliff2
    X = unit(rng, 8)
    M = factor_jacobi(Rn, X, lam)
    np.testing.assert_allclose(M.T @ M, np.eye(2), atol=1e-10)
    np.testing.assert_allclose(M @ lam.matrix @ M.T, jacobi(Rn, X), atol=1e-9)
    with pytest.raises(SpectrumMismatch):
        factor_jacobi(Rn, X, LambdaOp([2.0, 5.0]))


def test_generic_pair_needs_orthonormal_vectors(normalized_cliff2):
    Rn, _, lam = normalized_cliff2
    E = np.eye(8)
    with pytest.raises(NotOrthonormal):
        generic_pair(Rn, E[0], E[0])


def test_generic_triple(normalized_cliff2, cliff2_r8, rng):
    """Y = J₁J₂X has the same Jacobi image as X, so no triple through X and Y is generic."""
    Rn, _, _ = normalized_cliff2
    Q = np.linalg.qr(rng.normal(size=(8, 8)))[0]
    assert generic_triple(Rn, Q[:, 0], Q[:, 1], Q[:, 2], nu=2)
    assert not generic_triple(Rn, Q[:, 0], Q[:, 1], Q[:, 2], nu=3)

    X = Q[:, 0]
    J1, J2 = cliff2_r8.J
    Y = J1 @ J2 @ X
    Z = np.linalg.qr(np.column_stack([X, Y, rng.normal(size=8)]))[0][:, 2]
    assert not generic_pair(Rn, X, Y)
    assert not generic_triple(Rn, X, Y, Z)

    with pytest.raises(NotOrthonormal):
        generic_triple(Rn, X, X, Z)
    with pytest.raises(NotOrthonormal):
        generic_triple(Rn, X, 2.0 * Y, Z)


def test_align_pair_matches_cross_terms(normalized_cliff2, rng):
    Rn, _, lam = normalized_cliff2
    Q = np.linalg.qr(rng.normal(size=(8, 8)))[0]
    E1, E2 = Q[:, 0], Q[:, 1]
    assert generic_pair(Rn, E1, E2, nu=2)
    M1 = factor_jacobi(Rn, E1, lam)
    M2 = align_pair(M1, Rn, E1, E2, lam)
    cross = M1 @ lam.matrix @ M2.T
    np.testing.assert_allclose(cross + cross.T, 2.0 * mixed_jacobi(Rn, E1, E2), atol=1e-8)
    np.testing.assert_allclose(M2 @ lam.matrix @ M2.T, jacobi(Rn, E2), atol=1e-8)


def test_frame_identities(cliff2_frame, normalized_cliff2, rng):
    Rn, _, lam = normalized_cliff2
    frame = cliff2_frame
    assert frame.nu == 2 and frame.residuals["draws"] >= 1
    assert frame_residual(frame, Rn) < 1e-8 * lam.scale
    for i in range(frame.n):
        np.testing.assert_allclose(phi(frame, frame.basis[:, i]).matrix, np.eye(2), atol=1e-8)
    for _ in range(5):
        X = unit(rng, 8)
        np.testing.assert_allclose(frame.jacobi_of(X), jacobi(Rn, X), atol=1e-8)
        np.testing.assert_allclose(phi_spectrum(frame, X), lam.mu, atol=1e-8)


@pytest.mark.parametrize("n,lambda0,mu,seed", [
    (8, 1.0, [3.0, 5.0], 7),
    (12, 0.5, [1.5, 1.5, 3.0], 11),
    (16, 1.0, [2.0, 3.0, 4.0, 5.0], 3),
])
def test_phi_spectrum_matches_lambda(n, lambda0, mu, seed):
    """ΛΦ(X) is similar to Λ at every unit X."""
    R = curvature_from_clifford(clifford_system_from_family(n, lambda0, mu, seed=seed))
    Rn, _, lam = normalize(R, osserman_check(R, samples=30).profile)
    frame = assemble_frame(Rn, lam, FAST)
    rng = np.random.default_rng(seed)
    expected = np.sort(lam.mu)
    for _ in range(100):
        got = np.sort(phi_spectrum(frame, unit(rng, n)))
        np.testing.assert_allclose(got, expected, atol=1e-9 * lam.scale)


def test_semidefinite_gap(cliff2_frame, rng):
    lambda_alpha, _ = select_target_eigenvalue(cliff2_frame.lambda_op)
    assert lambda_alpha == pytest.approx(4.0)
    for _ in range(10):
        assert phi_semidefinite_gap(cliff2_frame, unit(rng, 8), lambda_alpha) > -1e-8


def test_stable_subspace_gauge_and_peel(cliff2_frame, normalized_cliff2, cliff2_r8_tensor, rng):
    """One peeling round removes the λ_α = 4 group and leaves a rank-one remainder."""
    Rn, _, lam = normalized_cliff2
    frame = cliff2_frame
    S = stable_subspace(frame, lam, samples=20, seed=1)
    assert S.shape == (2, 1)

    X0 = unit(rng, 8)
    J_list = gauge_generators(frame, S, X0, lam, samples=20, seed=2)
    assert len(J_list) == 1
    J = J_list[0]
    np.testing.assert_allclose(J + J.T, 0.0, atol=1e-10)
    np.testing.assert_allclose(J @ J, -np.eye(8), atol=1e-7)
    X = unit(rng, 8)
    np.testing.assert_allclose(jacobi(cliff2_r8_tensor, X) @ (J @ X), 5.0 * (J @ X), atol=1e-7)

    lambda_alpha, _ = select_target_eigenvalue(lam)
    remainder = peel(Rn, lambda_alpha, J_list)
    assert numeric_rank(jacobi(remainder, unit(rng, 8))) == 1
    reduced = reduce_frame(frame, X0, lambda_alpha)
    np.testing.assert_allclose(reduced.lambda_op.mu, [2.0], atol=1e-9)
    assert frame_residual(reduced, remainder) < 1e-7


def test_assemble_frame_rejects_non_osserman(block_tensor):
    with pytest.raises(FrameInconsistent):
        assemble_frame(block_tensor, LambdaOp([1.0]), FAST)


def _assert_reconstructs(system, R):
    rebuilt = curvature_from_clifford(system)
    assert np.max(np.abs(rebuilt.comps - R.comps)) < 1e-8 * max(1.0, R.norm)


def test_recover_cliff2(cliff2_r8_tensor):
    trace = RecoveryTrace()
    system = recover_clifford(cliff2_r8_tensor, FAST, trace)
    assert system.nu == 2
    assert system.lambda0 == pytest.approx(1.0)
    np.testing.assert_allclose(np.sort(system.mu), [3.0, 5.0], atol=1e-8)
    _assert_reconstructs(system, cliff2_r8_tensor)
    stages = [s.stage for s in trace.stages]
    assert stages[:3] == ["verify", "hypotheses", "normalize"]
    assert stages[-1] == "output"
    assert stages.count("peel") >= 2


def test_recover_cliff3_with_repeated_mu(cliff3_r12_tensor):
    system = recover_clifford(cliff3_r12_tensor, FAST)
    assert system.nu == 3
    np.testing.assert_allclose(np.sort(system.mu), [1.5, 1.5, 3.0], atol=1e-8)
    _assert_reconstructs(system, cliff3_r12_tensor)


@pytest.mark.slow
def test_recover_cliff4_with_negative_eigenvalues():
    R = curvature_from_clifford(clifford_system_from_family(16, 1.0, [3.0, 3.0, -1.0, -1.0], seed=3))
    system = recover_clifford(R, FAST)
    assert system.nu == 4
    np.testing.assert_allclose(np.sort(system.mu), [-1.0, -1.0, 3.0, 3.0], atol=1e-8)
    _assert_reconstructs(system, R)


def test_recover_sphere_and_zero_tensor():
    system = recover_clifford(sphere_tensor(5), FAST)
    assert system.nu == 0 and system.lambda0 == pytest.approx(1.0)
    zero = recover_clifford(CurvatureTensor.zeros(4), FAST)
    assert zero.nu == 0 and zero.lambda0 == 0.0


def test_recover_rejects_non_osserman(block_tensor):
    trace = RecoveryTrace()
    with pytest.raises(NotOsserman) as info:
        recover_clifford(block_tensor, FAST, trace)
    assert info.value.stage == "verify"
    assert trace.stages == []


def test_recover_cayley_violates_hypotheses():
    from ossermanCliff.cayley import cayley_tensor
    with pytest.raises(HypothesesViolated) as info:
        recover_clifford(cayley_tensor(), FAST)
    assert info.value.stage == "hypotheses"


@pytest.mark.slow
def test_recover_cayley_forced_reports_obstruction():
    from ossermanCliff.cayley import cayley_tensor
    config = FAST.with_overrides(force=True, retries=1, max_redraws=5)
    with pytest.raises(ObstructionDetected) as info:
        recover_clifford(cayley_tensor(), config)
    assert info.value.stage in {"frame", "subspace", "gauge", "peel", "output"}


def test_recovery_is_seeded(cliff2_r8_tensor):
    a = recover_clifford(cliff2_r8_tensor, FAST)
    b = recover_clifford(cliff2_r8_tensor, FAST)
    np.testing.assert_array_equal(a.J, b.J)
    np.testing.assert_array_equal(a.mu, b.mu)
