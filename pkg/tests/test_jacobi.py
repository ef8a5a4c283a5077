"""Rotation engine: beta functions, Givens mechanics, QR/SVD contracts."""

import math

import numpy as np
import pytest
from algdecomp import (AlgebraError, AlgMatrix, ConvergenceError, Element,
                       GivensParams, apply_givens_left, apply_shift_left, aqr,
                       asvd, beta_basis, beta_division, beta_prime, biquat,
                       clifford, cyclic, decency_check, givens_matrix, laurent,
                       quadquat, random_element, random_matrix)
from oracles import spectrum_oracle


def elem(spec, pairs):
    return Element(spec, pairs)


# -- beta functions -----------------------------------------------------------

def test_beta_basis_picks_largest():
    spec = clifford(2, 0)
    a = Element(spec, {0b01: 2.0, 0b10: -3.0})
    assert beta_basis(a) == spec.basis_element(0b10)


def test_beta_basis_zero_gives_one():
    spec = clifford(2, 0)
    assert beta_basis(spec.zero()) == spec.one()


def test_beta_basis_laurent_monomial():
    L = laurent(1)
    a = Element(L, {(-2,): 1.0, (3,): 5.0})
    assert beta_basis(a) == L.basis_element((3,))


def test_beta_basis_tie_break_canonical():
    spec = clifford(2, 0)
    a = Element(spec, {0b10: 1.0, 0b01: 1.0})
    assert beta_basis(a) == spec.basis_element(0b01)  # g1 before g2


def test_beta_division_complex():
    C = clifford(0, 1)
    a = Element(C, {0: 3.0, 1: 4.0})
    assert (beta_division(a) - a / 5.0).norm2() < 1e-15


def test_beta_division_aligns_norm():
    H = clifford(0, 2)
    rng = np.random.default_rng(0)
    for _ in range(20):
        a = random_element(H, rng)
        val = (beta_division(a).conj() * a).re()
        assert math.isclose(val, a.norm2(), rel_tol=1e-12)


def test_beta_division_zero_and_domain():
    H = clifford(0, 2)
    assert beta_division(H.zero()) == H.one()
    with pytest.raises(AlgebraError):
        beta_division(clifford(2, 0).one())


def test_beta_prime_passthrough_when_decent():
    H = clifford(0, 2)
    rng = np.random.default_rng(1)
    wrapped = beta_prime(beta_basis)
    for _ in range(20):
        a = random_element(H, rng)
        assert wrapped(a) == beta_basis(a)


def test_beta_prime_falls_back_to_one():
    spec = clifford(1, 0)
    a = Element(spec, {0: 5.0, 1: 1.0})

    def inner(_):
        return spec.basis_element(1)

    # |Re(conj(g1) a)| = 1 < |Re(a)| = 5, so the wrapper must return 1
    assert beta_prime(inner)(a) == spec.one()
    assert beta_prime(inner)(spec.zero()) == spec.one()


# -- Givens mechanics ----------------------------------------------------------

def test_zero_angle_is_identity():
    spec = clifford(2, 1)
    rng = np.random.default_rng(2)
    X = random_matrix(spec, 3, 2, rng)
    g = GivensParams(0.0, spec.basis_element(0b11), 2, 0)
    assert (apply_givens_left(X, g) - X).frob() == 0.0


def test_givens_matrix_hermitian_inverse():
    spec = clifford(0, 2)
    b = spec.basis_element(0b01)
    G = givens_matrix(spec, 3, GivensParams(0.7, b, 2, 1))
    Gm = givens_matrix(spec, 3, GivensParams(-0.7, b, 2, 1))
    assert (G.herm() - Gm).frob() < 1e-15
    assert (G.herm() @ G - AlgMatrix.identity(spec, 3)).frob() < 1e-15


def test_real_two_vector_rotation():
    R = clifford(0, 0)
    v = AlgMatrix(R, [[R.scalar(1.0)], [R.scalar(1.0)]])
    theta = -math.atan2(1.0, 1.0)
    w = apply_givens_left(v, GivensParams(theta, R.one(), 1, 0))
    assert math.isclose(w[0, 0].re(), math.sqrt(2), rel_tol=1e-15)
    assert abs(w[1, 0].re()) < 1e-15


def test_rotation_real_part_identity():
    # after the pivot-aligning angle, Re(w_j)^2 = Re(v_j)^2 + Re(conj(b) v_i)^2
    spec = clifford(3, 0)
    rng = np.random.default_rng(3)
    for _ in range(200):
        v = random_matrix(spec, 4, 1, rng)
        b = spec.basis_element(spec.labels[rng.integers(spec.dim)])
        i = int(rng.integers(1, 4))
        j = int(rng.integers(0, i))
        y = (b.conj() * v[i, 0]).re()
        x = v[j, 0].re()
        w = apply_givens_left(v, GivensParams(-math.atan2(y, x), b, i, j))
        assert math.isclose(w[j, 0].re() ** 2, x * x + y * y,
                            rel_tol=1e-12, abs_tol=1e-12)


def test_rotation_touches_only_two_rows_and_preserves_frob():
    spec = quadquat()
    rng = np.random.default_rng(4)
    X = random_matrix(spec, 4, 3, rng)
    b = spec.basis_element(spec.labels[5])
    Y = apply_givens_left(X, GivensParams(0.37, b, 2, 0))
    for r in (1, 3):
        for c in range(3):
            assert Y[r, c] == X[r, c]
    assert math.isclose(Y.frob(), X.frob(), rel_tol=1e-13)


def test_shift_left_scales_one_row():
    spec = clifford(0, 1)
    rng = np.random.default_rng(5)
    X = random_matrix(spec, 3, 2, rng)
    b = spec.basis_element(1)
    Y = apply_shift_left(X, b, 1)
    assert Y[1, 0] == b * X[1, 0]
    assert Y[0, 0] == X[0, 0]


def test_shift_right_scales_one_column():
    from algdecomp import apply_shift_right
    spec = clifford(0, 2)
    rng = np.random.default_rng(22)
    X = random_matrix(spec, 2, 3, rng)
    b = spec.basis_element(0b10)
    Y = apply_shift_right(X, b, 2)
    assert Y[0, 2] == X[0, 2] * b  # right multiplication, order matters
    assert Y[0, 1] == X[0, 1]


def test_non_unitary_shift_rejected():
    spec = clifford(1, 0)
    X = AlgMatrix.identity(spec, 2)
    with pytest.raises(AlgebraError):
        apply_shift_left(X, Element(spec, {0: 1.0, 1: 1.0}), 0)


def test_indecent_beta_flagged_in_report():
    spec = clifford(1, 0)
    A = AlgMatrix(spec, [[Element(spec, {0: 5.0, 1: 1.0})],
                         [Element(spec, {0: 1.0, 1: 0.5})]])

    def shrinking(a):  # drops |Re| on the pivot: fails condition (2)
        return a.spec.basis_element(1)

    try:
        rep = aqr(A, beta=shrinking, eps=1e-8, max_sweeps=3)
    except ConvergenceError as exc:
        rep = exc.report
    assert rep.decency_warnings > 0


# -- QR ---------------------------------------------------------------------------

def test_qr_identity_needs_no_rotations():
    spec = clifford(2, 1)
    rep = aqr(AlgMatrix.identity(spec, 3), eps=1e-12)
    assert rep.rotations == 0
    assert rep.sweeps == 1
    assert (rep.r - AlgMatrix.identity(spec, 3)).frob() == 0.0
    assert (rep.q - AlgMatrix.identity(spec, 3)).frob() == 0.0


def test_qr_real_flip_hand_trace():
    R = clifford(0, 0)
    A = AlgMatrix(R, [[R.scalar(0), R.scalar(1)], [R.scalar(1), R.scalar(0)]])
    rep = aqr(A, eps=0.0)
    assert rep.rotations == 1
    assert rep.sweeps == 1
    assert (rep.r - AlgMatrix.identity(R, 2)).frob() < 1e-15
    assert ((rep.q @ rep.r) - A).frob() < 1e-15


@pytest.mark.parametrize("spec", [clifford(0, 1), clifford(0, 2)])
def test_qr_division_exact_termination(spec):
    rng = np.random.default_rng(6)
    A = random_matrix(spec, 6, 4, rng)
    rep = aqr(A, eps=0.0)
    # one rotation per below-diagonal position, one sweep
    assert rep.rotations == sum(6 - k for k in range(1, 5))
    assert rep.sweeps == 1
    assert rep.residual == 0.0
    for j in range(4):
        for i in range(j + 1, 6):
            assert rep.r[i, j].norm2() == 0.0
    scale = A.frob()
    for k in range(4):
        dkk = rep.r[k, k]
        assert dkk.re() >= 0.0
        assert (dkk - spec.scalar(dkk.re())).norm2() <= 1e-13 * scale
    assert (rep.q @ rep.r - A).frob() <= 1e-12 * scale


def test_qr_rotation_count_skips_zero_entries():
    # exact termination rotates once per below-diagonal entry that is
    # nonzero when its column is processed; a zero in the first column is
    # never repopulated, so it saves its rotation
    H = clifford(0, 2)
    rng = np.random.default_rng(20)
    A = random_matrix(H, 6, 4, rng)
    A[3, 0] = H.zero()
    rep = aqr(A, eps=0.0)
    assert rep.rotations == 14 - 1
    assert rep.sweeps == 1
    assert rep.residual == 0.0


def test_svd_spectrum_matches_rmr_oracle():
    spec = clifford(2, 1)
    rng = np.random.default_rng(21)
    A = random_matrix(spec, 3, 2, rng)
    rep = asvd(A, eps=1e-11)
    assert np.allclose(spectrum_oracle(A), spectrum_oracle(rep.d), atol=1e-7)


def test_qr_eps_validation():
    spec = clifford(2, 0)
    A = AlgMatrix.identity(spec, 2)
    with pytest.raises(AlgebraError):
        aqr(A, eps=0.0)  # basis beta cannot promise exact termination
    with pytest.raises(AlgebraError):
        aqr(A, eps=-1.0)
    with pytest.raises(AlgebraError):
        aqr(A, max_sweeps=0)


@pytest.mark.parametrize("spec,shape", [
    (clifford(2, 0), (3, 3)), (clifford(1, 2), (4, 3)),
    (quadquat(), (3, 3)), (biquat(), (3, 4)), (cyclic(1, 8), (3, 3)),
])
def test_qr_reconstruction_contract(spec, shape):
    rng = np.random.default_rng(7)
    A = random_matrix(spec, *shape, rng)
    rep = aqr(A, eps=1e-10)
    scale = A.frob()
    assert (rep.q @ rep.r - A).frob() <= 1e-10 * scale
    assert (rep.q.herm() @ rep.q
            - AlgMatrix.identity(spec, A.m)).frob() <= 1e-11 * A.m
    assert rep.residual <= 1e-10
    for k in range(min(A.m, A.n)):
        assert rep.r[k, k].re() >= 0.0


def test_qr_invariants_via_steps():
    spec = clifford(2, 1)
    rng = np.random.default_rng(8)
    A = random_matrix(spec, 4, 3, rng)
    norms = []
    tops = []

    def watch(R):
        norms.append(R.frob())
        tops.append(R[0, 0].re() ** 2)

    aqr(A, eps=1e-9, on_step=watch)
    base = A.frob()
    assert all(abs(f - base) <= 1e-12 * base for f in norms)
    assert all(b >= a - 1e-13 * max(base ** 2, 1.0)
               for a, b in zip(tops, tops[1:]))


def test_qr_convergence_error_carries_partials():
    C = clifford(0, 1)
    A = AlgMatrix(C, [[C.scalar(1)], [C.basis_element(1)]])

    def indecent(a):
        return a.spec.one()

    with pytest.raises(ConvergenceError) as exc:
        aqr(A, beta=indecent, eps=1e-10, max_sweeps=5)
    rep = exc.value.report
    assert rep.q is not None and rep.r is not None
    assert rep.stalled_pivots > 0
    assert rep.residual > 1e-10


def test_qr_trim_runs_and_reports():
    L = laurent(1)
    rng = np.random.default_rng(9)
    A = random_matrix(L, 3, 2, rng, degree=1)
    rep = aqr(A, eps=1e-6, trim=1e-10)
    assert (rep.q @ rep.r - A).frob() <= 1e-5 * A.frob()
    assert rep.trimmed >= 0


# -- SVD ---------------------------------------------------------------------------

def test_svd_diagonal_input_is_noop():
    spec = clifford(2, 0)
    A = AlgMatrix.zeros(spec, 3, 2)
    A[0, 0] = spec.scalar(2.0)
    A[1, 1] = spec.basis_element(0b11, 1.5)
    rep = asvd(A, eps=1e-10)
    assert rep.qrd_calls == 0
    assert (rep.u - AlgMatrix.identity(spec, 3)).frob() == 0.0
    assert (rep.v - AlgMatrix.identity(spec, 2)).frob() == 0.0
    assert (rep.d - A).frob() == 0.0


def test_svd_real_flip():
    R = clifford(0, 0)
    A = AlgMatrix(R, [[R.scalar(0), R.scalar(1)], [R.scalar(1), R.scalar(0)]])
    rep = asvd(A, eps=1e-12)
    assert rep.residual <= 1e-12
    for k in range(2):
        assert math.isclose(rep.d[k, k].re(), 1.0, abs_tol=1e-10)


def test_svd_quaternion_matches_rmr_spectrum():
    H = clifford(0, 2)
    rng = np.random.default_rng(10)
    A = random_matrix(H, 2, 2, rng)
    rep = asvd(A, eps=1e-12)
    diag = sorted((rep.d[k, k].re() for k in range(2)), reverse=True)
    oracle = spectrum_oracle(A)  # 8 values: each singular value 4 times
    want = sorted(np.repeat(diag, 4), reverse=True)
    assert np.allclose(oracle, want, atol=1e-8)
    recon = rep.u @ rep.d @ rep.v.herm()
    assert (recon - A).frob() <= 1e-9 * A.frob()


def test_svd_reconstruction_contract():
    spec = biquat()
    rng = np.random.default_rng(11)
    A = random_matrix(spec, 3, 2, rng)
    rep = asvd(A, eps=1e-10)
    assert (rep.u @ rep.d @ rep.v.herm() - A).frob() <= 1e-9 * A.frob()
    assert rep.residual <= 1e-10
    m = max(A.m, A.n)
    assert (rep.u.herm() @ rep.u
            - AlgMatrix.identity(spec, A.m)).frob() <= 1e-11 * m
    assert (rep.v.herm() @ rep.v
            - AlgMatrix.identity(spec, A.n)).frob() <= 1e-11 * m


def test_svd_eps_validation():
    spec = clifford(0, 1)
    A = AlgMatrix.identity(spec, 2)
    with pytest.raises(AlgebraError):
        asvd(A, eps=0.0)
    with pytest.raises(AlgebraError):
        asvd(A, max_iters=0)


def test_svd_iteration_budget():
    spec = clifford(2, 0)
    rng = np.random.default_rng(12)
    A = random_matrix(spec, 3, 3, rng)
    with pytest.raises(ConvergenceError) as exc:
        asvd(A, eps=1e-12, max_iters=1)
    assert exc.value.report.qrd_calls >= 1


# -- decency ---------------------------------------------------------------------------

def test_beta_basis_decent_sup_norm():
    res = decency_check("basis", clifford(4, 1), samples=500, norm="inf",
                        rng=np.random.default_rng(13))
    assert res.passed
    assert res.rho >= 1.0


def test_beta_basis_two_norm_floor():
    res = decency_check("basis", clifford(4, 1), samples=500, norm="two",
                        rng=np.random.default_rng(14))
    assert res.passed
    assert res.rho >= 32 ** -0.5


def test_constant_beta_fails_with_witness():
    C = clifford(0, 1)

    def one(a):
        return a.spec.one()

    res = decency_check(one, C, samples=50, rng=np.random.default_rng(15))
    assert not res.passed
    assert res.witness == C.basis_element(1)  # the imaginary unit


def test_division_beta_decent_two_norm():
    res = decency_check("division", clifford(0, 2), samples=300, norm="two",
                        rng=np.random.default_rng(16))
    assert res.passed
    assert res.rho >= 1.0 - 1e-12
