import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fermiparity import qinfo
from fermiparity.dirac import SIGMA_Z, I2
from fermiparity.thermal import ThermalCoefficients, coefficients

GRID = [
    qinfo.ModelParams(s, t, chi, mu)
    for s in (0, 1)
    for t in (1e-3, 1.0, 1e2)
    for chi, mu in ((math.pi / 4, 0.0), (math.pi / 8, math.pi / 2))
]

chi_st = st.floats(min_value=0.0, max_value=math.pi)
mu_st = st.floats(min_value=0.0, max_value=2 * math.pi, exclude_max=True)
t_st = st.floats(min_value=-6, max_value=4).map(lambda e: 10.0**e)


def _random_density(seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def test_model_params_validation():
    with pytest.raises(ValueError):
        qinfo.ModelParams(s=2)
    with pytest.raises(ValueError):
        qinfo.ModelParams(t_m=0.0)
    with pytest.raises(ValueError):
        qinfo.ModelParams(chi=4.0)
    with pytest.raises(ValueError):
        qinfo.ModelParams(mu=7.0)


def test_assembled_entries_at_reference_point():
    params = qinfo.ModelParams(1, 1.0, math.pi / 4, math.pi / 2)
    rho = qinfo.assemble_rho12(params).matrix
    c = coefficients(1, 1.0)
    assert rho[0, 0].real == pytest.approx(0.5 * c.m_pp, abs=1e-15)
    assert rho[0, 2] == pytest.approx(1j * math.pi / 8 * c.m_pm, abs=1e-15)
    assert rho[1, 3] == pytest.approx(-1j * math.pi / 8 * c.m_pm, abs=1e-15)
    assert rho[0, 1] == 0 and rho[0, 3] == 0


def test_assemble_rejects_mismatched_coefficients():
    c = coefficients(1, 1.0)
    with pytest.raises(ValueError):
        qinfo.assemble_rho12(qinfo.ModelParams(0, 1.0), c)
    with pytest.raises(ValueError):
        qinfo.assemble_rho12(qinfo.ModelParams(1, 2.0), c)
    bad = ThermalCoefficients(0.7, 0.4, 0.1, 1, 1.0)
    with pytest.raises(ValueError):
        qinfo.assemble_rho12(qinfo.ModelParams(1, 1.0), bad)


@pytest.mark.parametrize("params", GRID[::3], ids=str)
def test_closed_form_matches_spinor_integral(params):
    closed = qinfo.assemble_rho12(params).matrix
    brute = qinfo.rho12_from_spinor_integral(params).matrix
    np.testing.assert_allclose(closed, brute, atol=1e-8)


@pytest.mark.parametrize("params", GRID, ids=str)
def test_closed_form_spectrum(params):
    c = coefficients(params.s, params.t_m)
    ang = qinfo.angular_coefficients(params.chi, params.mu)
    rho = qinfo.assemble_rho12(params, c).matrix
    closed = np.sort(qinfo.eigvals_closed_rho12(c, ang))[::-1]
    np.testing.assert_allclose(closed, qinfo.hermitian_eigenvalues(rho), atol=1e-12)
    assert closed.sum() == pytest.approx(1.0, abs=1e-12)
    rho1 = qinfo.reduce_parity(rho)
    np.testing.assert_allclose(rho1, qinfo.rho1_closed(c, params.chi), atol=1e-14)
    np.testing.assert_allclose(
        qinfo.eigvals_closed_rho1(c, params.chi), qinfo.hermitian_eigenvalues(rho1), atol=1e-12
    )
    h_pp, h_mm = qinfo.helicity_populations(c, params.chi, params.mu)
    np.testing.assert_allclose(np.diag(qinfo.reduce_helicity(rho)).real, [h_pp, h_mm], atol=1e-14)


@pytest.mark.parametrize("params", GRID, ids=str)
def test_separable_everywhere(params):
    rho = qinfo.assemble_rho12(params).matrix
    res = qinfo.ppt_check(rho)
    assert res.separable and res.pt_equals_rho
    assert res.min_pt_eigenvalue >= -1e-10


def test_bell_state_is_entangled():
    bell = np.zeros(4, dtype=complex)
    bell[[0, 3]] = 1 / math.sqrt(2)
    res = qinfo.ppt_check(np.outer(bell, bell.conj()))
    assert not res.separable
    assert res.min_pt_eigenvalue == pytest.approx(-0.5, abs=1e-12)


@pytest.mark.parametrize("params", GRID, ids=str)
def test_charge_conjugation(params):
    c = coefficients(params.s, params.t_m)
    rho = qinfo.assemble_rho12(params, c).matrix
    cc = qinfo.charge_conjugate(rho)
    np.testing.assert_allclose(cc, qinfo.conjugated_reconstruction(params, c), atol=1e-12)
    np.testing.assert_allclose(qinfo.hermitian_eigenvalues(cc), qinfo.hermitian_eigenvalues(rho), atol=1e-12)


def test_conjugation_sign_free_form_differs_by_local_unitary():
    params = qinfo.ModelParams(1, 1.0, math.pi / 8, math.pi / 2)
    c = coefficients(1, 1.0)
    ang = qinfo.angular_coefficients(params.chi, params.mu).swapped_tilde()
    naive = qinfo.assemble_from_parts(ang, c.m_mm, c.m_pp, c.m_pm)
    u = np.kron(SIGMA_Z, I2)
    cc = qinfo.charge_conjugate(qinfo.assemble_rho12(params, c).matrix)
    np.testing.assert_allclose(u @ naive @ u, cc, atol=1e-14)
    assert np.max(np.abs(naive - cc)) > 0.1


def test_charge_conjugation_is_involution():
    rho = _random_density(3)
    np.testing.assert_allclose(qinfo.charge_conjugate(qinfo.charge_conjugate(rho)), rho, atol=1e-14)


@pytest.mark.parametrize("seed", range(5))
def test_partial_operations_on_generic_state(seed):
    rho = _random_density(seed)
    m = rho.reshape(2, 2, 2, 2)
    r1 = m[:, 0, :, 0] + m[:, 1, :, 1]
    r2 = m[0, :, 0, :] + m[1, :, 1, :]
    np.testing.assert_allclose(qinfo.partial_trace(rho, 2), r1, atol=1e-15)
    np.testing.assert_allclose(qinfo.partial_trace(rho, 1), r2, atol=1e-15)
    pt = qinfo.partial_transpose(rho, 2)
    np.testing.assert_allclose(qinfo.partial_transpose(pt, 2), rho, atol=0)
    pt1 = qinfo.partial_transpose(rho, 1)
    np.testing.assert_allclose(pt1, pt.T, atol=1e-15)


def test_subsystem_validation():
    with pytest.raises(ValueError):
        qinfo.partial_trace(np.eye(4), 3)
    with pytest.raises(ValueError):
        qinfo.partial_transpose(np.eye(4), 0)
    with pytest.raises(ValueError):
        qinfo.hermitian_eigenvalues(np.array([[0, 1], [0, 0]]))


def test_entropy_values_and_guards():
    assert qinfo.von_neumann_entropy([0.5, 0.5]) == pytest.approx(math.log(2), abs=1e-15)
    assert qinfo.von_neumann_entropy([1.0, 0.0, -5e-11]) == 0.0
    with pytest.raises(ValueError):
        qinfo.von_neumann_entropy([1.1, -0.1])
    with pytest.raises(ValueError):
        qinfo.von_neumann_entropy([0.5, 0.4])
    assert qinfo.spectral_data(np.eye(4) / 4).entropy_nats == pytest.approx(math.log(4), abs=1e-14)


def test_mutual_information_vanishes_at_low_temperature():
    assert qinfo.mutual_information(qinfo.ModelParams(1, 1e-5)) <= 1e-4


def test_mutual_information_product_state_zero():
    # chi = 0 gives n± = 1/2 and no parity-helicity coupling in the populations
    assert qinfo.mutual_information(qinfo.ModelParams(1, 1e-6, 0.0, 0.0)) <= 1e-9


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([0, 1]), t_st, chi_st, mu_st)
def test_density_is_a_state(s, t_m, chi, mu):
    params = qinfo.ModelParams(s, t_m, chi, mu)
    rho = qinfo.assemble_rho12(params).matrix
    np.testing.assert_allclose(rho, rho.conj().T, atol=1e-15)
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)
    assert qinfo.hermitian_eigenvalues(rho)[-1] >= -1e-12
    mi = qinfo.mutual_information(params)
    assert 0.0 <= mi <= 2 * math.log(2)


@settings(max_examples=40, deadline=None)
@given(chi_st, mu_st)
def test_angular_coefficient_identities(chi, mu):
    ang = qinfo.angular_coefficients(chi, mu)
    assert ang.n_plus + ang.n_minus == pytest.approx(1.0, abs=1e-15)
    assert ang.nt_plus == pytest.approx(ang.nt_minus.conjugate(), abs=1e-15)
    assert abs(ang.n_plus - 0.5) <= math.pi / 8 + 1e-15


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([0, 1]), t_st, chi_st, mu_st)
def test_spectrum_matches_closed_form_property(s, t_m, chi, mu):
    c = coefficients(s, t_m)
    ang = qinfo.angular_coefficients(chi, mu)
    rho = qinfo.assemble_rho12(qinfo.ModelParams(s, t_m, chi, mu), c).matrix
    closed = np.sort(qinfo.eigvals_closed_rho12(c, ang))[::-1]
    np.testing.assert_allclose(closed, qinfo.hermitian_eigenvalues(rho), atol=1e-12)
