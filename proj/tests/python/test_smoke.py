import math

import pytest

import qspec


def test_positive_roots():
    assert qspec.positive_roots(2) == [(1, 2), (1, 3), (2, 3)]
    assert len(qspec.positive_roots(4)) == 10
    with pytest.raises(qspec.DomainError):
        qspec.positive_roots(0)


def test_two_rho_pairing():
    assert qspec.two_rho_pairing([1]) == 1
    assert qspec.two_rho_pairing([1, 0]) == 2


def test_quantum_dim_adjoint():
    qd = qspec.quantum_dim(2, [1, 1])
    assert qd["terms"] == [(-4, 1), (-2, 2), (0, 2), (2, 2), (4, 1)]
    assert qd["classical"] == 8
    assert qspec.char_at_k2rho(2, [1, 1]) == qd["terms"]
    assert qspec.char_at_k2rho(2, [1, 1], sign=-1) == qd["terms"]


def test_big_classical_dimension_is_exact():
    dim = qspec.classical_dim(3, [60, 60, 60])
    assert isinstance(dim, int)
    # Lambda + rho = 61 rho, so every factor is 61
    assert dim == 61**6
    assert sum(c for _, c in qspec.quantum_dim(3, [60, 60, 60])["terms"]) == dim


def test_quantum_dim_numeric():
    assert qspec.quantum_dim_numeric(2, [1, 1], 0.5) == pytest.approx(26.5625, rel=1e-14)


def test_multiplicities_agree():
    gt = qspec.multiplicities(3, [1, 0, 1])
    fr = qspec.multiplicities(3, [1, 0, 1], method="freudenthal")
    assert gt == fr
    assert sum(gt.values()) == 15
    assert gt[(0, 0, 0)] == 3


def test_zeta_convergence():
    res = qspec.zeta(2, 0.5, 5.0)
    assert res["converged"]
    assert res["value"] > 0
    assert not qspec.zeta(2, 0.5, 3.5)["converged"]


def test_spectral_dimension():
    p = qspec.spectral_dimension(2, 0.5)
    assert abs(p - 4.0) < 1e-3
    assert qspec.spectral_dimension(2, 0.5, weight="qdim-inverse") == pytest.approx(p, rel=1e-10)
    assert abs(qspec.spectral_dimension(2, 0.5, weight="classical")) < 0.05


def test_residue_limit():
    r = qspec.residue_limit(2, 0.5, 4.0, kernel="pure")
    assert r["limit"] > 0 and math.isfinite(r["limit"])
    assert r["relative_change"] < 1e-4


def test_twisted_defect_scan_decreases():
    scan = qspec.twisted_defect_scan(120, 0.5, 4.0, [4.5, 4.25, 4.125, 4.0625])
    defects = [d for _, d in scan]
    assert all(b < a for a, b in zip(defects, defects[1:]))


def test_verify_quick():
    checks = qspec.verify("quick")
    assert checks
    assert all(passed for _, passed, _ in checks), checks


def test_bad_arguments():
    with pytest.raises(qspec.DomainError):
        qspec.quantum_dim(2, [1, -1])
    with pytest.raises(qspec.DomainError):
        qspec.zeta(2, 1.5, 5.0)
