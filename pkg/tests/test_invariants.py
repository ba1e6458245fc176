import warnings

import numpy as np
import pytest

from wallach import _kernels
from wallach.decomp import GradedDecomposition
from wallach.invariants import (
    IrreducibilityWarning,
    casimir,
    casimir_constant,
    compute_A,
    compute_a_triple,
    triple_sum,
    verify_identities,
)
from wallach.spaces import make_flag_family, make_ledger_obata, make_so_u, make_symmetric_product


def test_so3_is_three_dimensional_wallach_space():
    rep = verify_identities(make_flag_family("SO", 1, 1, 1))
    assert rep.A == pytest.approx(0.5, abs=1e-12)
    assert rep.equality_cases == (1, 2, 3)
    assert rep.passed


def test_so5_values():
    rep = verify_identities(make_flag_family("SO", 2, 2, 1))
    assert rep.dims == (4, 2, 2)
    assert sorted(rep.a) == pytest.approx([1 / 6, 1 / 3, 1 / 3], abs=1e-12)
    assert rep.c == pytest.approx((1 / 3, 1 / 6, 1 / 6), abs=1e-12)
    assert rep.passed


def test_su3_casimir():
    dec = make_flag_family("SU", 1, 1, 1)
    for i in (1, 2, 3):
        assert casimir_constant(dec, i) == pytest.approx(1 / 3, abs=1e-12)
    assert compute_a_triple(dec) == pytest.approx((1 / 6,) * 3, abs=1e-12)


def test_symmetric_product_has_zero_A():
    rep = verify_identities(make_symmetric_product(3))
    assert rep.A == pytest.approx(0.0, abs=1e-14)
    assert rep.c == pytest.approx((0.5, 0.5, 0.5), abs=1e-12)
    assert rep.passed


def test_ledger_obata_A():
    dec = make_ledger_obata("SU", 2)
    assert compute_A(dec) == pytest.approx(0.75, abs=1e-10)


def test_permuted_indices_agree():
    dec = make_so_u(4)
    vals = [triple_sum(dec, *p) for p in ((1, 2, 3), (3, 1, 2), (2, 3, 1), (3, 2, 1))]
    assert max(vals) - min(vals) < 1e-12
    assert triple_sum(dec, 1, 1, 2) < 1e-20


def test_index_validation():
    dec = make_flag_family("SU", 1, 1, 1)
    with pytest.raises(ValueError):
        triple_sum(dec, 1, 2, 4)


def test_reducible_module_warns():
    dec = make_flag_family("SO", 2, 2, 1)
    merged = np.concatenate([dec.p_bases[0], dec.p_bases[1]])
    fake = GradedDecomposition(dec.alg, dec.h_basis, (merged, dec.p_bases[2][:1], dec.p_bases[2][1:]), "merged")
    assert casimir(fake, 1).spread > 1e-3
    with pytest.warns(IrreducibilityWarning):
        casimir_constant(fake, 1)


@pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not installed")
@pytest.mark.parametrize("build", [
    lambda: make_flag_family("SP", 2, 1, 1),
    lambda: make_flag_family("SU", 3, 2, 1),
    lambda: make_so_u(5),
])
def test_numba_and_numpy_kernels_agree(build):
    dec = build()
    C = np.ascontiguousarray(dec.structure_tensor)
    H, P1, P2, P3 = (np.asarray(x, dtype=np.int64) for x in dec.index_sets)
    a = _kernels.triple_partials_numba(C, P1, P2, P3)
    b = _kernels.triple_partials_numpy(C, P1, P2, P3)
    assert np.allclose(a, b, rtol=1e-12, atol=1e-14)
    for P in (P1, P2, P3):
        assert np.allclose(_kernels.casimir_sums_numba(C, H, P), _kernels.casimir_sums_numpy(C, H, P),
                           rtol=1e-12, atol=1e-14)


def test_result_independent_of_thread_count():
    if not _kernels.HAVE_NUMBA:
        pytest.skip("numba not installed")
    import numba

    dec = make_flag_family("SU", 3, 3, 2)
    _kernels.set_num_threads(1)
    a = compute_A(dec)
    _kernels.set_num_threads(numba.config.NUMBA_NUM_THREADS)
    b = compute_A(dec)
    assert a == b


def test_identity_report_serialises():
    rep = verify_identities(make_flag_family("SU", 2, 1, 1))
    d = rep.to_dict()
    assert d["passed"] is True
    assert set(d) >= {"A", "a", "c", "d", "identity_residuals"}
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        casimir_constant(make_flag_family("SU", 2, 1, 1), 1)
