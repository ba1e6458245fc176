from fractions import Fraction

import numpy as np
import pytest

from wallach.errors import DegeneracyError, InputError
from wallach.liealg import (
    bracket,
    build_classical,
    build_sum,
    closure_residual,
    is_anti_hermitian,
    killing_form_ad,
    orthonormalize,
)

CASES = [("SO", n) for n in (3, 4, 5, 6)] + [("SU", n) for n in (2, 3, 4)] + [("SP", n) for n in (1, 2, 3)]


def expected_dim(fam, n):
    return {"SO": n * (n - 1) // 2, "SU": n * n - 1, "SP": n * (2 * n + 1)}[fam]


@pytest.mark.parametrize("fam,n", CASES)
def test_basis_shape_and_closure(fam, n):
    alg = build_classical(fam, n)
    assert alg.dim == expected_dim(fam, n)
    assert all(is_anti_hermitian(E) for E in alg.basis)
    assert closure_residual(alg) < 1e-12
    assert np.linalg.matrix_rank(alg._real_basis) == alg.dim


@pytest.mark.parametrize("fam,n", CASES)
def test_killing_coefficient_matches_adjoint_trace(fam, n):
    alg = build_classical(fam, n)
    rng = np.random.default_rng(n)
    for _ in range(3):
        X = alg.element(rng.standard_normal(alg.dim))
        Y = alg.element(rng.standard_normal(alg.dim))
        kad = killing_form_ad(alg, X, Y)
        assert kad == pytest.approx(alg.killing(X, Y), rel=1e-10)
    # negative definite, so -B is an inner product
    assert np.all(np.linalg.eigvalsh(alg.gram()) > 0)


def test_killing_coefficients_are_the_trace_factors():
    assert build_classical("SO", 7).killing_coeff == Fraction(5)
    assert build_classical("SU", 3).killing_coeff == Fraction(6)
    assert build_classical("SP", 2).killing_coeff == Fraction(6)


def test_sum_inherits_killing_form():
    f = build_classical("SU", 2)
    g = build_sum(f, 3)
    assert g.dim == 9
    X = g.element(np.arange(9.0))
    Y = g.element(np.arange(9.0)[::-1])
    assert killing_form_ad(g, X, Y) == pytest.approx(g.killing(X, Y), rel=1e-10)


@pytest.mark.parametrize("fam,n", [("SO", 2), ("SO", 1), ("SU", 1), ("SP", 0), ("XX", 3)])
def test_rejects_non_semisimple_or_unknown(fam, n):
    with pytest.raises(InputError):
        build_classical(fam, n)


def test_bracket_shape_mismatch():
    with pytest.raises(InputError):
        bracket(np.zeros((2, 2)), np.zeros((3, 3)))


def test_bracket_is_antisymmetric():
    alg = build_classical("SU", 3)
    X, Y = alg.basis[0], alg.basis[4]
    assert np.allclose(bracket(X, Y), -bracket(Y, X))


def test_coords_rejects_outside_span():
    alg = build_classical("SO", 3)
    with pytest.raises(InputError):
        alg.coords(np.eye(3))


def test_orthonormalize_detects_dependence():
    alg = build_classical("SO", 4)
    vecs = [alg.basis[0], alg.basis[1], alg.basis[0] + 2 * alg.basis[1]]
    with pytest.raises(DegeneracyError):
        orthonormalize(alg, vecs)


def test_orthonormalize_gives_identity_gram():
    alg = build_classical("SP", 2)
    Q = orthonormalize(alg, alg.basis)
    assert np.allclose(alg.gram(np.array(Q)), np.eye(alg.dim), atol=1e-12)
