"""Compact matrix Lie algebras with their Killing forms.

Elements are dense complex ``numpy`` matrices.  Algebras are treated as real
vector spaces: coordinates with respect to ``LieAlg.basis`` are real.

The Killing form of each classical family is ``B(X, Y) = kappa * Re tr(XY)`` in
the defining representation, with ``kappa`` chosen so that ``-B`` is positive
definite::

    so(n):  kappa = n - 2
    su(n):  kappa = 2n
    sp(n):  kappa = 2(n + 1)      (sp(n) realised inside u(2n))

``killing_form_ad`` computes ``tr(ad X ad Y)`` independently and is used to
check these coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from .errors import DegeneracyError, InputError

LINALG_TOL = 1e-10
VALUE_TOL = 1e-8

FAMILIES = ("SO", "SU", "SP")


def _unit(n: int, a: int, b: int) -> np.ndarray:
    E = np.zeros((n, n), dtype=complex)
    E[a, b] = 1.0
    return E


def bracket(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Commutator ``XY - YX``."""
    X = np.asarray(X)
    Y = np.asarray(Y)
    if X.ndim != 2 or X.shape[0] != X.shape[1] or X.shape != Y.shape:
        raise InputError(f"bracket needs two square matrices of equal size, got {X.shape} and {Y.shape}")
    return X @ Y - Y @ X


def is_anti_hermitian(X: np.ndarray, tol: float = 1e-12) -> bool:
    return bool(np.max(np.abs(X + X.conj().T), initial=0.0) <= tol)


def as_real_vector(X: np.ndarray) -> np.ndarray:
    X = np.asarray(X)
    return np.concatenate([X.real.ravel(), X.imag.ravel()])


@dataclass(frozen=True, eq=False)
class LieAlg:
    """A compact matrix Lie algebra with a fixed real basis.

    ``family`` is one of ``SO``, ``SU``, ``SP`` or ``SUM``.  For ``SUM`` the
    algebra is ``copies`` orthogonal copies of ``summand`` realised as
    block-diagonal matrices and ``params == (copies,)``.
    """

    family: str
    params: tuple[int, ...]
    basis: np.ndarray
    killing_coeff: Fraction
    summand: "LieAlg | None" = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def size(self) -> int:
        """Matrix size of the carrier."""
        return self.basis.shape[1]

    @property
    def name(self) -> str:
        if self.family == "SUM":
            return f"{self.params[0]}*{self.summand.name}"
        return f"{self.family.lower()}({self.params[0]})"

    @cached_property
    def _real_basis(self) -> np.ndarray:
        # rows are basis vectors flattened into R^{2 n^2}
        return np.stack([as_real_vector(E) for E in self.basis])

    @cached_property
    def _pinv(self) -> np.ndarray:
        return np.linalg.pinv(self._real_basis)

    def coords(self, X: np.ndarray, tol: float = 1e-8) -> np.ndarray:
        """Real coordinates of ``X`` in ``basis``; raises if ``X`` is not in the span."""
        v = as_real_vector(X)
        c = v @ self._pinv
        resid = np.max(np.abs(c @ self._real_basis - v), initial=0.0)
        if resid > tol * max(1.0, np.max(np.abs(v), initial=0.0)):
            raise InputError(f"matrix is not in the span of {self.name} (residual {resid:.3e})")
        return c

    def coords_many(self, Xs: np.ndarray) -> np.ndarray:
        """Coordinates of a stack of matrices, without the membership check."""
        Xs = np.asarray(Xs)
        flat = np.concatenate([Xs.real.reshape(len(Xs), -1), Xs.imag.reshape(len(Xs), -1)], axis=1)
        return flat @ self._pinv

    def element(self, coords) -> np.ndarray:
        return np.tensordot(np.asarray(coords, dtype=float), self.basis, axes=1)

    def killing(self, X: np.ndarray, Y: np.ndarray) -> float:
        """Killing form via the trace formula ``kappa * Re tr(XY)``."""
        return float(self.killing_coeff) * float(np.real(np.trace(X @ Y)))

    def inner(self, X: np.ndarray, Y: np.ndarray) -> float:
        """The reference inner product ``<X, Y> = -B(X, Y)``."""
        return -self.killing(X, Y)

    def gram(self, vectors=None) -> np.ndarray:
        V = self.basis if vectors is None else np.asarray(vectors)
        # Re tr(X_a X_b) for all pairs
        G = np.real(np.einsum("aij,bji->ab", V, V))
        return -float(self.killing_coeff) * G


def _so_basis(n: int) -> list[np.ndarray]:
    return [_unit(n, a, b) - _unit(n, b, a) for a in range(n) for b in range(a + 1, n)]


def _su_basis(n: int) -> list[np.ndarray]:
    out = [_unit(n, a, b) - _unit(n, b, a) for a in range(n) for b in range(a + 1, n)]
    out += [1j * (_unit(n, a, b) + _unit(n, b, a)) for a in range(n) for b in range(a + 1, n)]
    out += [1j * (_unit(n, a, a) - _unit(n, a + 1, a + 1)) for a in range(n - 1)]
    return out


def _u_basis(n: int) -> list[np.ndarray]:
    out = [_unit(n, a, b) - _unit(n, b, a) for a in range(n) for b in range(a + 1, n)]
    out += [1j * (_unit(n, a, b) + _unit(n, b, a)) for a in range(n) for b in range(a + 1, n)]
    out += [1j * _unit(n, a, a) for a in range(n)]
    return out


def _sp_basis(n: int) -> list[np.ndarray]:
    """Basis of ``{X in u(2n) : X^T J + J X = 0}``, ``J = [[0, I], [-I, 0]]``."""
    out = []
    Z = np.zeros((n, n), dtype=complex)
    for A in _u_basis(n):
        out.append(np.block([[A, Z], [Z, A.conj()]]))
    sym = [_unit(n, a, b) + _unit(n, b, a) for a in range(n) for b in range(a + 1, n)]
    sym += [_unit(n, a, a) for a in range(n)]
    for S in sym:
        out.append(np.block([[Z, S], [-S, Z]]))
    for S in sym:
        out.append(np.block([[Z, 1j * S], [1j * S, Z]]))
    return out


def symplectic_form(n: int) -> np.ndarray:
    I = np.eye(n)
    Z = np.zeros((n, n))
    return np.block([[Z, I], [-I, Z]])


def build_classical(family: str, n: int) -> LieAlg:
    """Standard basis of ``so(n)``, ``su(n)`` or ``sp(n)``."""
    fam = str(family).upper()
    if fam not in FAMILIES:
        raise InputError(f"unsupported family {family!r}; expected one of {FAMILIES}")
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise InputError(f"n must be an integer, got {n!r}")
    n = int(n)
    # so(2) is abelian, so its Killing form vanishes
    minimum = {"SO": 3, "SU": 2, "SP": 1}[fam]
    if n < minimum:
        raise InputError(f"{fam.lower()}({n}) is not semisimple; need n >= {minimum}")
    if fam == "SO":
        basis, kappa = _so_basis(n), Fraction(n - 2)
    elif fam == "SU":
        basis, kappa = _su_basis(n), Fraction(2 * n)
    else:
        basis, kappa = _sp_basis(n), Fraction(2 * (n + 1))
    return LieAlg(fam, (n,), np.array(basis), kappa)


def build_sum(summand: LieAlg, copies: int) -> LieAlg:
    """Direct sum of ``copies`` copies of ``summand`` as block-diagonal matrices.

    The Killing form of a direct sum restricts to each ideal's own Killing
    form, and ``tr`` of a block-diagonal product is the sum of block traces,
    so the trace coefficient is inherited from the summand.
    """
    if summand.family == "SUM":
        raise InputError("nested direct sums are not supported")
    if copies < 1:
        raise InputError("copies must be positive")
    m = summand.size
    N = m * copies
    basis = []
    for c in range(copies):
        for E in summand.basis:
            X = np.zeros((N, N), dtype=complex)
            X[c * m:(c + 1) * m, c * m:(c + 1) * m] = E
            basis.append(X)
    return LieAlg("SUM", (copies,), np.array(basis), summand.killing_coeff, summand)


def ad_matrix(alg: LieAlg, X: np.ndarray) -> np.ndarray:
    """Matrix of ``ad X`` acting on basis coordinates (column b = coords of ``[X, e_b]``)."""
    brackets = np.array([bracket(X, E) for E in alg.basis])
    return alg.coords_many(brackets).T


def killing_form_ad(alg: LieAlg, X: np.ndarray, Y: np.ndarray, tol: float = 1e-8) -> float:
    """``tr(ad X ad Y)`` computed in the adjoint representation."""
    alg.coords(X, tol)
    alg.coords(Y, tol)
    return float(np.trace(ad_matrix(alg, X) @ ad_matrix(alg, Y)))


def orthonormalize(alg: LieAlg, vectors, tol: float = LINALG_TOL) -> list[np.ndarray]:
    """Modified Gram-Schmidt with one re-orthogonalisation pass, under ``-B``.

    Raises ``DegeneracyError`` when a pivot norm drops below ``tol`` (relative
    to the input vector's norm), i.e. the input is linearly dependent.
    """
    out: list[np.ndarray] = []
    for X in vectors:
        v = np.array(X, dtype=complex)
        norm0 = np.sqrt(max(alg.inner(v, v), 0.0))
        for _ in range(2):
            for q in out:
                v = v - alg.inner(q, v) * q
        nrm = np.sqrt(max(alg.inner(v, v), 0.0))
        if nrm <= tol * max(norm0, 1.0):
            raise DegeneracyError(f"vector {len(out)} is linearly dependent on its predecessors (pivot {nrm:.3e})")
        out.append(v / nrm)
    return out


def closure_residual(alg: LieAlg) -> float:
    """Largest distance of a basis bracket ``[e_a, e_b]`` from the span of the basis."""
    B = alg.basis
    br = np.einsum("aij,bjk->abik", B, B)
    br = br - br.transpose(1, 0, 2, 3)
    br = br.reshape(-1, alg.size, alg.size)
    flat = np.concatenate([br.real.reshape(len(br), -1), br.imag.reshape(len(br), -1)], axis=1)
    proj = (flat @ alg._pinv) @ alg._real_basis
    return float(np.max(np.abs(proj - flat), initial=0.0))
