"""Explicit matrix realisations of generalized Wallach spaces."""
from __future__ import annotations

import numpy as np

from .decomp import (
    GradedDecomposition,
    block_sign_involution,
    conjugation_involution,
    entrywise_conjugation,
    permutation_involution,
    simultaneous_eigenspaces,
    twisted_conjugation,
)
from .errors import InputError, SizeLimitError
from .liealg import build_classical, build_sum, symplectic_form

MAX_MATRIX_SIZE = 12


def _check_size(n: int, max_size: int) -> None:
    if n > max_size:
        raise SizeLimitError(f"matrix size {n} exceeds the bound {max_size}")


def _positive(*vals) -> None:
    for v in vals:
        if not isinstance(v, (int, np.integer)) or v < 1:
            raise InputError(f"parameters must be positive integers, got {vals}")


def make_flag_family(family: str, k: int, l: int, m: int, max_size: int = MAX_MATRIX_SIZE) -> GradedDecomposition:
    """``so/su/sp(k+l+m)`` over the block-diagonal subalgebra.

    The blocks ``(k,l)``, ``(k,m)``, ``(l,m)`` become ``p1``, ``p2``, ``p3``,
    so dims are ``c*kl, c*km, c*lm`` with ``c = 1, 2, 4``.
    """
    _positive(k, l, m)
    fam = str(family).upper()
    n = k + l + m
    if fam not in ("SO", "SU", "SP"):
        raise InputError(f"unsupported family {family!r}")
    _check_size(2 * n if fam == "SP" else n, max_size)
    alg = build_classical(fam, n)
    b1 = [(1, k), (-1, l), (1, m)]
    b2 = [(1, k), (1, l), (-1, m)]
    if fam == "SP":
        # quaternionic index a occupies rows a and n + a
        b1, b2 = b1 + b1, b2 + b2
    s1 = block_sign_involution(alg, b1)
    s2 = block_sign_involution(alg, b2)
    return simultaneous_eigenspaces(alg, s1, s2, f"{fam.lower()}({n})/flag({k},{l},{m})")


def make_su_u(l: int, max_size: int = MAX_MATRIX_SIZE) -> GradedDecomposition:
    """``su(2l) / u(l)`` from complex conjugation and the symplectic twist."""
    _positive(l)
    if l < 2:
        raise InputError("su(2l)/u(l) needs l >= 2")
    _check_size(2 * l, max_size)
    alg = build_classical("SU", 2 * l)
    s1 = twisted_conjugation(alg, symplectic_form(l), "Ad(J)conj")
    s2 = entrywise_conjugation(alg)
    return simultaneous_eigenspaces(alg, s1, s2, f"su({2 * l})/u({l})")


def complex_structure(l: int) -> np.ndarray:
    """Realification of ``i * I_l``: block diagonal copies of ``[[0, -1], [1, 0]]``."""
    J = np.zeros((2 * l, 2 * l))
    for a in range(l):
        J[2 * a + 1, 2 * a] = 1.0
        J[2 * a, 2 * a + 1] = -1.0
    return J


def make_so_u(l: int, max_size: int = MAX_MATRIX_SIZE) -> GradedDecomposition:
    """``so(2l) / u(1) + u(l-1)``.

    ``s1 = Ad(J)`` fixes ``u(l)``; ``s2 = Ad(J D)`` with ``D = diag(-I_2, I_{2l-2})``
    so that ``s1 s2 = Ad(D)`` fixes ``so(2) + so(2l-2)``.
    """
    _positive(l)
    if l < 4:
        raise InputError("so(2l)/u(1)+u(l-1) needs l >= 4")
    _check_size(2 * l, max_size)
    alg = build_classical("SO", 2 * l)
    J = complex_structure(l)
    D = np.diag([-1.0, -1.0] + [1.0] * (2 * l - 2))
    s1 = conjugation_involution(alg, J, "Ad(J)")
    s2 = conjugation_involution(alg, J @ D, "Ad(JD)")
    return simultaneous_eigenspaces(alg, s1, s2, f"so({2 * l})/u(1)+u({l - 1})")


def _simple(family: str, n: int):
    fam = str(family).upper()
    if fam == "SO" and n == 4:
        raise InputError("so(4) is not simple")
    return build_classical(fam, n)


def make_ledger_obata(f_family: str, f_param: int, max_size: int = MAX_MATRIX_SIZE) -> GradedDecomposition:
    """``f+f+f+f`` over the diagonal, with ``p1 = {(X, X, -X, -X)}`` and its siblings."""
    f = _simple(f_family, f_param)
    _check_size(f.size, max_size)
    g = build_sum(f, 4)
    s1 = permutation_involution(g, [2, 3, 0, 1])
    s2 = permutation_involution(g, [1, 0, 3, 2])
    return simultaneous_eigenspaces(g, s1, s2, f"4*{f.name}/diag")


def make_symmetric_product(n: int = 3, max_size: int = MAX_MATRIX_SIZE) -> GradedDecomposition:
    """Product of three spheres ``SO(n)/SO(n-1)``: every ``[p_j, p_k]`` vanishes, so ``A = 0``."""
    if n < 3:
        raise InputError("need n >= 3")
    _check_size(n, max_size)
    f = build_classical("SO", n)
    g = build_sum(f, 3)
    D = np.diag([1.0] * (n - 1) + [-1.0])
    I = np.eye(n)

    def blockdiag(*mats):
        out = np.zeros((3 * n, 3 * n))
        for c, M in enumerate(mats):
            out[c * n:(c + 1) * n, c * n:(c + 1) * n] = M
        return out

    s1 = conjugation_involution(g, blockdiag(D, I, D), "Ad(D,1,D)")
    s2 = conjugation_involution(g, blockdiag(I, D, D), "Ad(1,D,D)")
    return simultaneous_eigenspaces(g, s1, s2, f"(so({n})/so({n - 1}))^3")
