"""Brute-force structure constants ``[ijk]``, ``A``, ``a_i`` and Casimir constants."""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from itertools import permutations

import numpy as np

from . import _kernels
from .decomp import GradedDecomposition
from .liealg import VALUE_TOL

CASIMIR_SPREAD_TOL = 1e-8
EQUALITY_DETECT_TOL = 1e-6
COMMUTE_TOL = 1e-9


class IrreducibilityWarning(UserWarning):
    """Casimir values differ across a module, so it is not irreducible."""


def _block(dec: GradedDecomposition, i: int) -> np.ndarray:
    if i not in (0, 1, 2, 3):
        raise ValueError(f"module index must be in 0..3, got {i}")
    return dec.index_sets[i]


def triple_sum(dec: GradedDecomposition, i: int, j: int, k: int) -> float:
    """``[ijk] = sum <[e_i^a, e_j^b], e_k^c>^2`` over orthonormal bases of ``p_i, p_j, p_k``.

    Indices are 1-based module labels; 0 selects ``h``.  Partial sums over the
    outer index are compensated and combined with ``math.fsum`` so the result
    does not depend on the thread count.
    """
    I, J, K = _block(dec, i), _block(dec, j), _block(dec, k)
    if len(I) == 0 or len(J) == 0 or len(K) == 0:
        return 0.0
    return math.fsum(_kernels.triple_partials(dec.structure_tensor, I, J, K))


def compute_A(dec: GradedDecomposition) -> float:
    return triple_sum(dec, 1, 2, 3)


def compute_a_triple(dec: GradedDecomposition) -> tuple[float, float, float]:
    A = compute_A(dec)
    return tuple(A / d for d in dec.dims)


@dataclass
class CasimirResult:
    value: float
    spread: float
    per_vector: np.ndarray = field(repr=False)

    @property
    def irreducible_consistent(self) -> bool:
        return self.spread <= CASIMIR_SPREAD_TOL


def casimir(dec: GradedDecomposition, i: int) -> CasimirResult:
    """Casimir sums for every unit basis vector of ``p_i`` with their mean and spread."""
    P = _block(dec, i)
    H = dec.index_sets[0]
    if len(H) == 0:
        return CasimirResult(0.0, 0.0, np.zeros(len(P)))
    vals = _kernels.casimir_sums(dec.structure_tensor, H, P)
    spread = float(vals.max() - vals.min()) if len(vals) else 0.0
    return CasimirResult(math.fsum(vals) / len(vals), spread, vals)


def casimir_constant(dec: GradedDecomposition, i: int) -> float:
    res = casimir(dec, i)
    if not res.irreducible_consistent:
        warnings.warn(f"Casimir values on p{i} of {dec.name} spread by {res.spread:.3e}", IrreducibilityWarning)
    return res.value


def h_action_residual(dec: GradedDecomposition, i: int) -> float:
    """Largest ``|<[h, p_i], g>|``; zero iff ``[h, p_i] = 0``."""
    H, P = dec.index_sets[0], _block(dec, i)
    if len(H) == 0 or len(P) == 0:
        return 0.0
    return float(np.max(np.abs(dec.structure_tensor[np.ix_(H, P)])))


@dataclass
class InvariantReport:
    name: str
    dims: tuple[int, int, int]
    A: float
    a: tuple[float, float, float]
    c: tuple[float, float, float]
    casimir_spread: tuple[float, float, float]
    identity_residuals: dict[str, float]
    equality_cases: tuple[int, ...]
    tol: float = VALUE_TOL

    @property
    def d1(self):
        return self.dims[0]

    @property
    def d2(self):
        return self.dims[1]

    @property
    def d3(self):
        return self.dims[2]

    @property
    def a1(self):
        return self.a[0]

    @property
    def a2(self):
        return self.a[1]

    @property
    def a3(self):
        return self.a[2]

    @property
    def passed(self) -> bool:
        return all(v <= self.tol for v in self.identity_residuals.values())

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "d": list(self.dims),
            "A": self.A,
            "a": list(self.a),
            "c": list(self.c),
            "casimir_spread": list(self.casimir_spread),
            "identity_residuals": dict(sorted(self.identity_residuals.items())),
            "equality_cases": list(self.equality_cases),
            "passed": self.passed,
        }


def verify_identities(dec: GradedDecomposition, tol: float = VALUE_TOL) -> InvariantReport:
    """Check ``2A = d_i (1 - 2 c_i)``, ``d_i >= 2A`` and the equality case ``[h, p_i] = 0``.

    Also records the ``[ijk]`` permutation spread and the coincident-index sums.
    """
    A = compute_A(dec)
    res: dict[str, float] = {}
    cs, spreads, eq = [], [], []
    for i, d in enumerate(dec.dims, start=1):
        cr = casimir(dec, i)
        cs.append(cr.value)
        spreads.append(cr.spread)
        res[f"casimir_spread_p{i}"] = cr.spread
        res[f"2A=d{i}(1-2c{i})"] = abs(2 * A - d * (1 - 2 * cr.value))
        res[f"d{i}>=2A"] = max(0.0, 2 * A - d)
        res[f"c{i}>=0"] = max(0.0, -cr.value)
        if abs(d - 2 * A) <= EQUALITY_DETECT_TOL:
            eq.append(i)
            res[f"[h,p{i}]=0"] = h_action_residual(dec, i)
    vals = [triple_sum(dec, *p) for p in permutations((1, 2, 3))]
    res["[ijk]_symmetry"] = max(vals) - min(vals)
    res["[iij]_vanish"] = max(
        triple_sum(dec, i, i, j) for i in (1, 2, 3) for j in (1, 2, 3)
    )
    a = tuple(A / d for d in dec.dims)
    return InvariantReport(dec.name, dec.dims, A, a, tuple(cs), tuple(spreads), res, tuple(eq), tol)
