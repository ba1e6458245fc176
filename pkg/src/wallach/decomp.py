"""Z2 x Z2 graded decompositions ``g = h + p1 + p2 + p3`` from commuting involutions.

Given commuting involutive automorphisms ``s1``, ``s2`` of ``g`` the joint
eigenspaces are::

    h  = (+1, +1)      p1 = (-1, +1)      p2 = (+1, -1)      p3 = (-1, -1)

where the pair lists the eigenvalues of ``(s1, s2)``.  Involutions are stored
as real matrices acting on coordinates, so commutation and automorphism
checks are plain matrix identities.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import ContractError, InputError, InternalError
from .liealg import LINALG_TOL, LieAlg, bracket, orthonormalize

GRADING_TOL = 1e-9
RANK_CUTOFF = 1e-8

SIGN_PATTERNS = ((1, 1), (-1, 1), (1, -1), (-1, -1))


@dataclass(frozen=True, eq=False)
class Involution:
    """Real-linear operator on ``alg``, stored as a matrix on basis coordinates."""

    alg: LieAlg
    matrix: np.ndarray
    label: str = ""

    def __call__(self, X: np.ndarray) -> np.ndarray:
        return self.alg.element(self.matrix @ self.alg.coords(X))

    def involutive_residual(self) -> float:
        M = self.matrix
        return float(np.max(np.abs(M @ M - np.eye(len(M))), initial=0.0))

    def automorphism_residual(self, rng=None, trials: int = 8) -> float:
        rng = np.random.default_rng(0) if rng is None else rng
        worst = 0.0
        for _ in range(trials):
            x = rng.standard_normal(self.alg.dim)
            y = rng.standard_normal(self.alg.dim)
            X, Y = self.alg.element(x), self.alg.element(y)
            lhs = self(bracket(X, Y))
            rhs = bracket(self(X), self(Y))
            worst = max(worst, float(np.max(np.abs(lhs - rhs))))
        return worst

    def validate(self, tol: float = LINALG_TOL) -> "Involution":
        r = self.involutive_residual()
        if r > 1e-12 * max(1.0, np.max(np.abs(self.matrix))):
            raise ContractError(f"{self.label or 'map'} is not involutive (residual {r:.3e})")
        a = self.automorphism_residual()
        if a > tol:
            raise ContractError(f"{self.label or 'map'} is not an automorphism (residual {a:.3e})")
        return self


def _from_map(alg: LieAlg, fn, label: str) -> Involution:
    images = np.array([fn(E) for E in alg.basis])
    M = alg.coords_many(images).T
    return Involution(alg, M, label).validate()


def conjugation_involution(alg: LieAlg, S: np.ndarray, label: str = "Ad(S)") -> Involution:
    """``X -> S X S^{-1}``."""
    S = np.asarray(S)
    if S.shape != (alg.size, alg.size):
        raise InputError(f"conjugating matrix must be {alg.size}x{alg.size}")
    Sinv = np.linalg.inv(S)
    return _from_map(alg, lambda X: S @ X @ Sinv, label)


def entrywise_conjugation(alg: LieAlg) -> Involution:
    """``X -> conj(X)``; fixes the real matrices."""
    return _from_map(alg, np.conj, "conj")


def twisted_conjugation(alg: LieAlg, S: np.ndarray, label: str = "Ad(S)conj") -> Involution:
    """``X -> S conj(X) S^{-1}``."""
    S = np.asarray(S)
    Sinv = np.linalg.inv(S)
    return _from_map(alg, lambda X: S @ X.conj() @ Sinv, label)


def block_sign_involution(alg: LieAlg, blocks) -> Involution:
    """Conjugation by ``diag(s_1 I_{n_1}, s_2 I_{n_2}, ...)``.

    ``blocks`` is a sequence of ``(sign, size)`` pairs whose sizes add up to
    the matrix size of ``alg``.
    """
    signs = []
    for sign, size in blocks:
        if sign not in (1, -1) or size < 0:
            raise InputError(f"bad block {(sign, size)}")
        signs += [sign] * size
    if len(signs) != alg.size:
        raise InputError(f"block sizes add to {len(signs)}, matrix size is {alg.size}")
    S = np.diag(np.array(signs, dtype=float))
    label = "diag(" + ",".join(f"{'+' if s > 0 else '-'}{n}" for s, n in blocks) + ")"
    return conjugation_involution(alg, S, label)


def permutation_involution(alg: LieAlg, perm) -> Involution:
    """Permute the summands of a ``SUM`` algebra: copy ``c`` goes to ``perm[c]``."""
    if alg.family != "SUM":
        raise InputError("permutation involutions need a SUM algebra")
    copies = alg.params[0]
    perm = list(perm)
    if sorted(perm) != list(range(copies)):
        raise InputError(f"{perm} is not a permutation of {copies} copies")
    d = alg.summand.dim
    M = np.zeros((alg.dim, alg.dim))
    for c in range(copies):
        for i in range(d):
            M[perm[c] * d + i, c * d + i] = 1.0
    return Involution(alg, M, f"perm{tuple(perm)}").validate()


def compose(s1: Involution, s2: Involution) -> Involution:
    """``s1 o s2`` (an involution when the two commute)."""
    if s1.alg is not s2.alg:
        raise InputError("involutions act on different algebras")
    return Involution(s1.alg, s1.matrix @ s2.matrix, f"{s1.label}*{s2.label}")


@dataclass(frozen=True, eq=False)
class GradedDecomposition:
    """Orthonormal (under ``-B``) bases of ``h, p1, p2, p3`` inside ``alg``."""

    alg: LieAlg
    h_basis: np.ndarray
    p_bases: tuple[np.ndarray, np.ndarray, np.ndarray]
    name: str = ""
    involutions: tuple = field(default=(), repr=False)

    @property
    def dims(self) -> tuple[int, int, int]:
        return tuple(len(p) for p in self.p_bases)

    @property
    def d1(self) -> int:
        return self.dims[0]

    @property
    def d2(self) -> int:
        return self.dims[1]

    @property
    def d3(self) -> int:
        return self.dims[2]

    @property
    def h_dim(self) -> int:
        return len(self.h_basis)

    @cached_property
    def full_basis(self) -> np.ndarray:
        n = self.alg.size
        parts = [np.reshape(self.h_basis, (-1, n, n))] + [np.reshape(p, (-1, n, n)) for p in self.p_bases]
        return np.concatenate(parts)

    @cached_property
    def index_sets(self) -> tuple[np.ndarray, ...]:
        """Index arrays of ``h, p1, p2, p3`` inside ``full_basis``."""
        sizes = [self.h_dim, *self.dims]
        bounds = np.cumsum([0, *sizes])
        return tuple(np.arange(bounds[i], bounds[i + 1]) for i in range(4))

    @cached_property
    def structure_tensor(self) -> np.ndarray:
        """``C[a, b, c] = <[e_a, e_b], e_c>`` over ``full_basis``."""
        E = self.full_basis
        dim, n = E.shape[0], E.shape[1]
        prod = np.einsum("aij,bjk->abik", E, E)
        br = (prod - prod.transpose(1, 0, 2, 3)).reshape(dim * dim, n * n)
        # tr(br E_c) = sum_ij br[i, j] E_c[j, i]
        Et = E.transpose(0, 2, 1).reshape(dim, n * n)
        C = -float(self.alg.killing_coeff) * np.real(br @ Et.T)
        return C.reshape(dim, dim, dim)


def _orthonormal_frame(alg: LieAlg) -> list[np.ndarray]:
    return orthonormalize(alg, alg.basis)


def _pivoted_range(P: np.ndarray, cutoff: float) -> np.ndarray:
    """Orthonormal columns spanning the range of ``P`` by pivoted Gram-Schmidt over its columns."""
    scale = max(np.max(np.linalg.norm(P, axis=0), initial=0.0), 1.0)
    cols = []
    for j in range(P.shape[1]):
        v = P[:, j].copy()
        for _ in range(2):
            for q in cols:
                v -= (q @ v) * q
        nrm = np.linalg.norm(v)
        if nrm > cutoff * scale:
            cols.append(v / nrm)
    return np.array(cols).reshape(len(cols), P.shape[0])


def simultaneous_eigenspaces(alg: LieAlg, s1: Involution, s2: Involution, name: str = "",
                             cutoff: float = RANK_CUTOFF) -> GradedDecomposition:
    """Joint eigenspace decomposition of two commuting involutions."""
    frame = _orthonormal_frame(alg)
    F = np.array(frame)
    # matrices of s1, s2 in the orthonormal frame: M[a, b] = <f_a, s(f_b)>
    mats = []
    for s in (s1, s2):
        images = np.array([s(f) for f in frame])
        G = np.real(np.einsum("aij,bji->ab", F, images))
        mats.append(-float(alg.killing_coeff) * G)
    M1, M2 = mats
    comm = float(np.max(np.abs(M1 @ M2 - M2 @ M1), initial=0.0))
    if comm > LINALG_TOL:
        raise ContractError(f"involutions do not commute (residual {comm:.3e})")
    eye = np.eye(alg.dim)
    spaces = []
    for a, b in SIGN_PATTERNS:
        P = (eye + a * M1) @ (eye + b * M2) / 4.0
        cols = _pivoted_range(P, cutoff)
        sv = np.linalg.svd(P, compute_uv=False)
        rank = int(np.sum(sv > cutoff * max(sv.max(initial=0.0), 1.0)))
        if rank != len(cols):
            raise InternalError(f"rank mismatch for pattern {(a, b)}: {rank} vs {len(cols)}")
        mats_ = np.tensordot(cols, F, axes=1) if len(cols) else np.zeros((0, alg.size, alg.size), complex)
        spaces.append(np.array(orthonormalize(alg, mats_)).reshape(-1, alg.size, alg.size))
    total = sum(len(s) for s in spaces)
    if total != alg.dim:
        raise InternalError(f"projector ranks add to {total}, dim is {alg.dim}")
    return GradedDecomposition(alg, spaces[0], (spaces[1], spaces[2], spaces[3]), name, (s1, s2))


@dataclass
class GradingReport:
    residuals: dict[str, float]
    tol: float = GRADING_TOL

    @property
    def passed(self) -> bool:
        return all(v <= self.tol for v in self.residuals.values())

    @property
    def failures(self) -> list[str]:
        return [k for k, v in self.residuals.items() if v > self.tol]


def _outside(C: np.ndarray, X, Y, Z) -> float:
    """Largest component of ``[X, Y]`` outside block ``Z``."""
    if len(X) == 0 or len(Y) == 0:
        return 0.0
    mask = np.ones(C.shape[2], dtype=bool)
    mask[Z] = False
    sub = C[np.ix_(X, Y, np.nonzero(mask)[0])]
    return float(np.max(np.abs(sub), initial=0.0))


def validate_grading(dec: GradedDecomposition, tol: float = GRADING_TOL) -> GradingReport:
    """Residuals of every grading relation plus orthonormality and closure."""
    alg = dec.alg
    E = dec.full_basis
    G = alg.gram(E)
    res = {"orthonormality": float(np.max(np.abs(G - np.eye(len(E))), initial=0.0))}
    C = dec.structure_tensor
    # closure: distance of [e_a, e_b] from its orthogonal projection onto span(E)
    prod = np.einsum("aij,bjk->abik", E, E)
    br = prod - prod.transpose(1, 0, 2, 3)
    proj = np.einsum("abc,cij->abij", C, E)
    res["closure"] = float(np.max(np.abs(br - proj), initial=0.0))
    H, P1, P2, P3 = dec.index_sets
    P = (P1, P2, P3)
    res["[h,h]->h"] = _outside(C, H, H, H)
    for i in range(3):
        j, k = [x for x in range(3) if x != i]
        res[f"[p{i+1},p{i+1}]->h"] = _outside(C, P[i], P[i], H)
        res[f"[h,p{i+1}]->p{i+1}"] = _outside(C, H, P[i], P[i])
        res[f"[p{j+1},p{k+1}]->p{i+1}"] = _outside(C, P[j], P[k], P[i])
    return GradingReport(res, tol)
