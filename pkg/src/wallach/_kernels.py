"""Hot numeric kernels.

Every kernel exists twice: a numba ``@njit`` version and a pure-numpy
version.  The public names (``triple_partials``, ``casimir_sums``,
``q_grid``, ``march_segments``) are bound to the numba variants unless
numba is missing or the environment variable ``WALLACH_DISABLE_NUMBA`` is
set to a truthy value before import.  Both paths must agree to 1e-12.
"""
from __future__ import annotations

import os

import numpy as np

# the bundled TBB is too old for numba; prefer OpenMP/workqueue
os.environ.setdefault("NUMBA_THREADING_LAYER_PRIORITY", "omp workqueue tbb")

_DISABLED = os.environ.get("WALLACH_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    import numba
    from numba import njit, prange

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not _DISABLED


def set_num_threads(n: int) -> None:
    """Set the worker count for parallel numba kernels (no-op without numba)."""
    if HAVE_NUMBA and n > 0:
        numba.set_num_threads(min(n, numba.config.NUMBA_NUM_THREADS))


def q_terms(s1, s2, s3):
    """The five summands of the degree-12 surface polynomial, through ``s1, s2, s3``.

    Pure arithmetic, so it accepts ints, Fractions, floats, numpy arrays and the
    jet/polynomial helper types used by :mod:`wallach.omega`.
    """
    t1 = (2 * s1 + 4 * s3 - 1) * (
        64 * s1**5 - 64 * s1**4 + 8 * s1**3 + 12 * s1**2 - 6 * s1 + 1
        + 240 * s3 * s1**2 - 240 * s3 * s1 - 1536 * s3**2 * s1
        - 4096 * s3**3 + 60 * s3 + 768 * s3**2
    )
    t2 = -8 * s1 * (2 * s1 + 4 * s3 - 1) * (2 * s1 - 32 * s3 - 1) * (10 * s1 + 32 * s3 - 5) * s2
    t3 = -16 * s1**2 * (13 - 52 * s1 + 640 * s3 * s1 + 1024 * s3**2 - 320 * s3 + 52 * s1**2) * s2**2
    t4 = 64 * (2 * s1 - 1) * (2 * s1 - 32 * s3 - 1) * s2**3
    t5 = 2048 * s1 * (2 * s1 - 1) * s2**4
    return t1, t2, t3, t4, t5


def q_from_s(s1, s2, s3):
    """Degree-12 surface polynomial ``Q`` written through the elementary symmetric sums."""
    t1, t2, t3, t4, t5 = q_terms(s1, s2, s3)
    return t1 + t2 + t3 + t4 + t5


# ---------------------------------------------------------------- numpy path


def triple_partials_numpy(C, I, J, K):
    sub = C[np.ix_(I, J, K)]
    return (sub * sub).reshape(len(I), -1).sum(axis=1)


def casimir_sums_numpy(C, H, P):
    if len(H) == 0:
        return np.zeros(len(P))
    sub = C[np.ix_(H, P, np.arange(C.shape[2]))]
    return np.einsum("jec,jec->e", sub, sub)


def q_grid_numpy(xs, ys, a3):
    a1 = xs[:, None]
    a2 = ys[None, :]
    s1 = a1 + a2 + a3
    s2 = a1 * a2 + a1 * a3 + a2 * a3
    s3 = a1 * a2 * a3
    return q_from_s(s1, s2, s3)


def march_segments_numpy(V, xs, ys):
    v00 = V[:-1, :-1]
    v10 = V[1:, :-1]
    v11 = V[1:, 1:]
    v01 = V[:-1, 1:]
    p00, p10, p11, p01 = v00 >= 0, v10 >= 0, v11 >= 0, v01 >= 0
    x0 = xs[:-1][:, None] * np.ones_like(v00)
    x1 = xs[1:][:, None] * np.ones_like(v00)
    y0 = ys[None, :-1] * np.ones_like(v00)
    y1 = ys[None, 1:] * np.ones_like(v00)

    def lerp(va, vb):
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.where(va == vb, 0.5, va / (va - vb))

    # edge order: bottom (00-10), right (10-11), top (01-11), left (00-01)
    masks = np.stack([p00 != p10, p10 != p11, p01 != p11, p00 != p01])
    t = [lerp(v00, v10), lerp(v10, v11), lerp(v01, v11), lerp(v00, v01)]
    ex = np.stack([x0 + t[0] * (x1 - x0), x1, x0 + t[2] * (x1 - x0), x0])
    ey = np.stack([y0, y0 + t[1] * (y1 - y0), y1, y0 + t[3] * (y1 - y0)])
    count = masks.sum(axis=0)

    rows = []
    order = []
    ii, jj = np.nonzero(count == 2)
    if len(ii):
        m = masks[:, ii, jj]
        first = np.argmax(m, axis=0)
        second = 3 - np.argmax(m[::-1], axis=0)
        seg = np.stack([ex[first, ii, jj], ey[first, ii, jj], ex[second, ii, jj], ey[second, ii, jj]], axis=1)
        rows.append(seg)
        order.append(np.stack([ii, jj, np.zeros_like(ii)], axis=1))
    ii, jj = np.nonzero(count == 4)
    if len(ii):
        centre = 0.25 * (v00[ii, jj] + v10[ii, jj] + v11[ii, jj] + v01[ii, jj])
        same = (centre >= 0) == p00[ii, jj]
        # centre agrees with corner 00: cut off corners 10 and 01, else 00 and 11
        first = (np.zeros_like(ii), np.where(same, 1, 3))
        second = (np.where(same, 2, 1), np.where(same, 3, 2))
        for sub, (a, b) in enumerate([first, second]):
            seg = np.stack([ex[a, ii, jj], ey[a, ii, jj], ex[b, ii, jj], ey[b, ii, jj]], axis=1)
            rows.append(seg)
            order.append(np.stack([ii, jj, np.full_like(ii, sub)], axis=1))
    if not rows:
        return np.zeros((0, 4))
    segs = np.concatenate(rows)
    keys = np.concatenate(order)
    idx = np.lexsort((keys[:, 2], keys[:, 1], keys[:, 0]))
    return segs[idx]


# ---------------------------------------------------------------- numba path

if HAVE_NUMBA:
    _q_terms_jit = njit(cache=True)(q_terms)

    @njit(cache=True)
    def _q_from_s_jit(s1, s2, s3):
        t1, t2, t3, t4, t5 = _q_terms_jit(s1, s2, s3)
        return t1 + t2 + t3 + t4 + t5

    @njit(cache=True, parallel=True)
    def triple_partials_numba(C, I, J, K):
        n = I.shape[0]
        out = np.zeros(n)
        for ia in prange(n):
            a = I[ia]
            total = 0.0
            comp = 0.0
            for jb in range(J.shape[0]):
                b = J[jb]
                for kc in range(K.shape[0]):
                    v = C[a, b, K[kc]]
                    term = v * v
                    s = total + term
                    # Neumaier compensation
                    if abs(total) >= abs(term):
                        comp += (total - s) + term
                    else:
                        comp += (term - s) + total
                    total = s
            out[ia] = total + comp
        return out

    @njit(cache=True, parallel=True)
    def casimir_sums_numba(C, H, P):
        n = P.shape[0]
        dim = C.shape[2]
        out = np.zeros(n)
        for ie in prange(n):
            e = P[ie]
            total = 0.0
            for jh in range(H.shape[0]):
                h = H[jh]
                for c in range(dim):
                    v = C[h, e, c]
                    total += v * v
            out[ie] = total
        return out

    @njit(cache=True, parallel=True)
    def q_grid_numba(xs, ys, a3):
        nx = xs.shape[0]
        ny = ys.shape[0]
        out = np.empty((nx, ny))
        for i in prange(nx):
            a1 = xs[i]
            for j in range(ny):
                a2 = ys[j]
                s1 = a1 + a2 + a3
                s2 = a1 * a2 + a1 * a3 + a2 * a3
                s3 = a1 * a2 * a3
                out[i, j] = _q_from_s_jit(s1, s2, s3)
        return out

    @njit(cache=True)
    def _lerp(va, vb):
        if va == vb:
            return 0.5
        return va / (va - vb)

    @njit(cache=True)
    def march_segments_numba(V, xs, ys):
        nx = V.shape[0] - 1
        ny = V.shape[1] - 1
        buf = np.empty((2 * nx * ny, 4))
        cnt = 0
        ex = np.empty(4)
        ey = np.empty(4)
        mk = np.zeros(4, dtype=np.bool_)
        for i in range(nx):
            x0 = xs[i]
            x1 = xs[i + 1]
            for j in range(ny):
                y0 = ys[j]
                y1 = ys[j + 1]
                v00 = V[i, j]
                v10 = V[i + 1, j]
                v11 = V[i + 1, j + 1]
                v01 = V[i, j + 1]
                p00 = v00 >= 0
                p10 = v10 >= 0
                p11 = v11 >= 0
                p01 = v01 >= 0
                mk[0] = p00 != p10
                mk[1] = p10 != p11
                mk[2] = p01 != p11
                mk[3] = p00 != p01
                n = 0
                for q in range(4):
                    if mk[q]:
                        n += 1
                if n == 0:
                    continue
                ex[0] = x0 + _lerp(v00, v10) * (x1 - x0)
                ey[0] = y0
                ex[1] = x1
                ey[1] = y0 + _lerp(v10, v11) * (y1 - y0)
                ex[2] = x0 + _lerp(v01, v11) * (x1 - x0)
                ey[2] = y1
                ex[3] = x0
                ey[3] = y0 + _lerp(v00, v01) * (y1 - y0)
                if n == 2:
                    a = -1
                    b = -1
                    for q in range(4):
                        if mk[q]:
                            if a < 0:
                                a = q
                            else:
                                b = q
                    buf[cnt, 0] = ex[a]
                    buf[cnt, 1] = ey[a]
                    buf[cnt, 2] = ex[b]
                    buf[cnt, 3] = ey[b]
                    cnt += 1
                else:
                    centre = 0.25 * (v00 + v10 + v11 + v01)
                    if (centre >= 0) == p00:
                        a1, b1, a2, b2 = 0, 1, 2, 3
                    else:
                        a1, b1, a2, b2 = 0, 3, 1, 2
                    buf[cnt, 0] = ex[a1]
                    buf[cnt, 1] = ey[a1]
                    buf[cnt, 2] = ex[b1]
                    buf[cnt, 3] = ey[b1]
                    buf[cnt + 1, 0] = ex[a2]
                    buf[cnt + 1, 1] = ey[a2]
                    buf[cnt + 1, 2] = ex[b2]
                    buf[cnt + 1, 3] = ey[b2]
                    cnt += 2
        return buf[:cnt].copy()


def _intp(a):
    return np.ascontiguousarray(a, dtype=np.int64)


def triple_partials(C, I, J, K):
    """Per-outer-index partial sums of ``C[a, b, c]**2`` over ``I x J x K``."""
    C = np.ascontiguousarray(C, dtype=np.float64)
    if USE_NUMBA:
        return triple_partials_numba(C, _intp(I), _intp(J), _intp(K))
    return triple_partials_numpy(C, _intp(I), _intp(J), _intp(K))


def casimir_sums(C, H, P):
    """For each basis index ``e`` in ``P``: ``sum_{j in H, c} C[j, e, c]**2``."""
    C = np.ascontiguousarray(C, dtype=np.float64)
    if USE_NUMBA:
        return casimir_sums_numba(C, _intp(H), _intp(P))
    return casimir_sums_numpy(C, _intp(H), _intp(P))


def q_grid(xs, ys, a3: float):
    """Float values of the surface polynomial on the tensor grid ``xs x ys`` at fixed ``a3``."""
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    ys = np.ascontiguousarray(ys, dtype=np.float64)
    if USE_NUMBA:
        return q_grid_numba(xs, ys, float(a3))
    return q_grid_numpy(xs, ys, float(a3))


def march_segments(V, xs, ys):
    """Marching-squares zero contour of ``V`` sampled on ``xs x ys``; rows are ``x0, y0, x1, y1``."""
    V = np.ascontiguousarray(V, dtype=np.float64)
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    ys = np.ascontiguousarray(ys, dtype=np.float64)
    if USE_NUMBA:
        return march_segments_numba(V, xs, ys)
    return march_segments_numpy(V, xs, ys)
