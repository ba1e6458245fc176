"""The surface ``Omega = {Q = 0}`` in the cube ``[0, 1/2]^3`` and the components of its complement.

``Q`` is a symmetric polynomial of degree 12 in ``(a1, a2, a3)``; it is
evaluated through the elementary symmetric sums::

    s1 = a1 + a2 + a3,   s2 = a1 a2 + a1 a3 + a2 a3,   s3 = a1 a2 a3

Rational inputs are handled exactly with :class:`fractions.Fraction`.  The
complement of ``Omega`` in the open cube has three components; ``O1``, ``O2``
and ``O3`` contain the seeds ``(1/6, 1/6, 1/6)``, ``(7/15, 7/15, 7/15)`` and
``(1/6, 1/4, 1/3)``.  ``Q > 0`` exactly on ``O3``.  A point with ``Q < 0`` is
placed in ``O1`` or ``O2`` by exhibiting a path to a seed along which ``Q``
has no zero.
"""
from __future__ import annotations

import enum
import json
import math
import numbers
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _kernels
from .errors import DomainError, InputError

F = Fraction
HALF = F(1, 2)
QUARTER = F(1, 4)

SEEDS = {
    "O1": (F(1, 6),) * 3,
    "O2": (F(7, 15),) * 3,
    "O3": (F(1, 6), F(1, 4), F(1, 3)),
}

DEFAULT_SAMPLES = 4096
ZERO_TOL = 1e-12
MIN_GRID = 16


# ------------------------------------------------------------------ points


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


@dataclass(frozen=True)
class APoint:
    """A point ``(a1, a2, a3)``; exact when every coordinate is an ``int`` or ``Fraction``."""

    a1: object
    a2: object
    a3: object

    def __post_init__(self):
        for x in self:
            if isinstance(x, bool) or not isinstance(x, numbers.Real) and not hasattr(x, "is_real"):
                raise InputError(f"coordinates must be real numbers, got {x!r}")
        if self.exact:
            object.__setattr__(self, "a1", F(self.a1))
            object.__setattr__(self, "a2", F(self.a2))
            object.__setattr__(self, "a3", F(self.a3))

    def __iter__(self):
        return iter((self.a1, self.a2, self.a3))

    @property
    def exact(self) -> bool:
        return all(_is_exact(x) for x in (self.a1, self.a2, self.a3))

    def as_float(self) -> tuple[float, float, float]:
        return tuple(float(x) for x in self)

    def in_closed_cube(self) -> bool:
        return all(0 <= x <= HALF for x in self)

    def in_open_cube(self) -> bool:
        return all(0 < x < HALF for x in self)

    def permuted(self, perm) -> "APoint":
        c = tuple(self)
        return APoint(*(c[i] for i in perm))


def as_point(p) -> APoint:
    if isinstance(p, APoint):
        return p
    p = tuple(p)
    if len(p) != 3:
        raise InputError(f"need three coordinates, got {len(p)}")
    return APoint(*p)


def symmetric_sums(p):
    a1, a2, a3 = as_point(p)
    return a1 + a2 + a3, a1 * a2 + a1 * a3 + a2 * a3, a1 * a2 * a3


def eval_Q(p):
    """``Q(a1, a2, a3)``; exact for rational points."""
    return _kernels.q_from_s(*symmetric_sums(p))


def q_scale(p) -> float:
    """Sum of the absolute values of the five summands, the natural scale for a float zero test."""
    return float(sum(abs(float(t)) for t in _kernels.q_terms(*symmetric_sums(p))))


# ------------------------------------------------------------------ gradient


class _Jet:
    """Value plus first partials in three variables (forward-mode differentiation)."""

    __slots__ = ("v", "d")

    def __init__(self, v, d):
        self.v = v
        self.d = d

    @staticmethod
    def _lift(o):
        return o if isinstance(o, _Jet) else _Jet(o, (0, 0, 0))

    def __add__(self, o):
        o = self._lift(o)
        return _Jet(self.v + o.v, tuple(x + y for x, y in zip(self.d, o.d)))

    __radd__ = __add__

    def __neg__(self):
        return _Jet(-self.v, tuple(-x for x in self.d))

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        return _Jet(self.v * o.v, tuple(self.v * y + o.v * x for x, y in zip(self.d, o.d)))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n == 0:
            return _Jet(1, (0, 0, 0))
        p = self.v ** (n - 1)
        return _Jet(p * self.v, tuple(n * p * x for x in self.d))


def grad_s(p):
    """``(dQ/ds1, dQ/ds2, dQ/ds3)`` at the symmetric sums of ``p``."""
    s1, s2, s3 = symmetric_sums(p)
    q = _kernels.q_from_s(_Jet(s1, (1, 0, 0)), _Jet(s2, (0, 1, 0)), _Jet(s3, (0, 0, 1)))
    return q.d


def grad_Q(p, crosscheck: bool = True):
    """Exact partial derivatives of ``Q`` by the chain rule through ``(s1, s2, s3)``.

    For a float point the result is compared with central differences and a
    mismatch larger than ``1e-6`` (relative) raises ``AssertionError``.
    """
    p = as_point(p)
    a = tuple(p)
    q1, q2, q3 = grad_s(p)
    out = []
    for i in range(3):
        j, k = [x for x in range(3) if x != i]
        out.append(q1 + q2 * (a[j] + a[k]) + q3 * a[j] * a[k])
    g = tuple(out)
    if crosscheck and not p.exact:
        fd = grad_fd(p)
        scale = max(1.0, max(abs(float(x)) for x in g))
        err = max(abs(float(x) - y) for x, y in zip(g, fd))
        if err > 1e-6 * scale:
            raise AssertionError(f"gradient disagrees with finite differences by {err:.3e}")
    return g


def grad_fd(p, h: float = 1e-6) -> tuple[float, float, float]:
    """Central finite differences of ``Q`` in float arithmetic."""
    x = np.array(as_point(p).as_float())
    out = []
    for i in range(3):
        e = np.zeros(3)
        e[i] = h
        out.append((float(eval_Q(x + e)) - float(eval_Q(x - e))) / (2 * h))
    return tuple(out)


# ------------------------------------------------------------------ singular curve


@dataclass(frozen=True)
class CurvePoint:
    point: APoint
    inside: bool


def _is_symbolic(t) -> bool:
    return type(t).__module__.startswith("sympy")


def singular_curve_point(t) -> CurvePoint:
    """``(a1(t), t, t)`` with ``a1 = -(16 t^3 - 4 t + 1) / (2 (8 t^2 - 1))``.

    ``t`` may be an int, Fraction, float or sympy expression; sympy results
    are simplified, so ``t = (sqrt(5) - 1)/4`` gives ``a1 = 1/2`` exactly.
    """
    if isinstance(t, bool):
        raise InputError("t must be a number")
    if _is_exact(t):
        t = F(t)
    den = 8 * t * t - 1
    if _is_symbolic(t):
        import sympy

        if sympy.simplify(den) == 0:
            raise DomainError("8 t^2 = 1 is a pole of the singular curve")
        a1 = sympy.radsimp(sympy.simplify(-(16 * t**3 - 4 * t + 1) / (2 * den)))
        pt = APoint(a1, t, t)
        inside = all(bool(sympy.simplify(x) >= 0) and bool(sympy.simplify(x) <= HALF) for x in (a1, t))
        return CurvePoint(pt, inside)
    if den == 0 or (not _is_exact(t) and abs(den) < 1e-12):
        raise DomainError("8 t^2 = 1 is a pole of the singular curve")
    a1 = -(16 * t**3 - 4 * t + 1) / (2 * den)
    pt = APoint(a1, t, t)
    return CurvePoint(pt, pt.in_closed_cube())


# ------------------------------------------------------------------ classification


class Component(str, enum.Enum):
    O1 = "O1"
    O2 = "O2"
    O3 = "O3"
    ON_OMEGA = "OnOmega"
    OUTSIDE = "OutsideOpenCube"
    UNRESOLVED = "Unresolved"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class PathCheck:
    """One attempted path: its vertices and whether ``Q`` stayed nonzero along it."""

    target: str
    vertices: tuple
    ok: bool
    zeros: int | None = None  # exact: real roots of Q on the path; float: sign changes seen
    method: str = "sturm"

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "vertices": [[_fmt(x) for x in v] for v in self.vertices],
            "ok": self.ok,
            "zeros": self.zeros,
            "method": self.method,
        }


@dataclass(frozen=True)
class ComponentLabel:
    component: Component
    point: APoint
    Q: object
    witness: tuple = field(default=())

    @property
    def label(self) -> str:
        return self.component.value

    @property
    def Q_sign(self) -> int:
        q = self.Q
        return 0 if q == 0 else (1 if q > 0 else -1)

    def to_dict(self) -> dict:
        return {
            "point": [_fmt(x) for x in self.point],
            "Q_sign": self.Q_sign,
            "label": self.label,
            "witness": [w.to_dict() for w in self.witness],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return format(float(x), ".17g")


@dataclass(frozen=True)
class ClassifyOptions:
    mode: str | None = None  # "exact", "float" or None (exact iff the point is rational)
    samples: int = DEFAULT_SAMPLES
    zero_tol: float = ZERO_TOL
    o2_fast_reject: bool = True

    def __post_init__(self):
        if self.mode not in (None, "exact", "float"):
            raise InputError(f"mode must be 'exact' or 'float', got {self.mode!r}")
        if self.samples < 2:
            raise InputError("need at least two samples per path")
        if not self.zero_tol > 0:
            raise InputError("zero tolerance must be positive")


class _UPoly:
    """Dense univariate polynomial with Fraction coefficients, lowest degree first."""

    __slots__ = ("c",)

    def __init__(self, c):
        c = list(c)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        self.c = c

    @staticmethod
    def _lift(o):
        return o if isinstance(o, _UPoly) else _UPoly([F(o)])

    def __add__(self, o):
        o = self._lift(o)
        n = max(len(self.c), len(o.c))
        a = self.c + [0] * (n - len(self.c))
        b = o.c + [0] * (n - len(o.c))
        return _UPoly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return _UPoly([-x for x in self.c])

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        out = [F(0)] * (len(self.c) + len(o.c) - 1)
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(o.c):
                    out[i + j] += x * y
        return _UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = _UPoly([F(1)])
        for _ in range(n):
            out = out * self
        return out


def _count_roots_01(poly: _UPoly) -> int:
    """Distinct real roots of ``poly`` in ``[0, 1]`` (Sturm sequence)."""
    if len(poly.c) == 1:
        return 0 if poly.c[0] != 0 else math.inf
    import sympy

    x = sympy.Symbol("x")
    P = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(poly.c)], x, domain=sympy.QQ)
    return int(P.count_roots(0, 1))


def _restrict(p0, p1) -> _UPoly:
    """``Q`` along the straight segment ``p0 + t (p1 - p0)`` as a polynomial in ``t``."""
    a = [_UPoly([F(x), F(y) - F(x)]) for x, y in zip(p0, p1)]
    s1 = a[0] + a[1] + a[2]
    s2 = a[0] * a[1] + a[0] * a[2] + a[1] * a[2]
    s3 = a[0] * a[1] * a[2]
    return _kernels.q_from_s(s1, s2, s3)


def _path_exact(vertices) -> tuple[bool, int]:
    zeros = 0
    for p0, p1 in zip(vertices, vertices[1:]):
        zeros += _count_roots_01(_restrict(p0, p1))
    return zeros == 0, zeros


def _path_float(vertices, samples: int, zero_tol: float) -> tuple[bool, int]:
    """Sample ``Q`` along every leg; every sample must be clearly negative."""
    bad = 0
    t = np.linspace(0.0, 1.0, samples + 1)
    for p0, p1 in zip(vertices, vertices[1:]):
        P0 = np.array([float(x) for x in p0])
        P1 = np.array([float(x) for x in p1])
        pts = P0[None, :] + t[:, None] * (P1 - P0)[None, :]
        a1, a2, a3 = pts.T
        s1 = a1 + a2 + a3
        s2 = a1 * a2 + a1 * a3 + a2 * a3
        s3 = a1 * a2 * a3
        terms = _kernels.q_terms(s1, s2, s3)
        q = sum(terms)
        tol = zero_tol * sum(np.abs(x) for x in terms)
        bad += int(np.count_nonzero(q >= -tol))
    return bad == 0, bad


def _candidate_paths(p: APoint, exact: bool, fast_reject: bool):
    """Paths tried in order: straight to the O1 seed, straight to the O2 seed,
    then through the diagonal point with the same ``s1`` and along the diagonal."""
    pt = tuple(p)
    yield "O1", (pt, SEEDS["O1"])
    if not (fast_reject and min(pt) < QUARTER):
        yield "O2", (pt, SEEDS["O2"])
    m = sum(pt) / 3 if exact else sum(float(x) for x in pt) / 3
    if m < QUARTER:
        yield "O1", (pt, (m, m, m), SEEDS["O1"])
    elif m > QUARTER:
        yield "O2", (pt, (m, m, m), SEEDS["O2"])


def classify(p, opts: ClassifyOptions | None = None) -> ComponentLabel:
    """Component of ``(0, 1/2)^3 minus Omega`` containing ``p``.

    Exact mode certifies a path by counting the real roots of ``Q`` restricted
    to each leg (Sturm sequences over the rationals); float mode samples the
    path.  A point that no path certifies is ``Unresolved``.
    """
    opts = opts or ClassifyOptions()
    p = as_point(p)
    mode = opts.mode or ("exact" if p.exact else "float")
    if mode == "exact" and not p.exact:
        raise InputError("exact mode needs rational coordinates")
    exact = mode == "exact"
    if not exact:
        p = APoint(*p.as_float())
    q = eval_Q(p)
    if not p.in_open_cube():
        return ComponentLabel(Component.OUTSIDE, p, q)
    zero = q == 0 if exact else abs(q) <= opts.zero_tol * q_scale(p)
    if zero:
        return ComponentLabel(Component.ON_OMEGA, p, q)
    if q > 0:
        return ComponentLabel(Component.O3, p, q)
    for name in ("O1", "O2"):
        if exact and tuple(p) == SEEDS[name]:
            return ComponentLabel(Component(name), p, q, (PathCheck(name, (tuple(p),), True, 0, "seed"),))
    tried = []
    for target, verts in _candidate_paths(p, exact, opts.o2_fast_reject):
        if exact:
            ok, zeros = _path_exact(verts)
            chk = PathCheck(target, verts, ok, zeros, "sturm")
        else:
            ok, zeros = _path_float(verts, opts.samples, opts.zero_tol)
            chk = PathCheck(target, verts, ok, zeros, f"samples={opts.samples}")
        tried.append(chk)
        if ok:
            return ComponentLabel(Component(target), p, q, tuple(tried))
    return ComponentLabel(Component.UNRESOLVED, p, q, tuple(tried))


# ------------------------------------------------------------------ singular profiles


@dataclass(frozen=True)
class SingularProfile:
    count: int
    node: str | None
    saddles: int

    def describe(self) -> str:
        if self.node is None:
            return f"{self.saddles} saddles"
        return f"1 {self.node} + {self.saddles} saddles"

    def to_dict(self) -> dict:
        return {"count": self.count, "node": self.node, "saddles": self.saddles, "text": self.describe()}


_PROFILES = {
    Component.O1: SingularProfile(4, "unstable node", 3),
    Component.O2: SingularProfile(4, "stable node", 3),
    Component.O3: SingularProfile(2, None, 2),
}


def singular_profile(label) -> SingularProfile:
    """Singular points of the normalized Ricci flow for parameters in a component."""
    comp = label.component if isinstance(label, ComponentLabel) else Component(str(label))
    if comp not in _PROFILES:
        raise InputError(f"no singular profile for {comp.value}")
    return _PROFILES[comp]


# ------------------------------------------------------------------ slices


def surface_slice(a3, grid_n: int = 256, zero_tol: float = ZERO_TOL) -> np.ndarray:
    """Zero contour of ``Q(., ., a3)`` over ``[0, 1/2]^2`` by marching squares.

    The grid has ``grid_n`` cells per axis.  Rows of the result are
    ``(a1_start, a2_start, a1_end, a2_end)``.  Sign changes give ordinary
    segments.  A grid node where ``Q`` vanishes (within ``zero_tol`` times the
    summand scale) while all its neighbours share one strict sign is a point
    where ``Omega`` only touches the slice, as at ``(1/4, 1/4, 1/4)``; such
    nodes are emitted as zero-length segments after the ordinary ones.
    """
    if not isinstance(grid_n, (int, np.integer)) or grid_n < MIN_GRID:
        raise InputError(f"grid_n must be an integer >= {MIN_GRID}")
    if not 0 <= a3 <= HALF:
        raise InputError("a3 must lie in [0, 1/2]")
    xs = np.arange(grid_n + 1) * (0.5 / grid_n)
    V = _kernels.q_grid(xs, xs, float(a3))
    segs = _kernels.march_segments(V, xs, xs)
    touch = _touch_nodes(V, xs, float(a3), zero_tol)
    if len(touch):
        pts = np.column_stack([xs[touch[:, 0]], xs[touch[:, 1]]])
        segs = np.concatenate([segs, np.hstack([pts, pts])])
    return segs


def _touch_nodes(V, xs, a3: float, zero_tol: float) -> np.ndarray:
    a1, a2 = xs[:, None], xs[None, :]
    terms = _kernels.q_terms(a1 + a2 + a3, a1 * a2 + (a1 + a2) * a3, a1 * a2 * a3)
    scale = sum(np.abs(t) for t in terms)
    out = []
    n = V.shape[0]
    for i, j in np.argwhere(np.abs(V) <= zero_tol * scale):
        nb = V[max(i - 1, 0):min(i + 2, n), max(j - 1, 0):min(j + 2, n)].ravel()
        nb = np.delete(nb, np.flatnonzero(nb == V[i, j])[:1])
        if np.all(nb > zero_tol * scale[i, j]) or np.all(nb < -zero_tol * scale[i, j]):
            out.append((i, j))
    return np.array(out, dtype=np.int64).reshape(-1, 2)


def slice_csv(segments) -> str:
    lines = ["a1_start,a2_start,a1_end,a2_end"]
    for row in np.asarray(segments).reshape(-1, 4):
        lines.append(",".join(format(float(x), ".17g") for x in row))
    return "\n".join(lines) + "\n"


def contour_chains(segments) -> list[list[tuple[float, float]]]:
    """Join segments sharing endpoints into polylines (closed ones repeat their start)."""
    segs = [((float(r[0]), float(r[1])), (float(r[2]), float(r[3]))) for r in np.asarray(segments).reshape(-1, 4)]
    adj: dict = {}
    for k, (u, v) in enumerate(segs):
        adj.setdefault(u, []).append(k)
        adj.setdefault(v, []).append(k)
    used = [False] * len(segs)

    def walk(start, k):
        chain = [start]
        cur = start
        while k is not None:
            used[k] = True
            u, v = segs[k]
            cur = v if u == cur else u
            chain.append(cur)
            k = next((j for j in adj[cur] if not used[j]), None)
        return chain

    chains = []
    # open chains first, starting from degree-one vertices
    for vtx in sorted(adj):
        if len(adj[vtx]) == 1 and not used[adj[vtx][0]]:
            chains.append(walk(vtx, adj[vtx][0]))
    for k in range(len(segs)):
        if not used[k]:
            chains.append(walk(segs[k][0], k))
    return chains


def contour_endpoints(segments) -> list[tuple[float, float]]:
    """Free ends of the open polylines of a contour."""
    out = []
    for ch in contour_chains(segments):
        if ch[0] != ch[-1]:
            out += [ch[0], ch[-1]]
    return out


def curve_samples(t_min, t_max, steps: int) -> list[CurvePoint]:
    """``steps + 1`` equally spaced points of the singular curve; poles are skipped."""
    if steps < 1:
        raise InputError("steps must be positive")
    if t_max < t_min:
        raise InputError("t_max must not be below t_min")
    out = []
    for i in range(steps + 1):
        t = t_min + (t_max - t_min) * F(i, steps) if _is_exact(t_min) and _is_exact(t_max) else \
            float(t_min) + (float(t_max) - float(t_min)) * i / steps
        try:
            out.append(singular_curve_point(t))
        except DomainError:
            continue
    return out
