"""The acceptance checks, shared by the test suite and ``wallach verify-all``.

Each ``check_N`` returns a :class:`CheckResult`; ``run_all`` runs them in order.
"""
from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

import numpy as np

from . import catalog, fixtures, omega
from .decomp import GradedDecomposition, validate_grading
from .invariants import InvariantReport, verify_identities
from .liealg import killing_form_ad, ad_matrix
from .spaces import make_flag_family, make_ledger_obata, make_so_u, make_su_u, make_symmetric_product

F = Fraction


@dataclass
class CheckResult:
    number: int
    title: str
    passed: bool
    details: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number}: {self.title} ({self.elapsed:.2f} s)"


def _timed(number: int, title: str, budget: float | None = None):
    def deco(fn):
        def run(*args, **kw) -> CheckResult:
            t0 = time.perf_counter()
            ok, details = fn(*args, **kw)
            dt = time.perf_counter() - t0
            if budget is not None and dt >= budget:
                ok = False
                details.append(f"runtime {dt:.2f} s exceeds the {budget:g} s budget")
            return CheckResult(number, title, ok, details, dt)

        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run

    return deco


def _frac(s: str) -> Fraction:
    return Fraction(s)


# ------------------------------------------------------------------ constructed spaces


@dataclass
class Case:
    name: str
    dec: GradedDecomposition
    expected_a: tuple  # exact closed-form a-triple, or None
    report: InvariantReport


@lru_cache(maxsize=1)
def constructed_cases() -> tuple[Case, ...]:
    """Every space the brute-force oracle is run on, with its closed form."""
    cases = []

    def add(dec, expected):
        cases.append(Case(dec.name, dec, expected, verify_identities(dec)))

    for fam, line, bound in (("SO", 1, 8), ("SU", 2, 6), ("SP", 3, 5)):
        for k, l, m in product(range(1, bound), repeat=3):
            if k + l + m <= bound:
                add(make_flag_family(fam, k, l, m), catalog.closed_form(catalog.record(line), (k, l, m)).a)
    for l in (2, 3):
        add(make_su_u(l), catalog.closed_form(catalog.record(4), (l,)).a)
    for l in (4, 5):
        add(make_so_u(l), catalog.closed_form(catalog.record(5), (l,)).a)
    for fam, n in (("SU", 2), ("SO", 5)):
        add(make_ledger_obata(fam, n), (F(1, 4),) * 3)
    add(make_symmetric_product(3), (F(0),) * 3)
    return tuple(cases)


# ------------------------------------------------------------------ criteria


@_timed(1, "Table 1 closed forms reproduce the transcribed table", budget=1.0)
def check_1():
    details = []
    entries = {e.record.line: e for e in catalog.enumerate_catalog()}
    ok = sorted(entries) == list(range(1, 16))
    for line, (params, d, a) in fixtures.TABLE1_FIXTURE.items():
        e = entries[line]
        want_a = tuple(_frac(x) for x in a)
        if e.params != params or e.form.d != d or e.form.a != want_a:
            ok = False
            details.append(f"line {line}: got d={e.form.d} a={e.form.a}, table says d={d} a={want_a}")
    for (line, params), (d, a) in fixtures.TABLE1_EXTRA.items():
        cf = catalog.closed_form(catalog.record(line), params)
        if cf.d != d or cf.a != tuple(_frac(x) for x in a):
            ok = False
            details.append(f"line {line} {params}: got d={cf.d} a={cf.a}")
    # exceptional lines through Dynkin indices
    for rec in catalog.TABLE1:
        params = rec.smallest
        if catalog.a_via_gamma(rec, params) != catalog.closed_form(rec, params).a:
            ok = False
            details.append(f"line {rec.line}: Killing-ratio route disagrees with the tabulated a")
    for name, (dim, b) in fixtures.TABLE3_FIXTURE.items():
        ent = catalog.killing_entry(name)
        if (ent.dim, ent.b_max) != (dim, b):
            ok = False
            details.append(f"Killing table {name}: got {(ent.dim, ent.b_max)}")
    return ok, details


@_timed(2, "brute-force invariants match closed forms", budget=60.0)
def check_2(tol: float = 1e-8):
    details = []
    ok = True
    cases = constructed_cases()
    worst = 0.0
    for c in cases:
        if c.expected_a is None:
            continue
        got = sorted(c.report.a)
        want = sorted(float(x) for x in c.expected_a)
        err = max(abs(x - y) for x, y in zip(got, want))
        worst = max(worst, err)
        if err > tol:
            ok = False
            details.append(f"{c.name}: brute force {got} vs closed form {want}")
    details.append(f"{len(cases)} spaces, largest deviation {worst:.2e}")
    return ok, details


@_timed(3, "Ledger-Obata spaces have A = dim(f)/4")
def check_3():
    details = []
    ok = True
    for fam, n, want, tol in (("SU", 2, 0.75, 1e-10), ("SO", 5, 2.5, 1e-9)):
        A = verify_identities(make_ledger_obata(fam, n)).A
        err = abs(A - want)
        details.append(f"{fam.lower()}({n}): A = {A!r} (error {err:.2e})")
        ok &= err <= tol
    return ok, details


@_timed(4, "identity suite 2A = d(1-2c), d >= 2A, equality case")
def check_4(tol: float = 1e-8):
    details = []
    ok = True
    for c in constructed_cases():
        r = c.report
        for key, v in r.identity_residuals.items():
            if key.startswith(("2A=", "d", "[h,")) and v > tol:
                ok = False
                details.append(f"{c.name}: {key} residual {v:.3e}")
    r = verify_identities(make_flag_family("SO", 1, 1, 1))
    if not r.equality_cases:
        ok = False
        details.append("so(3): equality case d_i = 2A was not detected")
    for i in r.equality_cases:
        v = r.identity_residuals[f"[h,p{i}]=0"]
        ok &= v <= tol
        details.append(f"so(3): equality on p{i}, [h,p{i}] residual {v:.1e}")
    return ok, details


def killing_oracle_error(alg) -> float:
    """Relative gap between ``tr(ad X ad Y)`` and the trace formula over the basis Gram matrix."""
    ads = np.array([ad_matrix(alg, E) for E in alg.basis])
    G_ad = np.einsum("aij,bji->ab", ads, ads)
    G_tr = -alg.gram()
    return float(np.max(np.abs(G_ad - G_tr)) / np.max(np.abs(G_tr)))


@_timed(5, "structure-constant symmetry, grading and Killing oracle")
def check_5(seed: int = 0):
    details = []
    ok = True
    seen = {}
    worst = {"sym": 0.0, "iij": 0.0, "grading": 0.0, "killing": 0.0}
    for c in constructed_cases():
        res = c.report.identity_residuals
        worst["sym"] = max(worst["sym"], res["[ijk]_symmetry"])
        worst["iij"] = max(worst["iij"], res["[iij]_vanish"])
        g = validate_grading(c.dec)
        worst["grading"] = max(worst["grading"], max(g.residuals.values()))
        alg = c.dec.alg
        key = alg.name
        if key not in seen:
            seen[key] = killing_oracle_error(alg)
            # one random pair through the public ad-trace function as well
            rng = np.random.default_rng(seed)
            X = alg.element(rng.standard_normal(alg.dim))
            Y = alg.element(rng.standard_normal(alg.dim))
            kad, ktr = killing_form_ad(alg, X, Y), alg.killing(X, Y)
            seen[key] = max(seen[key], abs(kad - ktr) / max(abs(ktr), 1e-300))
        worst["killing"] = max(worst["killing"], seen[key])
    limits = {"sym": 1e-10, "iij": 1e-10, "grading": 1e-9, "killing": 1e-10}
    for k, v in worst.items():
        ok &= v <= limits[k]
        details.append(f"{k}: worst {v:.2e} (limit {limits[k]:g})")
    details.append(f"{len(seen)} distinct algebras checked against tr(ad X ad Y)")
    return ok, details


def _rand_frac(rng: random.Random, lo=F(0), hi=F(1, 2), max_den: int = 997) -> Fraction:
    den = rng.randint(1, max_den)
    num = rng.randint(0, den)
    return lo + (hi - lo) * F(num, den)


def curve_parameters(count: int = 50) -> list[Fraction]:
    """Rational ``t`` whose singular-curve point lies in the closed cube."""
    out = []
    i = 1
    while len(out) < count:
        t = F(i, 200)
        i += 1
        if 8 * t * t == 1:
            continue
        if omega.singular_curve_point(t).inside:
            out.append(t)
        if i > 10_000:
            break
    return out


@_timed(6, "exact identities of Q", budget=10.0)
def check_6(seed: int = 0):
    details = []
    ok = True
    rng = random.Random(seed)
    ts = [F(i, 198) for i in range(100)]
    bad = [t for t in ts if omega.eval_Q((t, F(1, 2) - t, 0)) != 0]
    ok &= not bad
    details.append(f"Q(t, 1/2 - t, 0) = 0 for {len(ts) - len(bad)}/{len(ts)} rational t")
    q = (F(1, 4),) * 3
    zero_centre = omega.eval_Q(q) == 0 and omega.grad_Q(q) == (0, 0, 0)
    ok &= zero_centre
    details.append(f"Q and grad Q vanish at (1/4,1/4,1/4): {zero_centre}")
    ts = curve_parameters(50)
    good = 0
    for t in ts:
        p = omega.singular_curve_point(t).point
        good += omega.eval_Q(p) == 0 and all(g == 0 for g in omega.grad_Q(p))
    ok &= good == 50 and len(ts) == 50
    details.append(f"singular curve: Q = grad Q = 0 at {good}/50 rational points")
    q0 = omega.eval_Q((0, 0, 0))
    ok &= q0 == -1
    details.append(f"Q(0,0,0) = {q0}")
    sym_bad = 0
    for _ in range(1000):
        p = tuple(_rand_frac(rng) for _ in range(3))
        v = omega.eval_Q(p)
        sym_bad += any(omega.eval_Q(tuple(p[i] for i in perm)) != v for perm in permutations(range(3)))
    ok &= sym_bad == 0
    details.append(f"permutation symmetry failures on 1000 random points: {sym_bad}")
    return ok, details


def component_samples() -> list[tuple[str, tuple, str]]:
    """``(description, point, expected label)`` as stated for the classification of known spaces."""
    out = []
    for k, l, m in product(range(1, 8), repeat=3):
        if k >= l >= m and k + l + m <= 9:
            out.append((f"su flag ({k},{l},{m})", catalog.closed_form(catalog.record(2), (k, l, m)).a, "O1"))
            out.append((f"sp flag ({k},{l},{m})", catalog.closed_form(catalog.record(3), (k, l, m)).a, "O1"))
    out.append(("so(5) point", (F(1, 3), F(1, 3), F(1, 6)), "O3"))
    out.append(("so(6) point", (F(3, 8), F(1, 4), F(1, 8)), "O3"))
    for l in (2, 3, 4, 5):
        out.append((f"Table 1 line 4, l={l}", catalog.closed_form(catalog.record(4), (l,)).a, "O1"))
    for line in (7, 9, 15):
        out.append((f"Table 1 line {line}", catalog.closed_form(catalog.record(line)).a, "O1"))
    for l in (4, 5, 6, 7):
        out.append((f"Table 1 line 5, l={l}", catalog.closed_form(catalog.record(5), (l,)).a, "O3"))
    for line in (6, 8, 10, 12, 14):
        out.append((f"Table 1 line {line}", catalog.closed_form(catalog.record(line)).a, "O3"))
    for line in (11, 13):
        out.append((f"Table 1 line {line}", catalog.closed_form(catalog.record(line)).a, "O2"))
    for a in (F(1, 8), F(1, 6), F(1, 5), F(3, 10), F(2, 5), F(7, 15)):
        out.append((f"diagonal a={a}", (a, a, a), "O1" if a < F(1, 4) else "O2"))
    return out


@_timed(7, "component assignments of known spaces")
def check_7():
    details = []
    ok = True
    unresolved = 0
    n = 0
    for desc, p, want in component_samples():
        lab = omega.classify(p)
        n += 1
        if lab.component is omega.Component.UNRESOLVED:
            unresolved += 1
        if lab.label != want:
            ok = False
            details.append(f"{desc} {tuple(str(x) for x in p)}: expected {want}, got {lab.label} (Q sign {lab.Q_sign:+d})")
    ok &= unresolved == 0
    details.append(f"{n} points, {unresolved} unresolved")
    return ok, details


@_timed(8, "Table 2 irreducibility filter")
def check_8():
    details = []
    ok = True
    for t in catalog.TABLE2:
        if t.line in fixtures.TABLE2_EXCEPTIONAL:
            want = fixtures.TABLE2_EXCEPTIONAL[t.line]
            got = catalog.filter_table2(t).table1_line
            if got != want:
                ok = False
                details.append(f"line {t.line}: expected {want}, got {got}")
            continue
        n = fixtures.CLASSICAL_PARAM_COUNT[t.line]
        lo = 0 if n == 4 else 1
        for params in product(range(lo, 5 if n < 4 else 3), repeat=n):
            want = fixtures.expected_table2(t.line, params)
            r = catalog.filter_table2(t, params)
            got = (r.table1_line, r.table1_params if r.accepted else ())
            if got != want:
                ok = False
                details.append(f"line {t.line} {params}: expected {want}, got {got}")
    accepted = sorted(t.line for t in catalog.TABLE2 if t.rule[0] == "accept")
    ok &= accepted == [15, 17, 18, 23, 25, 29, 31, 33, 35, 36]
    details.append(f"unconditionally accepted lines: {accepted}")
    return ok, details


@_timed(9, "slice a3 = 1/2 ends near (1/2, sqrt2/4) and (sqrt2/4, 1/2)")
def check_9(grid: int = 256):
    r = math.sqrt(2) / 4
    ends = omega.contour_endpoints(omega.surface_slice(F(1, 2), grid))
    details = [f"open contour ends: {[(round(x, 6), round(y, 6)) for x, y in ends]}"]
    ok = True
    for target in ((0.5, r), (r, 0.5)):
        d = min((math.hypot(x - target[0], y - target[1]) for x, y in ends), default=math.inf)
        details.append(f"distance to ({target[0]:.6f}, {target[1]:.6f}): {d:.2e} (limit {2 / grid:.2e})")
        ok &= d <= 2 / grid
    return ok, details


CHECKS = (check_1, check_2, check_3, check_4, check_5, check_6, check_7, check_8, check_9)


def run_all(seed: int = 0) -> list[CheckResult]:
    out = []
    for fn in CHECKS:
        if fn in (check_5, check_6):
            out.append(fn(seed=seed))
        else:
            out.append(fn())
    return out
