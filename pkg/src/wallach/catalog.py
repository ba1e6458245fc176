"""Closed-form data for generalized Wallach spaces with simple ``G``.

Three tables live here as exact rational data:

* ``TABLE1`` - the fifteen pairs ``(g, h)`` with dimension and ``a_i`` formulas.
* ``TABLE2`` - the thirty-seven Z2 x Z2 pairs with the verdict of the
  irreducibility filter and the Table 1 line each accepted pair maps to.
* ``KILLING_TABLE`` - ``dim g`` and ``B_g(beta_max, beta_max)`` for the simple
  compact algebras, used to turn Dynkin indices into Killing-form ratios.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .errors import InputError

F = Fraction


# ------------------------------------------------------------------ Table 3


@dataclass(frozen=True)
class KillingTableEntry:
    name: str
    dim: int
    b_max: int


_EXCEPTIONAL = {
    "g2": (14, 16),
    "f4": (52, 36),
    "e6": (78, 48),
    "e7": (133, 72),
    "e8": (248, 120),
}


def killing_entry(name: str) -> KillingTableEntry:
    """Look up ``so(n)``, ``sp(n)``, ``su(n)`` or an exceptional algebra."""
    key = name.strip().lower().replace(" ", "")
    if key in _EXCEPTIONAL:
        dim, b = _EXCEPTIONAL[key]
        return KillingTableEntry(key, dim, b)
    m = re.fullmatch(r"(so|sp|su)\((\d+)\)", key)
    if not m:
        raise InputError(f"unknown simple algebra {name!r}")
    fam, n = m.group(1), int(m.group(2))
    if fam == "so":
        return KillingTableEntry(key, n * (n - 1) // 2, 4 * (n - 2))
    if fam == "sp":
        return KillingTableEntry(key, 2 * n * n + n, 4 * (n + 1))
    return KillingTableEntry(key, n * n - 1, 4 * n)


KILLING_TABLE = (
    killing_entry("g2"), killing_entry("f4"), killing_entry("e6"), killing_entry("e7"), killing_entry("e8"),
)


def gamma_from_dynkin(sub: KillingTableEntry, amb: KillingTableEntry, j: int = 1) -> Fraction:
    """Killing ratio ``B_k = gamma B_g`` of a simple subalgebra with Dynkin index ``j``."""
    if j < 1:
        raise InputError("Dynkin index must be a positive integer")
    return F(sub.b_max, j * amb.b_max)


def gamma_from_trace(sub_kappa, amb_kappa) -> Fraction:
    """Killing ratio of two classical algebras sharing a defining representation."""
    return F(sub_kappa) / F(amb_kappa)


def a_from_gamma(gamma, d: int) -> tuple[Fraction, Fraction]:
    """``(A, a)`` from ``c = gamma / 2`` and ``2A = d (1 - 2c)``."""
    gamma = F(gamma)
    if not 0 < gamma < 1:
        raise InputError(f"gamma must lie in (0, 1), got {gamma}")
    a = (1 - gamma) / 2
    return d * a, a


# ------------------------------------------------------------------ Table 1


@dataclass(frozen=True)
class ClosedForm:
    d: tuple[int, int, int]
    a: tuple[Fraction, Fraction, Fraction]
    A: Fraction


@dataclass(frozen=True)
class WallachRecord:
    line: int
    g: str
    h: str
    param_names: tuple[str, ...]
    constraint: str
    d_formulas: tuple[str, str, str]
    a_formulas: tuple[str, str, str]
    _dims: Callable = field(repr=False, compare=False)
    _a: Callable = field(repr=False, compare=False)
    _ok: Callable = field(repr=False, compare=False)
    _gammas: Callable = field(repr=False, compare=False)
    smallest: tuple[int, ...] = ()

    def admissible(self, params) -> bool:
        return len(params) == len(self.param_names) and all(
            isinstance(p, int) and not isinstance(p, bool) for p in params
        ) and self._ok(*params)

    def g_name(self, params=()) -> str:
        return _subst(self.g, self.param_names, params)

    def h_name(self, params=()) -> str:
        return _subst(self.h, self.param_names, params)


def _subst(text: str, names, params) -> str:
    if not params:
        return text
    env = dict(zip(names, params))
    return re.sub(r"\(([^()]*)\)", lambda m: "(" + str(_eval_int(m.group(1), env)) + ")", text)


def _eval_int(expr: str, env) -> str:
    if re.fullmatch(r"[klm0-9+\- ]+", expr):
        expr = re.sub(r"(\d)([klm])", r"\1*\2", expr)
        return str(eval(expr, {"__builtins__": {}}, env))  # noqa: S307 - fixed arithmetic on ints
    return expr


def _cls(line, g, h, names, constraint, dform, aform, dims, a, ok, gammas, smallest):
    return WallachRecord(line, g, h, names, constraint, dform, aform, dims, a, ok, gammas, smallest)


def _fixed(line, g, h, d, a, subs, amb):
    a = tuple(F(x) for x in a)
    return WallachRecord(
        line, g, h, (), "", tuple(str(x) for x in d), tuple(str(x) for x in a),
        lambda: tuple(d), lambda: a, lambda: True,
        lambda: tuple(("dynkin", s, amb, 1) for s in subs), (),
    )


def _pos(*xs):
    return all(x >= 1 for x in xs)


TABLE1: tuple[WallachRecord, ...] = (
    _cls(1, "so(k+l+m)", "so(k)+so(l)+so(m)", ("k", "l", "m"), "k, l, m >= 1",
         ("kl", "km", "lm"), ("m/(2(k+l+m-2))", "l/(2(k+l+m-2))", "k/(2(k+l+m-2))"),
         lambda k, l, m: (k * l, k * m, l * m),
         lambda k, l, m: (F(m, 2 * (k + l + m - 2)), F(l, 2 * (k + l + m - 2)), F(k, 2 * (k + l + m - 2))),
         _pos,
         lambda k, l, m: (("trace", k + l - 2, k + l + m - 2), ("trace", k + m - 2, k + l + m - 2),
                          ("trace", l + m - 2, k + l + m - 2)),
         (1, 1, 1)),
    _cls(2, "su(k+l+m)", "s(u(k)+u(l)+u(m))", ("k", "l", "m"), "k, l, m >= 1",
         ("2kl", "2km", "2lm"), ("m/(2(k+l+m))", "l/(2(k+l+m))", "k/(2(k+l+m))"),
         lambda k, l, m: (2 * k * l, 2 * k * m, 2 * l * m),
         lambda k, l, m: (F(m, 2 * (k + l + m)), F(l, 2 * (k + l + m)), F(k, 2 * (k + l + m))),
         _pos,
         lambda k, l, m: (("trace", 2 * (k + l), 2 * (k + l + m)), ("trace", 2 * (k + m), 2 * (k + l + m)),
                          ("trace", 2 * (l + m), 2 * (k + l + m))),
         (1, 1, 1)),
    _cls(3, "sp(k+l+m)", "sp(k)+sp(l)+sp(m)", ("k", "l", "m"), "k, l, m >= 1",
         ("4kl", "4km", "4lm"), ("m/(2(k+l+m+1))", "l/(2(k+l+m+1))", "k/(2(k+l+m+1))"),
         lambda k, l, m: (4 * k * l, 4 * k * m, 4 * l * m),
         lambda k, l, m: (F(m, 2 * (k + l + m + 1)), F(l, 2 * (k + l + m + 1)), F(k, 2 * (k + l + m + 1))),
         _pos,
         lambda k, l, m: (("trace", 2 * (k + l + 1), 2 * (k + l + m + 1)),
                          ("trace", 2 * (k + m + 1), 2 * (k + l + m + 1)),
                          ("trace", 2 * (l + m + 1), 2 * (k + l + m + 1))),
         (1, 1, 1)),
    # third module: k3~ = su(l)+su(l) is not simple, a3 = 1/4 is taken as tabulated
    _cls(4, "su(2l)", "u(l)", ("l",), "l >= 2",
         ("l(l-1)", "l(l+1)", "l^2-1"), ("(l+1)/(4l)", "(l-1)/(4l)", "1/4"),
         lambda l: (l * (l - 1), l * (l + 1), l * l - 1),
         lambda l: (F(l + 1, 4 * l), F(l - 1, 4 * l), F(1, 4)),
         lambda l: l >= 2,
         lambda l: (("trace", 2 * l - 2, 4 * l), ("trace", 2 * (l + 1), 4 * l), ("direct", F(1, 4))),
         (2,)),
    _cls(5, "so(2l)", "u(1)+u(l-1)", ("l",), "l >= 4",
         ("2(l-1)", "2(l-1)", "(l-1)(l-2)"), ("(l-2)/(4(l-1))", "(l-2)/(4(l-1))", "1/(2(l-1))"),
         lambda l: (2 * (l - 1), 2 * (l - 1), (l - 1) * (l - 2)),
         lambda l: (F(l - 2, 4 * (l - 1)), F(l - 2, 4 * (l - 1)), F(1, 2 * (l - 1))),
         lambda l: l >= 4,
         lambda l: (("dynkin", f"su({l})", f"so({2 * l})", 1), ("dynkin", f"su({l})", f"so({2 * l})", 1),
                    ("dynkin", f"so({2 * l - 2})", f"so({2 * l})", 1)),
         (4,)),
    _fixed(6, "e6", "su(4)+2sp(1)+R", (16, 16, 24), (F(1, 4), F(1, 4), F(1, 6)), ("su(6)", "su(6)", "so(10)"), "e6"),
    _fixed(7, "e6", "so(8)+R^2", (16, 16, 16), (F(1, 6),) * 3, ("so(10)",) * 3, "e6"),
    _fixed(8, "e6", "sp(3)+sp(1)", (14, 28, 12), (F(1, 4), F(1, 8), F(7, 24)), ("su(6)", "f4", "sp(4)"), "e6"),
    _fixed(9, "e7", "so(8)+3sp(1)", (32, 32, 32), (F(2, 9),) * 3, ("so(12)",) * 3, "e7"),
    _fixed(10, "e7", "su(6)+sp(1)+R", (30, 40, 24), (F(2, 9), F(1, 6), F(5, 18)), ("so(12)", "e6", "su(8)"), "e7"),
    _fixed(11, "e7", "so(8)", (35, 35, 35), (F(5, 18),) * 3, ("su(8)",) * 3, "e7"),
    _fixed(12, "e8", "so(12)+2sp(1)", (64, 64, 48), (F(1, 5), F(1, 5), F(4, 15)), ("e7", "e7", "so(16)"), "e8"),
    _fixed(13, "e8", "so(8)+so(8)", (64, 64, 64), (F(4, 15),) * 3, ("so(16)",) * 3, "e8"),
    _fixed(14, "f4", "so(5)+2sp(1)", (8, 8, 20), (F(5, 18), F(5, 18), F(1, 9)), ("sp(3)", "sp(3)", "so(9)"), "f4"),
    _fixed(15, "f4", "so(8)", (8, 8, 8), (F(1, 9),) * 3, ("so(9)",) * 3, "f4"),
)


def record(line: int) -> WallachRecord:
    if not 1 <= line <= len(TABLE1):
        raise InputError(f"Table 1 has lines 1..{len(TABLE1)}, got {line}")
    return TABLE1[line - 1]


def closed_form(rec: WallachRecord, params=()) -> ClosedForm:
    """Exact ``(d, a, A)`` for a Table 1 record at the given parameters."""
    params = tuple(params)
    if not rec.admissible(params):
        raise InputError(f"line {rec.line}: parameters {params} violate '{rec.constraint or 'no parameters'}'")
    d = tuple(int(x) for x in rec._dims(*params))
    a = tuple(F(x) for x in rec._a(*params))
    A = {ai * di for ai, di in zip(a, d)}
    if len(A) != 1:
        raise AssertionError(f"line {rec.line}: a_i d_i not constant: {A}")
    if not all(0 < x <= F(1, 2) for x in a):
        raise AssertionError(f"line {rec.line}: a = {a} leaves (0, 1/2]")
    return ClosedForm(d, a, A.pop())


def gamma_routes(rec: WallachRecord, params=()) -> tuple:
    """How each module's ``a_i`` follows from a Killing ratio.

    Entries are ``("trace", kappa_sub, kappa_amb)``, ``("dynkin", sub, amb, j)``
    or ``("direct", a)`` for modules whose effective ``k_i`` is not simple.
    """
    return rec._gammas(*params)


def a_via_gamma(rec: WallachRecord, params=()) -> tuple[Fraction, Fraction, Fraction]:
    """Recompute the ``a``-triple from Killing ratios instead of the tabulated formulas."""
    cf = closed_form(rec, params)
    out = []
    for route, d in zip(gamma_routes(rec, params), cf.d):
        if route[0] == "direct":
            out.append(F(route[1]))
            continue
        if route[0] == "trace":
            gamma = gamma_from_trace(route[1], route[2])
        else:
            gamma = gamma_from_dynkin(killing_entry(route[1]), killing_entry(route[2]), route[3])
        # abelian k_i~ (so(2)) acts with Casimir zero
        out.append(F(1, 2) if gamma == 0 else a_from_gamma(gamma, d)[1])
    return tuple(out)


@dataclass(frozen=True)
class CatalogEntry:
    record: WallachRecord
    params: tuple[int, ...]
    form: ClosedForm


def enumerate_catalog() -> list[CatalogEntry]:
    """All fifteen lines, parametric ones at their smallest admissible parameters."""
    return [CatalogEntry(r, r.smallest, closed_form(r, r.smallest)) for r in TABLE1]


def catalog_rows(entries=None) -> list[dict]:
    entries = enumerate_catalog() if entries is None else entries
    rows = []
    for e in entries:
        r, cf = e.record, e.form
        rows.append({
            "line": r.line,
            "g": r.g,
            "h": r.h,
            "params": dict(zip(r.param_names, e.params)),
            "d": list(cf.d),
            "a_num": [x.numerator for x in cf.a],
            "a_den": [x.denominator for x in cf.a],
            "A_num": cf.A.numerator,
            "A_den": cf.A.denominator,
            "d_formulas": list(r.d_formulas),
            "a_formulas": list(r.a_formulas),
        })
    return rows


def catalog_json(entries=None) -> str:
    return json.dumps(catalog_rows(entries), sort_keys=True, indent=2) + "\n"


def format_table(rows: list[list[str]], header: list[str]) -> str:
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*header), fmt.format(*["-" * w for w in widths])]
    lines += [fmt.format(*[str(x) for x in row]) for row in rows]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def catalog_text(entries=None) -> str:
    entries = enumerate_catalog() if entries is None else entries
    rows = []
    for e in entries:
        r, cf = e.record, e.form
        p = ",".join(f"{n}={v}" for n, v in zip(r.param_names, e.params))
        rows.append([r.line, r.g, r.h, p or "-", *cf.d, *(str(x) for x in cf.a)])
    return format_table(rows, ["N", "g", "h", "params", "d1", "d2", "d3", "a1", "a2", "a3"])


# ------------------------------------------------------------------ Table 2


@dataclass(frozen=True)
class SymTriple:
    """A Z2 x Z2 pair ``(g, h)`` with its three symmetric subalgebras and filter rule.

    ``rule`` is one of

    * ``("reject", reason)``
    * ``("accept", table1_line)`` - parameter-free exceptional lines
    * ``("accept_p", table1_line)`` - ``(su(2p), u(p))`` maps to ``l = p``
    * ``("one_zero", table1_line)`` - four block sizes, exactly one must vanish
    * ``("p_or_q_one", table1_line)`` - ``so(2p+2q)`` needs ``p = 1`` or ``q = 1``
    """

    line: int
    g: str
    h: str
    k: tuple[str, str, str]
    param_names: tuple[str, ...]
    rule: tuple


_NOT_IRRED_EXC = "at least one effective pair (k_i~, h_i~) is not irreducible symmetric"

TABLE2: tuple[SymTriple, ...] = (
    SymTriple(1, "su(p+q)", "so(p)+so(q)", ("so(p+q)", "so(p+q)", "s(u(p)+u(q))"), ("p", "q"),
              ("reject", "(k3~, h3~) = (s(u(p)+u(q)), so(p)+so(q)) is not irreducible symmetric")),
    SymTriple(2, "su(2p)", "u(p)", ("so(2p)", "sp(p)", "s(u(p)+u(p))"), ("p",), ("accept_p", 4)),
    SymTriple(3, "su(2p+2q)", "sp(p)+sp(q)", ("sp(p+q)", "sp(p+q)", "s(u(2p)+u(2q))"), ("p", "q"),
              ("reject", "(k3~, h3~) = (s(u(2p)+u(2q)), sp(p)+sp(q)) is not irreducible symmetric")),
    SymTriple(4, "su(p+q+r+s)", "s(u(p)+u(q)+u(r)+u(s))",
              ("s(u(p+q)+u(r+s))", "s(u(p+r)+u(q+s))", "s(u(p+s)+u(q+r))"), ("p", "q", "r", "s"), ("one_zero", 2)),
    SymTriple(5, "su(2p)", "su(p)", ("s(u(p)+u(p))",) * 3, ("p",),
              ("reject", "none of the pairs (k_i~, h_i~) is irreducible")),
    SymTriple(6, "so(p+q+r+s)", "so(p)+so(q)+so(r)+so(s)",
              ("so(p+q)+so(r+s)", "so(p+r)+so(q+s)", "so(p+s)+so(q+r)"), ("p", "q", "r", "s"), ("one_zero", 1)),
    SymTriple(7, "so(2p)", "so(p)", ("so(p)+so(p)", "so(p)+so(p)", "u(p)"), ("p",),
              ("reject", "(k3~, h3~) = (u(p), so(p)) is not irreducible")),
    SymTriple(8, "so(2p+2q)", "u(p)+u(q)", ("so(2p)+so(2q)", "u(p+q)", "u(p+q)"), ("p", "q"), ("p_or_q_one", 5)),
    SymTriple(9, "so(4p)", "sp(p)", ("u(2p)",) * 3, ("p",),
              ("reject", "none of the pairs (k_i~, h_i~) is irreducible")),
    SymTriple(10, "sp(p)", "so(p)", ("u(p)",) * 3, ("p",),
              ("reject", "none of the pairs (k_i~, h_i~) is irreducible")),
    SymTriple(11, "sp(p+q)", "u(p)+u(q)", ("u(p+q)", "u(p+q)", "sp(p)+sp(q)"), ("p", "q"),
              ("reject", "(k3~, h3~) = (sp(p)+sp(q), u(p)+u(q)) is not irreducible")),
    SymTriple(12, "sp(2p)", "sp(p)", ("u(2p)", "sp(p)+sp(p)", "sp(p)+sp(p)"), ("p",),
              ("reject", "(k1~, h1~) = (u(2p), sp(p)) is not irreducible")),
    SymTriple(13, "sp(p+q+r+s)", "sp(p)+sp(q)+sp(r)+sp(s)",
              ("sp(p+q)+sp(r+s)", "sp(p+r)+sp(q+s)", "sp(p+s)+sp(q+r)"), ("p", "q", "r", "s"), ("one_zero", 3)),
    SymTriple(14, "e6", "2su(3)+R^2", ("su(6)+sp(1)",) * 3, (), ("reject", _NOT_IRRED_EXC)),
    SymTriple(15, "e6", "su(4)+2sp(1)+R", ("su(6)+sp(1)", "su(6)+sp(1)", "so(10)+R"), (), ("accept", 6)),
    SymTriple(16, "e6", "su(5)+R^2", ("su(6)+sp(1)", "so(10)+R", "so(10)+R"), (), ("reject", _NOT_IRRED_EXC)),
    SymTriple(17, "e6", "so(8)+R^2", ("so(10)+R",) * 3, (), ("accept", 7)),
    SymTriple(18, "e6", "sp(3)+sp(1)", ("su(6)+sp(1)", "f4", "sp(4)"), (), ("accept", 8)),
    SymTriple(19, "e6", "so(6)+R", ("su(6)+sp(1)", "sp(4)", "sp(4)"), (), ("reject", _NOT_IRRED_EXC)),
    SymTriple(20, "e6", "so(9)", ("so(10)+R", "f4", "f4"), (), ("reject", _NOT_IRRED_EXC)),
    SymTriple(21, "e6", "so(5)+so(5)", ("so(10)+R", "sp(4)", "sp(4)"), (), ("reject", _NOT_IRRED_EXC)),
    SymTriple(22, "e7", "su(6)+R^2", ("so(12)+sp(1)",) * 3, (), ("reject", _NOT_IRRED_EXC)),
    SymTriple(23, "e7", "so(8)+3sp(1)", ("so(12)+sp(1)",) * 3, (), ("accept", 9)),
    SymTriple(24, "e7", "so(10)+R^2", ("so(12)+sp(1)", "e6+R", "e6+R"), (), ("reject", _NOT_IRRED_EXC)),
    SymTriple(25, "e7", "su(6)+sp(1)+R", ("so(12)+sp(1)", "e6+R", "su(8)"), (), ("accept", 10)),
    SymTriple(26, "e7", "su(4)+su(4)+R", ("so(12)+sp(1)", "su(8)", "su(8)"), (), ("reject", _NOT_IRRED_EXC)),
    SymTriple(27, "e7", "f4", ("e6+R",) * 3, (), ("reject", _NOT_IRRED_EXC)),
    SymTriple(28, "e7", "sp(4)", ("e6+R", "su(8)", "su(8)"), (), ("reject", _NOT_IRRED_EXC)),
    SymTriple(29, "e7", "so(8)", ("su(8)",) * 3, (), ("accept", 11)),
    SymTriple(30, "e8", "e6+R^2", ("e7+sp(1)",) * 3, (), ("reject", _NOT_IRRED_EXC)),
    SymTriple(31, "e8", "so(12)+2sp(1)", ("e7+sp(1)", "e7+sp(1)", "so(16)"), (), ("accept", 12)),
    SymTriple(32, "e8", "su(8)+R", ("e7+sp(1)", "so(16)", "so(16)"), (), ("reject", _NOT_IRRED_EXC)),
    SymTriple(33, "e8", "so(8)+so(8)", ("so(16)",) * 3, (), ("accept", 13)),
    SymTriple(34, "f4", "su(3)+R^2", ("sp(3)+sp(1)",) * 3, (), ("reject", _NOT_IRRED_EXC)),
    SymTriple(35, "f4", "so(5)+2sp(1)", ("sp(3)+sp(1)", "sp(3)+sp(1)", "so(9)"), (), ("accept", 14)),
    SymTriple(36, "f4", "so(8)", ("so(9)",) * 3, (), ("accept", 15)),
    SymTriple(37, "g2", "R^2", ("sp(1)+sp(1)",) * 3, (), ("reject", _NOT_IRRED_EXC)),
)


def triple(line: int) -> SymTriple:
    if not 1 <= line <= len(TABLE2):
        raise InputError(f"Table 2 has lines 1..{len(TABLE2)}, got {line}")
    return TABLE2[line - 1]


@dataclass(frozen=True)
class FilterResult:
    line: int
    params: tuple[int, ...]
    record: WallachRecord | None
    table1_params: tuple[int, ...]
    reason: str

    @property
    def accepted(self) -> bool:
        return self.record is not None

    @property
    def table1_line(self) -> int | None:
        return None if self.record is None else self.record.line


def filter_table2(t: SymTriple, params=()) -> FilterResult:
    """Decide whether a Table 2 pair generates a generalized Wallach space.

    Returns the matching Table 1 record (and its parameters) on acceptance;
    otherwise ``record`` is ``None`` and ``reason`` says why.
    """
    params = tuple(params)
    if len(params) != len(t.param_names) or not all(isinstance(p, int) and p >= 0 for p in params):
        raise InputError(f"Table 2 line {t.line} expects non-negative integers {t.param_names}, got {params}")
    kind = t.rule[0]

    def ok(line, p1, why):
        return FilterResult(t.line, params, record(line), p1, why)

    def no(why):
        return FilterResult(t.line, params, None, (), why)

    if kind == "reject":
        return no(t.rule[1])
    if kind == "accept":
        return ok(t.rule[1], (), "all effective pairs (k_i~, h_i~) are irreducible symmetric")
    if kind == "accept_p":
        (p,) = params
        if p < 2:
            return no("p < 2: the module p1 = so(2p) - u(p) is zero")
        return ok(t.rule[1], (p,), "(k3~, h3~) = (su(p)+su(p), diag su(p)) is irreducible symmetric")
    if kind == "one_zero":
        zeros = sum(1 for p in params if p == 0)
        if zeros == 0:
            return no("p*q*r*s != 0: each (k_i, h) splits into two symmetric pairs")
        if zeros > 1:
            return no("more than one block is empty: fewer than three nonzero modules")
        rest = tuple(p for p in params if p != 0)
        return ok(t.rule[1], rest, "one block empty (s = 0 up to relabelling): all modules irreducible")
    if kind == "p_or_q_one":
        p, q = params
        if p < 1 or q < 1:
            return no("p, q must be positive")
        if min(p, q) != 1:
            return no("(k1, h) = (so(2p)+so(2q), u(p)+u(q)) is irreducible only if p = 1 or q = 1")
        if p + q < 4:
            return no("p + q < 4: so(4) is not simple and so(6) = su(4) repeats a Table 1 line 2 space")
        return ok(t.rule[1], (p + q,), "p = 1 or q = 1: all effective pairs irreducible")
    raise AssertionError(kind)
