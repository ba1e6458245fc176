import math
import re
from fractions import Fraction as F
from itertools import permutations

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

from wallach import omega
from wallach.catalog import closed_form, record
from wallach.errors import DomainError, InputError
from wallach.omega import (
    APoint,
    ClassifyOptions,
    Component,
    classify,
    eval_Q,
    grad_Q,
    singular_curve_point,
    singular_profile,
    surface_slice,
)

# The defining formula, copied as printed and parsed independently of the package.
Q_TEX = r"""(2s_1+4s_3-1)(64s_1^5-64s_1^4+8s_1^3+12s_1^2-6s_1+1\\\notag
+240s_3s_1^2-240s_3s_1-1536s_3^2s_1-4096s_3^3+60s_3+768s_3^2)\\
-8s_1(2s_1+4s_3-1)(2s_1-32s_3-1)(10s_1+32s_3-5)s_2\\\notag
-16s_1^2(13-52s_1+640s_3s_1+1024s_3^2-320s_3+52s_1^2)s_2^2\\\notag
+64(2s_1-1)(2s_1-32s_3-1)s_2^3+2048s_1(2s_1-1)s_2^4"""

A1, A2, A3 = sp.symbols("a1 a2 a3")


def _oracle():
    text = Q_TEX.replace(r"\notag", "").replace("\\\\", "").replace("\n", "")
    text = re.sub(r"s_(\d)", r" s\1 ", text)
    s1, s2, s3 = sp.symbols("s1 s2 s3")
    expr = parse_expr(text, local_dict={"s1": s1, "s2": s2, "s3": s3},
                      transformations=standard_transformations + (implicit_multiplication_application, convert_xor))
    sub = {s1: A1 + A2 + A3, s2: A1 * A2 + A1 * A3 + A2 * A3, s3: A1 * A2 * A3}
    return sp.Poly(sp.expand(expr.subs(sub)), A1, A2, A3)


ORACLE = _oracle()


def oracle_value(p):
    return F(str(ORACLE.eval(dict(zip((A1, A2, A3), (sp.Rational(x.numerator, x.denominator) for x in map(F, p)))))))


def test_oracle_shape():
    assert ORACLE.total_degree() == 12
    assert ORACLE.as_expr().subs({A1: A2, A2: A1}, simultaneous=True).expand() == ORACLE.as_expr()


@pytest.mark.parametrize("p", [(0, 0, 0), (F(1, 6),) * 3, (F(1, 3), F(1, 5), F(2, 7)), (F(1, 2), F(1, 2), F(1, 2)),
                               (F(3, 8), F(1, 4), F(1, 8)), (F(5, 18),) * 3])
def test_eval_matches_oracle(p):
    assert eval_Q(p) == oracle_value(p)


def test_pinned_values():
    assert eval_Q((0, 0, 0)) == -1
    assert eval_Q((F(1, 6),) * 3) == F(-256, 531441)
    assert eval_Q((F(1, 4),) * 3) == 0


@pytest.mark.parametrize("t", [F(0), F(1, 7), F(1, 4), F(2, 5), F(1, 2)])
def test_triangle_edge_is_on_surface(t):
    assert eval_Q((t, F(1, 2) - t, 0)) == 0


def test_gradient_matches_oracle():
    rng = np.random.default_rng(5)
    grads = [ORACLE.diff(v) for v in (A1, A2, A3)]
    for _ in range(5):
        p = tuple(F(int(x), 97) for x in rng.integers(0, 49, 3))
        vals = {A1: sp.Rational(p[0].numerator, p[0].denominator),
                A2: sp.Rational(p[1].numerator, p[1].denominator),
                A3: sp.Rational(p[2].numerator, p[2].denominator)}
        want = tuple(F(str(g.eval(vals))) for g in grads)
        assert grad_Q(p) == want


def test_gradient_vanishes_at_centre_and_curve():
    assert grad_Q((F(1, 4),) * 3) == (0, 0, 0)
    p = singular_curve_point(F(1, 5)).point
    assert tuple(p) == (F(41, 170), F(1, 5), F(1, 5))
    assert eval_Q(p) == 0
    assert grad_Q(p) == (0, 0, 0)


def test_gradient_float_crosscheck():
    rng = np.random.default_rng(11)
    for _ in range(20):
        p = tuple(rng.uniform(0.01, 0.49, 3))
        g = grad_Q(p)  # raises if finite differences disagree
        fd = omega.grad_fd(p)
        scale = max(1.0, max(abs(x) for x in g))
        assert max(abs(x - y) for x, y in zip(g, fd)) <= 1e-6 * scale


def test_curve_special_points():
    assert tuple(singular_curve_point(F(1, 4)).point) == (F(1, 4),) * 3
    cp = singular_curve_point(F(1, 2))
    assert cp.point.a1 == F(-1, 2) and not cp.inside
    t = (sp.sqrt(5) - 1) / 4
    cp = singular_curve_point(t)
    assert sp.simplify(cp.point.a1 - sp.Rational(1, 2)) == 0
    with pytest.raises(DomainError):
        singular_curve_point(1 / sp.sqrt(8))
    with pytest.raises(DomainError):
        singular_curve_point(math.sqrt(1 / 8))


rationals = st.fractions(min_value=0, max_value=F(1, 2), max_denominator=500)


@settings(max_examples=200, deadline=None)
@given(rationals, rationals, rationals)
def test_permutation_symmetry(a, b, c):
    v = eval_Q((a, b, c))
    for perm in permutations((a, b, c)):
        assert eval_Q(perm) == v


@pytest.mark.parametrize("p,label", [
    ((F(1, 6), F(1, 4), F(1, 3)), "O3"),
    ((F(5, 18),) * 3, "O2"),
    ((F(1, 3), F(1, 3), F(1, 6)), "O3"),
    ((F(3, 8), F(1, 4), F(1, 8)), "O3"),
    ((F(1, 4),) * 3, "OnOmega"),
    ((F(0), F(1, 4), F(1, 4)), "OutsideOpenCube"),
    ((F(1, 2), F(1, 4), F(1, 4)), "OutsideOpenCube"),
    ((F(3, 5), F(1, 4), F(1, 4)), "OutsideOpenCube"),
])
def test_classify_examples(p, label):
    assert classify(p).label == label


def test_seeds_have_trivial_witness():
    for name, seed in omega.SEEDS.items():
        lab = classify(seed)
        assert lab.label == name
        assert all(w.ok and w.zeros == 0 for w in lab.witness)
        assert len(lab.witness) <= 1


@pytest.mark.parametrize("a", [F(1, 100), F(1, 8), F(1, 6), F(1, 5), F(6, 25), F(26, 100), F(3, 10), F(2, 5),
                               F(7, 15), F(49, 100)])
def test_diagonal_rule(a):
    want = "O1" if a < F(1, 4) else "O2"
    assert classify((a, a, a)).label == want


@pytest.mark.parametrize("p", [(F(1, 5), F(1, 7), F(1, 9)), (F(3, 10), F(1, 3), F(2, 7)), (F(1, 3), F(1, 6), F(1, 4)),
                               (F(2, 9), F(1, 6), F(5, 18))])
def test_classify_equivariant(p):
    labels = {classify(perm).label for perm in permutations(p)}
    assert len(labels) == 1


def test_sign_consistency():
    rng = np.random.default_rng(3)
    for _ in range(30):
        p = tuple(F(int(x), 64) for x in rng.integers(1, 32, 3))
        lab = classify(p)
        if lab.label == "O3":
            assert lab.Q_sign > 0
        elif lab.label in ("O1", "O2"):
            assert lab.Q_sign < 0


def test_float_mode_agrees_with_exact():
    for p in [(F(1, 5), F(1, 7), F(1, 9)), (F(3, 10), F(3, 10), F(3, 10)), (F(1, 3), F(1, 3), F(1, 6))]:
        assert classify(p, ClassifyOptions(mode="float")).label == classify(p).label
    assert classify((0.25, 0.25, 0.25)).label == "OnOmega"


def test_irrational_input_uses_float_mode():
    r = math.sqrt(2) / 10
    lab = classify((r, r, r))
    assert lab.label == "O1"
    assert "samples" in lab.witness[0].method


def test_exact_mode_requires_rationals():
    with pytest.raises(InputError):
        classify((0.1, 0.2, 0.3), ClassifyOptions(mode="exact"))
    with pytest.raises(InputError):
        ClassifyOptions(mode="fuzzy")


def test_witness_json_canonical():
    import json

    lab = classify((F(5, 18),) * 3)
    text = lab.to_json()
    assert json.dumps(json.loads(text), sort_keys=True) == text
    d = json.loads(text)
    assert d["point"] == ["5/18", "5/18", "5/18"]
    assert d["Q_sign"] == -1 and d["label"] == "O2"


def test_lines_4_and_5_components():
    """Lines 4 and 5 land in the opposite components to the published list.

    Line 4 at l = 2 is a permutation of (3/8, 1/4, 1/8), which sits on the
    plane s1 = 3/4 and is placed in O3 by the same discussion; line 5 at
    l = 4 is the O1 seed (1/6, 1/6, 1/6) itself.
    """
    for l in range(2, 10):
        assert classify(closed_form(record(4), (l,)).a).label == "O3"
    for l in range(4, 12):
        assert classify(closed_form(record(5), (l,)).a).label == "O1"
    assert sorted(closed_form(record(4), (2,)).a) == sorted((F(3, 8), F(1, 4), F(1, 8)))
    assert closed_form(record(5), (4,)).a == omega.SEEDS["O1"]


def test_profiles():
    assert singular_profile("O1").describe() == "1 unstable node + 3 saddles"
    assert singular_profile("O2").describe() == "1 stable node + 3 saddles"
    p3 = singular_profile(Component.O3)
    assert (p3.count, p3.saddles, p3.node) == (2, 2, None)
    with pytest.raises(InputError):
        singular_profile("Unresolved")


def test_slice_bottom_face_contains_triangle_edge():
    n = 64
    segs = surface_slice(0, n)
    h = 0.5 / n
    pts = np.vstack([segs[:, :2], segs[:, 2:]])
    near = np.abs(pts[:, 0] + pts[:, 1] - 0.5) <= math.sqrt(2) * h
    assert near.mean() > 0.9
    # every grid column is crossed
    cols = {int(x / h) for x in pts[near, 0]}
    assert len(cols) >= n


def test_slice_quarter_touches_centre():
    segs = surface_slice(F(1, 4), 256)
    d = np.min(np.hypot(segs[:, 0] - 0.25, segs[:, 1] - 0.25))
    assert d <= 2 * 0.5 / 256


def test_slice_top_face_endpoints():
    ends = omega.contour_endpoints(surface_slice(F(1, 2), 256))
    r = math.sqrt(2) / 4
    for tx, ty in ((0.5, r), (r, 0.5)):
        assert min(math.hypot(x - tx, y - ty) for x, y in ends) <= 2 / 256


def test_slice_csv_format():
    text = omega.slice_csv(surface_slice(F(1, 3), 16))
    lines = text.splitlines()
    assert lines[0] == "a1_start,a2_start,a1_end,a2_end"
    assert all(len(l.split(",")) == 4 for l in lines[1:])
    assert len(lines) > 1


def test_slice_validation():
    with pytest.raises(InputError):
        surface_slice(F(1, 3), 8)
    with pytest.raises(InputError):
        surface_slice(F(2, 3), 32)


def test_apoint():
    p = APoint(1, F(1, 3), F(1, 4))
    assert p.exact and isinstance(p.a1, F)
    assert not APoint(0.1, 0.2, 0.3).exact
    assert tuple(p.permuted((2, 0, 1))) == (F(1, 4), 1, F(1, 3))
    with pytest.raises(InputError):
        APoint("x", 1, 1)
