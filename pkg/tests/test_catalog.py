import json
from fractions import Fraction as F

import pytest

from wallach import catalog
from wallach.catalog import (
    TABLE1,
    TABLE2,
    a_from_gamma,
    a_via_gamma,
    closed_form,
    enumerate_catalog,
    filter_table2,
    gamma_from_dynkin,
    killing_entry,
    record,
    triple,
)
from wallach.errors import InputError
from wallach.fixtures import TABLE1_FIXTURE, TABLE3_FIXTURE


def test_so5_closed_form():
    cf = closed_form(record(1), (2, 2, 1))
    assert sorted(cf.a) == [F(1, 6), F(1, 3), F(1, 3)]
    assert sorted(cf.d) == [2, 2, 4]


def test_line13_and_line4():
    assert closed_form(record(13)).a == (F(4, 15),) * 3
    assert closed_form(record(13)).d == (64, 64, 64)
    assert closed_form(record(4), (2,)).a == (F(3, 8), F(1, 8), F(1, 4))


@pytest.mark.parametrize("line,params", [(4, (1,)), (5, (3,)), (1, (0, 1, 1)), (2, (1, 1)), (6, (1,)), (1, (1.0, 1, 1))])
def test_constraint_violations(line, params):
    with pytest.raises(InputError):
        closed_form(record(line), params)


@pytest.mark.parametrize("sub,amb,want", [("so(9)", "f4", F(7, 9)), ("so(16)", "e8", F(7, 15)), ("su(8)", "e7", F(4, 9))])
def test_gamma_from_dynkin(sub, amb, want):
    assert gamma_from_dynkin(killing_entry(sub), killing_entry(amb), 1) == want


def test_dynkin_index_must_be_positive():
    with pytest.raises(InputError):
        gamma_from_dynkin(killing_entry("so(9)"), killing_entry("f4"), 0)


@pytest.mark.parametrize("gamma,d,A,a", [(F(7, 9), 8, F(8, 9), F(1, 9)), (F(7, 15), 64, F(256, 15), F(4, 15)),
                                         (F(4, 9), 35, F(175, 18), F(5, 18))])
def test_a_from_gamma(gamma, d, A, a):
    assert a_from_gamma(gamma, d) == (A, a)


@pytest.mark.parametrize("gamma", [0, 1, F(3, 2), -F(1, 5)])
def test_a_from_gamma_domain(gamma):
    with pytest.raises(InputError):
        a_from_gamma(gamma, 4)


def test_killing_table_verbatim():
    for name, (dim, b) in TABLE3_FIXTURE.items():
        e = killing_entry(name)
        assert (e.dim, e.b_max) == (dim, b)
    assert killing_entry("so(n)".replace("n", "10")).b_max == 32
    with pytest.raises(InputError):
        killing_entry("h4")


def test_catalog_matches_fixture():
    entries = enumerate_catalog()
    assert [e.record.line for e in entries] == list(range(1, 16))
    for e in entries:
        params, d, a = TABLE1_FIXTURE[e.record.line]
        assert e.params == params
        assert e.form.d == d
        assert e.form.a == tuple(F(x) for x in a)


@pytest.mark.parametrize("line,a,d", [(7, (F(1, 6),) * 3, (16, 16, 16)), (9, (F(2, 9),) * 3, (32, 32, 32)),
                                      (14, (F(5, 18), F(5, 18), F(1, 9)), (8, 8, 20))])
def test_enumerate_examples(line, a, d):
    e = enumerate_catalog()[line - 1]
    assert (e.form.a, e.form.d) == (a, d)


def test_common_A_and_range():
    for rec in TABLE1:
        for params in ([rec.smallest] if not rec.param_names else _params(rec)):
            cf = closed_form(rec, params)
            assert len({x * y for x, y in zip(cf.a, cf.d)}) == 1
            assert all(0 < x <= F(1, 2) for x in cf.a)


def _params(rec):
    if len(rec.param_names) == 3:
        return [(k, l, m) for k in range(1, 5) for l in range(1, 5) for m in range(1, 5)]
    lo = rec.smallest[0]
    return [(l,) for l in range(lo, lo + 8)]


@pytest.mark.parametrize("line", [7, 9, 11, 13, 15])
def test_einstein_lines_have_equal_a(line):
    a = closed_form(record(line)).a
    assert a[0] == a[1] == a[2]


@pytest.mark.parametrize("line", range(1, 16))
def test_killing_ratios_reproduce_table(line):
    rec = record(line)
    for params in ([rec.smallest] if not rec.param_names else _params(rec)):
        assert a_via_gamma(rec, params) == closed_form(rec, params).a


def test_line4_third_module_is_stored_directly():
    routes = catalog.gamma_routes(record(4), (3,))
    assert routes[2] == ("direct", F(1, 4))


def test_filter_examples():
    r = filter_table2(triple(6), (2, 3, 1, 0))
    assert r.accepted and r.table1_line == 1 and r.table1_params == (2, 3, 1)
    assert not filter_table2(triple(1), (2, 3)).accepted
    assert "not irreducible" in filter_table2(triple(1), (2, 3)).reason
    r = filter_table2(triple(8), (1, 4))
    assert r.table1_line == 5 and r.table1_params == (5,)
    assert not filter_table2(triple(8), (2, 2)).accepted


def test_filter_accept_set():
    acc = [t.line for t in TABLE2 if not t.param_names and filter_table2(t).accepted]
    assert acc == [15, 17, 18, 23, 25, 29, 31, 33, 35, 36]
    assert [filter_table2(triple(n)).table1_line for n in acc] == list(range(6, 16))


def test_filter_line21_rejected():
    assert not filter_table2(triple(21)).accepted


def test_filter_bad_params():
    with pytest.raises(InputError):
        filter_table2(triple(6), (1, 2))
    with pytest.raises(InputError):
        filter_table2(triple(2), (-1,))


def test_json_export():
    rows = json.loads(catalog.catalog_json())
    assert len(rows) == 15
    r = rows[7]
    assert r["line"] == 8 and r["g"] == "e6"
    assert [F(n, d) for n, d in zip(r["a_num"], r["a_den"])] == [F(1, 4), F(1, 8), F(7, 24)]
    assert r["d"] == [14, 28, 12]


def test_text_table_aligned():
    lines = catalog.catalog_text().splitlines()
    assert len(lines) == 17
    assert lines[0].startswith("N ")
    assert "e8" in catalog.catalog_text()


def test_names_substitute_parameters():
    assert record(1).g_name((2, 2, 1)) == "so(5)"
    assert record(4).g_name((3,)) == "su(6)"
    assert record(5).h_name((4,)) == "u(1)+u(3)"
