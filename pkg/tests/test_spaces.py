import pytest

from wallach.catalog import closed_form, record
from wallach.decomp import validate_grading
from wallach.errors import InputError, SizeLimitError
from wallach.spaces import (
    make_flag_family,
    make_ledger_obata,
    make_so_u,
    make_su_u,
    make_symmetric_product,
)


@pytest.mark.parametrize("fam,line,klm", [
    ("SO", 1, (2, 2, 1)), ("SO", 1, (3, 2, 2)), ("SU", 2, (2, 1, 1)), ("SU", 2, (1, 2, 3)), ("SP", 3, (1, 1, 2)),
])
def test_flag_dims_follow_table(fam, line, klm):
    dec = make_flag_family(fam, *klm)
    assert dec.dims == closed_form(record(line), klm).d
    assert validate_grading(dec).passed


@pytest.mark.parametrize("l", [2, 3, 4])
def test_su_u_dims(l):
    dec = make_su_u(l)
    assert dec.dims == (l * (l - 1), l * (l + 1), l * l - 1)
    assert validate_grading(dec).passed


@pytest.mark.parametrize("l", [4, 5, 6])
def test_so_u_dims(l):
    dec = make_so_u(l)
    assert dec.dims == (2 * (l - 1), 2 * (l - 1), (l - 1) * (l - 2))
    assert validate_grading(dec).passed


def test_ledger_obata_dims():
    dec = make_ledger_obata("SU", 3)
    assert dec.dims == (8, 8, 8)
    assert dec.h_dim == 8


def test_symmetric_product_grading():
    dec = make_symmetric_product(4)
    assert dec.dims == (3, 3, 3)
    assert validate_grading(dec).passed


def test_size_limit():
    with pytest.raises(SizeLimitError):
        make_flag_family("SO", 5, 5, 5)
    with pytest.raises(SizeLimitError):
        make_flag_family("SP", 3, 2, 2)


@pytest.mark.parametrize("call", [
    lambda: make_flag_family("SO", 0, 1, 1),
    lambda: make_flag_family("XX", 1, 1, 1),
    lambda: make_su_u(1),
    lambda: make_so_u(3),
    lambda: make_ledger_obata("SO", 4),
    lambda: make_symmetric_product(2),
])
def test_bad_parameters(call):
    with pytest.raises(InputError):
        call()
