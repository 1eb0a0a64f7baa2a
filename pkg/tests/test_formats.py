from fractions import Fraction

import pytest
from hypothesis import given

from wcore.formats import FormatError, dumps_json, dumps_text, loads, loads_json, loads_text
from wcore.linalg import Matrix

from .conftest import M, matrices, rationals


def test_text_layout_is_bit_exact():
    a = M([Fraction(1, 2), -3], [0, Fraction(-2, 6)])
    assert dumps_text(a) == "2 2\n1/2 -3\n0 -1/3\n"


def test_json_layout():
    assert dumps_json(M([1, Fraction(-1, 2)])) == '{"rows": 1, "cols": 2, "entries": [["1", "-1/2"]]}'


def test_sniffing():
    assert loads("1 1\n4\n") == loads('{"rows":1,"cols":1,"entries":[["4"]]}') == M([4])


def test_json_accepts_integer_entries():
    assert loads_json('{"rows":1,"cols":2,"entries":[[1,-2]]}') == M([1, -2])


@pytest.mark.parametrize(
    "text",
    [
        "",
        "2\n1 2\n",
        "2 2\n1 2\n",
        "1 2\n1\n",
        "1 1\n0.5\n",
        "1 1\n1/0\n",
        "1 1\nx\n",
        "1 1\n1e3\n",
    ],
)
def test_text_rejects(text):
    with pytest.raises(FormatError):
        loads_text(text)


@pytest.mark.parametrize(
    "text",
    [
        "{",
        '{"rows":1}',
        '{"rows":1,"cols":1,"entries":[["1","2"]]}',
        '{"rows":2,"cols":1,"entries":[["1"]]}',
        '{"rows":1,"cols":1,"entries":[[true]]}',
        '{"rows":1,"cols":1,"entries":[[0.25]]}',
    ],
)
def test_json_rejects(text):
    with pytest.raises(FormatError):
        loads_json(text)


@given(matrices(elements=rationals))
def test_text_round_trip(a: Matrix):
    assert loads_text(dumps_text(a)) == a


@given(matrices(elements=rationals))
def test_json_round_trip(a: Matrix):
    assert loads_json(dumps_json(a)) == a
    assert dumps_json(loads(dumps_json(a))) == dumps_json(a)
