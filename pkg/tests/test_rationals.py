import pytest
from fractions import Fraction

from galecross.errors import InvalidInputError
from galecross.rationals import (
    format_rational,
    format_vector,
    parse_rational,
    parse_vector,
)


def test_parse_integer_and_fraction():
    assert parse_rational("3") == 3
    assert parse_rational("-7") == -7
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("0/5") == 0


def test_parse_normalizes():
    assert parse_rational("2/4") == Fraction(1, 2)
    assert format_rational(parse_rational("2/4")) == "1/2"


@pytest.mark.parametrize(
    "bad",
    ["", "1.5", "a", "1/2/3", "1 /2", " 1", "1/", "/2", "1/-2", "--3", "+3", "1/0"],
)
def test_parse_rejects(bad):
    with pytest.raises(InvalidInputError):
        parse_rational(bad)


def test_format_canonical():
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(0)) == "0"


def test_vector_round_trip():
    coords = (Fraction(1, 3), Fraction(-2), Fraction(0))
    assert parse_vector(format_vector(coords)) == coords
    assert format_vector(parse_vector(["1/3", "-2", "0"])) == ["1/3", "-2", "0"]
