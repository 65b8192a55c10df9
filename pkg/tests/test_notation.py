from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homlie.errors import ParseError
from homlie.notation import combination_vector, format_combination, parse_combination
from helpers import small_fraction

LABELS = ["e1", "e2", "e3"]


def test_parse_basic():
    assert parse_combination("2*e1 - 1/2*e3", LABELS) == {"e1": Fraction(2), "e3": Fraction(-1, 2)}
    assert parse_combination("-e2 + e2", LABELS) == {}
    assert parse_combination("0", LABELS) == {}
    assert parse_combination("e1 − e2", LABELS) == {"e1": 1, "e2": -1}


@pytest.mark.parametrize("text,column", [("e1 + e9", 6), ("2*", 3), ("e1 e2", 4), ("3", 1), ("e1 + $", 6)])
def test_parse_errors_carry_columns(text, column):
    with pytest.raises(ParseError) as info:
        parse_combination(text, LABELS)
    assert info.value.column == column


def test_format_zero_and_signs():
    assert format_combination((0, 0, 0), LABELS) == "0"
    assert format_combination((Fraction(-1), 0, Fraction(3, 2)), LABELS) == "-e1 + 3/2*e3"


@given(st.lists(small_fraction, min_size=3, max_size=3))
def test_format_parse_roundtrip(v):
    text = format_combination(v, LABELS)
    assert combination_vector(parse_combination(text, LABELS), LABELS) == tuple(v)
