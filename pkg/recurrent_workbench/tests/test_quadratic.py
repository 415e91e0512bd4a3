"""Exact arithmetic in Q(sqrt2, sqrt3)."""
from fractions import Fraction

import pytest

from recurrent_workbench.exceptions import ScalarParseError
from recurrent_workbench.services.quadratic import (
    ONE,
    SQRT2,
    SQRT3,
    SQRT6,
    ZERO,
    QuadNumber,
    format_scalar,
    max_bit_size,
    parse_scalar,
)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("3", QuadNumber(3)),
        ("1/2", QuadNumber(Fraction(1, 2))),
        ("0.25", QuadNumber(Fraction(1, 4))),
        ("sqrt2", SQRT2),
        ("1/4*sqrt3", QuadNumber(0, 0, Fraction(1, 4))),
        ("sqrt6/2", QuadNumber(0, 0, 0, Fraction(1, 2))),
        ("1 - sqrt2 + 2*sqrt6", QuadNumber(1, -1, 0, 2)),
    ],
)
def test_parse_scalar(text: str, expected: QuadNumber) -> None:
    """Tests the scalar grammar."""
    assert parse_scalar(text) == expected


@pytest.mark.parametrize("text", ["", "1+", "sqrt5", "1/0", "abc", "sqrt2sqrt3"])
def test_parse_scalar_rejects_malformed_text(text: str) -> None:
    """Tests that malformed scalars raise."""
    with pytest.raises(ScalarParseError):
        parse_scalar(text)


def test_format_scalar_is_canonical() -> None:
    """Tests the canonical text of a few numbers."""
    assert format_scalar(ZERO) == "0"
    assert format_scalar(QuadNumber(Fraction(1, 2), Fraction(1, 4))) == "1/2 + 1/4*sqrt2"
    assert format_scalar(QuadNumber(0, -1, 0, 3)) == "-sqrt2 + 3*sqrt6"
    assert parse_scalar(format_scalar(QuadNumber(2, 0, Fraction(-2, 3)))) == QuadNumber(2, 0, Fraction(-2, 3))


def test_products_of_roots() -> None:
    """Tests multiplication of the basis roots."""
    assert SQRT2 * SQRT2 == 2
    assert SQRT2 * SQRT3 == SQRT6
    assert SQRT6 * SQRT6 == 6
    assert (SQRT2 + SQRT3) * (SQRT3 - SQRT2) == ONE


def test_inverse() -> None:
    """Tests the multiplicative inverse."""
    assert (ONE + SQRT2).inverse() == SQRT2 - 1
    value = QuadNumber(1, 2, 3, 4)
    assert value * value.inverse() == ONE
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


@pytest.mark.parametrize(
    "value, sign",
    [
        (1 + SQRT2 - SQRT3, 1),
        (SQRT6 - SQRT2 - SQRT3, -1),
        (5 - 2 * SQRT6, 1),
        (2 * SQRT6 - 5, -1),
        (SQRT3 - SQRT3, 0),
        (QuadNumber(Fraction(-7, 5)), -1),
    ],
)
def test_sign_is_exact(value: QuadNumber, sign: int) -> None:
    """Tests signs of numbers close to zero."""
    assert value.sign() == sign


def test_ordering_and_hashing() -> None:
    """Tests comparison with ints and hashing of rational values."""
    assert SQRT2 < QuadNumber(Fraction(3, 2))
    assert SQRT3 > SQRT2
    assert hash(QuadNumber(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert len({SQRT2, QuadNumber(0, 1), SQRT3}) == 2


def test_numbers_are_immutable() -> None:
    """Tests that coefficients cannot be reassigned."""
    with pytest.raises(AttributeError):
        SQRT2.a = Fraction(1)  # type: ignore[misc]


def test_bit_size() -> None:
    """Tests coefficient bit sizes."""
    assert QuadNumber(Fraction(255, 2)).bit_size() == 8
    assert max_bit_size([ONE, QuadNumber(0, Fraction(1, 1024))]) == 11
    assert max_bit_size([]) == 0
