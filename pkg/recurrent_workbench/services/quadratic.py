"""
Exact arithmetic in the biquadratic field Q(sqrt2, sqrt3).

Every coordinate, length and direction of the shape catalog lives here.
Numbers are stored as four rational coefficients of 1, sqrt2, sqrt3 and
sqrt6; no floating point value is ever used to take a decision.
"""
import functools
import re
from fractions import Fraction
from typing import Iterable, Union

from recurrent_workbench.exceptions import ScalarParseError

Rational = Union[int, Fraction]

_ROOT_NAMES = ("", "sqrt2", "sqrt3", "sqrt6")
_TERM = re.compile(r"[+-]?[^+-]+")
_ROOT_TAIL = re.compile(r"([236])(?:/(\d+))?")


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def _sign_sqrt2(rational: Fraction, irrational: Fraction) -> int:
    """
    Sign of ``rational + irrational*sqrt2``.

    :param rational: rational part.
    :param irrational: coefficient of sqrt2.
    :return: -1, 0 or 1.
    """
    left = _sign(rational)
    right = _sign(irrational)
    if right == 0 or left == right:
        return left or right
    if left == 0:
        return right
    if rational * rational > 2 * irrational * irrational:
        return left
    return right


@functools.total_ordering
class QuadNumber:
    """Number a + b*sqrt2 + c*sqrt3 + d*sqrt6 with rational a, b, c, d."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(
        self,
        a: Rational = 0,
        b: Rational = 0,
        c: Rational = 0,
        d: Rational = 0,
    ) -> None:
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "c", Fraction(c))
        object.__setattr__(self, "d", Fraction(d))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QuadNumber is immutable")

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """
        Coefficients of 1, sqrt2, sqrt3, sqrt6.

        :return: tuple of four fractions.
        """
        return (self.a, self.b, self.c, self.d)

    @property
    def is_rational(self) -> bool:
        return self.b == 0 and self.c == 0 and self.d == 0

    def sign(self) -> int:
        """
        Exact sign.

        The number is split as p + q*sqrt3 with p, q in Q(sqrt2); when p
        and q disagree in sign, comparing p*p with 3*q*q decides, and that
        difference is again an element of Q(sqrt2).

        :return: -1, 0 or 1.
        """
        left = _sign_sqrt2(self.a, self.b)
        right = _sign_sqrt2(self.c, self.d)
        if right == 0 or left == right:
            return left or right
        if left == 0:
            return right
        norm = self * self.conjugate3()
        if _sign_sqrt2(norm.a, norm.b) > 0:
            return left
        return right

    def conjugate2(self) -> "QuadNumber":
        """Image under sqrt2 -> -sqrt2."""
        return QuadNumber(self.a, -self.b, self.c, -self.d)

    def conjugate3(self) -> "QuadNumber":
        """Image under sqrt3 -> -sqrt3."""
        return QuadNumber(self.a, self.b, -self.c, -self.d)

    def inverse(self) -> "QuadNumber":
        """
        Multiplicative inverse.

        :raises ZeroDivisionError: for zero.
        :return: 1/self.
        """
        if not self:
            raise ZeroDivisionError("QuadNumber division by zero")
        first = self.conjugate3()
        norm = self * first
        second = norm.conjugate2()
        rational = (norm * second).a
        return (first * second) * QuadNumber(1 / rational)

    def bit_size(self) -> int:
        """
        Largest bit length among numerators and denominators.

        :return: bit size.
        """
        return max(
            max(abs(coef.numerator).bit_length(), coef.denominator.bit_length())
            for coef in self.coefficients
        )

    def __add__(self, other: object) -> "QuadNumber":
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return QuadNumber(
            self.a + rhs.a,
            self.b + rhs.b,
            self.c + rhs.c,
            self.d + rhs.d,
        )

    __radd__ = __add__

    def __neg__(self) -> "QuadNumber":
        return QuadNumber(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other: object) -> "QuadNumber":
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "QuadNumber":
        lhs = _coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> "QuadNumber":
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        a1, b1, c1, d1 = self.coefficients
        a2, b2, c2, d2 = rhs.coefficients
        return QuadNumber(
            a1 * a2 + 2 * b1 * b2 + 3 * c1 * c2 + 6 * d1 * d2,
            a1 * b2 + b1 * a2 + 3 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "QuadNumber":
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other: object) -> "QuadNumber":
        lhs = _coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs * self.inverse()

    def __bool__(self) -> bool:
        return any(self.coefficients)

    def __eq__(self, other: object) -> bool:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return self.coefficients == rhs.coefficients

    def __lt__(self, other: object) -> bool:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return (self - rhs).sign() < 0

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(self.a)
        return hash(self.coefficients)

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"QuadNumber({format_scalar(self)!r})"


def _coerce(value: object) -> "QuadNumber | None":
    if isinstance(value, QuadNumber):
        return value
    if isinstance(value, (int, Fraction)):
        return QuadNumber(value)
    return None


ZERO = QuadNumber(0)
ONE = QuadNumber(1)
SQRT2 = QuadNumber(0, 1)
SQRT3 = QuadNumber(0, 0, 1)
SQRT6 = QuadNumber(0, 0, 0, 1)


def parse_scalar(text: str) -> QuadNumber:
    """
    Parse the exact-scalar grammar.

    Accepted terms are rationals (``3``, ``1/2``, ``0.25``) and rational
    multiples of a root (``sqrt2``, ``1/4*sqrt3``, ``sqrt6/2``), joined by
    ``+`` and ``-``.

    :param text: scalar text.
    :raises ScalarParseError: when the text does not follow the grammar.
    :return: parsed number.
    """
    compact = text.replace(" ", "")
    terms = _TERM.findall(compact)
    if not compact or "".join(terms) != compact:
        raise ScalarParseError(f"malformed scalar {text!r}")
    total = [Fraction(0)] * 4
    for term in terms:
        sign = -1 if term.startswith("-") else 1
        body = term.lstrip("+-")
        try:
            slot, coefficient = _parse_term(body)
        except (ValueError, ZeroDivisionError) as exc:
            raise ScalarParseError(f"malformed scalar {text!r}") from exc
        total[slot] += sign * coefficient
    return QuadNumber(*total)


def _parse_term(body: str) -> tuple[int, Fraction]:
    if "sqrt" not in body:
        return 0, Fraction(body)
    head, _, tail = body.partition("sqrt")
    head = head.rstrip("*")
    coefficient = Fraction(head) if head else Fraction(1)
    match = _ROOT_TAIL.fullmatch(tail)
    if match is None:
        raise ValueError(body)
    if match.group(2):
        coefficient /= int(match.group(2))
    return _ROOT_NAMES.index(f"sqrt{match.group(1)}"), coefficient


def format_scalar(value: QuadNumber) -> str:
    """
    Canonical text of a number, inverse to :func:`parse_scalar`.

    :param value: number to format.
    :return: text such as ``1/2 + 1/4*sqrt2``.
    """
    pieces: list[str] = []
    for coefficient, root in zip(value.coefficients, _ROOT_NAMES):
        if coefficient == 0:
            continue
        if not root:
            pieces.append(str(coefficient))
        elif coefficient == 1:
            pieces.append(root)
        elif coefficient == -1:
            pieces.append(f"-{root}")
        else:
            pieces.append(f"{coefficient}*{root}")
    if not pieces:
        return "0"
    text = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-"):
            text += f" - {piece[1:]}"
        else:
            text += f" + {piece}"
    return text


def max_bit_size(values: Iterable[QuadNumber]) -> int:
    """
    Largest coefficient bit size among ``values``.

    :param values: numbers.
    :return: bit size, 0 for no numbers.
    """
    return max((value.bit_size() for value in values), default=0)
