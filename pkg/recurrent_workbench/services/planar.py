"""Plane vectors with exact coordinates."""
from fractions import Fraction
from typing import Tuple, Union

from recurrent_workbench.services.quadratic import (
    ONE,
    SQRT2,
    SQRT6,
    ZERO,
    QuadNumber,
)

Vec = Tuple[QuadNumber, QuadNumber]
Scalar = Union[int, Fraction, QuadNumber]

# cos(k * 15 degrees) for k = 0..6
_COS_TABLE = (
    ONE,
    (SQRT6 + SQRT2) / 4,
    QuadNumber(0, 0, 1) / 2,
    SQRT2 / 2,
    QuadNumber(1, 0) / 2,
    (SQRT6 - SQRT2) / 4,
    ZERO,
)


def vec(x: Scalar, y: Scalar) -> Vec:
    """
    Build a vector from numbers or ints.

    :param x: first coordinate.
    :param y: second coordinate.
    :return: vector.
    """
    return (ZERO + x, ZERO + y)


def add(u: Vec, v: Vec) -> Vec:
    return (u[0] + v[0], u[1] + v[1])


def sub(u: Vec, v: Vec) -> Vec:
    return (u[0] - v[0], u[1] - v[1])


def scale(factor: QuadNumber, v: Vec) -> Vec:
    return (factor * v[0], factor * v[1])


def neg(v: Vec) -> Vec:
    return (-v[0], -v[1])


def dot(u: Vec, v: Vec) -> QuadNumber:
    return u[0] * v[0] + u[1] * v[1]


def cross(u: Vec, v: Vec) -> QuadNumber:
    return u[0] * v[1] - u[1] * v[0]


def rot90(v: Vec) -> Vec:
    """Counterclockwise quarter turn."""
    return (-v[1], v[0])


def _cos(step: int) -> QuadNumber:
    step %= 24
    if step <= 6:
        return _COS_TABLE[step]
    if step <= 12:
        return -_COS_TABLE[12 - step]
    if step <= 18:
        return -_COS_TABLE[step - 12]
    return _COS_TABLE[24 - step]


def unit_direction(step: int) -> Vec:
    """
    Exact unit vector at angle ``step * 15`` degrees.

    :param step: multiple of 15 degrees, any integer.
    :return: unit vector.
    """
    return (_cos(step), _cos(step - 6))


def rotate(v: Vec, step: int) -> Vec:
    """
    Rotate counterclockwise by ``step * 15`` degrees.

    :param v: vector.
    :param step: multiple of 15 degrees.
    :return: rotated vector.
    """
    cos, sin = unit_direction(step)
    return (cos * v[0] - sin * v[1], sin * v[0] + cos * v[1])


def format_vec(v: Vec) -> str:
    return f"({v[0]}, {v[1]})"
