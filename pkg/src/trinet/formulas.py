"""Closed forms and order-2 recurrences for convex pentagon and hexagon counts.

Every closed form is split by the parity of ``n`` (``n = 2k`` or
``n = 2k + 1``) and evaluated on Python integers as
multiply-then-divide, with the division checked to be exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .net import check_size

__all__ = [
    "InexactDivisionError",
    "Order2Recurrence",
    "f_closed",
    "g_closed",
    "hexagon_closed",
    "hexagon_recurrence",
    "hexagon_sequence",
    "pentagon_closed",
    "pentagon_recurrence",
    "pentagon_sequence",
    "recurrence_sequence",
    "solve_order2",
]


class InexactDivisionError(ArithmeticError):
    """A closed-form numerator was not divisible by its denominator."""


def exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise InexactDivisionError(f"{num} is not divisible by {den}")
    return q


def _split(n: int) -> tuple[int, bool]:
    check_size(n)
    return n // 2, bool(n & 1)


def pentagon_closed(n: int) -> int:
    """Number of convex pentagons in the n-net."""
    k, odd = _split(n)
    if odd:
        num = 12 * k**5 + 25 * k**4 + 5 * k**3 - 10 * k**2 - 2 * k
    else:
        num = 12 * k**5 - 5 * k**4 - 15 * k**3 + 5 * k**2 + 3 * k
    return exact_div(num, 10)


def hexagon_closed(n: int) -> int:
    """Number of convex hexagons in the n-net."""
    k, odd = _split(n)
    if odd:
        num = 8 * k**6 + 24 * k**5 + 25 * k**4 + 10 * k**3 - 3 * k**2 - 4 * k
    else:
        num = 8 * k**6 - 5 * k**4 - 3 * k**2
    return exact_div(num, 60)


def f_closed(n: int) -> int:
    """Pentagons with vertices on both ``OA_n`` and ``OB_n``."""
    k, odd = _split(n)
    if odd:
        num = 3 * (4 * k**3 - k**2 - k)
    else:
        num = 3 * (4 * k**3 - 7 * k**2 + 3 * k)
    return exact_div(num, 2)


def g_closed(n: int) -> int:
    """Hexagons with vertices on both ``OA_n`` and ``OB_n``."""
    k, odd = _split(n)
    if odd:
        return k**4
    return exact_div(k * (k - 1) * (2 * k * k - 2 * k + 1), 2)


@dataclass(frozen=True)
class Order2Recurrence:
    """``S(n) = 2 S(n-1) - S(n-2) + forcing(n)`` for ``n >= 3``."""

    s1: int
    s2: int
    forcing: Callable[[int], int]


def recurrence_sequence(rec: Order2Recurrence, n_max: int) -> list[int]:
    """``[S(1), ..., S(n_max)]`` by repeated first-difference accumulation."""
    check_size(n_max)
    seq = [rec.s1, rec.s2][:n_max]
    if n_max < 3:
        return seq
    prev, diff = rec.s2, rec.s2 - rec.s1
    for n in range(3, n_max + 1):
        diff += rec.forcing(n)
        prev += diff
        seq.append(prev)
    return seq


def solve_order2(rec: Order2Recurrence, n: int) -> int:
    check_size(n)
    if n == 1:
        return rec.s1
    prev, diff = rec.s2, rec.s2 - rec.s1
    for m in range(3, n + 1):
        diff += rec.forcing(m)
        prev += diff
    return prev


PENTAGON_RECURRENCE = Order2Recurrence(0, 0, f_closed)
HEXAGON_RECURRENCE = Order2Recurrence(0, 0, g_closed)


def pentagon_recurrence(n: int) -> int:
    return solve_order2(PENTAGON_RECURRENCE, n)


def hexagon_recurrence(n: int) -> int:
    return solve_order2(HEXAGON_RECURRENCE, n)


def pentagon_sequence(n_max: int, method: str = "closed") -> list[int]:
    if method == "recurrence":
        return recurrence_sequence(PENTAGON_RECURRENCE, n_max)
    return [pentagon_closed(n) for n in range(1, check_size(n_max) + 1)]


def hexagon_sequence(n_max: int, method: str = "closed") -> list[int]:
    if method == "recurrence":
        return recurrence_sequence(HEXAGON_RECURRENCE, n_max)
    return [hexagon_closed(n) for n in range(1, check_size(n_max) + 1)]
