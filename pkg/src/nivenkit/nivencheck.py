"""Niven (Harshad) predicates and degree machinery.

A positive integer is b-Niven when the sum of its base-b digits divides
it.  It has degree m when both N and N**m are b-Niven; degree 1 is the
plain predicate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .digits import Base, as_base, digit_sum
from .errors import InvalidInput, ZeroInput

__all__ = ["DegreeProfile", "is_b_niven", "is_degree_m", "degree_profile"]


@dataclass(frozen=True)
class DegreeProfile:
    """Which exponents m <= m_max make N**m b-Niven (given N itself is)."""

    base: Base
    n_value: int
    is_niven: bool
    degrees: frozenset[int]
    m_max: int

    def sorted_degrees(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees))


def is_b_niven(n: int, b: Union[Base, int]) -> bool:
    """True iff the base-b digit sum of n divides n exactly (n >= 1)."""
    base = as_base(b)
    if n == 0:
        raise ZeroInput("niven check is undefined for 0 (digit sum 0)")
    if n < 0:
        raise InvalidInput(f"niven check needs a positive integer, got {n}")
    return n % digit_sum(n, base) == 0


def is_degree_m(n: int, b: Union[Base, int], m: int) -> bool:
    """True iff n and n**m are both b-Niven."""
    if m < 1:
        raise InvalidInput(f"degree must be >= 1, got {m}")
    base = as_base(b)
    if not is_b_niven(n, base):
        return False
    return m == 1 or is_b_niven(n**m, base)


def degree_profile(n: int, b: Union[Base, int], m_max: int) -> DegreeProfile:
    """All degrees m <= m_max attained by n.

    Powers are built incrementally (N**(m+1) = N**m * N); the result is
    identical to checking is_degree_m exponent by exponent.
    """
    if m_max < 1:
        raise InvalidInput(f"m_max must be >= 1, got {m_max}")
    base = as_base(b)
    niven = is_b_niven(n, base)
    degrees: set[int] = set()
    if niven:
        power = 1
        for m in range(1, m_max + 1):
            power *= n
            if power % digit_sum(power, base) == 0:
                degrees.add(m)
    return DegreeProfile(base, n, niven, frozenset(degrees), m_max)
