"""Exact radix arithmetic on arbitrary-precision integers.

Nonnegative integers convert to and from big-endian digit strings in any
base b >= 2.  Digits are plain Python ints, so bases far beyond the
printable alphabet (6511, 10**6, ...) behave exactly like base 10.
Everything is exact; there is no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import DigitOutOfRange, InvalidInput

__all__ = [
    "Base",
    "DigitString",
    "as_base",
    "to_base",
    "from_digits",
    "digit_sum",
    "repeat_block",
    "concat",
]

# Above this size conversions switch to divide-and-conquer splitting,
# which must stay bit-identical to the plain divmod loop.
_NAIVE_CUTOFF_BITS = 4096


@dataclass(frozen=True)
class Base:
    """A numeration base b >= 2."""

    value: int

    def __post_init__(self) -> None:
        if not isinstance(self.value, int):
            raise InvalidInput(f"base must be an integer, got {self.value!r}")
        if self.value < 2:
            raise InvalidInput(f"base must be >= 2, got {self.value}")

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def as_base(b: Union[Base, int]) -> Base:
    """Coerce an int to Base (validating b >= 2); Base passes through."""
    return b if isinstance(b, Base) else Base(b)


@dataclass(frozen=True)
class DigitString:
    """Canonical big-endian digit string together with its base.

    Construction normalizes: leading zeros are stripped (the zero
    integer is the single digit [0]) and every digit must lie in
    [0, base).  Instances are immutable and compare positionally.
    """

    base: Base
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        base = as_base(self.base)
        digs = tuple(self.digits)
        b = base.value
        for d in digs:
            if not isinstance(d, int) or d < 0 or d >= b:
                raise DigitOutOfRange(f"digit {d!r} not in [0, {b})")
        i = 0
        while i < len(digs) - 1 and digs[i] == 0:
            i += 1
        digs = digs[i:] if digs else (0,)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "digits", digs)

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def __getitem__(self, idx):
        return self.digits[idx]

    @property
    def value(self) -> int:
        v = 0
        b = self.base.value
        for d in self.digits:
            v = v * b + d
        return v

    def digit_sum(self) -> int:
        return sum(self.digits)

    def parenthesized(self) -> str:
        """Render as (d1)(d2)...(dn), most significant digit first."""
        return "".join(f"({d})" for d in self.digits)

    def __str__(self) -> str:
        return self.parenthesized()


def to_base(n: int, b: Union[Base, int]) -> DigitString:
    """Canonical base-b digit string of n >= 0.

    Length is floor(log_b n) + 1 for n >= 1, and [0] for n = 0.
    """
    base = as_base(b)
    if not isinstance(n, int):
        raise InvalidInput(f"expected an integer, got {n!r}")
    if n < 0:
        raise InvalidInput(f"cannot convert negative integer {n}")
    if n.bit_length() <= _NAIVE_CUTOFF_BITS:
        return DigitString(base, _digits_naive(n, base.value))
    return DigitString(base, _digits_split(n, base.value))


def _digits_naive(n: int, b: int) -> tuple[int, ...]:
    if n == 0:
        return (0,)
    out = []
    while n:
        n, r = divmod(n, b)
        out.append(r)
    out.reverse()
    return tuple(out)


def _digits_split(n: int, b: int) -> tuple[int, ...]:
    # powers[i] = b**(2**i), grown until powers[-1]**2 > n
    powers = [b]
    while powers[-1] * powers[-1] <= n:
        powers.append(powers[-1] * powers[-1])
    out: list[int] = []

    def emit(x: int, i: int) -> None:
        # emits exactly 2**(i+1) digits of x < b**(2**(i+1)), zero-padded
        if i < 0:
            out.append(x)
            return
        if x.bit_length() <= _NAIVE_CUTOFF_BITS:
            chunk = _digits_naive(x, b) if x else ()
            out.extend([0] * (2 ** (i + 1) - len(chunk)))
            out.extend(chunk)
            return
        hi, lo = divmod(x, powers[i])
        emit(hi, i - 1)
        emit(lo, i - 1)

    emit(n, len(powers) - 1)
    i = 0
    while i < len(out) - 1 and out[i] == 0:
        i += 1
    return tuple(out[i:])


def from_digits(s: Union[DigitString, Sequence[int]], base: Union[Base, int, None] = None) -> int:
    """Value of a big-endian digit sequence; inverse of :func:`to_base`.

    Accepts a DigitString, or any digit sequence plus an explicit base;
    leading zeros in raw sequences are fine and normalize away.
    """
    if isinstance(s, DigitString):
        return s.value
    if base is None:
        raise InvalidInput("a base is required for raw digit sequences")
    b = as_base(base).value
    v = 0
    for d in s:
        if not isinstance(d, int) or d < 0 or d >= b:
            raise DigitOutOfRange(f"digit {d!r} not in [0, {b})")
        v = v * b + d
    return v


def digit_sum(n: int, b: Union[Base, int]) -> int:
    """Sum of the base-b digits of n >= 0; always congruent to n mod (b-1)."""
    base = as_base(b)
    if not isinstance(n, int):
        raise InvalidInput(f"expected an integer, got {n!r}")
    if n < 0:
        raise InvalidInput(f"digit sum is undefined for negative {n}")
    bb = base.value
    if n.bit_length() > _NAIVE_CUTOFF_BITS:
        return sum(_digits_split(n, bb))
    total = 0
    while n:
        n, r = divmod(n, bb)
        total += r
    return total


def repeat_block(d: int, count: int) -> tuple[int, ...]:
    """A run of `count` copies of the digit d; empty when count = 0."""
    if not isinstance(d, int) or d < 0:
        raise InvalidInput(f"digit must be a nonnegative integer, got {d!r}")
    if count < 0:
        raise InvalidInput(f"count must be >= 0, got {count}")
    return (d,) * count


def concat(parts: Iterable[Sequence[int]], b: Union[Base, int]) -> DigitString:
    """Join digit runs into one canonical DigitString (range-checked)."""
    flat: list[int] = []
    for part in parts:
        flat.extend(part)
    return DigitString(as_base(b), tuple(flat))
