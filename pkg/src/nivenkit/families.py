"""Constructive families of high-degree Niven numbers.

For any base b, the number b**(2**k) - 1 writes in base b as the digit
b-1 repeated 2**k times, so its digit sum is (b-1)*2**k.  When b clears
the binomial threshold C(m, ceil(m/2)), the base-b digits of the m-th
power follow a rigid block pattern whose digit sum collapses to
ceil(m/2)*(b-1)*2**k.  This module assembles those digits directly
(never exponentiating), predicts the digit sums, and certifies the
hypotheses under which the powers are guaranteed Niven:

    b >= C(m, ceil(m/2)),  b == 3 (mod 4),  b == 1 (mod p)

where p is the odd part of ceil(m/2).  The congruence pair is exactly
membership in the family b = (4l+2)p + 1, l >= 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .budget import check_digit_budget
from .digits import Base, DigitString, as_base
from .errors import CapExceeded, InvalidInput, PreconditionViolated

__all__ = [
    "OddPartDecomposition",
    "FamilyInstance",
    "TheoremCertificate",
    "Theorem3Params",
    "BoundsReport",
    "THEOREM_EVEN",
    "THEOREM_ODD",
    "odd_part",
    "binomial",
    "degree_threshold",
    "lemma_bounds_report",
    "nk_value",
    "even_power_digits",
    "odd_power_digits",
    "power_digits",
    "predicted_digit_sum",
    "theorem_preconditions",
    "base_family",
    "theorem3_params",
    "smallest_base",
]

THEOREM_EVEN = "even"
THEOREM_ODD = "odd"


@dataclass(frozen=True)
class OddPartDecomposition:
    """n = 2**q * p with p odd; the unique odd-part split."""

    n: int
    q: int
    p: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.q < 0 or self.p < 1 or self.p % 2 == 0:
            raise InvalidInput(f"bad decomposition ({self.n}, {self.q}, {self.p})")
        if self.n != (1 << self.q) * self.p:
            raise InvalidInput(f"{self.n} != 2**{self.q} * {self.p}")


@dataclass(frozen=True)
class FamilyInstance:
    """One (b, k, m): base b, family index k, power m."""

    b: Base
    k: int
    m: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "b", as_base(self.b))
        if self.k < 1:
            raise InvalidInput(f"k must be >= 1, got {self.k}")
        if self.m < 1:
            raise InvalidInput(f"m must be >= 1, got {self.m}")


@dataclass(frozen=True)
class TheoremCertificate:
    """Machine-checkable record of the degree-m hypotheses for one instance.

    conclusion_checked may only become True once the degree property was
    confirmed, either because both precondition flags hold or because an
    oracle checked the instance directly; verified_via records the path.
    """

    instance: FamilyInstance
    theorem: str  # "even" | "odd"
    decomposition: OddPartDecomposition
    threshold: int
    threshold_ok: bool
    congruence_ok: bool
    predicted_digit_sum: int
    conclusion_checked: bool = False
    verified_via: Union[str, None] = None

    @property
    def preconditions_ok(self) -> bool:
        return self.threshold_ok and self.congruence_ok


@dataclass(frozen=True)
class Theorem3Params:
    """Combined hypotheses putting degrees 1..d on one base family."""

    d: int
    modulus_P: int  # lcm of the per-degree odd parts (minimal family)
    product_modulus: int  # plain product of the same parts (valid, coarser)
    min_base: int  # max per-degree binomial threshold
    odd_parts: tuple[int, ...]  # required odd part for degree i at index i-1
    thresholds: tuple[int, ...]  # C(i, ceil(i/2)) for degree i at index i-1


@dataclass(frozen=True)
class BoundsReport:
    """What exact integer arithmetic finds for the central-binomial bounds."""

    n: int
    central: int  # C(2n, n)
    lower_holds: bool  # 4**n / sqrt(n) <= C(2n, n)
    upper_holds: bool  # C(2n, n) <= 4**n / cbrt(n)


def odd_part(n: int) -> OddPartDecomposition:
    """Unique (q, p) with n = 2**q * p and p odd."""
    if n < 1:
        raise InvalidInput(f"odd part needs n >= 1, got {n}")
    q = (n & -n).bit_length() - 1
    return OddPartDecomposition(n=n, q=q, p=n >> q)


def binomial(n: int, r: int) -> int:
    """Exact binomial coefficient C(n, r) for 0 <= r <= n."""
    if not (isinstance(n, int) and isinstance(r, int)) or r < 0 or n < 0 or r > n:
        raise InvalidInput(f"binomial needs 0 <= r <= n, got n={n}, r={r}")
    return math.comb(n, r)


def degree_threshold(m: int) -> int:
    """C(m, ceil(m/2)): smallest base whose degree-m block digits fit."""
    if m < 1:
        raise InvalidInput(f"degree must be >= 1, got {m}")
    return math.comb(m, (m + 1) // 2)


def lemma_bounds_report(n: int) -> BoundsReport:
    """Audit the sandwich 4**n/sqrt(n) <= C(2n,n) <= 4**n/cbrt(n) exactly.

    Both comparisons are cleared of roots first:

        lower  <=>  16**n <= C**2 * n
        upper  <=>  C**3 * n <= 64**n

    The report states what integer arithmetic finds; nothing is assumed.
    """
    if n < 1:
        raise InvalidInput(f"n must be >= 1, got {n}")
    c = math.comb(2 * n, n)
    return BoundsReport(
        n=n,
        central=c,
        lower_holds=16**n <= c * c * n,
        upper_holds=c**3 * n <= 64**n,
    )


def _span(k: int) -> int:
    """2**k with guards; k indexes the doubly-exponential family."""
    if k < 1:
        raise InvalidInput(f"k must be >= 1, got {k}")
    if k > 64:
        # 2**64 digits can never fit a realistic budget
        raise CapExceeded(f"2**{k} digits exceeds any configurable budget")
    return 1 << k


def nk_value(b: Union[Base, int], k: int) -> int:
    """b**(2**k) - 1, whose base-b string is b-1 repeated 2**k times."""
    base = as_base(b)
    span = _span(k)
    check_digit_budget(span)
    return base.value**span - 1


def even_power_digits(b: Union[Base, int], k: int, n: int) -> DigitString:
    """Digits of (b**(2**k) - 1)**(2n), assembled from the block pattern.

    Pairing consecutive binomial terms of the expansion gives n disjoint
    blocks; block i (i = 1 low to n high) occupies positions
    (2i-1)*2**k .. 2i*2**k and reads, most significant first,

        C(2n, 2i) - 1,  then 2**k - 1 copies of b-1,  then b - C(2n, 2i-1),

    a lone 1 sits at position 0, and every other position is 0.  Needs
    b >= C(2n, n) so all block digits lie in [0, b).
    """
    base = as_base(b)
    if n < 1:
        raise InvalidInput(f"n must be >= 1, got {n}")
    span = _span(k)
    m = 2 * n
    bb = base.value
    threshold = math.comb(m, n)
    if bb < threshold:
        raise PreconditionViolated(
            f"base {bb} is below the digit-range threshold C({m}, {n}) = {threshold}"
        )
    check_digit_budget(m * span + 1)
    top = m * span  # position of the (always zero) leading digit
    digs = [0] * (top + 1)
    for i in range(1, n + 1):
        hi = 2 * i * span
        lo = hi - span
        digs[top - hi] = math.comb(m, 2 * i) - 1
        for pos in range(lo + 1, hi):
            digs[top - pos] = bb - 1
        digs[top - lo] = bb - math.comb(m, 2 * i - 1)
    digs[top] = 1
    return DigitString(base, tuple(digs))


def odd_power_digits(b: Union[Base, int], k: int, n: int) -> DigitString:
    """Digits of (b**(2**k) - 1)**n for odd n, assembled blockwise.

    Same pairing as the even case, except the lowest block bottoms out
    at position 0: its closing digit is b - C(n, 0) = b - 1 and there is
    no lone trailing 1.  Needs odd n and b >= C(n, (n+1)/2).
    """
    base = as_base(b)
    if n < 1:
        raise InvalidInput(f"n must be >= 1, got {n}")
    if n % 2 == 0:
        raise PreconditionViolated(f"exponent must be odd, got {n}")
    span = _span(k)
    bb = base.value
    half = (n + 1) // 2
    threshold = math.comb(n, half)
    if bb < threshold:
        raise PreconditionViolated(
            f"base {bb} is below the digit-range threshold C({n}, {half}) = {threshold}"
        )
    check_digit_budget(n * span + 1)
    top = n * span
    digs = [0] * (top + 1)
    for i in range(1, half + 1):
        j = n + 1 - 2 * i  # even exponent of the subtracted term
        hi = (j + 1) * span
        lo = j * span
        digs[top - hi] = math.comb(n, j + 1) - 1
        for pos in range(lo + 1, hi):
            digs[top - pos] = bb - 1
        digs[top - lo] = bb - math.comb(n, j)
    return DigitString(base, tuple(digs))


def power_digits(b: Union[Base, int], k: int, m: int) -> DigitString:
    """Closed-form digits of (b**(2**k) - 1)**m; dispatches on parity of m."""
    if m < 1:
        raise InvalidInput(f"m must be >= 1, got {m}")
    if m % 2 == 0:
        return even_power_digits(b, k, m // 2)
    return odd_power_digits(b, k, m)


def predicted_digit_sum(b: Union[Base, int], k: int, m: int) -> int:
    """ceil(m/2) * (b-1) * 2**k, the digit sum the block pattern forces.

    Valid only above the threshold b >= C(m, ceil(m/2)).
    """
    base = as_base(b)
    if m < 1:
        raise InvalidInput(f"m must be >= 1, got {m}")
    span = _span(k)
    half = (m + 1) // 2
    threshold = math.comb(m, half)
    if base.value < threshold:
        raise PreconditionViolated(
            f"base {base.value} is below the digit-range threshold "
            f"C({m}, {half}) = {threshold}"
        )
    return half * (base.value - 1) * span


def _degree_certificate(base: Base, m: int, k: int) -> TheoremCertificate:
    span = _span(k)
    half = (m + 1) // 2  # n for even m = 2n, (n+1)/2 for odd m = n
    decomp = odd_part(half)
    threshold = math.comb(m, half)
    bb = base.value
    return TheoremCertificate(
        instance=FamilyInstance(base, k, m),
        theorem=THEOREM_EVEN if m % 2 == 0 else THEOREM_ODD,
        decomposition=decomp,
        threshold=threshold,
        threshold_ok=bb >= threshold,
        congruence_ok=bb % 4 == 3 and (bb - 1) % decomp.p == 0,
        predicted_digit_sum=half * (bb - 1) * span,
    )


def theorem_preconditions(b: Union[Base, int], m: int, k: int = 1) -> TheoremCertificate:
    """Certificate of the degree-m hypotheses for base b; no verdict yet.

    For even m = 2n the odd part of n is decomposed, for odd m that of
    (m+1)/2; the threshold is C(m, ceil(m/2)) in both cases.  Failures
    are recorded in the flags, never raised.  conclusion_checked stays
    False until an oracle confirms the degree property.
    """
    if m < 2:
        raise InvalidInput(f"degree certificates need m >= 2, got {m}")
    return _degree_certificate(as_base(b), m, k)


def base_family(p: int, ell: int) -> int:
    """(4*ell + 2)*p + 1; every member is 3 mod 4 and 1 mod p."""
    if not isinstance(p, int) or p < 1 or p % 2 == 0:
        raise InvalidInput(f"p must be a positive odd integer, got {p!r}")
    if ell < 0:
        raise InvalidInput(f"ell must be >= 0, got {ell}")
    return (4 * ell + 2) * p + 1


def theorem3_params(d: int) -> Theorem3Params:
    """Hypotheses under which one base family carries degrees 1..d at once.

    Degree i needs threshold C(i, ceil(i/2)) and the odd part of
    ceil(i/2) dividing b - 1.  The lcm of those odd parts is the minimal
    combined modulus; their plain product is also recorded since it
    generates a valid (sparser) family.
    """
    if d < 1:
        raise InvalidInput(f"d must be >= 1, got {d}")
    parts = []
    thresholds = []
    for i in range(1, d + 1):
        half = (i + 1) // 2
        parts.append(odd_part(half).p)
        thresholds.append(math.comb(i, half))
    return Theorem3Params(
        d=d,
        modulus_P=math.lcm(*parts),
        product_modulus=math.prod(parts),
        min_base=max(thresholds),
        odd_parts=tuple(parts),
        thresholds=tuple(thresholds),
    )


def smallest_base(d: int) -> int:
    """Least member of the combined degree-1..d family at or above its threshold."""
    params = theorem3_params(d)
    ell = 0
    while True:
        b = base_family(params.modulus_P, ell)
        if b >= params.min_base:
            return b
        ell += 1
