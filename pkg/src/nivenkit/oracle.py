"""Independent brute-force verification of the closed-form machinery.

Nothing here touches the blockwise digit assembly: powers are computed
by plain integer exponentiation, digits are extracted by repeated
division, divisibility is tested modularly.  Agreement with the
families module is therefore meaningful evidence, and disagreement
fails loudly.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace
from typing import Union

from .budget import check_digit_budget
from .digits import Base, DigitString, as_base
from .errors import InvalidInput, PreconditionViolated
from .families import (
    FamilyInstance,
    TheoremCertificate,
    _degree_certificate,
    _span,
    nk_value,
    odd_part,
    power_digits,
)
from .nivencheck import DegreeProfile, degree_profile, is_b_niven

__all__ = [
    "ChainReport",
    "DivisibilityFlags",
    "VerificationReport",
    "brute_force_power_digits",
    "euler_check",
    "divisibility_chain",
    "verify_instance",
    "enumerate_niven",
    "probe_max_degree",
    "probe_even_bases",
]


def brute_force_power_digits(b: Union[Base, int], k: int, m: int) -> DigitString:
    """Digits of (b**(2**k) - 1)**m by direct powering and division.

    Deliberately ignorant of the block pattern; this is the oracle the
    closed forms are measured against.
    """
    base = as_base(b)
    span = _span(k)
    if m < 1:
        raise InvalidInput(f"m must be >= 1, got {m}")
    check_digit_budget(m * span + 1)
    value = (base.value**span - 1) ** m
    bb = base.value
    digs = []
    while value:
        value, r = divmod(value, bb)
        digs.append(r)
    digs.reverse()
    return DigitString(base, tuple(digs))


def euler_check(b: Union[Base, int], k: int) -> bool:
    """b**(2**k) == 1 (mod 2**(k+1)); holds for every odd base."""
    base = as_base(b)
    if base.value % 2 == 0:
        raise InvalidInput(f"euler check needs an odd base, got {base.value}")
    if k < 1:
        raise InvalidInput(f"k must be >= 1, got {k}")
    return pow(base.value, 2**k, 2 ** (k + 1)) == 1


@dataclass(frozen=True)
class ChainReport:
    """Outcome of the exact-division ladder for one (b, k, m)."""

    base_multiple: int  # (b-1) * 2**k, the digit sum of the base number
    factor: int  # ceil(m/2), the extra divisor the power needs
    predicted_sum: int  # factor * base_multiple
    bm1_ok: bool  # base_multiple divides b**(2**k) - 1
    factor_ok: bool  # factor divides (b**(2**k) - 1)**(m-1)
    chain_ok: bool  # predicted_sum divides (b**(2**k) - 1)**m

    @property
    def all_ok(self) -> bool:
        return self.bm1_ok and self.factor_ok and self.chain_ok


def _nk_mod(bb: int, k: int, modulus: int) -> int:
    return (pow(bb, 2**k, modulus) - 1) % modulus


def _chain_facts(bb: int, k: int, m: int) -> ChainReport:
    half = (m + 1) // 2
    base_multiple = (bb - 1) * 2**k
    predicted = half * base_multiple
    return ChainReport(
        base_multiple=base_multiple,
        factor=half,
        predicted_sum=predicted,
        bm1_ok=_nk_mod(bb, k, base_multiple) == 0,
        factor_ok=pow(_nk_mod(bb, k, half), m - 1, half) == 0,
        chain_ok=pow(_nk_mod(bb, k, predicted), m, predicted) == 0,
    )


def divisibility_chain(b: Union[Base, int], k: int, m: int) -> ChainReport:
    """The exact-division ladder behind the degree-m conclusion.

    Checks (b-1)*2**k into the base number, ceil(m/2) into its
    (m-1)-th power, and their product into the m-th power.  Requires
    b == 3 (mod 4) with the relevant odd part dividing b - 1; the
    divisions themselves are tested modularly, hence exactly.
    """
    base = as_base(b)
    if k < 1:
        raise InvalidInput(f"k must be >= 1, got {k}")
    if m < 1:
        raise InvalidInput(f"m must be >= 1, got {m}")
    bb = base.value
    p = odd_part((m + 1) // 2).p
    if bb % 4 != 3:
        raise PreconditionViolated(f"base {bb} is not congruent to 3 mod 4")
    if (bb - 1) % p != 0:
        raise PreconditionViolated(
            f"odd part {p} of ceil({m}/2) does not divide b - 1 = {bb - 1}"
        )
    return _chain_facts(bb, k, m)


@dataclass(frozen=True)
class DivisibilityFlags:
    euler_ok: bool
    bm1_ok: bool
    chain_ok: bool

    @property
    def all_ok(self) -> bool:
        return self.euler_ok and self.bm1_ok and self.chain_ok


@dataclass(frozen=True)
class VerificationReport:
    """Everything one (b, k, m) instance can be checked for, in one record.

    closed_form_matches and digit_sum_matches are None when the
    certificate fails (there is no valid closed form to compare); every
    other field is always computed.
    """

    instance: FamilyInstance
    certificate: TheoremCertificate
    closed_form_matches: Union[bool, None]
    digit_sum_matches: Union[bool, None]
    niven_base: bool
    niven_power: bool
    divisibility: DivisibilityFlags
    elapsed: float

    @property
    def admissible(self) -> bool:
        return self.certificate.preconditions_ok

    @property
    def passed(self) -> bool:
        """No check that the hypotheses predict came out false."""
        if self.closed_form_matches is False or self.digit_sum_matches is False:
            return False
        if not self.admissible:
            return True
        d = self.divisibility
        return (
            self.niven_base
            and self.niven_power
            and d.euler_ok
            and d.bm1_ok
            and d.chain_ok
        )


def verify_instance(b: Union[Base, int], k: int, m: int) -> VerificationReport:
    """Cross-check one instance every way at once.

    Always: brute-force digits, both Niven predicates, the divisibility
    ladder (evaluated unconditionally), the Euler step.  When the
    degree-m certificate passes, additionally compares the closed-form
    digits and the predicted digit sum against the brute force.  The
    certificate comes back completed whenever the degree property was
    confirmed directly.
    """
    start = time.perf_counter()
    base = as_base(b)
    if k < 1 or m < 1:
        raise InvalidInput(f"k and m must be >= 1, got k={k}, m={m}")
    bb = base.value
    cert = _degree_certificate(base, m, k)
    oracle_digits = brute_force_power_digits(base, k, m)
    nk = bb ** (2**k) - 1
    niven_base = is_b_niven(nk, base)
    niven_power = is_b_niven(nk**m, base)
    if cert.preconditions_ok:
        closed_form_matches = power_digits(base, k, m) == oracle_digits
        digit_sum_matches = sum(oracle_digits.digits) == cert.predicted_digit_sum
    else:
        closed_form_matches = None
        digit_sum_matches = None
    facts = _chain_facts(bb, k, m)
    flags = DivisibilityFlags(
        euler_ok=pow(bb, 2**k, 2 ** (k + 1)) == 1,
        bm1_ok=facts.bm1_ok,
        chain_ok=facts.factor_ok and facts.chain_ok,
    )
    if niven_base and niven_power:
        cert = replace(cert, conclusion_checked=True, verified_via="oracle")
    return VerificationReport(
        instance=cert.instance,
        certificate=cert,
        closed_form_matches=closed_form_matches,
        digit_sum_matches=digit_sum_matches,
        niven_base=niven_base,
        niven_power=niven_power,
        divisibility=flags,
        elapsed=time.perf_counter() - start,
    )


def enumerate_niven(b: Union[Base, int], limit: int, m: int = 1) -> list[int]:
    """Ascending list of n in [1, limit] with n and n**m both b-Niven.

    The scan keeps a little-endian digit odometer, so the digit sum of
    consecutive integers updates in O(1) amortized instead of costing a
    full conversion per candidate.
    """
    base = as_base(b)
    if limit < 1:
        raise InvalidInput(f"limit must be >= 1, got {limit}")
    if m < 1:
        raise InvalidInput(f"m must be >= 1, got {m}")
    bb = base.value
    found: list[int] = []
    digs = [0]
    total = 0
    for n in range(1, limit + 1):
        i = 0
        while i < len(digs) and digs[i] == bb - 1:
            digs[i] = 0
            total -= bb - 1
            i += 1
        if i == len(digs):
            digs.append(1)
        else:
            digs[i] += 1
        total += 1
        if n % total == 0 and (m == 1 or is_b_niven(n**m, base)):
            found.append(n)
    return found


def probe_max_degree(b: Union[Base, int], k: int, m_max: int) -> DegreeProfile:
    """Degrees attained by b**(2**k) - 1, found by brute force.

    An empirical probe: it reports findings for this one base and never
    claims anything beyond the scanned range.
    """
    base = as_base(b)
    if m_max < 1:
        raise InvalidInput(f"m_max must be >= 1, got {m_max}")
    check_digit_budget(m_max * 2**k + 1)
    return degree_profile(nk_value(base, k), base, m_max)


def probe_even_bases(
    b_range: tuple[int, int], d: int, k: int
) -> list[tuple[int, frozenset[int]]]:
    """Degrees within 1..d attained by b**(2**k) - 1 for each even base
    in the inclusive range; findings only, no theorem hypotheses assumed."""
    lo, hi = b_range
    if d < 1:
        raise InvalidInput(f"d must be >= 1, got {d}")
    if k < 1:
        raise InvalidInput(f"k must be >= 1, got {k}")
    start = max(2, lo)
    if start % 2:
        start += 1
    out: list[tuple[int, frozenset[int]]] = []
    for bb in range(start, hi + 1, 2):
        check_digit_budget(d * 2**k + 1)
        profile = degree_profile(nk_value(bb, k), bb, d)
        out.append((bb, profile.degrees))
    return out
