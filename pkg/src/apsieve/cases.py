"""The twelve descent cases.

Writing the seven-cube sum as 7x(x^2 + 12r^2) = y^p and putting y = 7w,
the factor gcd(x, x^2 + 12r^2) = gcd(x, 12) together with whether 7 | x
splits the problem into twelve cases.  Each case carries two descent
equations and a ternary equation

    a * w2^p - b * w1^(2p) = c0 * r^2

whose coefficients a, b have exponents affine in p.  Cases 1-4 go to the
modular sieves, cases 7-10 to the primitive-divisor solver, and cases
5, 6, 11, 12 die on a 2-adic valuation count.
"""
from __future__ import annotations

from dataclasses import dataclass

from .arith import FactoredInteger, factored, factored_one

SIEVE = "sieve"
EVEN_CONTRADICTION = "even-contradiction"
LEHMER = "lehmer"

R_MAX = 10**6


@dataclass(frozen=True)
class CaseTemplate:
    id: int
    seven_divides_x: bool
    gcd12: int  # gcd(x, 12) forced by the case
    x_coefficient: FactoredInteger  # x = coeff * w1^p
    descent2_unit: int  # x^2 + 12 r^2 = unit * 7^(p-1) w2^p (or unit * w2^p)
    a: FactoredInteger
    b: FactoredInteger
    c0: int
    branch: str

    def x_conditions(self) -> str:
        seven = "7 | x" if self.seven_divides_x else "7 ∤ x"
        return f"{seven}, gcd(x, 12) = {self.gcd12}"


def _t(case_id, seven, gcd12, x_coeff, unit, a, b, c0, branch):
    return CaseTemplate(case_id, seven, gcd12, x_coeff, unit, a, b, c0, branch)


_A_SMALL = factored((7, -1, 1))  # 7^(p-1), cases 1-6
_A_ONE = factored_one()  # cases 7-12


def build_case_templates() -> list[CaseTemplate]:
    """The twelve case templates, ordered by id."""
    seven_sq = factored((7, -2, 2))  # 7^(2p-2), folded into b for cases 7-12
    two = factored((2, -6, 2))  # 2^(2p-6)
    three = factored((3, -3, 2))  # 3^(2p-3)
    two_odd = factored((2, -3, 2))  # 2^(2p-3)
    six_odd = factored((2, -3, 2), (3, -3, 2))  # 6^(2p-3)
    return [
        _t(1, False, 1, factored_one(), 1, _A_SMALL, factored_one(), 12, SIEVE),
        _t(2, False, 3, factored((3, -1, 1)), 3, _A_SMALL, three, 4, SIEVE),
        _t(3, False, 4, factored((2, -2, 1)), 4, _A_SMALL, two, 3, SIEVE),
        _t(4, False, 12, factored((2, -2, 1), (3, -1, 1)), 12, _A_SMALL, two * three, 1, SIEVE),
        _t(5, False, 2, factored((2, -1, 1)), 2, _A_SMALL, two_odd, 6, EVEN_CONTRADICTION),
        _t(6, False, 6, factored((2, -1, 1), (3, -1, 1)), 6, _A_SMALL, six_odd, 2, EVEN_CONTRADICTION),
        _t(7, True, 1, factored((7, -1, 1)), 1, _A_ONE, seven_sq, 12, LEHMER),
        _t(8, True, 3, factored((3, -1, 1), (7, -1, 1)), 3, _A_ONE, three * seven_sq, 4, LEHMER),
        _t(9, True, 4, factored((2, -2, 1), (7, -1, 1)), 4, _A_ONE, two * seven_sq, 3, LEHMER),
        _t(10, True, 12, factored((2, -2, 1), (3, -1, 1), (7, -1, 1)), 12, _A_ONE, two * three * seven_sq, 1, LEHMER),
        _t(11, True, 2, factored((2, -1, 1), (7, -1, 1)), 2, _A_ONE, two_odd * seven_sq, 6, EVEN_CONTRADICTION),
        _t(12, True, 6, factored((2, -1, 1), (3, -1, 1), (7, -1, 1)), 6, _A_ONE, six_odd * seven_sq, 2, EVEN_CONTRADICTION),
    ]


def get_template(case_id: int) -> CaseTemplate:
    if not 1 <= case_id <= 12:
        raise ValueError(f"case id {case_id} out of range 1..12")
    return build_case_templates()[case_id - 1]


@dataclass(frozen=True)
class TernaryInstance:
    """A concrete equation a*w2^p - b*w1^(2p) = c with c = c0*r^2."""

    case_id: int
    p: int
    r: int
    a: FactoredInteger
    b: FactoredInteger
    c0: int

    @property
    def c(self) -> int:
        return self.c0 * self.r * self.r

    def a_value(self) -> int:
        return self.a.value(self.p)

    def b_value(self) -> int:
        return self.b.value(self.p)


def instantiate(t: CaseTemplate, p: int, r: int) -> TernaryInstance:
    if t.branch != SIEVE:
        raise ValueError(f"case {t.id} is not a sieve case")
    if p < 5:
        raise ValueError("exponent must be a prime >= 5")
    if not 1 <= r <= R_MAX:
        raise ValueError(f"r={r} outside [1, {R_MAX}]")
    return TernaryInstance(t.id, p, r, t.a, t.b, t.c0)


@dataclass(frozen=True)
class EvenCaseWitness:
    """Certificate that the ternary equation of an even case is impossible.

    The case conditions force 2 | x with 4 ∤ x, so gcd(x, r) = 1 makes r
    odd and v2(c0 * r^2) = v2(c0) = 1.  The two ternary terms have 2-adic
    valuations p*k and 2p - 3 + 2p*j (k, j >= 0); neither pattern hits 1
    for p >= 5, and the patterns can never coincide (0 ≢ -3 mod p), so no
    cancellation can produce valuation 1 either.
    """

    case_id: int
    c_v2: int
    a_term_step: str  # valuations p*k
    b_term_offset: int  # valuations b_term_offset + 2p*j

    def verify(self, p: int) -> bool:
        if p < 5:
            return False
        # target valuation 1 from the a-term alone: p*k = 1 is impossible
        if any(p * k == self.c_v2 for k in range(3)):
            return False
        # from the b-term alone: 2p-3+2pj = 1 forces p <= 2
        if any(2 * p - 3 + 2 * p * j == self.c_v2 for j in range(3)):
            return False
        # cancellation needs p*k = 2p-3+2p*j, i.e. -3 ≡ 0 mod p
        return 3 % p != 0


def eliminate_even_case(t: CaseTemplate) -> EvenCaseWitness:
    if t.branch != EVEN_CONTRADICTION:
        raise ValueError(f"case {t.id} is not an even-contradiction case")
    v2_c0 = (t.c0 & -t.c0).bit_length() - 1
    assert v2_c0 == 1
    return EvenCaseWitness(t.id, v2_c0, "p*k", -3)


def seven_cube_sum(x: int, r: int) -> int:
    return sum((x + i * r) ** 3 for i in range(-3, 4))


_GCD12_TO_CASE = {1: 1, 3: 2, 4: 3, 12: 4, 2: 5, 6: 6}


def case_of(x: int, r: int) -> int | None:
    """Which of the twelve cases (x, r) with gcd(x, r) = 1 falls into."""
    import math

    if x == 0 or math.gcd(x, r) != 1:
        return None
    base = _GCD12_TO_CASE[math.gcd(x, 12)]
    return base + (6 if x % 7 == 0 else 0)
