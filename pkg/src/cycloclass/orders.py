"""The cyclotomic order ladders O_k, O'_k, T and their membership tests.

Orders are held intensionally (family + parameters + membership predicate).
Membership is the antitrace criterion: an integral x lies in the order with
conductor ideal I iff ATr(x) lands in I * ATr(O_K), and ATr(O_K) is
generated over the real integers by zeta - zeta^(-1).  Valuations at the
unique prime above 2 are read off from absolute norms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import gcd

from cycloclass.cyclotomic import (
    CycNum,
    abs_norm,
    is_totally_positive,
    p_element,
    u_plus_element,
    val_at_2adic_prime,
)


@dataclass(frozen=True)
class LadderOrder:
    """O_k (n = 2^s), O'_k (n = 3*2^s), or T = Z[zeta+1/zeta, zeta_3]."""

    family: str  # "Ok" | "Opk" | "T"
    s: int
    k: int = 0

    def __post_init__(self):
        if self.family == "Ok":
            if self.s < 3 or not 0 <= self.k < 2 ** (self.s - 2):
                raise ValueError("Ok needs s >= 3 and 0 <= k < 2^(s-2)")
        elif self.family == "Opk":
            if self.s < 2 or not 0 <= self.k <= 2 ** (self.s - 1):
                raise ValueError("Opk needs s >= 2 and 0 <= k <= 2^(s-1)")
        elif self.family == "T":
            if self.s < 3:
                raise ValueError("T needs s >= 3")
        else:
            raise ValueError(f"unknown ladder family {self.family!r}")

    @property
    def modulus(self) -> int:
        return 2 ** self.s if self.family == "Ok" else 3 * 2 ** self.s


def order_membership(x: CycNum, order: LadderOrder) -> bool:
    """Whether an integral x at the order's modulus belongs to the order."""
    n = order.modulus
    if x.m != n:
        raise ValueError(f"element modulus {x.m} does not match order ({n})")
    if not x.is_integral():
        return False
    at = x.antitrace()
    if at.is_zero():
        return True  # real integral elements lie in every ladder order
    v = val_at_2adic_prime(at) if order.family != "T" else None
    if order.family == "Ok":
        # conductor P^(2k); antitrace of the order generates P^(2(k+1))
        return v >= 2 * (order.k + 1)
    if order.family == "Opk":
        # conductor P'^k and zeta - 1/zeta is a unit above 2
        return v >= order.k
    # T: ATr(x) must land in p'_3 * (zeta - 1/zeta), p'_3 = (1 + zeta_6)
    b = at * _inv_zeta_minus_conj(n)
    c = b * (1 + CycNum.zeta(n, n - n // 6))
    return all(q % 3 == 0 for q in c.coeffs) and c.den == 1


@cache
def _inv_zeta_minus_conj(n: int) -> CycNum:
    z = CycNum.zeta(n)
    return (z - z.conj()).inv()


def root_of_unity_content(order: LadderOrder) -> int:
    """Largest w with zeta_(2^w) in the order, by the inclusion ladder.

    Z[zeta+1/zeta][zeta_(2^w)] sits at index 2^(s-w)-1 in the O_k ladder
    and at 2^(s-w+1) in the O'_k ladder, so membership is an index
    comparison; cross-checked against the antitrace test in the suite.
    """
    if order.family == "Ok":
        for w in range(order.s, 1, -1):
            if 2 ** (order.s - w) - 1 >= order.k:
                return w
        return 2
    if order.family == "Opk":
        for w in range(order.s, 1, -1):
            if 2 ** (order.s - w + 1) >= order.k:
                return w
        return 2
    raise ValueError("T has exactly 6 roots of unity; no 2-power content")


def w_k_closed_form(s: int, k: int) -> int:
    """Derived convenience for the O_k ladder: s - ceil(log2(k+1))."""
    w = s
    while 2 ** (s - w) - 1 < k:
        w -= 1
    return w


def conductor(order: LadderOrder):
    """Conductor descriptor: (prime symbol, exponent)."""
    if order.family == "Ok":
        return ("P", 2 * order.k)
    if order.family == "Opk":
        return ("P'", order.k)
    return ("p'_3", 1)


# ----------------------------------------------------------------------
# Quadratic-context classification for elements of norm p_s or u_plus

@dataclass(frozen=True)
class QuadraticContext:
    kind: str          # "inverting" | "ramifying" | "neither"
    field: str         # "cyclotomic" | "sqrt_minus_p" | "sqrt_minus_uplus" | ""
    order: str         # "maximal" | "O'_1" | ""


def classify_quadratic_context(gamma, n: int) -> QuadraticContext:
    """Classify a CM-extension element by its relative norm.

    gamma is ("cyclotomic", x) with x a CycNum at modulus n, or
    ("sqrt_minus_p", (a, b)) / ("sqrt_minus_uplus", (a, b)) describing
    a + b*sqrt(-d) with real CycNum coordinates.  Norm p_s (n = 2^s)
    marks an inverting context, norm u_plus (n = 3*2^s) a ramifying one;
    the generated order is read off the antitrace valuation.
    """
    tag, data = gamma
    pow2 = n & (n - 1) == 0
    target = p_element(n) if pow2 else u_plus_element(n)
    if tag == "cyclotomic":
        x = data
        if x.m != n:
            raise ValueError("element modulus does not match n")
        nm = x * x.conj()
        if nm != target:
            return QuadraticContext("neither", "", "")
        kind = "inverting" if pow2 else "ramifying"
        at = x.antitrace()
        v = val_at_2adic_prime(at)
        if pow2:
            order_name = "maximal" if v == 2 else "O_%d" % (v // 2 - 1)
        else:
            order_name = "maximal" if v == 0 else ("O'_1" if v == 1 else "O'_%d" % v)
        return QuadraticContext(kind, "cyclotomic", order_name)
    if tag in ("sqrt_minus_p", "sqrt_minus_uplus"):
        a, b = data
        d = target
        nm = a * a + d * (b * b)
        if nm != target:
            return QuadraticContext("neither", "", "")
        kind = "inverting" if pow2 else "ramifying"
        # sqrt(-p_s) resp. sqrt(-u_plus) generates the maximal order
        return QuadraticContext(kind, tag, "maximal")
    raise ValueError(f"unknown element descriptor {tag!r}")
