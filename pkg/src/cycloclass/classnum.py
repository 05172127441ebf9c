"""Relative class numbers, zeta values at -1, Eichler masses, order ladders.

h^- of a CM field L abelian over Q is Q * w * prod over odd chi of
(-B_(1,chi)/2); the product is assembled from Galois-orbit blocks, each of
which is a rational integer times a power of 2, so the result is exact.
zeta_F(-1) of the totally real subfields comes from the even characters
via L(-1, chi) = -B_(2,chi)/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from cycloclass import characters as ch
from cycloclass import orders as qorders


FAMILIES = ("pow2", "sqrt3", "sqrtp", "3pow2", "sqrtuplus")

# unit-index factor Q and number of roots of unity w, per CM family
_Q_W = {
    "pow2": lambda s: (1, 2 ** s),
    "sqrt3": lambda s: (1, 6),
    "sqrtp": lambda s: (1, 2),
    "3pow2": lambda s: (2, 3 * 2 ** s),
    "sqrtuplus": lambda s: (2, 2),
}

_MIN_S = {"pow2": 3, "sqrt3": 2, "sqrtp": 3, "3pow2": 2, "sqrtuplus": 2}


@dataclass(frozen=True)
class FieldFamilySpec:
    """One of the CM fields K_s, F_s(sqrt(-3)), F_s(sqrt(-p_s)),
    Q(zeta_(3*2^s)), F_s(sqrt(-u_plus)) with its (Q, w) data."""

    family: str
    s: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.s < _MIN_S[self.family]:
            raise ValueError(
                f"family {self.family} needs s >= {_MIN_S[self.family]}")

    @property
    def q_factor(self) -> int:
        return _Q_W[self.family](self.s)[0]

    @property
    def roots_of_unity(self) -> int:
        return _Q_W[self.family](self.s)[1]

    def odd_chars(self):
        return ch.subfield_odd_chars(self.family, self.s)


class IntegralityError(ArithmeticError):
    """A class-number assembly produced a non-integer; never rounded."""


def h_minus(spec: FieldFamilySpec) -> int:
    """Relative class number via the odd-character Bernoulli product."""
    chars = spec.odd_chars()
    q, w = spec.q_factor, spec.roots_of_unity
    value = Fraction(q * w)
    n_odd = len(chars)
    value /= Fraction(2) ** n_odd
    value *= Fraction(-1) ** n_odd
    for orbit in ch.galois_orbits(chars):
        value *= ch.orbit_bernoulli_product(orbit, "B1")
    if value.denominator != 1 or value <= 0:
        raise IntegralityError(
            f"h_minus({spec.family}, s={spec.s}) = {value} is not a positive integer")
    return int(value)


def zeta_minus_one(s: int, family: str = "pow2") -> Fraction:
    """Exact zeta_F(-1) for F the real subfield of the cyclotomic family.

    zeta_F(-1) = prod over the character group of F of (-B_(2,chi)/2),
    including the trivial character's -1/12.  Degree-1 case (F = Q)
    returns -1/12.
    """
    chars = ch.field_even_chars(family, s)
    value = Fraction(1)
    n = len(chars)
    value *= Fraction(-1, 2) ** n
    for orbit in ch.galois_orbits(chars):
        value *= ch.orbit_bernoulli_product(orbit, "B2")
    return value


@dataclass(frozen=True)
class MassReport:
    """Eichler mass of the quaternion algebra over F_n with the derived
    vertex/edge masses and Euler characteristics of the tree quotients."""

    n: int
    degree: int                  # [F_n : Q]
    zeta_minus_one: Fraction
    mass: Fraction               # M_n = 2^(1-deg) |zeta_F(-1)|

    @property
    def vm_gr(self) -> Fraction:
        return 2 * self.mass

    @property
    def em_gr(self) -> Fraction:
        return 3 * self.mass

    @property
    def vm_bar(self) -> Fraction:
        return self.mass

    @property
    def em_bar(self) -> Fraction:
        return Fraction(3, 2) * self.mass

    @property
    def euler_psu(self) -> Fraction:
        return -self.mass

    @property
    def euler_pu(self) -> Fraction:
        return -self.mass / 2


def classify_n(n: int):
    """(family, s) for n = 2^s or 3*2^s; ValueError otherwise."""
    if n >= 8 and n & (n - 1) == 0:
        return "pow2", n.bit_length() - 1
    if n >= 12 and n % 3 == 0 and (n // 3) & (n // 3 - 1) == 0:
        return "3pow2", (n // 3).bit_length() - 1
    raise ValueError(f"n = {n} is not 2^s or 3*2^s with n >= 8")


def eichler_mass(n: int) -> MassReport:
    family, s = classify_n(n)
    z = zeta_minus_one(s, family)
    degree = 2 ** (s - 2) if family == "pow2" else 2 ** (s - 1)
    mass = Fraction(2) ** (1 - degree) * abs(z)
    return MassReport(n=n, degree=degree, zeta_minus_one=z, mass=mass)


# ----------------------------------------------------------------------
# Class numbers and unit indices of the cyclotomic order ladders

def ladder_class_number(family: str, s: int, k: int = 0,
                        h_plus: int = 1, h_min: int | None = None) -> int:
    """Class number of O_k, O'_k, or T.

    h(O_k)  = h^+ h^- 2^(k - s + w_k)                       (family "Ok")
    h(O'_1) = h';  h(O'_k) = h' 2^(k - s + w'_k - 2), k > 1 (family "Opk")
    h(T)    = h(K_s) (3^(2^(s-2)) - 1) / 2^s                (family "T")

    h^+ defaults to 1 (it is 1 for every s in desk range and the formulas
    only need its value, not a computation); h^- is computed from the
    matching cyclotomic family when not supplied.
    """
    if family == "Ok":
        if not 0 <= k < 2 ** (s - 2):
            raise ValueError("Ok requires 0 <= k < 2^(s-2)")
        if h_min is None:
            h_min = h_minus(FieldFamilySpec("pow2", s))
        w_k = qorders.root_of_unity_content(qorders.LadderOrder("Ok", s, k))
        val = Fraction(h_plus * h_min) * Fraction(2) ** (k - s + w_k)
    elif family == "Opk":
        if not 0 <= k <= 2 ** (s - 1):
            raise ValueError("Opk requires 0 <= k <= 2^(s-1)")
        if h_min is None:
            h_min = h_minus(FieldFamilySpec("3pow2", s))
        h_full = h_plus * h_min
        if k <= 1:
            val = Fraction(h_full)
        else:
            w_k = qorders.root_of_unity_content(
                qorders.LadderOrder("Opk", s, k))
            val = Fraction(h_full) * Fraction(2) ** (k - s + w_k - 2)
    elif family == "T":
        if s < 3:
            raise ValueError("T requires s >= 3")
        if h_min is None:
            h_min = h_minus(FieldFamilySpec("3pow2", s))
        val = Fraction(h_plus * h_min) * Fraction(3 ** (2 ** (s - 2)) - 1, 2 ** s)
    else:
        raise ValueError(f"unknown ladder family {family!r}")
    if val.denominator != 1 or val <= 0:
        raise IntegralityError(f"ladder class number {family} s={s} k={k} = {val}")
    return int(val)


def unit_index(family: str, s: int, k: int = 0) -> int:
    """Index of the ladder order's units in the maximal order's units."""
    if family == "Ok":
        if not 0 <= k < 2 ** (s - 2):
            raise ValueError("Ok requires 0 <= k < 2^(s-2)")
        w_k = qorders.root_of_unity_content(qorders.LadderOrder("Ok", s, k))
        return 2 ** (s - w_k)
    if family == "Opk":
        if not 0 <= k <= 2 ** (s - 1):
            raise ValueError("Opk requires 0 <= k <= 2^(s-1)")
        if k == 0:
            return 1
        if k == 1:
            return 3
        w_k = qorders.root_of_unity_content(qorders.LadderOrder("Opk", s, k))
        return 3 * 2 ** (s - w_k + 1)
    if family == "T":
        if s < 3:
            raise ValueError("T requires s >= 3")
        return 2 ** s
    raise ValueError(f"unknown ladder family {family!r}")
