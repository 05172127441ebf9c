"""Gates over Z[zeta_n, 1/2], Hamilton quaternions, and the unit maps.

The 2x2 side: H and T_n, unitarity and determinant classification.  The
quaternion side: exact arithmetic over the real subfield, membership in
the standard orders, and the ramifying/inverting element predicates.  The
bridge: the isomorphism of SU_2 onto the norm-one units and its
Hilbert-90 extension to a projective map on all of U_2.

sqrt(-1) inside the cyclotomic field is fixed as zeta_n^(n/4) throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from cycloclass.cyclotomic import (
    CycNum,
    abs_norm,
    is_square_unit,
    is_totally_positive,
    p_element,
)


def _sqrt_minus_one(n: int) -> CycNum:
    if n % 4 != 0:
        raise ValueError("need 4 | n to fix sqrt(-1) = zeta^(n/4)")
    return CycNum.zeta(n, n // 4)


# ----------------------------------------------------------------------
# Matrices

@dataclass(frozen=True)
class UMat2:
    """2x2 matrix with entries in Q(zeta_n)."""

    n: int
    a: CycNum
    b: CycNum
    c: CycNum
    d: CycNum

    def __post_init__(self):
        for x in (self.a, self.b, self.c, self.d):
            if x.m != self.n:
                raise ValueError("entry modulus mismatch")

    def __mul__(self, other: UMat2) -> UMat2:
        if self.n != other.n:
            raise ValueError("modulus mismatch")
        return UMat2(
            self.n,
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def scale(self, x) -> UMat2:
        return UMat2(self.n, self.a * x, self.b * x, self.c * x, self.d * x)

    def conj_transpose(self) -> UMat2:
        return UMat2(self.n, self.a.conj(), self.c.conj(),
                     self.b.conj(), self.d.conj())

    def det(self) -> CycNum:
        return self.a * self.d - self.b * self.c

    def inv_unitary(self) -> UMat2:
        # valid only when self is unitary
        return self.conj_transpose()

    def __pow__(self, k: int) -> UMat2:
        result = identity(self.n)
        base = self if k >= 0 else self.inv_unitary()
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        one = CycNum.from_rational(self.n, 1)
        zero = CycNum.from_rational(self.n, 0)
        return (self.a, self.b, self.c, self.d) == (one, zero, zero, one)


def identity(n: int) -> UMat2:
    one = CycNum.from_rational(n, 1)
    zero = CycNum.from_rational(n, 0)
    return UMat2(n, one, zero, zero, one)


def gate(name: str, n: int) -> UMat2:
    """The Hadamard gate H or the phase gate T at level n (4 | n, n >= 8)."""
    if n % 4 != 0 or n < 8:
        raise ValueError("gates need 4 | n and n >= 8")
    if name == "H":
        i = _sqrt_minus_one(n)
        h = (1 + i) * Fraction(1, 2)
        return UMat2(n, h, h, h, -h)
    if name == "T":
        one = CycNum.from_rational(n, 1)
        zero = CycNum.from_rational(n, 0)
        return UMat2(n, one, zero, zero, CycNum.zeta(n))
    raise ValueError(f"unknown gate {name!r}")


def gate_word(word: str, n: int) -> UMat2:
    """Evaluate a word over H, T, t (= T inverse)."""
    out = identity(n)
    for ch in word:
        if ch == "H":
            out = out * gate("H", n)
        elif ch == "T":
            out = out * gate("T", n)
        elif ch == "t":
            out = out * gate("T", n).inv_unitary()
        else:
            raise ValueError(f"bad gate letter {ch!r}")
    return out


def membership(mat: UMat2) -> str:
    """Strongest of: not_unitary < U2 < U2zeta < SU2.

    U2 requires dyadic entries and A A* = I; U2zeta additionally
    det in <zeta_n>; SU2 additionally det = 1.
    """
    n = mat.n
    if not all(x.is_dyadic() for x in (mat.a, mat.b, mat.c, mat.d)):
        return "not_unitary"
    if not (mat * mat.conj_transpose()).is_identity():
        return "not_unitary"
    det = mat.det()
    if det == CycNum.from_rational(n, 1):
        return "SU2"
    if any(det == CycNum.zeta(n, k) for k in range(n)):
        return "U2zeta"
    return "U2"


# ----------------------------------------------------------------------
# Quaternions over the real subfield

@dataclass(frozen=True)
class Quaternion:
    """a + b*i + c*j + d*k with conjugation-fixed CycNum coordinates."""

    n: int
    a: CycNum
    b: CycNum
    c: CycNum
    d: CycNum

    def __post_init__(self):
        for x in self.coords():
            if x.m != self.n:
                raise ValueError("coordinate modulus mismatch")
            if not x.is_real():
                raise ValueError("quaternion coordinates must be real")

    def coords(self):
        return (self.a, self.b, self.c, self.d)

    @classmethod
    def from_rationals(cls, n, a, b=0, c=0, d=0):
        f = CycNum.from_rational
        return cls(n, f(n, a), f(n, b), f(n, c), f(n, d))

    def __add__(self, other):
        return Quaternion(self.n, self.a + other.a, self.b + other.b,
                          self.c + other.c, self.d + other.d)

    def __neg__(self):
        return Quaternion(self.n, -self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            return Quaternion(self.n, self.a * other, self.b * other,
                              self.c * other, self.d * other)
        a1, b1, c1, d1 = self.coords()
        a2, b2, c2, d2 = other.coords()
        return Quaternion(
            self.n,
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    __rmul__ = __mul__

    def conjugate(self) -> Quaternion:
        return Quaternion(self.n, self.a, -self.b, -self.c, -self.d)

    def norm(self) -> CycNum:
        return (self.a * self.a + self.b * self.b
                + self.c * self.c + self.d * self.d)

    def inv(self) -> Quaternion:
        nm = self.norm()
        return self.conjugate() * nm.inv()

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.coords())


# order membership ----------------------------------------------------------

def _alpha_for(n: int) -> CycNum:
    """alpha with (2) = (alpha^2): sqrt(2) when 8 | n, 1 + sqrt(3) at n = 12."""
    z = CycNum.zeta(n)
    if n % 8 == 0:
        k = n // 8
        return z ** k + z.conj() ** k
    if n == 12:
        return 1 + z + z.conj()
    raise ValueError("explicit maximal order needs 8 | n or n = 12")


def order_membership_quat(q: Quaternion, which: str) -> bool:
    """Membership in the standard orders.

    Mtilde_n: coordinates over 1, i, j, (1+i+j+k)/2 lie in Z[zeta+1/zeta, 1/2];
    since 1/2 is in the ring this is just dyadic coordinates.
    M_n: coordinates over 1, (1+i)/alpha, (1+j)/alpha, (1+i+j+k)/2 lie in
    Z[zeta+1/zeta] (integral).
    """
    x0, x1, x2, x3 = q.coords()
    if which == "Mtilde":
        return all(x.is_dyadic() for x in q.coords())
    if which == "M":
        alpha = _alpha_for(q.n)
        cands = [
            x0 - x1 - x2 + x3,
            alpha * (x1 - x3),
            alpha * (x2 - x3),
            2 * x3,
        ]
        return all(c.is_integral() for c in cands)
    raise ValueError(f"unknown order {which!r}")


def is_unit_of_mtilde(q: Quaternion) -> bool:
    if not order_membership_quat(q, "Mtilde"):
        return False
    nm = abs_norm(q.norm())
    if nm == 0:
        return False
    a = abs(nm.numerator) * nm.denominator
    return a & (a - 1) == 0


# ----------------------------------------------------------------------
# Psi: SU2 onto the norm-one units

def psi(mat: UMat2) -> Quaternion:
    """The isomorphism sending [[r+s*sqrt(-1), t+u*sqrt(-1)],
    [-t+u*sqrt(-1), r-s*sqrt(-1)]] to r - u i - t j - s k."""
    if membership(mat) != "SU2":
        raise ValueError("psi is defined on SU2 only")
    return _quat_from_scaled_unitary(mat)


def _quat_from_scaled_unitary(mat: UMat2) -> Quaternion:
    n = mat.n
    root = _sqrt_minus_one(n)
    x, y = mat.a, mat.b
    if mat.d != x.conj() or mat.c != -(y.conj()):
        raise ValueError("matrix is not in quaternion form")
    half = Fraction(1, 2)
    r = (x + x.conj()) * half
    s = (x - x.conj()) * half * root.inv()
    t = (y + y.conj()) * half
    u = (y - y.conj()) * half * root.inv()
    return Quaternion(n, r, -u, -t, -s)


# ----------------------------------------------------------------------
# Projective classes mod the real units

@dataclass(frozen=True)
class ProjQuat:
    """A class in the unit group of Mtilde_n modulo Z[zeta+1/zeta,1/2]^x.

    rep is an actual unit of Mtilde_n; branch records which Hilbert-90
    scaling produced it (for phi images).
    """

    rep: Quaternion
    branch: str = ""

    def __eq__(self, other):
        if not isinstance(other, ProjQuat):
            return NotImplemented
        # equal iff the ratio is a central unit of the real dyadic ring
        ratio = other.rep * self.rep.inv()
        if not (ratio.b.is_zero() and ratio.c.is_zero() and ratio.d.is_zero()):
            return False
        lam = ratio.a
        if lam.is_zero() or not lam.is_dyadic():
            return False
        nm = abs_norm(lam)
        a = abs(nm.numerator) * nm.denominator
        return a & (a - 1) == 0

    def __hash__(self):
        return hash(self.rep.n)  # classes are compared via __eq__

    def __mul__(self, other: ProjQuat) -> ProjQuat:
        return ProjQuat(self.rep * other.rep)


def phi(mat: UMat2) -> ProjQuat:
    """The Hilbert-90 extension of psi to U2, valued in projective units.

    det(A) = zeta^k; beta is chosen among (1+1/zeta)^k, (1+zeta)^(-k),
    (1+zeta)^k, (1+1/zeta)^(-k) by the checkable postcondition
    det(beta A) = beta * conj(beta); the two valid choices differ by the
    real scalar Nm(1+zeta)^k, hence give the same class.
    """
    n = mat.n
    tag = membership(mat)
    if tag not in ("U2", "U2zeta", "SU2"):
        raise ValueError("phi is defined on unitary matrices")
    det = mat.det()
    k = next((k for k in range(n) if det == CycNum.zeta(n, k)), None)
    if k is None:
        raise ValueError("determinant is not a root of unity")
    z = CycNum.zeta(n)
    candidates = [
        ("(1+1/zeta)^k", (1 + z.conj()) ** k),
        ("(1+zeta)^-k", ((1 + z) ** k).inv()),
        ("(1+zeta)^k", (1 + z) ** k),
        ("(1+1/zeta)^-k", ((1 + z.conj()) ** k).inv()),
    ]
    for branch, beta in candidates:
        scaled = mat.scale(beta)
        if scaled.det() == beta * beta.conj():
            q = _quat_from_scaled_unitary(scaled)
            assert q.norm() == beta * beta.conj()
            return ProjQuat(q, branch)
    raise ArithmeticError("no Hilbert-90 scaling satisfied the postcondition")


# ----------------------------------------------------------------------
# Ramifying and inverting elements

def element_predicate(q: Quaternion, kind: str) -> bool:
    """Ramifying or inverting test for a unit of Mtilde_n.

    ramifying (n = 3*2^s): the reduced norm is a totally positive
    nonsquare unit of the real dyadic ring.
    inverting (n = 2^s): the reduced norm equals p_n exactly and
    q^2 / p_n is a unit of M_n.
    """
    if not is_unit_of_mtilde(q):
        raise ValueError("predicate needs a unit of Mtilde_n")
    n = q.n
    nm = q.norm()
    if kind == "ramifying":
        if n % 3 != 0:
            raise ValueError("ramifying elements live over n = 3*2^s")
        if nm.is_rational() and nm.as_rational() == 1:
            return False  # norm-one units are trivially square norms
        if not is_totally_positive(nm):
            return False
        square, _ = is_square_unit(nm)
        return not square
    if kind == "inverting":
        if n & (n - 1) != 0:
            raise ValueError("inverting elements live over n = 2^s")
        if nm != p_element(n):
            return False
        w = q * q * p_element(n).inv()
        return order_membership_quat(w, "M") and \
            abs_norm(w.norm()) == 1
    raise ValueError(f"unknown predicate {kind!r}")
