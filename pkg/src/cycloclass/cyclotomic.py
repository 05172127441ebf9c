"""Exact arithmetic in cyclotomic rings Z[zeta_m] and their 2-localizations.

An element is stored as an integer coefficient vector of length phi(m) over
the power basis 1, z, ..., z^(phi(m)-1) reduced modulo the m-th cyclotomic
polynomial, together with a common positive denominator.  Reduction mod
Phi_m is canonical, so equality of values is equality of representations.

The real subfield Q(zeta_m)^+ is not a separate type: its elements are the
conjugation-invariant CycNum values (is_real()), and "dyadic" elements
(power-of-2 denominators) model Z[zeta_m, 1/2].
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cache
from math import gcd

import mpmath
from mpmath import iv


class UndecidedError(Exception):
    """A three-valued predicate hit its precision cap without deciding."""


# ----------------------------------------------------------------------
# Cyclotomic polynomials

def _poly_divmod_exact(num, den):
    # Exact division of integer polynomials (num by monic-leading den).
    num = list(num)
    d = len(den) - 1
    q = [0] * (len(num) - d)
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i]
        if c % den[d] != 0:
            raise ArithmeticError("non-exact polynomial division")
        c //= den[d]
        q[i - d] = c
        for j in range(d + 1):
            num[i - d + j] -= c * den[j]
    if any(num[:d]):
        raise ArithmeticError("non-exact polynomial division")
    return q


@cache
def cyclotomic_poly(d: int) -> tuple:
    """Coefficients (low to high) of the d-th cyclotomic polynomial."""
    if d < 1:
        raise ValueError("modulus must be >= 1")
    if d == 1:
        return (-1, 1)
    # x^d - 1 divided by the product of Phi_e over proper divisors e of d.
    num = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            num = _poly_divmod_exact(num, cyclotomic_poly(e))
    return tuple(num)


@cache
def euler_phi(m: int) -> int:
    return len(cyclotomic_poly(m)) - 1 if m > 1 else 1


@cache
def _power_table(m: int) -> tuple:
    """Row j (0 <= j < m) is the vector of zeta_m^j over the power basis."""
    phi = euler_phi(m)
    poly = cyclotomic_poly(m)
    rows = []
    row = [0] * phi
    row[0] = 1
    for _ in range(m):
        rows.append(tuple(row))
        # multiply by zeta: shift, then reduce the overflow coefficient
        top = row[phi - 1]
        row = [0] + row[: phi - 1]
        if top:
            for i in range(phi):
                row[i] -= top * poly[i]
    return tuple(rows)


# ----------------------------------------------------------------------
# Ring elements

class CycNum:
    """An element of Q(zeta_m) with canonical power-basis representation."""

    __slots__ = ("m", "den", "coeffs")

    def __init__(self, m, coeffs, den=1, _normalized=False):
        self.m = m
        if _normalized:
            self.coeffs = coeffs
            self.den = den
            return
        phi = euler_phi(m)
        cs = list(coeffs) + [0] * (phi - len(coeffs))
        if len(cs) != phi:
            raise ValueError("coefficient vector longer than phi(m)")
        if den < 0:
            den = -den
            cs = [-c for c in cs]
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        g = den
        for c in cs:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            den //= g
            cs = [c // g for c in cs]
        self.coeffs = tuple(cs)
        self.den = den

    # -- constructors ---------------------------------------------------

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> CycNum:
        return cls(m, _power_table(m)[k % m])

    @classmethod
    def from_rational(cls, m: int, q) -> CycNum:
        q = Fraction(q)
        return cls(m, [q.numerator], q.denominator)

    @classmethod
    def from_fractions(cls, m: int, fracs) -> CycNum:
        fracs = [Fraction(f) for f in fracs]
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        return cls(m, [int(f * den) for f in fracs], den)

    # -- basic structure -------------------------------------------------

    def to_fractions(self):
        return [Fraction(c, self.den) for c in self.coeffs]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational value")
        return Fraction(self.coeffs[0], self.den)

    def is_integral(self) -> bool:
        return self.den == 1

    def is_dyadic(self) -> bool:
        return self.den & (self.den - 1) == 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNum.from_rational(self.m, other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return (self.m == other.m and self.den == other.den
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.m, self.den, self.coeffs))

    def __repr__(self):
        return f"CycNum({self.m}, {list(self.coeffs)}, den={self.den})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            q = Fraction(c, self.den)
            if i == 0:
                terms.append(str(q))
            elif i == 1:
                terms.append(f"{q}*z")
            else:
                terms.append(f"{q}*z^{i}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} (mod Phi_{self.m})"

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNum.from_rational(self.m, other)
        if isinstance(other, CycNum):
            if other.m != self.m:
                raise ValueError(f"modulus mismatch: {self.m} vs {other.m}")
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        g = gcd(self.den, o.den)
        la, lb = o.den // g, self.den // g
        den = self.den * la
        cs = [a * la + b * lb for a, b in zip(self.coeffs, o.coeffs)]
        return CycNum(self.m, cs, den)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.m, tuple(-c for c in self.coeffs), self.den,
                      _normalized=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m, phi = self.m, euler_phi(self.m)
        a, b = self.coeffs, o.coeffs
        conv = [0] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        out = list(conv[:phi])
        table = _power_table(m)
        for e in range(phi, 2 * phi - 1):
            c = conv[e]
            if c:
                row = table[e % m]
                for i in range(phi):
                    out[i] += c * row[i]
        return CycNum(m, out, self.den * o.den)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result = CycNum.from_rational(self.m, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def inv(self) -> CycNum:
        """Multiplicative inverse via extended gcd with Phi_m over Q."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            q = self.as_rational()
            return CycNum.from_rational(self.m, 1 / q)
        phi_poly = [Fraction(c) for c in cyclotomic_poly(self.m)]
        g = [Fraction(c, self.den) for c in self.coeffs]
        # extended Euclid: maintain s with s*g = r (mod Phi)
        r0, r1 = phi_poly, _poly_trim(g)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1 or r1[0] != 0:
            q, rem = _poly_divmod_frac(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
            if len(r0) == 1 and r0[0] != 0:
                break
        if not (len(r0) == 1 and r0[0] != 0):
            raise ZeroDivisionError("not invertible mod Phi_m")
        c = r0[0]
        inv_coeffs = [x / c for x in s0]
        return CycNum.from_fractions(self.m, inv_coeffs)

    # -- Galois action ----------------------------------------------------

    def galois(self, a: int) -> CycNum:
        """Image under zeta -> zeta^a; a must be coprime to m."""
        if gcd(a, self.m) != 1:
            raise ValueError(f"{a} is not coprime to {self.m}")
        phi = euler_phi(self.m)
        table = _power_table(self.m)
        out = [0] * phi
        for i, c in enumerate(self.coeffs):
            if c:
                row = table[(a * i) % self.m]
                for j in range(phi):
                    out[j] += c * row[j]
        return CycNum(self.m, out, self.den)

    def conj(self) -> CycNum:
        return self.galois(self.m - 1) if self.m > 2 else self

    def trace_part(self) -> CycNum:
        return self + self.conj()

    def antitrace(self) -> CycNum:
        """x - conj(x); kernel is the real subfield."""
        return self - self.conj()

    def is_real(self) -> bool:
        return self == self.conj()

    # -- numeric embeddings ------------------------------------------------

    def embedding_intervals(self, prec: int = 80):
        """Certified intervals for sigma_a(x) over a in (Z/m)^x, a <= m/2.

        Only meaningful as a list of real values when x is fixed by
        conjugation; the caller is responsible for checking is_real().
        """
        old = iv.prec
        iv.prec = prec
        try:
            vals = []
            two_pi = 2 * iv.pi
            for a in range(1, self.m // 2 + 1) if self.m > 2 else [1]:
                if gcd(a, self.m) != 1:
                    continue
                acc = iv.mpf(0)
                for i, c in enumerate(self.coeffs):
                    if c:
                        acc += c * iv.cos(two_pi * a * i / self.m)
                vals.append(acc / self.den)
            return vals
        finally:
            iv.prec = old

    def complex_value(self, prec: int = 60):
        old = mpmath.mp.prec
        mpmath.mp.prec = prec
        try:
            z = mpmath.exp(2j * mpmath.pi / self.m)
            acc = mpmath.mpc(0)
            for i, c in enumerate(self.coeffs):
                if c:
                    acc += c * z ** i
            return acc / self.den
        finally:
            mpmath.mp.prec = old


# polynomial helpers over Fractions (dense, low-to-high) -------------------

def _poly_trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod_frac(a, b):
    a = list(a)
    db = len(b) - 1
    q = [Fraction(0)] * max(len(a) - db, 1)
    while len(a) - 1 >= db and any(a):
        a = _poly_trim(a)
        if len(a) - 1 < db:
            break
        c = a[-1] / b[-1]
        k = len(a) - 1 - db
        q[k] = c
        for j in range(db + 1):
            a[k + j] -= c * b[j]
        a.pop()
    return _poly_trim(q), _poly_trim(a)


# ----------------------------------------------------------------------
# Norms

def _resultant_frac(f, g):
    """Resultant over Q via fraction arithmetic (classical Euclid)."""
    f = _poly_trim([Fraction(x) for x in f])
    g = _poly_trim([Fraction(x) for x in g])
    res = Fraction(1)
    while True:
        df, dg = len(f) - 1, len(g) - 1
        if dg == 0:
            return res * g[0] ** df
        _, r = _poly_divmod_frac(f, g)
        r = _poly_trim(r)
        dr = len(r) - 1
        if r == [Fraction(0)] or not any(r):
            return Fraction(0)
        res *= Fraction((-1) ** (df * dg)) * g[-1] ** (df - dr)
        f, g = g, r


def abs_norm(x: CycNum) -> Fraction:
    """Norm from Q(zeta_m) down to Q, exact.

    Computed by halving through the tower Q(zeta_m) > Q(zeta_{m/2}) while
    4 | m (the relative norm is x * galois(x, 1 + m/2)), then a resultant
    with Phi_m at the base.  Zero input returns 0.
    """
    if x.is_zero():
        return Fraction(0)
    m = x.m
    num = CycNum(m, x.coeffs, 1)
    val = _abs_norm_integral(num)
    return val / Fraction(x.den) ** euler_phi(m)


def _abs_norm_integral(x: CycNum) -> Fraction:
    m = x.m
    if m <= 2:
        return Fraction(x.coeffs[0], x.den)
    if m % 4 == 0:
        y = x * x.galois(1 + m // 2)
        # invariance under zeta -> -zeta kills odd coefficients
        if any(y.coeffs[1::2]):
            raise ArithmeticError("tower norm landed outside the subfield")
        sub = CycNum(m // 2, list(y.coeffs[0::2]), y.den)
        return _abs_norm_integral(sub)
    if x.is_rational():
        return Fraction(x.coeffs[0], x.den) ** euler_phi(m)
    res = _resultant_frac(cyclotomic_poly(m),
                          [Fraction(c, x.den) for c in x.coeffs])
    return res


def rel_norm_real(x: CycNum) -> CycNum:
    """Norm to the real subfield: x * conj(x)."""
    return x * x.conj()


def galois_conj_trace(x: CycNum, a: int, mode: str = "apply") -> CycNum:
    """Galois image, trace, or antitrace for the conjugation involution."""
    if mode == "apply":
        return x.galois(a)
    if mode == "trace":
        return x.trace_part()
    if mode == "antitrace":
        return x.antitrace()
    raise ValueError(f"unknown mode {mode!r}")


# ----------------------------------------------------------------------
# Special elements and local valuations

def p_element(n: int) -> CycNum:
    """p_n = 2 + zeta_n + zeta_n^(-1) for n = 2^s."""
    if not _is_pow2(n) or n < 8:
        raise ValueError("p_n is defined for n = 2^s, n >= 8")
    z = CycNum.zeta(n)
    return 2 + z + z.conj()


def p_prime_element(n: int) -> CycNum:
    """p'_n = 1 + zeta_n + zeta_n^(-1) for n = 3*2^s."""
    if not _is_3pow2(n) or n < 12:
        raise ValueError("p'_n is defined for n = 3*2^s, n >= 12")
    z = CycNum.zeta(n)
    return 1 + z + z.conj()


def u_plus_element(n: int) -> CycNum:
    """u_+ = 2 + zeta_n + zeta_n^(-1) = p'_n + 1 for n = 3*2^s."""
    return p_prime_element(n) + 1


def _is_pow2(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def _is_3pow2(n: int) -> bool:
    return n % 3 == 0 and _is_pow2(n // 3)


def val_at_2adic_prime(y: CycNum) -> int:
    """Valuation of y at the unique prime above 2, for n = 2^s or 3*2^s.

    Uses |Nm(y)| = 2^(f * v) * odd with residue degree f = 1 (n = 2^s)
    or f = 2 (n = 3*2^s); y must be nonzero with dyadic denominator.
    """
    if y.is_zero():
        raise ValueError("valuation of zero")
    n = y.m
    if _is_pow2(n):
        f = 1
    elif _is_3pow2(n):
        f = 2
    else:
        raise ValueError("valuation only for n = 2^s or 3*2^s")
    nm = abs_norm(y)
    v2 = _two_valuation(nm.numerator) - _two_valuation(nm.denominator)
    if v2 % f != 0:
        raise ArithmeticError("norm valuation incompatible with residue degree")
    return v2 // f


def _two_valuation(k: int) -> int:
    k = abs(k)
    if k == 0:
        raise ValueError("2-valuation of 0")
    return (k & -k).bit_length() - 1


# ----------------------------------------------------------------------
# Total positivity and unit squares

def is_totally_positive(x: CycNum, prec_cap: int = 4096) -> bool:
    """True iff every real embedding of x is > 0.

    Requires nonzero x fixed by conjugation.  Decided by outward-rounded
    interval evaluation with doubling precision; terminates because the
    embeddings of a nonzero element are exactly nonzero.
    """
    if x.is_zero():
        raise ValueError("totally-positive test on zero")
    if not x.is_real():
        raise ValueError("element is not fixed by conjugation")
    prec = 64
    while prec <= prec_cap:
        vals = x.embedding_intervals(prec)
        if all(v > 0 for v in vals):
            return True
        if any(v < 0 for v in vals):
            return False
        prec *= 2
    raise UndecidedError("interval refinement hit the precision cap")


def real_signature(x: CycNum, prec_cap: int = 4096):
    """Signs of all real embeddings of a nonzero conjugation-fixed x."""
    if x.is_zero() or not x.is_real():
        raise ValueError("signature needs a nonzero real element")
    prec = 64
    while prec <= prec_cap:
        vals = x.embedding_intervals(prec)
        if all(v > 0 or v < 0 for v in vals):
            return [1 if v > 0 else -1 for v in vals]
        prec *= 2
    raise UndecidedError("interval refinement hit the precision cap")


def _is_unit_of_dyadic_ring(u: CycNum) -> bool:
    if u.is_zero() or not u.is_dyadic():
        return False
    nm = abs_norm(u)
    a = abs(nm.numerator) * nm.denominator
    return a & (a - 1) == 0


@cache
def _split_primes(m: int, count: int = 8):
    """Primes q = 1 (mod m), with an m-th root of unity mod q for each."""
    out = []
    q = m + 1
    while len(out) < count:
        if q % 2 == 1 and _is_prime(q) and q % m == 1:
            g = _primitive_root(q)
            out.append((q, pow(g, (q - 1) // m, q)))
        q += m
    return tuple(out)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _primitive_root(q: int) -> int:
    fac = []
    k = q - 1
    d = 2
    while d * d <= k:
        if k % d == 0:
            fac.append(d)
            while k % d == 0:
                k //= d
        d += 1
    if k > 1:
        fac.append(k)
    for g in range(2, q):
        if all(pow(g, (q - 1) // p, q) != 1 for p in fac):
            return g
    raise ArithmeticError("no primitive root found")


def _reduce_at_root(x: CycNum, q: int, omega: int) -> int:
    acc = 0
    w = 1
    for c in x.coeffs:
        acc = (acc + c * w) % q
        w = w * omega % q
    return acc * pow(x.den, q - 2, q) % q


def is_square_unit(u: CycNum, prec_cap: int = 8192, den_cap: int = 24):
    """Decide whether a conjugation-fixed unit of Z[zeta_m,1/2]^+ is a square.

    Returns (True, sqrt) with an exact verified square root, or
    (False, certificate).  The certificate is ("real_place", index) when
    some embedding is negative, else ("prime", q, omega) naming a split
    prime at which u reduces to a quadratic nonresidue.  Raises
    UndecidedError if neither a root nor a certificate is found below the
    caps (never returns a wrong boolean).

    Method: Newton (Hensel at the archimedean places) lifting of the
    square roots in every real completion; the unknown signature of the
    root is searched over embedding pairs modulo the global sign; rational
    reconstruction in the power basis with power-of-2 denominators; exact
    verification by squaring.  Nonsquares are certified at a split prime.
    """
    if not u.is_real():
        raise ValueError("square-unit test needs a conjugation-fixed element")
    if not _is_unit_of_dyadic_ring(u):
        raise ValueError("square-unit test needs a unit of the dyadic ring")
    sig = real_signature(u)
    if any(s < 0 for s in sig):
        return False, ("real_place", sig.index(-1))

    # quick nonresidue hunt before attempting reconstruction
    cert = _nonresidue_certificate(u, rounds=2)
    if cert is not None:
        return False, cert

    prec = 192
    while prec <= prec_cap:
        root = _reconstruct_sqrt(u, prec, den_cap)
        if root is not None:
            return True, root
        cert = _nonresidue_certificate(u, rounds=6)
        if cert is not None:
            return False, cert
        prec *= 2
    raise UndecidedError("square test undecided at precision cap")


def _nonresidue_certificate(u: CycNum, rounds: int):
    m = u.m if u.m > 2 else 4
    for q, zroot in _split_primes(m, rounds):
        for a in range(1, m):
            if gcd(a, m) != 1:
                continue
            omega = pow(zroot, a, q)
            c = _reduce_at_root(u, q, omega)
            if c == 0:
                continue
            if pow(c, (q - 1) // 2, q) == q - 1:
                return ("prime", q, omega)
    return None


def _reconstruct_sqrt(u: CycNum, prec: int, den_cap: int, pair_cap: int = 14):
    m, phi = u.m, euler_phi(u.m)
    old = mpmath.mp.prec
    mpmath.mp.prec = prec
    try:
        units = [a for a in range(1, m) if gcd(a, m) == 1] if m > 2 else [1]
        # conjugate pairs share the embedding value of a real element
        pairs = sorted({min(a, (m - a) % m or m) for a in units})
        if len(pairs) > pair_cap:
            return None
        pair_of = {a: pairs.index(min(a, (m - a) % m or m)) for a in units}
        z = [mpmath.exp(2j * mpmath.pi * a / m) for a in units]
        roots = []
        for za in z:
            val = sum(c * za ** i for i, c in enumerate(u.coeffs)) / u.den
            re = mpmath.re(val)
            if re <= 0:
                return None
            roots.append(mpmath.sqrt(re))
        A = mpmath.matrix([[za ** i for i in range(phi)] for za in z])
        try:
            Ainv = A ** -1
        except ZeroDivisionError:
            return None
        tol = mpmath.mpf(2) ** (-24)
        # signature search over pairs; first pair fixed to + (global sign)
        for bits in range(1 << (len(pairs) - 1)):
            signs = [1] + [1 - 2 * ((bits >> j) & 1)
                           for j in range(len(pairs) - 1)]
            t = mpmath.matrix([signs[pair_of[a]] * r
                               for a, r in zip(units, roots)])
            # quick reject on a single reconstructed coordinate
            c0 = sum(Ainv[0, j] * t[j] for j in range(phi))
            v0 = mpmath.re(c0) * (1 << den_cap)
            if abs(v0 - mpmath.nint(v0)) > tol * (1 << den_cap):
                continue
            sol = Ainv * t
            for k in range(den_cap + 1):
                scale = 1 << k
                ints = []
                ok = True
                for j in range(phi):
                    v = mpmath.re(sol[j]) * scale
                    r = mpmath.nint(v)
                    if abs(v - r) > tol:
                        ok = False
                        break
                    ints.append(int(r))
                if not ok:
                    continue
                cand = CycNum(m, ints, scale)
                if not cand.is_zero() and cand * cand == u:
                    return cand
        return None
    finally:
        mpmath.mp.prec = old


# ----------------------------------------------------------------------
# Real-subfield minimal polynomial and discriminant (cross-check oracles)

def real_subfield_minpoly(m: int):
    """Minimal polynomial of zeta_m + zeta_m^(-1), integer coefficients."""
    reps = []
    seen = set()
    for a in range(1, m):
        if gcd(a, m) != 1 or a in seen:
            continue
        seen.add(a)
        seen.add(m - a)
        reps.append(a)
    one = CycNum.from_rational(m, 1)
    # expand prod (x - (zeta^a + zeta^-a)) with CycNum coefficients
    poly = [one]
    for a in reps:
        root = CycNum.zeta(m, a) + CycNum.zeta(m, m - a)
        new = [CycNum.from_rational(m, 0) for _ in range(len(poly) + 1)]
        for i, c in enumerate(poly):
            new[i + 1] = new[i + 1] + c
            new[i] = new[i] - c * root
        poly = new
    out = []
    for c in poly:
        if not c.is_rational():
            raise ArithmeticError("minimal polynomial has irrational coefficient")
        q = c.as_rational()
        if q.denominator != 1:
            raise ArithmeticError("minimal polynomial not integral")
        out.append(q.numerator)
    return out


def poly_discriminant(f) -> Fraction:
    """Discriminant of a polynomial with rational coefficients."""
    f = _poly_trim([Fraction(c) for c in f])
    d = len(f) - 1
    fp = _poly_trim([i * f[i] for i in range(1, d + 1)])
    res = _resultant_frac(f, fp)
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * res / f[-1]
