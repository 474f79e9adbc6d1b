"""
weilcid exact module - arbitrary-precision integer and polynomial primitives.

No value is ever rounded. IntPoly is the exchange type of the package; the
heavy lifting (gcds, resultants, Sturm chains, factorization over GF(l) and
over Z) is done by sympy's dense polynomial and ntheory routines, and the
results are converted back to Python ints and fractions.Fraction. Real-root
questions are answered by evaluating Sturm chains at points r + s*sqrt(d).

The other weilcid modules (weil, frobenius, mono) only build on what is
exported here; all functions are pure and safe to call from worker processes.
"""

import math
from fractions import Fraction

from sympy.functions.combinatorial.numbers import mobius as _mobius
from sympy.ntheory import divisors as _divisors
from sympy.ntheory import factorint, isprime, multiplicity, pollard_rho, primerange
from sympy.polys.densebasic import dup_convert
from sympy.polys.densetools import dup_primitive
from sympy.polys.domains import QQ, ZZ
from sympy.polys.euclidtools import dup_discriminant, dup_gcd, dup_resultant
from sympy.polys.galoistools import (
    gf_ddf_zassenhaus, gf_degree, gf_from_int_poly, gf_sqf_list,
)
from sympy.polys.rootisolation import dup_sturm
from sympy.polys.sqfreetools import dup_sqf_part


class InvariantViolation(RuntimeError):
    """An internal cross-check failed; this is a logic bug, not bad input."""


# ---------------------------------------------------------------------------
# Integer polynomials
# ---------------------------------------------------------------------------

class IntPoly:
    """Integer polynomial; coeffs[i] is the coefficient of x**i."""
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def from_descending(cls, coeffs):
        return cls(reversed(list(coeffs)))

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @property
    def degree(self):
        """Index of the leading coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return self.lc == 1

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return IntPoly([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = IntPoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, divisor):
        """Division by a monic integer polynomial; stays inside Z[x]."""
        divisor = _as_poly(divisor)
        if not divisor.is_monic():
            raise ValueError("integer division requires a monic divisor")
        rem = list(self.coeffs)
        dd = divisor.degree
        if len(rem) - 1 < dd:
            return IntPoly([]), IntPoly(rem)
        quot = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1 - dd, -1, -1):
            c = rem[k + dd]
            quot[k] = c
            if c:
                for j, b in enumerate(divisor.coeffs):
                    rem[k + j] -= c * b
        return IntPoly(quot), IntPoly(rem[:dd])

    def __floordiv__(self, divisor):
        return divmod(self, divisor)[0]

    def __mod__(self, divisor):
        return divmod(self, divisor)[1]

    def derivative(self):
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def content(self):
        return math.gcd(*self.coeffs) if self.coeffs else 0


def _as_poly(obj):
    if isinstance(obj, IntPoly):
        return obj
    if isinstance(obj, int):
        return IntPoly([obj])
    raise TypeError(f"cannot use {type(obj).__name__} as a polynomial")


def poly_eval(f, x):
    """Exact Horner evaluation; x may be an int or a Fraction."""
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# Conversions to and from sympy's dense (descending) representation
# ---------------------------------------------------------------------------

def _to_zz(f):
    return [ZZ(c) for c in reversed(f.coeffs)]


def _from_zz(h):
    return IntPoly(int(c) for c in reversed(h))


def _to_fractions(h):
    """Descending QQ coefficients -> ascending list of Fraction."""
    return [Fraction(int(QQ.numer(c)), int(QQ.denom(c))) for c in reversed(h)]


def _primitive_positive(h):
    _, h = dup_primitive(h, ZZ)
    if h and h[0] < 0:
        h = [-c for c in h]
    return _from_zz(h)


def poly_gcd(f, h):
    """Greatest common divisor over Q, returned as a primitive IntPoly."""
    return _primitive_positive(dup_gcd(_to_zz(f), _to_zz(h), ZZ))


def squarefree_part(f):
    """f divided by gcd(f, f'), primitive with positive leading coefficient."""
    return _from_zz(dup_sqf_part(_to_zz(f), ZZ))


def resultant(f, h):
    return int(dup_resultant(_to_zz(f), _to_zz(h), ZZ))


def discriminant(f):
    """disc(f) = (-1)^(n(n-1)/2) * res(f, f') / lc(f)."""
    if f.degree < 1:
        raise ValueError("discriminant of a constant polynomial")
    return int(dup_discriminant(_to_zz(f), ZZ))


# ---------------------------------------------------------------------------
# Values r + s*sqrt(d)
# ---------------------------------------------------------------------------

def is_square(n):
    return n >= 0 and math.isqrt(n) ** 2 == n


class QuadSurdValue:
    """Exact value rational_part + surd_part*sqrt(radicand).

    A perfect-square radicand is folded into rational_part at construction;
    a purely rational value carries surd_part 0 and radicand 0.
    """
    __slots__ = ("rational_part", "surd_part", "radicand")

    def __init__(self, rational_part, surd_part=0, radicand=0):
        r = Fraction(rational_part)
        s = Fraction(surd_part)
        d = int(radicand)
        if d < 0:
            raise ValueError("radicand must be non-negative")
        if s == 0 or d == 0:
            s, d = Fraction(0), 0
        elif is_square(d):
            r += s * math.isqrt(d)
            s, d = Fraction(0), 0
        self.rational_part = r
        self.surd_part = s
        self.radicand = d

    @classmethod
    def sqrt(cls, d, scale=1):
        """scale*sqrt(d)."""
        return cls(0, scale, d)

    def is_rational(self):
        return self.surd_part == 0

    def _lift(self, other):
        if isinstance(other, QuadSurdValue):
            return other
        return QuadSurdValue(other)

    def _radicand_with(self, other):
        if self.radicand and other.radicand and self.radicand != other.radicand:
            raise ValueError(f"mixed radicands {self.radicand} and {other.radicand}")
        return self.radicand or other.radicand

    def __add__(self, other):
        other = self._lift(other)
        d = self._radicand_with(other)
        return QuadSurdValue(self.rational_part + other.rational_part,
                             self.surd_part + other.surd_part, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadSurdValue(-self.rational_part, -self.surd_part, self.radicand)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        d = self._radicand_with(other)
        a, b = self.rational_part, self.surd_part
        c, e = other.rational_part, other.surd_part
        return QuadSurdValue(a * c + b * e * d, a * e + b * c, d)

    __rmul__ = __mul__

    def sign(self):
        u, w, d = self.rational_part, self.surd_part, self.radicand
        su = (u > 0) - (u < 0)
        sw = (w > 0) - (w < 0)
        if sw == 0:
            return su
        if su == 0 or su == sw:
            return sw
        # opposite signs: the larger square wins
        lhs, rhs = u * u, w * w * d
        if lhs == rhs:
            return 0
        return su if lhs > rhs else sw

    def __eq__(self, other):
        if isinstance(other, (QuadSurdValue, int, Fraction)):
            return (self - other).sign() == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.rational_part, self.surd_part, self.radicand))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def floor(self):
        """Largest integer <= self, without leaving exact arithmetic."""
        r, s, d = self.rational_part, self.surd_part, self.radicand
        if s == 0:
            return math.floor(r)
        t = s * s * d
        approx = Fraction(math.isqrt(t.numerator * t.denominator), t.denominator)
        m = math.floor(r + (approx if s > 0 else -approx))
        while (self - (m + 1)).sign() >= 0:
            m += 1
        while (self - m).sign() < 0:
            m -= 1
        return m

    def ceil(self):
        return -(-self).floor()

    def __repr__(self):
        return (f"QuadSurdValue({self.rational_part}, {self.surd_part}, "
                f"{self.radicand})")


def _eval_surd(coeffs, x):
    acc = QuadSurdValue(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_eval_surd(f, x):
    """Evaluate an integer polynomial at a QuadSurdValue exactly."""
    return _eval_surd(f.coeffs, x)


# ---------------------------------------------------------------------------
# Sturm chains
# ---------------------------------------------------------------------------

def sturm_sequence(h):
    """Sturm chain of the squarefree part of h, as ascending Fraction lists."""
    chain = dup_sturm(dup_convert(_to_zz(h), ZZ, QQ), QQ)
    return [_to_fractions(c) for c in chain]


def _sign_variations(chain, x):
    signs = []
    for c in chain:
        s = _eval_surd(c, x).sign()
        if s:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(h, lo, hi):
    """Number of distinct real roots of a squarefree h in (lo, hi]."""
    if h.is_zero():
        raise ValueError("Sturm count of the zero polynomial")
    if h.degree == 0:
        return 0
    if poly_gcd(h, h.derivative()).degree > 0:
        raise ValueError(f"polynomial is not squarefree: {h}")
    lo = lo if isinstance(lo, QuadSurdValue) else QuadSurdValue(lo)
    hi = hi if isinstance(hi, QuadSurdValue) else QuadSurdValue(hi)
    if not lo < hi:
        raise ValueError("Sturm count needs lo < hi")
    chain = sturm_sequence(h)
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


# ---------------------------------------------------------------------------
# Newton polygons
# ---------------------------------------------------------------------------

def valuation(n, p):
    if n == 0:
        raise ValueError("valuation of zero")
    return int(multiplicity(p, n))


class NewtonPolygon:
    """Lower convex hull as (slope, horizontal_length) pairs, slopes increasing."""
    __slots__ = ("segments",)

    def __init__(self, segments):
        self.segments = tuple((Fraction(s), int(n)) for s, n in segments)

    def slopes(self):
        return [s for s, _ in self.segments]

    def length(self):
        return sum(n for _, n in self.segments)

    def length_of_slope(self, slope):
        return sum(n for s, n in self.segments if s == slope)

    def __eq__(self, other):
        if isinstance(other, NewtonPolygon):
            return self.segments == other.segments
        if isinstance(other, (list, tuple)):
            return self.segments == NewtonPolygon(other).segments
        return NotImplemented

    def __repr__(self):
        return "NewtonPolygon([" + ", ".join(
            f"({s}, {n})" for s, n in self.segments) + "])"


def newton_polygon(f, p):
    """Lower hull of (i, v_p(a_i)); zero coefficients are points at infinity."""
    pts = [(i, valuation(c, p)) for i, c in enumerate(f.coeffs) if c != 0]
    hull = []
    for pt in pts:
        # drop the middle point when it lies on or above the chord
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (pt[1] - y1) - (y2 - y1) * (pt[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(pt)
    return NewtonPolygon(
        (Fraction(y2 - y1, x2 - x1), x2 - x1)
        for (x1, y1), (x2, y2) in zip(hull, hull[1:]))


# ---------------------------------------------------------------------------
# Factor degrees over GF(l)
# ---------------------------------------------------------------------------

def factor_degrees_mod(f, l):
    """Sorted (degree, multiplicity) pairs, one per irreducible factor of f mod l."""
    red = gf_from_int_poly(_to_zz(f), l)
    if not red:
        raise ValueError(f"polynomial vanishes modulo {l}")
    out = []
    _, sqf = gf_sqf_list(red, l, ZZ)
    for fac, mult in sqf:
        for part, deg in gf_ddf_zassenhaus(fac, l, ZZ):
            out.extend([(deg, mult)] * (gf_degree(part) // deg))
    return sorted(out)


# ---------------------------------------------------------------------------
# Integer factorization
# ---------------------------------------------------------------------------

# factorint stops trial division here and hands larger cofactors to rho.
TRIAL_DIVISION_BOUND = 10 ** 4
# Seed for pollard_rho when none is passed.
_factor_seed = 0
# Steps per rho attempt before the cofactor goes to a full factorint.
RHO_MAX_STEPS = 1 << 16


def primes_up_to(n):
    return [int(p) for p in primerange(2, n + 1)]


def is_probable_prime(n):
    """Exact below 2^64, Baillie-PSW above."""
    return n >= 2 and isprime(n)


class Factorization:
    """Prime -> exponent map whose product is the factored value."""
    __slots__ = ("factors",)

    def __init__(self, factors=None):
        self.factors = {int(p): int(e) for p, e in dict(factors or {}).items() if e}

    def value(self):
        out = 1
        for p, e in self.factors.items():
            out *= p ** e
        return out

    def primes(self):
        return sorted(self.factors)

    def items(self):
        return sorted(self.factors.items())

    def __getitem__(self, p):
        return self.factors.get(p, 0)

    def __contains__(self, p):
        return p in self.factors

    def __iter__(self):
        return iter(self.primes())

    def __len__(self):
        return len(self.factors)

    def __eq__(self, other):
        if isinstance(other, Factorization):
            return self.factors == other.factors
        if isinstance(other, dict):
            return self.factors == other
        return NotImplemented

    def __mul__(self, other):
        out = dict(self.factors)
        for p, e in other.factors.items():
            out[p] = out.get(p, 0) + e
        return Factorization(out)

    def lcm(self, other):
        out = dict(self.factors)
        for p, e in other.factors.items():
            out[p] = max(out.get(p, 0), e)
        return Factorization(out)

    def __repr__(self):
        return f"Factorization({dict(self.items())})"


def set_factor_seed(seed):
    global _factor_seed
    _factor_seed = int(seed)


def factorize(n, seed=None):
    """Trial division to TRIAL_DIVISION_BOUND, then seeded Pollard rho.

    Cofactors rho cannot split are handed to a full factorint. The seed only
    changes the path taken, never the factorization.
    """
    if seed is None:
        seed = _factor_seed
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = {}
    stack = list(factorint(n, limit=TRIAL_DIVISION_BOUND).items())
    while stack:
        m, e = stack.pop()
        m = int(m)
        if m == 1:
            continue
        if isprime(m):
            out[m] = out.get(m, 0) + e
            continue
        d = pollard_rho(m, retries=2, seed=seed, max_steps=RHO_MAX_STEPS)
        if d is None:
            stack.extend((pm, pe * e) for pm, pe in factorint(m).items())
        else:
            stack.extend(((d, e), (m // d, e)))
    return Factorization(out)


def divisors(n):
    return [int(d) for d in _divisors(n)]


def mobius(n):
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    return int(_mobius(n))
