"""
weilcid weil module - q-symmetric polynomials, the Weil test, enumeration.

A candidate of dimension g is fixed by its free coefficients
(a_{2g-1}, ..., a_g); the remaining ones follow from a_0 = q^g and
a_i = q^{g-i} a_{2g-i}. The general Weil test works on the real companion
h(y) with f(x) = x^g h(x + q/x): f is Weil exactly when every root of h is
real and lies in [-2*sqrt(q), 2*sqrt(q)].
"""

import itertools
import math
from fractions import Fraction
from functools import lru_cache

from weilcid_exact import (
    IntPoly, QuadSurdValue, is_probable_prime, is_square, factor_degrees_mod,
    newton_polygon, poly_eval_surd, squarefree_part, sturm_count, primes_up_to,
)

# Primes tried for a single-factor certificate before the exhaustive search.
CERTIFICATE_PRIMES = tuple(primes_up_to(100))


class WeilCandidate:
    """A monic q-symmetric polynomial of degree 2g; not yet known to be Weil."""
    __slots__ = ("p", "m", "q", "g", "free_coeffs", "poly")

    def __init__(self, p, m, g, free_coeffs, poly):
        self.p = p
        self.m = m
        self.q = p ** m
        self.g = g
        self.free_coeffs = tuple(free_coeffs)
        self.poly = poly

    def coeff(self, i):
        """a_i, with a_{2g} = 1."""
        return self.poly[i]

    @property
    def coefficients(self):
        """(a_0, a_1, ..., a_{2g})."""
        return self.poly.coeffs

    def free_dict(self):
        return {2 * self.g - 1 - j: a for j, a in enumerate(self.free_coeffs)}

    def key(self):
        return (self.p, self.m, self.g, self.free_coeffs)

    def __eq__(self, other):
        if isinstance(other, WeilCandidate):
            return self.key() == other.key()
        return NotImplemented

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return (f"{type(self).__name__}(p={self.p}, m={self.m}, g={self.g}, "
                f"free={self.free_coeffs})")

    def __str__(self):
        return str(self.poly)


class WeilPoly(WeilCandidate):
    """A candidate that passed is_weil."""
    __slots__ = ()

    @classmethod
    def from_candidate(cls, c):
        return cls(c.p, c.m, c.g, c.free_coeffs, c.poly)


def _check_p_m(p, m):
    if not is_probable_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")


def from_free_coeffs(p, m, g, free):
    """Fill in the lower half of the coefficient vector from q-symmetry."""
    free = tuple(int(a) for a in free)
    if g < 1:
        raise ValueError(f"dimension must be >= 1, got {g}")
    if len(free) != g:
        raise ValueError(f"expected {g} free coefficients, got {len(free)}")
    _check_p_m(p, m)
    q = p ** m
    a = [0] * (2 * g + 1)
    a[2 * g] = 1
    for j, c in enumerate(free):
        a[2 * g - 1 - j] = c
    for i in range(g):
        a[i] = q ** (g - i) * a[2 * g - i]
    return WeilCandidate(p, m, g, free, IntPoly(a))


def real_companion(c):
    """h(y) = a_g + sum_k a_{g+k} C_k(y), with C_k(x + q/x) = x^k + (q/x)^k."""
    q, g = c.q, c.g
    y = IntPoly([0, 1])
    prev, cur = IntPoly([2]), y
    h = IntPoly([c.coeff(g)]) + c.coeff(g + 1) * cur
    for k in range(2, g + 1):
        prev, cur = cur, y * cur - q * prev
        h = h + c.coeff(g + k) * cur
    return h


def _interval_ends(q):
    hi = QuadSurdValue.sqrt(q, 2)
    return -hi, hi


def _derivative_endpoint_signs_ok(h, lo, hi):
    # Every derivative of a polynomial with all roots in [lo, hi] has the same
    # property, so its sign at hi is >= 0 and at lo is (-1)^deg or zero.
    d = h
    while d.degree >= 1:
        if poly_eval_surd(d, hi).sign() < 0:
            return False
        s = poly_eval_surd(d, lo).sign()
        if s and s != (-1) ** d.degree:
            return False
        d = d.derivative()
    return True


def is_weil(c):
    """True iff every complex root of c.poly has absolute value sqrt(q)."""
    h = real_companion(c)
    lo, hi = _interval_ends(c.q)
    if not _derivative_endpoint_signs_ok(h, lo, hi):
        return False
    hs = squarefree_part(h)
    if hs.degree == 0:
        return True
    count = sturm_count(hs, lo, hi)
    if poly_eval_surd(hs, lo).sign() == 0:
        count += 1
    return count == hs.degree


def validate_weil(c):
    """Promote a candidate to WeilPoly, or raise ValueError."""
    if not is_weil(c):
        raise ValueError(f"not a Weil {c.q}-polynomial: {c.poly}")
    return WeilPoly.from_candidate(c)


# ---------------------------------------------------------------------------
# Coefficient bounds for dimensions 2 and 3
# ---------------------------------------------------------------------------

def is_weil_dim2(a3, a2, q):
    """|a3| <= 2 floor(2 sqrt q) and 2|a3| sqrt(q) - 2q <= a2 <= a3^2/4 + 2q."""
    if abs(a3) > 2 * math.isqrt(4 * q):
        return False
    if 4 * a2 > a3 * a3 + 8 * q:
        return False
    return QuadSurdValue(-2 * q, 2 * abs(a3), q) <= a2


def dim2_a3_range(q):
    b = 2 * math.isqrt(4 * q)
    return range(-b, b + 1)


def dim2_a2_range(a3, q):
    lo = QuadSurdValue(-2 * q, 2 * abs(a3), q).ceil()
    hi = (a3 * a3 + 8 * q) // 4
    return range(lo, hi + 1)


def _dim3_center27(a5, a4, q):
    # 27 * (-2 a5^3/27 + a5 a4/3 + q a5)
    return -2 * a5 ** 3 + 9 * a5 * a4 + 27 * q * a5


def _dim3_delta(a5, a4, q):
    return a5 * a5 - 3 * a4 + 9 * q


def is_weil_dim3(a5, a4, a3, q):
    """The four coefficient conditions for degree-6 Weil polynomials.

    The reducible family (x^2 - q)^2 (x^2 + beta x + q) is Weil but fails the
    strict right-hand condition; see in_reducible_dim3_family.
    """
    # |a5| < 6 sqrt q
    if a5 * a5 >= 36 * q:
        return False
    # 4 sqrt(q) |a5| - 9q < a4 <= a5^2/3 + 3q
    if a4 + 9 * q <= 0 or 16 * q * a5 * a5 >= (a4 + 9 * q) ** 2:
        return False
    if 3 * a4 > a5 * a5 + 9 * q:
        return False
    # |27 a3 - 27 A| <= 2 delta^(3/2)
    delta = _dim3_delta(a5, a4, q)
    x = 27 * a3 - _dim3_center27(a5, a4, q)
    if x * x > 4 * delta ** 3:
        return False
    # |a3 + 2q a5| < 2 (a4 + q) sqrt q
    if a4 + q <= 0:
        return False
    y = a3 + 2 * q * a5
    return y * y < 4 * q * (a4 + q) ** 2


def in_reducible_dim3_family(a5, a4, a3, q):
    """(x^2 - q)^2 (x^2 + a5 x + q) with |a5| < 2 sqrt q."""
    return a4 == -q and a3 == -2 * q * a5 and a5 * a5 < 4 * q


def dim3_a5_range(q):
    b = math.isqrt(36 * q - 1)
    return range(-b, b + 1)


def dim3_a4_range(a5, q):
    lo = QuadSurdValue(-9 * q, 4 * abs(a5), q).floor() + 1
    hi = (a5 * a5 + 9 * q) // 3
    return range(lo, hi + 1)


def dim3_a3_range(a5, a4, q):
    """Integers allowed for a3 by the last two conditions, given a5 and a4."""
    delta = _dim3_delta(a5, a4, q)
    if delta < 0 or a4 + q <= 0:
        return range(0)
    center = Fraction(_dim3_center27(a5, a4, q), 27)
    # A -/+ (2/27) delta sqrt(delta)
    lo3 = QuadSurdValue(center, Fraction(-2 * delta, 27), delta)
    hi3 = QuadSurdValue(center, Fraction(2 * delta, 27), delta)
    lo4 = QuadSurdValue(-2 * q * a5, -2 * (a4 + q), q)
    hi4 = QuadSurdValue(-2 * q * a5, 2 * (a4 + q), q)
    lo = max(lo3.ceil(), lo4.floor() + 1)
    hi = min(hi3.floor(), hi4.ceil() - 1)
    return range(lo, hi + 1)


# ---------------------------------------------------------------------------
# Irreducibility and p-rank
# ---------------------------------------------------------------------------

def _generic_box(q, g):
    # |a_{2g-k}| <= C(2g, k) q^(k/2)
    return [range(-b, b + 1) for b in
            (math.isqrt(math.comb(2 * g, k) ** 2 * q ** k) for k in range(1, g + 1))]


@lru_cache(maxsize=None)
def _weil_divisor_candidates(p, m, k):
    """Every Weil q-polynomial of degree 2k, reducible ones included."""
    out = []
    for free in itertools.product(*_generic_box(p ** m, k)):
        c = from_free_coeffs(p, m, k, free)
        if is_weil(c):
            out.append(c.poly)
    return tuple(out)


def _has_single_factor_mod(f, primes):
    for l in primes:
        degs = factor_degrees_mod(f, l)
        if degs == [(f.degree, 1)]:
            return True
    return False


def is_irreducible(w, use_mod_certificate=True):
    """Irreducibility over Q for a Weil polynomial with non-square q.

    Every rational factor is either x^2 - q or a Weil q-polynomial of even
    degree, and a reducible f has such a factor of degree at most g.
    """
    if is_square(w.q):
        raise ValueError(f"q = {w.q} is a perfect square")
    f = w.poly
    if use_mod_certificate and _has_single_factor_mod(f, CERTIFICATE_PRIMES):
        return True
    if (f % IntPoly([-w.q, 0, 1])).is_zero():
        return False
    for k in range(1, w.g // 2 + 1):
        for d in _weil_divisor_candidates(w.p, w.m, k):
            if (f % d).is_zero():
                return False
    return True


def p_rank(w):
    """Length of the slope-0 part of the Newton polygon at p."""
    return newton_polygon(w.poly, w.p).length_of_slope(0)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _restrict(rng, value):
    if value is None:
        return rng
    return [value] if value in rng else []


def _weil_candidates(p, m, g, fixed, use_bounds):
    q = p ** m
    if use_bounds and g == 2:
        for a3 in _restrict(dim2_a3_range(q), fixed.get(3)):
            for a2 in _restrict(dim2_a2_range(a3, q), fixed.get(2)):
                if is_weil_dim2(a3, a2, q):
                    yield from_free_coeffs(p, m, g, (a3, a2))
        return
    if use_bounds and g == 3:
        for a5 in _restrict(dim3_a5_range(q), fixed.get(5)):
            for a4 in _restrict(dim3_a4_range(a5, q), fixed.get(4)):
                for a3 in _restrict(dim3_a3_range(a5, a4, q), fixed.get(3)):
                    if is_weil_dim3(a5, a4, a3, q):
                        yield from_free_coeffs(p, m, g, (a5, a4, a3))
        return
    ranges = [_restrict(r, fixed.get(2 * g - k))
              for k, r in enumerate(_generic_box(q, g), start=1)]
    for free in itertools.product(*ranges):
        c = from_free_coeffs(p, m, g, free)
        if is_weil(c):
            yield c


def enumerate_weil(p, g, m=1, fixed=None, use_bounds=True):
    """Irreducible Weil p^m-polynomials of degree 2g, lexicographic in the free coefficients.

    fixed maps a coefficient index (g..2g-1) to a required value.
    """
    fixed = dict(fixed or {})
    for i in fixed:
        if not g <= i <= 2 * g - 1:
            raise ValueError(f"a_{i} is not a free coefficient for g = {g}")
    for c in _weil_candidates(p, m, g, fixed, use_bounds):
        w = WeilPoly.from_candidate(c)
        if is_irreducible(w):
            yield w
