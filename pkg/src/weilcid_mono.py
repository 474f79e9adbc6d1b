"""
weilcid mono module - group orders, irreducible counts and the common index
divisor test for the n-division field.

Under the full-image hypothesis p is unramified in Q(A[n]) and every prime
above p has inertia degree ord_n(sigma_p), so there are |GSp_2g(Z/nZ)| / ord
of them. p is a common index divisor exactly when that count exceeds the
number of monic irreducible polynomials of degree ord over F_p.
"""

import math
from functools import lru_cache

from weilcid_exact import (
    InvariantViolation, divisors, factorize, is_probable_prime, mobius, poly_eval,
)
from weilcid_frobenius import (
    NotCoprimeError, frobenius_matrix, matrix_order_mod, reduce_mod,
)

HYPOTHESIS_NOTE = (
    "CID verdicts assume the mod-n Galois representation is surjective onto "
    "GSp_2g(Z/nZ) and that the endomorphism ring of the reduction is Z[pi, v]."
)


@lru_cache(maxsize=None)
def irred_count(m, p):
    """Number of monic irreducible polynomials of degree m over F_p."""
    if m < 1:
        raise ValueError(f"degree must be >= 1, got {m}")
    if not is_probable_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    total = sum(p ** d * mobius(m // d) for d in divisors(m))
    count, rem = divmod(total, m)
    if rem:
        raise InvariantViolation(f"necklace sum for m={m}, p={p} not divisible by m")
    return count


@lru_cache(maxsize=None)
def gsp_order(g, n):
    """|GSp_2g(Z/nZ)|."""
    if g < 1:
        raise ValueError(f"dimension must be >= 1, got {g}")
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    dim = 2 * g * g + g + 1
    out = 1
    for l, e in factorize(n).items():
        base = (l - 1) * l ** (g * g)
        for i in range(1, g + 1):
            base *= l ** (2 * i) - 1
        out *= base * l ** (dim * (e - 1))
    return out


def monogenic_degree_bound(order, p):
    """Largest degree a monogenic field can have when p has inertia degree order."""
    return order * irred_count(order, p)


@lru_cache(maxsize=4096)
def _frobenius(w):
    return frobenius_matrix(w)


# Orders of sigma_p modulo prime powers, shared by every n of one survey.
ORDER_CACHE_SIZE = 1 << 14


@lru_cache(maxsize=ORDER_CACHE_SIZE)
def _prime_power_order(w, modulus):
    return matrix_order_mod(reduce_mod(_frobenius(w), modulus))


def _check_modulus(w, n):
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    if math.gcd(n, w.p) != 1:
        raise NotCoprimeError(f"n = {n} is not prime to p = {w.p}")


def complete_splitting_guard(w, n, order):
    """p splits completely in Q(A[n]) only if n^(2g) divides f(1)."""
    if order == 1 and poly_eval(w.poly, 1) % n ** (2 * w.g):
        raise InvariantViolation(
            f"sigma_p is trivial mod {n} but {n}^{2 * w.g} does not divide f(1)")


def sigma_order(w, n):
    """ord_n(sigma_p), as the lcm of its orders modulo the prime powers of n."""
    _check_modulus(w, n)
    order = 1
    for l, e in factorize(n).items():
        t = _prime_power_order(w, l ** e)
        order = order * t // math.gcd(order, t)
    complete_splitting_guard(w, n, order)
    gsp = gsp_order(w.g, n)
    if gsp % order:
        raise InvariantViolation(f"order {order} does not divide |GSp| = {gsp} for n = {n}")
    return order


def _cid_from_order(g, n, p, order):
    gsp = gsp_order(g, n)
    # order * irred(order, p) >= p^(order-1) >= 2^(order-1) > gsp
    if order >= 4 and order - 1 >= gsp.bit_length():
        return False
    necklace = sum(p ** d * mobius(order // d) for d in divisors(order))
    cid = gsp > necklace
    if cid != (gsp // order > irred_count(order, p)):
        raise InvariantViolation(
            f"CID formulations disagree for n={n}, order={order}, p={p}")
    return cid


def is_common_index_divisor(w, n):
    return _cid_from_order(w.g, n, w.p, sigma_order(w, n))


class SplittingReport:
    """How p splits in Q(A[n]) under the full-image hypothesis."""
    __slots__ = ("n", "inertia_degree", "prime_count", "ramification_index",
                 "cid", "hypothesis_note")

    def __init__(self, n, inertia_degree, prime_count, cid):
        self.n = n
        self.inertia_degree = inertia_degree
        self.prime_count = prime_count
        self.ramification_index = 1
        self.cid = cid
        self.hypothesis_note = HYPOTHESIS_NOTE

    def as_dict(self):
        return {
            "n": self.n,
            "inertia_degree": self.inertia_degree,
            "prime_count": self.prime_count,
            "ramification_index": self.ramification_index,
            "cid": self.cid,
        }

    def __repr__(self):
        return (f"SplittingReport(n={self.n}, inertia_degree={self.inertia_degree}, "
                f"prime_count={self.prime_count}, cid={self.cid})")


def splitting_report(w, n):
    order = sigma_order(w, n)
    gsp = gsp_order(w.g, n)
    count, rem = divmod(gsp, order)
    if rem:
        raise InvariantViolation(f"|GSp| / order is not exact for n = {n}")
    return SplittingReport(n, order, count, _cid_from_order(w.g, n, w.p, order))
