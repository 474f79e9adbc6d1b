"""
weilcid frobenius module - the Frobenius matrix on Z[pi, v] and its orders mod n.

Basis order is fixed as (1, pi, ..., pi^g, v, v^2, ..., v^{g-1}) and every
matrix is column-action: column j holds the coordinates of (element * b_j).
Exact matrices are numpy object arrays of Python ints; residue matrices
switch to int64 whenever no product sum can overflow.
"""

import math
from fractions import Fraction

import numpy as np

from weilcid_exact import (
    Factorization, InvariantViolation, IntPoly, discriminant, factor_degrees_mod,
    factorize, is_probable_prime,
)

APPLICABLE_CERTAIN = "certain"
APPLICABLE_UNKNOWN = "unknown"

_INT64_LIMIT = 2 ** 63


class NotCoprimeError(ValueError):
    """The modulus shares a factor with q, so the matrix is not invertible mod n."""


def basis(g):
    if g < 2:
        raise ValueError(f"the matrix construction needs g >= 2, got {g}")
    pis = ["1", "pi"] + [f"pi^{i}" for i in range(2, g + 1)]
    vs = ["v"] + [f"v^{i}" for i in range(2, g)]
    return tuple(pis + vs)


def _zeros(size):
    return np.array([[0] * size for _ in range(size)], dtype=object)


def _identity(size):
    out = _zeros(size)
    for i in range(size):
        out[i, i] = 1
    return out


class FrobeniusMatrix:
    """Integer 2g x 2g matrix of multiplication by pi (or v) on Z[pi, v]."""
    __slots__ = ("g", "q", "entries")

    def __init__(self, g, q, entries):
        self.g = g
        self.q = q
        self.entries = entries

    @property
    def size(self):
        return 2 * self.g

    def tolist(self):
        return [[int(x) for x in row] for row in self.entries]

    def __matmul__(self, other):
        other = other.entries if isinstance(other, FrobeniusMatrix) else other
        return self.entries.dot(other)

    def charpoly(self):
        return charpoly(self.entries)

    def det(self):
        return determinant(self.entries)

    def __repr__(self):
        return f"FrobeniusMatrix(g={self.g}, q={self.q}, {self.tolist()})"


def _check_dim(w):
    if w.g < 2:
        raise ValueError(f"the matrix construction needs g >= 2, got {w.g}")


def frobenius_matrix(w):
    """Multiplication by pi in the basis (1, pi, ..., pi^g, v, ..., v^{g-1})."""
    _check_dim(w)
    g, q = w.g, w.q
    a = w.coeff
    m = _zeros(2 * g)
    for i in range(g):
        m[i + 1, i] = 1
    m[0, g + 1] = q
    for j in range(2, g):
        m[g + j - 1, g + j] = q
    # pi^{g+1} from f(pi) / pi^{g-1} = 0
    m[0, g] = -q * a(g + 1)
    for j in range(1, g + 1):
        m[j, g] = -a(g - 1 + j)
    for k in range(1, g):
        m[g + k, g] = -q * a(g + 1 + k)
    return FrobeniusMatrix(g, q, m)


def verschiebung_matrix(w):
    """Multiplication by v = q/pi in the same basis."""
    _check_dim(w)
    g, q = w.g, w.q
    a = w.coeff
    m = _zeros(2 * g)
    m[g + 1, 0] = 1
    for i in range(1, g + 1):
        m[i - 1, i] = q
    for j in range(1, g - 1):
        m[g + j + 1, g + j] = 1
    # v^g from f(pi) / pi^g = 0
    last = 2 * g - 1
    m[0, last] = -a(g)
    for j in range(1, g):
        m[j, last] = -a(g + j)
        m[g + j, last] = -a(g + j)
    m[g, last] = -1
    return FrobeniusMatrix(g, q, m)


def charpoly(m):
    """det(xI - M) by Faddeev-LeVerrier; every division by k is exact."""
    m = np.asarray(m, dtype=object)
    n = m.shape[0]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = _zeros(n)
    ident = _identity(n)
    for k in range(1, n + 1):
        mk = m.dot(mk) + coeffs[n - k + 1] * ident
        tr = int(np.trace(m.dot(mk)))
        c, rem = divmod(-tr, k)
        if rem:
            raise InvariantViolation(f"inexact Faddeev-LeVerrier step {k}")
        coeffs[n - k] = c
    return IntPoly(coeffs)


def determinant(m):
    n = np.asarray(m).shape[0]
    c0 = charpoly(m)[0]
    return -c0 if n % 2 else c0


# ---------------------------------------------------------------------------
# Residue matrices
# ---------------------------------------------------------------------------

class ModMatrix:
    """Square matrix over Z/nZ with entries kept in [0, n)."""
    __slots__ = ("n", "entries")

    def __init__(self, entries, n):
        if n < 2:
            raise ValueError(f"modulus must be >= 2, got {n}")
        self.n = n
        rows = np.asarray(entries, dtype=object) % n
        size = rows.shape[0]
        if (n - 1) ** 2 * size < _INT64_LIMIT:
            self.entries = rows.astype(np.int64)
        else:
            self.entries = rows

    @classmethod
    def _wrap(cls, entries, n):
        obj = cls.__new__(cls)
        obj.n = n
        obj.entries = entries
        return obj

    @classmethod
    def identity(cls, size, n):
        return cls(_identity(size), n)

    @property
    def size(self):
        return self.entries.shape[0]

    def __matmul__(self, other):
        if other.n != self.n:
            raise ValueError("moduli differ")
        return ModMatrix._wrap(self.entries.dot(other.entries) % self.n, self.n)

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative matrix power")
        result = ModMatrix.identity(self.size, self.n)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_identity(self):
        return bool(np.array_equal(self.entries, np.eye(self.size, dtype=np.int64)))

    def lift(self):
        """Entries as an object array of Python ints."""
        return np.array([[int(x) for x in row] for row in self.entries], dtype=object)

    def tolist(self):
        return [[int(x) for x in row] for row in self.entries]

    def __eq__(self, other):
        if isinstance(other, ModMatrix):
            return self.n == other.n and self.tolist() == other.tolist()
        return NotImplemented

    def __repr__(self):
        return f"ModMatrix(n={self.n}, {self.tolist()})"


def reduce_mod(m, n):
    if isinstance(m, FrobeniusMatrix):
        m = m.entries
    return ModMatrix(m, n)


def _multiple_of_order_mod_prime(lifted, l):
    """Factorization of a multiple of the order of M mod l, from charpoly data."""
    degs = factor_degrees_mod(charpoly(lifted), l)
    s_max = max(mult for _, mult in degs)
    k = 0
    while l ** k < s_max:
        k += 1
    total = Factorization({l: k})
    for d in sorted({d for d, _ in degs}):
        total = total.lcm(factorize(l ** d - 1))
    return total


def _order_from_multiple(mat, multiple):
    """Strip primes from a known multiple while M^(t/r) stays the identity."""
    exps = dict(multiple.factors)
    t = multiple.value()
    for r in multiple.primes():
        while exps[r] and (mat ** (t // r)).is_identity():
            t //= r
            exps[r] -= 1
    return t, Factorization(exps)


def matrix_order_mod(mat):
    """Least t >= 1 with M^t = I mod n, computed per prime power and combined by lcm."""
    n = mat.n
    lifted = mat.lift()
    det = determinant(lifted)
    if math.gcd(det, n) != 1:
        raise NotCoprimeError(f"matrix is not invertible modulo {n} (det = {det})")
    order = Factorization()
    for l, e in factorize(n).items():
        mod_l = reduce_mod(lifted, l)
        t, t_fac = _order_from_multiple(mod_l, _multiple_of_order_mod_prime(lifted, l))
        power = reduce_mod(lifted, l ** e) ** t
        j = 0
        while not power.is_identity():
            power = power ** l
            j += 1
            if j > e - 1:
                raise InvariantViolation(
                    f"order lift modulo {l}^{e} needed more than {e - 1} steps")
        order = order.lcm(t_fac * Factorization({l: j}))
    result = order.value()
    _check_minimal_order(mat, result, order)
    return result


def _check_minimal_order(mat, t, t_fac):
    if not (mat ** t).is_identity():
        raise InvariantViolation(f"M^{t} is not the identity mod {mat.n}")
    for r in t_fac.primes():
        if (mat ** (t // r)).is_identity():
            raise InvariantViolation(f"order {t} mod {mat.n} is not minimal at {r}")


# ---------------------------------------------------------------------------
# Discriminant of Z[pi, v]
# ---------------------------------------------------------------------------

def _power_sums(f, count):
    """Newton power sums s_0 .. s_{count-1} of the roots of a monic f."""
    n = f.degree
    c = f.coeffs
    s = [n]
    for k in range(1, count):
        acc = 0
        for i in range(1, min(k, n + 1)):
            acc += c[n - i] * s[k - i]
        if k <= n:
            acc += k * c[n - k]
        s.append(-acc)
    return s


def _reduce(poly, f):
    """Reduce a Fraction coefficient list modulo the monic f."""
    poly = list(poly)
    n = f.degree
    for k in range(len(poly) - 1, n - 1, -1):
        c = poly[k]
        if c:
            for i, fc in enumerate(f.coeffs):
                poly[k - n + i] -= c * fc
    return (poly + [Fraction(0)] * n)[:n]


def _mul_mod(a, b, f):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _reduce(out, f)


def _fraction_det(rows):
    rows = [list(r) for r in rows]
    n = len(rows)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        for r in range(col + 1, n):
            factor = rows[r][col] / rows[col][col]
            if factor:
                for k in range(col, n):
                    rows[r][k] -= factor * rows[col][k]
    return det


def _basis_elements(w):
    """Basis of Z[pi, v] as coefficient lists in Q[x]/(f), with pi = x."""
    f, g, q = w.poly, w.g, w.q
    n = 2 * g
    elems = []
    for i in range(g + 1):
        e = [Fraction(0)] * n
        e[i] = Fraction(1)
        elems.append(e)
    a0 = f[0]
    x_inv = [Fraction(-f[i + 1], a0) for i in range(n)]
    v = [q * c for c in x_inv]
    vk = v
    for _ in range(1, g):
        elems.append(vk)
        vk = _mul_mod(vk, v, f)
    return elems


def order_discriminant(w):
    """disc(Z[pi, v]) from the trace form, checked against disc(f) / q^(g(g-1))."""
    f, g, q = w.poly, w.g, w.q
    elems = _basis_elements(w)
    sums = _power_sums(f, 2 * g)
    gram = []
    for bi in elems:
        row = []
        for bj in elems:
            prod = _mul_mod(bi, bj, f)
            row.append(sum(c * s for c, s in zip(prod, sums)))
        gram.append(row)
    det = _fraction_det(gram)
    if det.denominator != 1:
        raise InvariantViolation(f"non-integral trace-form determinant {det}")
    by_trace = int(det)
    disc_f = discriminant(f)
    by_index, rem = divmod(disc_f, q ** (g * (g - 1)))
    if rem or by_index != by_trace:
        raise InvariantViolation(
            f"order discriminant mismatch: trace form {by_trace}, "
            f"disc(f)/q^(g(g-1)) = {disc_f}/{q ** (g * (g - 1))}")
    return by_trace


def guaranteed_applicable(w, l):
    """'certain' when l does not divide disc(Z[pi, v]), else 'unknown'."""
    if l == w.p:
        raise ValueError(f"l must differ from p = {w.p}")
    if not is_probable_prime(l):
        raise ValueError(f"l must be prime, got {l}")
    if order_discriminant(w) % l:
        return APPLICABLE_CERTAIN
    return APPLICABLE_UNKNOWN
