"""Finite fields GF(p^m) tuned for bulk projective-plane work.

Elements are plain Python ints in [0, p^m): the coefficient vector of the
residue polynomial, packed base p with the low degree in the least
significant digit. The packing makes equality, hashing and serialization
trivial, keeps the additive identity at literal 0 and the multiplicative
identity at literal 1, and lets integer residues < p act directly as the
constants they embed to.

For odd q up to a budget the field builds discrete-log tables (exp, log and
Zech logarithms), which turn multiplication, addition, inversion and square
roots into a handful of list lookups. Larger fields fall back to digitwise
polynomial arithmetic. The table arrays also feed the fiber-counting kernel.
"""

import math

from .errors import UsageError

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Beyond this order the log tables stop paying for themselves in memory.
TABLE_BUDGET = 1 << 21


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for anything we can afford to scan."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def odd_primes(count: int):
    """Yield the first `count` odd primes in increasing order."""
    found = 0
    n = 3
    while found < count:
        if is_prime(n):
            yield n
            found += 1
        n += 2


def _trial_factor(n):
    factors = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors.add(d)
            n //= d
        d += 1
    if n > 1:
        factors.add(n)
    return factors


# ---------------------------------------------------------------------------
# dense polynomial arithmetic over F_p, little-endian coefficient lists

def _poly_mul_mod(a, b, modulus, p):
    m = len(modulus) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = (out[i + j] + ai * bj) % p
    for i in range(len(out) - 1, m - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(m):
                out[i - m + j] = (out[i - m + j] - c * modulus[j]) % p
    out = out[:m]
    out.extend([0] * (m - len(out)))
    return out


def _poly_pow_x(exp, modulus, p):
    """x^exp reduced mod a monic modulus."""
    m = len(modulus) - 1
    result = [1] + [0] * (m - 1)
    base = ([0, 1] + [0] * (m - 2)) if m > 1 else [(-modulus[0]) % p]
    while exp:
        if exp & 1:
            result = _poly_mul_mod(result, base, modulus, p)
        base = _poly_mul_mod(base, base, modulus, p)
        exp >>= 1
    return result


def _poly_gcd(a, b, p):
    a = list(a)
    b = list(b)
    while any(b):
        while a and a[-1] == 0:
            a.pop()
        while b and b[-1] == 0:
            b.pop()
        if not b:
            break
        if len(a) < len(b):
            a, b = b, a
            continue
        inv = pow(b[-1], p - 2, p)
        shift = len(a) - len(b)
        c = a[-1] * inv % p
        for i, bi in enumerate(b):
            a[i + shift] = (a[i + shift] - c * bi) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def is_irreducible(coeffs, p) -> bool:
    """Rabin's test for a monic polynomial over F_p, given little-endian."""
    m = len(coeffs) - 1
    if m < 1 or coeffs[-1] != 1:
        return False
    if m == 1:
        return True
    if coeffs[0] == 0:
        return False
    # x^(p^m) == x mod f, and gcd(x^(p^(m/r)) - x, f) = 1 for prime r | m
    xq = _poly_pow_x(p ** m, coeffs, p)
    expect = [0, 1] + [0] * (m - 2)
    if xq != expect:
        return False
    for r in _trial_factor(m):
        xk = _poly_pow_x(p ** (m // r), coeffs, p)
        xk = list(xk)
        xk[1] = (xk[1] - 1) % p
        if len(_poly_gcd(xk, list(coeffs), p)) > 1:
            return False
    return True


def make_extension(p: int, m: int) -> "FiniteField":
    """GF(p^m) with the minimal monic irreducible modulus.

    Minimal means smallest when the non-leading coefficient vector is packed
    as a base-p integer, low degree least significant. That yields t for
    m = 1, t^2 + 1 over F_3 and t^2 + 2 over F_5.
    """
    if not is_prime(p):
        raise UsageError(f"{p} is not prime")
    if m < 1:
        raise UsageError("extension degree must be >= 1")
    for packed in range(p ** m):
        digits = []
        k = packed
        for _ in range(m):
            digits.append(k % p)
            k //= p
        candidate = digits + [1]
        if is_irreducible(candidate, p):
            return FiniteField(p, m, tuple(candidate))
    raise AssertionError("unreachable: irreducibles of every degree exist")


class FiniteField:
    """GF(p^m) acting on int-encoded elements."""

    __slots__ = ("p", "m", "q", "modulus", "_exp", "_log", "_zech", "_neg",
                 "_np_tables")

    is_field = True

    def __init__(self, p, m=1, modulus=None, tables="auto"):
        if not is_prime(p):
            raise UsageError(f"{p} is not prime")
        if m < 1:
            raise UsageError("extension degree must be >= 1")
        if modulus is None:
            if m == 1:
                modulus = (0, 1)
            else:
                modulus = make_extension(p, m).modulus
        modulus = tuple(c % p for c in modulus[:-1]) + (modulus[-1],)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise UsageError("modulus must be monic of degree m")
        if not is_irreducible(modulus, p):
            raise UsageError("modulus is reducible")
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = modulus
        self._exp = self._log = self._zech = self._neg = None
        self._np_tables = None
        if tables is True or (tables == "auto" and m > 1 and p != 2
                              and self.q <= TABLE_BUDGET):
            self.ensure_tables()

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return (isinstance(other, FiniteField)
                and (self.p, self.m, self.modulus)
                == (other.p, other.m, other.modulus))

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    # -- encoding ----------------------------------------------------------

    def coeffs(self, a):
        """Residue-polynomial coefficients of an element, little-endian."""
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def element(self, coeffs):
        v = 0
        for c in reversed(list(coeffs)):
            v = v * self.p + c % self.p
        return v

    def embed(self, n: int):
        """The field constant an integer reduces to."""
        return n % self.p

    def elements(self):
        return range(self.q)

    # -- arithmetic --------------------------------------------------------

    def add(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        if self._log is not None:
            if a == 0:
                return b
            if b == 0:
                return a
            log = self._log
            d = log[b] - log[a]
            if d < 0:
                d += self.q - 1
            z = self._zech[d]
            return 0 if z < 0 else self._exp[log[a] + z]
        return self.element(x + y for x, y in zip(self.coeffs(a), self.coeffs(b)))

    def neg(self, a):
        if self.m == 1:
            return -a % self.p
        if self._neg is not None:
            return self._neg[a]
        return self.element(-c for c in self.coeffs(a))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[self._log[a] + self._log[b]]
        prod = _poly_mul_mod(list(self.coeffs(a)), list(self.coeffs(b)),
                             self.modulus, self.p)
        return self.element(prod)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        if self._log is not None:
            return self._exp[self.q - 1 - self._log[a]]
        return self.pow(a, self.q - 2)

    def pow(self, a, e):
        if self.m == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 1 if e == 0 else 0
        e %= self.q - 1
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def chi(self, a):
        """Quadratic character: 0 on zero, +1 on squares, -1 otherwise."""
        if self.p == 2:
            raise UsageError("quadratic character undefined in characteristic 2")
        if a == 0:
            return 0
        if self._log is not None:
            return -1 if self._log[a] & 1 else 1
        return 1 if self.pow(a, (self.q - 1) // 2) == 1 else -1

    def sqrt(self, a):
        """All square roots of a, as a sorted tuple of size 0, 1 or 2."""
        if self.p == 2:
            raise UsageError("square roots unsupported in characteristic 2")
        if a == 0:
            return (0,)
        if self._log is not None:
            l = self._log[a]
            if l & 1:
                return ()
            r = self._exp[l >> 1]
            s = self._neg[r]
            return (r, s) if r < s else (s, r)
        if self.chi(a) != 1:
            return ()
        q = self.q
        if q % 4 == 3:
            r = self.pow(a, (q + 1) // 4)
        else:
            r = self._tonelli_shanks(a)
        s = self.neg(r)
        return (r, s) if r < s else (s, r)

    def _tonelli_shanks(self, a):
        q = self.q
        s = 0
        t = q - 1
        while t % 2 == 0:
            t //= 2
            s += 1
        z = 2
        while self.chi(z) != -1:
            z += 1
        c = self.pow(z, t)
        r = self.pow(a, (t + 1) // 2)
        u = self.pow(a, t)
        k = s
        while u != 1:
            d = u
            i = 0
            while d != 1:
                d = self.mul(d, d)
                i += 1
            b = self.pow(c, 1 << (k - i - 1))
            r = self.mul(r, b)
            c = self.mul(b, b)
            u = self.mul(u, c)
            k = i
        return r

    # -- log tables ---------------------------------------------------------

    def ensure_tables(self):
        """Build exp/log/Zech/negation tables; no-op if already built."""
        if self._log is not None:
            return
        if self.p == 2:
            raise UsageError("log tables target odd characteristic")
        if self.q > TABLE_BUDGET:
            raise UsageError(f"field order {self.q} exceeds the table budget")
        p, m, q = self.p, self.m, self.q
        qm1 = q - 1
        factors = _trial_factor(qm1)

        def decode(a):
            digits = []
            for _ in range(m):
                digits.append(a % p)
                a //= p
            return digits

        def encode(digits):
            v = 0
            for c in reversed(digits):
                v = v * p + c % p
            return v

        def raw_mul(a, b):
            if m == 1:
                return a * b % p
            return encode(_poly_mul_mod(decode(a), decode(b), self.modulus, p))

        def raw_pow(a, e):
            r = 1
            while e:
                if e & 1:
                    r = raw_mul(r, a)
                a = raw_mul(a, a)
                e >>= 1
            return r

        g = None
        for cand in range(2, q):
            if all(raw_pow(cand, qm1 // f) != 1 for f in factors):
                g = cand
                break
        exp = [0] * (2 * qm1)
        log = [0] * q
        log[0] = -1
        e = 1
        for i in range(qm1):
            exp[i] = e
            exp[i + qm1] = e
            log[e] = i
            e = raw_mul(e, g)
        neg = [encode([-c for c in decode(a)]) for a in range(q)]
        zech = [0] * qm1
        for k in range(qm1):
            v = exp[k]
            s = v + 1 if v % p != p - 1 else v - (p - 1)
            zech[k] = log[s] if s else -1
        self._exp, self._log, self._zech, self._neg = exp, log, zech, neg

    def kernel_tables(self):
        """Numpy views of the tables, in the layout the counting kernel wants."""
        if self._np_tables is None:
            self.ensure_tables()
            import numpy as np
            self._np_tables = (
                np.array(self._log, dtype=np.int64),
                np.array(self._exp, dtype=np.int64),
                np.array(self._zech, dtype=np.int64),
                np.array(self._neg, dtype=np.int64),
            )
        return self._np_tables


class IntegerRing:
    """Exact integer arithmetic behind the same op surface as FiniteField."""

    __slots__ = ()

    is_field = False
    p = 0

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def embed(n):
        return n

    def __repr__(self):
        return "ZZ"


ZZ = IntegerRing()


def sqrt_in_field(a, field: FiniteField):
    """Square roots of a in the field; () when a is a non-residue."""
    return field.sqrt(a)


def projective_plane_size(field: FiniteField) -> int:
    return field.q * field.q + field.q + 1


def projective_point_at(field: FiniteField, index: int):
    """The index-th point of P^2 in canonical scan order.

    Order: (1, a, b) for all a, b by encoding, then (0, 1, a), then (0, 0, 1).
    """
    q = field.q
    q2 = q * q
    if index < 0 or index >= q2 + q + 1:
        raise IndexError("projective index out of range")
    if index < q2:
        return (1, index // q, index % q)
    if index < q2 + q:
        return (0, 1, index - q2)
    return (0, 0, 1)


def enumerate_projective_plane(field: FiniteField, start=0, stop=None):
    """Yield the points of P^2(F_q) in canonical order, optionally a slice.

    Contiguous [start, stop) slices partition the plane exactly, which is
    what the sharded counting path leans on.
    """
    size = projective_plane_size(field)
    if stop is None:
        stop = size
    start = max(0, start)
    stop = min(stop, size)
    for index in range(start, stop):
        yield projective_point_at(field, index)


def normalize_triple(field: FiniteField, v):
    """Scale a nonzero coordinate triple so its first nonzero entry is 1."""
    for c in v:
        if c != 0:
            if c == 1:
                return tuple(v)
            s = field.inv(c)
            return tuple(field.mul(s, x) for x in v)
    raise ValueError("zero vector has no projective normalization")


def normalize_int_triple(v):
    """Primitive integer representative with positive leading coordinate."""
    g = 0
    for c in v:
        g = math.gcd(g, c)
    if g == 0:
        raise ValueError("zero vector has no projective normalization")
    out = [c // g for c in v]
    for c in out:
        if c != 0:
            if c < 0:
                out = [-x for x in out]
            return tuple(out)
    raise AssertionError("unreachable")
