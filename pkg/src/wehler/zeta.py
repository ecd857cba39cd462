"""From point counts over F_{p^m} to the zeta function and a Picard bound.

For these surfaces the zeta function has the closed shape

    Z(S, T) = 1 / ((1 - T) * P2(T) * (1 - p^2 T))

with P2 of degree 22, constant term 1 and leading coefficient p^22.  Its 22
reciprocal roots pair up as alpha * alpha' = p^2, so the 11 sums
a_i = alpha_i + p^2/alpha_i determine P2 completely.  The pipeline:

    counts N_1..N_11
      -> power sums of the a_i          (binomial unfolding of N_m)
      -> elementary symmetric functions (Newton-Girard, exact divisions)
      -> R(u) with the a_i as roots
      -> P2(T) = T^11 * R((1 + p^2 T^2)/T)
      -> Picard upper bound             (cyclotomic divisor multiplicities)

Eleven counts suffice because 11 power sums pin down 11 symmetric
functions.  Everything is exact integer arithmetic; the two places where a
wrong input can only reveal itself indirectly (a non-integer division in
Newton-Girard, a broken functional-equation symmetry in P2) raise
MathematicalInconsistencyError subclasses instead of producing garbage.

The Picard bound counts reciprocal roots of P2 of the form p * (root of
unity): for every n with phi(n) <= 22 the multiplicity of Phi_n(pT) in P2
is extracted by repeated exact division, and the bound is the sum of those
multiplicities weighted by phi(n).  No polynomial factorization is needed.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import InconsistentDataError, UsageError

# half of b_2: the 22 reciprocal roots of P2 pair into 11 values a_i
PAIRS = 11


def power_sums_from_counts(counts, p):
    """P_1..P_11 with P_k = sum a_i^k, from the counts N_1..N_11.

    Writing S_m = N_m - 1 - p^(2m) = sum alpha_i^m and using
    alpha^k + (p^2/alpha)^k = V_k (a Lucas sequence in a = alpha + p^2/alpha),

        P_k = sum_{j=0}^{floor((k-1)/2)} binom(k,j) p^(2j) S_{k-2j}
              + [k even] * 11 * binom(k, k/2) * p^k.
    """
    if len(counts) < PAIRS:
        raise UsageError(f"need {PAIRS} counts, got {len(counts)}")
    s = {m: counts[m - 1] - 1 - p ** (2 * m) for m in range(1, PAIRS + 1)}
    out = []
    for k in range(1, PAIRS + 1):
        total = sum(comb(k, j) * p ** (2 * j) * s[k - 2 * j]
                    for j in range((k - 1) // 2 + 1))
        if k % 2 == 0:
            total += PAIRS * comb(k, k // 2) * p ** k
        out.append(total)
    return tuple(out)


def newton_girard(power_sums):
    """Elementary symmetric functions C_1..C_11 of the a_i.

    k * C_k = sum_{i=1}^{k} (-1)^(i-1) C_{k-i} P_i with C_0 = 1; every
    division must be exact, anything else means the counts were wrong.
    """
    c = [1]
    for k in range(1, len(power_sums) + 1):
        total = sum((-1) ** (i - 1) * c[k - i] * power_sums[i - 1]
                    for i in range(1, k + 1))
        if total % k:
            raise InconsistentDataError(
                f"Newton-Girard step {k} is not an integer; "
                "the counts are not point counts of such a surface")
        c.append(total // k)
    return tuple(c[1:])


def r_polynomial(c):
    """R(u) = u^11 - C_1 u^10 + ... - C_11, ascending coefficients."""
    r = [0] * (PAIRS + 1)
    for k in range(PAIRS + 1):
        r[PAIRS - k] = (-1) ** k * (1 if k == 0 else c[k - 1])
    return tuple(r)


def build_P2(c, p):
    """The degree-22 polynomial with the alpha_i as reciprocal roots.

    Substituting u = (1 + p^2 T^2)/T into R and clearing T^11 pairs every
    root a of R into the two roots of alpha^2 - a*alpha + p^2.  The
    functional-equation symmetry c_{22-k} = p^(2(11-k)) c_k is checked and
    a violation raised, since it can only come from inconsistent input.
    """
    r = r_polynomial(c)
    out = [0] * (2 * PAIRS + 1)
    for k in range(PAIRS + 1):
        for j in range(k + 1):
            out[PAIRS - k + 2 * j] += r[k] * comb(k, j) * p ** (2 * j)
    for k in range(PAIRS + 1):
        if out[2 * PAIRS - k] != p ** (2 * (PAIRS - k)) * out[k]:
            raise InconsistentDataError(
                "functional-equation symmetry fails at degree "
                f"{2 * PAIRS - k}; the counts are inconsistent")
    return tuple(out)


def counts_from_P2(p2, p, terms=PAIRS):
    """Recover N_1..N_terms from P2 by Newton's identities.

    The reciprocal roots of the full zeta denominator are 1, p^2 and the
    alpha_i, so N_m = 1 + p^(2m) + (m-th power sum of the alpha_i).
    """
    if terms > PAIRS:
        raise UsageError(f"only {PAIRS} counts are determined by P2")
    s = [0] * (terms + 1)
    for m in range(1, terms + 1):
        s[m] = -m * p2[m] - sum(p2[k] * s[m - k] for k in range(1, m))
    return tuple(s[m] + 1 + p ** (2 * m) for m in range(1, terms + 1))


# -- polynomial helpers (ascending integer coefficient lists) ----------------

def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_div_exact(a, b):
    """a / b when the division is exact over the integers, else None."""
    a = [Fraction(x) for x in a]
    if len(a) < len(b):
        return None
    quot = [Fraction(0)] * (len(a) - len(b) + 1)
    while len(a) >= len(b):
        if not any(a):
            break
        if a[-1] == 0:
            a.pop()
            continue
        d = len(a) - len(b)
        coef = a[-1] / Fraction(b[-1])
        quot[d] = coef
        for i, x in enumerate(b):
            a[i + d] -= coef * x
        a.pop()
    if any(a) or not all(x.denominator == 1 for x in quot):
        return None
    return [int(x) for x in quot]


def euler_phi(n):
    out = n
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            out -= out // d
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out -= out // m
    return out


_cyclotomic_cache = {}


def cyclotomic(n):
    """Phi_n as ascending integer coefficients, by iterated exact division."""
    if n not in _cyclotomic_cache:
        num = [0] * (n + 1)
        num[0] = -1
        num[n] = 1
        den = [1]
        for d in range(1, n):
            if n % d == 0:
                den = poly_mul(den, cyclotomic(d))
        quot = poly_div_exact(num, den)
        if quot is None:
            raise AssertionError("cyclotomic division is always exact")
        _cyclotomic_cache[n] = tuple(quot)
    return _cyclotomic_cache[n]


def picard_upper_bound(p2, p):
    """(bound, multiplicities) from cyclotomic divisors of P2.

    alpha_i/p is a primitive n-th root of unity exactly when Phi_n(pT)
    divides away a factor; phi(n) <= 22 bounds n <= 120 or so, and scanning
    that far is cheap.  Returns the weighted sum and {n: multiplicity}.
    """
    total = 0
    mults = {}
    for n in range(1, 121):
        phi = euler_phi(n)
        if phi > 2 * PAIRS:
            continue
        f = [coef * p ** i for i, coef in enumerate(cyclotomic(n))]
        e = 0
        rem = list(p2)
        while True:
            quot = poly_div_exact(rem, f)
            if quot is None:
                break
            e += 1
            rem = quot
        if e:
            mults[n] = e
            total += e * phi
    return total, mults


# -- real-root counting (Sturm) ----------------------------------------------

def _poly_eval_sign(coeffs, x):
    total = Fraction(0)
    for c in reversed(coeffs):
        total = total * x + c
    return (total > 0) - (total < 0)


def _sign_at_inf(coeffs, positive):
    lead = coeffs[-1]
    if positive or (len(coeffs) - 1) % 2 == 0:
        return (lead > 0) - (lead < 0)
    return (lead < 0) - (lead > 0)


def sturm_root_count(coeffs, lo=None, hi=None):
    """Distinct real roots of an integer polynomial in (lo, hi].

    None stands for the corresponding infinity.  Exact arithmetic on
    Fractions; intended for the degree-11 sanity check that all roots of
    R(u) lie in [-2p, 2p], not as a general-purpose root isolator.
    """
    chain = [[Fraction(c) for c in coeffs]]
    while chain[0] and chain[0][-1] == 0:
        chain[0].pop()
    if len(chain[0]) <= 1:
        return 0
    chain.append([i * c for i, c in enumerate(chain[0])][1:])
    while len(chain[-1]) > 1:
        a, b = chain[-2], chain[-1]
        rem = list(a)
        while len(rem) >= len(b):
            d = len(rem) - len(b)
            coef = rem[-1] / b[-1]
            for i, x in enumerate(b):
                rem[i + d] -= coef * x
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        if not rem:
            break
        chain.append([-c for c in rem])

    def changes(x, positive_inf):
        signs = []
        for poly in chain:
            if x is None:
                sgn = _sign_at_inf(poly, positive_inf)
            else:
                sgn = _poly_eval_sign(poly, Fraction(x))
            if sgn:
                signs.append(sgn)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    return changes(lo, False) - changes(hi, True)


# -- assembled data and report -------------------------------------------------

@dataclass(frozen=True)
class ZetaData:
    """Everything the pipeline derives from eleven counts."""

    p: int
    counts: tuple
    power_sums: tuple
    symmetric: tuple
    r: tuple
    p2: tuple
    multiplicities: dict
    picard_bound: int

    def to_dict(self):
        return {
            "p": self.p,
            "counts": list(self.counts),
            "power_sums": list(self.power_sums),
            "symmetric_functions": list(self.symmetric),
            "r_coefficients": list(self.r),
            "p2_coefficients": list(self.p2),
            "cyclotomic_multiplicities":
                {str(n): e for n, e in sorted(self.multiplicities.items())},
            "picard_upper_bound": self.picard_bound,
            "picard_exact": self.picard_bound == 2,
        }


def zeta_data(counts, p) -> ZetaData:
    """Run the full pipeline on N_1..N_11."""
    counts = tuple(counts[:PAIRS])
    power = power_sums_from_counts(counts, p)
    sym = newton_girard(power)
    p2 = build_P2(sym, p)
    bound, mults = picard_upper_bound(p2, p)
    return ZetaData(p=p, counts=counts, power_sums=power, symmetric=sym,
                    r=r_polynomial(sym), p2=p2, multiplicities=mults,
                    picard_bound=bound)


def _poly_str(coeffs):
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            term = f"{mag}T" if i == 1 else f"{mag}T^{i}"
            parts.append(f"- {term}" if c < 0 else f"+ {term}")
    text = " ".join(parts) if parts else "0"
    return text[2:] if text.startswith("+ ") else text


def zeta_report(data: ZetaData) -> str:
    """Human-readable summary of a ZetaData."""
    p = data.p
    lines = [
        f"zeta function over F_{p}",
        f"counts N_1..N_{PAIRS}: " + ", ".join(str(n) for n in data.counts),
        f"Z(S, T) = 1 / ((1 - T) * P2(T) * (1 - {p * p}T))",
        "P2(T) coefficients, ascending: "
        + ", ".join(str(c) for c in data.p2),
        "P2(T) = " + _poly_str(data.p2),
    ]
    if data.multiplicities:
        factors = " * ".join(
            f"Phi_{n}({p}T)" + (f"^{e}" if e > 1 else "")
            for n, e in sorted(data.multiplicities.items()))
        lines.append(f"root-of-unity factors: {factors}")
    else:
        lines.append("root-of-unity factors: none")
    lines.append(f"Picard number upper bound: {data.picard_bound}")
    if data.picard_bound == 2:
        lines.append(
            "the bound meets the general lower bound of 2 for these"
            " surfaces: the Picard number is exactly 2")
    return "\n".join(lines)
