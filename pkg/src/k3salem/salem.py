"""Exact certification of Salem polynomials.

A Salem polynomial is an irreducible monic reciprocal polynomial of even
degree 2d whose roots are lambda > 1 > 1/lambda > 0 together with 2d - 2
roots on the unit circle away from +-1.  The root-location test runs on
the trace polynomial Q with phi(t) = t^d Q(t + 1/t), where the unit
circle becomes the real interval (-2, 2); Sturm sequences make every
count exact.  Irreducibility is either proved by a factor-degree sieve
modulo several primes or, for characteristic polynomials of K3-surface
automorphisms, implied by the cyclotomic/Salem dichotomy once no
cyclotomic factor is present.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .exactalg import IntPolynomial
from .numtheory import euler_phi, primes


class SalemRejection(Exception):
    """Raised when a polynomial fails the Salem certification."""

    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


@dataclass(frozen=True)
class SalemCertificate:
    """Exact evidence that `poly` is a degree-2d Salem polynomial."""

    poly: IntPolynomial
    trace_poly: IntPolynomial
    lambda_lo: Fraction
    lambda_hi: Fraction
    entropy: float
    entropy_error_bound: float
    irreducibility: str  # "sieve-proved" | "context-implied"
    cyclotomic_tested: tuple = field(default_factory=tuple)
    root_counts: dict = field(default_factory=dict)

    def __post_init__(self):
        if not (self.lambda_lo <= self.lambda_hi):
            raise ValueError("empty root enclosure")

    def to_json_dict(self):
        return {
            "coeffs_desc": [str(c) for c in reversed(self.poly.coeffs)],
            "lambda_lo": _frac_str(self.lambda_lo),
            "lambda_hi": _frac_str(self.lambda_hi),
            "entropy": self.entropy,
            "irreducibility": self.irreducibility,
            "cyclotomic_tested": [str(n) for n in self.cyclotomic_tested],
        }


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def frac_from_str(s: str) -> Fraction:
    num, _, den = s.partition("/")
    return Fraction(int(num), int(den) if den else 1)


def is_reciprocal(phi: IntPolynomial) -> bool:
    """True iff t^deg * phi(1/t) == phi(t), i.e. palindromic coefficients."""
    c = phi.coeffs
    return c == tuple(reversed(c))


def trace_polynomial(phi: IntPolynomial) -> IntPolynomial:
    """The unique Q with phi(t) = t^d Q(t + 1/t), for reciprocal phi of degree 2d.

    Built from the Chebyshev-style recursion for t^k + t^(-k) in s = t + 1/t.
    """
    if not is_reciprocal(phi):
        raise ValueError("trace polynomial requires a reciprocal input")
    if phi.degree < 0 or phi.degree % 2 != 0:
        raise ValueError("trace polynomial requires even degree")
    d = phi.degree // 2
    c = phi.coeffs
    # C_k(s) = t^k + t^(-k):  C_0 = 2, C_1 = s, C_k = s*C_{k-1} - C_{k-2}
    s = IntPolynomial((0, 1))
    ck_prev = IntPolynomial((2,))
    ck = s
    q = IntPolynomial((c[d],))
    for k in range(1, d + 1):
        if k > 1:
            ck_prev, ck = ck, s * ck - ck_prev
        q = q + ck * c[d - k]
    return q


def expand_trace(q: IntPolynomial, d: int) -> IntPolynomial:
    """Inverse of trace_polynomial: t^d * q(t + 1/t) as a polynomial in t."""
    # sum_j q_j t^(d-j) (t^2+1)^j
    t2p1 = IntPolynomial((1, 0, 1))
    acc = IntPolynomial(())
    power = IntPolynomial((1,))
    for j, qj in enumerate(q.coeffs):
        if qj:
            acc = acc + power.shift(d - j) * qj
        power = power * t2p1
    return acc


# ---------------------------------------------------------------------------
# Sturm sequences

def _content(coeffs):
    g = 0
    for c in coeffs:
        g = gcd(g, abs(c))
    return g or 1


def _primitive(p: IntPolynomial) -> IntPolynomial:
    if p.is_zero():
        return p
    g = _content(p.coeffs)
    return IntPolynomial([c // g for c in p.coeffs])


def _neg_prem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive part of -(a mod b), with division done over the rationals."""
    ra = [Fraction(c) for c in a.coeffs]
    rb = [Fraction(c) for c in b.coeffs]
    db = len(rb) - 1
    lead = rb[-1]
    while len(ra) - 1 >= db and any(ra):
        while ra and ra[-1] == 0:
            ra.pop()
        if len(ra) - 1 < db:
            break
        f = ra[-1] / lead
        off = len(ra) - 1 - db
        for j, cb in enumerate(rb):
            ra[off + j] -= f * cb
        ra.pop()
    while ra and ra[-1] == 0:
        ra.pop()
    if not ra:
        return IntPolynomial(())
    den = 1
    for c in ra:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [-(c.numerator * (den // c.denominator)) for c in ra]
    return _primitive(IntPolynomial(ints))


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over the integers (up to sign)."""
    a, b = _primitive(a), _primitive(b)
    while not b.is_zero():
        a, b = b, _neg_prem(a, b)
    return a


def radical(p: IntPolynomial) -> IntPolynomial:
    """Squarefree part of p (primitive, same distinct roots)."""
    if p.degree <= 0:
        return p
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return _primitive(p)
    # exact division over Q, then clear denominators
    q, r = _frac_divmod(p, g)
    assert all(c == 0 for c in r), "radical division left a remainder"
    den = 1
    for c in q:
        den = den * c.denominator // gcd(den, c.denominator)
    return _primitive(IntPolynomial([c.numerator * (den // c.denominator) for c in q]))


def _frac_divmod(a: IntPolynomial, b: IntPolynomial):
    ra = [Fraction(c) for c in a.coeffs]
    rb = [Fraction(c) for c in b.coeffs]
    db = len(rb) - 1
    lead = rb[-1]
    quo = [Fraction(0)] * max(0, len(ra) - db)
    for i in range(len(ra) - 1, db - 1, -1):
        if ra[i] == 0:
            continue
        f = ra[i] / lead
        quo[i - db] = f
        for j, cb in enumerate(rb):
            ra[i - db + j] -= f * cb
    return quo, ra[:db] if db > 0 else []


def sturm_chain(p: IntPolynomial):
    chain = [_primitive(p), _primitive(p.derivative())]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        chain.append(_neg_prem(chain[-2], chain[-1]))
    if chain[-1].is_zero():
        chain.pop()
    return chain


def _sign_at(p: IntPolynomial, point) -> int:
    """Sign of p at a Fraction, or at +-infinity (point = None means +inf)."""
    if p.is_zero():
        return 0
    if point is _NEG_INF:
        s = p.leading()
        return _sgn(s) * (-1 if p.degree % 2 else 1)
    if point is _POS_INF:
        return _sgn(p.leading())
    x = Fraction(point)
    return _sgn(p.eval_at_rational(x.numerator, x.denominator))


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


_POS_INF = object()
_NEG_INF = object()
POS_INF = _POS_INF
NEG_INF = _NEG_INF


def _variations(chain, point) -> int:
    signs = [s for s in (_sign_at(p, point) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def sturm_count(q: IntPolynomial, interval) -> int:
    """Exact number of distinct real roots of q in the open interval.

    `interval` is a pair (lo, hi); either endpoint may be NEG_INF/POS_INF.
    Multiple roots are counted once (the squarefree part is used).
    """
    lo, hi = interval
    if q.degree <= 0:
        return 0
    rad = radical(q)
    chain = sturm_chain(rad)
    count = _variations(chain, lo) - _variations(chain, hi)
    if hi is not _POS_INF and hi is not _NEG_INF and _sign_at(rad, hi) == 0:
        count -= 1
    return count


def sturm_count_with_multiplicity(q: IntPolynomial, interval) -> int:
    """Real roots of q in the open interval, counted with multiplicity.

    Peels multiplicity layers via gcd(q, q'): each layer contributes its
    distinct roots once.
    """
    total = 0
    while q.degree > 0:
        total += sturm_count(q, interval)
        q = poly_gcd(q, q.derivative())
    return total


# ---------------------------------------------------------------------------
# Cyclotomic polynomials

@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial, by exact division of t^n - 1."""
    if n < 1:
        raise ValueError("n must be positive")
    num = IntPolynomial((-1,) + (0,) * (n - 1) + (1,))
    for d in range(1, n):
        if n % d == 0:
            num, rem = num.divmod_exact(cyclotomic_polynomial(d))
            assert rem.is_zero()
    return num


def cyclotomic_free(phi: IntPolynomial):
    """(ok, ns_tested): ok is True iff no cyclotomic of degree <= deg(phi)
    divides phi exactly."""
    deg = phi.degree
    tested = []
    ok = True
    n = 1
    # euler_phi(n) >= sqrt(n/2), so n <= 2 deg^2 exhausts all candidates
    while n <= 2 * deg * deg + 1:
        if euler_phi(n) <= deg:
            tested.append(n)
            if ok and cyclotomic_polynomial(n).divides(phi):
                ok = False
        n += 1
    return ok, tested


# ---------------------------------------------------------------------------
# Irreducibility sieve via factor degree patterns modulo primes

def _mpoly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _mpoly_divmod(a, b, p):
    a = a[:]
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        if a[i] == 0:
            continue
        f = a[i] * inv % p
        q[i - db] = f
        for j, cb in enumerate(b):
            a[i - db + j] = (a[i - db + j] - f * cb) % p
    return _mpoly_trim(q), _mpoly_trim(a[:db])


def _mpoly_gcd(a, b, p):
    a, b = _mpoly_trim(a[:]), _mpoly_trim(b[:])
    while b:
        _, r = _mpoly_divmod(a, b, p)
        a, b = b, r
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _mpoly_mulmod(a, b, f, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    _, r = _mpoly_divmod(_mpoly_trim(out), f, p)
    return r


def _mpoly_powmod(base, e, f, p):
    result = [1]
    b = base[:]
    while e:
        if e & 1:
            result = _mpoly_mulmod(result, b, f, p)
        e >>= 1
        if e:
            b = _mpoly_mulmod(b, b, f, p)
    return result


def factor_degrees_mod(phi: IntPolynomial, p: int):
    """Multiset of irreducible factor degrees of phi mod p, or None when
    phi mod p is not squarefree of full degree."""
    f = [c % p for c in phi.coeffs]
    f = _mpoly_trim(f)
    if len(f) - 1 != phi.degree:
        return None
    deriv = _mpoly_trim([(i * c) % p for i, c in enumerate(f)][1:])
    if not deriv:
        return None
    if len(_mpoly_gcd(f, deriv, p)) - 1 != 0:
        return None
    degrees = []
    g = f[:]
    r = [0, 1]  # x
    d = 0
    while len(g) - 1 > 0:
        d += 1
        if 2 * d > len(g) - 1:
            degrees.append(len(g) - 1)
            break
        r = _mpoly_powmod(r, p, g, p)
        diff = r[:]
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        h = _mpoly_gcd(g, _mpoly_trim(diff), p)
        if len(h) - 1 > 0:
            degrees.extend([d] * ((len(h) - 1) // d))
            g, rem = _mpoly_divmod(g, h, p)
            assert not rem
            _, r = _mpoly_divmod(r, g, p) if len(g) - 1 > 0 else (None, [0, 1])
    return degrees


def degree_pattern_sieve(phi: IntPolynomial, prime_budget: int = 25) -> str:
    """"proved-irreducible" when the factor-degree patterns modulo
    prime_budget usable primes rule out every proper factor degree,
    else "inconclusive"."""
    deg = phi.degree
    if deg <= 0:
        return "inconclusive"
    if deg == 1:
        return "proved-irreducible"
    if phi.leading() != 1:
        raise ValueError("sieve requires a monic polynomial")
    full = (1 << (deg + 1)) - 1
    achievable = full
    used = 0
    attempts = 0
    for p in primes():
        if used >= prime_budget or attempts >= 4 * prime_budget:
            break
        attempts += 1
        degs = factor_degrees_mod(phi, p)
        if degs is None:
            continue
        used += 1
        sums = 1
        for d in degs:
            sums |= sums << d
        achievable &= sums
        proper = achievable & ~(1 | (1 << deg))
        if proper == 0:
            return "proved-irreducible"
    return "inconclusive"


# ---------------------------------------------------------------------------
# Root enclosure and the certification entry point

def leading_root(phi: IntPolynomial, tol=Fraction(1, 10**8)):
    """Enclose the largest real root lambda > 1 of phi.

    Returns (lo, hi, approx, entropy) with lo <= lambda <= hi exactly,
    hi - lo <= tol * lo, approx a float (inf when out of float range) and
    entropy = log(lambda) with error bounded by tol.
    """
    if sturm_count(phi, (Fraction(1), _POS_INF)) < 1:
        raise ValueError("polynomial has no real root > 1")
    rad = radical(phi)
    if _sgn(rad.leading()) < 0:
        rad = -rad
    bound = 1 + max(abs(c) for c in rad.coeffs) // abs(rad.leading()) + 1
    hi = Fraction(1)
    while hi < bound:
        hi *= 2
    lo = Fraction(1)
    chain = sturm_chain(rad)

    def roots_above(x):
        return _variations(chain, x) - _variations(chain, _POS_INF)

    # shrink until (lo, hi] isolates the single largest root and lo is not
    # itself a root (so plain sign bisection is sound afterwards)
    exact = None
    while roots_above(lo) > 1 or _sign_at(rad, lo) == 0:
        mid = (lo + hi) / 2
        if _sign_at(rad, mid) == 0:
            if roots_above(mid) == 0:
                exact = mid
                break
            lo = mid
            continue
        if roots_above(mid) >= 1:
            lo = mid
        else:
            hi = mid
    if exact is not None:
        lo = hi = exact
    slo = _sign_at(rad, lo)
    while hi - lo > tol * lo:
        mid = (lo + hi) / 2
        smid = _sign_at(rad, mid)
        if smid == 0:
            lo = hi = mid
            break
        if smid == slo:
            lo = mid
        else:
            hi = mid
    mid = (lo + hi) / 2
    try:
        approx = mid.numerator / mid.denominator
    except OverflowError:
        approx = math.inf
    entropy = math.log(mid.numerator) - math.log(mid.denominator)
    return lo, hi, approx, entropy


CONTEXT_STANDALONE = "standalone"
CONTEXT_FROM_K3 = "from-k3-automorphism"


def salem_check(phi: IntPolynomial, context: str = CONTEXT_STANDALONE,
                prime_budget: int = 25,
                root_tol=Fraction(1, 10**8)) -> SalemCertificate:
    """Certify that phi is a Salem polynomial; raise SalemRejection if not.

    In "from-k3-automorphism" context phi is known to be the characteristic
    polynomial of a K3-surface automorphism, where a product of cyclotomic
    polynomials and at most one Salem factor is the only possibility, so
    cyclotomic-freeness settles irreducibility when the sieve stalls.
    """
    if phi.degree < 2 or phi.degree % 2 != 0:
        raise ValueError("salem_check requires even degree >= 2")
    if context not in (CONTEXT_STANDALONE, CONTEXT_FROM_K3):
        raise ValueError(f"unknown context {context!r}")
    if phi.leading() != 1:
        raise SalemRejection("not monic")
    if not is_reciprocal(phi):
        raise SalemRejection("not reciprocal")
    cyc_ok, tested = cyclotomic_free(phi)
    if not cyc_ok:
        raise SalemRejection("divisible by a cyclotomic polynomial")
    d = phi.degree // 2
    q = trace_polynomial(phi)
    two = Fraction(2)
    n_high = sturm_count(q, (two, _POS_INF))
    n_mid = sturm_count(q, (-two, two))
    rad_q = radical(q)
    at_two = _sign_at(rad_q, two) == 0 or _sign_at(rad_q, -two) == 0
    counts = {"trace_in_(2,inf)": n_high, "trace_in_(-2,2)": n_mid}
    if n_high != 1 or n_mid != d - 1 or at_two:
        raise SalemRejection(f"root locations wrong: {counts}")
    sieve = degree_pattern_sieve(phi, prime_budget)
    if sieve == "proved-irreducible":
        irreducibility = "sieve-proved"
    elif context == CONTEXT_FROM_K3:
        irreducibility = "context-implied"
    else:
        raise SalemRejection("irreducibility unresolved in standalone mode")
    lo, hi, _, entropy = leading_root(phi, root_tol)
    err = float(Fraction(root_tol))
    return SalemCertificate(
        poly=phi, trace_poly=q, lambda_lo=lo, lambda_hi=hi,
        entropy=entropy, entropy_error_bound=err,
        irreducibility=irreducibility,
        cyclotomic_tested=tuple(tested), root_counts=counts)
