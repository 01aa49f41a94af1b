"""Construction of the rank-22 even hyperbolic lattices Lambda^-_{p,sigma}.

For an odd prime p and Artin invariant sigma in 1..10 the lattice is a
block sum of a hyperbolic plane (U or its p-scaled twin), copies of an
even negative definite rank-4 block H^(-p) with discriminant group
(Z/p)^2, and E8 blocks at scale -1 or -p, arranged so the discriminant
group is (Z/p)^(2 sigma).
"""

from dataclasses import dataclass
from fractions import Fraction

from .chamber import AmpleList
from .exactalg import IntMatrix, determinant, inverse_rational
from .lattice import Lattice, inner, norm
from .numtheory import is_prime, legendre_symbol


@dataclass(frozen=True)
class RSParams:
    """Arithmetic data behind one lattice: the prime p, the Artin
    invariant sigma, and the auxiliary pair (q, gamma) defining H^(-p)."""

    p: int
    sigma: int
    q: int
    gamma: int

    def __post_init__(self):
        if not is_prime(self.p) or self.p == 2:
            raise ValueError("p must be an odd prime")
        if not 1 <= self.sigma <= 10:
            raise ValueError("sigma must lie in 1..10")
        if self.q % 8 != 3 or not is_prime(self.q):
            raise ValueError("q must be a prime congruent to 3 mod 8")
        if legendre_symbol(-self.q, self.p) != -1:
            raise ValueError("(-q | p) must be -1")
        if (self.gamma * self.gamma + self.p) % self.q != 0:
            raise ValueError("gamma^2 + p must vanish mod q")

    @property
    def p_prime(self) -> int:
        """Scale of the hyperbolic block: 1 for odd sigma, p for even."""
        return 1 if self.sigma % 2 == 1 else self.p


@dataclass(frozen=True)
class BasisTag:
    """Which block a basis vector belongs to."""

    kind: str        # "U" | "H" | "E8"
    block: int       # index among blocks of the same kind
    index: int       # position inside the block
    scale: int       # 1 or p for U; 1 for H; 1 or p for E8 (absolute value)


Q_SEARCH_CAP = 10 ** 6


def find_q_gamma(p: int):
    """Smallest prime q = 3 mod 8 with (-q|p) = -1, and the smallest
    gamma in [0, q) with gamma^2 + p = 0 mod q."""
    if not is_prime(p) or p == 2:
        raise ValueError("p must be an odd prime")
    q = 3
    while q <= Q_SEARCH_CAP:
        if q % 8 == 3 and is_prime(q) and legendre_symbol(-q, p) == -1:
            for gamma in range(q):
                if (gamma * gamma + p) % q == 0:
                    return q, gamma
            raise AssertionError("-p must be a square mod q")
        q += 2
    raise RuntimeError(f"no admissible q below {Q_SEARCH_CAP} for p={p}")


def gram_U(scale: int = 1) -> IntMatrix:
    return IntMatrix([[0, scale], [scale, 0]])


def gram_H(params: RSParams) -> IntMatrix:
    """The rank-4 even negative definite block with discriminant (Z/p)^2."""
    p, q, g = params.p, params.q, params.gamma
    m = IntMatrix([
        [-2, -1, 0, 0],
        [-1, -(q + 1) // 2, 0, -g],
        [0, 0, -p * (q + 1) // 2, -p],
        [0, -g, -p, -2 * (p + g * g) // q],
    ])
    if any(m.rows[i][i] % 2 for i in range(4)):
        raise AssertionError("H block is not even")
    if determinant(m) != p * p:
        raise AssertionError("H block has wrong discriminant")
    if not _is_negative_definite(m):
        raise AssertionError("H block is not negative definite")
    return m


def _is_negative_definite(m: IntMatrix) -> bool:
    # leading principal minors of -m must all be positive
    n = m.nrows
    neg = -m
    for k in range(1, n + 1):
        sub = IntMatrix([r[:k] for r in neg.rows[:k]])
        if determinant(sub) <= 0:
            return False
    return True


E8_EDGES = ((1, 4), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8))


def gram_E8(scale: int) -> IntMatrix:
    """E8 at negative scale: diagonal 2*scale, off-diagonal -scale on the
    chain 2-3-4-...-8 with 1 attached to 4 (scale is -1 or -p)."""
    if scale >= 0:
        raise ValueError("E8 block scale must be negative")
    rows = [[0] * 8 for _ in range(8)]
    for i in range(8):
        rows[i][i] = 2 * scale
    for a, b in E8_EDGES:
        rows[a - 1][b - 1] = -scale
        rows[b - 1][a - 1] = -scale
    return IntMatrix(rows)


def _block_diag(blocks):
    n = sum(b.nrows for b in blocks)
    rows = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(b.nrows):
            for j in range(b.nrows):
                rows[off + i][off + j] = b.rows[i][j]
        off += b.nrows
    return IntMatrix(rows)


def block_plan(sigma: int):
    """Block layout per Artin invariant: (u_scaled, n_H, e8_scales)."""
    return {
        1: (False, 1, (1, 1)),
        2: (True, 1, (1, 1)),
        3: (False, 3, (1,)),
        4: (True, 3, (1,)),
        5: (False, 1, (1, "p")),
        6: (True, 1, (1, "p")),
        7: (False, 3, ("p",)),
        8: (True, 3, ("p",)),
        9: (False, 1, ("p", "p")),
        10: (True, 1, ("p", "p")),
    }[sigma]


def build_lambda(p: int, sigma: int, q: int | None = None,
                 gamma: int | None = None):
    """Construct Lambda^-_{p,sigma}: returns (lattice, tags, params).

    The cone anchor is u1 + u2 of the hyperbolic block.  q and gamma
    default to the smallest admissible choice.
    """
    if q is None or gamma is None:
        q, gamma = find_q_gamma(p)
    params = RSParams(p=p, sigma=sigma, q=q, gamma=gamma)
    u_scaled, n_h, e8_scales = block_plan(sigma)
    blocks = [gram_U(p if u_scaled else 1)]
    tags = [BasisTag("U", 0, 0, p if u_scaled else 1),
            BasisTag("U", 0, 1, p if u_scaled else 1)]
    h = gram_H(params)
    for b in range(n_h):
        blocks.append(h)
        tags.extend(BasisTag("H", b, i, 1) for i in range(4))
    for b, s in enumerate(e8_scales):
        sc = p if s == "p" else 1
        blocks.append(gram_E8(-sc))
        tags.extend(BasisTag("E8", b, i, sc) for i in range(8))
    gram = _block_diag(blocks)
    assert gram.nrows == 22
    det = determinant(gram)
    assert abs(det) == p ** (2 * sigma), "discriminant must be p^(2 sigma)"
    anchor = (1, 1) + (0,) * 20
    lat = Lattice(gram, cone_anchor=anchor, hyperbolic=True)
    return lat, tuple(tags), params


def random_square2(L: Lattice, params: RSParams, rng, box: int = 2,
                   widen_every: int = 64, max_attempts: int = 100_000):
    """A random vector of square-norm 2 of the shape a*u1 + u2 + n.

    n is drawn from a box in the negative definite part; the draw is kept
    when 2 - <n,n> is divisible by 2 p', making a = (2 - <n,n>) / (2 p')
    integral.  The box widens geometrically on repeated failure.
    """
    pp = params.p_prime
    n_rank = L.rank - 2
    b = box
    for attempt in range(1, max_attempts + 1):
        n = (0, 0) + tuple(rng.randint(-b, b) for _ in range(n_rank))
        nn = norm(L, n)
        if (2 - nn) % (2 * pp) == 0:
            a = (2 - nn) // (2 * pp)
            v = (a, 1) + n[2:]
            assert norm(L, v) == 2
            return v
        if attempt % widen_every == 0:
            b *= 2
    raise RuntimeError("square-2 sampling budget exhausted")


def random_square2_general(L: Lattice, params: RSParams, rng, box: int = 2,
                           widen_every: int = 64,
                           max_attempts: int = 100_000):
    """Square-2 vector a*u1 + b*u2 + n over a random divisor split a*b.

    When the hyperbolic block is unscaled (odd sigma), the null vectors
    u1 and u2 pair to b and a with the result, so splits with a or b
    equal to 1 can never satisfy the empty-null-set condition; such draws
    are rejected here.  For the p-scaled block any split works.
    """
    pp = params.p_prime
    need_big = pp == 1  # pairings against u1/u2 are b*pp and a*pp
    n_rank = L.rank - 2
    b_box = box
    for attempt in range(1, max_attempts + 1):
        n = (0, 0) + tuple(rng.randint(-b_box, b_box) for _ in range(n_rank))
        nn = norm(L, n)
        if (2 - nn) % (2 * pp) == 0 and (2 - nn) // (2 * pp) >= 1:
            m = (2 - nn) // (2 * pp)
            pairs = []
            d = 1
            while d * d <= m:
                if m % d == 0:
                    pairs.extend(((d, m // d), (m // d, d)))
                d += 1
            if need_big:
                pairs = [(a, b) for a, b in pairs if a >= 2 and b >= 2]
            if pairs:
                a, b = pairs[rng.randrange(len(pairs))]
                v = (a, b) + n[2:]
                assert norm(L, v) == 2
                return v
        if attempt % widen_every == 0:
            b_box *= 2
    raise RuntimeError("square-2 sampling budget exhausted")


def standard_ample_list(L: Lattice, h0, p: int) -> AmpleList:
    """The ample list [h0, p e_1^dual, ..., p e_n^dual].

    The scaled dual basis vectors are p * (rows of gram^-1); they lie in
    the lattice because p annihilates the discriminant group, and they
    span rationally, so the list is ample for any h0 of positive norm.
    """
    if norm(L, h0) <= 0:
        raise ValueError("h0 must have positive square-norm")
    inv = inverse_rational(L.gram)
    rhos = []
    for row in inv:
        scaled = [Fraction(p) * x for x in row]
        if any(x.denominator != 1 for x in scaled):
            raise ValueError("p * dual basis vector is not integral")
        rhos.append(tuple(int(x) for x in scaled))
    return AmpleList(tuple(h0), rhos)
