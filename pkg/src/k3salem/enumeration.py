"""Finite vector enumeration in hyperbolic lattices.

Three finite sets drive everything downstream, for vectors u, v of
positive square-norm:

  roots_orthogonal_to(v)   {r : <r,v> = 0, r^2 = -2}
  null_vectors_meeting(v)  {f : <f,v> = 1, f^2 = 0}
  separating_roots(u, v)   {r : <r,u> > 0, <r,v> < 0, r^2 = -2}

The first two are affine slices: solve the linear conditions over Z,
split off the orthogonal complement (negative definite), and run an
exact shifted ellipsoid search on its LLL-reduced Gram.  The third is
finite because a root with that sign pattern projects into the span of
{u, v} with square-norm in [-2, 0); we enumerate residue classes of the
projection to the quotient L / (span cap L) and solve an integer conic
per class, which stays fast even when <u,v> is large.
"""

from fractions import Fraction
from functools import lru_cache
from math import isqrt

from dataclasses import dataclass
from itertools import product as _iproduct

from .exactalg import IntMatrix, ldl_decompose, lll_reduce, enumerate_quadratic
from .lattice import Lattice, inner, norm, in_positive_cone


class InfiniteSetError(ValueError):
    """The requested vector set is not provably finite."""


@dataclass(frozen=True)
class LinearConstraint:
    """Require <x, against> == value."""
    against: tuple
    value: int


# ---------------------------------------------------------------------------
# Integer linear algebra: Smith form, kernels, particular solutions

def smith_normal_form(a_rows):
    """Diagonalize an integer matrix: returns (U, S, V) with U*A*V = S,
    U and V unimodular, S diagonal with nonnegative entries."""
    k = len(a_rows)
    n = len(a_rows[0])
    s = [list(r) for r in a_rows]
    u = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def addmul_row(dst, src, q):
        s[dst] = [a - q * b for a, b in zip(s[dst], s[src])]
        u[dst] = [a - q * b for a, b in zip(u[dst], u[src])]

    def addmul_col(dst, src, q):
        for row in s:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    t = 0
    while t < min(k, n):
        # smallest nonzero pivot in the remaining block
        piv = None
        for i in range(t, k):
            for j in range(t, n):
                if s[i][j] != 0 and (piv is None
                                     or abs(s[i][j]) < abs(s[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            done = True
            for i in range(t + 1, k):
                if s[i][t]:
                    q = s[i][t] // s[t][t]
                    addmul_row(i, t, q)
                    if s[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if s[t][j]:
                    q = s[t][j] // s[t][t]
                    addmul_col(j, t, q)
                    if s[t][j]:
                        swap_cols(t, j)
                        done = False
            if done:
                break
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return u, s, v


def kernel_basis(a_rows):
    """Basis (rows) of the saturated integer kernel {x : A . x = 0}."""
    k = len(a_rows)
    n = len(a_rows[0])
    _, s, v = smith_normal_form(a_rows)
    rank = sum(1 for i in range(min(k, n)) if s[i][i] != 0)
    # kernel = columns of V beyond the rank
    return [tuple(v[i][j] for i in range(n)) for j in range(rank, n)]


def solve_integer(a_rows, b):
    """One integer solution x of A . x = b, or None."""
    k = len(a_rows)
    n = len(a_rows[0])
    u, s, v = smith_normal_form(a_rows)
    ub = [sum(u[i][j] * b[j] for j in range(k)) for i in range(k)]
    y = [0] * n
    for i in range(min(k, n)):
        d = s[i][i]
        if d == 0:
            if ub[i] != 0:
                return None
        else:
            if ub[i] % d != 0:
                return None
            y[i] = ub[i] // d
    for i in range(min(k, n), k):
        if ub[i] != 0:
            return None
    return tuple(sum(v[i][j] * y[j] for j in range(n)) for i in range(n))


def unimodular_inverse(rows):
    """Exact integer inverse of a unimodular matrix given as rows."""
    n = len(rows)
    m = IntMatrix(rows)
    from .exactalg import inverse_rational
    inv = inverse_rational(m)
    out = []
    for r in inv:
        if any(x.denominator != 1 for x in r):
            raise ValueError("matrix is not unimodular")
        out.append(tuple(int(x) for x in r))
    return out


# ---------------------------------------------------------------------------
# The affine-slice engine

def _pairing_rows(L, vectors):
    g = L.gram.rows
    n = L.rank
    out = []
    for vec in vectors:
        out.append(tuple(sum(vec[i] * g[i][j] for i in range(n)) for j in range(n)))
    return out


@lru_cache(maxsize=512)
def _complement_data(gram: IntMatrix, constraint_vectors):
    """Kernel of the pairing constraints, LLL-reduced, with LDL data of the
    negated (positive definite) Gram.  Raises InfiniteSetError when the
    complement is not negative definite."""
    n = gram.nrows
    rows = []
    for vec in constraint_vectors:
        rows.append(tuple(sum(vec[i] * gram.rows[i][j] for i in range(n))
                          for j in range(n)))
    kb = kernel_basis(rows)
    if not kb:
        return (), None, None, None
    # euclidean pre-reduction keeps the Gram entries manageable
    if max(abs(x) for row in kb for x in row) > 64:
        e_gram = IntMatrix([[sum(a * b for a, b in zip(r1, r2)) for r2 in kb]
                            for r1 in kb])
        _, t = lll_reduce(e_gram)
        m0 = len(kb)
        kb = [tuple(sum(t.rows[i][k] * kb[k][j] for k in range(m0))
                    for j in range(n)) for i in range(m0)]
    m = len(kb)
    neg_gram = [[-sum(kb[i][a] * gram.rows[a][b] * kb[j][b]
                      for a in range(n) for b in range(n))
                 for j in range(m)] for i in range(m)]
    try:
        reduced, trans = lll_reduce(IntMatrix(neg_gram))
    except ValueError as exc:
        raise InfiniteSetError(
            "orthogonal complement of the constraints is not negative definite"
        ) from exc
    basis = [trans.mul_vec_left(tuple(1 if i == j else 0 for j in range(m)))
             for i in range(m)]
    red_basis = [tuple(sum(basis[i][a] * kb[a][b] for a in range(m))
                       for b in range(n)) for i in range(m)]
    d, mu = ldl_decompose([list(r) for r in reduced.rows])
    return tuple(red_basis), reduced, tuple(d), tuple(tuple(r) for r in mu)


def enumerate_constrained(L: Lattice, constraints, d: int):
    """All x in L with <x, c.against> == c.value for every constraint and
    <x, x> == d, sorted lexicographically.

    The orthogonal complement of the constraint vectors must be negative
    definite (guaranteed when some constraint vector has positive
    square-norm in a hyperbolic lattice); otherwise InfiniteSetError.
    Inconsistent or integrally unsolvable constraints give the empty tuple.
    """
    if not constraints:
        raise InfiniteSetError("at least one linear constraint is required")
    vecs = tuple(tuple(c.against) for c in constraints)
    vals = [c.value for c in constraints]
    rows = _pairing_rows(L, vecs)
    x0 = solve_integer(rows, vals)
    if x0 is None:
        return ()
    basis, reduced, dldl, mu = _complement_data(L.gram, vecs)
    if not basis:
        return (x0,) if norm(L, x0) == d else ()
    m = len(basis)
    # norm(x0 + w.B) == d  <=>  Q(w - c) == target with Q = -B G B^T
    u = [inner(L, x0, b) for b in basis]  # B G x0^T
    centre = _solve_pd(reduced.rows, u)
    target = Fraction(norm(L, x0) - d)
    target += sum(Fraction(ci) * ui for ci, ui in zip(centre, u))
    if target < 0:
        return ()
    found = []
    for w, value in enumerate_quadratic(list(dldl), [list(r) for r in mu],
                                        [-c for c in centre], target):
        if value != target:
            continue
        x = tuple(x0[j] + sum(w[i] * basis[i][j] for i in range(m))
                  for j in range(L.rank))
        found.append(x)
    return tuple(sorted(found))


def _solve_pd(a_rows, rhs):
    """Solve A c = rhs exactly for symmetric A (small systems)."""
    n = len(a_rows)
    aug = [[Fraction(a_rows[i][j]) for j in range(n)] + [Fraction(rhs[i])]
           for i in range(n)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [aug[i][n] for i in range(n)]


def set_R(L: Lattice, v):
    """roots orthogonal to v: {r in L : <r,v> = 0, <r,r> = -2}."""
    if norm(L, v) <= 0:
        raise ValueError("set_R requires a vector of positive square-norm")
    return enumerate_constrained(L, [LinearConstraint(tuple(v), 0)], -2)


def set_F(L: Lattice, v):
    """null vectors meeting v once: {f in L : <f,v> = 1, <f,f> = 0}."""
    if norm(L, v) <= 0:
        raise ValueError("set_F requires a vector of positive square-norm")
    return enumerate_constrained(L, [LinearConstraint(tuple(v), 1)], 0)


# ---------------------------------------------------------------------------
# Separating roots between two positive vectors

def set_S(L: Lattice, u, v):
    """{r in L : <r,u> > 0, <r,v> < 0, <r,r> = -2}, sorted.

    u and v must lie in one positive cone.  For such a root the span
    component of r is spacelike, so its image in the projection quotient
    has square-norm in (-2, 0]; classes of the quotient with short image
    are enumerated and an integer conic is solved inside each class.
    """
    u = tuple(u)
    v = tuple(v)
    du = norm(L, u)
    dv = norm(L, v)
    if du <= 0 or dv <= 0:
        raise ValueError("set_S requires vectors of positive square-norm")
    if L.cone_anchor is not None:
        if not (in_positive_cone(L, u) and in_positive_cone(L, v)):
            raise ValueError("set_S requires vectors inside the positive cone")
    t = inner(L, u, v)
    dependent = all(u[i] * v[j] == u[j] * v[i]
                    for i in range(L.rank) for j in range(L.rank))
    if dependent:
        if t > 0:
            return ()  # positive multiples: the sign conditions contradict
        raise ValueError("set_S requires vectors in one positive cone")
    if t <= 0:
        raise ValueError("set_S requires vectors in one positive cone")

    n = L.rank
    delta = du * dv - t * t
    assert delta < 0, "independent positive vectors must span a (1,1) plane"

    # saturated plane: SNF of the 2 x n matrix [u; v]
    _, s2, v2 = smith_normal_form([list(u), list(v)])
    vinv = unimodular_inverse([tuple(r) for r in v2])
    g1, g2 = vinv[0], vinv[1]
    quot = vinv[2:]
    g11 = inner(L, g1, g1)
    g12 = inner(L, g1, g2)
    g22 = inner(L, g2, g2)
    det2 = g11 * g22 - g12 * g12
    assert det2 < 0
    f2, f2r = divmod(delta, det2)
    assert f2r == 0 and f2 > 0, "plane index must be integral"

    # pairings of the plane basis against u, v
    p11, p12 = inner(L, g1, u), inner(L, g1, v)
    p21, p22 = inner(L, g2, u), inner(L, g2, v)
    detp = p11 * p22 - p21 * p12
    assert detp != 0

    found = []

    def conic_solutions(x_c, q_scaled):
        # residual class x_c with |det2| * |proj_norm| == q_scaled
        t2 = -2 * delta - q_scaled * f2
        if t2 <= 0:
            return
        a0 = inner(L, x_c, u)
        b0 = inner(L, x_c, v)
        amax_sq = (t2 - 1) // dv
        a = 1
        while a * a <= amax_sq:
            disc = a * a * (-delta) + du * t2
            root = isqrt(disc)
            if root * root == disc:
                num = t * a - root
                if num % du == 0:
                    b = num // du
                    if b < 0:
                        snum = (a - a0) * p22 - (b - b0) * p21
                        knum = (b - b0) * p11 - (a - a0) * p12
                        if snum % detp == 0 and knum % detp == 0:
                            sc, kc = snum // detp, knum // detp
                            r = tuple(x_c[j] + sc * g1[j] + kc * g2[j]
                                      for j in range(n))
                            assert norm(L, r) == -2
                            found.append(r)
            a += 1

    if not quot:
        conic_solutions(L.zero(), 0)
        return tuple(sorted(found))

    # quotient form: |det2| * (norm of projection to the plane complement),
    # negated to be positive definite
    m = len(quot)
    wpair = [(inner(L, y, g1), inner(L, y, g2)) for y in quot]
    gy = [[inner(L, quot[i], quot[j]) for j in range(m)] for i in range(m)]
    adet = -det2
    q_int = [[0] * m for _ in range(m)]
    for i in range(m):
        wi1, wi2 = wpair[i]
        for j in range(i, m):
            wj1, wj2 = wpair[j]
            adj = wi1 * (g22 * wj1 - g12 * wj2) + wi2 * (g11 * wj2 - g12 * wj1)
            val = -adet * gy[i][j] - adj
            q_int[i][j] = val
            q_int[j][i] = val
    try:
        reduced, trans = lll_reduce(IntMatrix(q_int))
    except ValueError as exc:
        raise InfiniteSetError("projection quotient is not definite") from exc
    d_ldl, mu = ldl_decompose([list(r) for r in reduced.rows])
    bound = Fraction(2 * adet - 1)
    classes = enumerate_quadratic(list(d_ldl), [list(r) for r in mu],
                                  [Fraction(0)] * m, bound)
    for cvec, value in classes:
        coords = trans.mul_vec_left(cvec)
        x_c = tuple(sum(coords[i] * quot[i][j] for i in range(m))
                    for j in range(n))
        conic_solutions(x_c, int(value))
    return tuple(sorted(found))


def brute_force_oracle(L: Lattice, box_bound: int, predicate):
    """All vectors with coordinates in [-box_bound, box_bound] satisfying
    the predicate; rank must be at most 5 (test oracle only)."""
    if L.rank > 5:
        raise ValueError("brute-force oracle is limited to rank <= 5")
    hits = [vec for vec in _iproduct(range(-box_bound, box_bound + 1),
                                     repeat=L.rank)
            if predicate(vec)]
    return tuple(sorted(hits))
