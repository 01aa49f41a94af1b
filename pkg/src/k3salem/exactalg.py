"""Exact integer and rational linear algebra.

Everything here is arbitrary precision: matrices and polynomials carry
Python ints, intermediate rational work uses fractions.Fraction.  No
floating point is ever consulted for a mathematical decision.
"""

from fractions import Fraction
from math import isqrt


class IntMatrix:
    """Immutable integer matrix, stored row-major as a tuple of tuples."""

    __slots__ = ("rows", "_hash")

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must be nonempty")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("IntMatrix is immutable")

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.rows)
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"IntMatrix({list(map(list, self.rows))!r})"

    @staticmethod
    def identity(n):
        return IntMatrix(tuple(tuple(1 if i == j else 0 for j in range(n))
                               for i in range(n)))

    def transpose(self):
        return IntMatrix(tuple(zip(*self.rows)))

    def is_symmetric(self):
        return self.rows == tuple(zip(*self.rows))

    def __add__(self, other):
        return IntMatrix(tuple(tuple(a + b for a, b in zip(r, s))
                               for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other):
        return IntMatrix(tuple(tuple(a - b for a, b in zip(r, s))
                               for r, s in zip(self.rows, other.rows)))

    def __neg__(self):
        return IntMatrix(tuple(tuple(-a for a in r) for r in self.rows))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntMatrix(tuple(tuple(a * other for a in r) for r in self.rows))
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        cols = tuple(zip(*other.rows))
        return IntMatrix(tuple(tuple(sum(a * b for a, b in zip(row, col))
                                     for col in cols)
                               for row in self.rows))

    def mul_vec_left(self, vec):
        """Row vector times matrix: vec . self."""
        if len(vec) != self.nrows:
            raise ValueError("dimension mismatch")
        return tuple(sum(vec[i] * self.rows[i][j] for i in range(self.nrows))
                     for j in range(self.ncols))

    def mul_vec_right(self, vec):
        """Matrix times column vector: self . vec."""
        if len(vec) != self.ncols:
            raise ValueError("dimension mismatch")
        return tuple(sum(r[j] * vec[j] for j in range(len(vec))) for r in self.rows)


class IntPolynomial:
    """Dense integer polynomial, coefficients ascending by degree.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, *a):
        raise AttributeError("IntPolynomial is immutable")

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial")
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_at_rational(self, num, den):
        """Sign-faithful value of den^degree * self(num/den), as an integer."""
        if self.is_zero():
            return 0
        acc = 0
        dp = 1
        for c in reversed(self.coeffs):
            acc = acc * num + c * dp
            dp *= den
        return acc

    def derivative(self):
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def shift(self, k):
        """Multiply by t^k."""
        return IntPolynomial((0,) * k + self.coeffs)

    def divmod_exact(self, divisor):
        """Quotient and remainder over the integers; divisor must be monic
        or the division must happen to stay integral (asserted)."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dc = divisor.coeffs
        dd = divisor.degree
        lead = dc[-1]
        q = [0] * max(0, len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            if rem[i] == 0:
                continue
            if rem[i] % lead != 0:
                raise ValueError("non-exact integer polynomial division")
            f = rem[i] // lead
            q[i - dd] = f
            for j, c in enumerate(dc):
                rem[i - dd + j] -= f * c
        return IntPolynomial(q), IntPolynomial(rem)

    def divides(self, other):
        """True iff self divides other exactly over the integers."""
        if other.is_zero():
            return True
        if self.is_zero() or self.degree > other.degree:
            return False
        try:
            _, rem = other.divmod_exact(self)
        except ValueError:
            return False
        return rem.is_zero()


def determinant(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    if m.nrows != m.ncols:
        raise ValueError("determinant of non-square matrix")
    n = m.nrows
    a = [list(r) for r in m.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * pivot - a[i][k] * a[k][j]
                q, r = divmod(num, prev)
                assert r == 0, "Bareiss division not exact"
                a[i][j] = q
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def char_poly(m: IntMatrix) -> IntPolynomial:
    """Monic characteristic polynomial det(tI - m) by Faddeev-LeVerrier.

    Every division by the step index is checked to be exact; a failure
    would mean corrupted integer arithmetic, not bad input.
    """
    if m.nrows != m.ncols:
        raise ValueError("characteristic polynomial of non-square matrix")
    n = m.nrows
    coeffs_desc = [1]
    aux = IntMatrix.identity(n)
    for k in range(1, n + 1):
        am = m * aux
        tr = sum(am.rows[i][i] for i in range(n))
        q, r = divmod(-tr, k)
        if r != 0:
            raise ArithmeticError("Faddeev-LeVerrier division not exact")
        coeffs_desc.append(q)
        aux = IntMatrix(tuple(tuple(am.rows[i][j] + (q if i == j else 0)
                                    for j in range(n)) for i in range(n)))
    return IntPolynomial(list(reversed(coeffs_desc)))


def solve_exact(m: IntMatrix, rhs):
    """Exact rational solution x of m . x = rhs (rhs a sequence of int/Fraction)."""
    if m.nrows != m.ncols:
        raise ValueError("solve requires a square matrix")
    n = m.nrows
    if len(rhs) != n:
        raise ValueError("dimension mismatch")
    a = [[Fraction(m.rows[i][j]) for j in range(n)] + [Fraction(rhs[i])]
         for i in range(n)]
    for col in range(n):
        piv = None
        for i in range(col, n):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return tuple(a[i][n] for i in range(n))


def inverse_rational(m: IntMatrix):
    """Exact inverse as a list of Fraction rows."""
    n = m.nrows
    cols = []
    for j in range(n):
        e = [0] * n
        e[j] = 1
        cols.append(solve_exact(m, e))
    return [tuple(cols[j][i] for j in range(n)) for i in range(n)]


DEFAULT_LLL_DELTA = Fraction(3, 4)


def lll_reduce(gram: IntMatrix, delta: Fraction = DEFAULT_LLL_DELTA):
    """LLL-reduce a positive definite Gram matrix.

    Returns (reduced_gram, transform) with transform unimodular and
    reduced_gram == transform . gram . transform^T.  Callers holding a
    negative definite form negate it first.  Raises ValueError if the
    form is not positive definite.
    """
    if not gram.is_symmetric():
        raise ValueError("Gram matrix must be symmetric")
    n = gram.nrows
    g = [list(r) for r in gram.rows]
    h = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    mu = [[Fraction(0)] * n for _ in range(n)]
    B = [Fraction(0)] * n

    def gso_row(k):
        # Gram-Schmidt data for row k from current g, rows < k assumed valid.
        s = [Fraction(0)] * k
        for j in range(k):
            u = Fraction(g[k][j])
            for i in range(j):
                u -= mu[j][i] * s[i]
            s[j] = u
            mu[k][j] = u / B[j]
        bk = Fraction(g[k][k])
        for j in range(k):
            bk -= mu[k][j] * s[j]
        if bk <= 0:
            raise ValueError("form is not positive definite")
        B[k] = bk

    def red(k, l):
        if 2 * abs(mu[k][l]) <= 1:
            return
        q = round(mu[k][l])
        for j in range(n):
            g[k][j] -= q * g[l][j]
        for i in range(n):
            g[i][k] -= q * g[i][l]
        for j in range(n):
            h[k][j] -= q * h[l][j]
        mu[k][l] -= q
        for i in range(l):
            mu[k][i] -= q * mu[l][i]

    def swap(k, kmax):
        g[k - 1], g[k] = g[k], g[k - 1]
        for row in g:
            row[k - 1], row[k] = row[k], row[k - 1]
        h[k - 1], h[k] = h[k], h[k - 1]
        for j in range(k - 1):
            mu[k - 1][j], mu[k][j] = mu[k][j], mu[k - 1][j]
        m = mu[k][k - 1]
        bnew = B[k] + m * m * B[k - 1]
        mu[k][k - 1] = m * B[k - 1] / bnew
        bk = B[k - 1] * B[k] / bnew
        B[k - 1] = bnew
        B[k] = bk
        for i in range(k + 1, kmax + 1):
            t = mu[i][k]
            mu[i][k] = mu[i][k - 1] - m * t
            mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]

    if n == 1:
        if g[0][0] <= 0:
            raise ValueError("form is not positive definite")
        return IntMatrix(g), IntMatrix(h)

    gso_row(0)
    kmax = 0
    k = 1
    while k < n:
        if k > kmax:
            kmax = k
            gso_row(k)
        red(k, k - 1)
        if B[k] >= (delta - mu[k][k - 1] ** 2) * B[k - 1]:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1
        else:
            swap(k, kmax)
            k = max(k - 1, 1)
    return IntMatrix(g), IntMatrix(h)


def ldl_decompose(gram):
    """LDL data of a symmetric positive definite rational Gram matrix.

    Returns (d, mu) with d[i] positive Fractions and mu[i][j] (j > i) such
    that  Q(x) = sum_i d[i] * (x_i + sum_{j>i} mu[i][j] x_j)^2.
    Raises ValueError when the form is not positive definite.
    """
    n = len(gram)
    q = [[Fraction(gram[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        if q[i][i] <= 0:
            raise ValueError("form is not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    d = [q[i][i] for i in range(n)]
    mu = [[q[i][j] for j in range(n)] for i in range(n)]
    return d, mu


def enumerate_quadratic(d, mu, center, bound):
    """All integer vectors x with Q(x + center) <= bound, exactly.

    (d, mu) are LDL data from ldl_decompose, center a sequence of
    Fractions, bound a nonnegative Fraction.  Returns a list of tuples.
    Coordinate ranges are derived with integer square roots only, so the
    search is complete and exact.
    """
    n = len(d)
    center = [Fraction(c) for c in center]
    results = []
    xs = [0] * n

    def descend(i, remaining):
        # offset of level i given fixed x_{i+1..}
        s = center[i]
        for j in range(i + 1, n):
            s += mu[i][j] * (xs[j] + center[j])
        # d[i]*(x + s)^2 <= remaining  <=>  |x + s| <= sqrt(remaining/d[i])
        lim = remaining / d[i]
        a, b = s.numerator, s.denominator
        # |x*b + a| <= sqrt(lim * b^2); both sides squared stay integral
        cap = (lim.numerator * b * b) // lim.denominator
        k = isqrt(cap)
        lo = -(k + a)
        hi = k - a
        # integer x with lo <= x*b <= hi
        xlo = -((-lo) // b) if lo <= 0 else (lo + b - 1) // b
        xhi = hi // b
        for x in range(xlo, xhi + 1):
            term = d[i] * (x + s) ** 2
            if term > remaining:
                continue
            xs[i] = x
            if i == 0:
                results.append((tuple(xs), bound - (remaining - term)))
            else:
                descend(i - 1, remaining - term)
        xs[i] = 0

    descend(n - 1, Fraction(bound))
    return results
