"""Even lattices with a fixed basis, reflections, and isometry checks.

Vectors are plain tuples of ints in the basis coordinates; the group of
isometries acts on row vectors from the right (x -> x . M).
"""

from fractions import Fraction

from .exactalg import IntMatrix, char_poly, determinant
from .salem import NEG_INF, POS_INF, sturm_count_with_multiplicity


class Lattice:
    """A basis-fixed integral lattice given by its Gram matrix.

    When `hyperbolic=True` the signature (1, rank-1) is verified exactly
    by root counting on the characteristic polynomial of the Gram.  An
    optional `cone_anchor` of positive square-norm picks one of the two
    positive cones.
    """

    __slots__ = ("gram", "rank", "cone_anchor")

    def __init__(self, gram: IntMatrix, cone_anchor=None, hyperbolic=False,
                 require_even=True):
        if gram.nrows != gram.ncols:
            raise ValueError("Gram matrix must be square")
        if not gram.is_symmetric():
            raise ValueError("Gram matrix must be symmetric")
        if require_even and any(gram.rows[i][i] % 2 for i in range(gram.nrows)):
            raise ValueError("lattice is not even: odd diagonal entry")
        if determinant(gram) == 0:
            raise ValueError("degenerate Gram matrix")
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "rank", gram.nrows)
        if hyperbolic:
            pos, neg = signature(gram)
            if (pos, neg) != (1, gram.nrows - 1):
                raise ValueError(f"signature ({pos},{neg}) is not hyperbolic")
        if cone_anchor is not None:
            cone_anchor = tuple(int(c) for c in cone_anchor)
            if inner_gram(gram, cone_anchor, cone_anchor) <= 0:
                raise ValueError("cone anchor must have positive square-norm")
        object.__setattr__(self, "cone_anchor", cone_anchor)

    def __setattr__(self, *a):
        raise AttributeError("Lattice is immutable")

    def __eq__(self, other):
        return (isinstance(other, Lattice) and self.gram == other.gram
                and self.cone_anchor == other.cone_anchor)

    def __hash__(self):
        return hash((self.gram, self.cone_anchor))

    def with_anchor(self, anchor):
        return Lattice(self.gram, cone_anchor=anchor, require_even=False)

    def zero(self):
        return (0,) * self.rank


def signature(gram: IntMatrix):
    """(positive, negative) eigenvalue counts of a nondegenerate symmetric
    integer matrix, via Sturm counts on its characteristic polynomial."""
    cp = char_poly(gram)
    pos = sturm_count_with_multiplicity(cp, (Fraction(0), POS_INF))
    neg = sturm_count_with_multiplicity(cp, (NEG_INF, Fraction(0)))
    return pos, neg


def inner_gram(gram: IntMatrix, x, y) -> int:
    rows = gram.rows
    n = len(rows)
    acc = 0
    for i, xi in enumerate(x):
        if xi:
            row = rows[i]
            acc += xi * sum(row[j] * y[j] for j in range(n))
    return acc


def inner(L: Lattice, x, y) -> int:
    """Intersection pairing <x, y> in L."""
    if len(x) != L.rank or len(y) != L.rank:
        raise ValueError("vector length does not match lattice rank")
    return inner_gram(L.gram, x, y)


def norm(L: Lattice, x) -> int:
    return inner(L, x, x)


def reflect(L: Lattice, r, x):
    """Reflection s_r(x) = x + <x, r> r in the wall of a (-2)-vector r."""
    if inner(L, r, r) != -2:
        raise ValueError("reflection requires a vector of square-norm -2")
    c = inner(L, x, r)
    return tuple(xi + c * ri for xi, ri in zip(x, r))


def is_isometry(L: Lattice, m: IntMatrix) -> bool:
    """True iff m . gram . m^T == gram exactly."""
    if m.nrows != L.rank or m.ncols != L.rank:
        return False
    return m * L.gram * m.transpose() == L.gram


def in_positive_cone(L: Lattice, v) -> bool:
    """True iff v has positive square-norm and pairs positively with the
    lattice's cone anchor."""
    if L.cone_anchor is None:
        raise ValueError("lattice has no cone anchor")
    return inner(L, v, v) > 0 and inner(L, v, L.cone_anchor) > 0


def neg(v):
    return tuple(-c for c in v)


def add(v, w):
    return tuple(a + b for a, b in zip(v, w))


def sub(v, w):
    return tuple(a - b for a, b in zip(v, w))


def scale(c, v):
    return tuple(c * a for a in v)
