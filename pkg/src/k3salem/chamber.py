"""Ample lists of vectors and the standard fundamental chamber they select.

An ample list [h0, rho_1, ..., rho_K] orders the pairing tuple
(<h0,x>, <rho_1,x>, ..., <rho_K,x>) lexicographically; this realizes the
comparison against h0 + eps rho_1 + ... + eps^K rho_K for all
sufficiently small eps > 0 without ever materializing eps.  The chamber
D(a) is the standard fundamental domain of the reflection group that
contains that perturbed point.
"""

from fractions import Fraction

from .lattice import Lattice, inner, norm, reflect
from .enumeration import set_R, set_S


class AmpleList:
    """h0 of positive square-norm plus tie-breaking vectors rho_i.

    Ample means every root orthogonal to h0 pairs nonzero with some rho_i.
    The positive root system of the list is cached; extending the list
    never changes the chamber, so extensions share the cache.
    """

    __slots__ = ("h0", "rhos", "_pos_roots")

    def __init__(self, h0, rhos=(), _pos_roots=None):
        self.h0 = tuple(h0)
        self.rhos = tuple(tuple(r) for r in rhos)
        self._pos_roots = _pos_roots

    def vectors(self):
        return (self.h0,) + self.rhos

    def extended(self, rho):
        return AmpleList(self.h0, self.rhos + (tuple(rho),),
                         _pos_roots=self._pos_roots)

    def __eq__(self, other):
        return (isinstance(other, AmpleList) and self.h0 == other.h0
                and self.rhos == other.rhos)

    def __hash__(self):
        return hash((self.h0, self.rhos))

    def __repr__(self):
        return f"AmpleList(h0={self.h0}, rhos=<{len(self.rhos)} vectors>)"


def lex_tuple(L: Lattice, a: AmpleList, x):
    return tuple(inner(L, w, x) for w in a.vectors())


def lex_sign(L: Lattice, a: AmpleList, x) -> int:
    """Sign of <a, x>: the sign of the first nonzero pairing against the
    list, or 0 when all pairings vanish."""
    for w in a.vectors():
        p = inner(L, w, x)
        if p != 0:
            return 1 if p > 0 else -1
    return 0


def is_ample_list(L: Lattice, a: AmpleList) -> bool:
    """True iff h0 has positive square-norm and no root orthogonal to h0
    pairs to zero with every rho_i."""
    if norm(L, a.h0) <= 0:
        return False
    for r in set_R(L, a.h0):
        if all(inner(L, rho, r) == 0 for rho in a.rhos):
            return False
    return True


def positive_roots_at(L: Lattice, a: AmpleList):
    """The half of the roots orthogonal to h0 with positive list-sign."""
    if a._pos_roots is None:
        roots = set_R(L, a.h0)
        pos = []
        for r in roots:
            s = lex_sign(L, a, r)
            if s == 0:
                raise ValueError("list is not ample: root with zero sign")
            if s > 0:
                pos.append(r)
        if 2 * len(pos) != len(roots):
            raise ValueError("positive system is not half of the roots")
        a._pos_roots = tuple(pos)
    return a._pos_roots


def chamber_contains(L: Lattice, a: AmpleList, v) -> bool:
    """Membership of v in the chamber D(a): no separating root between h0
    and v, and v pairs nonnegatively with every positive root."""
    if norm(L, v) <= 0 or inner(L, v, a.h0) <= 0:
        raise ValueError("chamber test requires v in the positive cone")
    if any(inner(L, v, r) < 0 for r in positive_roots_at(L, a)):
        return False
    return not set_S(L, a.h0, v)


class TieBreakError(RuntimeError):
    """Random extension failed to separate crossing tuples."""


def send_to_chamber(L: Lattice, a: AmpleList, v, rng, max_extensions: int = 32):
    """Reflect v into the chamber D(a).

    Returns (h_v, word, extended_list): h_v lies in D(a) with the same
    square-norm as v, word is the ordered tuple of (-2)-vectors whose
    reflections were applied (first applied first), and extended_list is
    `a` plus any tie-breaking vectors that were appended (it defines the
    same chamber).

    The walls to cross are the separating roots of (h0, v) together with
    the positive roots pairing negatively with v.  Each wall r gets the
    rational tuple (-1/<v,r>) * (<h0,r>, <rho_1,r>, ...); walls are
    crossed from the one nearest v, i.e. in decreasing lexicographic
    tuple order.  Equal tuples are separated by appending a random vector
    to the list, which leaves the chamber unchanged.
    """
    v = tuple(v)
    d = norm(L, v)
    if d <= 0:
        raise ValueError("send_to_chamber requires positive square-norm")
    walls = list(set_S(L, a.h0, v))
    walls += [r for r in positive_roots_at(L, a) if inner(L, v, r) < 0]
    if not walls:
        return v, (), a
    current = a
    for _ in range(max_extensions):
        tuples = []
        for r in walls:
            vr = inner(L, v, r)
            tuples.append(tuple(Fraction(-p, vr) for p in
                                (inner(L, w, r) for w in current.vectors())))
        if len(set(tuples)) == len(tuples):
            break
        rho = tuple(rng.randint(-3, 3) for _ in range(L.rank))
        if all(c == 0 for c in rho):
            continue
        current = current.extended(rho)
    else:
        raise TieBreakError(
            f"could not separate wall tuples after {max_extensions} extensions")
    order = sorted(range(len(walls)), key=lambda i: tuples[i], reverse=True)
    h = v
    word = []
    for i in order:
        h = reflect(L, walls[i], h)
        word.append(walls[i])
    assert norm(L, h) == d
    return h, tuple(word), current
