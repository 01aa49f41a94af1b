"""Double-plane involutions attached to square-2 polarizations.

A polarization h of square-norm 2 in the nef chamber with no null
vector pairing to 1 determines a degree-2 map to the plane.  The roots
orthogonal to h that are positive for the ample list split into
indecomposable ADE configurations (the contracted curve classes over the
branch-curve singularities); the covering involution fixes h and the
sums r + r^tau and negates their orthogonal complement.  All of that is
integral linear algebra, done here exactly.
"""

from dataclasses import dataclass
from fractions import Fraction

from .chamber import AmpleList, chamber_contains, lex_sign
from .enumeration import set_F, set_R
from .exactalg import IntMatrix, solve_exact
from .lattice import Lattice, add, inner, norm


@dataclass(frozen=True)
class ADEComponent:
    """One indecomposable configuration with its Figure-style labeling.

    kind is "A", "D" or "E"; labeled_roots[i] is the root labeled i+1,
    so labeled_roots follows a_1..a_l / d_1..d_m / e_1..e_n.
    """

    kind: str
    rank: int
    labeled_roots: tuple

    @property
    def name(self) -> str:
        return f"{self.kind}{self.rank}"


def is_polarization_deg2(L: Lattice, a: AmpleList, h) -> bool:
    """True iff h (of square-norm 2) lies in the chamber of `a` and no
    null vector pairs to 1 with it."""
    if norm(L, h) != 2:
        raise ValueError("polarization test requires square-norm 2")
    return chamber_contains(L, a, h) and not set_F(L, h)


def _adjacency(L, roots):
    n = len(roots)
    adj = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            p = inner(L, roots[i], roots[j])
            if p == 1:
                adj[i].append(j)
                adj[j].append(i)
            elif p != 0:
                raise ValueError(
                    f"root pairing {p} outside {{0,1}}: not an ADE configuration")
    return adj


def classify_component(L: Lattice, roots) -> ADEComponent:
    """Classify a connected set of pairwise (-2)-roots and label it.

    Labels follow the chain/branch conventions: A_l is the chain
    a_1 - ... - a_l; D_m hangs d_1 off d_3 of the chain d_2 - d_3 - ... - d_m;
    E_n hangs e_1 off e_4 of the chain e_2 - ... - e_n.  Symmetric
    labelings are tie-broken by lexicographic root coordinates (the
    involution action is invariant under those ties).
    """
    roots = tuple(roots)
    n = len(roots)
    adj = _adjacency(L, roots)
    edge_count = sum(len(x) for x in adj) // 2
    if edge_count != n - 1:
        raise ValueError("configuration contains a cycle: not ADE")
    if any(len(x) > 3 for x in adj):
        raise ValueError("vertex of degree > 3: not ADE")
    branch = [i for i in range(n) if len(adj[i]) == 3]
    if len(branch) > 1:
        raise ValueError("multiple branch vertices: not ADE")

    def walk(start, first):
        # path from branch point `start` into arm beginning at `first`
        path = [first]
        prev, cur = start, first
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                return path
            prev, cur = cur, nxt[0]
            path.append(cur)

    if not branch:
        ends = [i for i in range(n) if len(adj[i]) <= 1]
        if n == 1:
            return ADEComponent("A", 1, roots)
        start = min(ends, key=lambda i: roots[i])
        chain = [start] + walk(start, [x for x in adj[start]][0])
        return ADEComponent("A", n, tuple(roots[i] for i in chain))

    b = branch[0]
    arms = sorted((walk(b, x) for x in adj[b]), key=len)
    lens = tuple(len(p) for p in arms)
    if lens[0] != 1:
        raise ValueError(f"arm lengths {lens}: not ADE")
    if lens[1] == 1:
        # D_n: two short arms are d_1/d_2 (lex tie-break), branch is d_3
        short1, short2 = sorted((roots[arms[0][0]], roots[arms[1][0]]))
        labeled = [short1, short2, roots[b]] + [roots[i] for i in arms[2]]
        return ADEComponent("D", n, tuple(labeled))
    if lens[1] == 2 and lens[2] in (2, 3, 4):
        # E_n: e_1 is the length-1 arm, e_4 the branch; for E6 the two
        # length-2 arms are swapped by the involution, tie-break by lex
        if lens[2] == 2:
            arm_a = [roots[i] for i in arms[1]]
            arm_b = [roots[i] for i in arms[2]]
            if arm_b < arm_a:
                arm_a, arm_b = arm_b, arm_a
        else:
            arm_a = [roots[i] for i in arms[1]]
            arm_b = [roots[i] for i in arms[2]]
        labeled = ([arm_a[1], arm_a[0], roots[b]] + arm_b)
        labeled.insert(0, roots[arms[0][0]])
        return ADEComponent("E", n, tuple(labeled))
    raise ValueError(f"arm lengths {lens}: not ADE")


def tau_action(comp: ADEComponent):
    """The involution's permutation of the labeled roots, as a tuple of
    image indices (0-based)."""
    n = comp.rank
    if comp.kind == "A":
        return tuple(n - 1 - i for i in range(n))
    if comp.kind == "D":
        if n % 2 == 0:
            return tuple(range(n))
        return (1, 0) + tuple(range(2, n))
    if comp.kind == "E":
        if n == 6:
            # e_1 fixed, e_i -> e_{8-i}: labels (1..6) map to (1,6,5,4,3,2)
            return (0, 5, 4, 3, 2, 1)
        return tuple(range(n))
    raise ValueError(f"unknown kind {comp.kind!r}")


def exceptional_classes(L: Lattice, a: AmpleList, h):
    """The indecomposable configurations of positive roots orthogonal to h.

    A positive root is kept iff it is not a sum of two positive roots
    (simple = indecomposable in a finite ADE root system); components of
    the pairing-1 graph are then classified.
    """
    roots = set_R(L, h)
    pos = [r for r in roots if lex_sign(L, a, r) > 0]
    pos_set = set(pos)
    simple = [r for r in pos
              if not any(tuple(x - y for x, y in zip(r, s)) in pos_set
                         for s in pos)]
    # split into connected components of the pairing graph
    adj = _adjacency(L, simple)
    seen = [False] * len(simple)
    comps = []
    for i in range(len(simple)):
        if seen[i]:
            continue
        stack, group = [i], []
        seen[i] = True
        while stack:
            x = stack.pop()
            group.append(x)
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comps.append(classify_component(L, tuple(simple[j] for j in group)))
    comps.sort(key=lambda c: (c.kind, c.rank, c.labeled_roots))
    return tuple(comps)


def singularity_string(components) -> str:
    """Canonical sum like "2A1+A7+A9": sorted by (letter, rank), repeats
    compressed with a count prefix."""
    names = sorted((c.kind, c.rank) for c in components)
    out = []
    i = 0
    while i < len(names):
        j = i
        while j < len(names) and names[j] == names[i]:
            j += 1
        count = j - i
        base = f"{names[i][0]}{names[i][1]}"
        out.append(f"{count}{base}" if count > 1 else base)
        i = j
    return "+".join(out)


def involution_matrix(L: Lattice, h, components) -> IntMatrix:
    """Matrix of the involution: +1 on span{h, r + r^tau}, -1 on its
    orthogonal complement, acting on row vectors from the right.

    Computed as 2 P - I with P the exact orthogonal projection onto the
    fixed space; integrality of every entry is asserted.
    """
    span = [tuple(h)]
    seen = {tuple(h)}
    for comp in components:
        perm = tau_action(comp)
        for i, r in enumerate(comp.labeled_roots):
            s = add(r, comp.labeled_roots[perm[i]])
            if s not in seen:
                seen.add(s)
                span.append(s)
    # drop rational dependencies, keeping the listed order
    basis = []
    for w in span:
        if _independent(L, basis, w):
            basis.append(w)
    m = len(basis)
    wg = IntMatrix([[inner(L, basis[i], basis[j]) for j in range(m)]
                    for i in range(m)])
    rows = []
    n = L.rank
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        rhs = [inner(L, e, b) for b in basis]
        coeffs = solve_exact(wg, rhs)
        proj = [sum(coeffs[k] * basis[k][j] for k in range(m)) for j in range(n)]
        row = [2 * proj[j] - Fraction(e[j]) for j in range(n)]
        if any(x.denominator != 1 for x in row):
            raise ArithmeticError("involution matrix is not integral")
        rows.append([int(x) for x in row])
    mat = IntMatrix(rows)
    _assert_involution(L, h, mat)
    return mat


def _independent(L, basis, w):
    # rational independence via the Gram of the candidate set; the span
    # vectors pair nondegenerately (h and root sums), so Gram rank works
    cand = basis + [w]
    g = [[inner(L, x, y) for y in cand] for x in cand]
    return _rank(g) == len(cand)


def _rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def _assert_involution(L, h, mat):
    n = L.rank
    if mat * mat != IntMatrix.identity(n):
        raise ArithmeticError("matrix is not an involution")
    if mat * L.gram * mat.transpose() != L.gram:
        raise ArithmeticError("matrix is not an isometry")
    if mat.mul_vec_left(tuple(h)) != tuple(h):
        raise ArithmeticError("matrix does not fix the polarization")


def smooth_branch_matrix(L: Lattice, h) -> IntMatrix:
    """Fast path when no root is orthogonal to h (smooth branch curve):
    x -> <x,h> h - x.  Caller guarantees set_R(h) and set_F(h) are empty;
    equals involution_matrix(L, h, ()) in that case."""
    if norm(L, h) != 2:
        raise ValueError("smooth branch matrix requires square-norm 2")
    n = L.rank
    gh = L.gram.mul_vec_right(tuple(h))
    rows = [[gh[i] * h[j] - (1 if i == j else 0) for j in range(n)]
            for i in range(n)]
    mat = IntMatrix(rows)
    _assert_involution(L, h, mat)
    return mat


@dataclass(frozen=True)
class InvolutionRecord:
    """A polarization, its configurations, and the involution matrix."""

    h: tuple
    components: tuple
    matrix: IntMatrix
    singularities: str

    @staticmethod
    def build(L: Lattice, a: AmpleList, h) -> "InvolutionRecord":
        comps = exceptional_classes(L, a, h)
        if comps:
            mat = involution_matrix(L, h, comps)
        else:
            mat = smooth_branch_matrix(L, h)
        return InvolutionRecord(h=tuple(h), components=comps, matrix=mat,
                                singularities=singularity_string(comps))

    def to_json_dict(self):
        return {
            "h": list(self.h),
            "singularities": self.singularities,
            "matrix": [list(r) for r in self.matrix.rows],
        }

    @staticmethod
    def from_json_dict(d) -> "InvolutionRecord":
        return InvolutionRecord(
            h=tuple(int(x) for x in d["h"]),
            components=(),
            matrix=IntMatrix([[int(x) for x in row] for row in d["matrix"]]),
            singularities=d["singularities"],
        )
