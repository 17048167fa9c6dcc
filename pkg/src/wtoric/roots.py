"""Root systems in simple-root coordinates and their finite reflection groups."""

from __future__ import annotations

import os
import re
from collections import deque
from fractions import Fraction

from .exact import Field, Matrix, check_gram, inner_product, solve

__all__ = [
    "RootSystemData",
    "WeylGroup",
    "ParabolicSubgroup",
    "SUPPORTED",
    "parse_type_label",
    "build_root_system",
    "reflection",
    "generate_group",
    "orbit",
    "stabilizer_in",
    "cosets",
    "default_rank_cap",
]

# (family, rank) pairs the engine builds.
SUPPORTED = {
    ("A", 1), ("A", 2), ("A", 3), ("A", 4),
    ("B", 2), ("B", 3), ("B", 4),
    ("C", 3), ("C", 4),
    ("D", 4),
    ("F", 4),
    ("G", 2),
    ("I5", 2),
    ("H", 3),
}

CLASSICAL_ORDER = {
    ("A", 1): 2, ("A", 2): 6, ("A", 3): 24, ("A", 4): 120,
    ("B", 2): 8, ("B", 3): 48, ("B", 4): 384,
    ("C", 3): 48, ("C", 4): 384,
    ("D", 4): 192, ("F", 4): 1152, ("G", 2): 12,
    ("I5", 2): 10, ("H", 3): 120,
}


def default_rank_cap():
    return int(os.environ.get("WTORIC_RANK_CAP", "4"))


def parse_type_label(label):
    """Parse "A2", "B3", "I2(5)", "H3", ... into (family, rank)."""
    s = label.strip().upper().replace(" ", "")
    m = re.fullmatch(r"I2\(5\)|I5|I_2\(5\)", s)
    if m:
        return "I5", 2
    m = re.fullmatch(r"([ABCDEFGH])_?(\d+)", s)
    if not m:
        raise ValueError(f"unrecognised root system label {label!r}")
    return m.group(1), int(m.group(2))


class RootSystemData:
    """Simple roots (standard basis), Gram form and the full root list."""

    def __init__(self, family, rank, gram, field, all_roots):
        self.family = family
        self.rank = rank
        self.gram = gram
        self.field = field
        self.all_roots = all_roots
        self.simple_roots = [tuple(field.one if i == j else field.zero for j in range(rank)) for i in range(rank)]
        self._root_index = {r: i for i, r in enumerate(all_roots)}

    @property
    def type_label(self):
        return "I2(5)" if self.family == "I5" else f"{self.family}{self.rank}"

    @property
    def crystallographic(self):
        return self.family not in ("I5", "H")

    @property
    def discriminant(self):
        return self.field.d

    def ip(self, u, v):
        return inner_product(u, v, self.gram)

    def root_index(self, v):
        return self._root_index.get(tuple(v))

    def is_root(self, v):
        return tuple(v) in self._root_index

    def pairings(self, x):
        """(<x, alpha_i>)_i for x in root coordinates."""
        return self.gram @ x

    def from_pairings(self, f):
        """Root coordinates of the vector x with <x, alpha_i> = f_i."""
        return solve(self.gram, f)

    def weight_to_root(self, coords):
        """Fundamental-weight coordinates (coefficients of omega_i) to root coordinates."""
        if len(coords) != self.rank:
            raise ValueError(f"expected {self.rank} weight coordinates, got {len(coords)}")
        f = [self.field.coerce(c) * self.gram[i][i] / 2 for i, c in enumerate(coords)]
        return self.from_pairings(f)

    def __repr__(self):
        return f"RootSystemData({self.type_label}, {len(self.all_roots)} roots)"


def _gram_entries(family, n, F):
    half = Fraction(1, 2)
    g = [[F(0)] * n for _ in range(n)]

    def link(i, j, v):
        g[i][j] = g[j][i] = F.coerce(v)

    if family == "A":
        for i in range(n):
            g[i][i] = F(2)
        for i in range(n - 1):
            link(i, i + 1, -1)
    elif family == "B":
        for i in range(n):
            g[i][i] = F(2) if i < n - 1 else F(1)
        for i in range(n - 1):
            link(i, i + 1, -1)
    elif family == "C":
        for i in range(n):
            g[i][i] = F(1) if i < n - 1 else F(2)
        for i in range(n - 2):
            link(i, i + 1, -half)
        link(n - 2, n - 1, -1)
    elif family == "D":
        for i in range(n):
            g[i][i] = F(2)
        for i in range(n - 2):
            link(i, i + 1, -1)
        link(n - 3, n - 1, -1)
    elif family == "F":
        g[0][0] = g[1][1] = F(2)
        g[2][2] = g[3][3] = F(1)
        link(0, 1, -1)
        link(1, 2, -1)
        link(2, 3, -half)
    elif family == "G":
        # alpha_1 short (norm^2 2/3), alpha_2 long (norm^2 2), angle 5pi/6
        g[0][0] = F(Fraction(2, 3))
        g[1][1] = F(2)
        link(0, 1, -1)
    elif family == "I5":
        g[0][0] = g[1][1] = F(2)
        link(0, 1, F(-half, -half))  # -2 cos(pi/5) = -(1 + sqrt5)/2
    elif family == "H":
        for i in range(n):
            g[i][i] = F(2)
        link(0, 1, F(-half, -half))
        link(1, 2, -1)
    else:
        raise ValueError(f"unsupported family {family!r}")
    return Matrix(g, n)


def build_root_system(type_label, rank=None, rank_cap=None):
    """Build the root system of the given type.

    ``type_label`` is either a family letter (with ``rank``) or a full label such
    as ``"B3"`` or ``"I2(5)"``.  Roots are generated to closure under the simple
    reflections, starting from the simple roots.
    """
    if rank is None:
        family, rank = parse_type_label(type_label)
    elif type_label.upper() in ("I", "I5", "I2(5)"):
        family = "I5"
    else:
        family = type_label.upper()
    cap = default_rank_cap() if rank_cap is None else rank_cap
    if rank > cap:
        raise ValueError(f"rank {rank} exceeds the configured cap {cap}")
    if (family, rank) not in SUPPORTED:
        raise ValueError(f"unsupported root system {family}{rank}")
    field = Field(5 if family in ("I5", "H") else 1)
    gram = _gram_entries(family, rank, field)
    check_gram(gram)
    simple = [tuple(field.one if i == j else field.zero for j in range(rank)) for i in range(rank)]
    refl = [_reflection_matrix(gram, a) for a in simple]
    seen = {s: None for s in simple}
    queue = deque(simple)
    while queue:
        v = queue.popleft()
        for r in refl:
            w = r @ v
            if w not in seen:
                seen[w] = None
                queue.append(w)
    roots = list(seen)
    for v in roots:
        if tuple(-x for x in v) not in seen:
            raise AssertionError("root set not closed under negation")
    return RootSystemData(family, rank, gram, field, roots)


def _reflection_matrix(gram, alpha):
    n = gram.rows
    galpha = gram @ alpha  # <alpha, e_j> for each j
    na = inner_product(alpha, alpha, gram)
    # r(x) = x - 2<x,a>/<a,a> a ; column j is r(e_j)
    one = na / na
    zero = one - one
    cols = []
    for j in range(n):
        c = 2 * galpha[j] / na
        cols.append([(one if i == j else zero) - c * alpha[i] for i in range(n)])
    return Matrix([[cols[j][i] for j in range(n)] for i in range(n)], n)


def reflection(rs, alpha):
    """Matrix (on root coordinates) of the reflection in the hyperplane orthogonal to ``alpha``."""
    alpha = tuple(alpha)
    if not rs.is_root(alpha):
        raise ValueError(f"{alpha} is not a root of {rs.type_label}")
    return _reflection_matrix(rs.gram, alpha)


class WeylGroup:
    """Explicit element list of W with matrices, root permutations and reduced words.

    Elements are indexed by BFS discovery order; index 0 is the identity.
    """

    def __init__(self, rs, matrices, words, parents):
        self.rs = rs
        self.matrices = matrices
        self.words = words
        self._parents = parents
        self._index = {m.entries: i for i, m in enumerate(matrices)}
        roots = rs.all_roots
        self.root_permutation = [tuple(rs.root_index(m @ r) for r in roots) for m in matrices]
        self._perm_index = {p: i for i, p in enumerate(self.root_permutation)}
        self.generators = [self._index[_reflection_matrix(rs.gram, a).entries] for a in rs.simple_roots]
        self._mul_cache = {}

    identity_index = 0

    def __len__(self):
        return len(self.matrices)

    @property
    def order(self):
        return len(self.matrices)

    def index_of(self, matrix):
        return self._index.get(matrix.entries if isinstance(matrix, Matrix) else tuple(map(tuple, matrix)))

    def mul(self, i, j):
        """Index of w_i w_j (composition: apply w_j first)."""
        key = (i, j)
        r = self._mul_cache.get(key)
        if r is None:
            pi = self.root_permutation[i]
            pj = self.root_permutation[j]
            r = self._perm_index[tuple(pi[k] for k in pj)]
            self._mul_cache[key] = r
        return r

    def inv(self, i):
        p = self.root_permutation[i]
        q = [0] * len(p)
        for k, v in enumerate(p):
            q[v] = k
        return self._perm_index[tuple(q)]

    def act(self, i, v):
        return self.matrices[i] @ v

    def support(self, i):
        """Simple reflections (1-based) occurring in a reduced word of element i."""
        return frozenset(self.words[i])

    def parabolic(self, K):
        """The parabolic subgroup W_K for K a collection of 1-based simple indices."""
        K = frozenset(K)
        for k in K:
            if not 1 <= k <= self.rs.rank:
                raise ValueError(f"simple index {k} out of range 1..{self.rs.rank}")
        elems = sorted(i for i in range(len(self)) if self.support(i) <= K)
        return ParabolicSubgroup(K, elems)


class ParabolicSubgroup:
    """A subset K of simple indices together with the sorted element indices of W_K."""

    def __init__(self, K, element_indices):
        self.K = frozenset(K)
        self.element_indices = list(element_indices)

    def __len__(self):
        return len(self.element_indices)

    def __iter__(self):
        return iter(self.element_indices)

    def __contains__(self, i):
        return i in set(self.element_indices)

    @property
    def generators_1based(self):
        return sorted(self.K)

    def __repr__(self):
        return f"ParabolicSubgroup(K={sorted(self.K)}, order={len(self)})"


def generate_group(rs, max_size=20000):
    """BFS closure of the simple reflections; new element = g * r_i, generators in order r_1 < r_2 < ..."""
    n = rs.rank
    one = rs.field.one
    ident = Matrix.identity(n, one)
    gens = [_reflection_matrix(rs.gram, a) for a in rs.simple_roots]
    mats = [ident]
    words = [()]
    parents = [None]
    index = {ident.entries: 0}
    queue = deque([0])
    while queue:
        g = queue.popleft()
        for i, r in enumerate(gens):
            h = mats[g] @ r
            if h.entries in index:
                continue
            if len(mats) >= max_size:
                raise ValueError(f"group exceeds the safety cap of {max_size} elements")
            index[h.entries] = len(mats)
            mats.append(h)
            words.append(words[g] + (i + 1,))
            parents.append((g, i + 1))
            queue.append(len(mats) - 1)
    return WeylGroup(rs, mats, words, parents)


def orbit(w_group, subgroup, v):
    """Deduplicated orbit of ``v`` under ``subgroup`` (order of first appearance)."""
    v = tuple(v)
    seen = {}
    idx = subgroup.element_indices if subgroup is not None else range(len(w_group))
    for i in idx:
        x = w_group.matrices[i] @ v
        if x not in seen:
            seen[x] = None
    return list(seen)


def stabilizer_in(w_group, subgroup, predicate):
    """Elements of ``subgroup`` (indices) satisfying ``predicate(index)``."""
    return [i for i in subgroup.element_indices if predicate(i)]


def cosets(w_group, subgroup, stab):
    """Left coset representatives s of subgroup/stab; each is the minimal index in s*stab."""
    stab = list(stab)
    covered = set()
    reps = []
    for i in subgroup.element_indices:
        if i in covered:
            continue
        reps.append(i)
        for h in stab:
            covered.add(w_group.mul(i, h))
    if len(reps) * len(stab) != len(subgroup):
        raise AssertionError("coset decomposition does not tile the subgroup")
    return reps
