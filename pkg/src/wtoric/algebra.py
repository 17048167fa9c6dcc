"""Stanley-Reisner rings of labelled polytopes and their polytopal algebras.

A monomial of degree d is a sorted tuple of d label indices, e.g. ``(0, 0, 3)``
for X_0^2 X_3.  The algebra A(Q) = SR(Q)/(I + J) is stored degree by degree:
the face-supported monomials of SR^d, and the reduced row echelon form of the
relation space R^d = sum_i eta_i SR^{d-1}.  Non-pivot monomials form the basis
of A^d.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .exact import Matrix, SparseEchelon, rank, rref, sign
from .polytope import f_vector

__all__ = [
    "FaceComplex",
    "GradedAlgebra",
    "AlgebraElement",
    "face_complex_of",
    "linear_forms",
    "sr_monomial_basis",
    "build_graded_algebra",
    "h_from_f",
    "h_vector",
    "minimal_nonfaces",
]


class FaceComplex:
    """Facet labels of a polytope with the shared-vertex intersection oracle."""

    def __init__(self, names, vertex_bits, n_vertices, dim):
        self.names = list(names)
        self.vertex_bits = list(vertex_bits)
        self.n_vertices = n_vertices
        self.dim = dim
        self._all = (1 << n_vertices) - 1

    def __len__(self):
        return len(self.names)

    def common(self, labels):
        b = self._all
        for i in labels:
            b &= self.vertex_bits[i]
        return b

    def is_face(self, labels):
        return self.common(labels) != 0

    def faces(self, max_size=None):
        """All label sets with nonempty intersection (sorted tuples), including ()."""
        m = len(self.names) if max_size is None else max_size
        out = [()]
        stack = [((), self._all, 0)]
        while stack:
            cur, bits, start = stack.pop()
            if len(cur) == m:
                continue
            for j in range(start, len(self.names)):
                nb = bits & self.vertex_bits[j]
                if nb:
                    s = cur + (j,)
                    out.append(s)
                    stack.append((s, nb, j + 1))
        out.sort(key=lambda s: (len(s), s))
        return out


def face_complex_of(poly):
    """FaceComplex of a WPolytope (labels = facets) or a QuotientPolytope."""
    if hasattr(poly, "parent"):
        names = [F.name for F in poly.facets]
    else:
        names = [f"X{j}" for j in range(len(poly.facets))]
    return FaceComplex(names, [F.vbits for F in poly.facets], len(poly.vertices), poly.dim)


def linear_forms(poly):
    """eta_i coefficients: eta_i[L] = <alpha_i, l_L> for every label L."""
    n = poly.dim
    return [[F.pairing[i] for F in poly.facets] for i in range(n)]


def h_from_f(f):
    """h_Q(t) = sum_i f_{i-1} t^i (1-t)^{n-i}."""
    n = len(f) - 1
    h = [0] * (n + 1)
    for i in range(n + 1):
        # expand t^i (1-t)^(n-i)
        binom = 1
        for j in range(n - i + 1):
            h[i + j] += f[i] * binom * (-1) ** j
            binom = binom * (n - i - j) // (j + 1)
    return h


def h_vector(fc):
    """(f, h) of the polytope behind a face complex, from its face lattice."""
    f = f_vector(fc.vertex_bits, fc.n_vertices, fc.dim)
    return f, h_from_f(f)


def sr_monomial_basis(fc, d, faces=None):
    """Degree-d monomials whose support is a face, in lexicographic order."""
    if d == 0:
        return [()]
    faces = fc.faces(d) if faces is None else faces
    out = []
    for S in faces:
        if not S or len(S) > d:
            continue
        for extra in combinations_with_replacement(S, d - len(S)):
            out.append(tuple(sorted(S + extra)))
    out.sort()
    return out


def minimal_nonfaces(fc, max_size=None):
    """Minimal label sets with empty intersection (generators of the SR ideal)."""
    m = fc.dim + 1 if max_size is None else max_size
    faces = set(fc.faces(m))
    out = []
    for S in sorted(faces, key=lambda s: (len(s), s)):
        if len(S) >= m:
            continue
        for j in range((S[-1] + 1) if S else 0, len(fc)):
            T = S + (j,)
            if T in faces:
                continue
            if all(T[:i] + T[i + 1:] in faces for i in range(len(T))):
                out.append(T)
    out.sort(key=lambda s: (len(s), s))
    return out


def _merge(a, b):
    return tuple(sorted(a + b))


class AlgebraElement:
    """Homogeneous element: degree and sparse coefficients over monomials."""

    __slots__ = ("degree", "coeffs", "canonical")

    def __init__(self, degree, coeffs, canonical=False):
        self.degree = degree
        self.coeffs = {m: c for m, c in coeffs.items() if c}
        self.canonical = canonical

    def __add__(self, other):
        if other.degree != self.degree:
            raise ValueError("adding elements of different degrees")
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        return AlgebraElement(self.degree, out, False)

    def __neg__(self):
        return AlgebraElement(self.degree, {m: -c for m, c in self.coeffs.items()}, self.canonical)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return AlgebraElement(self.degree, {m: c * v for m, v in self.coeffs.items()}, self.canonical)

    def is_zero(self):
        return not self.coeffs

    def __repr__(self):
        terms = " + ".join(f"({c})*{m}" for m, c in sorted(self.coeffs.items()))
        return f"AlgebraElement(deg {self.degree}: {terms or '0'})"


class GradedAlgebra:
    """A(Q) = SR(Q)/(I + J) with per-degree monomial bases and relation spaces."""

    def __init__(self, fc, forms, field):
        self.fc = fc
        self.forms = forms
        self.field = field
        self.n = fc.dim
        self.sr_basis = []
        self.sr_index = []
        self.reductions = []  # per degree: pivot monomial -> {non-pivot monomial: coeff}
        self.basis = []  # per degree: non-pivot monomials
        self.basis_index = []
        self.f = None
        self.h = None
        self.top_monomial = None
        self.top_scale = None

    @property
    def dims(self):
        return [len(b) for b in self.basis]

    def dim(self, d):
        return len(self.basis[d]) if 0 <= d <= self.n else 0

    def is_face_monomial(self, m):
        return self.fc.is_face(set(m))

    # elements -----------------------------------------------------------

    def monomial(self, m):
        m = tuple(sorted(m))
        return AlgebraElement(len(m), {m: self.field.one})

    def generator(self, label):
        return self.monomial((label,))

    def one(self):
        return AlgebraElement(0, {(): self.field.one}, True)

    def element(self, degree, coeffs):
        return AlgebraElement(degree, dict(coeffs))

    def linear_form(self, coeffs):
        return AlgebraElement(1, {(j,): c for j, c in enumerate(coeffs) if c})

    def eta(self, i):
        return self.linear_form(self.forms[i])

    def normal_form(self, x):
        """Reduce modulo I + J; result is expressed over the A^d basis monomials."""
        d = x.degree
        if d > self.n:
            return AlgebraElement(d, {}, True)
        red = self.reductions[d]
        bidx = self.basis_index[d]
        out = {}
        for m, c in x.coeffs.items():
            if m in bidx:
                out[m] = out.get(m, 0) + c
            elif m in red:
                for k, v in red[m].items():
                    out[k] = out.get(k, 0) + c * v
            # non-face monomials lie in I and vanish
        return AlgebraElement(d, out, True)

    def multiply(self, x, y):
        d = x.degree + y.degree
        if d > self.n:
            raise ValueError(f"degree {d} exceeds the top degree {self.n}")
        out = {}
        fc = self.fc
        for a, ca in x.coeffs.items():
            for b, cb in y.coeffs.items():
                m = _merge(a, b)
                if not fc.is_face(set(m)):
                    continue
                out[m] = out.get(m, 0) + ca * cb
        return self.normal_form(AlgebraElement(d, out))

    def product(self, elements):
        """Product of several elements (zero once the degree passes the top)."""
        acc = self.one()
        for e in elements:
            if acc.degree + e.degree > self.n:
                return AlgebraElement(acc.degree + e.degree, {}, True)
            acc = self.multiply(acc, e)
        return acc

    def coords(self, x):
        """Coordinate vector of x over the A^d basis."""
        x = x if x.canonical else self.normal_form(x)
        zero = self.field.zero
        return [x.coeffs.get(m, zero) for m in self.basis[x.degree]]

    def from_coords(self, d, vec):
        return AlgebraElement(d, {m: c for m, c in zip(self.basis[d], vec) if c}, True)

    def top_coefficient(self, x):
        """Coefficient of x in A^n relative to the chosen top class (a vertex monomial)."""
        if x.degree != self.n:
            raise ValueError("top_coefficient needs a top-degree element")
        x = x if x.canonical else self.normal_form(x)
        return x.coeffs.get(self.top_monomial, self.field.zero) / self.top_scale

    # group action -------------------------------------------------------

    def act_monomial(self, perm, m):
        return tuple(sorted(perm[i] for i in m))

    def act(self, perm, x):
        out = {}
        for m, c in x.coeffs.items():
            k = self.act_monomial(perm, m)
            out[k] = out.get(k, 0) + c
        return self.normal_form(AlgebraElement(x.degree, out))

    def group_action(self, perm, d):
        """Matrix of a label permutation on A^d; column j is the image of basis_j."""
        if sorted(perm) != list(range(len(self.fc))):
            raise ValueError("group element does not permute the labels")
        cols = [self.coords(self.act(perm, self.monomial(m))) for m in self.basis[d]]
        k = len(cols)
        return Matrix([[cols[j][i] for j in range(k)] for i in range(k)], k)

    def trace(self, perm, d):
        t = self.field.zero
        for m in self.basis[d]:
            img = self.act(perm, self.monomial(m))
            t = t + img.coeffs.get(m, 0)
        return t

    def graded_character(self, perm):
        return [self.trace(perm, d) for d in range(self.n + 1)]

    def invariant_basis(self, gen_perms, d):
        """Basis (rref rows over the A^d basis) of the subspace fixed by the group.

        The Reynolds average of a monomial is proportional to its orbit sum, and
        images of orbit sums of SR^d monomials span the invariants of A^d.
        """
        seen = set()
        rows = []
        for m in self.sr_basis[d]:
            if m in seen:
                continue
            orbit = {m}
            frontier = [m]
            while frontier:
                nxt = []
                for x in frontier:
                    for p in gen_perms:
                        y = self.act_monomial(p, x)
                        if y not in orbit:
                            orbit.add(y)
                            nxt.append(y)
                frontier = nxt
            seen |= orbit
            avg = AlgebraElement(d, {x: self.field.one for x in orbit})
            rows.append(self.coords(self.normal_form(avg)))
        if not self.basis[d]:
            return []
        r, red, _ = rref(Matrix(rows, len(self.basis[d])))
        return [list(row) for row in red.entries[:r]]

    def fixed_subspace_by_kernels(self, gen_perms, d):
        """Invariants as the intersection of ker(g - 1) over generators (independent check)."""
        k = self.dim(d)
        if k == 0:
            return []
        stacked = []
        for p in gen_perms:
            M = self.group_action(p, d)
            for i in range(k):
                stacked.append([M[i][j] - (1 if i == j else 0) for j in range(k)])
        if not stacked:
            return [[self.field.one if i == j else self.field.zero for j in range(k)] for i in range(k)]
        from .exact import kernel_basis

        return [list(v) for v in kernel_basis(Matrix(stacked, k))]

    # duality -------------------------------------------------------------

    def pairing_matrix(self, d):
        rows = []
        for u in self.basis[d]:
            row = []
            for v in self.basis[self.n - d]:
                row.append(self.top_coefficient(self.multiply(self.monomial(u), self.monomial(v))))
            rows.append(row)
        return Matrix(rows, len(self.basis[self.n - d]))

    def pd_check(self):
        for d in range(self.n + 1):
            M = self.pairing_matrix(d)
            if M.rows != M.cols or rank(M) != M.rows:
                return False
        return True

    def vertex_monomials(self):
        return [m for m in self.sr_basis[self.n] if len(set(m)) == self.n]

    def vertex_monomial_consistency(self):
        """Every square-free top-degree face monomial is a positive multiple of the top class."""
        return all(sign(self.top_coefficient(self.monomial(m))) > 0 for m in self.vertex_monomials())

    def relation_rank(self, d):
        return len(self.reductions[d])

    def presentation_json(self, scalar):
        return {
            "variables": list(self.fc.names),
            "sr_ideal_generators": [list(t) for t in minimal_nonfaces(self.fc)],
            "linear_forms": [[scalar(c) for c in row] for row in self.forms],
            "dims": self.dims,
            "f_vector": self.f,
            "h_vector": self.h,
        }


def build_graded_algebra(fc, forms, field, check=True):
    """Build A(Q) degree by degree (algebraic degree d = topological degree 2d)."""
    ga = GradedAlgebra(fc, forms, field)
    n = fc.dim
    if rank([list(r) for r in forms]) != n:
        raise ValueError("linear forms do not have rank n; facet normals must span V")
    faces = fc.faces(n)
    ga.f, ga.h = h_vector(fc)
    nz_forms = [[(j, c) for j, c in enumerate(row) if c] for row in forms]
    for d in range(n + 1):
        basis = sr_monomial_basis(fc, d, faces)
        index = {m: i for i, m in enumerate(basis)}
        ga.sr_basis.append(basis)
        ga.sr_index.append(index)
        ech = SparseEchelon()
        if d > 0:
            for row in nz_forms:
                for m in ga.sr_basis[d - 1]:
                    vec = {}
                    for j, c in row:
                        k = index.get(_merge(m, (j,)))
                        if k is not None:
                            vec[k] = vec.get(k, 0) + c
                    ech.add(vec)
        red = ech.reduced_rows()
        reductions = {}
        for col, r in red.items():
            reductions[basis[col]] = {basis[k]: -v for k, v in r.items() if k != col}
        ga.reductions.append(reductions)
        qb = [m for m in basis if m not in reductions]
        ga.basis.append(qb)
        ga.basis_index.append({m: i for i, m in enumerate(qb)})
        if check and len(qb) != ga.h[d]:
            raise ValueError(f"dim A^{d} = {len(qb)} but h_{d} = {ga.h[d]}; non-simple input?")
    if len(ga.basis[n]) != 1:
        raise ValueError(f"dim A^n = {len(ga.basis[n])}, expected 1")
    ga.top_monomial = ga.basis[n][0]
    verts = ga.vertex_monomials()
    if not verts:
        raise ValueError("no vertex monomial in top degree")
    first = ga.normal_form(ga.monomial(verts[0]))
    ga.top_scale = first.coeffs.get(ga.top_monomial, field.zero)
    if not ga.top_scale:
        raise ValueError("first vertex monomial vanishes in A^n")
    return ga
