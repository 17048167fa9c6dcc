"""W-symmetric polytopes, their facet orbits, and chamber quotients P ∩ C_K.

Points are in simple-root coordinates.  A facet is stored by its pairing vector
``f`` (``f[i] = <alpha_i, l_F>``) and offset ``c``, so the facet inequality on a
point ``x`` is just ``f . x <= c``.  The normal itself is ``G^{-1} f``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

from .exact import Matrix, kernel_basis, rank, rref, sign, solve
from .roots import cosets

__all__ = [
    "Facet",
    "WPolytope",
    "FacetOrbitData",
    "QuotientFacet",
    "QuotientPolytope",
    "convex_hull",
    "affine_rank",
    "build_w_polytope",
    "classify",
    "facet_orbits",
    "quotient_polytope",
    "quotient_vertices_bruteforce",
    "simplicity_transfer_check",
    "face_lattice",
    "f_vector",
    "is_flag",
]


def _dot(f, x):
    s = 0
    for a, b in zip(f, x):
        if a and b:
            s = a * b + s
    return s


def _bits(indices):
    b = 0
    for i in indices:
        b |= 1 << i
    return b


def _members(bits):
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def affine_rank(points):
    """Dimension of the affine hull of a nonempty point list."""
    points = list(points)
    if len(points) <= 1:
        return 0
    p0 = points[0]
    return rank([[a - b for a, b in zip(p, p0)] for p in points[1:]])


# ---------------------------------------------------------------------------
# exact gift wrapping


def _affine_kernel(points, dim):
    """Basis of affine functionals (g, d) with g.x - d = 0 on all points."""
    rows = [list(p) + [-(p[0] - p[0] + 1)] for p in points]
    return kernel_basis(Matrix(rows, dim + 1))


def _proportional(u, v):
    return rank([list(u), list(v)]) < 2


def _rotate(points, phi, psi):
    """Rotate the supporting functional ``phi`` about the zero set of ``psi``.

    ``psi`` vanishes on the current contact set; the result is the extreme
    rotation that stays valid on every point, so it picks up new contact.
    """
    f, c = phi
    g, d = psi
    best = None
    for p in points:
        fp = _dot(f, p) - c
        if sign(fp) < 0:
            q = (_dot(g, p) - d) / fp
            if best is None or q < best:
                best = q
    mu = best
    return tuple(a - mu * b for a, b in zip(g, f)), d - mu * c


def _contact(points, phi):
    f, c = phi
    return [i for i, p in enumerate(points) if _dot(f, p) == c]


def _initial_facet(points, m):
    zero = points[0][0] - points[0][0]
    one = zero + 1
    lo = min(p[0] for p in points)
    f = tuple(-one if j == 0 else zero for j in range(m))
    phi = (f, -lo)
    contact = _contact(points, phi)
    while affine_rank([points[i] for i in contact]) < m - 1:
        ker = _affine_kernel([points[i] for i in contact], m)
        vec_phi = tuple(phi[0]) + (phi[1],)
        psi_vec = next(v for v in ker if not _proportional(v, vec_phi))
        psi = (psi_vec[:m], psi_vec[m])
        phi = _rotate(points, phi, psi)
        contact = _contact(points, phi)
    return phi, contact


def convex_hull(points):
    """Facets of the convex hull of a full-dimensional finite point set.

    Exact gift wrapping (ridge pivoting); ridges of each facet come from a
    recursive hull in the facet's affine hull.  Returns a list of
    ``(f, c, vertex_indices)`` with ``f.x <= c`` valid on all points.
    """
    points = [tuple(p) for p in points]
    m = len(points[0])
    if affine_rank(points) < m:
        raise ValueError("point set is not full-dimensional")
    zero = points[0][0] - points[0][0]
    one = zero + 1
    if m == 1:
        lo = min(p[0] for p in points)
        hi = max(p[0] for p in points)
        return [
            ((-one,), -lo, tuple(i for i, p in enumerate(points) if p[0] == lo)),
            ((one,), hi, tuple(i for i, p in enumerate(points) if p[0] == hi)),
        ]
    phi, contact = _initial_facet(points, m)
    facets = [(phi, tuple(contact))]
    seen = {frozenset(contact)}
    head = 0
    while head < len(facets):
        (f, c), verts = facets[head]
        head += 1
        for ridge in _ridges(points, verts, m):
            rpts = [points[i] for i in ridge]
            ker = _affine_kernel(rpts, m)
            vec_phi = tuple(f) + (c,)
            psi_vec = next(v for v in ker if not _proportional(v, vec_phi))
            g, d = psi_vec[:m], psi_vec[m]
            rset = set(ridge)
            probe = next(points[i] for i in verts if i not in rset)
            if sign(_dot(g, probe) - d) > 0:
                g = tuple(-x for x in g)
                d = -d
            new = _rotate(points, (f, c), (g, d))
            newv = _contact(points, new)
            key = frozenset(newv)
            if key not in seen:
                seen.add(key)
                facets.append((new, tuple(newv)))
    return [(tuple(f), c, v) for (f, c), v in facets]


def _ridges(points, verts, m):
    """Vertex-index sets of the facets of conv(points[verts]) inside its hyperplane."""
    sub = [points[i] for i in verts]
    p0 = sub[0]
    diffs = [[a - b for a, b in zip(p, p0)] for p in sub[1:]]
    _, _, piv = rref(Matrix(diffs, m).T)  # pivots index independent difference rows
    basis = [diffs[i] for i in piv]
    # coordinates that keep the projection injective on the affine hull
    _, _, cols = rref(Matrix(basis, m))
    proj = [tuple(p[j] for j in cols) for p in sub]
    out = []
    for _, _, vidx in convex_hull(proj):
        out.append(tuple(verts[i] for i in vidx))
    return out


# ---------------------------------------------------------------------------
# W-polytopes


class Facet:
    __slots__ = ("normal", "pairing", "offset", "vertices", "vbits", "orbit")

    def __init__(self, normal, pairing, offset, vertices, orbit):
        self.normal = normal
        self.pairing = pairing
        self.offset = offset
        self.vertices = vertices
        self.vbits = _bits(vertices)
        self.orbit = orbit

    def __repr__(self):
        return f"Facet(pairing={[str(x) for x in self.pairing]}, offset={self.offset}, |V|={len(self.vertices)})"


def _primitive_integral(vec):
    """Positive rescaling of a rational vector to a primitive integer vector."""
    fr = [Fraction(x) for x in vec]
    den = 1
    for x in fr:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    return Fraction(den, g)


def scaling_factor(rs, pairing, mode):
    """Positive factor that brings a representative normal into canonical form.

    ``root``: pairing vector primitive integral (normals primitive in the lattice
    dual to the root lattice).  ``weight``: coroot coordinates primitive
    integral (dual to the weight lattice).  ``field``: first nonzero pairing
    coordinate has absolute value 1.
    """
    if mode == "root":
        return _primitive_integral(pairing)
    if mode == "weight":
        root = rs.from_pairings(pairing)
        coroot = [x * rs.gram[i][i] / 2 for i, x in enumerate(root)]
        return _primitive_integral(coroot)
    if mode == "field":
        first = next(x for x in pairing if x)
        return 1 / abs(first)
    raise ValueError(f"unknown normal scaling mode {mode!r}")


class WPolytope:
    """conv(W(Lambda)) with exact facets, incidence and the W-action on both."""

    def __init__(self, rs, group, lambda_set, vertices, facets, vertex_perm, facet_perm, orbit_reps, scaling):
        self.rs = rs
        self.group = group
        self.lambda_set = lambda_set
        self.vertices = vertices
        self.facets = facets
        self.vertex_perm = vertex_perm
        self.facet_perm = facet_perm
        self.orbit_reps = orbit_reps
        self.scaling = scaling
        self.vertex_facets = [0] * len(vertices)
        for j, F in enumerate(facets):
            for v in F.vertices:
                self.vertex_facets[v] |= 1 << j
        self._flags = None

    @property
    def dim(self):
        return self.rs.rank

    @property
    def n_facets(self):
        return len(self.facets)

    def facet_vertex_bits(self):
        return [F.vbits for F in self.facets]

    def barycenter(self, j):
        F = self.facets[j]
        k = len(F.vertices)
        n = self.dim
        return tuple(sum((self.vertices[v][i] for v in F.vertices), self.rs.field.zero) / k for i in range(n))

    @property
    def flags(self):
        if self._flags is None:
            self._flags = classify(self)
        return self._flags

    def rescaled(self, factors):
        """Copy with every normal in W-orbit ``o`` multiplied by ``factors[o]`` (> 0)."""
        for o, c in factors.items():
            if sign(c) <= 0:
                raise ValueError("normal scalings must be positive")
        facets = []
        for F in self.facets:
            c = self.rs.field.coerce(factors.get(F.orbit, 1))
            facets.append(
                Facet(
                    tuple(c * x for x in F.normal),
                    tuple(c * x for x in F.pairing),
                    c * F.offset,
                    F.vertices,
                    F.orbit,
                )
            )
        return WPolytope(
            self.rs, self.group, self.lambda_set, self.vertices, facets,
            self.vertex_perm, self.facet_perm, self.orbit_reps, ("custom", dict(factors)),
        )

    def orbit_scalings(self, mode):
        """Factors turning this polytope's normals into those of scaling ``mode``."""
        out = {}
        for o, j in enumerate(self.orbit_reps):
            out[o] = scaling_factor(self.rs, self.facets[j].pairing, mode)
        return out

    def to_json(self, scalar):
        return {
            "vertices": [[scalar(x) for x in v] for v in self.vertices],
            "facets": [
                {
                    "normal": [scalar(x) for x in F.normal],
                    "pairing": [scalar(x) for x in F.pairing],
                    "offset": scalar(F.offset),
                    "vertices": list(F.vertices),
                    "orbit": F.orbit,
                }
                for F in self.facets
            ],
            "flags": dict(self.flags),
        }


def _perm_from_generators(group, gen_perms):
    """Permutation for every element via the BFS parent chain (w r_i acts as w after r_i)."""
    perms = [None] * len(group)
    perms[0] = tuple(range(len(gen_perms[0])))
    for idx in range(1, len(group)):
        parent, i = group._parents[idx]
        pp = perms[parent]
        g = gen_perms[i - 1]
        perms[idx] = tuple(pp[k] for k in g)
    return perms


def build_w_polytope(rs, group, lambda_set, scaling=None):
    """Build P = conv(W(Lambda)) for dominant points given in root coordinates."""
    n = rs.rank
    if not lambda_set:
        raise ValueError("lambda_set must be nonempty")
    lam = [tuple(rs.field.coerce(x) for x in l) for l in lambda_set]
    for l in lam:
        if len(l) != n:
            raise ValueError("lambda has the wrong dimension")
        if any(sign(x) < 0 for x in rs.pairings(l)):
            raise ValueError(f"lambda {l} is not dominant")
    seen = {}
    for l in lam:
        for i in range(len(group)):
            x = group.matrices[i] @ l
            if x not in seen:
                seen[x] = len(seen)
    vertices = list(seen)
    if affine_rank(vertices) < n:
        raise ValueError("degenerate input: the hull is not full-dimensional")
    raw = convex_hull(vertices)
    # every listed point must be a vertex: the facets through it have rank n normals
    vf = [[] for _ in vertices]
    for j, (f, c, vs) in enumerate(raw):
        for v in vs:
            vf[v].append(f)
    for l in lam:
        normals = vf[seen[l]]
        if not normals or rank(normals) < n:
            raise ValueError(f"lambda {l} is not a vertex of the hull")
    raw.sort(key=lambda t: tuple(sorted(t[2])))
    gen_vperm = []
    for gi in group.generators:
        m = group.matrices[gi]
        gen_vperm.append(tuple(seen[m @ v] for v in vertices))
    vperm = _perm_from_generators(group, gen_vperm)
    fkey = {frozenset(vs): j for j, (_, _, vs) in enumerate(raw)}
    gen_fperm = []
    for gp in gen_vperm:
        gen_fperm.append(tuple(fkey[frozenset(gp[v] for v in vs)] for _, _, vs in raw))
    fperm = _perm_from_generators(group, gen_fperm)

    # W-orbits of facets; representative = the facet whose barycenter is dominant
    orbit_of = [-1] * len(raw)
    reps = []
    for j in range(len(raw)):
        if orbit_of[j] >= 0:
            continue
        members = sorted({fperm[w][j] for w in range(len(group))})
        o = len(reps)
        for k in members:
            orbit_of[k] = o
        dom = []
        for k in members:
            vs = raw[k][2]
            bary = tuple(sum((vertices[v][i] for v in vs), rs.field.zero) for i in range(n))
            if all(sign(x) >= 0 for x in rs.pairings(bary)):
                dom.append(k)
        if len(dom) != 1:
            raise AssertionError("each facet orbit must meet the fundamental chamber exactly once")
        reps.append(dom[0])

    if scaling is None:
        scaling = "root" if rs.crystallographic else "field"
    normals = [None] * len(raw)
    for o, j in enumerate(reps):
        f, c, vs = raw[j]
        # orient outward and scale; raw functionals are already outward (f.x <= c)
        fac = scaling_factor(rs, f, scaling)
        ell = rs.from_pairings(tuple(fac * x for x in f))
        for w in range(len(group)):
            k = fperm[w][j]
            img = group.matrices[w] @ ell
            if normals[k] is None:
                normals[k] = img
            elif normals[k] != img:
                raise AssertionError("facet normals are not W-equivariant")
    facets = []
    for j, (f, c, vs) in enumerate(raw):
        ell = normals[j]
        pair = rs.pairings(ell)
        off = _dot(pair, vertices[vs[0]])
        facets.append(Facet(ell, pair, off, tuple(sorted(vs)), orbit_of[j]))
    p = WPolytope(rs, group, lam, vertices, facets, vperm, fperm, reps, scaling)
    for F in facets:
        if sign(F.offset) <= 0:
            raise AssertionError("origin is not interior")
    return p


# ---------------------------------------------------------------------------
# classification


def is_flag(facet_bits, n_facets):
    """Any family of pairwise-intersecting facets has a common vertex."""
    adj = [0] * n_facets
    for i in range(n_facets):
        for j in range(n_facets):
            if i != j and facet_bits[i] & facet_bits[j]:
                adj[i] |= 1 << j

    def extend(clique_common, cand, start):
        # cand: facets adjacent to every clique member, all of index >= start
        c = cand
        while c:
            low = c & -c
            j = low.bit_length() - 1
            c ^= low
            common = clique_common & facet_bits[j]
            if not common:
                return False
            if not extend(common, cand & adj[j] & ~((1 << (j + 1)) - 1), j + 1):
                return False
        return True

    for i in range(n_facets):
        if not extend(facet_bits[i], adj[i] & ~((1 << (i + 1)) - 1), i + 1):
            return False
    return True


def classify(p):
    """Non-degenerate / simple / flag flags of a W-polytope."""
    rs = p.rs
    nondeg = all(all(sign(x) > 0 for x in rs.pairings(l)) for l in p.lambda_set)
    simple = all(bin(b).count("1") == p.dim for b in p.vertex_facets)
    flag = is_flag(p.facet_vertex_bits(), p.n_facets)
    return {"nondegenerate": nondeg, "simple": simple, "flag": flag}


# ---------------------------------------------------------------------------
# facet orbits under W_K


class FacetOrbitData:
    """Representatives F_K, stabilisers W_F, coset representatives and the (F, s) labelling."""

    def __init__(self, K, subgroup, reps, stabilizers, coset_reps, label_to_facet):
        self.K = frozenset(K)
        self.subgroup = subgroup
        self.reps = reps
        self.stabilizers = stabilizers
        self.coset_reps = coset_reps
        self.label_to_facet = label_to_facet
        self.facet_to_label = {j: lab for lab, j in label_to_facet.items()}

    @property
    def labels(self):
        return [(F, s) for F in self.reps for s in self.coset_reps[F]]


def facet_orbits(p, K):
    """Facet orbit data of P under the parabolic subgroup W_K (K 1-based)."""
    group = p.group
    sub = group.parabolic(K)
    K = sub.K
    reps = []
    for j in range(p.n_facets):
        pair = p.rs.pairings(p.barycenter(j))
        if all(sign(pair[k - 1]) >= 0 for k in K):
            reps.append(j)
    stabs = {}
    creps = {}
    label_to_facet = {}
    for F in reps:
        stab = [s for s in sub.element_indices if p.facet_perm[s][F] == F]
        stabs[F] = stab
        creps[F] = cosets(group, sub, stab)
        for s in creps[F]:
            label_to_facet[(F, s)] = p.facet_perm[s][F]
    images = list(label_to_facet.values())
    if len(set(images)) != len(images) or set(images) != set(range(p.n_facets)):
        raise ValueError(
            f"(F, s) labelling is not a bijection onto the facets for K={sorted(K)}; "
            "degenerate case outside the supported scope"
        )
    return FacetOrbitData(K, sub, reps, stabs, creps, label_to_facet)


# ---------------------------------------------------------------------------
# quotient polytope P ∩ C_K


class QuotientFacet:
    __slots__ = ("label", "pairing", "offset", "vertices", "vbits")

    def __init__(self, label, pairing, offset, vertices):
        self.label = label
        self.pairing = pairing
        self.offset = offset
        self.vertices = tuple(vertices)
        self.vbits = _bits(vertices)

    @property
    def name(self):
        kind, x = self.label
        return f"X[{x}]" if kind == "X" else f"Y{x}"


class QuotientPolytope:
    """P ∩ C_K with facets labelled ('X', F) for F in F_K or ('Y', k) for k in K."""

    def __init__(self, p, K, vertices, facets):
        self.parent = p
        self.K = frozenset(K)
        self.vertices = vertices
        self.facets = facets
        self.vertex_facets = [0] * len(vertices)
        for j, F in enumerate(facets):
            for v in F.vertices:
                self.vertex_facets[v] |= 1 << j

    @property
    def dim(self):
        return self.parent.dim

    def facet_vertex_bits(self):
        return [F.vbits for F in self.facets]

    @property
    def simple(self):
        return all(bin(b).count("1") == self.dim for b in self.vertex_facets)

    @property
    def flag(self):
        return is_flag(self.facet_vertex_bits(), len(self.facets))

    def to_json(self, scalar):
        return {
            "vertices": [[scalar(x) for x in v] for v in self.vertices],
            "facets": [
                {"label": F.name, "pairing": [scalar(x) for x in F.pairing], "offset": scalar(F.offset),
                 "vertices": list(F.vertices)}
                for F in self.facets
            ],
        }


def _edges(vertex_facets, facet_bits, n):
    """Vertex pairs spanning an edge: the facets common to both cut out exactly those two vertices."""
    nv = len(vertex_facets)
    allv = (1 << nv) - 1
    edges = []
    for u in range(nv):
        fu = vertex_facets[u]
        for v in range(u + 1, nv):
            common = fu & vertex_facets[v]
            if bin(common).count("1") < n - 1:
                continue
            verts = allv
            for j in _members(common):
                verts &= facet_bits[j]
                if verts == (1 << u) | (1 << v):
                    break
            if verts == (1 << u) | (1 << v):
                edges.append((u, v))
    return edges


def _clip(vertices, constraints, n, g, tag):
    """Intersect the polytope (vertices, constraints) with g.x <= 0."""
    vf, fb = _incidence(vertices, constraints)
    edges = _edges(vf, fb, n)
    vals = [_dot(g, v) for v in vertices]
    keep = {}
    for v, val in zip(vertices, vals):
        if sign(val) <= 0 and v not in keep:
            keep[v] = None
    for a, b in edges:
        sa, sb = sign(vals[a]), sign(vals[b])
        if sa * sb < 0:
            t = vals[a] / (vals[a] - vals[b])
            x = tuple(pa + t * (pb - pa) for pa, pb in zip(vertices[a], vertices[b]))
            keep.setdefault(x, None)
    new_vertices = list(keep)
    zero = g[0] - g[0]
    new_constraints = list(constraints) + [(tuple(g), zero, tag)]
    out = []
    for f, c, t in new_constraints:
        contact = [v for v in new_vertices if _dot(f, v) == c]
        if contact and affine_rank(contact) == n - 1:
            out.append((f, c, t))
    return new_vertices, out


def _incidence(vertices, constraints):
    vf = [0] * len(vertices)
    fb = []
    for j, (f, c, _) in enumerate(constraints):
        b = 0
        for i, v in enumerate(vertices):
            if _dot(f, v) == c:
                b |= 1 << i
                vf[i] |= 1 << j
        fb.append(b)
    return vf, fb


def quotient_polytope(p, K, orbit_data=None):
    """The labelled polytope P ∩ C_K, obtained by clipping P with the walls k in K."""
    rs = p.rs
    n = p.dim
    K = sorted(frozenset(K))
    fo = orbit_data if orbit_data is not None else facet_orbits(p, K)
    vertices = list(p.vertices)
    constraints = [(F.pairing, F.offset, ("X", j)) for j, F in enumerate(p.facets)]
    for k in K:
        g = tuple(-x for x in rs.gram[k - 1])
        vertices, constraints = _clip(vertices, constraints, n, g, ("Y", k))
    reps = set(fo.reps)
    xs = []
    ys = []
    for f, c, tag in constraints:
        kind, x = tag
        if kind == "X" and x not in reps:
            raise ValueError(f"quotient facet from P-facet {x} is not in F_K; label matching failed")
        (xs if kind == "X" else ys).append((f, c, tag))
    found_x = sorted(t[2][1] for t in xs)
    found_y = sorted(t[2][1] for t in ys)
    if found_x != sorted(reps) or found_y != K:
        raise ValueError(
            f"quotient facets {found_x}/{found_y} do not match F_K={sorted(reps)} and K={K}"
        )
    xs.sort(key=lambda t: t[2][1])
    ys.sort(key=lambda t: t[2][1])
    facets = []
    for f, c, tag in xs + ys:
        verts = [i for i, v in enumerate(vertices) if _dot(f, v) == c]
        facets.append(QuotientFacet(tag, tuple(f), c, verts))
    for F in facets:
        if F.label[0] == "Y":
            k = F.label[1]
            for i in F.vertices:
                if _dot(rs.gram[k - 1], vertices[i]):
                    raise AssertionError("wall facet leaves its hyperplane")
    return QuotientPolytope(p, K, vertices, facets)


def quotient_vertices_bruteforce(p, K):
    """Vertices of P ∩ C_K by solving every n-subset of the halfspace system."""
    rs = p.rs
    n = p.dim
    cons = [(F.pairing, F.offset) for F in p.facets]
    zero = rs.field.zero
    cons += [(tuple(-x for x in rs.gram[k - 1]), zero) for k in sorted(K)]
    out = set()
    for sub in combinations(range(len(cons)), n):
        a = [list(cons[i][0]) for i in sub]
        if rank(a) < n:
            continue
        x = solve(a, [cons[i][1] for i in sub])
        if all(sign(_dot(f, x) - c) <= 0 for f, c in cons):
            out.add(tuple(x))
    return out


def simplicity_transfer_check(p, K, quotient=None):
    """simple(P) == simple(P/W_K) when non-degenerate; simple(P) => simple(P/W_K) otherwise (dim <= 3)."""
    q = quotient if quotient is not None else quotient_polytope(p, K)
    sp = p.flags["simple"]
    sq = q.simple
    if p.flags["nondegenerate"]:
        return sp == sq
    return (not sp) or sq


# ---------------------------------------------------------------------------
# face lattice


def face_lattice(facet_bits, n_vertices, dim):
    """All nonempty faces as {vertex bitset: dimension}, including the polytope itself."""
    top = (1 << n_vertices) - 1
    faces = {top: dim}
    frontier = list(set(facet_bits))
    for b in frontier:
        faces.setdefault(b, None)
    while frontier:
        nxt = []
        for a in frontier:
            for b in facet_bits:
                c = a & b
                if c and c != a and c not in faces:
                    faces[c] = None
                    nxt.append(c)
        frontier = nxt
    dims = {top: dim}

    def dim_of(b):
        d = dims.get(b)
        if d is not None:
            return d
        cnt = bin(b).count("1")
        if cnt == 1:
            dims[b] = 0
            return 0
        if cnt == 2:
            dims[b] = 1
            return 1
        subs = {b & f for f in facet_bits if (b & f) and (b & f) != b}
        maximal = [s for s in subs if not any(s != t and (s & t) == s for t in subs)]
        d = 1 + dim_of(maximal[0])
        dims[b] = d
        return d

    for b in list(faces):
        dim_of(b)
    return {b: dims[b] for b in faces}


def f_vector(facet_bits, n_vertices, dim):
    """(f_{-1}, f_0, ..., f_{n-1}) with f_i the number of faces of codimension i + 1."""
    fl = face_lattice(facet_bits, n_vertices, dim)
    f = [0] * (dim + 1)
    for d in fl.values():
        f[dim - d] += 1
    return f
