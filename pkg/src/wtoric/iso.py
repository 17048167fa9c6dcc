"""The map psi from the quotient algebra A(P/W_K) onto the invariants A(P)^{W_K}.

Coefficients C_{F,s,k} are read off from s(l_F) - l_F = sum_k C_{F,s,k} l_{H_k}
with l_{H_k} = -alpha_k.  The generator images are

    X_F -> sum over s in W_K/W_F of X_{s(F)}
    Y_k -> sum over (F, s) of C_{F,s,k} X_{s(F)}

and :func:`verify_psi` checks that this descends to the quotient and is a graded
bijection onto the invariant subalgebra.
"""

from __future__ import annotations

from .algebra import (
    AlgebraElement,
    build_graded_algebra,
    face_complex_of,
    linear_forms,
    minimal_nonfaces,
)
from .exact import Matrix, rank, sign, solve
from .polytope import facet_orbits, quotient_polytope

__all__ = [
    "CCoefficients",
    "PsiMap",
    "c_coefficients",
    "build_psi",
    "verify_psi",
    "verify_scaling_invariance",
    "scaling_invariance_report",
]


class CCoefficients:
    """C_{F,s,k} for every label (F, s), stored as a tuple indexed like ``K``."""

    def __init__(self, K, values, checks):
        self.K = list(K)
        self.values = values  # (F, s) -> tuple of Scalars, one per k in K
        self.checks = checks

    def __getitem__(self, key):
        F, s, k = key
        return self.values[(F, s)][self.K.index(k)]

    @property
    def ok(self):
        return all(self.checks.values())

    def items(self):
        for (F, s), row in self.values.items():
            for k, c in zip(self.K, row):
                yield (F, s, k), c


def c_coefficients(p, fo):
    """Solve s(l_F) - l_F = sum_{k in K} C_{F,s,k} (-alpha_k) for every label.

    Raises ValueError on an inconsistent system (normals not W-equivariant).
    Positivity, the support condition and C_{F,e} = 0 are recorded in ``checks``.
    """
    rs = p.rs
    group = p.group
    n = rs.rank
    K = sorted(fo.K)
    one, zero = rs.field.one, rs.field.zero
    # columns are -alpha_k in root coordinates
    a = Matrix([[(-one if i == k - 1 else zero) for k in K] for i in range(n)], len(K))
    values = {}
    checks = {"residual": True, "nonnegative": True, "support": True, "identity_zero": True}
    for F, s in fo.labels:
        ell = p.facets[F].normal
        img = p.facets[fo.label_to_facet[(F, s)]].normal
        if group.act(s, ell) != img:
            raise AssertionError("facet normals are not equivariant under W_K")
        diff = [img[i] - ell[i] for i in range(n)]
        if K:
            c = solve(a, diff)
            if c is None:
                raise ValueError(f"no C coefficients for label {(F, s)}: s(l_F) - l_F leaves span(-alpha_K)")
        else:
            if any(diff):
                raise ValueError("nonzero difference with empty K")
            c = ()
        recon = a @ c if K else tuple(zero for _ in range(n))
        if list(recon) != diff:
            checks["residual"] = False
        support = group.support(s)
        for k, v in zip(K, c):
            if sign(v) < 0:
                checks["nonnegative"] = False
            if sign(v) > 0 and k not in support:
                checks["support"] = False
        if s == group.identity_index and any(c):
            checks["identity_zero"] = False
        values[(F, s)] = tuple(c)
    return CCoefficients(K, values, checks)


class PsiMap:
    """Generator images of psi (degree-1 elements of A(P)) and evaluation on monomials."""

    def __init__(self, p, q, fo, cc, ga_p, ga_q, images):
        self.p = p
        self.q = q
        self.fo = fo
        self.cc = cc
        self.ga_p = ga_p
        self.ga_q = ga_q
        self.images = images  # quotient label index -> AlgebraElement of A^1(P), normal form
        self.raw_images = {}  # the same before reduction, as linear forms in the X_F
        self._cache = {(): ga_p.one()}
        self.dossier = None

    def generator_image(self, j):
        return self.images[j]

    def evaluate_monomial(self, m):
        """psi of a quotient monomial, by multiplicative extension."""
        m = tuple(sorted(m))
        if len(m) > self.ga_p.n:
            return AlgebraElement(len(m), {}, True)
        hit = self._cache.get(m)
        if hit is None:
            prev = self.evaluate_monomial(m[:-1])
            hit = self.ga_p.multiply(prev, self.images[m[-1]])
            self._cache[m] = hit
        return hit

    def evaluate(self, x):
        out = AlgebraElement(x.degree, {}, True)
        for m, c in x.coeffs.items():
            out = out + self.evaluate_monomial(m).scale(c)
        return self.ga_p.normal_form(out)

    def subgroup_generator_perms(self):
        g = self.p.group
        return [self.p.facet_perm[g.generators[k - 1]] for k in sorted(self.fo.K)]

    def images_json(self, scalar):
        out = {}
        for j, F in enumerate(self.q.facets):
            img = self.raw_images.get(j, self.images[j])
            out[F.name] = [[m[0], scalar(c)] for m, c in sorted(img.coeffs.items())]
        return out


def build_psi(p, q, fo, cc, ga_p, ga_q):
    """Form the generator images of psi (no verification)."""
    K = sorted(fo.K)
    if len(ga_q.fc) != len(q.facets) or len(ga_p.fc) != len(p.facets):
        raise ValueError("algebra labels do not match the polytopes")
    one = p.rs.field.one
    images = {}
    raw = {}
    for j, QF in enumerate(q.facets):
        kind, x = QF.label
        coeffs = {}
        if kind == "X":
            if x not in fo.coset_reps:
                raise ValueError(f"quotient label {QF.name} is not in F_K")
            for s in fo.coset_reps[x]:
                t = fo.label_to_facet[(x, s)]
                coeffs[(t,)] = coeffs.get((t,), 0) + one
        else:
            if x not in K:
                raise ValueError(f"quotient label {QF.name} is not in K")
            ki = K.index(x)
            for (F, s), row in cc.values.items():
                c = row[ki]
                if c:
                    t = fo.label_to_facet[(F, s)]
                    coeffs[(t,)] = coeffs.get((t,), 0) + c
        raw[j] = AlgebraElement(1, coeffs)
        images[j] = ga_p.normal_form(raw[j])
    psi = PsiMap(p, q, fo, cc, ga_p, ga_q, images)
    psi.raw_images = raw
    return psi


def _coords_rank(rows, ncols):
    rows = [list(r) for r in rows if any(r)]
    return rank(Matrix(rows, ncols)) if rows else 0


def verify_psi(psi, scalar=str, invariant_crosscheck=False):
    """Run the five checks; returns a dossier dict (booleans, dims, witnesses)."""
    ga_p, ga_q = psi.ga_p, psi.ga_q
    n = ga_p.n
    gens = psi.subgroup_generator_perms()
    witnesses = []

    def show(x):
        return [[list(m), scalar(c)] for m, c in sorted(x.coeffs.items())]

    # (a) SR ideal generators of the quotient
    kernel_i = True
    for t in minimal_nonfaces(ga_q.fc):
        if len(t) > n:
            continue  # degree above n: zero in A(P) automatically
        img = psi.evaluate_monomial(t)
        if not img.is_zero():
            kernel_i = False
            witnesses.append({"check": "kernel_I", "monomial": [ga_q.fc.names[i] for i in t], "image": show(img)})

    # (b) linear forms of the quotient
    kernel_j = True
    for i, row in enumerate(ga_q.forms):
        acc = AlgebraElement(1, {})
        for j, c in enumerate(row):
            if c:
                acc = acc + psi.images[j].scale(c)
        img = ga_p.normal_form(acc)
        if not img.is_zero():
            kernel_j = False
            witnesses.append({"check": "kernel_J", "form": i + 1, "image": show(img)})

    # (c) invariance of generator images
    invariance = True
    for j, img in psi.images.items():
        for g in gens:
            moved = ga_p.act(g, img)
            if not (moved - img).is_zero():
                invariance = False
                witnesses.append({"check": "invariance", "generator": ga_q.fc.names[j], "image": show(img)})
                break

    # (d) dimensions and (e) bijectivity onto the invariants
    quotient_dims = ga_q.dims
    invariant_dims = []
    dimension = True
    bijective = True
    for d in range(n + 1):
        inv = ga_p.invariant_basis(gens, d)
        invariant_dims.append(len(inv))
        if invariant_crosscheck and len(ga_p.fixed_subspace_by_kernels(gens, d)) != len(inv):
            raise AssertionError(f"invariant dimension mismatch in degree {d}")
        if len(inv) != ga_q.dim(d):
            dimension = False
        rows = [ga_p.coords(psi.evaluate_monomial(m)) for m in ga_q.basis[d]]
        k = ga_p.dim(d)
        r = _coords_rank(rows, k)
        inside = _coords_rank(inv + rows, k) == len(inv)
        if r != len(inv) or r != len(rows) or not inside:
            bijective = False
            witnesses.append({"check": "bijectivity", "degree": d, "rank": r,
                              "quotient_dim": len(rows), "invariant_dim": len(inv), "images_invariant": inside})

    checks = {
        "kernel_I": kernel_i,
        "kernel_J": kernel_j,
        "invariance": invariance,
        "dimension": dimension,
        "bijectivity": bijective,
    }
    dossier = {
        "checks": checks,
        "all": all(checks.values()),
        "quotient_dims": quotient_dims,
        "invariant_dims": invariant_dims,
        "images": psi.images_json(scalar),
        "witnesses": witnesses,
    }
    psi.dossier = dossier
    return dossier


def _psi_for(p, K, check=True, ga_p=None):
    fo = facet_orbits(p, K)
    q = quotient_polytope(p, K, fo)
    field = p.rs.field
    if ga_p is None:
        ga_p = build_graded_algebra(face_complex_of(p), linear_forms(p), field, check=check)
    ga_q = build_graded_algebra(face_complex_of(q), linear_forms(q), field, check=check)
    cc = c_coefficients(p, fo)
    return build_psi(p, q, fo, cc, ga_p, ga_q)


def _orbit_factors(p, scalings):
    """Normalise ``scalings`` (dict orbit -> c, or list per facet) to a per-orbit dict."""
    if isinstance(scalings, dict):
        factors = dict(scalings)
    else:
        scalings = list(scalings)
        if len(scalings) != len(p.facets):
            raise ValueError("need one scaling per facet")
        factors = {}
        for F, c in zip(p.facets, scalings):
            if F.orbit in factors and factors[F.orbit] != c:
                raise ValueError("scalings must be constant on W-orbits of facets")
            factors[F.orbit] = c
    for o, c in factors.items():
        if sign(c) <= 0:
            raise ValueError("scalings must be positive")
        if not 0 <= o < len(p.orbit_reps):
            raise ValueError(f"unknown facet orbit {o}")
    return {o: p.rs.field.coerce(c) for o, c in factors.items()}


def _rescaling_bijective(ga_src, ga_dst, factor_of_label):
    """X_L -> X_L / c_L carries the relations of ga_src onto those of ga_dst, bijectively in each degree."""
    one = ga_dst.field.one
    # linear forms map into the span of the target forms
    mapped = [[c / factor_of_label[j] for j, c in enumerate(row)] for row in ga_src.forms]
    target = [list(r) for r in ga_dst.forms]
    if not (rank(mapped) == rank(target) == rank(mapped + target)):
        return False
    for d in range(ga_src.n + 1):
        if ga_src.dim(d) != ga_dst.dim(d):
            return False
        rows = []
        for m in ga_src.basis[d]:
            c = one
            for i in m:
                c = c / factor_of_label[i]
            rows.append(ga_dst.coords(AlgebraElement(d, {m: c})))
        if _coords_rank(rows, ga_dst.dim(d)) != ga_dst.dim(d):
            return False
    return True


def scaling_invariance_report(p, K, scalings, base=None, ga_rescaled=None):
    """Rescale the normals by orbit factors and compare both pipelines.

    ``base`` may be an already verified PsiMap for (p, K), and ``ga_rescaled``
    the algebra of the rescaled P, to avoid rebuilding them.
    """
    factors = _orbit_factors(p, scalings)
    if base is None:
        base = _psi_for(p, K)
    base_dossier = base.dossier if base.dossier is not None else verify_psi(base)
    p2 = p.rescaled(factors)
    other = _psi_for(p2, K, ga_p=ga_rescaled)
    other_dossier = verify_psi(other)
    one = p.rs.field.one
    fac_p = {j: factors.get(F.orbit, one) for j, F in enumerate(p.facets)}
    fac_q = {}
    for j, QF in enumerate(base.q.facets):
        kind, x = QF.label
        fac_q[j] = fac_p[x] if kind == "X" else one
    same_labels = [F.label for F in base.q.facets] == [F.label for F in other.q.facets]
    out = {
        "factors": factors,
        "dims_equal": base.ga_p.dims == other.ga_p.dims and base.ga_q.dims == other.ga_q.dims,
        "labels_equal": same_labels,
        "map_P": _rescaling_bijective(other.ga_p, base.ga_p, fac_p),
        "map_quotient": same_labels and _rescaling_bijective(other.ga_q, base.ga_q, fac_q),
        "dossier_original": base_dossier["all"],
        "dossier_rescaled": other_dossier["all"],
    }
    out["ok"] = all(v for k, v in out.items() if k != "factors")
    return out


def verify_scaling_invariance(p, K, scalings):
    """True iff rescaling normals by positive orbit constants gives an equivalent, verified pipeline."""
    return scaling_invariance_report(p, K, scalings)["ok"]
