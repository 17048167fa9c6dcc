"""Stanley-Reisner rings and polytopal algebras."""

import random
from fractions import Fraction
from functools import lru_cache

import pytest

from wtoric.algebra import (
    AlgebraElement,
    build_graded_algebra,
    face_complex_of,
    h_from_f,
    linear_forms,
    minimal_nonfaces,
    sr_monomial_basis,
)
from wtoric.exact import Matrix, QuadraticNumber, rank
from wtoric.pipeline import conjugacy_classes
from wtoric.polytope import build_w_polytope, facet_orbits, quotient_polytope
from wtoric.roots import build_root_system, generate_group


@lru_cache(maxsize=None)
def setup(t, lams):
    rs = build_root_system(t)
    g = generate_group(rs)
    p = build_w_polytope(rs, g, [rs.weight_to_root(l) for l in lams])
    ga = build_graded_algebra(face_complex_of(p), linear_forms(p), rs.field)
    return rs, g, p, ga


@lru_cache(maxsize=None)
def setup_q(t, lams, K):
    rs, g, p, _ = setup(t, lams)
    q = quotient_polytope(p, K, facet_orbits(p, K))
    return q, build_graded_algebra(face_complex_of(q), linear_forms(q), rs.field)


HEX = ("A2", ((1, 1),))
PENT = ("I2(5)", ((1, 0),))
CASES = [
    (HEX, [1, 4, 1]),
    (PENT, [1, 3, 1]),
    (("I2(5)", ((1, 1),)), [1, 8, 1]),
    (("G2", ((1, 1),)), [1, 10, 1]),
    (("A3", ((1, 1, 1),)), [1, 11, 11, 1]),
    (("A3", ((1, 0, 0),)), [1, 1, 1, 1]),
    (("B3", ((1, 1, 1),)), [1, 23, 23, 1]),
    (("H3", ((1, 1, 1),)), [1, 59, 59, 1]),
]


def test_h_from_f():
    assert h_from_f([1, 6, 6]) == [1, 4, 1]
    assert h_from_f([1, 5, 5]) == [1, 3, 1]
    assert h_from_f([1, 14, 36, 24]) == [1, 11, 11, 1]
    assert h_from_f([1, 4, 6, 4]) == [1, 1, 1, 1]


@pytest.mark.parametrize("case,dims", CASES)
def test_dimensions_and_duality(case, dims):
    rs, g, p, ga = setup(*case)
    assert ga.dims == dims == ga.h
    assert ga.h == ga.h[::-1]
    assert ga.pd_check()
    assert ga.vertex_monomial_consistency()
    # every element of W acts trivially on the top degree
    for cls in conjugacy_classes(g):
        assert ga.trace(p.facet_perm[cls[0]], ga.n) == 1


def test_minimal_nonfaces():
    rs, g, p, ga = setup(*HEX)
    mnf = minimal_nonfaces(ga.fc)
    assert len(mnf) == 9 and all(len(t) == 2 for t in mnf)
    _, _, _, gp = setup(*PENT)
    assert len(minimal_nonfaces(gp.fc)) == 5
    # the tetrahedron is a simplex: its only non-face is the full facet set
    _, _, _, gt = setup("A3", ((1, 0, 0),))
    assert minimal_nonfaces(gt.fc) == [(0, 1, 2, 3)]


def test_sr_basis_counts():
    rs, g, p, ga = setup(*HEX)
    fc = ga.fc
    assert len(sr_monomial_basis(fc, 0)) == 1
    assert len(sr_monomial_basis(fc, 1)) == 6
    # squares (6) and adjacent products (6)
    assert len(sr_monomial_basis(fc, 2)) == 12


def dense_quotient_dim(ga, d):
    """Independent oracle: dense rank of all eta_i * m over the face monomials of degree d."""
    basis = sr_monomial_basis(ga.fc, d)
    idx = {m: i for i, m in enumerate(basis)}
    rows = []
    for row in ga.forms:
        for m in sr_monomial_basis(ga.fc, d - 1) if d else []:
            v = [ga.field.zero] * len(basis)
            for j, c in enumerate(row):
                k = idx.get(tuple(sorted(m + (j,))))
                if k is not None:
                    v[k] = v[k] + c
            rows.append(v)
    r = rank(Matrix(rows, len(basis))) if rows else 0
    return len(basis) - r, basis, rows


@pytest.mark.parametrize("case", [HEX, PENT, ("A3", ((1, 1, 1),)), ("G2", ((0, 1),))])
def test_against_dense_oracle(case):
    rs, g, p, ga = setup(*case)
    rng = random.Random(5)
    for d in range(ga.n + 1):
        dim, basis, rows = dense_quotient_dim(ga, d)
        assert dim == ga.dim(d)
        # x - normal_form(x) lies in the relation space
        for _ in range(5):
            coeffs = {m: ga.field.coerce(rng.randint(-3, 3)) for m in rng.sample(basis, min(4, len(basis)))}
            x = AlgebraElement(d, coeffs)
            nf = ga.normal_form(x)
            diff = [coeffs.get(m, 0) - nf.coeffs.get(m, 0) for m in basis]
            if rows:
                assert rank(Matrix(rows + [diff], len(basis))) == rank(Matrix(rows, len(basis)))
            else:
                assert not any(diff)
            assert ga.normal_form(nf).coeffs == nf.coeffs


def random_element(ga, d, rng):
    mons = ga.sr_basis[d]
    return AlgebraElement(d, {m: ga.field.coerce(rng.randint(-2, 2)) for m in rng.sample(mons, min(3, len(mons)))})


@pytest.mark.parametrize("case", [HEX, PENT, ("A3", ((1, 1, 1),))])
def test_ring_laws(case):
    rs, g, p, ga = setup(*case)
    rng = random.Random(11)
    for _ in range(10):
        x, y, z = (random_element(ga, 1, rng) for _ in range(3))
        assert ga.multiply(x, y).coeffs == ga.multiply(y, x).coeffs
        if ga.n >= 3:
            lhs = ga.multiply(ga.multiply(x, y), z)
            rhs = ga.multiply(x, ga.multiply(y, z))
            assert lhs.coeffs == rhs.coeffs
        xy_z = ga.multiply(x + y, z)
        assert xy_z.coeffs == (ga.multiply(x, z) + ga.multiply(y, z)).coeffs or \
            ga.normal_form(xy_z - ga.multiply(x, z) - ga.multiply(y, z)).is_zero()
    # eta_i vanish
    for i in range(ga.n):
        assert ga.normal_form(ga.eta(i)).is_zero()
    with pytest.raises(ValueError):
        ga.multiply(ga.monomial((0,) * ga.n), ga.monomial((0,)))


@pytest.mark.parametrize("case", [HEX, PENT, ("A3", ((1, 1, 1),))])
def test_action_is_a_homomorphism(case):
    rs, g, p, ga = setup(*case)
    rng = random.Random(2)
    for _ in range(6):
        i, j = rng.randrange(len(g)), rng.randrange(len(g))
        for d in range(1, ga.n):
            a = ga.group_action(p.facet_perm[i], d)
            b = ga.group_action(p.facet_perm[j], d)
            ab = ga.group_action(p.facet_perm[g.mul(i, j)], d)
            assert a @ b == ab
    with pytest.raises(ValueError):
        ga.group_action((0,) * len(p.facets), 1)


def v_trace(g, w):
    return g.matrices[w].trace()


@pytest.mark.parametrize("case", [HEX, PENT, ("B2", ((1, 1),)), ("A3", ((1, 1, 1),)), ("H3", ((1, 1, 1),))])
def test_degree_one_trace_oracle(case):
    """Tr on A^1 = (facets fixed by w) - Tr_V(w), because J^1 is a copy of V."""
    rs, g, p, ga = setup(*case)
    for cls in conjugacy_classes(g):
        w = cls[0]
        fixed = sum(1 for j, k in enumerate(p.facet_perm[w]) if j == k)
        assert ga.trace(p.facet_perm[w], 1) == fixed - v_trace(g, w)


def test_hexagon_and_pentagon_traces():
    rs, g, p, ga = setup(*HEX)
    r1, r2 = g.generators
    assert ga.trace(p.facet_perm[r1], 1) == 2
    assert ga.trace(p.facet_perm[r2], 1) == 2
    assert ga.trace(p.facet_perm[g.mul(r1, r2)], 1) == 1
    rs, g, p, ga = setup(*PENT)
    r1, r2 = g.generators
    half = Fraction(1, 2)
    assert ga.trace(p.facet_perm[r1], 1) == 1
    assert ga.trace(p.facet_perm[r2], 1) == 1
    assert ga.trace(p.facet_perm[g.mul(r1, r2)], 1) == QuadraticNumber(half, -half, 5)
    rot2 = g.mul(g.mul(r1, r2), g.mul(r1, r2))
    assert ga.trace(p.facet_perm[rot2], 1) == QuadraticNumber(half, half, 5)


@pytest.mark.parametrize("case", [HEX, PENT, ("A3", ((1, 1, 1),)), ("B3", ((1, 1, 1),))])
def test_characters_are_class_functions(case):
    rs, g, p, ga = setup(*case)
    for cls in conjugacy_classes(g):
        ref = ga.graded_character(p.facet_perm[cls[0]])
        for w in cls[1:4]:
            assert ga.graded_character(p.facet_perm[w]) == ref


@pytest.mark.parametrize("case,K", [(HEX, (1, 2)), (HEX, (1,)), (PENT, (1, 2)), (("A3", ((1, 1, 1),)), (1, 3)),
                                    (("B3", ((1, 1, 1),)), (2, 3))])
def test_invariants_three_ways(case, K):
    rs, g, p, ga = setup(*case)
    gens = [p.facet_perm[g.generators[k - 1]] for k in K]
    sub = g.parabolic(K)
    for d in range(ga.n + 1):
        inv = ga.invariant_basis(gens, d)
        assert len(inv) == len(ga.fixed_subspace_by_kernels(gens, d))
        burnside = sum((ga.trace(p.facet_perm[w], d) for w in sub), ga.field.zero) / len(sub)
        assert burnside == len(inv)
        # invariants are fixed by every generator
        for v in inv:
            x = ga.from_coords(d, v)
            for pg in gens:
                assert (ga.act(pg, x) - x).is_zero()


def test_quotient_algebras():
    q, gq = setup_q(*HEX, (1, 2))
    assert gq.dims == [1, 2, 1]
    assert [f.name for f in q.facets][-2:] == ["Y1", "Y2"]
    assert gq.pd_check() and gq.vertex_monomial_consistency()
    q, gq = setup_q(*PENT, (1, 2))
    assert gq.dims == [1, 1, 1]


def test_rejects_bad_input():
    rs, g, p, ga = setup(*HEX)
    with pytest.raises(ValueError):
        build_graded_algebra(ga.fc, [ga.forms[0], ga.forms[0]], rs.field)
    # the octahedron is not simple: dimensions disagree with its h-vector
    rs3 = build_root_system("A3")
    g3 = generate_group(rs3)
    octa = build_w_polytope(rs3, g3, [rs3.weight_to_root((0, 1, 0))])
    with pytest.raises(ValueError):
        build_graded_algebra(face_complex_of(octa), linear_forms(octa), rs3.field)


def test_top_coefficient_requires_top_degree():
    rs, g, p, ga = setup(*HEX)
    with pytest.raises(ValueError):
        ga.top_coefficient(ga.monomial((0,)))
    # the top class is the first vertex monomial; a square X_F^2 can be negative
    assert ga.top_coefficient(ga.monomial(ga.vertex_monomials()[0])) == 1
    assert ga.top_coefficient(ga.monomial(ga.top_monomial)) < 0
