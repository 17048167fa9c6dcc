"""Hulls, W-polytopes, facet orbits and quotient polytopes."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wtoric.exact import kernel_basis, rank
from wtoric.polytope import (
    affine_rank,
    build_w_polytope,
    classify,
    convex_hull,
    f_vector,
    facet_orbits,
    quotient_polytope,
    quotient_vertices_bruteforce,
    simplicity_transfer_check,
)
from wtoric.roots import build_root_system, generate_group


def brute_hull(points):
    """Facets as frozensets of point indices: every affinely spanning subset, kept if supporting."""
    n = len(points[0])
    out = set()
    for sub in itertools.combinations(range(len(points)), n):
        rows = [[*points[i], 1] for i in sub]
        ker = kernel_basis(rows)
        if len(ker) != 1:
            continue
        h = ker[0]
        vals = [sum(a * b for a, b in zip(h[:n], p)) + h[n] for p in points]
        if all(v >= 0 for v in vals) or all(v <= 0 for v in vals):
            on = frozenset(i for i, v in enumerate(vals) if v == 0)
            if affine_rank([points[i] for i in on]) == n - 1:
                out.add(on)
    return out


def test_hull_cube():
    pts = [tuple(Fraction(x) for x in p) for p in itertools.product((0, 1), repeat=3)]
    facets = convex_hull(pts)
    assert len(facets) == 6
    assert all(len(vs) == 4 for _, _, vs in facets)


points3 = st.lists(st.tuples(*[st.integers(-3, 3)] * 3), min_size=5, max_size=11, unique=True)


@given(points3)
@settings(max_examples=60, deadline=None)
def test_hull_matches_bruteforce(pts):
    pts = [tuple(Fraction(x) for x in p) for p in pts]
    if affine_rank(pts) < 3:
        return
    got = {frozenset(vs) for _, _, vs in convex_hull(pts)}
    assert got == brute_hull(pts)
    for f, c, vs in convex_hull(pts):
        for p in pts:
            assert sum(a * b for a, b in zip(f, p)) <= c


def build(t, lams, scaling=None):
    rs = build_root_system(t)
    g = generate_group(rs)
    return build_w_polytope(rs, g, [rs.weight_to_root(l) for l in lams], scaling=scaling)


# (type, lambda) -> (vertices, facets, nondegenerate, simple, flag)
SHAPES = [
    ("A2", [(1, 1)], 6, 6, True, True, True),
    ("A2", [(1, 0)], 3, 3, False, True, False),  # triangle: facets pairwise meet, no common vertex
    ("I2(5)", [(1, 0)], 5, 5, False, True, True),
    ("I2(5)", [(1, 1)], 10, 10, True, True, True),
    ("B2", [(1, 1)], 8, 8, True, True, True),
    ("G2", [(1, 1)], 12, 12, True, True, True),
    ("A3", [(1, 1, 1)], 24, 14, True, True, True),
    ("A3", [(0, 1, 0)], 6, 8, False, False, False),  # octahedron
    ("A3", [(1, 0, 0)], 4, 4, False, True, False),  # tetrahedron
    ("B3", [(1, 1, 1)], 48, 26, True, True, True),
]


@pytest.mark.parametrize("t,lams,nv,nf,nd,simple,flag", SHAPES)
def test_shapes_and_flags(t, lams, nv, nf, nd, simple, flag):
    p = build(t, lams)
    assert (len(p.vertices), len(p.facets)) == (nv, nf)
    assert classify(p) == {"nondegenerate": nd, "simple": simple, "flag": flag}


def test_hull_of_orbit_matches_bruteforce():
    p = build("A3", [(1, 1, 1)])
    got = {frozenset(F.vertices) for F in p.facets}
    assert got == brute_hull(p.vertices)


def test_h3_counts():
    p = build("H3", [(1, 1, 1)])
    assert (len(p.vertices), len(p.facets)) == (120, 62)


def test_lambda_errors():
    rs = build_root_system("A2")
    g = generate_group(rs)
    with pytest.raises(ValueError):
        build_w_polytope(rs, g, [rs.weight_to_root((1, -1))])
    with pytest.raises(ValueError):  # rho lies inside the hull of W(2 rho)
        build_w_polytope(rs, g, [rs.weight_to_root((1, 1)), rs.weight_to_root((2, 2))])
    with pytest.raises(ValueError):
        build_w_polytope(rs, g, [])


def test_normals_equivariant_and_outward():
    p = build("B3", [(1, 1, 1)])
    g = p.group
    for w in range(len(g)):
        for j, F in enumerate(p.facets):
            assert g.act(w, F.normal) == p.facets[p.facet_perm[w][j]].normal
    for F in p.facets:
        assert F.offset > 0
        for v in p.vertices:
            assert sum(a * b for a, b in zip(F.pairing, v)) <= F.offset


def test_hexagon_pairings():
    p = build("A2", [(1, 1)])
    pairs = {tuple(int(x) for x in F.pairing) for F in p.facets}
    assert pairs == {(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)}


def test_scaling_modes():
    # B2: long-root orbit of normals; weight scaling doubles the short-coroot coordinate
    p_root = build("B2", [(1, 1)])
    p_weight = build("B2", [(1, 1)], scaling="weight")
    assert p_root.scaling == "root" and p_weight.scaling == "weight"
    ratios = set()
    for a, b in zip(p_root.facets, p_weight.facets):
        i = next(k for k, x in enumerate(a.pairing) if x)
        ratios.add(b.pairing[i] / a.pairing[i])
    assert ratios == {Fraction(1), Fraction(2)}
    for F in build("I2(5)", [(1, 0)]).facets:
        pass
    p5 = build("I2(5)", [(1, 0)])
    assert p5.scaling == "field"


def test_pentagon_orbits():
    p = build("I2(5)", [(1, 0)])
    fo = facet_orbits(p, [1, 2])
    assert len(fo.reps) == 1
    F = fo.reps[0]
    assert len(fo.stabilizers[F]) == 2
    assert len(fo.coset_reps[F]) == 5
    # the stabiliser is {e, r1}
    assert sorted(fo.stabilizers[F]) == sorted([0, p.group.generators[0]])
    q = quotient_polytope(p, [1, 2], fo)
    assert len(q.vertices) == 3
    assert [f.name for f in q.facets] == [f"X[{F}]", "Y1", "Y2"]


def test_hexagon_orbits():
    p = build("A2", [(1, 1)])
    fo = facet_orbits(p, [1, 2])
    pairs = sorted(tuple(int(x) for x in p.facets[F].pairing) for F in fo.reps)
    assert pairs == [(0, 1), (1, 0)]
    assert all(len(fo.stabilizers[F]) == 2 for F in fo.reps)
    assert len(fo.labels) == 6
    q = quotient_polytope(p, [1, 2], fo)
    assert len(q.vertices) == 4 and q.simple


CASES = [
    ("A2", [(1, 1)]), ("A2", [(1, 0)]), ("A2", [(0, 1)]), ("B2", [(1, 0)]), ("G2", [(0, 1)]),
    ("I2(5)", [(1, 0)]), ("I2(5)", [(1, 2), (2, 1)]), ("A3", [(1, 1, 1)]), ("A3", [(1, 1, 2), (2, 1, 1)]),
    ("B3", [(1, 1, 1)]),
]


def subsets(n):
    return [list(c) for r in range(n + 1) for c in itertools.combinations(range(1, n + 1), r)]


@pytest.mark.parametrize("t,lams", CASES)
def test_quotient_against_bruteforce(t, lams):
    p = build(t, lams)
    for K in subsets(p.dim):
        q = quotient_polytope(p, K)
        assert set(q.vertices) == quotient_vertices_bruteforce(p, K)
        # every vertex lies on exactly the facets recorded for it, and inside C_K
        for v in q.vertices:
            assert all(p.rs.pairings(v)[k - 1] >= 0 for k in K)
        assert simplicity_transfer_check(p, K, q)
        labels = [f.label for f in q.facets]
        assert labels == sorted(l for l in labels if l[0] == "X") + [("Y", k) for k in K]


def test_labelling_bijection_and_empty_k():
    p = build("A3", [(1, 1, 1)])
    fo = facet_orbits(p, [])
    assert len(fo.reps) == len(p.facets)
    q = quotient_polytope(p, [], fo)
    assert len(q.vertices) == len(p.vertices)


def test_f_vectors():
    p = build("A3", [(1, 1, 1)])
    assert f_vector(p.facet_vertex_bits(), len(p.vertices), 3) == [1, 14, 36, 24]
    p = build("B3", [(1, 1, 1)])
    assert f_vector(p.facet_vertex_bits(), len(p.vertices), 3) == [1, 26, 72, 48]
    p = build("A3", [(0, 1, 0)])
    assert f_vector(p.facet_vertex_bits(), len(p.vertices), 3) == [1, 8, 12, 6]
    # Euler relation for the H3 polytope
    p = build("H3", [(1, 1, 1)])
    f = f_vector(p.facet_vertex_bits(), len(p.vertices), 3)
    assert f[3] - f[2] + f[1] == 2


def test_rescaled_keeps_combinatorics():
    p = build("A2", [(1, 1)])
    p3 = p.rescaled({0: 3})
    for a, b in zip(p.facets, p3.facets):
        c = 3 if a.orbit == 0 else 1
        assert b.pairing == tuple(c * x for x in a.pairing)
        assert b.vertices == a.vertices
    with pytest.raises(ValueError):
        p.rescaled({0: -1})
    assert rank([F.pairing for F in p3.facets]) == 2
