"""Walk through the A2 hexagon: facets, the algebra A(P), the quotient by W_S and the map psi.

Run with ``python demos/hexagon_walkthrough.py``.
"""

from wtoric.algebra import build_graded_algebra, face_complex_of, linear_forms, minimal_nonfaces
from wtoric.iso import build_psi, c_coefficients, verify_psi
from wtoric.polytope import build_w_polytope, facet_orbits, quotient_polytope
from wtoric.roots import build_root_system, generate_group

rs = build_root_system("A2")
W = generate_group(rs)
print(f"W(A2) has order {len(W)}")

# rho = omega1 + omega2 gives the regular hexagon
P = build_w_polytope(rs, W, [rs.weight_to_root((1, 1))])
print(f"P: {len(P.vertices)} vertices, {len(P.facets)} facets, flags {P.flags}")
for j, F in enumerate(P.facets):
    print(f"  facet {j}: pairing {tuple(int(x) for x in F.pairing)}, vertices {F.vertices}")

fc = face_complex_of(P)
A = build_graded_algebra(fc, linear_forms(P), rs.field)
print("Stanley-Reisner generators:", minimal_nonfaces(fc))
print("dims of A(P) by degree:", A.dims, "(h-vector", A.h, ")")

# quotient by the whole group: one X facet per orbit plus the two walls
K = [1, 2]
fo = facet_orbits(P, K)
Q = quotient_polytope(P, K, fo)
print("quotient facets:", [F.name for F in Q.facets])
B = build_graded_algebra(face_complex_of(Q), linear_forms(Q), rs.field)
print("dims of A(Q):", B.dims)

cc = c_coefficients(P, fo)
print("C coefficient checks:", cc.checks)
psi = build_psi(P, Q, fo, cc, A, B)
for j, F in enumerate(Q.facets):
    terms = " + ".join(f"{c}*X{m[0]}" for m, c in sorted(psi.raw_images[j].coeffs.items()))
    print(f"  psi({F.name}) = {terms}")

dossier = verify_psi(psi)
print("dossier:", dossier["checks"], "all:", dossier["all"])
print("A(Q) dims", dossier["quotient_dims"], "= dims of W-invariants", dossier["invariant_dims"])
