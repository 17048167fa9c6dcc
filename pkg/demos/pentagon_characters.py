"""Graded characters of W = I2(5) on A(P) for the pentagon, computed over Q(sqrt5).

The degree-1 trace of a reflection equals the number of facets it fixes
minus its trace on V (which is 0); the rotation gives (1 - sqrt5)/2.
"""

from wtoric.algebra import build_graded_algebra, face_complex_of, linear_forms
from wtoric.pipeline import character_table, format_scalar
from wtoric.polytope import build_w_polytope
from wtoric.roots import build_root_system, generate_group

rs = build_root_system("I2(5)")
W = generate_group(rs)
P = build_w_polytope(rs, W, [rs.weight_to_root((1, 0))])
print(f"pentagon: {len(P.vertices)} vertices, nondegenerate={P.flags['nondegenerate']}")

A = build_graded_algebra(face_complex_of(P), linear_forms(P), rs.field)
print("dims:", A.dims)

for row in character_table(A, P):
    traces = ", ".join(format_scalar(t) for t in row["traces"])
    print(f"class of {row['word'] or 'e'} (size {row['class_size']}): traces by degree [{traces}]")

for i, g in enumerate(W.generators, 1):
    fixed = sum(1 for j, k in enumerate(P.facet_perm[g]) if j == k)
    print(f"r{i}: fixes {fixed} facet(s), Tr on A^1 = {format_scalar(A.trace(P.facet_perm[g], 1))}")
