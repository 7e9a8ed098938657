"""
Cycle spectra of the two extremal families
==========================================

Which cycle lengths pass through each vertex of BT(n) and G_n.
"""

# every vertex gets the set of cycle lengths through it
from pancyclic import bt, classify_pancyclicity, gn

for n in (8, 9):
    rep = classify_pancyclicity(bt(n))
    print(f"BT({n}): girth {rep.girth}, circumference {rep.circumference}")
    for v in range(n):
        print(f"  vertex {v}: {sorted(rep.spectrum.vertex_lengths(v))}")
    print("  weakly pancyclic:", sorted(rep.weakly_pancyclic_vertices))

# G_n has the same size as BT(n) but one more weakly pancyclic vertex
for n in range(6, 12):
    wp = classify_pancyclicity(gn(n), edges=False).weakly_pancyclic_vertices
    print(f"G_{n}: size {gn(n).size}, weakly pancyclic {sorted(wp)}")

# an edge can miss lengths its endpoints reach: in BT(9) the triangle edge
# skips every odd length above 3
rep = classify_pancyclicity(bt(9))
print("pancyclic vertices of BT(9):", sorted(rep.pancyclic_vertices))
print("pancyclic edges of BT(9):", sorted(rep.pancyclic_edges))
