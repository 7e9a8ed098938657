"""
Searching for f(n)
==================

Scan edge counts downward until a nonbipartite graph with no weakly
pancyclic vertex turns up.
"""

import logging

from pancyclic import compute_f
from pancyclic.graph import from_graph6
from pancyclic.spectrum import classify_pancyclicity

logging.basicConfig(level=logging.INFO, format="%(message)s")

for n in range(6, 10):
    rec = compute_f(n)
    print(f"n={n}: f={rec.f_value}, b={rec.b_value}, {rec.elapsed:.1f}s")
    for w in rec.witnesses:
        rep = classify_pancyclicity(from_graph6(w), edges=False)
        print(f"  witness {w}: girth {rep.girth}, circumference {rep.circumference}")

# n=10 takes tens of CPU minutes; pass resume_dir to survive interruption
# rec = compute_f(10, jobs=8, resume_dir="f10-checkpoint")
