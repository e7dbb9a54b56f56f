"""Auxiliary variables and what survives their elimination.

l8 has eight auxiliary variables, l2 has two, l0 has none.  All three give
the same minimal realization, but their computational structures differ:
with auxiliaries exposed, each state sits in its own subsystem.
"""
from sysstruct import comp_structure, corpus, minimize_intricacy, subsystem_structure, to_lft

for name in ("l8", "l2", "l0"):
    g = corpus.load(name)
    r = minimize_intricacy(g)
    c = comp_structure(g)
    lft = to_lft(subsystem_structure(c))
    print(f"{name}: l={g.l}  vertices={len(c.vertices)}  edges={len(c.edges)}  "
          f"blocks={len(lft.blocks)}")
    print("   A =", [[str(x) for x in row] for row in r.A.tolist()])

print("\nmanifest variables of l2:", sorted(comp_structure(corpus.load("l2")).manifest_vars))
