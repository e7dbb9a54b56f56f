"""Same transfer function, different subsystem structures.

c1 and c2 reduce to the identical minimal realization, yet their
auxiliary variables are wired differently: c1 splits into three blocks and
c2 into two.  Both are consistent with the same signal structure.
"""
from sysstruct import (check_relation, comp_structure, corpus, dsf, minimize_intricacy,
                       subsystem_structure, to_lft, transfer_function)

c1, c2 = corpus.load("c1"), corpus.load("c2")
r1, r2 = minimize_intricacy(c1), minimize_intricacy(c2)
print("identical minimal realization:", (r1.A, r1.B, r1.C, r1.D) == (r2.A, r2.B, r2.C, r2.D))
print("identical G(s):", transfer_function(c1) == transfer_function(c2))

for name, g in (("c1", c1), ("c2", c2)):
    ss = subsystem_structure(comp_structure(g))
    lft = to_lft(ss)
    print(f"\n{name}: {len(lft.blocks)} blocks")
    for b in lft.blocks:
        print(f"  {', '.join(b.input_names)} -> {', '.join(b.output_names)}")
    check = check_relation(lft, dsf(g))
    print("  consistent with its DSF:", check.holds)

# damage one block and the relation notices
lft = to_lft(subsystem_structure(comp_structure(c1)))
Ss = list(lft.Sblocks)
Ss[2] = Ss[2] * 2
bad = check_relation(lft.with_blocks(Ss), dsf(c1))
print("\nblock 3 doubled, still consistent?", bad.holds)
