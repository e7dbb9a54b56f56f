"""Three outputs in a ring: dense G(s), sparse Q(s).

The transfer function says every input reaches every output.  The
dynamical structure function shows the ring that causes it.
"""
from sysstruct import corpus, dsf, signal_structure_graph, sparsity, transfer_function

g = corpus.load("ring")
print(f"{g.n} states, {g.m} inputs, {g.p} outputs")

G = transfer_function(g)
z = sparsity(G)
print(f"\nG(s) has {len(z.edges)} nonzero entries out of {G.rows * G.cols}")
print("G[0,0] =", G[0, 0])

d = dsf(g)
print("\nQ(s):")
for i in range(d.p1):
    print("  ", [str(d.Q[i, j]) for j in range(d.p1)])
print("P(s) diagonal:", [str(d.P[i, i]) for i in range(d.p1)])

W = signal_structure_graph(d)
print("\nlinks between outputs:")
for a, b, tf in W.edges:
    if a.startswith("y"):
        print(f"  {a} -> {b}   {tf}")

# the DOT text can go straight to graphviz
print()
print(W.to_dot())
