"""A Boolean network on a 4-cycle, updated one node per step.

Node u[t] flips to the mod-2 product of (1 + x_j) over its closed
neighbourhood.  Output is node 4.
"""
from sysstruct import Gds, dependency_graph, simulate
from sysstruct.gds import cyclic_inputs

g = Gds.ring(4)
traj = simulate(g, (0, 0, 0, 0), cyclic_inputs(4, 28))
for t in (0, 1, 2, 3, 4, 8, 12, 16, 20, 24, 28):
    print(f"x[{t:2d}] = {traj.states[t]}   y = {traj.outputs[t]}")

# the orbit returns to the zero state after 28 steps
print("\nperiod back to zero:", traj.states[28] == traj.states[0])

edges = sorted(dependency_graph(g), key=lambda e: (e[0].sort_key(), e[1].sort_key()))
print(f"\n{len(edges)} dependency edges")
print(" ".join(f"{a}->{b}" for a, b in edges))
