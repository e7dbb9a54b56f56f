"""Three ways to the transfer function, compared on random systems.

State space, the LFT of the subsystem structure, and the dynamical
structure function should agree exactly.
"""
import random
import sys
import time

from sysstruct import (comp_structure, dsf, dsf_transfer, lft_transfer, subsystem_structure,
                       to_lft, transfer_function)
from sysstruct.generate import random_realization

count = int(sys.argv[1]) if len(sys.argv) > 1 else 50
rng = random.Random(2024)
t0 = time.perf_counter()
agree = 0
for _ in range(count):
    g = random_realization(rng)
    G = transfer_function(g)
    agree += (lft_transfer(to_lft(subsystem_structure(comp_structure(g)))) == G
              and dsf_transfer(dsf(g)) == G)
print(f"{agree}/{count} systems agree on all three routes "
      f"({(time.perf_counter() - t0) / count * 1000:.1f} ms each)")
