"""Fanout-free circuits stay linear under the DFS variable order.

For a tree over and/or/nand/nor/inv, the BDD of every signal has one
node per support variable when the variable order comes from a DFS of
the circuit.  A bad order breaks that immediately, which is the whole
point of choosing the order from the structure.
"""

from bddcheck import dfs_variable_order, simulate
from bddcheck.generators import random_tree_circuit

for n in (8, 32, 128):
    c = random_tree_circuit(n, seed=42)
    res = simulate(c)                  # DFS order is the default
    po = c.outputs[0]
    print(f"n={n:4d}  gates={len(c.gates):4d}  "
          f"output BDD size={res.stats.per_signal_size[po]:4d}  "
          f"peak live={res.stats.peak_live:5d}  "
          f"created by gates={res.stats.created_total:6d}")

# every intermediate signal is linear too: size equals support size
c = random_tree_circuit(24, seed=7)
res = simulate(c)
m = res.manager
worst = max(res.signal_bdds, key=lambda s: m.size(res.signal_bdds[s]))
print("\nlargest signal:", worst,
      "size", m.size(res.signal_bdds[worst]),
      "support", len(m.support(res.signal_bdds[worst])))

# now wreck the order: interleave the two subtrees of the root
good = dfs_variable_order(c)
bad = good[::2] + good[1::2]
res_bad = simulate(c, order=bad)
po = c.outputs[0]
print("\nDFS order   : output size", res.stats.per_signal_size[po])
print("interleaved : output size", res_bad.stats.per_signal_size[po])
