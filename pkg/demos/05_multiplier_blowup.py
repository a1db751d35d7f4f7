"""Where polynomial construction ends: the multiplier.

Multiplier output BDDs are exponential under every variable order, so
symbolic simulation must blow through any fixed node budget.  The run
aborts with a typed capacity error that keeps the trace gathered so
far, which is exactly the interesting artifact.
"""

from bddcheck import SimulationCapacityError, simulate
from bddcheck.generators import array_multiplier

BITS = 8
LIMIT = 50_000

c = array_multiplier(BITS)
print(f"{BITS}x{BITS} array multiplier: {len(c.inputs)} inputs, "
      f"{len(c.gates)} gates, node budget {LIMIT}")

try:
    simulate(c, order=list(range(2 * BITS)), node_limit=LIMIT)
    print("completed within budget (try more bits)")
except SimulationCapacityError as exc:
    stats = exc.stats
    print(f"aborted at signal '{stats.failing_signal}' after "
          f"{len(stats.rows)} signals")
    print("last rows of the partial trace (size, created so far):")
    for row in stats.rows[-8:]:
        print(f"  {row.signal:>12s} {row.kind:>4s} size={row.size:6d} "
              f"created={row.created_cum:6d}")
