"""Equivalence checking with a miter.

Corresponding outputs of the two circuits feed XOR gates; the XORs are
OR-ed into one signal.  The circuits agree everywhere exactly when that
signal's BDD is the 0-terminal, and any satisfying assignment of a
non-zero miter is a concrete disagreement.
"""

from bddcheck import (build_miter, check_equivalence, parse, serialize,
                      simulate)
from bddcheck.generators import mutate_gate, random_dag_circuit

nand_form = parse("""
.inputs a b
.outputs y
.gate nand y a b
.end
""")

demorgan_form = parse("""
.inputs a b
.outputs y
.gate inv na a
.gate inv nb b
.gate or y na nb
.end
""")

out = check_equivalence(nand_form, demorgan_form)
print("nand(a,b) vs or(inv(a),inv(b)):", out.verdict)

# the miter itself is an ordinary circuit
miter = build_miter(nand_form, demorgan_form)
print("\nmiter netlist:")
print(serialize(miter), end="")
res = simulate(miter)
print("miter output BDD handle:", res.signal_bdds[miter.outputs[0]],
      "(0 means constant false)")

# a single wrong gate produces a replayable counterexample
base = random_dag_circuit(6, 14, seed=3, n_outputs=2)
broken = mutate_gate(base, seed=9)
out = check_equivalence(base, broken)
print("\nbase vs single-gate mutant:", out.verdict)
if out.counterexample:
    print("counterexample:", out.counterexample)
