"""Build a few BDDs by hand and look at what the manager guarantees.

Every function gets exactly one node graph: build the same function two
different ways and you get the same handle back.
"""

from bddcheck import Manager, ONE, ZERO

m = Manager(3)
x, y, z = m.var(0), m.var(1), m.var(2)

print("projection handles:", x, y, z)
print("terminals:", ZERO, ONE)

# ite(f, g, h) = (f AND g) OR (NOT f AND h) is the only synthesis
# primitive; the gate operators are spelled through it
f1 = m.apply("and", [x, m.apply("or", [y, z])])
f2 = m.apply("or", [m.apply("and", [x, y]), m.apply("and", [x, z])])
print("\nx*(y+z) built two ways:", f1, "and", f2, "->",
      "same handle" if f1 == f2 else "BUG")

# negation is ite(f, 0, 1); double negation lands on the original
print("not(not(f1)) == f1:", m.inv(m.inv(f1)) == f1)

# the node graph, one line per internal node: id level high low
print("\nnode dump of x*(y+z):")
print(m.dump(f1), end="")

print("size:", m.size(f1), "support:", sorted(m.support(f1)))
print("evaluate x=1,y=0,z=1:", m.eval(f1, [1, 0, 1]))

# restriction removes a variable from the support
g = m.cofactor(f1, 0, 1)
print("\ncofactor x=1 gives y+z:", g == m.apply("or", [y, z]))

# the manager counts everything it ever did
print("\nnodes created:", m.created_count, "| ite expansions:", m.ite_calls)
