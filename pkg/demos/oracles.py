# Independent checks that need no homology ground truth: the Euler
# characteristic from a plain state sum, mirror symmetry, disjoint unions and
# the effect of changing the coefficient field.
#
#   python3 demos/oracles.py

import random

from tanglekh import (
    betti,
    build_complex,
    disjoint_union,
    graded_euler_state_sum,
    jones_specialization,
    khovanov_poincare,
    mirror,
    random_diagram,
)
from tanglekh.linalg import GF2
from tanglekh.tables import load_fixture

rng = random.Random(1)
for _ in range(5):
    d = random_diagram(rng, max_crossings=5)
    p = khovanov_poincare(d)
    print(f"{d.n} crossings  P = {p}")
    print("   P(-1, y) == state sum:", jones_specialization(p) == graded_euler_state_sum(d))

# mirror: (k, q) -> (-k, -q - 2A) where A counts the arcs
d = load_fixture("35_ppp.tangle")
b = betti(build_complex(d)).dims
m = betti(build_complex(mirror(d))).dims
print("mirror rule holds:", m == {(-k, -q - 2 * d.n_arcs): v for (k, q), v in b.items()})

# homology of a disjoint union is the tensor product
a, c = load_fixture("11_p.tangle"), load_fixture("21_pp.tangle")
print("P(a + c) == P(a) P(c):", khovanov_poincare(disjoint_union(a, c)) == khovanov_poincare(a) * khovanov_poincare(c))

# the trefoil has 2-torsion, so GF(2) sees two extra classes
t = load_fixture("31_mmm.tangle")
print("over Q   :", khovanov_poincare(t))
print("over GF2 :", khovanov_poincare(t, GF2))
