# Generator bookkeeping for simple tangles: every arc contributes a factor,
# and the bigradings multiply like the group algebra Z[Z x Z].
#
#   python3 demos/closed_form.py

from tanglekh.reduction import binomial_generators, generator_expansion, simple_poincare

# four arcs, three crossings, all four sign splits
for n_plus in (3, 2, 1, 0):
    n_minus = 3 - n_plus
    print(f"N=4, n+={n_plus}, n-={n_minus}:", simple_poincare(4, n_plus, n_minus))
print()

# one arc crossed by n parallel arcs: C(n, k) generators at (k, k - 1)
for n in range(1, 6):
    g = generator_expansion(n + 1, n, 0)
    print(n, g, g == binomial_generators(n))

# the number of generators doubles with every crossing
print([len(generator_expansion(t + 1, t // 2, t - t // 2)) for t in range(8)])

# too many crossings for the number of arcs is not a simple tangle
try:
    simple_poincare(2, 1, 1)
except ValueError as exc:
    print("rejected:", exc)
