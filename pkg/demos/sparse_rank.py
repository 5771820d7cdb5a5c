# The exact sparse rank used for homology, on its own.
#
#   python3 demos/sparse_rank.py

import random
import time

from tanglekh.linalg import GF2, QQ, SparseMatrix, rank, row_reduce

m = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
print("rank over Q  :", rank(SparseMatrix.from_dense(m, QQ)))
print("rank over GF2:", rank(SparseMatrix.from_dense(m, GF2)))  # rows sum to zero mod 2

t, r, pivots = row_reduce(SparseMatrix.from_dense([[2, 4], [1, 3]]))
print("reduced rows:", r.to_dense(), "pivots", pivots)

# a larger random 0/+-1 matrix, similar to a Khovanov differential block
rng = random.Random(0)
n = 2000
entries = {(rng.randrange(n), rng.randrange(n)): rng.choice((1, -1)) for _ in range(4 * n)}
big = SparseMatrix(n, n, entries)
start = time.perf_counter()
print("rank", rank(big), f"of a {n}x{n} matrix with {big.nnz} entries in {time.perf_counter() - start:.2f}s")
