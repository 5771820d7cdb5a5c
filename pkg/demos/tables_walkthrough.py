# Recompute the low-crossing classification tables from diagram files.
#
#   python3 demos/tables_walkthrough.py

from tanglekh import betti, build_complex, crossing_counts, poincare_polynomial
from tanglekh.tables import golden_entries, load_fixture

# one fixture first: the left-handed trefoil, closed, three crossings
trefoil = load_fixture("31_mmm.tangle")
print("crossings (n+, n-):", crossing_counts(trefoil))

complex_ = build_complex(trefoil)
print("chain groups:", complex_.graded_dimension())
print("d o d = 0:", complex_.d_squared_is_zero())

table = betti(complex_)
print(table.format())
print("Poincare polynomial:", poincare_polynomial(table))
print()

# now every row, printed next to its golden value
for entry in golden_entries():
    got = poincare_polynomial(betti(build_complex(load_fixture(entry))))
    mark = "ok" if got == entry.expected else "MISMATCH"
    if entry.flagged:
        mark += f"  (printed as {entry.printed_poly})"
    print(f"table {entry.table}  {entry.name:<28} {str(got):<55} {mark}")
