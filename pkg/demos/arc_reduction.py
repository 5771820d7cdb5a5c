# Adding an arc that crosses a tangle once shifts and doubles its homology.
# Compare brute force against the predicted Betti tables, then peel a simple
# tangle arc by arc.
#
#   python3 demos/arc_reduction.py

from tanglekh import betti, build_complex, khovanov_poincare
from tanglekh.construct import PendantAttachment, attach_pendant_arc, pendant_attachments
from tanglekh.reduction import predicted_betti, reduce, simple_poincare
from tanglekh.tables import load_fixture

small = load_fixture("23_pp.tangle")  # two arcs crossing twice; not simple
print("T :", khovanov_poincare(small))

for sign in (1, -1):
    att = PendantAttachment(edge=pendant_attachments(small)[0].edge, sign=sign, over=True)
    big = attach_pendant_arc(small, att, names=("in", "out"))
    brute = betti(build_complex(big)).dims
    guess = predicted_betti(betti(build_complex(small)), sign)
    print(f"T' with a {'right' if sign > 0 else 'left'}-handed arc:", khovanov_poincare(big),
          "| matches prediction:", brute == guess)

# a simple tangle: four arcs in a path, all crossings left-handed
path = load_fixture("4arcs_mmm_path.tangle")
trace, poly = reduce(path)
for line in trace.lines():
    print("  ", line)
print("closed form :", poly)
print("formula     :", simple_poincare(4, 0, 3))
print("brute force :", khovanov_poincare(path))
