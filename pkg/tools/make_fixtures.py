"""Regenerate the diagram files in src/tanglekh/data from Morse words.

For every golden row the script tries all strand orientations of the type's
Morse word and keeps the first one whose crossing signs and brute-force
polynomial both match.  Run from the repository root.
"""

import itertools
import os
import sys

from tanglekh.construct import from_morse
from tanglekh.diagram import TangleDiagram, crossing_counts, serialize_diagram, strands
from tanglekh.homology import khovanov_poincare
from tanglekh.tables import GOLDEN

WORDS = {
    "1_1": (0, "cup0 cup0 o1"),
    "2_1": (0, "cup0 cup1 o0 o2 cap1 cap0"),
    "2'_1": (0, "cup0 cup1 u0 u2 cap1 cap0"),
    "2_2": (0, "cup0 cup0 o1 o1 cap0"),
    "2_3": (0, "cup0 cup0 o1 o1"),
    "2'_3": (0, "cup0 cup0 u1 u1"),
    "2_4": (2, "cup0 o1 o2"),
    "2_5": (2, "cup0 o1 u2"),
    "2_6": (2, "cup0 o2 o1"),
    "3_1": (0, "cup0 cup0 u1 u1 u1 cap0 cap0"),
    "3'_1": (0, "cup0 cup0 o1 o1 o1 cap0 cap0"),
    "3_2": (0, "cup0 cup1 u0 u0 u0 cap1"),
    "3'_2": (0, "cup0 cup1 o0 o0 o0 cap1"),
    "3_3": (0, "cup0 cup0 u1 u1 o2"),
    "3'_3": (0, "cup0 cup0 o1 o1 u2"),
    "3_4": (2, "o0 o0 o0"),
    "3'_4": (2, "u0 u0 u0"),
    "3_5": (2, "cup1 o0 u2 o1"),
    "3'_5": (2, "cup1 u0 o2 u1"),
    "3_6": (2, "cup0 o1 u2 o1"),
    "3'_6": (2, "cup0 u1 o2 u1"),
    "4arcs/path": (4, "o1 o0 o2"),
    "4arcs/star": (4, "o0 o1 o2"),
}

SPECIAL = {
    "0_0": TangleDiagram(free_loops=1),
    "0_1": TangleDiagram(free_arcs=(("b0", "b1"),)),
}


def main(out_dir):
    os.makedirs(out_dir, exist_ok=True)
    failures = 0
    for e in GOLDEN:
        if e.type_label in SPECIAL:
            d, note = SPECIAL[e.type_label], "no crossings"
        else:
            key = e.type_label + (f"/{e.variant}" if e.variant else "")
            nb, word = WORDS[key]
            d0 = from_morse(nb, word)
            d = None
            for flips in itertools.product((False, True), repeat=len(strands(d0))):
                cand = from_morse(nb, word, flips)
                if crossing_counts(cand) == e.sign_counts and khovanov_poincare(cand) == e.expected:
                    d = cand
                    note = f"morse {nb} | {word} | flips {''.join('1' if f else '0' for f in flips)}"
                    break
            if d is None:
                print("no orientation matches", e.name)
                failures += 1
                continue
        with open(os.path.join(out_dir, e.file), "w", encoding="utf-8") as fh:
            fh.write(f"# {e.name}\n# {note}\n" + serialize_diagram(d))
    return failures


if __name__ == "__main__":
    sys.exit(1 if main(sys.argv[1] if len(sys.argv) > 1 else "src/tanglekh/data") else 0)
