"""Shapes where sum |QS^mu| exceeds |SS^lam|, and the quasistandard
tableaux that push never reaches."""

import sys

from supertableaux import Signature, enumerate_shapes, verify_bijection
from supertableaux.extraction import prepend_pair
from supertableaux.tableaux import render_tableau

max_boxes = int(sys.argv[1]) if len(sys.argv) > 1 else 3
for sig in [Signature(1, 2), Signature(2, 1), Signature(2, 2), Signature(1, 3)]:
    for lam in enumerate_shapes(sig, max_boxes):
        r = verify_bijection(lam)
        if r["pass"]:
            continue
        total = sum(k for _, k in r["qs_counts"])
        print(f"sl({sig.m},{sig.n}) {lam}: |SS| = {r['ss_count']}, sum |QS| = {total}")
        for U in r["unreached"]:
            bad = " / ".join(render_tableau(prepend_pair(U, lam)))
            print(f"    U = {U}   pull gives rows {bad} (not semistandard)")
