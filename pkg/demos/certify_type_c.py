"""
Certify every parabolic of C_n
==============================

Runs the exclusion stages over all reduced half sets for every proper
Levi subset and tallies where each class gets excluded.

    python3 demos/certify_type_c.py 5
"""

import sys
from collections import Counter

from cascade_kit.checker import integrality_sweep
from cascade_kit.rootsys import build_root_system

n = int(sys.argv[1]) if len(sys.argv) > 1 else 5
rs = build_root_system("C", n)

stages = Counter()
open_cases = []
for mask in range((1 << n) - 1):
    pi1 = [k + 1 for k in range(n) if mask >> k & 1]
    rep = integrality_sweep(rs, pi1)
    stages.update(v.stage for v in rep.verdicts)
    open_cases += [(pi1, c) for c, _ in rep.inconclusive]

for stage, count in sorted(stages.items()):
    print(f"{stage:18s} {count}")
print("inconclusive:", open_cases or "none")
