"""
Cross-checking the climber against exhaustive enumeration
=========================================================

The oracle walks every lattice point inside the per-variable bounds, so it
is slow but trustworthy. Here both are run over a batch of random small
equations and their verdicts compared.
"""

import random

from dioclimb import SearchConfig, Verdict, certify, climb, make_equation

rng = random.Random(7)
tally = {}
for _ in range(200):
    n = rng.randint(1, 3)
    eq = make_equation(
        [rng.randint(1, 5) for _ in range(n)],
        [rng.randint(1, 3) for _ in range(n)],
        rng.randint(1, 300),
    )
    out = climb(eq, SearchConfig(trace_enabled=False))
    report = certify(eq, out)
    key = (out.status.value, report.verdict.value)
    tally[key] = tally.get(key, 0) + 1
    if report.verdict is not Verdict.AGREE:
        print("disagreement:", eq, report.detail)

for (status, verdict), count in sorted(tally.items()):
    print(f"{status:10s} {verdict:10s} {count}")
