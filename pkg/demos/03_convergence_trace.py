"""
Convergence of h on x1^2 + x2^2 = 149
=====================================

Writes the search trace to CSV and prints h for each expanded node as a
crude text chart: a sharp initial drop, then a slower approach to zero.
"""

import os
import tempfile

from dioclimb import climb, parse_equation
from dioclimb.search import Action, write_trace_csv

eq = parse_equation("x1^2 + x2^2 = 149")
out = climb(eq)

path = os.path.join(tempfile.gettempdir(), "trace_149.csv")
with open(path, "w", newline="") as fh:
    write_trace_csv(out.trace, fh)
print("trace written to", path)

scale = 60 / max(ev.h for ev in out.trace)
for ev in out.trace:
    if ev.action is Action.BACKTRACK:
        print(f"{'':>10}   <- backtrack to {ev.x}")
    elif ev.action in (Action.EXPAND, Action.GOAL):
        print(f"{str(ev.x):>10} {ev.h:4d} {'#' * round(ev.h * scale)}")

print("solution", out.solution, "after", out.nodes_generated, "generated nodes")
