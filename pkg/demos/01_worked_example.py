"""
Climbing x1^2 + x2^2 = 100 by hand
==================================

Follows the first few moves of the climber on a small equation, then lets
it run to a solution.
"""

from dioclimb import climb, heuristic, initial_node, parse_equation, successors
from dioclimb.search import Action

eq = parse_equation("x1^2 + x2^2 = 100")

# The search starts at the all-ones vector. h is how far the left-hand side
# still is from the target.
start = initial_node(eq)
print("start", start.x, "h =", start.h)

# Each expansion bumps one variable at a time.
first = successors(eq, start)
for child in first:
    print("  child", child.x, "h =", child.h)

# Both children tie at h = 95; the earlier one (x1 bumped) wins.
second = successors(eq, first[0])
for child in second:
    print("  grandchild", child.x, "h =", child.h)

# (3, 1) has the smallest h, so it becomes the next current node.
assert min(second, key=lambda c: c.h).x == (3, 1)
assert heuristic(eq, (3, 1)) == 90

# Now run the whole search and look at the path it took.
out = climb(eq)
print()
print("status:", out.status.value, "solution:", out.solution)
print("expansions:", out.expansions, "nodes generated:", out.nodes_generated,
      "backtracks:", out.backtracks)
for ev in out.trace:
    if ev.action in (Action.EXPAND, Action.BACKTRACK, Action.GOAL):
        print(f"{ev.step:3d} {ev.action.value:9s} {ev.x} h={ev.h}")
