"""
Looking at individual figures
=============================

Small figures printed as ASCII, with their class memberships.  Rows are
sheared, so each column is drawn half a cell higher than the one to its
left.
"""

from cheesyhex.classify import ClassId, Kind, bird_partition, member
from cheesyhex.enumeration import members
from cheesyhex.hexgrid import cells_of, reflect


def draw(cells):
    xs = [x for x, _ in cells]
    # doubled physical height: 2y + x
    hs = {(x, 2 * y + x) for x, y in cells}
    lo = min(h for _, h in hs)
    hi = max(h for _, h in hs)
    lines = []
    for h in range(hi + 1, lo - 1, -1):
        row = ""
        for x in range(min(xs), max(xs) + 1):
            row += "##" if (x, h) in hs or (x, h - 1) in hs else "  "
        lines.append(row)
    return "\n".join(line.rstrip() for line in lines)


level = 1
figs = [cells_of(c) for c in members(ClassId(Kind.CHEESY_BLOCKS, level), 5)]
holed = [f for f in figs if not member(ClassId(Kind.COLUMN_CONVEX), f)]
print(f"{len(figs)} five-cell figures at level {level}, {len(holed)} with a hole")
for f in holed[:4]:
    print()
    print(draw(f))
    print("birds:", bird_partition(f, level), " mirror is a member:", reflect(f) in set(figs))

incomplete = [cells_of(c) for c in members(ClassId(Kind.INCOMPLETE_CHEESY_BLOCKS, level), 3)]
print(f"\n{len(incomplete)} incomplete three-cell figures, for example")
print(draw(incomplete[0]))
