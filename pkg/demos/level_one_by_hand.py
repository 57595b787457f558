"""
Solving the level-one system
============================

Three linear equations over rational functions tie together the figure
count ``E1``, its height-weighted version ``F1`` and the incomplete count
``G``.  Eliminating gives closed forms; the same equations can also be
checked coefficient by coefficient against the transfer counter.
"""

from cheesyhex import solve_level1, series_expand, statistics_series
from cheesyhex.series import LEVEL1_EQUATIONS, build_level1_system

system = build_level1_system()
print("unknowns:", system.unknowns)

sol = solve_level1()
for name, f in sol.items():
    print(f"{name} = {f}")
    print("   ", series_expand(f, 10))

stats = statistics_series(1, 10)
for eq in LEVEL1_EQUATIONS:
    print(f"{eq.name:>14}: residual {eq.residual(stats, 10)}")

# break one coefficient and watch the equation notice
stats["G"][5] += 1
print("after a fault in G at q^5:", LEVEL1_EQUATIONS[2].residual(stats, 10))
