"""
Counting the same figures three ways
====================================

Brute force, the column transfer counter and the closed-form generating
function should agree wherever they overlap.  Brute force is exhaustive
but slow, so it is only run to a small area.
"""

from cheesyhex import count_blocks, count_class, paper_gf, series_expand
from cheesyhex.classify import ClassId, Kind

LEVEL = 2
N_BRUTE = 7
N = 20

brute = [count_class(ClassId(Kind.CHEESY_BLOCKS, LEVEL), n) for n in range(1, N_BRUTE + 1)]
dp = count_blocks(LEVEL, N)
gf = series_expand(paper_gf(LEVEL), N)

print(f"level {LEVEL}")
print(f"{'area':>4} {'brute':>8} {'transfer':>16} {'series':>16}")
for n in range(1, N + 1):
    b = brute[n - 1] if n <= N_BRUTE else ""
    print(f"{n:>4} {b:>8} {dp[n]:>16} {gf[n]:>16}")

# the incomplete figures come out of the same run
print("incomplete:", dp.incomplete[1:N_BRUTE + 1])
print("brute     :", [count_class(ClassId(Kind.INCOMPLETE_CHEESY_BLOCKS, LEVEL), n) for n in range(1, N_BRUTE + 1)])
