"""
Finite bikei
============

A bikei is a pair of operation tables satisfying the unoriented
Reidemeister axioms.  This script checks a few tables, builds the
standard families and counts small bikei.
"""

from bikeikit import alexander, enumerate_bikei, takasaki, verify
from bikeikit.errors import Rejection

# the smallest non-trivial bikei: both operations swap 1 and 2
print("X1:", verify([[2, 2], [1, 1]], [[2, 2], [1, 1]]))

# a failing table reports the first broken axiom and a witness
print("shift:", verify([[2, 2, 2], [3, 3, 3], [1, 1, 1]], [[1, 1, 1], [2, 2, 2], [3, 3, 3]]))

# Takasaki kei on Z_5: x under y = 2y - x
print(takasaki(5).to_block(), end="\n\n")

# Alexander bikei need more than t^2 = r^2 = 1, s(t+r) = 0, r = t+s
print("Z_8 (3,4,7):", verify(*alexander(8, 3, 4, 7).tables()))
try:
    alexander(3, 1, 1, 2)
except Rejection as exc:
    print("Z_3 (1,1,2):", exc)

for n in range(1, 5):
    print(f"bikei of order {n}: {len(enumerate_bikei(n))}")
