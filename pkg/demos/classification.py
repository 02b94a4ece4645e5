"""Classifying every score sequence of length 8 through 11."""
# %%
from collections import Counter

from tournalink.rules import Classifier, Status

clf = Classifier()
for n in range(7, 12):
    c = clf.table(n).counts
    print(f"n={n:2d}  linkless={c.linkless:5d}  il={c.il:5d}  unknown={c.unknown:4d}")

# %% which rules carry the 8-vertex table
table = clf.table(8)
print(Counter(v.rule for v in table.entries.values() if v.status is Status.LINKLESS))

# %% the five length-8 sequences nothing decides
for s in table.by_status(Status.UNKNOWN):
    print(s)

# %% a trace for something longer: reductions down to length 8, then a direct rule
v = clf.classify((1, 1, 3, 3, 4, 4, 5, 7, 8))
print(v.status)
for step in v.trace:
    print("  ", step)

# IL sequences of length 9 are built up from length 8 by adding a vertex
v = clf.classify((3, 3, 3, 3, 4, 4, 4, 5, 7))
for step in v.trace:
    print("  ", step)
