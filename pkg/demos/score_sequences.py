"""Score sequences: enumeration, duals and the two reductions."""
# %%
from tournalink.digraph import realize, scores, write_edge_list
from tournalink.scoreseq import dual, enumerate_sequences, extend, landau_check, reductions

for n in range(1, 12):
    print(n, len(enumerate_sequences(n)))

# %% Landau's condition catches a bad row
print(landau_check((0, 1, 2, 4, 5, 5, 5, 5)))

# %% dual flips every result
s = (1, 1, 1, 3, 4, 5, 6, 7)
print(s, "->", dual(s))

# %% both reductions apply here; the classifier uses the first
for r in reductions((1, 1, 3, 3, 4, 4, 5, 7)):
    print(r.rule, r.sequence, "--", r.description)

# %% extend goes the other way: add a vertex of out-degree 7
for t in extend((3, 3, 3, 3, 4, 4, 4, 4), 7):
    print(t)

# %% any valid sequence can be realized
t = realize((2, 2, 3, 3, 4, 4, 5, 5))
print(write_edge_list(t))
print(scores(t).sequence)
