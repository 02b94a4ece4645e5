"""The oriented K_{3,3,2} and its six tournament completions."""
# %%
from tournalink.constructions import (
    IL_BY_AUTHORITY,
    K332_CHOICES,
    build_h,
    c_a_b_triangles,
    complete_k332,
    oracle_suite,
)
from tournalink.digraph import scores

h = build_h()
print(len(h.arcs), "arcs, out-degrees", sorted(h.out_degrees()))
print(len(c_a_b_triangles()), "c-a-b triangles")

# %%
for choice in K332_CHOICES:
    t = complete_k332(choice)
    print(choice, scores(t).sequence)
print("status:", IL_BY_AUTHORITY)

# %% sanity checks that back the rest of the package
for check in oracle_suite():
    print(check.line())
