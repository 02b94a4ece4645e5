"""Certifying concrete tournaments as not intrinsically linked.

A 7-vertex digraph is certified by a labeling onto the CG embedding of K7
that leaves no link with both components consistently oriented. Eight
vertex tournaments get there by one consistent edge contraction.
"""
# %%
from tournalink.cg import certificate_search, certify_tournament8, linked_components
from tournalink.constructions import sink_source_witness
from tournalink.digraph import Digraph, Tournament, contractible_arcs, realize

k7 = Digraph(7, frozenset((a, b) for a in range(7) for b in range(7) if a != b))
print("K7 with every arc doubled:", len(linked_components(k7, (1, 2, 3, 4, 5, 6, 7))), "links")
print(certificate_search(k7))

# %%
report = certify_tournament8(Tournament.transitive(8))
print("\n".join(report.lines()))

# %% (1,3,3,3,3,4,5,6) has an intrinsically linked realization, but this
# one (score-6 vertex beating the score-1 vertex) is certified
t = sink_source_witness((1, 3, 3, 3, 3, 4, 5, 6))
print("\n".join(certify_tournament8(t).lines()))

# %% unknown sequences: every score is between 2 and 5, so nothing contracts
t = realize((2, 2, 2, 3, 4, 5, 5, 5))
print(contractible_arcs(t), certify_tournament8(t))
