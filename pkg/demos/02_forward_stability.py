"""Forward-stable partitions and the quotient automaton.

A partition is forward-stable when every block maps into other blocks
all-or-nothing: for any two blocks S, T and label a, either every state of
S has an a-predecessor in T, or none does.  The coarsest such partition
always exists and is unique; merging its blocks loses nothing that the
orderings downstream care about.
"""

from nfaindex import (
    Partition,
    build_quotient,
    coarsest_fs_partition,
    gen_fixture,
    is_forward_stable,
    serialize_nfa,
)

nfa = gen_fixture("fig2")
print("the 7-state demo automaton:")
print(serialize_nfa(nfa))

# Merging everything but the initial state is far too coarse.
naive = Partition(7, [[0], [1, 2, 3, 4, 5, 6]])
ok, violation = is_forward_stable(nfa, naive)
print(f"is {{{{u0}}, everything-else}} forward-stable?  {ok}")
print(f"  witness: {violation.describe(nfa)}")
print()

part = coarsest_fs_partition(nfa)
print("coarsest forward-stable partition:")
for block in part.blocks:
    print("  {" + ", ".join(nfa.names[u] for u in block) + "}")
ok, _ = is_forward_stable(nfa, part)
print(f"verified forward-stable: {ok}")
print()

qmap = build_quotient(nfa, part)
print("quotient automaton (blocks become states, names joined with '+'):")
print(serialize_nfa(qmap.quotient))

print("block membership survives in the mapping:")
for u in range(nfa.n_states):
    b = qmap.partition.block_of[u]
    print(f"  {nfa.names[u]:>3} -> {qmap.quotient.names[b]}")
