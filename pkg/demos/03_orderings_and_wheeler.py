"""State orderings: the maximum co-lex relation, its forward-stable
refinement, and Wheeler checks.

A co-lex (pre)order ranks states the way a suffix array ranks suffixes:
if u < v then every string entering u is co-lexicographically below every
string entering v.  Low-width orders of this kind are what make an
automaton indexable.
"""

from nfaindex import (
    cfs_order,
    check_wheeler_order,
    check_wheeler_preorder,
    gen_fixture,
    is_quasi_wheeler,
    max_colex_order,
    max_colex_relation,
    relation_from_json_dict,
)


def show(rel, nfa, title):
    pairs = [(nfa.names[u], nfa.names[v]) for (u, v) in rel.pairs()]
    print(f"{title}: {pairs}")


# --- a 3-state automaton with two a-successors of the start state -------
nfa = gen_fixture("wheeler3")
rel = max_colex_relation(nfa)
show(rel, nfa, "maximum co-lex relation of wheeler3")
print(f"antisymmetric: {rel.is_antisymmetric()}  "
      f"(so max_colex_order -> {max_colex_order(nfa)})")
print()

# u2 and u3 are mutually related, yet two genuine total *orders* exist;
# both pass the Wheeler axioms, which is exactly why no single maximum
# order can.
for pairs in ([["u1", "u2"], ["u1", "u3"], ["u2", "u3"]],
              [["u1", "u3"], ["u1", "u2"], ["u3", "u2"]]):
    cand = relation_from_json_dict({"n": 3, "pairs": pairs}, nfa)
    ok, _ = check_wheeler_order(nfa, cand)
    print(f"candidate {pairs} is a Wheeler order: {ok}")

merged = relation_from_json_dict(
    {"n": 3, "pairs": [["u1", "u2"], ["u1", "u3"],
                       ["u2", "u3"], ["u3", "u2"]]}, nfa)
ok, _ = check_wheeler_preorder(nfa, merged)
print(f"the preorder merging u2,u3 is a Wheeler preorder: {ok}")
print()

# --- the larger demo automaton ------------------------------------------
fig2 = gen_fixture("fig2")
rel_r = max_colex_relation(fig2)
rel_fs, qmap = cfs_order(fig2)
show(rel_r, fig2, "maximum co-lex relation of fig2")
show(rel_fs, fig2, "forward-stable co-lex preorder of fig2")
print(f"the preorder extends the relation: {rel_fs.superset_of(rel_r)}")

quasi, witness = is_quasi_wheeler(fig2)
print(f"fig2 is quasi-Wheeler: {quasi}")
if quasi:
    ok, _ = check_wheeler_preorder(fig2, witness)
    print(f"  returned witness passes check_wheeler_preorder: {ok}")
    classes = [
        "{" + ", ".join(fig2.names[u] for u in block) + "}"
        for block in qmap.partition.blocks
    ]
    print(f"  its equivalence classes: {classes}")
