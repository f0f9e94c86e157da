"""Reading, writing and drawing automata.

The text format is line-oriented: one ``initial`` line naming the start
state, then one ``trans <from> <label> <to>`` line per edge.  ``#`` starts
a comment and is reserved: it doubles as the virtual label on the initial
state, sorting below every real letter.
"""

from nfaindex import delta_string, parse_nfa, serialize_nfa, to_dot

TEXT = """\
# a tiny automaton: two branches that meet again
initial start
trans start a left
trans start b right
trans left  a meet
trans right a meet
trans meet  a meet
"""

nfa = parse_nfa(TEXT)

print(f"parsed {nfa.n_states} states over alphabet {list(nfa.alphabet)}")
print(f"initial state: {nfa.names[nfa.initial]}")
print()

print("incoming-label sets (these drive every ordering in the library):")
for u in range(nfa.n_states):
    labels = sorted(nfa.lambda_set(u))
    print(f"  {nfa.names[u]:>6}: {labels}")
print()

for word in ("a", "b", "aa", "ba", "baaa", "ab"):
    hits = [nfa.names[u] for u in delta_string(nfa, nfa.initial, word)]
    print(f"reading {word!r:7} lands in {hits or 'nothing'}")
print()

print("round trip through the text format is exact:")
again = parse_nfa(serialize_nfa(nfa))
print(f"  parse(serialize(nfa)) == nfa -> {again == nfa}")
print()

print("DOT output (pipe into `dot -Tsvg` to render):")
print(to_dot(nfa))
