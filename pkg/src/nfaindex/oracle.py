"""Exhaustive reference implementations for cross-checking the fast paths.

Everything here trades time for obviousness and shares no algorithmic
ideas with the production code: partitions are enumerated outright,
the maximum co-lex relation is found by greatest-fixpoint deletion, width
by scanning all subsets, and reach sets by walking every string up to a
length bound.  Guards raise TooLarge beyond the exhaustive-search bounds.
"""

from __future__ import annotations

from typing import Iterator

from .automaton import Nfa, lambda_leq
from .errors import InternalInvariantViolation, InvalidParameter, TooLarge
from .fs_partition import Partition, is_forward_stable
from .relations import Relation, induced_equivalence

MAX_BRUTE_STATES = 8
MAX_BRUTE_CLASSES = 15
MAX_REACH_LEN = 8


def _growth_strings(n: int) -> Iterator[list[int]]:
    # Restricted growth strings a: a[0] = 0, a[i] <= max(a[:i]) + 1.
    # They enumerate set partitions without duplicates.
    a = [0] * n

    def rec(i: int, mx: int) -> Iterator[list[int]]:
        if i == n:
            yield list(a)
            return
        for v in range(mx + 2):
            a[i] = v
            yield from rec(i + 1, max(mx, v))

    yield from rec(1, 0)


def enumerate_fs_partitions(nfa: Nfa) -> list[Partition]:
    """Every forward-stable partition, by filtering all set partitions."""
    if nfa.n_states > MAX_BRUTE_STATES:
        raise TooLarge(
            f"partition enumeration is limited to {MAX_BRUTE_STATES} states, "
            f"got {nfa.n_states}")
    found = []
    for rgs in _growth_strings(nfa.n_states):
        p = Partition.from_block_of(rgs)
        ok, _ = is_forward_stable(nfa, p)
        if ok:
            found.append(p)
    return found


def brute_coarsest_fs(nfa: Nfa) -> Partition:
    """The forward-stable partition that every other one refines."""
    candidates = enumerate_fs_partitions(nfa)
    coarsest = [p for p in candidates if all(c.refines(p) for c in candidates)]
    if len(coarsest) != 1:
        raise InternalInvariantViolation(
            f"expected exactly one coarsest forward-stable partition, "
            f"found {len(coarsest)}")
    return coarsest[0]


def brute_max_colex_relation(nfa: Nfa) -> Relation:
    """Greatest fixpoint: start from the label-compatible pairs and delete
    every pair with an unrelated distinct predecessor pair until stable."""
    n = nfa.n_states
    if n > MAX_BRUTE_STATES:
        raise TooLarge(
            f"relation search is limited to {MAX_BRUTE_STATES} states, got {n}")
    live = {
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and lambda_leq(nfa.lambda_sets[u], nfa.lambda_sets[v])
    }
    changed = True
    while changed:
        changed = False
        for (u, v) in sorted(live):
            ok = True
            for a in nfa.alphabet:
                for up in nfa.sources(u, a):
                    for vp in nfa.sources(v, a):
                        if up != vp and (up, vp) not in live:
                            ok = False
            if not ok:
                live.discard((u, v))
                changed = True
    return Relation(n, live)


def brute_width(rel: Relation) -> int:
    """Largest antichain size, by scanning every subset of the classes."""
    classes = induced_equivalence(rel)
    m = classes.n_blocks
    if m > MAX_BRUTE_CLASSES:
        raise TooLarge(
            f"width search is limited to {MAX_BRUTE_CLASSES} classes, got {m}")
    reps = [b[0] for b in classes.blocks]
    comp = [0] * m
    for i in range(m):
        for j in range(m):
            if i != j and (rel.bits[reps[i], reps[j]] or rel.bits[reps[j], reps[i]]):
                comp[i] |= 1 << j
    best = 0
    for mask in range(1, 1 << m):
        rest = mask
        antichain = True
        while rest:
            i = (rest & -rest).bit_length() - 1
            if comp[i] & mask:
                antichain = False
                break
            rest &= rest - 1
        if antichain:
            best = max(best, bin(mask).count("1"))
    return best


def reach_sets(nfa: Nfa, max_len: int) -> tuple[frozenset[tuple[str, ...]], ...]:
    """For each state, the set of strings of length <= max_len reaching it.

    Strings are tuples of labels; the empty tuple reaches the initial
    state.  Walks every live string level by level.
    """
    if max_len < 0:
        raise InvalidParameter(f"max_len must be >= 0, got {max_len}")
    if max_len > MAX_REACH_LEN:
        raise TooLarge(
            f"string enumeration is limited to length {MAX_REACH_LEN}, got {max_len}")
    per_state: list[set[tuple[str, ...]]] = [set() for _ in range(nfa.n_states)]
    frontier: dict[tuple[str, ...], frozenset[int]] = {
        (): frozenset((nfa.initial,))}
    per_state[nfa.initial].add(())
    for _ in range(max_len):
        nxt: dict[tuple[str, ...], frozenset[int]] = {}
        for word, states in frontier.items():
            for a in nfa.alphabet:
                image = nfa.delta_set(states, a)
                if image:
                    longer = word + (a,)
                    nxt[longer] = image
                    for u in image:
                        per_state[u].add(longer)
        frontier = nxt
    return tuple(frozenset(s) for s in per_state)
