"""Forward-stable partitions of NFA states and the quotient construction.

A partition P of the states is forward stable when for every pair of
blocks S, T and every label a, the a-image of T either covers S or misses
it entirely.  Forward stability is closed under coarsest-common-coarsening,
so every NFA has a unique coarsest forward-stable partition; it is computed
here by worklist splitter refinement.

The quotient automaton has one state per block and a block-level edge on a
whenever some member pair has one.  For a forward-stable partition the
quotient is always a valid NFA in this package's sense; for arbitrary
partitions it can violate the no-incoming-edges-into-the-initial-state
invariant, reported as QuotientInvalid.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .automaton import Nfa
from .errors import QuotientInvalid, SizeMismatch, ValidationError


class Partition:
    """Partition of 0..n-1 into non-empty blocks.

    Canonical form: each block sorted ascending, blocks ordered by their
    smallest element.  Equality and hashing use the canonical form.
    """

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        blks = [tuple(sorted(set(b))) for b in blocks]
        if any(not b for b in blks):
            raise ValidationError("partition blocks must be non-empty")
        blks.sort(key=lambda b: b[0])
        covered: list[int] = [x for b in blks for x in b]
        if sorted(covered) != list(range(n)) or len(covered) != n:
            raise ValidationError(f"blocks do not partition 0..{n - 1}")
        self.n = n
        self.blocks: tuple[tuple[int, ...], ...] = tuple(blks)
        block_of = [0] * n
        for i, b in enumerate(self.blocks):
            for x in b:
                block_of[x] = i
        self.block_of: tuple[int, ...] = tuple(block_of)

    @classmethod
    def from_block_of(cls, block_of: Sequence[int]) -> "Partition":
        groups: dict[int, list[int]] = {}
        for x, b in enumerate(block_of):
            groups.setdefault(b, []).append(x)
        return cls(len(block_of), groups.values())

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    def refines(self, other: "Partition") -> bool:
        """True iff every block of self lies inside one block of other."""
        if self.n != other.n:
            raise SizeMismatch(f"partitions over {self.n} and {other.n} elements")
        return all(
            all(other.block_of[x] == other.block_of[b[0]] for x in b)
            for b in self.blocks
        )

    def blocks_by_name(self, names: Sequence[str]) -> list[list[str]]:
        return [[names[x] for x in b] for b in self.blocks]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.n == other.n and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash((self.n, self.blocks))

    def __repr__(self) -> str:
        return f"Partition(n={self.n}, blocks={[list(b) for b in self.blocks]})"


@dataclass(frozen=True)
class FsViolation:
    """Witness that a partition is not forward stable.

    Block ``s_block`` is split by the a-image of block ``t_block``:
    ``covered`` is a member inside the image, ``uncovered`` one outside.
    """

    s_block: int
    t_block: int
    label: str
    covered: int
    uncovered: int

    def describe(self, nfa: Nfa) -> str:
        return (f"block {self.s_block} is split by the {self.label!r}-image of "
                f"block {self.t_block}: contains {nfa.names[self.covered]} "
                f"but not {nfa.names[self.uncovered]}")


def is_forward_stable(nfa: Nfa, partition: Partition) -> tuple[bool, FsViolation | None]:
    """Check forward stability; on failure also return the first violation.

    Scan order is deterministic: source blocks ascending, labels in label
    order, split blocks ascending.
    """
    if partition.n != nfa.n_states:
        raise SizeMismatch(
            f"partition over {partition.n} elements, automaton has {nfa.n_states} states")
    members = [frozenset(b) for b in partition.blocks]
    for t_idx, t_blk in enumerate(partition.blocks):
        for a in nfa.alphabet:
            image = nfa.delta_set(t_blk, a)
            if not image:
                continue
            for s_idx, s_set in enumerate(members):
                inter = s_set & image
                if inter and inter != s_set:
                    return False, FsViolation(
                        s_block=s_idx, t_block=t_idx, label=a,
                        covered=min(inter), uncovered=min(s_set - image))
    return True, None


def coarsest_fs_partition(nfa: Nfa) -> Partition:
    """Unique coarsest forward-stable partition, by splitter refinement.

    Starts from the single-block partition and repeatedly splits blocks
    against (block, label) images until stable.  When a block splits, both
    halves re-enter the worklist with every label; pending splitters naming
    a dead block are skipped, which is sound because the image of a block
    is the union of the images of its fragments.
    """
    n = nfa.n_states
    blocks: list[frozenset[int]] = [frozenset(range(n))]
    alive = set(blocks)
    work: deque[tuple[frozenset[int], str]] = deque(
        (blocks[0], a) for a in nfa.alphabet)

    while work:
        t_blk, a = work.popleft()
        if t_blk not in alive:
            continue
        image = nfa.delta_set(t_blk, a)
        if not image:
            continue
        fresh: list[frozenset[int]] = []
        next_blocks: list[frozenset[int]] = []
        for s in blocks:
            inter = s & image
            if inter and inter != s:
                diff = s - inter
                next_blocks.append(inter)
                next_blocks.append(diff)
                fresh.append(inter)
                fresh.append(diff)
            else:
                next_blocks.append(s)
        if fresh:
            blocks = next_blocks
            alive = set(blocks)
            for blk in fresh:
                for b in nfa.alphabet:
                    work.append((blk, b))

    return Partition(n, blocks)


@dataclass(frozen=True)
class QuotientMap:
    """A source automaton, a partition of its states and the quotient NFA.

    Quotient state ids coincide with block indices of the (canonicalized)
    partition, so ``partition.block_of`` is also the state projection map.
    """

    source: Nfa
    partition: Partition
    quotient: Nfa


def build_quotient(nfa: Nfa, partition: Partition) -> QuotientMap:
    """Quotient automaton under a partition.

    Block names join their member names with '+'.  Raises QuotientInvalid
    when the result breaks an automaton invariant, which can only happen
    for partitions that are not forward stable.
    """
    if partition.n != nfa.n_states:
        raise SizeMismatch(
            f"partition over {partition.n} elements, automaton has {nfa.n_states} states")
    beta = partition.block_of
    qtrans = sorted({(beta[u], a, beta[v]) for (u, a, v) in nfa.transitions})
    qnames = ["+".join(nfa.names[x] for x in b) for b in partition.blocks]
    try:
        quotient = Nfa(partition.n_blocks, beta[nfa.initial], qtrans, names=qnames)
    except ValidationError as exc:
        raise QuotientInvalid(f"quotient is not a valid automaton: {exc}") from exc
    return QuotientMap(source=nfa, partition=partition, quotient=quotient)
