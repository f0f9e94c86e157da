"""Forward stability: the checker, the refinement fixpoint, quotients."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nfaindex import (
    Nfa,
    Partition,
    QuotientInvalid,
    SizeMismatch,
    ValidationError,
    build_quotient,
    coarsest_fs_partition,
    gen_random,
    gen_separation_family,
    is_forward_stable,
)


class TestPartition:
    def test_canonical_form(self):
        p = Partition(5, [[4, 2], [3], [1, 0]])
        assert p.blocks == ((0, 1), (2, 4), (3,))
        assert p.block_of == (0, 0, 1, 2, 1)

    def test_equality_ignores_block_listing_order(self):
        assert Partition(3, [[0], [1, 2]]) == Partition(3, [[2, 1], [0]])

    @pytest.mark.parametrize("blocks", [
        [[0, 1]],              # misses 2
        [[0], [1], [1, 2]],    # overlap
        [[0], [], [1, 2]],     # empty block
        [[0], [1], [2], [3]],  # out of range
    ])
    def test_rejects_non_partitions(self, blocks):
        with pytest.raises(ValidationError):
            Partition(3, blocks)

    def test_from_block_of(self):
        p = Partition.from_block_of([1, 0, 1])
        assert p.blocks == ((0, 2), (1,))

    def test_refines(self):
        fine = Partition(4, [[0], [1], [2], [3]])
        mid = Partition(4, [[0, 1], [2], [3]])
        coarse = Partition(4, [[0, 1], [2, 3]])
        assert fine.refines(mid) and mid.refines(coarse) and fine.refines(coarse)
        assert not coarse.refines(mid)
        assert mid.refines(mid)

    def test_refines_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            Partition(2, [[0], [1]]).refines(Partition(3, [[0], [1], [2]]))


EXPECTED_FIG2 = [["u0"], ["u1", "u2"], ["u3", "u4"], ["u5", "u6"]]


class TestForwardStable:
    def test_fig2_partition_is_stable(self, fig2):
        p = Partition(7, [[0], [1, 2], [3, 4], [5, 6]])
        ok, violation = is_forward_stable(fig2, p)
        assert ok and violation is None

    def test_single_block_is_not_stable(self, fig2):
        ok, violation = is_forward_stable(fig2, Partition(7, [range(7)]))
        assert not ok
        # the witness must be genuine: covered in the image, uncovered not
        image = fig2.delta_set(range(7), violation.label)
        assert violation.covered in image
        assert violation.uncovered not in image
        assert "split" in violation.describe(fig2)

    def test_size_mismatch(self, fig2):
        with pytest.raises(SizeMismatch):
            is_forward_stable(fig2, Partition(3, [[0], [1], [2]]))

    def test_discrete_partition_always_stable(self, fig2, wheeler3, sep6):
        for nfa in (fig2, wheeler3, sep6):
            p = Partition(nfa.n_states, [[u] for u in range(nfa.n_states)])
            ok, _ = is_forward_stable(nfa, p)
            assert ok


class TestCoarsest:
    def test_fig2(self, fig2):
        p = coarsest_fs_partition(fig2)
        assert p.blocks_by_name(fig2.names) == EXPECTED_FIG2

    def test_wheeler3(self, wheeler3):
        p = coarsest_fs_partition(wheeler3)
        assert p.blocks_by_name(wheeler3.names) == [["u1"], ["u2", "u3"]]

    def test_separation_family_collapses_sinks(self):
        for n in (5, 6, 9):
            nfa = gen_separation_family(n)
            p = coarsest_fs_partition(nfa)
            assert p.n_blocks == 5
            assert p.blocks_by_name(nfa.names)[-1] == [f"u{i}" for i in range(5, n + 1)]

    def test_single_state(self):
        nfa = Nfa(1, 0, [])
        assert coarsest_fs_partition(nfa).blocks == ((0,),)

    @given(seed=st.integers(0, 400))
    @settings(max_examples=80, deadline=None)
    def test_result_is_forward_stable(self, seed):
        nfa = gen_random(6, 2, 0.35, seed)
        ok, _ = is_forward_stable(nfa, coarsest_fs_partition(nfa))
        assert ok

    @given(seed=st.integers(0, 400))
    @settings(max_examples=80, deadline=None)
    def test_blocks_share_incoming_labels(self, seed):
        # members of one forward-stable block always see the same labels
        nfa = gen_random(6, 3, 0.3, seed)
        for block in coarsest_fs_partition(nfa).blocks:
            lams = {nfa.lambda_set(u) for u in block}
            assert len(lams) == 1


class TestQuotient:
    def test_fig2_quotient_edges(self, fig2):
        qm = build_quotient(fig2, coarsest_fs_partition(fig2))
        q = qm.quotient
        assert q.n_states == 4
        assert q.names == ("u0", "u1+u2", "u3+u4", "u5+u6")
        assert q.names[q.initial] == "u0"
        edges = {(q.names[u], a, q.names[v]) for (u, a, v) in q.transitions}
        assert edges == {
            ("u0", "a", "u1+u2"), ("u0", "a", "u3+u4"),
            ("u1+u2", "a", "u1+u2"), ("u1+u2", "b", "u5+u6"),
            ("u3+u4", "b", "u5+u6"), ("u5+u6", "b", "u5+u6"),
        }

    def test_invalid_for_partition_merging_into_initial(self, fig2):
        p = Partition(7, [[0, 1], [2], [3], [4], [5], [6]])
        with pytest.raises(QuotientInvalid):
            build_quotient(fig2, p)

    def test_size_mismatch(self, fig2):
        with pytest.raises(SizeMismatch):
            build_quotient(fig2, Partition(2, [[0], [1]]))

    @given(seed=st.integers(0, 300))
    @settings(max_examples=60, deadline=None)
    def test_quotient_of_coarsest_is_always_valid(self, seed):
        nfa = gen_random(6, 2, 0.4, seed)
        qm = build_quotient(nfa, coarsest_fs_partition(nfa))
        assert qm.quotient.n_states == qm.partition.n_blocks
        # every source edge projects to a quotient edge
        beta = qm.partition.block_of
        qedges = set(qm.quotient.transitions)
        for (u, a, v) in nfa.transitions:
            assert (beta[u], a, beta[v]) in qedges
