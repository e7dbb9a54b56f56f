import random

import pytest
from hypothesis import given, settings, strategies as st

from sysstruct import (DimensionMismatch, DynamicalStructureFunction, Properness, QMatrix,
                       SingularLoop, StateRealization, check_relation,
                       comp_structure, corpus, dsf, dsf_transfer, minimize_intricacy,
                       signal_structure_graph, split_q, subsystem_structure, to_lft,
                       Vertex, output_normal_form, transfer_function)
from sysstruct.dsf import assignment_from_lft
from sysstruct.generate import random_realization

from reference import P1, P2, Q1, Q2, QINT1, RING_P, RING_Q, rmat, ring_g


def lft_of(name):
    return to_lft(subsystem_structure(comp_structure(corpus.load(name))))


class TestWorkedExamples:
    def test_ring(self):
        d = dsf(corpus.load("ring"))
        assert d.Q == rmat(RING_Q) and d.P == rmat(RING_P)
        assert dsf_transfer(d) == ring_g()

    def test_two_structures(self):
        for name in ("c1", "c2"):
            d = dsf(corpus.load(name))
            assert d.Q == rmat(Q1) and d.P == rmat(P1)
            assert d.p1 == d.p == 4 and d.D1.is_zero()
            assert sum(not d.Q[i, j].is_zero() for i in range(4) for j in range(4)) == 12

    def test_diagonal_has_no_internal_links(self):
        d = dsf(corpus.load("diagonal"))
        assert d.Q.is_zero()
        assert d.P == transfer_function(corpus.load("diagonal"))
        assert signal_structure_graph(d).edge_set() == {("u1", "y1"), ("u2", "y2")}

    def test_zero_q_with_feedthrough(self):
        P = rmat([["1/(s+1)"], ["0"]])
        d = DynamicalStructureFunction(rmat([["0", "0"], ["0", "0"]]), P, QMatrix.zeros(0, 2),
                                       QMatrix([[2], [3]]), QMatrix.zeros(0, 1))
        assert dsf_transfer(d) == rmat([["(2s+3)/(s+1)"], ["3"]])

    def test_hand_written_dsf_reproduces_g(self):
        d = DynamicalStructureFunction.from_qp(rmat(Q2), rmat(P2))
        assert dsf_transfer(d) == transfer_function(corpus.load("c2"))


class TestSplit:
    def test_intra_part_for_two_blocks(self):
        d = dsf(corpus.load("c1"))
        assignment = assignment_from_lft(lft_of("c2"))
        assert assignment == [0, 0, 1, 1]
        Qint, Qext = split_q(d, assignment)
        assert Qint == rmat(QINT1)
        assert Qint + Qext == rmat(Q1)

    def test_extremes(self):
        d = dsf(corpus.load("c1"))
        Qint, Qext = split_q(d, [0] * 4)
        assert Qext.is_zero() and Qint == d.Q
        Qint, Qext = split_q(d, range(4))
        assert Qint.is_zero() and Qext == d.Q

    def test_wrong_length(self):
        with pytest.raises(DimensionMismatch):
            split_q(dsf(corpus.load("c1")), [0, 1])


class TestRelation:
    def test_three_blocks(self):
        check = check_relation(lft_of("c1"), dsf(corpus.load("c1")))
        assert check.holds and check.residual.is_zero()

    def test_two_blocks(self):
        lft = lft_of("c2")
        assert check_relation(lft, dsf(corpus.load("c2")))
        hand = DynamicalStructureFunction.from_qp(rmat(Q2), rmat(P2))
        assert check_relation(lft, hand, assignment=range(4))
        # the hand-written Q has no links inside either block, so Qint vanishes anyway
        assert check_relation(lft, hand)

    def test_single_block_systems(self):
        for name in ("ring", "diagonal", "l0"):
            lft, d = lft_of(name), dsf(corpus.load(name))
            assert len(lft.blocks) == 1
            assert check_relation(lft, d, [0] * d.p)

    def test_one_output_per_block(self):
        # with every output its own subsystem Qint vanishes and S[L K] = [Pbar Qbar]
        for name in ("l8", "l2"):
            lft, d = lft_of(name), dsf(corpus.load(name))
            assert lft.L.hstack(lft.K).rank() == lft.L.cols + lft.K.cols
            check = check_relation(lft, d)
            assert check.holds
            assert check.rhs == d.pbar_original().hstack(d.qbar_original())

    def test_corrupted_block_fails(self):
        lft = lft_of("c1")
        Ss = list(lft.Sblocks)
        Ss[1] = Ss[1] + rmat([["1/(s+1)", "0", "0", "0"]])
        check = check_relation(lft.with_blocks(Ss), dsf(corpus.load("c1")))
        assert not check.holds
        assert not check.residual.is_zero()

    def test_outputs_must_be_signals(self):
        with pytest.raises(DimensionMismatch):
            check_relation(lft_of("ring"), dsf(corpus.load("diagonal")))


class TestProperties:
    def test_rank_deficient_outputs_with_feedthrough(self):
        # y2 = 2 y1 + u ; only y1 is independent, D1 != 0
        r = StateRealization.build([[-1, 1], [0, -2]], [[0], [1]], [[1, 0], [2, 0], [0, 1]],
                                   [[1], [3], [0]])
        d = dsf(r)
        assert (d.p1, d.p) == (2, 3)
        assert not d.D1.is_zero()
        assert dsf_transfer(d) == transfer_function(r)

    def test_permutation_covariance(self):
        r = minimize_intricacy(corpus.load("c1"))
        perm = [2, 0, 3, 1]
        swapped = StateRealization.build(r.A, r.B, r.C.take(rows=perm), r.D.take(rows=perm))
        a, b = dsf(r), dsf(swapped)
        assert b.qbar_original() == a.qbar_original().permute(perm, perm)
        assert b.pbar_original() == a.pbar_original().permute(perm, None)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10**6))
    def test_reordering_only_relabels(self, seed):
        rng = random.Random(seed)
        r = minimize_intricacy(random_realization(rng))
        sp_, op = list(range(r.n)), list(range(r.p))
        rng.shuffle(sp_)
        rng.shuffle(op)
        moved = StateRealization.build(r.A.take(sp_, sp_), r.B.take(rows=sp_),
                                       r.C.take(op, sp_), r.D.take(rows=op))
        new = {"f": {old: i for i, old in enumerate(sp_)}, "h": {old: i for i, old in enumerate(op)}}

        def relabel(v):
            return Vertex(v.kind, new[v.kind][v.index]) if v.kind in new else v

        assert comp_structure(moved).edges == {(relabel(a), relabel(b))
                                               for a, b in comp_structure(r).edges}
        assert transfer_function(moved) == transfer_function(r).permute(op, None)
        assert dsf_transfer(dsf(moved)) == transfer_function(moved)

    def test_dsf_depends_on_hidden_coordinates(self):
        # z2 -> z2 + z1 keeps y and G but moves (Q, P); a change inside z2 alone does not
        r = output_normal_form(minimize_intricacy(corpus.load("ring"))).realization
        n = r.n
        assert r.C.take(None, range(3)) == QMatrix.identity(3) and r.C.take(None, range(3, n)).is_zero()

        def conj(i, j, c):
            T = [[int(a == b) for b in range(n)] for a in range(n)]
            T[i][j] = c
            T = QMatrix(T)
            Ti = T.inverse()
            return StateRealization.build(T @ r.A @ Ti, T @ r.B, r.C @ Ti, r.D)

        base = dsf(r)
        sheared, inner = dsf(conj(3, 0, 1)), dsf(conj(4, 3, 2))
        assert dsf_transfer(sheared) == dsf_transfer(base)
        assert (sheared.Q, sheared.P) != (base.Q, base.P)
        assert (inner.Q, inner.P) == (base.Q, base.P)

    def test_singular_loop(self):
        d = DynamicalStructureFunction.from_qp(rmat([["0", "1"], ["1", "0"]]), rmat([["1"], ["0"]]))
        with pytest.raises(SingularLoop):
            dsf_transfer(d)

    def test_shape_validation(self):
        with pytest.raises(DimensionMismatch):
            DynamicalStructureFunction(rmat([["0"]]), rmat([["1"], ["1"]]), QMatrix.zeros(0, 1),
                                       QMatrix.zeros(1, 1), QMatrix.zeros(0, 1))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10**6))
    def test_random_route_agreement(self, seed):
        g = random_realization(random.Random(seed))
        d = dsf(g)
        assert dsf_transfer(d) == transfer_function(g)
        for i in range(d.p1):
            assert d.Q[i, i].is_zero()
            for j in range(d.p1):
                assert d.Q[i, j].properness is Properness.STRICTLY_PROPER


class TestSignalGraph:
    def test_ring_cycle(self):
        G = signal_structure_graph(dsf(corpus.load("ring")))
        assert G.edge_set() == {("u1", "y1"), ("u2", "y2"), ("u3", "y3"),
                                ("y3", "y1"), ("y1", "y2"), ("y2", "y3")}

    def test_static_edges(self):
        r = StateRealization.build([[-1]], [[1]], [[1], [2]])
        G = signal_structure_graph(dsf(r))
        assert ("y1", "y2") in G.edge_set()

    def test_dot(self):
        text = dsf(corpus.load("ring")).to_dot()
        assert text == dsf(corpus.load("ring")).to_dot()
        assert text.startswith("digraph") and '"y3" -> "y1"' in text
