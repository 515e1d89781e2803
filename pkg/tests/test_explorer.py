import pytest
from hypothesis import given, strategies as st

from paper_table import QH_WORDS
from qhalg.bqa import path_algebra
from qhalg.explorer import (
    EnumerationError,
    apply_word,
    connect,
    corollary_decomposition,
    enumerate_qh,
    random_bound_quiver_algebra,
    twist_graph,
)
from qhalg.qh import SigmaOrder
from qhalg.twist import NotQuasiHereditaryError

pairs = st.integers(1, 7).flatmap(
    lambda n: st.tuples(st.permutations(range(1, n + 1)), st.permutations(range(1, n + 1)))
)


def test_enumerate_matches_word_list(paper):
    found = enumerate_qh(paper)
    assert {s.perm for s in found} == {SigmaOrder.from_word(w, 4).perm for w in QH_WORDS}
    assert [s.perm for s in found] == sorted(s.perm for s in found)


def test_brute_force_and_bfs_agree(paper):
    assert enumerate_qh(paper, "brute") == enumerate_qh(paper, "bfs")


def test_process_pool_gives_same_result(paper):
    assert enumerate_qh(paper, threads=2) == enumerate_qh(paper, threads=1)


def test_unknown_strategy(paper):
    with pytest.raises(ValueError):
        enumerate_qh(paper, "dfs")


def test_brute_force_size_limit():
    with pytest.raises(EnumerationError, match="too large"):
        enumerate_qh(path_algebra(9), "brute")


def test_twist_graph_of_example(paper):
    g = twist_graph(paper)
    assert len(g.vertices) == 16
    assert len(g.edges) == 21
    assert g.is_connected()
    e = SigmaOrder.identity(4)
    assert sorted(p for p, _ in g.neighbors(e)) == [1, 2]
    dot = g.to_dot()
    assert dot.startswith("graph twist_graph {")
    assert '"1,2,3,4" -- "2,1,3,4" [label="1"];' in dot


def test_shortest_word(paper):
    g = twist_graph(paper)
    e = SigmaOrder.identity(4)
    tau = SigmaOrder((3, 2, 1, 4))
    w = g.shortest_word(e, tau)
    assert len(w) == 3 and apply_word(e, w) == tau


def test_corollary_example():
    assert corollary_decomposition(SigmaOrder.identity(4), SigmaOrder((3, 2, 1, 4))) == (1, 2, 1)
    assert corollary_decomposition(SigmaOrder((2, 1)), SigmaOrder((2, 1))) == ()


@given(pairs)
def test_corollary_word_reaches_target_minimally(pair):
    s, t = SigmaOrder(tuple(pair[0])), SigmaOrder(tuple(pair[1]))
    w = corollary_decomposition(s, t)
    assert apply_word(s, w) == t
    assert len(w) == s.inversion_distance(t)
    assert all(1 <= p < s.n for p in w)


def test_connect_certified(paper):
    e = SigmaOrder.identity(4)
    tau = SigmaOrder.from_word((1, 2, 3, 1, 2, 1), 4)
    path = connect(paper, e, tau)
    assert path.certified
    assert path.method == "corollary"
    assert path.intermediates[0] == e and path.intermediates[-1] == tau
    assert path.product_word == tuple(reversed(path.word))


def test_connect_trivial(paper):
    e = SigmaOrder.identity(4)
    path = connect(paper, e, e)
    assert path.word == () and path.method == "trivial" and path.certified


def test_connect_rejects_non_qh_endpoint(paper):
    with pytest.raises(NotQuasiHereditaryError):
        connect(paper, SigmaOrder.identity(4), SigmaOrder.from_word((3,), 4))


def test_random_algebras_are_reproducible():
    a, b = random_bound_quiver_algebra(7), random_bound_quiver_algebra(7)
    assert a.summary() == b.summary()
    assert a.check_associative()
