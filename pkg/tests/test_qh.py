import pytest
from hypothesis import given, strategies as st

from qhalg.qh import (
    PermutationError,
    SigmaOrder,
    costandard_module,
    delta_filtration_multiplicities_k0,
    has_delta_filtration,
    has_nabla_filtration,
    heredity_chain_check,
    inherited_structures,
    is_quasi_hereditary,
    standard_module,
    trace_chain,
)
from qhalg.rep import projective

E = SigmaOrder.identity(4)

perms = st.integers(1, 7).flatmap(lambda n: st.permutations(range(1, n + 1)))


def test_parse_and_word():
    assert SigmaOrder.parse("2,1,3") == SigmaOrder((2, 1, 3))
    assert SigmaOrder.from_word((3, 2, 1), 4).perm == (4, 1, 2, 3)
    # rightmost factor acts first
    assert SigmaOrder.from_word((1, 2), 3) == SigmaOrder.identity(3).twist(2).twist(1)


@pytest.mark.parametrize("bad", ["1,1,2", "0,1", "1,3", "a,b", ""])
def test_parse_rejects_non_permutations(bad):
    with pytest.raises(PermutationError):
        SigmaOrder.parse(bad)


@given(perms)
def test_order_and_inverse_agree(perm):
    s = SigmaOrder(tuple(perm))
    for pos in range(1, s.n + 1):
        assert s(s.at(pos)) == pos
    assert s.compose(s.inv()) == SigmaOrder.identity(s.n)


@given(perms, st.data())
def test_twist_swaps_neighbors(perm, data):
    s = SigmaOrder(tuple(perm))
    if s.n < 2:
        return
    p = data.draw(st.integers(1, s.n - 1))
    t = s.twist(p)
    assert t.at(p) == s.at(p + 1) and t.at(p + 1) == s.at(p)
    assert t.twist(p) == s
    assert s.inversion_distance(t) == 1


def test_standard_modules_at_identity(paper):
    assert [standard_module(paper, E, i).dims for i in range(1, 5)] == [
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 0, 1, 0),
        (0, 0, 0, 1),
    ]


def test_standard_modules_for_reversed_order_are_projective(paper):
    rev = SigmaOrder((4, 3, 2, 1))
    for i in range(1, 5):
        assert standard_module(paper, rev, i).dims == projective(paper, i).dims


def test_costandard_modules_at_identity(paper):
    assert [costandard_module(paper, E, i).dims for i in range(1, 5)] == [
        (1, 0, 0, 0),
        (1, 1, 0, 0),
        (2, 1, 1, 0),
        (1, 1, 1, 1),
    ]


def test_trace_chain_layers(paper):
    assert [(k, m.dims) for k, m in trace_chain(paper, E, 3)] == [(3, (0, 0, 1, 0)), (4, (0, 0, 0, 1))]


def test_delta_filtration_at_identity(paper):
    res = has_delta_filtration(paper, E)
    assert res.ok
    assert res.multiplicities[1] == (1, 1, 2, 1)
    assert has_nabla_filtration(paper, E)


def test_grothendieck_coordinates_can_be_negative(paper):
    s3 = SigmaOrder.from_word((3,), 4)
    coords = delta_filtration_multiplicities_k0(projective(paper, 1), s3)
    assert min(coords) < 0
    assert not is_quasi_hereditary(paper, s3)


def test_failure_reports_condition(paper):
    rep = is_quasi_hereditary(paper, SigmaOrder.from_word((3,), 4))
    assert rep.failure["condition"] in ("a", "b")
    assert rep.to_dict()["verdict"] is False


def test_heredity_chain_matches_at_identity(paper):
    assert heredity_chain_check(paper, E)
    assert not heredity_chain_check(paper, SigmaOrder.from_word((3,), 4))


def test_inherited_structures_at_bottom(paper):
    (c, cs), (q, qs) = inherited_structures(paper, E, 1)
    assert c.dim == 11 and cs == E
    assert q is None and qs is None


def test_inherited_structures_in_the_middle(paper):
    (c, cs), (q, qs) = inherited_structures(paper, E, 3)
    assert c.dim == 3 and cs == SigmaOrder.identity(2)
    assert q.dim == 3 and qs == SigmaOrder.identity(2)


def test_size_mismatch(paper):
    with pytest.raises(PermutationError):
        is_quasi_hereditary(paper, SigmaOrder.identity(3))
