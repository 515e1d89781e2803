"""Properties checked on seeded random bound quiver algebras."""

import itertools

from qhalg.explorer import enumerate_qh, verify_connectedness
from qhalg.qh import SigmaOrder, has_nabla_filtration, is_quasi_hereditary


def test_random_algebras_are_associative(random_algebras):
    assert all(a.check_associative() and a.check_idempotents() for a in random_algebras)


def test_delta_and_nabla_sides_agree(random_algebras):
    # A_A is Δ-filtered exactly when D(_A A) is ∇-filtered
    bad = []
    for alg in random_algebras:
        for p in itertools.permutations(range(1, alg.n + 1)):
            s = SigmaOrder(p)
            if is_quasi_hereditary(alg, s).verdict != has_nabla_filtration(alg, s):
                bad.append((alg.name, p))
    assert bad == []


def test_bfs_finds_every_qh_order(random_qh):
    for alg, qh in random_qh:
        assert qh, alg.name  # some order is always quasi-hereditary for directed algebras
        assert enumerate_qh(alg, "bfs") == qh, alg.name


def test_connectedness_on_random_algebras(random_qh):
    fallbacks = 0
    for alg, qh in random_qh:
        rep = verify_connectedness(alg, threads=1)
        assert rep.ok, (alg.name, rep.failures)
        assert rep.qh_count == len(qh)
        fallbacks += rep.bfs_fallbacks
    assert fallbacks == 0
