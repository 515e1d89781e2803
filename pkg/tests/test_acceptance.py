"""Acceptance suite: one test per criterion, numbered 1 to 10."""

import itertools
import time

import pytest

from paper_table import NON_QH_WORDS, QH_WORDS, TABLE, TABLE_OMITS_SOLID, computed_row, mismatched_rows
from qhalg import GF, QQ, paper_example, path_algebra
from qhalg.explorer import apply_word, connect, corollary_decomposition, enumerate_qh, twist_graph, verify_connectedness
from qhalg.qh import (
    SigmaOrder,
    costandard_module,
    delta_filtration_multiplicities_k0,
    heredity_chain_check,
    inherited_structures,
    is_quasi_hereditary,
    standard_module,
)
from qhalg.rep import ext1_dim, hom_dim, projective
from qhalg.twist import neighbor_invariants, twistable


def perms_of(n):
    return [SigmaOrder(p) for p in itertools.permutations(range(1, n + 1))]


def qh_fixtures(paper, random_qh):
    yield paper, enumerate_qh(paper)
    yield from random_qh


def test_criterion_01_census():
    alg = paper_example()
    start = time.perf_counter()
    found = enumerate_qh(alg, "brute", threads=1)
    elapsed = time.perf_counter() - start
    got = {s.perm for s in found}
    assert got == {SigmaOrder.from_word(w, 4).perm for w in QH_WORDS}
    assert not got & {SigmaOrder.from_word(w, 4).perm for w in NON_QH_WORDS}
    assert len(got) == 16
    assert elapsed < 10, f"census took {elapsed:.1f} s"


@pytest.mark.xfail(
    strict=True,
    reason="two not-quasi-hereditary rows of the printed table omit a solid arrow Δ(1) -> Δ(3); "
    "Ext^1 = 1 is confirmed by an explicit non-split extension (see test_paper_table.py)",
)
def test_criterion_02_biquiver_table(paper):
    assert mismatched_rows(paper) == []


def test_criterion_03_twistable_equivalence(paper, random_qh):
    assert len(random_qh) >= 100
    assert max(alg.n for alg, _ in random_qh) <= 5
    discrepancies = []
    checked = 0
    for alg, qh in qh_fixtures(paper, random_qh):
        for sigma in qh:
            for p in range(1, alg.n):
                checked += 1
                if twistable(alg, sigma, p).verdict != is_quasi_hereditary(alg, sigma.twist(p)).verdict:
                    discrepancies.append((alg.name, sigma.perm, p))
    assert checked > 0
    assert discrepancies == []


def test_criterion_04_neighbor_formulas(paper, random_qh):
    bad = []
    for alg, qh in qh_fixtures(paper, random_qh):
        for sigma in qh:
            inv = neighbor_invariants(alg, sigma)
            if not (inv.duality_holds and inv.formulas_hold):
                bad.append((alg.name, sigma.perm))
    assert bad == []


def test_criterion_05_vanishing_and_grothendieck(paper, random_qh):
    bad = []
    for alg, qh in qh_fixtures(paper, random_qh):
        n = alg.n
        for sigma in qh:
            for i, j in itertools.product(range(1, n + 1), repeat=2):
                di, dj = standard_module(alg, sigma, i), standard_module(alg, sigma, j)
                ni, nj = costandard_module(alg, sigma, i), costandard_module(alg, sigma, j)
                if sigma(i) > sigma(j) and (hom_dim(di, dj) or hom_dim(nj, ni)):
                    bad.append((alg.name, sigma.perm, "hom", i, j))
                if sigma(i) >= sigma(j) and (ext1_dim(di, dj) or ext1_dim(nj, ni)):
                    bad.append((alg.name, sigma.perm, "ext", i, j))
            mults = is_quasi_hereditary(alg, sigma).multiplicities
            for i in range(1, n + 1):
                if delta_filtration_multiplicities_k0(projective(alg, i), sigma) != mults[i]:
                    bad.append((alg.name, sigma.perm, "k0", i))
    assert bad == []


def test_criterion_06_heredity_chain(paper, random_algebras):
    bad = []
    for alg in [paper] + list(random_algebras):
        for sigma in perms_of(alg.n):
            if heredity_chain_check(alg, sigma) != is_quasi_hereditary(alg, sigma).verdict:
                bad.append((alg.name, sigma.perm))
    assert bad == []


def test_criterion_07_inheritance(paper):
    bad = []
    for sigma in enumerate_qh(paper):
        for i in range(1, paper.n + 1):
            (c, cs), (q, qs) = inherited_structures(paper, sigma, i)
            if not is_quasi_hereditary(c, cs).verdict:
                bad.append((sigma.perm, i, "corner"))
            if q is not None and not is_quasi_hereditary(q, qs).verdict:
                bad.append((sigma.perm, i, "quotient"))
    assert bad == []


def test_criterion_08_connectedness():
    alg = paper_example()
    start = time.perf_counter()
    report = verify_connectedness(alg, threads=1)
    graph = twist_graph(alg)
    bad = []
    for s, t in itertools.permutations(graph.vertices, 2):
        w = corollary_decomposition(s, t)
        # the product σ_{i_l} ⋯ σ_{i_1} equals τσ^{-1}
        product = SigmaOrder.from_word(tuple(reversed(w)), alg.n)
        if product != t.compose(s.inv()) or len(w) != s.inversion_distance(t):
            bad.append((s.perm, t.perm, "word"))
        path = connect(alg, s, t, graph)
        if not path.certified or apply_word(s, path.word) != t:
            bad.append((s.perm, t.perm, "path"))
        if not all(is_quasi_hereditary(alg, r).verdict for r in path.intermediates):
            bad.append((s.perm, t.perm, "step"))
    elapsed = time.perf_counter() - start
    print(f"BFS fallbacks: {report.bfs_fallbacks}")
    assert report.pairs == 240 and report.ok
    assert report.corollary + report.bfs_fallbacks == 240
    assert report.bfs_fallbacks == 0, report.fallback_pairs
    assert report.minimal_lengths
    assert bad == []
    assert elapsed < 60, f"took {elapsed:.1f} s"


def test_criterion_09_linear_path_algebras():
    for n in (2, 3, 4):
        alg = path_algebra(n, [(f"a{k}", k, k + 1) for k in range(1, n)])
        assert all(is_quasi_hereditary(alg, s).verdict for s in perms_of(n)), n


def test_criterion_10_field_agreement():
    over_q, over_p = paper_example(QQ), paper_example(GF(32003))
    assert enumerate_qh(over_q) == enumerate_qh(over_p)
    for word, _, _ in TABLE:
        assert computed_row(over_q, word) == computed_row(over_p, word), word
    assert sorted(mismatched_rows(over_p)) == sorted(TABLE_OMITS_SOLID)
