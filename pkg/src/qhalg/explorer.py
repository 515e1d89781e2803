"""Enumeration of quasi-hereditary orders, the twist graph and connecting paths.

Words of positions act on one-line permutations from the left: applying
``p`` to ρ gives ``σ_p ρ``, which swaps the elements at order positions
``p`` and ``p+1``.  Words are stored in application order (first step
first); :attr:`ConnectPath.product_word` gives the same word written as a
product ``σ_{i_l} ⋯ σ_{i_1}``.
"""

from __future__ import annotations

import itertools
import os
import random
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .bqa import Algebra, Arrow, Quiver, Relation, build_algebra
from .exactla import QQ, Field
from .qh import QhReport, SigmaOrder, _check_sigma, is_quasi_hereditary
from .twist import NotQuasiHereditaryError, twistable

__all__ = [
    "BRUTE_FORCE_LIMIT",
    "EnumerationError",
    "DecompositionStalled",
    "TwistGraph",
    "ConnectPath",
    "ConnectednessReport",
    "enumerate_qh",
    "twist_graph",
    "corollary_decomposition",
    "apply_word",
    "connect",
    "verify_connectedness",
    "random_bound_quiver_algebra",
    "thread_count",
]

BRUTE_FORCE_LIMIT = 8


class EnumerationError(ValueError):
    pass


class DecompositionStalled(RuntimeError):
    def __init__(self, rho: SigmaOrder, tau: SigmaOrder):
        super().__init__(f"procedure stalled before reaching τ (at ρ = {rho}, τ = {tau})")
        self.rho = rho
        self.tau = tau


# -- parallel helpers ------------------------------------------------------------

_worker_alg: Algebra | None = None


def thread_count(threads: int | None = None) -> int:
    """Worker count: the explicit argument, else ``QH_THREADS``, else 1."""
    if threads is None:
        raw = os.environ.get("QH_THREADS", "").strip()
        threads = int(raw) if raw else 1
    return max(1, int(threads))


def _init_worker(alg: Algebra):
    global _worker_alg
    _worker_alg = alg


def _qh_verdict(perm: tuple[int, ...]) -> bool:
    return is_quasi_hereditary(_worker_alg, SigmaOrder(perm)).verdict


def _map_qh(alg: Algebra, perms: Sequence[tuple[int, ...]], threads: int) -> list[bool]:
    if threads <= 1 or len(perms) < 2 * threads:
        return [is_quasi_hereditary(alg, SigmaOrder(p)).verdict for p in perms]
    with ProcessPoolExecutor(max_workers=threads, initializer=_init_worker, initargs=(alg,)) as pool:
        chunk = max(1, len(perms) // (4 * threads))
        return list(pool.map(_qh_verdict, perms, chunksize=chunk))


# -- enumeration -------------------------------------------------------------------


def _first_qh(alg: Algebra) -> SigmaOrder | None:
    for perm in itertools.permutations(range(1, alg.n + 1)):
        s = SigmaOrder(perm)
        if is_quasi_hereditary(alg, s).verdict:
            return s
    return None


def _explore(alg: Algebra, seed: SigmaOrder) -> list[SigmaOrder]:
    seen = {seed}
    queue = deque([seed])
    while queue:
        s = queue.popleft()
        for p in range(1, alg.n):
            t = s.twist(p)
            if t not in seen and twistable(alg, s, p).verdict:
                seen.add(t)
                queue.append(t)
    return sorted(seen, key=lambda s: s.perm)


def enumerate_qh(alg: Algebra, strategy: str = "brute", threads: int | None = None) -> list[SigmaOrder]:
    """All orders giving quasi-hereditary structures, sorted lexicographically.

    ``brute`` tests every permutation (``n <= 8``); ``bfs`` starts from the
    lexicographically first quasi-hereditary order and follows twistable
    positions.
    """
    n = alg.n
    if strategy == "brute":
        if n > BRUTE_FORCE_LIMIT:
            raise EnumerationError(f"n too large for brute force ({n} > {BRUTE_FORCE_LIMIT})")
        perms = list(itertools.permutations(range(1, n + 1)))
        verdicts = _map_qh(alg, perms, thread_count(threads))
        return [SigmaOrder(p) for p, ok in zip(perms, verdicts) if ok]
    if strategy == "bfs":
        seed = _first_qh(alg)
        return [] if seed is None else _explore(alg, seed)
    raise EnumerationError(f"unknown strategy {strategy!r} (expected 'brute' or 'bfs')")


# -- twist graph -----------------------------------------------------------------------


@dataclass
class TwistGraph:
    """Quasi-hereditary orders joined by single twists; ``edges`` holds ``(σ, σ_p σ, p)`` with σ first lexicographically."""

    n: int
    vertices: list[SigmaOrder]
    edges: list[tuple[SigmaOrder, SigmaOrder, int]]

    def __post_init__(self):
        self._adj: dict[SigmaOrder, list[tuple[int, SigmaOrder]]] = {v: [] for v in self.vertices}
        for s, t, p in self.edges:
            self._adj[s].append((p, t))
            self._adj[t].append((p, s))
        for v in self._adj:
            self._adj[v].sort(key=lambda e: (e[0], e[1].perm))

    def __contains__(self, sigma: SigmaOrder) -> bool:
        return sigma in self._adj

    def neighbors(self, sigma: SigmaOrder) -> list[tuple[int, SigmaOrder]]:
        return list(self._adj[sigma])

    def components(self) -> list[list[SigmaOrder]]:
        seen: set[SigmaOrder] = set()
        out = []
        for v in self.vertices:
            if v in seen:
                continue
            comp, queue = [], deque([v])
            seen.add(v)
            while queue:
                u = queue.popleft()
                comp.append(u)
                for _, w in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            out.append(sorted(comp, key=lambda s: s.perm))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def shortest_word(self, sigma: SigmaOrder, tau: SigmaOrder) -> tuple[int, ...] | None:
        """Positions of a shortest path from σ to τ, or ``None`` if they are disconnected."""
        if sigma not in self._adj or tau not in self._adj:
            return None
        back: dict[SigmaOrder, tuple[SigmaOrder, int] | None] = {sigma: None}
        queue = deque([sigma])
        while queue:
            u = queue.popleft()
            if u == tau:
                break
            for p, w in self._adj[u]:
                if w not in back:
                    back[w] = (u, p)
                    queue.append(w)
        if tau not in back:
            return None
        word = []
        node = tau
        while back[node] is not None:
            prev, p = back[node]
            word.append(p)
            node = prev
        return tuple(reversed(word))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "vertices": [list(v.perm) for v in self.vertices],
            "edges": [[list(s.perm), list(t.perm), p] for s, t, p in self.edges],
            "connected": self.is_connected(),
        }

    def to_dot(self, name: str = "twist_graph") -> str:
        def node(s):
            return '"' + ",".join(map(str, s.perm)) + '"'

        lines = [f"graph {name} {{"]
        for v in self.vertices:
            lines.append(f"  {node(v)};")
        for s, t, p in self.edges:
            lines.append(f'  {node(s)} -- {node(t)} [label="{p}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def twist_graph(alg: Algebra, strategy: str = "brute", threads: int | None = None) -> TwistGraph:
    verts = enumerate_qh(alg, strategy, threads)
    vset = set(verts)
    edges = []
    for s in verts:
        for p in range(1, alg.n):
            t = s.twist(p)
            if t in vset and s.perm < t.perm:
                edges.append((s, t, p))
    edges.sort(key=lambda e: (e[0].perm, e[1].perm, e[2]))
    return TwistGraph(alg.n, verts, edges)


# -- connecting paths -------------------------------------------------------------------


def apply_word(sigma: SigmaOrder, word: Iterable[int]) -> SigmaOrder:
    """Apply positions in order: ``σ_{p_l} ⋯ σ_{p_1} σ``."""
    for p in word:
        sigma = sigma.twist(p)
    return sigma


def corollary_decomposition(sigma: SigmaOrder, tau: SigmaOrder) -> tuple[int, ...]:
    """Position word taking σ to τ, chosen greedily from the σ-bottom.

    At each step, scan the current order ρ from the bottom and take the first
    element ``i`` below the top whose ρ-successor ``j`` satisfies
    ``τ(i) > τ(j)``; emit ``p = ρ(i)`` and swap ``i`` and ``j``.  Only the two
    permutations matter.  The word has length equal to the number of pairs
    ordered differently by σ and τ.
    """
    if sigma.n != tau.n:
        raise ValueError("permutations of different sizes")
    n = sigma.n
    perm, inv = list(sigma.perm), list(sigma.inverse)
    target = tau.perm
    word: list[int] = []
    limit = n * (n - 1) // 2
    while True:
        pick = None
        # inv[k] is the element at position k + 1, so the successor of inv[k] is inv[k + 1]
        for k in range(n - 1):
            if target[inv[k] - 1] > target[inv[k + 1] - 1]:
                pick = k + 1
                break
        if pick is None:
            break
        word.append(pick)
        x, y = inv[pick - 1], inv[pick]
        perm[x - 1], perm[y - 1] = pick + 1, pick
        inv[pick - 1], inv[pick] = y, x
        if len(word) > limit:
            raise DecompositionStalled(SigmaOrder(tuple(perm)), tau)
    if tuple(perm) != target:
        raise DecompositionStalled(SigmaOrder(tuple(perm)), tau)
    return tuple(word)


@dataclass
class ConnectPath:
    start: SigmaOrder
    end: SigmaOrder
    word: tuple[int, ...]
    #: every order along the path, from ``start`` to ``end`` inclusive
    intermediates: list[SigmaOrder]
    certificates: list[QhReport]
    method: str
    notes: list[str] = field(default_factory=list)

    def __len__(self):
        return len(self.word)

    @property
    def product_word(self) -> tuple[int, ...]:
        """The word as ``(i_l, ..., i_1)`` for ``σ_{i_l} ⋯ σ_{i_1}``, rightmost applied first."""
        return tuple(reversed(self.word))

    @property
    def certified(self) -> bool:
        return (
            all(c.verdict for c in self.certificates)
            and len(self.certificates) == len(self.intermediates)
            and apply_word(self.start, self.word) == self.end
        )

    def to_dict(self) -> dict:
        return {
            "from": list(self.start.perm),
            "to": list(self.end.perm),
            "word": list(self.word),
            "product_word": list(self.product_word),
            "length": len(self.word),
            "path": [list(s.perm) for s in self.intermediates],
            "certified": self.certified,
            "method": self.method,
            "notes": list(self.notes),
        }


def _path(sigma: SigmaOrder, word: Sequence[int]) -> list[SigmaOrder]:
    out = [sigma]
    for p in word:
        out.append(out[-1].twist(p))
    return out


def connect(alg: Algebra, sigma: SigmaOrder, tau: SigmaOrder, graph: TwistGraph | None = None) -> ConnectPath:
    """A path of quasi-hereditary orders from σ to τ through single twists.

    The greedy decomposition is tried first and every step certified; if a
    step is not quasi-hereditary (or the procedure stalls) the path is found by
    breadth-first search in the twist graph instead.
    """
    _check_sigma(alg, sigma)
    _check_sigma(alg, tau)
    for s in (sigma, tau):
        if not is_quasi_hereditary(alg, s).verdict:
            raise NotQuasiHereditaryError(s, "endpoint not quasi-hereditary")
    if sigma == tau:
        return ConnectPath(sigma, tau, (), [sigma], [is_quasi_hereditary(alg, sigma)], "trivial")
    notes = []
    try:
        word = corollary_decomposition(sigma, tau)
    except DecompositionStalled as exc:
        notes.append(str(exc))
    else:
        path = _path(sigma, word)
        certs = [is_quasi_hereditary(alg, s) for s in path]
        bad = [s for s, c in zip(path, certs) if not c.verdict]
        if not bad:
            return ConnectPath(sigma, tau, word, path, certs, "corollary")
        notes.append(f"greedy path leaves the quasi-hereditary set at {bad[0]}")
    if graph is None:
        graph = twist_graph(alg)
    word = graph.shortest_word(sigma, tau)
    if word is None:
        raise RuntimeError(f"no path from {sigma} to {tau} in the twist graph")
    path = _path(sigma, word)
    return ConnectPath(sigma, tau, word, path, [is_quasi_hereditary(alg, s) for s in path], "bfs", notes)


@dataclass
class ConnectednessReport:
    qh_count: int
    pairs: int
    corollary: int
    bfs_fallbacks: int
    failures: list[dict]
    fallback_pairs: list[tuple[tuple[int, ...], tuple[int, ...]]]
    graph_connected: bool
    minimal_lengths: bool

    @property
    def ok(self) -> bool:
        return not self.failures and self.graph_connected

    def to_dict(self) -> dict:
        return {
            "qh_count": self.qh_count,
            "pairs": self.pairs,
            "corollary": self.corollary,
            "bfs_fallbacks": self.bfs_fallbacks,
            "failures": self.failures,
            "fallback_pairs": [[list(a), list(b)] for a, b in self.fallback_pairs],
            "graph_connected": self.graph_connected,
            "minimal_lengths": self.minimal_lengths,
            "ok": self.ok,
        }


def verify_connectedness(alg: Algebra, threads: int | None = None) -> ConnectednessReport:
    """Connect every ordered pair of quasi-hereditary orders and tally the methods used."""
    graph = twist_graph(alg, threads=threads)
    corollary = bfs = 0
    failures, fallback = [], []
    minimal = True
    for s, t in itertools.permutations(graph.vertices, 2):
        try:
            path = connect(alg, s, t, graph)
        except Exception as exc:  # recorded, not raised: the report is the result
            failures.append({"from": list(s.perm), "to": list(t.perm), "error": str(exc)})
            continue
        if not path.certified:
            failures.append({"from": list(s.perm), "to": list(t.perm), "error": "uncertified path"})
            continue
        if path.method == "corollary":
            corollary += 1
            minimal &= len(path.word) == s.inversion_distance(t)
        else:
            bfs += 1
            fallback.append((s.perm, t.perm))
    n_pairs = len(graph.vertices) * (len(graph.vertices) - 1)
    return ConnectednessReport(
        len(graph.vertices), n_pairs, corollary, bfs, failures, fallback, graph.is_connected(), minimal
    )


# -- random fixtures ------------------------------------------------------------------------


def random_bound_quiver_algebra(
    seed: int | random.Random,
    max_vertices: int = 5,
    max_arrows: int = 6,
    max_relations: int = 2,
    field: Field = QQ,
    min_vertices: int = 1,
) -> Algebra:
    """A seeded random acyclic bound quiver algebra.

    Arrows go forward in a random topological order of the vertices; each
    relation is the difference of two distinct parallel paths of length at
    least 2.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    n = rng.randint(min_vertices, max_vertices)
    topo = list(range(1, n + 1))
    rng.shuffle(topo)
    arrows = []
    if n > 1:
        for k in range(rng.randint(0, max_arrows)):
            i, j = sorted(rng.sample(range(n), 2))
            arrows.append(Arrow(f"a{k}", topo[i], topo[j]))
    quiver = Quiver(n, tuple(arrows))
    by_ends: dict[tuple[int, int], list[tuple[str, ...]]] = {}
    for labels, s, t in quiver.paths(n):
        if len(labels) >= 2:
            by_ends.setdefault((s, t), []).append(labels)
    candidates = [ps for _, ps in sorted(by_ends.items()) if len(ps) >= 2]
    relations = []
    for _ in range(rng.randint(0, max_relations)):
        if not candidates:
            break
        p, q = rng.sample(rng.choice(candidates), 2)
        rel = Relation(((1, p), (-1, q)))
        if rel not in relations:
            relations.append(rel)
    name = f"random_{seed}" if isinstance(seed, int) else "random"
    return build_algebra(quiver, relations, field=field, name=name)
