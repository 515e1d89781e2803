"""Right modules as quiver representations.

A representation assigns a vector space ``V_v`` (column vectors) to every
vertex and a matrix ``V_s -> V_t`` to every generator (arrow) ``s -> t`` of
the algebra.  Because paths compose left to right, the right action of a path
``a*b`` on ``V_s`` is the matrix product ``M_b @ M_a``.

Injective modules and everything on the costandard side are obtained through
the opposite algebra and :func:`dual`, so only right modules are implemented.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .bqa import Algebra
from .exactla import block_diag, hstack

__all__ = [
    "Representation",
    "Morphism",
    "Subrepresentation",
    "RepresentationError",
    "projective",
    "injective",
    "simple",
    "zero_representation",
    "regular_module",
    "direct_sum",
    "dual",
    "hom_basis",
    "hom_dim",
    "ext1_dim",
    "projective_cover",
    "generate",
    "radical",
    "top",
    "trace",
    "quotient",
    "composition_multiplicity",
    "morphism_kernel",
    "morphism_image",
]


class RepresentationError(ValueError):
    pass


class Representation:
    def __init__(self, algebra: Algebra, dims: Sequence[int], maps: Sequence[np.ndarray], check: bool = True):
        self.algebra = algebra
        self.field = algebra.field
        self.dims = tuple(int(d) for d in dims)
        self.maps = tuple(maps)
        if len(self.dims) != algebra.n:
            raise RepresentationError(f"expected {algebra.n} vertex dimensions, got {len(self.dims)}")
        if len(self.maps) != len(algebra.generators):
            raise RepresentationError(f"expected {len(algebra.generators)} arrow matrices, got {len(self.maps)}")
        if any(d < 0 for d in self.dims):
            raise RepresentationError("negative dimension")
        for k, g in enumerate(algebra.generators):
            want = (self.dims[algebra.targets[g]], self.dims[algebra.sources[g]])
            if self.maps[k].shape != want:
                raise RepresentationError(
                    f"arrow {algebra.generator_labels[k]}: matrix shape {self.maps[k].shape}, expected {want}"
                )
        self._words: dict[tuple[int, ...], np.ndarray] = {}
        self._cache: dict = {}
        if check and not self.is_valid():
            raise RepresentationError("relations do not vanish on this representation")

    @property
    def dimension_vector(self) -> tuple[int, ...]:
        return self.dims

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def __repr__(self):
        return f"<Representation dims={self.dims}>"

    def word_matrix(self, word: tuple[int, ...]) -> np.ndarray:
        """Action of a word of generator positions (applied left to right)."""
        if word in self._words:
            return self._words[word]
        alg, f = self.algebra, self.field
        if not word:
            raise ValueError("empty word has no fixed vertex")
        if len(word) == 1:
            mat = self.maps[word[0]]
        else:
            mat = f.matmul(self.maps[word[-1]], self.word_matrix(word[:-1]))
        self._words[word] = mat
        return mat

    def action(self, b: int) -> np.ndarray:
        """Matrix of right multiplication by basis element ``b``: ``V_source -> V_target``."""
        alg, f = self.algebra, self.field
        s, t = alg.sources[b], alg.targets[b]
        basis_words, _ = alg.word_data()
        if b in alg.idempotents:
            return f.eye(self.dims[s])
        out = f.zeros((self.dims[t], self.dims[s]))
        for c, w in basis_words[b]:
            out = f.reduce(out + c * self.word_matrix(w))
        return out

    def is_valid(self) -> bool:
        alg, f = self.algebra, self.field
        _, relations = alg.word_data()
        gens = alg.generators
        for rel in relations:
            w0 = rel[0][1]
            s, t = alg.sources[gens[w0[0]]], alg.targets[gens[w0[-1]]]
            if self.dims[s] == 0 or self.dims[t] == 0:
                continue
            acc = f.zeros((self.dims[t], self.dims[s]))
            for c, w in rel:
                acc = f.reduce(acc + c * self.word_matrix(w))
            if not f.is_zero(acc):
                return False
        return True

    def same_as(self, other: "Representation") -> bool:
        """Equal dimension data and equal matrices (not isomorphism)."""
        return self.dims == other.dims and all(np.array_equal(x, y) for x, y in zip(self.maps, other.maps))

    def identity(self) -> "Morphism":
        return Morphism(self, self, [self.field.eye(d) for d in self.dims], check=False)


class Morphism:
    """Vertexwise matrices ``comps[v]: V_v -> W_v`` commuting with every arrow."""

    def __init__(self, source: Representation, target: Representation, comps: Sequence[np.ndarray], check: bool = True):
        self.source = source
        self.target = target
        self.comps = tuple(comps)
        if check and not self.is_homomorphism():
            raise RepresentationError("matrices do not intertwine the arrow actions")

    def is_homomorphism(self) -> bool:
        alg, f = self.source.algebra, self.source.field
        for k, g in enumerate(alg.generators):
            s, t = alg.sources[g], alg.targets[g]
            lhs = f.matmul(self.comps[t], self.source.maps[k])
            rhs = f.matmul(self.target.maps[k], self.comps[s])
            if np.any(lhs != rhs):
                return False
        return True

    def compose(self, other: "Morphism") -> "Morphism":
        """``self ∘ other``."""
        f = self.source.field
        return Morphism(other.source, self.target, [f.matmul(a, b) for a, b in zip(self.comps, other.comps)], check=False)

    def is_zero(self) -> bool:
        return all(self.source.field.is_zero(c) for c in self.comps)

    def rank_vector(self) -> tuple[int, ...]:
        f = self.source.field
        return tuple(f.rank(c) for c in self.comps)

    def is_injective(self) -> bool:
        return self.rank_vector() == self.source.dims

    def is_surjective(self) -> bool:
        return self.rank_vector() == self.target.dims


class Subrepresentation:
    """Arrow-closed subspaces ``U_v ⊆ V_v`` given by independent basis columns."""

    def __init__(self, parent: Representation, bases: Sequence[np.ndarray], check: bool = True):
        self.parent = parent
        self.bases = tuple(bases)
        if check and not self.is_closed():
            raise RepresentationError("not arrow-closed")

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(b.shape[1] for b in self.bases)

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def __repr__(self):
        return f"<Subrepresentation dims={self.dims} of {self.parent.dims}>"

    def is_closed(self) -> bool:
        M, f = self.parent, self.parent.field
        alg = M.algebra
        for k, g in enumerate(alg.generators):
            s, t = alg.sources[g], alg.targets[g]
            if self.bases[s].shape[1] == 0:
                continue
            img = f.matmul(M.maps[k], self.bases[s])
            if f.rank(hstack(f, M.dims[t], [self.bases[t], img])) > self.bases[t].shape[1]:
                return False
        return True

    def to_representation(self) -> Representation:
        M, f = self.parent, self.parent.field
        alg = M.algebra
        maps = []
        for k, g in enumerate(alg.generators):
            s, t = alg.sources[g], alg.targets[g]
            img = f.matmul(M.maps[k], self.bases[s])
            maps.append(f.solve(self.bases[t], img) if img.size else f.zeros((self.bases[t].shape[1], self.bases[s].shape[1])))
        return Representation(alg, self.dims, maps, check=False)

    def inclusion(self) -> Morphism:
        return Morphism(self.to_representation(), self.parent, self.bases, check=False)

    def contains(self, other: "Subrepresentation") -> bool:
        f = self.parent.field
        return all(
            f.rank(hstack(f, a.shape[0], [a, b])) == a.shape[1] for a, b in zip(self.bases, other.bases)
        )


# -- constructors ---------------------------------------------------------------


def zero_representation(alg: Algebra) -> Representation:
    f = alg.field
    return Representation(alg, [0] * alg.n, [f.zeros((0, 0)) for _ in alg.generators], check=False)


def projective(alg: Algebra, i: int) -> Representation:
    """``P(i) = e_i A`` with ``V_j`` spanned by the basis of ``e_i A e_j``."""
    key = ("projective", i)
    if key in alg._cache:
        return alg._cache[key]
    f = alg.field
    src = i - 1
    blocks = [alg.block0(src, j) for j in range(alg.n)]
    maps = []
    for g in alg.generators:
        s, t = alg.sources[g], alg.targets[g]
        mat = f.zeros((len(blocks[t]), len(blocks[s])))
        for col, x in enumerate(blocks[s]):
            prod = alg.mult[x, g]
            for row, y in enumerate(blocks[t]):
                mat[row, col] = prod[y]
        maps.append(mat)
    rep = Representation(alg, [len(b) for b in blocks], maps, check=False)
    alg._cache[key] = rep
    return rep


def injective(alg: Algebra, i: int) -> Representation:
    """``I(i) = D(A e_i)``, the dual of the projective ``P(i)`` of the opposite algebra."""
    return dual(projective(alg.opposite, i))


def simple(alg: Algebra, i: int) -> Representation:
    f = alg.field
    dims = [0] * alg.n
    dims[i - 1] = 1
    maps = [f.zeros((dims[alg.targets[g]], dims[alg.sources[g]])) for g in alg.generators]
    return Representation(alg, dims, maps, check=False)


def direct_sum(*reps: Representation) -> Representation:
    if not reps:
        raise ValueError("direct_sum needs at least one summand")
    alg, f = reps[0].algebra, reps[0].field
    dims = [sum(r.dims[v] for r in reps) for v in range(alg.n)]
    maps = [block_diag(f, [r.maps[k] for r in reps]) for k in range(len(alg.generators))]
    return Representation(alg, dims, maps, check=False)


def regular_module(alg: Algebra) -> Representation:
    """``A_A`` as the direct sum of the indecomposable projectives."""
    if alg.n == 0:
        return zero_representation(alg)
    return direct_sum(*(projective(alg, i) for i in range(1, alg.n + 1)))


def dual(m: Representation) -> Representation:
    """``D M = Hom_K(M, K)``: a right module over the opposite algebra."""
    return Representation(m.algebra.opposite, m.dims, [x.T.copy() for x in m.maps], check=False)


def composition_multiplicity(m: Representation, j: int) -> int:
    """``[M : S(j)]``, which is ``dim M e_j`` over a basic split algebra."""
    return m.dims[j - 1]


# -- Hom and Ext ----------------------------------------------------------------------


def _hom_system(m: Representation, n: Representation):
    alg, f = m.algebra, m.field
    offsets, total = [], 0
    for v in range(alg.n):
        offsets.append(total)
        total += m.dims[v] * n.dims[v]
    blocks = []
    for k, g in enumerate(alg.generators):
        s, t = alg.sources[g], alg.targets[g]
        rows = n.dims[t] * m.dims[s]
        if rows == 0:
            continue
        block = f.zeros((rows, total))
        if m.dims[t]:
            a = f.kron(m.maps[k].T.copy(), f.eye(n.dims[t]))
            block[:, offsets[t] : offsets[t] + a.shape[1]] = a
        if n.dims[s]:
            b = f.kron(f.eye(m.dims[s]), n.maps[k])
            sl = slice(offsets[s], offsets[s] + b.shape[1])
            block[:, sl] = f.reduce(block[:, sl] - b)
        blocks.append(block)
    system = np.concatenate(blocks, axis=0) if blocks else f.zeros((0, total))
    return system, offsets, total


def hom_dim(m: Representation, n: Representation) -> int:
    if m.algebra is not n.algebra:
        raise RepresentationError("modules over different algebras")
    system, _, total = _hom_system(m, n)
    if total == 0:
        return 0
    return total - m.field.rank(system)


def hom_basis(m: Representation, n: Representation) -> list[Morphism]:
    """Basis of ``Hom_A(M, N)``."""
    if m.algebra is not n.algebra:
        raise RepresentationError("modules over different algebras")
    f = m.field
    system, offsets, total = _hom_system(m, n)
    if total == 0:
        return []
    ker = f.kernel(system)
    out = []
    for col in range(ker.shape[1]):
        x = ker[:, col]
        comps = []
        for v in range(m.algebra.n):
            size = m.dims[v] * n.dims[v]
            chunk = x[offsets[v] : offsets[v] + size]
            # column-major vectorisation
            comps.append(chunk.reshape(m.dims[v], n.dims[v]).T.copy())
        out.append(Morphism(m, n, comps, check=False))
    return out


def projective_cover(m: Representation, extra: Iterable[int] = ()) -> tuple[Representation, Morphism, list[int]]:
    """A surjection ``P0 -> M`` from the projective cover, optionally padded with ``P(j)`` for ``j`` in ``extra``.

    Top generators are the coordinate vectors not in the radical, taken in
    increasing coordinate order at each vertex.  Returns ``(P0, pi, summands)``
    where ``summands`` lists the vertex of each ``P(j)`` summand.
    """
    alg, f = m.algebra, m.field
    rad = radical(m)
    summands: list[int] = []
    images: list[list[np.ndarray]] = []
    for v in range(alg.n):
        for c in f.complement_units(rad.bases[v]):
            gen = f.unit(m.dims[v], c)
            images.append(_image_of_generator(m, v, gen))
            summands.append(v + 1)
    for j in extra:
        images.append([f.zeros((m.dims[w], len(alg.block0(j - 1, w)))) for w in range(alg.n)])
        summands.append(j)
    if not summands:
        return zero_representation(alg), Morphism(zero_representation(alg), m, [f.zeros((d, 0)) for d in m.dims], check=False), []
    p0 = direct_sum(*(projective(alg, j) for j in summands))
    comps = [hstack(f, m.dims[w], [img[w] for img in images]) for w in range(alg.n)]
    return p0, Morphism(p0, m, comps, check=False), summands


def _image_of_generator(m: Representation, v: int, gen: np.ndarray) -> list[np.ndarray]:
    """Components of ``P(v+1) -> M`` sending ``e_{v+1}`` to ``gen``."""
    alg, f = m.algebra, m.field
    out = []
    for w in range(alg.n):
        cols = [f.matmul(m.action(x), gen) for x in alg.block0(v, w)]
        out.append(np.stack(cols, axis=1) if cols else f.zeros((m.dims[w], 0)))
    return out


def syzygy(m: Representation, extra: Iterable[int] = ()) -> tuple[Representation, list[int]]:
    extra = tuple(extra)
    key = ("syzygy", extra)
    if key not in m._cache:
        p0, pi, summands = projective_cover(m, extra)
        m._cache[key] = (morphism_kernel(pi).to_representation(), summands)
    return m._cache[key]


def ext1_dim(m: Representation, n: Representation, extra: Iterable[int] = ()) -> int:
    """``dim Ext^1(M, N) = dim Hom(Ω, N) - dim Hom(P0, N) + dim Hom(M, N)``."""
    if m.algebra is not n.algebra:
        raise RepresentationError("modules over different algebras")
    if m.dim == 0 or n.dim == 0:
        return 0
    omega, summands = syzygy(m, extra)
    hom_p0 = sum(n.dims[j - 1] for j in summands)
    return hom_dim(omega, n) - hom_p0 + hom_dim(m, n)


# -- submodules and quotients ---------------------------------------------------------


def generate(m: Representation, vectors: Sequence[np.ndarray]) -> Subrepresentation:
    """Smallest subrepresentation containing the columns of ``vectors[v]`` at each vertex."""
    alg, f = m.algebra, m.field
    spans = [f.column_basis(vectors[v]) if vectors[v].size else f.zeros((m.dims[v], 0)) for v in range(alg.n)]
    gens = alg.generators
    out_of = {v: [k for k, g in enumerate(gens) if alg.sources[g] == v] for v in range(alg.n)}
    queue = [v for v in range(alg.n) if spans[v].shape[1]]
    while queue:
        s = queue.pop()
        for k in out_of[s]:
            t = alg.targets[gens[k]]
            if m.dims[t] == 0 or spans[s].shape[1] == 0:
                continue
            img = f.matmul(m.maps[k], spans[s])
            if f.is_zero(img):
                continue
            new = f.column_basis(hstack(f, m.dims[t], [spans[t], img]))
            if new.shape[1] > spans[t].shape[1]:
                spans[t] = new
                queue.append(t)
    return Subrepresentation(m, spans, check=False)


def radical(m: Representation) -> Subrepresentation:
    """``rad M``: at vertex ``j``, the sum of the images of the arrows into ``j``."""
    if "radical" in m._cache:
        return m._cache["radical"]
    alg, f = m.algebra, m.field
    vecs = [[] for _ in range(alg.n)]
    for k, g in enumerate(alg.generators):
        s, t = alg.sources[g], alg.targets[g]
        if m.dims[s] and m.dims[t]:
            vecs[t].append(m.maps[k])
    sub = generate(m, [hstack(f, m.dims[v], vecs[v]) for v in range(alg.n)])
    m._cache["radical"] = sub
    return sub


def top(m: Representation) -> Representation:
    return quotient(m, radical(m))[0]


def trace(m: Representation, vertices: Iterable[int]) -> Subrepresentation:
    """Trace of ``{P(j) : j in vertices}`` in ``M``: the submodule generated by those components."""
    alg, f = m.algebra, m.field
    chosen = {v - 1 for v in vertices}
    vecs = [f.eye(m.dims[v]) if v in chosen else f.zeros((m.dims[v], 0)) for v in range(alg.n)]
    return generate(m, vecs)


def quotient(m: Representation, u: Subrepresentation) -> tuple[Representation, Morphism]:
    """``M/U`` on complementary coordinate vectors, with the projection ``M -> M/U``."""
    if u.parent is not m:
        raise RepresentationError("subrepresentation of a different module")
    if not u.is_closed():
        raise RepresentationError("not arrow-closed")
    alg, f = m.algebra, m.field
    comps, projs = [], []
    for v in range(alg.n):
        comp = f.complement_units(u.bases[v])
        comps.append(comp)
        d = m.dims[v]
        if d == 0:
            projs.append(f.zeros((0, 0)))
            continue
        full = hstack(f, d, [u.bases[v], f.eye(d)[:, comp]])
        inv = f.solve(full, f.eye(d))
        projs.append(inv[u.bases[v].shape[1] :, :].copy())
    maps = []
    for k, g in enumerate(alg.generators):
        s, t = alg.sources[g], alg.targets[g]
        maps.append(f.matmul(projs[t], m.maps[k][:, comps[s]]) if len(comps[s]) and len(comps[t]) else f.zeros((len(comps[t]), len(comps[s]))))
    q = Representation(alg, [len(c) for c in comps], maps, check=False)
    return q, Morphism(m, q, projs, check=False)


def morphism_kernel(phi: Morphism) -> Subrepresentation:
    f = phi.source.field
    return Subrepresentation(phi.source, [f.kernel(c) if c.shape[1] else f.zeros((0, 0)) for c in phi.comps], check=True)


def morphism_image(phi: Morphism) -> Subrepresentation:
    f = phi.source.field
    return Subrepresentation(phi.target, [f.column_basis(c) for c in phi.comps], check=True)
