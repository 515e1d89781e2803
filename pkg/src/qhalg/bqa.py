"""Finite-dimensional algebras given by quivers with relations.

Paths compose left to right: the path ``a*b`` means "first ``a``, then
``b``", so ``e_i A e_j`` is spanned by paths from ``i`` to ``j``.  Vertices
are numbered ``1..n`` in every public function.

:func:`build_algebra` turns a quiver and admissible relations into an
:class:`Algebra` (a basis of path classes plus structure constants).  Corner
and quotient algebras are returned as plain structure-constant
:class:`Algebra` objects; downstream code only needs the basis, the vertex
grading and the multiplication table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .exactla import QQ, Field

__all__ = [
    "AlgebraError",
    "Arrow",
    "Quiver",
    "Relation",
    "Algebra",
    "BoundQuiverAlgebra",
    "build_algebra",
    "multiply",
    "opposite",
    "corner",
    "vertex_ideal",
    "quotient_by_ideal",
    "quotient_by_vertices",
    "path_algebra",
]


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    label: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if self.n < 0:
            raise AlgebraError("vertex count must be non-negative")
        seen = set()
        for a in self.arrows:
            if a.label in seen:
                raise AlgebraError(f"duplicate arrow label {a.label!r}")
            seen.add(a.label)
            for v in (a.source, a.target):
                if not 1 <= v <= self.n:
                    raise AlgebraError(f"arrow {a.label!r} uses vertex {v} outside 1..{self.n}")

    def arrow(self, label: str) -> Arrow:
        for a in self.arrows:
            if a.label == label:
                return a
        raise AlgebraError(f"unknown arrow label {label!r}")

    def endpoints(self, path: Sequence[str]) -> tuple[int, int]:
        """Source and target of a nonempty path, checking composability."""
        arrows = [self.arrow(lbl) for lbl in path]
        for x, y in zip(arrows, arrows[1:]):
            if x.target != y.source:
                raise AlgebraError(
                    f"non-composable path {'*'.join(path)}: target of {x.label} is {x.target}, "
                    f"source of {y.label} is {y.source}"
                )
        return arrows[0].source, arrows[-1].target

    def outgoing(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def is_acyclic(self) -> bool:
        return self.longest_path_length() is not None

    def longest_path_length(self) -> int | None:
        """Length of a longest path, or ``None`` when the quiver has an oriented cycle."""
        indeg = {v: 0 for v in range(1, self.n + 1)}
        for a in self.arrows:
            indeg[a.target] += 1
        longest = {v: 0 for v in indeg}
        queue = [v for v, d in indeg.items() if d == 0]
        done = 0
        while queue:
            v = queue.pop()
            done += 1
            for a in self.outgoing(v):
                longest[a.target] = max(longest[a.target], longest[v] + 1)
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    queue.append(a.target)
        if done < self.n:
            return None
        return max(longest.values(), default=0)

    def paths(self, max_length: int) -> list[tuple[tuple[str, ...], int, int]]:
        """All paths of length ``<= max_length`` as ``(labels, source, target)``."""
        out = [((), v, v) for v in range(1, self.n + 1)]
        frontier = [((a.label,), a.source, a.target) for a in self.arrows]
        length = 1
        while frontier and length <= max_length:
            out.extend(frontier)
            frontier = [
                (p + (a.label,), s, a.target)
                for p, s, t in frontier
                for a in self.outgoing(t)
            ]
            length += 1
        return out

    def reversed(self) -> "Quiver":
        return Quiver(self.n, tuple(Arrow(a.label, a.target, a.source) for a in self.arrows))


@dataclass(frozen=True)
class Relation:
    """A linear combination of parallel paths, ``terms = ((coeff, labels), ...)``."""

    terms: tuple[tuple[Fraction, tuple[str, ...]], ...]

    def __post_init__(self):
        terms = tuple((Fraction(c), tuple(p)) for c, p in self.terms)
        object.__setattr__(self, "terms", terms)

    @classmethod
    def parse_simple(cls, *terms: tuple[int, str]) -> "Relation":
        """``Relation.parse_simple((1, "a*c*d"), (-1, "b*d"))``."""
        return cls(tuple((c, tuple(p.split("*"))) for c, p in terms))

    def reversed(self) -> "Relation":
        return Relation(tuple((c, tuple(reversed(p))) for c, p in self.terms))

    def validate(self, quiver: Quiver) -> tuple[int, int]:
        if not self.terms:
            raise AlgebraError("empty relation")
        ends = set()
        for c, p in self.terms:
            if len(p) < 2:
                raise AlgebraError(
                    f"non-admissible relation: term {'*'.join(p) or '<idempotent>'} has length {len(p)} < 2"
                )
            ends.add(quiver.endpoints(p))
        if len(ends) != 1:
            raise AlgebraError("non-parallel relation terms")
        return ends.pop()

    def __str__(self):
        parts = []
        for k, (c, p) in enumerate(self.terms):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = "*".join(p)
            if mag != 1:
                body = f"{mag}*{body}"
            if k == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)


class Algebra:
    """A basic algebra given by a basis graded by vertex pairs and a multiplication table.

    ``sources[b]``/``targets[b]`` are 0-based vertex indices of basis element
    ``b``; ``idempotents[v]`` is the basis index of ``e_{v+1}``; ``mult[x, y]``
    is the coordinate vector of ``b_x * b_y``.  ``generators`` lists basis
    indices whose classes form a basis of ``rad/rad^2`` (the arrows).
    """

    def __init__(
        self,
        field: Field,
        basis_names: Sequence[str],
        sources: Sequence[int],
        targets: Sequence[int],
        idempotents: Sequence[int],
        mult: np.ndarray,
        generators: Sequence[int] | None = None,
        generator_labels: Sequence[str] | None = None,
        vertex_labels: Sequence[int] | None = None,
        name: str = "",
    ):
        self.field = field
        self.basis_names = tuple(basis_names)
        self.sources = tuple(sources)
        self.targets = tuple(targets)
        self.idempotents = tuple(idempotents)
        self.mult = mult
        self.n = len(self.idempotents)
        self.dim = len(self.basis_names)
        self.vertex_labels = tuple(vertex_labels) if vertex_labels is not None else tuple(range(1, self.n + 1))
        self.name = name
        self._blocks = {}
        for b in range(self.dim):
            self._blocks.setdefault((self.sources[b], self.targets[b]), []).append(b)
        if generators is None:
            generators = self._compute_generators()
        self.generators = tuple(generators)
        self.generator_labels = (
            tuple(generator_labels) if generator_labels is not None else tuple(self.basis_names[g] for g in self.generators)
        )
        self._opposite: Algebra | None = None
        self._words = None
        self._cache: dict = {}
        self._sparse = None

    def __repr__(self):
        return f"<{type(self).__name__} {self.name or ''} n={self.n} dim={self.dim} over {self.field!r}>"

    def __getstate__(self):
        state = self.__dict__.copy()
        state["_cache"] = {}
        return state

    # -- grading ------------------------------------------------------------
    def block(self, i: int, j: int) -> list[int]:
        """Basis indices of ``e_i A e_j`` (1-based vertices)."""
        return self._blocks.get((i - 1, j - 1), [])

    def block0(self, i: int, j: int) -> list[int]:
        return self._blocks.get((i, j), [])

    def graded_dims(self) -> list[list[int]]:
        """Matrix of ``dim e_i A e_j``; row ``i``, column ``j``."""
        return [[len(self.block0(i, j)) for j in range(self.n)] for i in range(self.n)]

    def projective_dims(self) -> list[int]:
        """``dim e_i A`` for each vertex."""
        return [sum(row) for row in self.graded_dims()]

    def is_idempotent_index(self, b: int) -> bool:
        return b in self.idempotents

    def radical_basis(self) -> list[int]:
        idem = set(self.idempotents)
        return [b for b in range(self.dim) if b not in idem]

    # -- elements -----------------------------------------------------------
    def basis_vector(self, b: int) -> np.ndarray:
        return self.field.unit(self.dim, b)

    def element(self, coeffs: dict[str, object] | Sequence) -> np.ndarray:
        """Element from a ``{basis name: coefficient}`` mapping or a full vector."""
        if isinstance(coeffs, dict):
            v = self.field.zeros(self.dim)
            for name, c in coeffs.items():
                v[self.basis_names.index(name)] = self.field.scalar(c)
            return v
        return self.field.asarray(list(coeffs))

    def idempotent(self, i: int) -> np.ndarray:
        return self.basis_vector(self.idempotents[i - 1])

    def one(self) -> np.ndarray:
        v = self.field.zeros(self.dim)
        for b in self.idempotents:
            v[b] = self.field.one
        return v

    @property
    def sparse_products(self) -> dict[tuple[int, int], tuple[tuple[int, object], ...]]:
        """Nonzero structure constants: ``(x, y) -> ((k, c), ...)`` with ``b_x b_y = Σ c b_k``."""
        if self._sparse is None:
            table = {}
            for (x, y) in itertools.product(range(self.dim), repeat=2):
                if self.targets[x] != self.sources[y]:
                    continue
                v = self.mult[x, y]
                nz = tuple((int(k), v[k]) for k in np.flatnonzero(v != 0))
                if nz:
                    table[(x, y)] = nz
            self._sparse = table
        return self._sparse

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        f = self.field
        out = f.zeros(self.dim)
        table = self.sparse_products
        xs = [(int(i), x[i]) for i in np.flatnonzero(x != 0)]
        ys = [(int(j), y[j]) for j in np.flatnonzero(y != 0)]
        for i, a in xs:
            for j, b in ys:
                for k, c in table.get((i, j), ()):
                    out[k] += a * b * c
        return f.reduce(out)

    def basis_product(self, x: int, y: int) -> np.ndarray:
        return self.mult[x, y]

    # -- derived algebras -----------------------------------------------------
    @property
    def opposite(self) -> "Algebra":
        if self._opposite is None:
            op = self._make_opposite()
            op._opposite = self
            self._opposite = op
        return self._opposite

    def _make_opposite(self) -> "Algebra":
        return Algebra(
            self.field,
            [_reverse_name(s) for s in self.basis_names],
            self.targets,
            self.sources,
            self.idempotents,
            np.ascontiguousarray(self.mult.transpose(1, 0, 2)),
            self.generators,
            self.generator_labels,
            self.vertex_labels,
            name=(self.name + "^op") if self.name else "",
        )

    # -- words in the generators ------------------------------------------------
    def word_data(self):
        """Words in the generators with their values, plus the relations among them.

        Returns ``(basis_words, relations)``: ``basis_words[b]`` is a list of
        ``(coeff, word)`` with ``word`` a tuple of generator positions whose
        sum is ``b_b``; ``relations`` is a list of such combinations that
        vanish in the algebra and generate all relations (zero words
        included).
        """
        if self._words is None:
            self._words = self._compute_words()
        return self._words

    def _compute_words(self):
        f = self.field
        gens = self.generators
        g_src = [self.sources[g] for g in gens]
        g_tgt = [self.targets[g] for g in gens]
        nonzero: list[tuple[tuple[int, ...], np.ndarray]] = []
        zero_words: list[tuple[int, ...]] = []
        current = [((k,), self.basis_vector(g)) for k, g in enumerate(gens)]
        while current:
            nonzero.extend(current)
            nxt = []
            for w, v in current:
                t = g_tgt[w[-1]]
                for k in range(len(gens)):
                    if g_src[k] != t:
                        continue
                    val = self.multiply(v, self.basis_vector(gens[k]))
                    if f.is_zero(val):
                        zero_words.append(w + (k,))
                    else:
                        nxt.append((w + (k,), val))
            current = nxt
            if len(nonzero) > 200000:
                raise AlgebraError("too many nonzero words; is the algebra finite-dimensional?")

        by_block: dict[tuple[int, int], list[tuple[tuple[int, ...], np.ndarray]]] = {}
        for w, v in nonzero:
            by_block.setdefault((g_src[w[0]], g_tgt[w[-1]]), []).append((w, v))

        basis_words: list[list[tuple[object, tuple[int, ...]]]] = [[] for _ in range(self.dim)]
        for v_idx, b in enumerate(self.idempotents):
            basis_words[b] = [(f.one, ())]
        relations: list[list[tuple[object, tuple[int, ...]]]] = [[(f.one, w)] for w in zero_words]
        for (s, t), items in by_block.items():
            coords = self.block0(s, t)
            mat = f.asarray([[v[c] for c in coords] for _, v in items]).T if items else f.zeros((len(coords), 0))
            mat = f.reduce(mat)
            for b in coords:
                if b in self.idempotents:
                    continue
                x = f.solve(mat, f.unit(len(coords), coords.index(b)))
                basis_words[b] = [(x[k], items[k][0]) for k in range(len(items)) if x[k] != 0]
            long_idx = [k for k, (w, _) in enumerate(items) if len(w) >= 2]
            if long_idx:
                ker = f.kernel(mat[:, long_idx])
                for col in range(ker.shape[1]):
                    rel = [(ker[r, col], items[long_idx[r]][0]) for r in range(len(long_idx)) if ker[r, col] != 0]
                    relations.append(rel)
        for s in range(self.n):
            for t in range(self.n):
                for b in self.block0(s, t):
                    if not basis_words[b] and b not in self.idempotents:
                        raise AlgebraError(f"basis element {self.basis_names[b]} not generated by the arrows")
        return basis_words, relations

    def _compute_generators(self) -> list[int]:
        f = self.field
        rad = self.radical_basis()
        if not rad:
            return []
        rows = []
        for x in rad:
            for y in rad:
                if self.targets[x] == self.sources[y]:
                    v = self.mult[x, y]
                    if not f.is_zero(v):
                        rows.append([v[c] for c in rad])
        if not rows:
            return rad
        sq = f.asarray(rows) if f.characteristic == 0 else f.reduce(np.array(rows, dtype=np.int64))
        _, pivots = f.rref(sq)
        piv = {rad[c] for c in pivots}
        return [b for b in rad if b not in piv]

    # -- checks -----------------------------------------------------------------
    def check_associative(self) -> bool:
        units = [self.basis_vector(b) for b in range(self.dim)]
        for x, y, z in itertools.product(range(self.dim), repeat=3):
            lhs = self.multiply(self.multiply(units[x], units[y]), units[z])
            rhs = self.multiply(units[x], self.multiply(units[y], units[z]))
            if np.any(lhs != rhs):
                return False
        return True

    def check_idempotents(self) -> bool:
        f = self.field
        for i, ei in enumerate(self.idempotents):
            for j, ej in enumerate(self.idempotents):
                expect = self.basis_vector(ei) if i == j else f.zeros(self.dim)
                if np.any(self.mult[ei, ej] != expect):
                    return False
        for b in range(self.dim):
            for v, e in enumerate(self.idempotents):
                left = self.mult[e, b]
                right = self.mult[b, e]
                want_l = self.basis_vector(b) if self.sources[b] == v else f.zeros(self.dim)
                want_r = self.basis_vector(b) if self.targets[b] == v else f.zeros(self.dim)
                if np.any(left != want_l) or np.any(right != want_r):
                    return False
        return True

    def summary(self) -> dict:
        return {
            "name": self.name,
            "vertices": self.n,
            "dimension": self.dim,
            "graded_dims": self.graded_dims(),
            "projective_dims": self.projective_dims(),
            "field": repr(self.field),
        }


class BoundQuiverAlgebra(Algebra):
    """``KQ/I`` with its quiver, relations and nilpotency bound attached."""

    def __init__(self, quiver: Quiver, relations: Sequence[Relation], nilpotency: int, *args, **kwargs):
        self.quiver = quiver
        self.relations = tuple(relations)
        self.nilpotency = nilpotency
        super().__init__(*args, **kwargs)

    def _make_opposite(self) -> "BoundQuiverAlgebra":
        return BoundQuiverAlgebra(
            self.quiver.reversed(),
            [r.reversed() for r in self.relations],
            self.nilpotency,
            self.field,
            [_reverse_name(s) for s in self.basis_names],
            self.targets,
            self.sources,
            self.idempotents,
            np.ascontiguousarray(self.mult.transpose(1, 0, 2)),
            self.generators,
            self.generator_labels,
            self.vertex_labels,
            name=(self.name + "^op") if self.name else "",
        )

    def path_element(self, path: str | Sequence[str]) -> np.ndarray:
        """Class of a path (``"a*c*d"`` or a label sequence) in the algebra."""
        labels = tuple(path.split("*")) if isinstance(path, str) else tuple(path)
        if not labels:
            raise AlgebraError("use idempotent() for trivial paths")
        self.quiver.endpoints(labels)
        v = self.basis_vector(self.basis_names.index(labels[0]))
        for lbl in labels[1:]:
            v = self.multiply(v, self.basis_vector(self.basis_names.index(lbl)))
        return v


def _reverse_name(name: str) -> str:
    if name.startswith("e") and name[1:].isdigit():
        return name
    return "*".join(reversed(name.split("*")))


def _path_name(labels: tuple[str, ...], v: int) -> str:
    return "*".join(labels) if labels else f"e{v}"


def _reduce_paths(quiver: Quiver, relations: Sequence[Relation], bound: int, field: Field):
    """Normal-form basis of ``KQ/(I + J^bound)`` and the reduction map.

    Returns ``(paths, basis_paths, nf)`` where ``nf[path]`` is the coordinate
    vector over ``basis_paths`` of the class of ``path`` (length < bound).
    """
    paths = quiver.paths(bound - 1)
    # longest paths first, so pivots fall on long paths and short paths survive as basis
    order = sorted(range(len(paths)), key=lambda k: (-len(paths[k][0]), k))
    col_of = {paths[k][0] if paths[k][0] else ("", paths[k][1]): pos for pos, k in enumerate(order)}

    def key(p, s):
        return p if p else ("", s)

    starts_at: dict[int, list] = {}
    ends_at: dict[int, list] = {}
    for p, s, t in paths:
        starts_at.setdefault(s, []).append(p)
        ends_at.setdefault(t, []).append(p)

    rows = []
    for rel in relations:
        s, t = rel.validate(quiver)
        shortest = min(len(p) for _, p in rel.terms)
        for u in ends_at.get(s, []):
            for w in starts_at.get(t, []):
                if len(u) + len(w) + shortest >= bound:
                    continue
                row = {}
                for c, p in rel.terms:
                    full = u + p + w
                    if len(full) < bound:
                        col = col_of[full]
                        row[col] = row.get(col, 0) + c
                if any(v != 0 for v in row.values()):
                    rows.append(row)

    ncols = len(paths)
    if rows:
        mat = field.zeros((len(rows), ncols))
        for r, row in enumerate(rows):
            for c, v in row.items():
                mat[r, c] = field.scalar(v)
        red, pivots = field.rref(mat)
    else:
        red, pivots = field.zeros((0, ncols)), []
    pivot_row = {c: r for r, c in enumerate(pivots)}
    free_cols = [c for c in range(ncols) if c not in pivot_row]
    path_at = {pos: paths[k] for pos, k in enumerate(order)}

    # basis: idempotents first (in vertex order), then by length, then enumeration order
    basis_cols = sorted(free_cols, key=lambda c: (len(path_at[c][0]), order[c]))
    basis_paths = [path_at[c] for c in basis_cols]
    basis_pos = {c: k for k, c in enumerate(basis_cols)}

    nf = {}
    for pos, (p, s, t) in path_at.items():
        v = field.zeros(len(basis_cols))
        if pos in basis_pos:
            v[basis_pos[pos]] = field.one
        else:
            r = pivot_row[pos]
            for c in free_cols:
                x = red[r, c]
                if x != 0:
                    v[basis_pos[c]] = -x
            v = field.reduce(v)
        nf[key(p, s)] = v
    return basis_paths, nf, key


def build_algebra(
    quiver: Quiver,
    relations: Iterable[Relation] = (),
    nilpotency: int | None = None,
    field: Field = QQ,
    name: str = "",
) -> BoundQuiverAlgebra:
    """Basis and structure constants of ``KQ/I`` (with ``J^N`` killed).

    Relations must be admissible: every term a path of length at least 2.
    For an acyclic quiver ``nilpotency`` may be omitted and defaults to the
    longest path length plus one; with oriented cycles it is required.
    """
    relations = tuple(relations)
    for rel in relations:
        rel.validate(quiver)
    longest = quiver.longest_path_length()
    if nilpotency is None:
        if longest is None:
            raise AlgebraError("cyclic quiver without nilpotency bound")
        bound = max(2, longest + 1)
        declared = False
    else:
        bound = int(nilpotency)
        if bound < 2:
            raise AlgebraError("nilpotency bound must be at least 2")
        declared = longest is None or bound <= longest

    basis_paths, nf, key = _reduce_paths(quiver, relations, bound, field)

    if declared:
        # one step further out, every path of length `bound` must already vanish
        _, nf_next, key_next = _reduce_paths(quiver, relations, bound + 1, field)
        for p, s, t in quiver.paths(bound):
            if len(p) == bound and not field.is_zero(nf_next[key_next(p, s)]):
                raise AlgebraError(
                    f"nilpotency bound violated: path {'*'.join(p)} of length {bound} is not in the ideal"
                )

    dim = len(basis_paths)
    names = [_path_name(p, s) for p, s, t in basis_paths]
    sources = [s - 1 for _, s, _ in basis_paths]
    targets = [t - 1 for _, _, t in basis_paths]
    idempotents = [names.index(f"e{v}") for v in range(1, quiver.n + 1)]

    mult = field.zeros((dim, dim, dim))
    for x, (px, sx, tx) in enumerate(basis_paths):
        for y, (py, sy, ty) in enumerate(basis_paths):
            if tx != sy:
                continue
            full = px + py
            if len(full) >= bound:
                continue
            mult[x, y] = nf[key(full, sx)]

    gens = [names.index(a.label) for a in quiver.arrows]
    alg = BoundQuiverAlgebra(
        quiver,
        relations,
        bound,
        field,
        names,
        sources,
        targets,
        idempotents,
        mult,
        gens,
        [a.label for a in quiver.arrows],
        name=name,
    )
    return alg


def path_algebra(n: int, arrows: Iterable[tuple[str, int, int]] = (), field: Field = QQ, name: str = "") -> BoundQuiverAlgebra:
    """Convenience constructor for a path algebra without relations."""
    q = Quiver(n, tuple(Arrow(*a) for a in arrows))
    return build_algebra(q, (), None, field=field, name=name)


def multiply(alg: Algebra, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return alg.multiply(a, b)


def opposite(alg: Algebra) -> Algebra:
    return alg.opposite


def corner(alg: Algebra, vertices: Iterable[int]) -> Algebra:
    """``eAe`` for ``e`` the sum of ``e_j`` over ``vertices`` (1-based)."""
    keep = sorted(set(v - 1 for v in vertices))
    if not keep:
        raise AlgebraError("corner needs a nonempty vertex set")
    kept = set(keep)
    idx = [b for b in range(alg.dim) if alg.sources[b] in kept and alg.targets[b] in kept]
    pos = {b: k for k, b in enumerate(idx)}
    vmap = {v: k for k, v in enumerate(keep)}
    mult = alg.mult[np.ix_(idx, idx, idx)].copy() if idx else alg.field.zeros((0, 0, 0))
    return Algebra(
        alg.field,
        [alg.basis_names[b] for b in idx],
        [vmap[alg.sources[b]] for b in idx],
        [vmap[alg.targets[b]] for b in idx],
        [pos[alg.idempotents[v]] for v in keep],
        mult,
        vertex_labels=[alg.vertex_labels[v] for v in keep],
        name=f"{alg.name}[corner {','.join(str(alg.vertex_labels[v]) for v in keep)}]",
    )


def vertex_ideal(alg: Algebra, vertices: Iterable[int]) -> list[np.ndarray]:
    """Spanning set of the two-sided ideal ``A e A`` for ``e = sum of e_j``, ``j`` in ``vertices``."""
    out = []
    for v in set(vertices):
        v0 = v - 1
        left = [x for x in range(alg.dim) if alg.targets[x] == v0]
        right = [y for y in range(alg.dim) if alg.sources[y] == v0]
        for x in left:
            for y in right:
                out.append(alg.mult[x, y])
    return out


def quotient_by_ideal(alg: Algebra, ideal: Sequence[np.ndarray]) -> Algebra:
    """``A/I`` on a complement basis of original basis elements.

    ``ideal`` is any spanning set of ``I``; closure under multiplication by
    basis elements on both sides is verified.
    """
    f = alg.field
    d = alg.dim
    gens = [v for v in ideal if not f.is_zero(v)]
    if gens:
        red, pivots = f.rref(np.array(gens))
        red = red[: len(pivots)]
    else:
        red, pivots = f.zeros((0, d)), []
    pivot_set = set(pivots)

    def reduce_mod(v):
        v = v.copy()
        for r, c in enumerate(pivots):
            if v[c] != 0:
                v = f.reduce(v - v[c] * red[r])
        return v

    # idempotents and arrows generate A, so closure under them suffices
    checkers = sorted(set(alg.idempotents) | set(alg.generators))
    for r in range(len(pivots)):
        u = red[r]
        for b in checkers:
            unit = alg.basis_vector(b)
            for prod in (alg.multiply(u, unit), alg.multiply(unit, u)):
                if not f.is_zero(prod) and not f.is_zero(reduce_mod(prod)):
                    raise AlgebraError("not a two-sided ideal")

    keep = [b for b in range(d) if b not in pivot_set]
    kept_vertices = [v for v in range(alg.n) if alg.idempotents[v] not in pivot_set]
    vmap = {v: k for k, v in enumerate(kept_vertices)}
    pos = {b: k for k, b in enumerate(keep)}
    m = len(keep)
    mult = f.zeros((m, m, m))
    for i, x in enumerate(keep):
        for j, y in enumerate(keep):
            prod = alg.mult[x, y]
            if f.is_zero(prod):
                continue
            prod = reduce_mod(prod)
            mult[i, j] = prod[keep]
    for b in keep:
        if alg.sources[b] not in vmap or alg.targets[b] not in vmap:
            raise AlgebraError("quotient basis element at a killed vertex")
    return Algebra(
        f,
        [alg.basis_names[b] for b in keep],
        [vmap[alg.sources[b]] for b in keep],
        [vmap[alg.targets[b]] for b in keep],
        [pos[alg.idempotents[v]] for v in kept_vertices],
        mult,
        vertex_labels=[alg.vertex_labels[v] for v in kept_vertices],
        name=f"{alg.name}/I",
    )


def quotient_by_vertices(alg: Algebra, vertices: Iterable[int]) -> Algebra:
    """``A/AεA`` for ``ε`` the sum of ``e_j`` over ``vertices`` (1-based), cached per algebra."""
    key = ("quotient", frozenset(vertices))
    if key not in alg._cache:
        alg._cache[key] = quotient_by_ideal(alg, vertex_ideal(alg, key[1]))
    return alg._cache[key]
