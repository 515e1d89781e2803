"""Standard modules, Δ-filtrations and the quasi-hereditary test for a total order.

A total order on the vertices is a :class:`SigmaOrder`: the permutation
``σ`` in one-line notation, with ``i <σ j`` iff ``σ(i) < σ(j)``.  The
standard module ``Δ^σ(i)`` is ``P(i)`` modulo the trace of the projectives
strictly above ``i``; costandard modules come from the opposite algebra by
duality.

The verdict of :func:`is_quasi_hereditary` is decided on trace chains of the
indecomposable projectives.  :func:`heredity_chain_check` decides the same
question independently from the ideal chain ``A ε A`` and is used as a
cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .bqa import Algebra, corner, quotient_by_vertices
from .rep import (
    Representation,
    Subrepresentation,
    dual,
    projective,
    projective_cover,
    quotient,
    regular_module,
    trace,
)

__all__ = [
    "PermutationError",
    "SigmaOrder",
    "QhReport",
    "FiltrationResult",
    "standard_module",
    "costandard_module",
    "standard_dims",
    "trace_chain",
    "has_delta_filtration",
    "has_nabla_filtration",
    "is_quasi_hereditary",
    "heredity_chain_check",
    "delta_filtration_multiplicities_k0",
    "inherited_structures",
]


class PermutationError(ValueError):
    pass


@dataclass(frozen=True)
class SigmaOrder:
    """A permutation ``σ`` of ``1..n`` in one-line notation ``(σ(1), ..., σ(n))``."""

    perm: tuple[int, ...]
    _inv: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        perm = tuple(int(x) for x in self.perm)
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise PermutationError(f"not a permutation of 1..{len(perm)}: {perm}")
        object.__setattr__(self, "perm", perm)
        inv = [0] * len(perm)
        for i, v in enumerate(perm, start=1):
            inv[v - 1] = i
        object.__setattr__(self, "_inv", tuple(inv))

    @classmethod
    def identity(cls, n: int) -> "SigmaOrder":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "SigmaOrder":
        """Parse ``"2,1,3,4"`` (commas and/or spaces)."""
        parts = [p for p in text.replace(",", " ").split() if p]
        if not parts:
            raise PermutationError("empty permutation")
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError as exc:
            raise PermutationError(f"invalid permutation {text!r}: {exc}") from None

    @classmethod
    def from_word(cls, word: Sequence[int], n: int) -> "SigmaOrder":
        """``σ_{i_l} ⋯ σ_{i_1}`` for ``word = (i_l, ..., i_1)``; the rightmost factor acts first."""
        rho = cls.identity(n)
        for p in reversed(list(word)):
            rho = rho.twist(p)
        return rho

    @property
    def n(self) -> int:
        return len(self.perm)

    def __call__(self, i: int) -> int:
        return self.perm[i - 1]

    def __str__(self):
        return ",".join(map(str, self.perm))

    @property
    def inverse(self) -> tuple[int, ...]:
        return self._inv

    def at(self, position: int) -> int:
        """The element ``σ^{-1}(position)``."""
        return self._inv[position - 1]

    @property
    def order(self) -> tuple[int, ...]:
        """Vertices from σ-smallest to σ-largest."""
        return self.inverse

    def successor(self, i: int) -> int | None:
        """``i_{σ+}``: the element right after ``i`` in the σ-order."""
        p = self(i)
        return None if p == self.n else self.at(p + 1)

    def upset(self, i: int) -> frozenset[int]:
        return frozenset(self._inv[self.perm[i - 1] - 1 :])

    def strict_upset(self, i: int) -> frozenset[int]:
        return frozenset(self._inv[self.perm[i - 1] :])

    def twist(self, p: int) -> "SigmaOrder":
        """``σ_p σ``: swap the elements at positions ``p`` and ``p+1`` of the order."""
        if not 1 <= p < self.n:
            raise PermutationError(f"position {p} outside 1..{self.n - 1}")
        perm, inv = list(self.perm), list(self._inv)
        x, y = inv[p - 1], inv[p]
        perm[x - 1], perm[y - 1] = p + 1, p
        inv[p - 1], inv[p] = y, x
        out = object.__new__(SigmaOrder)
        object.__setattr__(out, "perm", tuple(perm))
        object.__setattr__(out, "_inv", tuple(inv))
        return out

    def compose(self, other: "SigmaOrder") -> "SigmaOrder":
        """``self ∘ other``."""
        return SigmaOrder(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inv(self) -> "SigmaOrder":
        return SigmaOrder(self.inverse)

    def inversion_distance(self, other: "SigmaOrder") -> int:
        """Pairs ordered one way by ``self`` and the other way by ``other``."""
        n = self.n
        return sum(
            1
            for x in range(1, n + 1)
            for y in range(1, n + 1)
            if self(x) < self(y) and other(y) < other(x)
        )

    def restrict(self, vertices: Iterable[int]) -> "SigmaOrder":
        """Induced order on ``sorted(vertices)``, renumbered ``1..m``."""
        vs = sorted(vertices)
        ranks = sorted(self(v) for v in vs)
        return SigmaOrder(tuple(ranks.index(self(v)) + 1 for v in vs))


def _check_sigma(alg: Algebra, sigma: SigmaOrder):
    if sigma.n != alg.n:
        raise PermutationError(f"permutation of {sigma.n} letters for an algebra with {alg.n} vertices")


# -- standard and costandard modules ------------------------------------------------


def _trace_in_projective(alg: Algebra, i: int, vertices: frozenset[int]) -> Subrepresentation:
    key = ("trace", i, vertices)
    if key not in alg._cache:
        alg._cache[key] = trace(projective(alg, i), vertices)
    return alg._cache[key]


def standard_module(alg: Algebra, sigma: SigmaOrder, i: int) -> Representation:
    """``Δ^σ(i) = P(i) / tr_{i_{σ+}}(P(i))``."""
    _check_sigma(alg, sigma)
    above = sigma.strict_upset(i)
    key = ("standard", i, above)
    if key not in alg._cache:
        alg._cache[key] = quotient(projective(alg, i), _trace_in_projective(alg, i, above))[0]
    return alg._cache[key]


def costandard_module(alg: Algebra, sigma: SigmaOrder, i: int) -> Representation:
    """``∇^σ(i) = D Δ^σ_{A^op}(i)``, the largest submodule of ``I(i)`` with factors at or below ``i``."""
    _check_sigma(alg, sigma)
    key = ("costandard", i, sigma.strict_upset(i))
    if key not in alg._cache:
        alg._cache[key] = dual(standard_module(alg.opposite, sigma, i))
    return alg._cache[key]


def standard_dims(alg: Algebra, sigma: SigmaOrder) -> list[tuple[int, ...]]:
    return [standard_module(alg, sigma, i).dims for i in range(1, alg.n + 1)]


def _sub_dims(alg, i, vertices) -> tuple[int, ...]:
    if not vertices:
        return (0,) * alg.n
    return _trace_in_projective(alg, i, frozenset(vertices)).dims


def trace_chain(alg: Algebra, sigma: SigmaOrder, i: int) -> list[tuple[int, Representation]]:
    """Layers ``tr_k P(i) / tr_{k_{σ+}} P(i)`` for ``k`` from ``i`` upwards in the σ-order."""
    _check_sigma(alg, sigma)
    p = projective(alg, i)
    f = alg.field
    out = []
    for pos in range(sigma(i), alg.n + 1):
        k = sigma.at(pos)
        big = _trace_in_projective(alg, i, sigma.upset(k))
        small_set = sigma.strict_upset(k)
        big_rep = big.to_representation()
        if small_set:
            small = _trace_in_projective(alg, i, small_set)
            coords = [
                f.solve(big.bases[v], small.bases[v]) if small.bases[v].shape[1] else f.zeros((big.bases[v].shape[1], 0))
                for v in range(alg.n)
            ]
            inner = Subrepresentation(big_rep, coords, check=False)
        else:
            inner = Subrepresentation(big_rep, [f.zeros((d, 0)) for d in big_rep.dims], check=False)
        out.append((k, quotient(big_rep, inner)[0]))
    return out


@dataclass
class FiltrationResult:
    ok: bool
    multiplicities: dict[int, tuple[int, ...]] = field(default_factory=dict)
    failure: dict | None = None

    def __bool__(self):
        return self.ok


def _condition_a(alg: Algebra, sigma: SigmaOrder) -> dict | None:
    for i in range(1, alg.n + 1):
        m = standard_module(alg, sigma, i).dims[i - 1]
        if m != 1:
            return {"condition": "a", "index": i, "multiplicity": m}
    return None


def has_delta_filtration(alg: Algebra, sigma: SigmaOrder) -> FiltrationResult:
    """Decide whether ``A_A`` has a Δ^σ-filtration from trace-chain layer dimensions.

    Every layer at index ``k`` receives a canonical surjection from
    ``Δ^σ(k)^m`` with ``m`` its dimension at ``k``, so the layer is
    ``Δ^σ(k)^m`` exactly when its dimension vector is ``m · dim Δ^σ(k)``.
    Requires ``[Δ^σ(k):S(k)] = 1`` for all ``k``; otherwise the result carries
    that failure.
    """
    _check_sigma(alg, sigma)
    bad = _condition_a(alg, sigma)
    if bad is not None:
        return FiltrationResult(False, {}, bad)
    n = alg.n
    delta = {k: standard_module(alg, sigma, k).dims for k in range(1, n + 1)}
    mults: dict[int, tuple[int, ...]] = {}
    for i in range(1, n + 1):
        row = [0] * n
        for pos in range(sigma(i), n + 1):
            k = sigma.at(pos)
            upper = _sub_dims(alg, i, sigma.upset(k)) if pos > sigma(i) else projective(alg, i).dims
            lower = _sub_dims(alg, i, sigma.strict_upset(k))
            layer = tuple(a - b for a, b in zip(upper, lower))
            m = layer[k - 1]
            expected = tuple(m * d for d in delta[k])
            if layer != expected:
                return FiltrationResult(
                    False,
                    {},
                    {"condition": "b", "i": i, "k": k, "layer_dims": layer, "expected_dims": expected},
                )
            row[k - 1] = m
        mults[i] = tuple(row)
    return FiltrationResult(True, mults, None)


def has_nabla_filtration(alg: Algebra, sigma: SigmaOrder) -> bool:
    """Whether ``D(_A A)`` has a ∇^σ-filtration (Δ-filtration of the opposite regular module)."""
    return has_delta_filtration(alg.opposite, sigma).ok


@dataclass
class QhReport:
    sigma: SigmaOrder
    verdict: bool
    standard_dims: list[tuple[int, ...]]
    multiplicities: dict[int, tuple[int, ...]] | None = None
    failure: dict | None = None

    def __bool__(self):
        return self.verdict

    def to_dict(self) -> dict:
        out = {
            "perm": list(self.sigma.perm),
            "verdict": self.verdict,
            "standard_dims": {str(i + 1): list(d) for i, d in enumerate(self.standard_dims)},
        }
        if self.multiplicities is not None:
            out["delta_multiplicities"] = {str(i): list(m) for i, m in sorted(self.multiplicities.items())}
        if self.failure is not None:
            out["failure"] = {k: (list(v) if isinstance(v, tuple) else v) for k, v in self.failure.items()}
        return out


def is_quasi_hereditary(alg: Algebra, sigma: SigmaOrder) -> QhReport:
    """``[Δ^σ(i):S(i)] = 1`` for all ``i`` (checked first) and ``A_A`` Δ^σ-filtered."""
    _check_sigma(alg, sigma)
    key = ("qh", sigma.perm)
    if key in alg._cache:
        return alg._cache[key]
    dims = standard_dims(alg, sigma)
    res = has_delta_filtration(alg, sigma)
    if res.ok:
        report = QhReport(sigma, True, dims, res.multiplicities, None)
    else:
        report = QhReport(sigma, False, dims, None, res.failure)
    alg._cache[key] = report
    return report


def delta_filtration_multiplicities_k0(m: Representation, sigma: SigmaOrder) -> tuple[int, ...]:
    """Coordinates of ``[M]`` in the basis ``{[Δ^σ(k)]}`` of the Grothendieck group.

    Negative entries rule out a Δ-filtration; nonnegative ones do not prove one.
    """
    alg = m.algebra
    _check_sigma(alg, sigma)
    bad = _condition_a(alg, sigma)
    if bad is not None:
        raise ValueError(f"[Δ({bad['index']}):S({bad['index']})] = {bad['multiplicity']} != 1")
    n = alg.n
    remaining = [Fraction(d) for d in m.dims]
    coeffs = [0] * n
    # unitriangular: peel off standard modules from the σ-largest index downwards
    for pos in range(n, 0, -1):
        k = sigma.at(pos)
        c = remaining[k - 1]
        coeffs[k - 1] = c
        if c:
            delta = standard_module(alg, sigma, k).dims
            remaining = [r - c * d for r, d in zip(remaining, delta)]
    return tuple(int(c) for c in coeffs)


# -- heredity chain ---------------------------------------------------------------


def _is_projective(mod: Representation) -> bool:
    if mod.dim == 0:
        return True
    p0, _, _ = projective_cover(mod)
    return p0.dim == mod.dim


def heredity_chain_check(alg: Algebra, sigma: SigmaOrder) -> bool:
    """Quasi-heredity decided from the ideal chain ``J_t = A (Σ_{σ(j) ≥ t} e_j) A``.

    For each position ``t`` with ``x = σ^{-1}(t)`` and ``B = A/J_{t+1}``:
    ``B e_x B`` must be a projective right ``B``-module and
    ``e_x rad(B) e_x = 0``.  At ``t = n`` this is the condition on ``A``.
    """
    _check_sigma(alg, sigma)
    n = alg.n
    for t in range(1, n + 1):
        x = sigma.at(t)
        above = frozenset(sigma.at(s) for s in range(t + 1, n + 1))
        if not _heredity_step(alg, x, above):
            return False
    return True


def _heredity_step(alg: Algebra, x: int, above: frozenset[int]) -> bool:
    """In ``B = A/AεA`` (ε over ``above``): ``e_x B e_x`` is one-dimensional and ``B e_x B`` is projective."""
    key = ("heredity_step", x, above)
    if key not in alg._cache:
        b = quotient_by_vertices(alg, above) if above else alg
        xb = b.vertex_labels.index(alg.vertex_labels[x - 1]) + 1
        ok = len(b.block(xb, xb)) == 1
        if ok:
            ok = _is_projective(trace(regular_module(b), [xb]).to_representation())
        alg._cache[key] = ok
    return alg._cache[key]


def inherited_structures(alg: Algebra, sigma: SigmaOrder, i: int):
    """Corner ``εAε`` (``ε`` over the σ-upset of ``i``) and quotient ``A/AεA`` with induced orders.

    Returns ``((corner_algebra, order), (quotient_algebra or None, order or None))``;
    the quotient is ``None`` when ``i`` is σ-minimal (it is the zero algebra).
    """
    up = sigma.upset(i)
    c = corner(alg, up)
    c_sigma = sigma.restrict(up)
    rest = [j for j in range(1, alg.n + 1) if j not in up]
    if not rest:
        return (c, c_sigma), (None, None)
    q = quotient_by_vertices(alg, up)
    labels = [alg.vertex_labels.index(lbl) + 1 for lbl in q.vertex_labels]
    q_sigma = sigma.restrict(labels)
    return (c, c_sigma), (q, q_sigma)
