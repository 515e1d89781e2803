"""Neighbor Hom/Ext¹ invariants, the twistability test and the neighbor biquiver.

For a total order σ and a position ``p`` write ``x = σ^{-1}(p)`` and
``y = σ^{-1}(p+1)``.  The four neighbor invariants at ``p`` are

* ``H  = dim Hom(Δ(x), Δ(y))``,  ``E  = dim Ext¹(Δ(x), Δ(y))``
* ``H̄ = dim Hom(∇(y), ∇(x))``,  ``Ē = dim Ext¹(∇(y), ∇(x))``

all computed directly from the modules.  Swapping ``x`` and ``y`` in the
order (``σ_p σ``) keeps quasi-heredity exactly when ``E = 0`` and ``Δ(y)``
contains ``Δ(x)^H``, or ``Ē = 0`` and ``∇(y)`` maps onto ``∇(x)^H̄``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bqa import Algebra
from .qh import (
    SigmaOrder,
    _check_sigma,
    costandard_module,
    has_delta_filtration,
    is_quasi_hereditary,
    standard_module,
)
from .rep import ext1_dim, hom_dim, trace

__all__ = [
    "NotQuasiHereditaryError",
    "NeighborInvariants",
    "TwistVerdict",
    "Biquiver",
    "neighbor_invariants",
    "twistable",
    "biquiver",
]


class NotQuasiHereditaryError(ValueError):
    def __init__(self, sigma: SigmaOrder, what: str = "not quasi-hereditary"):
        super().__init__(f"{what}: σ = {sigma}")
        self.sigma = sigma


@dataclass
class NeighborInvariants:
    """Per-position invariants; index ``p - 1`` holds position ``p``.

    The ``*_formula`` tuples hold the composition and filtration
    multiplicities that should match the Hom/Ext dimensions when the order is
    quasi-hereditary; they are ``None`` otherwise.
    """

    sigma: SigmaOrder
    H: tuple[int, ...]
    E: tuple[int, ...]
    Hbar: tuple[int, ...]
    Ebar: tuple[int, ...]
    qh: bool
    H_formula: tuple[int, ...] | None = None
    E_formula: tuple[int, ...] | None = None
    Hbar_formula: tuple[int, ...] | None = None
    Ebar_formula: tuple[int, ...] | None = None

    def pair(self, p: int) -> tuple[int, int]:
        return self.sigma.at(p), self.sigma.at(p + 1)

    @property
    def duality_holds(self) -> bool | None:
        """``H = Ē`` and ``E = H̄`` at every position (only meaningful when QH)."""
        if not self.qh:
            return None
        return self.H == self.Ebar and self.E == self.Hbar

    @property
    def formulas_hold(self) -> bool | None:
        if not self.qh:
            return None
        return (
            self.H == self.H_formula
            and self.E == self.E_formula
            and self.Hbar == self.Hbar_formula
            and self.Ebar == self.Ebar_formula
        )

    def to_dict(self) -> dict:
        out = {
            "perm": list(self.sigma.perm),
            "quasi_hereditary": self.qh,
            "H": list(self.H),
            "E": list(self.E),
            "Hbar": list(self.Hbar),
            "Ebar": list(self.Ebar),
        }
        if self.qh:
            out["duality_holds"] = self.duality_holds
            out["formulas_hold"] = self.formulas_hold
        return out


def neighbor_invariants(alg: Algebra, sigma: SigmaOrder) -> NeighborInvariants:
    _check_sigma(alg, sigma)
    key = ("neighbors", sigma.perm)
    if key in alg._cache:
        return alg._cache[key]
    n = alg.n
    H, E, Hb, Eb = [], [], [], []
    for p in range(1, n):
        x, y = sigma.at(p), sigma.at(p + 1)
        dx, dy = standard_module(alg, sigma, x), standard_module(alg, sigma, y)
        nx, ny = costandard_module(alg, sigma, x), costandard_module(alg, sigma, y)
        H.append(hom_dim(dx, dy))
        E.append(ext1_dim(dx, dy))
        Hb.append(hom_dim(ny, nx))
        Eb.append(ext1_dim(ny, nx))
    qh = is_quasi_hereditary(alg, sigma).verdict
    inv = NeighborInvariants(sigma, tuple(H), tuple(E), tuple(Hb), tuple(Eb), qh)
    if qh:
        mults = is_quasi_hereditary(alg, sigma).multiplicities
        # a Δ-filtration of the opposite regular module is a ∇-filtration of D(A)
        op_mults = has_delta_filtration(alg.opposite, sigma).multiplicities
        hf, ef, hbf, ebf = [], [], [], []
        for p in range(1, n):
            x, y = sigma.at(p), sigma.at(p + 1)
            hf.append(standard_module(alg, sigma, y).dims[x - 1])
            ef.append(mults[x][y - 1])
            hbf.append(costandard_module(alg, sigma, y).dims[x - 1])
            ebf.append(op_mults[x][y - 1])
        inv.H_formula, inv.E_formula = tuple(hf), tuple(ef)
        inv.Hbar_formula, inv.Ebar_formula = tuple(hbf), tuple(ebf)
    alg._cache[key] = inv
    return inv


@dataclass
class TwistVerdict:
    sigma: SigmaOrder
    p: int
    verdict: bool
    #: conditions that hold, a subset of ("E", "Ebar")
    conditions: tuple[str, ...] = ()

    def __bool__(self):
        return self.verdict

    @property
    def condition(self) -> str | None:
        """The first condition that fired, ``"E"`` before ``"Ebar"``."""
        return self.conditions[0] if self.conditions else None

    @property
    def target(self) -> SigmaOrder:
        return self.sigma.twist(self.p)

    def to_dict(self) -> dict:
        return {
            "perm": list(self.sigma.perm),
            "position": self.p,
            "target": list(self.target.perm),
            "verdict": self.verdict,
            "conditions": list(self.conditions),
        }


def _submodule_condition(alg: Algebra, sigma: SigmaOrder, x: int, y: int, mult: int) -> bool:
    """Whether ``Δ(y)`` contains ``Δ(x)^mult``, read off from the trace of ``P(x)`` in ``Δ(y)``.

    Every map ``P(x) -> Δ(y)`` factors through ``Δ(x)``, so ``Δ(x)^mult``
    maps onto that trace and the two agree iff their dimensions do.
    """
    if mult == 0:
        return True
    tr = trace(standard_module(alg, sigma, y), [x])
    want = tuple(mult * d for d in standard_module(alg, sigma, x).dims)
    return tr.dims == want


def twistable(alg: Algebra, sigma: SigmaOrder, p: int) -> TwistVerdict:
    """Decide whether ``σ_p σ`` is again quasi-hereditary, given that σ is."""
    _check_sigma(alg, sigma)
    if not 1 <= p < alg.n:
        raise ValueError(f"position {p} outside 1..{alg.n - 1}")
    if not is_quasi_hereditary(alg, sigma).verdict:
        raise NotQuasiHereditaryError(sigma)
    inv = neighbor_invariants(alg, sigma)
    x, y = inv.pair(p)
    fired = []
    if inv.E[p - 1] == 0 and _submodule_condition(alg, sigma, x, y, inv.H[p - 1]):
        fired.append("E")
    # the ∇-side factor condition is the Δ-side submodule condition over A^op
    if inv.Ebar[p - 1] == 0 and _submodule_condition(alg.opposite, sigma, x, y, inv.Hbar[p - 1]):
        fired.append("Ebar")
    return TwistVerdict(sigma, p, bool(fired), tuple(fired))


@dataclass
class Biquiver:
    """Neighbor Hom-Ext¹ biquiver of the standard modules for σ.

    ``solid`` holds pairs ``(x, y)`` of σ-neighbors with ``Ext¹(Δ(x), Δ(y)) ≠ 0``;
    ``dotted`` those with ``Hom(Δ(x), Δ(y)) ≠ 0``.
    """

    sigma: SigmaOrder
    order: tuple[int, ...]
    standard_dims: dict[int, tuple[int, ...]]
    solid: tuple[tuple[int, int], ...]
    dotted: tuple[tuple[int, int], ...]
    qh: bool
    warnings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "perm": list(self.sigma.perm),
            "order": list(self.order),
            "standard_dims": {str(i): list(self.standard_dims[i]) for i in self.order},
            "solid": [list(e) for e in self.solid],
            "dotted": [list(e) for e in self.dotted],
            "quasi_hereditary": self.qh,
            "warnings": list(self.warnings),
        }

    def to_dot(self, name: str = "biquiver") -> str:
        lines = [f"digraph {name} {{", "  rankdir=LR;"]
        lines.append(f'  label="sigma = {self.sigma}";')
        for i in self.order:
            dims = ",".join(map(str, self.standard_dims[i]))
            lines.append(f'  v{i} [label="{i}\\n({dims})"];')
        for x, y in self.solid:
            lines.append(f"  v{x} -> v{y} [style=solid];")
        for x, y in self.dotted:
            lines.append(f"  v{x} -> v{y} [style=dotted];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def biquiver(alg: Algebra, sigma: SigmaOrder) -> Biquiver:
    inv = neighbor_invariants(alg, sigma)
    order = sigma.order
    solid = tuple(inv.pair(p) for p in range(1, alg.n) if inv.E[p - 1])
    dotted = tuple(inv.pair(p) for p in range(1, alg.n) if inv.H[p - 1])
    dims = {i: standard_module(alg, sigma, i).dims for i in order}
    warnings = []
    if not inv.qh:
        warnings.append("order is not quasi-hereditary; the multiplicity formulas do not apply")
    return Biquiver(sigma, order, dims, solid, dotted, inv.qh, warnings)

