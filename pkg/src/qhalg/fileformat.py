"""Line-oriented text format for bound quiver algebras.

::

    # comments run to the end of the line
    algebra paper_example
    vertices 4
    arrow a 1 2
    arrow b 1 3
    arrow c 2 3
    arrow d 3 4
    relation a*c*d - b*d
    nilpotency 4        # optional
    field Q             # optional: Q (default) or Fp <prime>

A relation is a ``+``/``-`` separated list of terms ``[<int>*]<label>(*<label>)*``.
Errors carry ``source:line:column``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .bqa import AlgebraError, Arrow, BoundQuiverAlgebra, Quiver, Relation, build_algebra
from .exactla import QQ, Field, PrimeField

__all__ = [
    "AlgebraFileError",
    "AlgebraFile",
    "parse_algebra",
    "render",
    "load_algebra",
    "paper_example_text",
]

LABEL_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<label>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[*+-])|(?P<bad>\S))")


class AlgebraFileError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None, source: str = "<input>"):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        where = source
        if line is not None:
            where += f":{line}"
            if column is not None:
                where += f":{column}"
        super().__init__(f"{where}: {message}")


@dataclass
class AlgebraFile:
    name: str = ""
    vertices: int | None = None
    arrows: list[Arrow] = field(default_factory=list)
    relations: list[Relation] = field(default_factory=list)
    nilpotency: int | None = None
    #: ``"Q"`` or ``"Fp <prime>"``
    field_spec: str = "Q"

    def quiver(self) -> Quiver:
        return Quiver(self.vertices or 0, tuple(self.arrows))

    def ground_field(self) -> Field:
        if self.field_spec == "Q":
            return QQ
        return PrimeField(int(self.field_spec.split()[1]))

    def build(self, over: Field | None = None) -> BoundQuiverAlgebra:
        """Build the algebra over ``over`` (default: the declared field)."""
        return build_algebra(
            self.quiver(), self.relations, self.nilpotency, field=over or self.ground_field(), name=self.name
        )

    def structure(self) -> tuple:
        """Hashable content used for round-trip comparisons."""
        return (
            self.name,
            self.vertices,
            tuple(self.arrows),
            tuple(self.relations),
            self.nilpotency,
            self.field_spec,
        )


def _strip_comment(line: str) -> str:
    k = line.find("#")
    return line if k < 0 else line[:k]


def _parse_relation(text: str, offset: int, lineno: int, quiver: Quiver, source: str) -> Relation:
    """Parse ``text`` (starting at 1-based column ``offset``) into a relation."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            break
        kind = m.lastgroup
        col = offset + m.start(kind)
        if kind == "bad":
            raise AlgebraFileError(f"unexpected character {m.group(kind)!r}", lineno, col, source)
        tokens.append((kind, m.group(kind), col))
        pos = m.end()

    def err(msg, col):
        return AlgebraFileError(msg, lineno, col, source)

    if not tokens:
        raise err("empty relation", offset)
    terms = []
    k = 0
    first = True
    while k < len(tokens):
        sign = 1
        kind, val, col = tokens[k]
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            k += 1
        elif not first:
            raise err(f"expected '+' or '-' before {val!r}", col)
        first = False
        if k >= len(tokens):
            raise err("dangling sign at end of relation", col)
        coeff = 1
        kind, val, col = tokens[k]
        if kind == "int":
            coeff = int(val)
            k += 1
            if k >= len(tokens) or tokens[k][1] != "*":
                raise err("expected '*' after coefficient", col)
            k += 1
        labels, cols = [], []
        while True:
            if k >= len(tokens) or tokens[k][0] != "label":
                where = tokens[k][2] if k < len(tokens) else offset + len(text.rstrip())
                raise err("expected an arrow label", where)
            kind, val, col = tokens[k]
            try:
                quiver.arrow(val)
            except AlgebraError:
                raise err(f"unknown arrow label {val!r}", col) from None
            labels.append(val)
            cols.append(col)
            k += 1
            if k < len(tokens) and tokens[k][1] == "*":
                k += 1
                continue
            break
        try:
            quiver.endpoints(labels)
        except AlgebraError as exc:
            raise err(str(exc), cols[0]) from None
        if len(labels) < 2:
            raise err(f"non-admissible relation: term {labels[0]} has length 1 < 2", cols[0])
        terms.append((Fraction(sign * coeff), tuple(labels)))
    rel = Relation(tuple(terms))
    try:
        rel.validate(quiver)
    except AlgebraError as exc:
        raise err(str(exc), offset) from None
    return rel


def parse_algebra(text: str, source: str = "<input>") -> AlgebraFile:
    out = AlgebraFile()
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw)
        if not body.strip():
            continue
        indent = len(body) - len(body.lstrip())
        parts = body.split()
        key = parts[0]
        col_of = []
        pos = 0
        for p in parts:
            pos = body.index(p, pos)
            col_of.append(pos + 1)
            pos += len(p)

        def err(msg, k=0):
            return AlgebraFileError(msg, lineno, col_of[k] if k < len(col_of) else indent + 1, source)

        def need(count):
            if len(parts) != count + 1:
                raise err(f"'{key}' expects {count} argument{'s' if count != 1 else ''}, got {len(parts) - 1}")

        def integer(k):
            try:
                return int(parts[k])
            except ValueError:
                raise err(f"expected an integer, got {parts[k]!r}", k) from None

        if key in ("algebra", "vertices", "nilpotency", "field") and key in seen:
            raise err(f"duplicate '{key}' declaration")
        if key == "algebra":
            need(1)
            out.name = parts[1]
        elif key == "vertices":
            need(1)
            out.vertices = integer(1)
            if out.vertices < 1:
                raise err("vertex count must be positive", 1)
        elif key == "arrow":
            need(3)
            if out.vertices is None:
                raise err("'arrow' before 'vertices'")
            label = parts[1]
            if not LABEL_RE.fullmatch(label):
                raise err(f"invalid arrow label {label!r}", 1)
            if any(a.label == label for a in out.arrows):
                raise err(f"duplicate arrow label {label!r}", 1)
            src, tgt = integer(2), integer(3)
            for k, v in ((2, src), (3, tgt)):
                if not 1 <= v <= out.vertices:
                    raise err(f"vertex {v} outside 1..{out.vertices}", k)
            out.arrows.append(Arrow(label, src, tgt))
        elif key == "relation":
            if out.vertices is None:
                raise err("'relation' before 'vertices'")
            start = col_of[0] + len(key) - 1
            out.relations.append(_parse_relation(body[start:], start + 1, lineno, out.quiver(), source))
        elif key == "nilpotency":
            need(1)
            out.nilpotency = integer(1)
            if out.nilpotency < 2:
                raise err("nilpotency bound must be at least 2", 1)
        elif key == "field":
            if len(parts) == 2 and parts[1] == "Q":
                out.field_spec = "Q"
            elif len(parts) == 3 and parts[1] == "Fp":
                p = integer(2)
                try:
                    PrimeField(p)
                except ValueError as exc:
                    raise err(str(exc), 2) from None
                out.field_spec = f"Fp {p}"
            else:
                raise err("expected 'field Q' or 'field Fp <prime>'")
        else:
            raise err(f"unknown declaration {key!r}")
        seen.add(key)
    if out.vertices is None:
        raise AlgebraFileError("missing 'vertices' declaration", source=source)
    return out


def _render_relation(rel: Relation) -> str:
    parts = []
    for k, (c, labels) in enumerate(rel.terms):
        if c.denominator != 1:
            raise ValueError(f"coefficient {c} is not an integer")
        mag = abs(c.numerator)
        body = "*".join(labels) if mag == 1 else f"{mag}*" + "*".join(labels)
        if k == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def render(spec: AlgebraFile) -> str:
    lines = []
    if spec.name:
        lines.append(f"algebra {spec.name}")
    lines.append(f"vertices {spec.vertices}")
    for a in spec.arrows:
        lines.append(f"arrow {a.label} {a.source} {a.target}")
    for rel in spec.relations:
        lines.append(f"relation {_render_relation(rel)}")
    if spec.nilpotency is not None:
        lines.append(f"nilpotency {spec.nilpotency}")
    if spec.field_spec != "Q":
        lines.append(f"field {spec.field_spec}")
    return "\n".join(lines) + "\n"


def paper_example_text() -> str:
    return resources.files("qhalg.fixtures").joinpath("paper_example.qha").read_text()


def load_algebra(path: str) -> AlgebraFile:
    """Read an algebra file; ``@paper`` names the bundled example."""
    if path == "@paper":
        return parse_algebra(paper_example_text(), source="@paper")
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise AlgebraFileError(f"cannot read file: {exc.strerror}", source=path) from None
    return parse_algebra(text, source=path)
