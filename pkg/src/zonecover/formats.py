"""Line-oriented text formats: ``pcube``, ``graph``, ``poset``, ``lines``, ``hyperplanes``.

Every format starts with a header line naming it, ``#`` starts a comment,
blank lines are ignored. Parsers raise :class:`FormatError` (or a subclass)
on anything malformed so the CLI can map it to exit code 2.
"""

from __future__ import annotations

from fractions import Fraction

from .arrangement import Arrangement
from .errors import BadParameters, FormatError, NotAPoset
from .graph import SimpleGraph
from .pcube import PartialCube, from_labels
from .poset import Poset

KINDS = ("pcube", "graph", "poset", "lines", "hyperplanes")


def _rows(text: str) -> list:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise FormatError("input is empty")
    return rows


def _int(tok: str, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"{what}: expected an integer, got {tok!r}") from None


def _rational(tok: str) -> Fraction:
    try:
        if "/" in tok:
            p, q = tok.split("/")
            return Fraction(int(p), int(q))
        return Fraction(int(tok))
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"expected an integer or p/q rational, got {tok!r}") from None


def _header(rows, kind: str, nargs: int) -> list:
    head = rows[0]
    if head[0] != kind:
        raise FormatError(f"expected a {kind!r} header, got {head[0]!r}")
    if len(head) != nargs + 1:
        raise FormatError(f"{kind} header takes {nargs} numbers")
    vals = [_int(t, f"{kind} header") for t in head[1:]]
    if any(v < 0 for v in vals):
        raise FormatError(f"{kind} header has a negative count")
    return vals


def _body(rows, count: int, width: int, kind: str) -> list:
    body = rows[1:]
    if len(body) != count:
        raise FormatError(f"{kind}: header promises {count} lines, found {len(body)}")
    for r in body:
        if len(r) != width:
            raise FormatError(f"{kind}: expected {width} fields, got {' '.join(r)!r}")
    return body


def sniff(text: str) -> str:
    kind = _rows(text)[0][0]
    if kind not in KINDS:
        raise FormatError(f"unknown format header {kind!r}")
    return kind


def parse_pcube(text: str) -> PartialCube:
    rows = _rows(text)
    n, dim = _header(rows, "pcube", 2)
    words = [r[0] for r in _body(rows, n, 1, "pcube")]
    for w in words:
        if len(w) != dim:
            raise FormatError(f"word {w!r} is not {dim} characters long")
    return from_labels(words)


def parse_graph(text: str) -> SimpleGraph:
    rows = _rows(text)
    n, m = _header(rows, "graph", 2)
    edges = [(_int(u, "graph edge"), _int(v, "graph edge")) for u, v in _body(rows, m, 2, "graph")]
    try:
        return SimpleGraph(n, tuple(edges))
    except BadParameters as exc:
        raise FormatError(str(exc)) from None


def parse_poset(text: str) -> Poset:
    """Cover pairs ``a b`` (a < b); pairs implied by others are tolerated and reduced."""
    rows = _rows(text)
    n, k = _header(rows, "poset", 2)
    pairs = [(_int(a, "poset pair"), _int(b, "poset pair")) for a, b in _body(rows, k, 2, "poset")]
    try:
        return Poset.from_relations(n, pairs)
    except NotAPoset as exc:
        raise FormatError(str(exc)) from None


def parse_lines(text: str) -> Arrangement:
    rows = _rows(text)
    (n,) = _header(rows, "lines", 1)
    triples = [tuple(_rational(t) for t in r) for r in _body(rows, n, 3, "lines")]
    return Arrangement.lines(triples)


def parse_hyperplanes(text: str) -> Arrangement:
    """Each line holds ``a_1 .. a_d c`` for the hyperplane ``a.x = c``."""
    rows = _rows(text)
    n, d = _header(rows, "hyperplanes", 2)
    if d < 1:
        raise FormatError("hyperplanes need d >= 1")
    hs = []
    for r in _body(rows, n, d + 1, "hyperplanes"):
        vals = [_rational(t) for t in r]
        hs.append((tuple(vals[:d]), vals[d]))
    return Arrangement(d, tuple(hs))


def parse_arrangement(text: str) -> Arrangement:
    return parse_lines(text) if sniff(text) == "lines" else parse_hyperplanes(text)


def graph_to_text(g: SimpleGraph) -> str:
    lines = [f"graph {g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def arrangement_to_text(a: Arrangement) -> str:
    if a.d == 2:
        lines = [f"lines {a.n}"]
        lines.extend(f"{_fmt(p)} {_fmt(q)} {_fmt(c)}" for (p, q), c in a.hyperplanes)
    else:
        lines = [f"hyperplanes {a.n} {a.d}"]
        lines.extend(" ".join(_fmt(x) for x in (*normal, c)) for normal, c in a.hyperplanes)
    return "\n".join(lines) + "\n"
