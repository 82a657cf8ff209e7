"""Native text format for diagrams, plus PD, Gauss and DT export.

Native grammar::

    # id = <name>              optional, anywhere before the header
    link <crossings> <edges>   or: tangle <crossings> <edges>
    X e0 e1 e2 e3              one line per crossing, slots counterclockwise
    ends NW=e NE=e SE=e SW=e   tangles only

``edges`` counts distinct edge identifiers plus crossingless loops, so the
number of free loops is ``edges - 2c`` for a link and ``edges - 2c - 2``
for a tangle.
"""

from __future__ import annotations

import re
from collections import Counter
from pathlib import Path

from linkdensity.diagram.core import END_NAMES, LinkDiagram, Tangle, require_valid
from linkdensity.errors import DomainError

_ID_RE = re.compile(r"#\s*id\s*=\s*(.*\S)\s*$")


def _distinct_labels(obj) -> int:
    return len(obj.edge_labels())


def dumps(obj: LinkDiagram | Tangle) -> str:
    kind = "tangle" if isinstance(obj, Tangle) else "link"
    lines = []
    if obj.name:
        lines.append(f"# id = {obj.name}")
    lines.append(f"{kind} {obj.n_crossings} {_distinct_labels(obj) + obj.free_loops}")
    for x in obj.crossings:
        lines.append("X " + " ".join(str(e) for e in x))
    if isinstance(obj, Tangle):
        lines.append("ends " + " ".join(f"{k}={e}" for k, e in zip(END_NAMES, obj.ends)))
    return "\n".join(lines) + "\n"


def loads(text: str) -> LinkDiagram | Tangle:
    name = None
    header = None
    crossings: list[tuple[int, ...]] = []
    ends = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _ID_RE.match(line)
            if m and name is None:
                name = m.group(1)
            continue
        parts = line.split()
        try:
            if header is None:
                if parts[0] not in ("link", "tangle") or len(parts) != 3:
                    raise DomainError(f"line {lineno}: expected 'link <c> <edges>' or 'tangle <c> <edges>'")
                header = (parts[0], int(parts[1]), int(parts[2]))
            elif parts[0] == "X":
                if len(parts) != 5:
                    raise DomainError(f"line {lineno}: a crossing needs exactly 4 edge identifiers")
                crossings.append(tuple(int(p) for p in parts[1:]))
            elif parts[0] == "ends":
                if header[0] != "tangle" or ends is not None:
                    raise DomainError(f"line {lineno}: 'ends' only allowed once, in a tangle")
                got = dict(p.split("=", 1) for p in parts[1:])
                if sorted(got) != sorted(END_NAMES) or len(parts) != 5:
                    raise DomainError(f"line {lineno}: ends must give NW, NE, SE, SW once each")
                ends = tuple(int(got[k]) for k in END_NAMES)
            else:
                raise DomainError(f"line {lineno}: unexpected record {parts[0]!r}")
        except ValueError as exc:
            if isinstance(exc, DomainError):
                raise
            raise DomainError(f"line {lineno}: {exc}") from None
    if header is None:
        raise DomainError("missing header line")
    kind, c, edges = header
    if len(crossings) != c:
        raise DomainError(f"header declares {c} crossings, found {len(crossings)}")
    labels = [e for x in crossings for e in x] + list(ends or ())
    if any(e <= 0 for e in labels):
        raise DomainError("edge identifiers must be positive integers")
    bad = {e: n for e, n in Counter(labels).items() if n != 2}
    if bad:
        raise DomainError(f"edge identifiers must appear exactly twice: {bad}")
    loops = edges - len(set(labels))
    if loops < 0:
        raise DomainError(f"header declares {edges} edges but {len(set(labels))} identifiers are used")
    if kind == "tangle":
        if ends is None:
            raise DomainError("tangle is missing its 'ends' line")
        obj = Tangle(crossings, ends, loops, name=name)
    else:
        obj = LinkDiagram(crossings, loops, name=name)
    require_valid(obj)
    return obj


def write_diagram(obj: LinkDiagram | Tangle, path: str | Path) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")


def read_diagram(path: str | Path) -> LinkDiagram | Tangle:
    return loads(Path(path).read_text(encoding="utf-8"))


def _require_link(D, what: str) -> LinkDiagram:
    if not isinstance(D, LinkDiagram):
        raise DomainError(f"{what} export needs a closed link diagram, not a tangle")
    if D.free_loops:
        raise DomainError(f"{what} cannot represent crossingless components")
    return D


def _oriented_components(D: LinkDiagram) -> list[list[int]]:
    return D.strand_cycles()


def to_pd(D: LinkDiagram) -> str:
    """Oriented PD code: X[i,j,k,l] starts at the incoming under-strand, counterclockwise.

    Edges are renumbered 1..2c consecutively along each component.
    """
    _require_link(D, "PD")
    comps = _oriented_components(D)
    label = {}
    base = 1
    for cyc in comps:
        L = len(cyc)
        for i, d in enumerate(cyc):
            label[d] = base + i
            nxt = base + (i + 1) % L
            label[d - d % 4 + (d + 2) % 4] = nxt
        base += L
    entered = {d for cyc in comps for d in cyc}
    parts = []
    for c in range(D.n_crossings):
        entered_under = 4 * c if 4 * c in entered else 4 * c + 2
        s = entered_under % 4
        ordered = [label[4 * c + (s + j) % 4] for j in range(4)]
        parts.append("X[" + ",".join(map(str, ordered)) + "]")
    return "PD[" + ",".join(parts) + "]"


def to_gauss(D: LinkDiagram) -> str:
    """Gauss code: crossing number per visit, positive over, negative under."""
    _require_link(D, "Gauss")
    comps = _oriented_components(D)
    words = []
    for cyc in comps:
        words.append([(d // 4 + 1) * (1 if d % 2 else -1) for d in cyc])
    if len(words) == 1:
        return "GaussCode[" + ", ".join(map(str, words[0])) + "]"
    return "GaussCode[" + ", ".join("{" + ", ".join(map(str, w)) + "}" for w in words) + "]"


def to_dt(D: LinkDiagram) -> str:
    """Dowker-Thistlethwaite code of a knot diagram.

    Visits are numbered 1..2c along the knot. For each odd label the paired
    even label is listed, negated when the even visit passes over.
    """
    _require_link(D, "DT")
    comps = _oriented_components(D)
    if len(comps) != 1:
        raise DomainError("DT code is defined for knots only")
    visits: dict[int, list[tuple[int, bool]]] = {}
    for i, d in enumerate(comps[0], 1):
        visits.setdefault(d // 4, []).append((i, d % 2 == 1))
    pairs = {}
    for (i, over_i), (j, over_j) in visits.values():
        if i % 2 == j % 2:
            raise DomainError("visit labels at a crossing have equal parity; not a planar knot diagram")
        odd, (even, even_over) = (i, (j, over_j)) if i % 2 else (j, (i, over_i))
        pairs[odd] = -even if even_over else even
    return "DTCode[" + ", ".join(str(pairs[o]) for o in sorted(pairs)) + "]"


EXPORTERS = {"pd": to_pd, "gauss": to_gauss, "dt": to_dt}


def export(obj: LinkDiagram | Tangle, fmt: str) -> str:
    if fmt == "native":
        return dumps(obj)
    if fmt not in EXPORTERS:
        raise DomainError(f"unknown format {fmt!r}")
    return EXPORTERS[fmt](obj) + "\n"
