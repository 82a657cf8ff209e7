"""Constructors for braids, weaving and pretzel tangles, sums and closures.

Braids are drawn top to bottom with strand positions 1..m left to right.
sigma_i sends the strand entering at top-left (position i) under the one
entering at top-right (position i + 1).
"""

from __future__ import annotations

from typing import Iterable, Literal

from linkdensity.diagram.core import (
    BraidWord,
    Crossing,
    LinkDiagram,
    Tangle,
    glue,
    max_label,
    relabel,
)
from linkdensity.errors import DomainError

ClosureKind = Literal["N", "D"]


def _braid_block(strands: int, letters: Iterable[int], start: int = 1):
    """Crossings of a braid plus the top and bottom labels per position."""
    top = list(range(start, start + strands))
    cur = top[:]
    label = start + strands - 1
    crossings = []
    for g in letters:
        i = abs(g) - 1
        tl, tr = cur[i], cur[i + 1]
        bl, br = label + 1, label + 2
        label += 2
        if g > 0:
            crossings.append(Crossing(tl, bl, br, tr))
        else:
            crossings.append(Crossing(bl, br, tr, tl))
        cur[i], cur[i + 1] = bl, br
    return crossings, top, cur, label


def braid_link(word: BraidWord | tuple[int, Iterable[int]]) -> LinkDiagram:
    """Full closure of a braid, one crossing per letter."""
    if not isinstance(word, BraidWord):
        word = BraidWord(word[0], tuple(word[1]))
    if not word.letters:
        raise DomainError("braid word must be nonempty")
    m = word.strands
    crossings, top, bottom, _ = _braid_block(m, word.letters)
    out, _, loops = glue(crossings, top + bottom, [(i, m + i) for i in range(m)], [])
    return LinkDiagram(out, loops, name=f"braid-{m}-" + ".".join(map(str, word.letters)))


def weaving_word(m: int, n: int) -> tuple[int, ...]:
    one = tuple(i if i % 2 else -i for i in range(1, m))
    return one * n


def weaving_tangle(m: int, n: int) -> Tangle:
    """W_{m,n}: the alternating braid with every strand but the 2nd and 3rd closed.

    Strand 1 closes around the left, strands 4..m as nested arcs on the
    right. The tops of strands 2, 3 become NW, NE and their bottoms SW, SE.
    """
    if m < 3:
        raise DomainError(f"weaving tangle needs m >= 3 strands, got {m}")
    if n < 1:
        raise DomainError(f"weaving tangle needs n >= 1, got {n}")
    crossings, top, bottom, _ = _braid_block(m, weaving_word(m, n))
    dangling = top + bottom
    closed = [0] + list(range(3, m))
    joins = [(i, m + i) for i in closed]
    keep = [1, 2, m + 2, m + 1]
    out, ends, loops = glue(crossings, dangling, joins, keep)
    return Tangle(out, ends, loops, name=f"W{m},{n}")


def twist_column(k: int, start: int = 1):
    """Vertical two-strand twist of ``k`` equal crossings."""
    return _braid_block(2, (1,) * k, start)


def pretzel_tangle(l: int, m: int, n: int) -> Tangle:
    """P_{l,m,n}: three parallel vertical twist regions.

    Adjacent columns are joined at top and bottom. The ends are placed so
    that the D closure is the standard pretzel link P(l, m, n) and the N
    closure is the connected sum of the three (2, k) torus links.
    """
    for v in (l, m, n):
        if v < 1:
            raise DomainError(f"pretzel twist regions need >= 1 crossing, got {(l, m, n)}")
    crossings = []
    dangling = []
    label = 0
    for k in (l, m, n):
        cols, top, bottom, label = twist_column(k, label + 1)
        crossings.extend(cols)
        dangling.extend([top[0], top[1], bottom[0], bottom[1]])
    # dangling index: 4*j + (0 top-left, 1 top-right, 2 bottom-left, 3 bottom-right)
    joins = [(1, 4), (5, 8), (3, 6), (7, 10)]
    keep = [2, 0, 9, 11]
    out, ends, loops = glue(crossings, dangling, joins, keep)
    return Tangle(out, ends, loops, name=f"P{l},{m},{n}")


def trivial_tangle() -> Tangle:
    """Zero-crossing tangle with arcs NW-NE and SW-SE (identity for sums)."""
    return Tangle((), (1, 1, 2, 2), name="0")


def single_crossing_tangle() -> Tangle:
    return Tangle(((1, 2, 3, 4),), (1, 4, 3, 2), name="X")


def conway_sum(*tangles: Tangle) -> Tangle:
    """Left-fold Conway sum: east ends of each summand meet west ends of the next."""
    if not tangles:
        raise DomainError("conway_sum needs at least one tangle")
    acc = tangles[0]
    for t in tangles[1:]:
        acc = _sum2(acc, t)
    return acc


def _sum2(t1: Tangle, t2: Tangle) -> Tangle:
    off = max_label(t1)
    c2 = relabel(t2.crossings, off)
    e2 = tuple(e + off for e in t2.ends)
    dangling = list(t1.ends) + list(e2)
    out, ends, loops = glue(
        list(t1.crossings) + list(c2), dangling, [(1, 4), (2, 7)], [0, 5, 6, 3]
    )
    name = None
    if t1.name and t2.name:
        name = f"{t1.name}+{t2.name}"
    return Tangle(out, ends, t1.free_loops + t2.free_loops + loops, name=name)


def closure(t: Tangle, kind: ClosureKind) -> LinkDiagram:
    """N joins NW-NE and SW-SE; D joins NW-SW and NE-SE."""
    if kind == "N":
        joins = [(0, 1), (3, 2)]
    elif kind == "D":
        joins = [(0, 3), (1, 2)]
    else:
        raise DomainError(f"unknown closure kind {kind!r}")
    out, _, loops = glue(t.crossings, t.ends, joins, [])
    name = f"{kind}({t.name})" if t.name else None
    return LinkDiagram(out, t.free_loops + loops, name=name)


def belt_tangle() -> Tangle:
    """Two horizontal arcs encircled by a vertical unknotted belt.

    The belt passes over both arcs on its west side and under both on its
    east side, adding four crossings.
    """
    a, b, c, d, e, f, p, q, r, s = range(1, 11)
    crossings = (
        (a, q, b, p),  # west top: belt over
        (p, b, r, c),  # east top: belt under
        (d, s, e, q),  # west bottom: belt over
        (r, e, s, f),  # east bottom: belt under
    )
    return Tangle(crossings, (a, c, f, d), name="belt")


def belt_closure(t: Tangle) -> LinkDiagram:
    """B(T): N(T) with a belt component around the two closing arcs."""
    out = closure(conway_sum(t, belt_tangle()), "N")
    return out.with_name(f"B({t.name})" if t.name else None)


def mirror(x):
    """Swap over and under at every crossing."""
    flipped = tuple(c.rotated(1) for c in x.crossings)
    name = f"mirror({x.name})" if x.name else None
    if isinstance(x, Tangle):
        return Tangle(flipped, x.ends, x.free_loops, name=name)
    return LinkDiagram(flipped, x.free_loops, name=name)


def add_kink(D: LinkDiagram, edge: int | None = None) -> LinkDiagram:
    """Insert a Reidemeister I curl on ``edge`` (default: the first label)."""
    if not D.crossings:
        raise DomainError("cannot kink a crossingless diagram")
    labels = D.edge_labels()
    edge = labels[0] if edge is None else edge
    top = max(labels)
    loop, tail = top + 1, top + 2
    # the last occurrence of ``edge`` now points at the tail
    crossings = [list(x) for x in D.crossings]
    for x in reversed(crossings):
        if edge in x:
            x[len(x) - 1 - x[::-1].index(edge)] = tail
            break
    crossings.append([edge, loop, loop, tail])
    return LinkDiagram(crossings, D.free_loops, name=f"kink({D.name})" if D.name else None)


def connected_sum(D1: LinkDiagram, D2: LinkDiagram, e1: int | None = None, e2: int | None = None) -> LinkDiagram:
    """Splice D2 into D1 by cutting one edge of each and reconnecting."""
    if not D1.crossings or not D2.crossings:
        raise DomainError("connected_sum needs diagrams with crossings")
    e1 = D1.edge_labels()[0] if e1 is None else e1
    e2 = D2.edge_labels()[0] if e2 is None else e2
    off = max_label(D1)
    c1 = [list(x) for x in D1.crossings]
    c2 = [list(x) for x in relabel(D2.crossings, off)]
    e2 += off
    a1, b1 = off + max_label(D2) + 1, off + max_label(D2) + 2
    # cut e1 into (e1 ... a1) and e2 into (e2 ... b1), then cross-connect
    for x in reversed(c1):
        if e1 in x:
            x[len(x) - 1 - x[::-1].index(e1)] = a1
            break
    for x in reversed(c2):
        if e2 in x:
            x[len(x) - 1 - x[::-1].index(e2)] = b1
            break
    dangling = [e1, a1, e2, b1]
    out, _, loops = glue(c1 + c2, dangling, [(0, 3), (1, 2)], [])
    return LinkDiagram(out, D1.free_loops + D2.free_loops + loops)
