"""Planar diagram data model.

A crossing is four edge labels in counterclockwise order around the
crossing. The strand through slots 0 and 2 runs under the strand through
slots 1 and 3. A link diagram is a tuple of crossings in which every edge
label occurs exactly twice; crossingless unknotted components are counted
separately in ``free_loops``. A tangle additionally carries four boundary
labels (NW, NE, SE, SW) which each account for one occurrence of their edge.

Half-edges ("darts") are numbered ``4 * crossing + slot``. Tangle boundary
points get darts ``4 * n + i`` for ``i`` in NW, NE, SE, SW order, i.e. the
boundary circle is treated as one extra vertex at infinity.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Sequence

from linkdensity.errors import DomainError

NW, NE, SE, SW = range(4)
END_NAMES = ("NW", "NE", "SE", "SW")


class Crossing(NamedTuple):
    """Edge labels at slots 0..3, counterclockwise; 0-2 is the under strand."""

    e0: int
    e1: int
    e2: int
    e3: int

    def rotated(self, k: int = 1) -> "Crossing":
        k %= 4
        return Crossing(*(self[k:] + self[:k]))


def _as_crossings(items) -> tuple[Crossing, ...]:
    return tuple(x if isinstance(x, Crossing) else Crossing(*x) for x in items)


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        parent = self.parent
        parent.setdefault(x, x)
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra
        return ra


@dataclass(frozen=True)
class ValidationReport:
    four_valent: bool
    closed: bool
    planar: bool
    connected: bool
    components: int
    crossings: int
    euler_characteristics: tuple[int, ...] = ()

    @property
    def ok(self) -> bool:
        return self.four_valent and self.closed and self.planar


class _Embedded:
    """Shared machinery for anything made of crossings plus boundary ends."""

    crossings: tuple[Crossing, ...]
    free_loops: int

    def _boundary(self) -> tuple[int, ...]:
        return ()

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @cached_property
    def _partner(self) -> list[int]:
        """Involution on darts; raises DomainError on a malformed matching."""
        n = len(self.crossings)
        where: dict[int, list[int]] = {}
        for c, x in enumerate(self.crossings):
            if len(x) != 4:
                raise DomainError(f"crossing {c} does not have 4 slots")
            for s, e in enumerate(x):
                where.setdefault(e, []).append(4 * c + s)
        for i, e in enumerate(self._boundary()):
            where.setdefault(e, []).append(4 * n + i)
        partner = [-1] * (4 * n + len(self._boundary()))
        for e, darts in where.items():
            if len(darts) != 2:
                raise DomainError(f"edge {e} has {len(darts)} endpoints, expected 2")
            a, b = darts
            partner[a], partner[b] = b, a
        return partner

    def _rot(self, d: int) -> int:
        n4 = 4 * len(self.crossings)
        if d < n4:
            return d - d % 4 + (d + 1) % 4
        return n4 + (d - n4 + 1) % 4

    @cached_property
    def _face_of_dart(self) -> list[int]:
        partner = self._partner
        face = [-1] * len(partner)
        count = 0
        for start in range(len(partner)):
            if face[start] >= 0:
                continue
            d = start
            while face[d] < 0:
                face[d] = count
                d = self._rot(partner[d])
            count += 1
        return face

    @property
    def n_faces(self) -> int:
        return max(self._face_of_dart, default=-1) + 1

    def faces(self) -> list[list[tuple[int, int]]]:
        """Faces as lists of corners ``(crossing, k)``.

        Corner ``k`` of a crossing sits between slots ``k`` and ``k + 1``.
        Boundary corners of a tangle use crossing index ``-1``.
        """
        n = len(self.crossings)
        out: list[list[tuple[int, int]]] = [[] for _ in range(self.n_faces)]
        for d, f in enumerate(self._face_of_dart):
            if d < 4 * n:
                out[f].append((d // 4, (d - 1) % 4))
            else:
                out[f].append((-1, (d - 4 * n - 1) % 4))
        return out

    def corner_faces(self, c: int) -> tuple[int, int, int, int]:
        f = self._face_of_dart
        return tuple(f[4 * c + (k + 1) % 4] for k in range(4))

    @cached_property
    def _crossing_components(self) -> list[list[int]]:
        """Connected components of the projection graph, as crossing lists."""
        n = len(self.crossings)
        partner = self._partner
        uf = _UnionFind()
        for c in range(n):
            uf.find(c)
        for d in range(4 * n):
            p = partner[d]
            if p < 4 * n:
                uf.union(d // 4, p // 4)
        # tangle boundary: the two crossings reached from a through-path are
        # not joined by the boundary vertex itself
        groups: dict[int, list[int]] = {}
        for c in range(n):
            groups.setdefault(uf.find(c), []).append(c)
        return sorted(groups.values())

    def strand_cycles(self) -> list[list[int]]:
        """Closed strands as lists of darts entered, for link components."""
        n4 = 4 * len(self.crossings)
        partner = self._partner
        seen = [False] * n4
        cycles = []
        for start in range(n4):
            if seen[start]:
                continue
            cyc = []
            d = start
            closed = True
            while not seen[d]:
                seen[d] = True
                seen[d - d % 4 + (d + 2) % 4] = True
                cyc.append(d)
                out = d - d % 4 + (d + 2) % 4
                d = partner[out]
                if d >= n4:
                    closed = False
                    break
            if closed:
                cycles.append(cyc)
        return cycles

    def edge_labels(self) -> list[int]:
        seen = []
        got = set()
        for x in self.crossings:
            for e in x:
                if e not in got:
                    got.add(e)
                    seen.append(e)
        for e in self._boundary():
            if e not in got:
                got.add(e)
                seen.append(e)
        return seen


@dataclass(frozen=True)
class LinkDiagram(_Embedded):
    crossings: tuple[Crossing, ...]
    free_loops: int = 0
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", _as_crossings(self.crossings))

    def with_name(self, name: str | None) -> "LinkDiagram":
        return LinkDiagram(self.crossings, self.free_loops, name)

    @property
    def n_components(self) -> int:
        return len(self.strand_cycles()) + self.free_loops


@dataclass(frozen=True)
class Tangle(_Embedded):
    crossings: tuple[Crossing, ...]
    ends: tuple[int, int, int, int]
    free_loops: int = 0
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", _as_crossings(self.crossings))
        object.__setattr__(self, "ends", tuple(self.ends))

    def _boundary(self):
        return self.ends

    def with_name(self, name: str | None) -> "Tangle":
        return Tangle(self.crossings, self.ends, self.free_loops, name)


@dataclass(frozen=True)
class BraidWord:
    """Braid on ``strands`` strings; letter ``+i`` is sigma_i, ``-i`` its inverse."""

    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        from linkdensity.errors import InvalidWordError

        object.__setattr__(self, "letters", tuple(int(g) for g in self.letters))
        if self.strands < 2:
            raise InvalidWordError(f"need at least 2 strands, got {self.strands}")
        for g in self.letters:
            if g == 0 or abs(g) > self.strands - 1:
                raise InvalidWordError(
                    f"generator {g} out of range 1..{self.strands - 1}"
                )


def glue(
    crossings: Sequence[Sequence[int]],
    dangling: Sequence[int],
    joins: Sequence[tuple[int, int]],
    keep: Sequence[int],
) -> tuple[tuple[Crossing, ...], tuple[int, ...], int]:
    """Join pairs of dangling ends and relabel edges compactly from 1.

    ``dangling`` lists edge labels that currently end at a loose endpoint;
    ``joins`` pairs indices into it, ``keep`` lists the indices that remain
    loose in the result (in the returned order). Returns the relabelled
    crossings, the kept labels, and the number of crossingless loops closed
    up by the joins.
    """
    uf = _UnionFind()
    for x in crossings:
        for e in x:
            uf.find(e)
    for e in dangling:
        uf.find(e)
    for i, j in joins:
        uf.union(dangling[i], dangling[j])
    used = sorted({i for pair in joins for i in pair})
    if sorted(used + list(keep)) != list(range(len(dangling))):
        raise DomainError("every dangling end must be joined or kept exactly once")

    remaining = Counter()
    for x in crossings:
        for e in x:
            remaining[uf.find(e)] += 1
    for i in keep:
        remaining[uf.find(dangling[i])] += 1
    roots = {uf.find(e) for e in uf.parent}
    loops = sum(1 for r in roots if remaining[r] == 0)

    new_label: dict[int, int] = {}

    def lab(e):
        r = uf.find(e)
        if r not in new_label:
            new_label[r] = len(new_label) + 1
        return new_label[r]

    out = tuple(Crossing(*(lab(e) for e in x)) for x in crossings)
    kept = tuple(lab(dangling[i]) for i in keep)
    return out, kept, loops


def relabel(crossings, offset: int) -> tuple[Crossing, ...]:
    return tuple(Crossing(*(e + offset for e in x)) for x in crossings)


def max_label(obj: _Embedded) -> int:
    return max(obj.edge_labels(), default=0)


def validate(D: LinkDiagram | Tangle) -> ValidationReport:
    """Recompute structural flags. Never raises on malformed input."""
    four_valent = all(
        len(x) == 4 and all(isinstance(e, int) and e > 0 for e in x)
        for x in D.crossings
    )
    boundary = D._boundary()
    if isinstance(D, Tangle) and len(boundary) != 4:
        four_valent = False
    counts = Counter(e for x in D.crossings for e in x)
    counts.update(boundary)
    closed = four_valent and all(v == 2 for v in counts.values())
    n = len(D.crossings)
    if not closed:
        return ValidationReport(four_valent, False, False, False, 0, n)

    comps = D._crossing_components
    chis = []
    planar = True
    if isinstance(D, Tangle):
        # boundary vertex joins everything touching the ends into one sphere
        V = n + 1
        E = (4 * n + 4) // 2
        F = D.n_faces
        chi = V - E + F
        # components not touching the boundary sit on their own spheres
        touching = set()
        partner = D._partner
        for i in range(4):
            p = partner[4 * n + i]
            if p < 4 * n:
                touching.add(p // 4)
        groups = 1
        for comp in comps:
            if not touching.intersection(comp):
                groups += 1
        chis.append(chi)
        planar = chi == 2 * groups
        connected = groups == 1 and D.free_loops == 0
    else:
        face = D._face_of_dart
        for comp in comps:
            V = len(comp)
            E = 2 * V
            F = len({face[4 * c + s] for c in comp for s in range(4)})
            chis.append(V - E + F)
        planar = all(chi == 2 for chi in chis)
        pieces = len(comps) + D.free_loops
        connected = pieces == 1
    components = len(D.strand_cycles()) + D.free_loops
    return ValidationReport(
        four_valent, closed, planar, connected, components, n, tuple(chis)
    )


def require_valid(D: LinkDiagram | Tangle) -> ValidationReport:
    report = validate(D)
    if not report.ok:
        raise DomainError(f"invalid diagram: {report}")
    return report


def require_connected(D: LinkDiagram) -> None:
    report = require_valid(D)
    if not report.connected:
        raise DomainError("diagram is disconnected (split); a connected diagram is required")
