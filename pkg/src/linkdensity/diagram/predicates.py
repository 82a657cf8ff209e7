"""Structural predicates on link diagrams and a canonical form for tests."""

from __future__ import annotations

from collections import deque
from itertools import combinations

from linkdensity.diagram.core import (
    LinkDiagram,
    Tangle,
    _UnionFind,
    require_connected,
    require_valid,
)


def is_alternating(D: LinkDiagram) -> bool:
    """Crossings alternate over/under along every strand.

    Equivalent to: each edge joins an under slot (even) to an over slot (odd).
    """
    require_valid(D)
    partner = D._partner
    n4 = 4 * D.n_crossings
    return all(
        (d % 2) != (partner[d] % 2) for d in range(n4) if partner[d] < n4
    )


def _subdivided_adjacency(D: LinkDiagram) -> dict:
    """Projection graph with every edge subdivided once.

    Crossing ``c`` is vertex ``('x', c)``; edge ``e`` gets a midpoint ``('e', e)``.
    """
    adj: dict = {}
    for c, x in enumerate(D.crossings):
        v = ("x", c)
        adj.setdefault(v, [])
        for e in x:
            m = ("e", e)
            adj[v].append(m)
            adj.setdefault(m, []).append(v)
    return adj


def _connected_without(adj: dict, removed) -> bool:
    verts = [v for v in adj if v != removed]
    if not verts:
        return True
    seen = {verts[0]}
    queue = deque([verts[0]])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w != removed and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(verts)


def nugatory_crossings(D: LinkDiagram) -> list[int]:
    """Crossings that are cut vertices of the (subdivided) projection graph."""
    require_valid(D)
    adj = _subdivided_adjacency(D)
    out = []
    for c in range(D.n_crossings):
        if not _connected_without(adj, ("x", c)):
            out.append(c)
    return out


def is_reduced(D: LinkDiagram) -> bool:
    return not nugatory_crossings(D)


def separating_edge_pairs(D: LinkDiagram, first_only: bool = False) -> list[tuple[int, int]]:
    """Pairs of edges whose removal splits the crossings into two nonempty sets."""
    require_connected(D)
    n = D.n_crossings
    edges = {}
    for c, x in enumerate(D.crossings):
        for e in x:
            edges.setdefault(e, []).append(c)
    labels = sorted(edges)
    found = []
    for e1, e2 in combinations(labels, 2):
        uf = _UnionFind()
        for c in range(n):
            uf.find(c)
        for e in labels:
            if e != e1 and e != e2:
                a, b = edges[e]
                uf.union(a, b)
        roots = {uf.find(c) for c in range(n)}
        if len(roots) > 1:
            found.append((e1, e2))
            if first_only:
                break
    return found


def is_diagrammatically_prime(D: LinkDiagram) -> bool:
    """No two edges cut the projection graph into two groups of crossings."""
    return not separating_edge_pairs(D, first_only=True)


def bigon_faces(D: LinkDiagram) -> list[tuple[int, int]]:
    out = []
    for face in D.faces():
        if len(face) == 2:
            (c1, _), (c2, _) = face
            if c1 != c2 and c1 >= 0 and c2 >= 0:
                out.append((c1, c2))
    return out


def twist_region_classes(D: LinkDiagram) -> list[list[int]]:
    require_valid(D)
    uf = _UnionFind()
    for c in range(D.n_crossings):
        uf.find(c)
    for a, b in bigon_faces(D):
        uf.union(a, b)
    groups: dict[int, list[int]] = {}
    for c in range(D.n_crossings):
        groups.setdefault(uf.find(c), []).append(c)
    return sorted(groups.values())


def twist_regions(D: LinkDiagram) -> int:
    """Number of classes of crossings linked through chains of bigons."""
    return len(twist_region_classes(D))


def _traverse_code(obj, starts) -> tuple:
    """BFS relabelling from (crossing, rotation) pairs or boundary darts.

    Returns the relabelled crossings in discovery order, the discovery
    order itself, and the label assigned to each start that was a dart.
    """
    n = obj.n_crossings
    partner = obj._partner
    order: dict[int, int] = {}
    rot: dict[int, int] = {}
    labels: dict[tuple[int, int], int] = {}
    queue: deque[int] = deque()

    def edge_id(d):
        p = partner[d]
        key = (min(d, p), max(d, p))
        if key not in labels:
            labels[key] = len(labels) + 1
        return labels[key]

    def discover(d):
        if d >= 4 * n:
            return
        c = d // 4
        if c not in order:
            s = d % 4
            order[c] = len(order)
            rot[c] = s - s % 2
            queue.append(c)

    start_labels = []
    for start in starts:
        if isinstance(start, tuple):
            c, r = start
            order[c] = len(order)
            rot[c] = r
            queue.append(c)
        else:
            start_labels.append(edge_id(start))
            discover(partner[start])
        while queue:
            c = queue.popleft()
            for j in range(4):
                d = 4 * c + (rot[c] + j) % 4
                edge_id(d)
                discover(partner[d])
    code = []
    for c in sorted(order, key=order.get):
        code.append(tuple(edge_id(4 * c + (rot[c] + j) % 4) for j in range(4)))
    return tuple(code), order, tuple(start_labels)


def canonical_form(obj: LinkDiagram | Tangle) -> tuple:
    """Isomorphism-invariant code (orientation-preserving, over/under kept).

    For link diagrams each connected piece is minimised over every start
    crossing and both under-strand directions; tangles are traversed from
    their boundary, which pins the labelling.
    """
    require_valid(obj)
    n = obj.n_crossings
    if isinstance(obj, Tangle):
        code, order, ends = _traverse_code(obj, [4 * n + i for i in range(4)])
        rest = [c for c in range(n) if c not in order]
        pieces = _link_pieces(obj, rest)
        return ("tangle", code, ends, tuple(pieces), obj.free_loops)
    return ("link", tuple(_link_pieces(obj, list(range(n)))), obj.free_loops)


def _link_pieces(obj, crossing_pool: list[int]) -> list[tuple]:
    pool = set(crossing_pool)
    comps = [comp for comp in obj._crossing_components if pool.issuperset(comp)]
    pieces = []
    for comp in comps:
        best = None
        for c in comp:
            for r in (0, 2):
                code, _, _ = _traverse_code(obj, [(c, r)])
                if best is None or code < best:
                    best = code
        pieces.append(best)
    pieces.sort()
    return pieces


def is_isomorphic(a, b) -> bool:
    return canonical_form(a) == canonical_form(b)
