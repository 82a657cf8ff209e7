"""Exact invariants: Kauffman bracket, checkerboard, Goeritz and Tait determinants.

Three determinant engines live here and are meant to be cross-checked:

* the Goeritz matrix of the smaller checkerboard class (production engine),
* the spanning-tree count of the Tait graph on the other class, valid for
  reduced alternating diagrams,
* ``|<D>(zeta_8)|`` computed in the ring of 8th cyclotomic integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from linkdensity.diagram.core import LinkDiagram, require_connected, require_valid
from linkdensity.diagram.predicates import is_alternating, is_reduced
from linkdensity.errors import ConsistencyError, DomainError, ResourceError
from linkdensity.linalg import bareiss_det, spanning_tree_count
from linkdensity.polynomial import LaurentPolynomial

DEFAULT_BRACKET_CAP = 24
ROOT_CHECK_MAX_CROSSINGS = 16

# A-smoothing joins slots (0,1) and (2,3): the corners between slots 1-2 and
# 3-0 merge. B-smoothing is the other pairing.
A_ARCS = ((0, 1), (2, 3))
B_ARCS = ((1, 2), (3, 0))
A_CORNERS = (1, 3)


# -- Kauffman bracket ---------------------------------------------------------


def _crossing_order(D: LinkDiagram) -> list[int]:
    """Greedy order keeping the processed region's boundary short."""
    n = D.n_crossings
    partner = D._partner
    done = [False] * n
    score = [0] * n
    order = []
    for _ in range(n):
        best = max(
            (c for c in range(n) if not done[c]),
            key=lambda c: (score[c], -c),
        )
        done[best] = True
        order.append(best)
        for s in range(4):
            other = partner[4 * best + s] // 4
            if not done[other]:
                score[other] += 1
    return order


def _merge(pairs, arcs):
    """Join a boundary matching with the two arcs of a smoothing.

    Returns the new matching (sorted tuple of pairs) and the number of
    closed loops created.
    """
    adj: dict = {}
    edges = list(pairs) + list(arcs)
    for i, (u, v) in enumerate(edges):
        adj.setdefault(u, []).append(i)
        adj.setdefault(v, []).append(i)
    used = [False] * len(edges)
    new_pairs = []
    for node, inc in adj.items():
        if len(inc) != 1 or used[inc[0]]:
            continue
        cur = node
        eid = inc[0]
        while True:
            used[eid] = True
            u, v = edges[eid]
            cur = v if u == cur else u
            nxt = [j for j in adj[cur] if not used[j]]
            if not nxt:
                break
            eid = nxt[0]
        new_pairs.append((min(node, cur), max(node, cur)))
    loops = 0
    for i in range(len(edges)):
        if used[i]:
            continue
        loops += 1
        stack = [i]
        while stack:
            j = stack.pop()
            if used[j]:
                continue
            used[j] = True
            for w in edges[j]:
                stack.extend(k for k in adj[w] if not used[k])
    return tuple(sorted(new_pairs)), loops


def _poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _delta_powers(k: int) -> list[dict]:
    delta = {2: -1, -2: -1}
    out = [{0: 1}]
    for _ in range(k):
        out.append(_poly_mul(out[-1], delta))
    return out


def kauffman_bracket(D: LinkDiagram, cap: int = DEFAULT_BRACKET_CAP) -> LaurentPolynomial:
    """State sum of A^(#A - #B) * delta^(loops - 1), delta = -A^2 - A^-2.

    Crossings are absorbed one at a time; partial states sharing the same
    boundary connectivity are merged, so the work is governed by the
    boundary length rather than 2^n. One edge is cut open so that the
    component through it never closes, which supplies the ``- 1``.
    """
    require_valid(D)
    n = D.n_crossings
    if n > cap:
        raise ResourceError(
            f"bracket state sum capped at {cap} crossings (diagram has {n}); "
            "use the determinant engines or raise --cap"
        )
    deltas = _delta_powers(2 * n + D.free_loops + 2)
    if n == 0:
        if D.free_loops == 0:
            raise DomainError("empty diagram")
        return LaurentPolynomial(deltas[D.free_loops - 1])

    crossings = [list(x) for x in D.crossings]
    # cut the first edge: its second occurrence gets a label that never pairs
    cut = crossings[0][0]
    cut_open = -1
    occurrences = [(c, s) for c, x in enumerate(crossings) for s, e in enumerate(x) if e == cut]
    c2, s2 = occurrences[1]
    crossings[c2][s2] = cut_open

    states: dict[tuple, dict] = {(): {0: 1}}
    for c in _crossing_order(D):
        x = crossings[c]
        new_states: dict[tuple, dict] = {}
        for arcs_idx, shift in ((A_ARCS, 1), (B_ARCS, -1)):
            arcs = [(x[i], x[j]) for i, j in arcs_idx]
            for key, poly in states.items():
                new_key, loops = _merge(key, arcs)
                contrib = _poly_mul(poly, deltas[loops]) if loops else poly
                target = new_states.setdefault(new_key, {})
                for e, v in contrib.items():
                    target[e + shift] = target.get(e + shift, 0) + v
        states = {
            k: {e: v for e, v in p.items() if v} for k, p in new_states.items()
        }
    (key, poly), = states.items()
    if key != ((cut_open, cut),):
        raise ConsistencyError(f"bracket contraction ended with boundary {key}")
    if D.free_loops:
        poly = _poly_mul(poly, deltas[D.free_loops])
    return LaurentPolynomial(poly)


def jones_breadth(D: LinkDiagram, cap: int = DEFAULT_BRACKET_CAP) -> int:
    """Bracket breadth / 4, i.e. the span of the Jones polynomial."""
    b = kauffman_bracket(D, cap).breadth()
    if b % 4:
        raise ConsistencyError(f"bracket breadth {b} not divisible by 4")
    return b // 4


# -- 8th cyclotomic integers ----------------------------------------------------


@dataclass(frozen=True)
class Cyclotomic8:
    """a0 + a1 z + a2 z^2 + a3 z^3 with z^4 = -1 (z a primitive 8th root of 1)."""

    coeffs: tuple[int, int, int, int]

    @classmethod
    def power_of_root(cls, e: int) -> "Cyclotomic8":
        e %= 8
        c = [0, 0, 0, 0]
        c[e % 4] = 1 if e < 4 else -1
        return cls(tuple(c))

    def __add__(self, other):
        return Cyclotomic8(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, int):
            return Cyclotomic8(tuple(a * other for a in self.coeffs))
        out = [0] * 4
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                k = i + j
                if k < 4:
                    out[k] += a * b
                else:
                    out[k - 4] -= a * b
        return Cyclotomic8(tuple(out))

    def conjugate(self):
        # z^-1 = -z^3, z^-2 = -z^2, z^-3 = -z
        a0, a1, a2, a3 = self.coeffs
        return Cyclotomic8((a0, -a3, -a2, -a1))

    def norm_squared(self) -> int:
        """|x|^2 as an integer; raises if it is not rational."""
        p = self * self.conjugate()
        a0, a1, a2, a3 = p.coeffs
        # real elements are a0 + b*(z - z^3) = a0 + b*sqrt(2)
        if a2 != 0 or a1 != -a3:
            raise ConsistencyError(f"x * conj(x) not real: {p.coeffs}")
        if a1 != 0:
            raise ConsistencyError(f"|x|^2 irrational: {p.coeffs}")
        return a0


def bracket_at_root(poly: LaurentPolynomial) -> Cyclotomic8:
    acc = Cyclotomic8((0, 0, 0, 0))
    for e, c in poly.terms.items():
        acc = acc + Cyclotomic8.power_of_root(e) * c
    return acc


def determinant_from_bracket(D: LinkDiagram, cap: int = DEFAULT_BRACKET_CAP) -> int:
    """|<D>| at A = exp(i pi / 4), exact."""
    sq = bracket_at_root(kauffman_bracket(D, cap)).norm_squared()
    r = math.isqrt(sq)
    if r * r != sq:
        raise ConsistencyError(f"|<D>(zeta8)|^2 = {sq} is not a square")
    return r


# -- checkerboard, Goeritz, Tait ------------------------------------------------


@dataclass(frozen=True)
class CheckerboardColoring:
    """Proper 2-colouring of the faces of a connected diagram.

    ``shaded[c]`` and ``unshaded[c]`` are the face ids at the two shaded and
    two unshaded corners of crossing ``c``; ``eta[c]`` is +1 when the
    unshaded corners are the A-corners.
    """

    n_faces: int
    color: tuple[int, ...]
    shaded: tuple[tuple[int, int], ...]
    unshaded: tuple[tuple[int, int], ...]
    eta: tuple[int, ...]

    def faces_of(self, value: int) -> list[int]:
        return [f for f, c in enumerate(self.color) if c == value]


def checkerboard(D: LinkDiagram, shade_larger: bool = True) -> CheckerboardColoring:
    """Colour faces so that corners around each crossing alternate.

    By default the larger colour class is shaded, which keeps the Goeritz
    matrix (indexed by unshaded faces) as small as possible.
    """
    require_connected(D)
    n = D.n_crossings
    F = D.n_faces
    if n == 0:
        return CheckerboardColoring(F, tuple([1] * F), (), (), ())
    corners = [D.corner_faces(c) for c in range(n)]
    adj: list[list[int]] = [[] for _ in range(F)]
    for cf in corners:
        for k in range(4):
            a, b = cf[k], cf[(k + 1) % 4]
            adj[a].append(b)
            adj[b].append(a)
    color = [-1] * F
    color[0] = 0
    stack = [0]
    while stack:
        f = stack.pop()
        for g in adj[f]:
            if color[g] < 0:
                color[g] = 1 - color[f]
                stack.append(g)
            elif color[g] == color[f]:
                raise DomainError("faces admit no checkerboard colouring (non-planar)")
    ones = sum(color)
    if (ones < F - ones) == shade_larger:
        color = [1 - c for c in color]
    shaded, unshaded, eta = [], [], []
    for cf in corners:
        # corners 0 and 2 share a colour, as do 1 and 3
        if color[cf[1]] == 0:
            unshaded.append((cf[1], cf[3]))
            shaded.append((cf[0], cf[2]))
            eta.append(1)
        else:
            unshaded.append((cf[0], cf[2]))
            shaded.append((cf[1], cf[3]))
            eta.append(-1)
    return CheckerboardColoring(F, tuple(color), tuple(shaded), tuple(unshaded), tuple(eta))


@dataclass(frozen=True)
class GoeritzMatrix:
    regions: tuple[int, ...]
    dropped: int
    matrix: tuple[tuple[int, ...], ...]


def goeritz_matrix(D: LinkDiagram, coloring: CheckerboardColoring | None = None) -> GoeritzMatrix:
    col = coloring or checkerboard(D)
    regions = tuple(col.faces_of(0))
    index = {f: i for i, f in enumerate(regions)}
    m = len(regions)
    G = [[0] * m for _ in range(m)]
    for (f, g), eta in zip(col.unshaded, col.eta):
        if f == g:
            continue
        i, j = index[f], index[g]
        G[i][j] -= eta
        G[j][i] -= eta
        G[i][i] += eta
        G[j][j] += eta
    reduced = tuple(tuple(row[1:]) for row in G[1:])
    return GoeritzMatrix(regions, regions[0] if regions else -1, reduced)


def determinant_goeritz(D: LinkDiagram) -> int:
    """|det| of the reduced Goeritz matrix."""
    require_connected(D)
    if D.n_crossings == 0:
        return 1
    return abs(bareiss_det(goeritz_matrix(D).matrix))


@dataclass(frozen=True)
class TaitGraph:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]


def tait_graph(D: LinkDiagram, coloring: CheckerboardColoring | None = None) -> TaitGraph:
    col = coloring or checkerboard(D)
    verts = tuple(col.faces_of(1))
    index = {f: i for i, f in enumerate(verts)}
    edges = tuple((index[f], index[g]) for f, g in col.shaded)
    return TaitGraph(verts, edges)


def tait_spanning_trees(D: LinkDiagram) -> int:
    """Spanning trees of the Tait graph; equals det for reduced alternating D."""
    require_connected(D)
    if D.n_crossings and not is_alternating(D):
        raise DomainError("Tait spanning-tree count only gives det for alternating diagrams")
    if D.n_crossings == 0:
        return 1
    g = tait_graph(D)
    return spanning_tree_count(len(g.vertices), g.edges)


def determinant(D: LinkDiagram, root_check_max: int = ROOT_CHECK_MAX_CROSSINGS) -> int:
    """Goeritz determinant, cross-checked by the other engines where they apply."""
    det = determinant_goeritz(D)
    n = D.n_crossings
    if n and is_alternating(D) and is_reduced(D):
        trees = tait_spanning_trees(D)
        if trees != det:
            raise ConsistencyError(f"Goeritz det {det} != Tait spanning trees {trees}")
    if n <= root_check_max:
        via_root = determinant_from_bracket(D, cap=max(root_check_max, n))
        if via_root != det:
            raise ConsistencyError(f"Goeritz det {det} != |bracket(zeta8)| {via_root}")
    return det


@lru_cache(maxsize=None)
def weaving_determinant(k: int, kind: str = "D") -> int:
    """det of a closure of W_{k,k}; memoised since synthesis rescans it."""
    from linkdensity.diagram.generators import closure, weaving_tangle

    return determinant_goeritz(closure(weaving_tangle(k, k), kind))
