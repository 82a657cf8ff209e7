"""State graphs, adequacy, and the crossing-number / non-alternation certificates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from linkdensity.diagram.core import LinkDiagram, Tangle, _UnionFind, require_connected, require_valid
from linkdensity.diagram.generators import closure
from linkdensity.diagram.predicates import is_alternating, is_diagrammatically_prime, is_reduced
from linkdensity.invariants import A_ARCS, B_ARCS

Resolution = Literal["A", "B"]


@dataclass(frozen=True)
class StateGraph:
    resolution: str
    loops: int
    edges: tuple[tuple[int, int], ...]

    @property
    def self_loops(self) -> list[int]:
        return [i for i, (u, v) in enumerate(self.edges) if u == v]


@dataclass(frozen=True)
class AdequacyReport:
    a_adequate: bool
    b_adequate: bool
    s_a: int
    s_b: int

    @property
    def adequate(self) -> bool:
        return self.a_adequate and self.b_adequate


def state_graph(D: LinkDiagram, resolution: Resolution) -> StateGraph:
    """Loops of the all-A (or all-B) smoothing, with one edge per crossing."""
    require_valid(D)
    arcs = {"A": A_ARCS, "B": B_ARCS}[resolution]
    n = D.n_crossings
    partner = D._partner
    uf = _UnionFind()
    for d in range(4 * n):
        uf.find(d)
        uf.union(d, partner[d])
    for c in range(n):
        for i, j in arcs:
            uf.union(4 * c + i, 4 * c + j)
    roots = {}
    for d in range(4 * n):
        roots.setdefault(uf.find(d), len(roots))
    edges = []
    for c in range(n):
        (i, _), (k, _) = arcs
        edges.append((roots[uf.find(4 * c + i)], roots[uf.find(4 * c + k)]))
    return StateGraph(resolution, len(roots) + D.free_loops, tuple(edges))


def adequacy_report(D: LinkDiagram) -> AdequacyReport:
    ga, gb = state_graph(D, "A"), state_graph(D, "B")
    return AdequacyReport(not ga.self_loops, not gb.self_loops, ga.loops, gb.loops)


def is_strongly_alternating(T: Tangle) -> bool:
    """Both closures are reduced alternating diagrams."""
    require_valid(T)
    for kind in ("N", "D"):
        L = closure(T, kind)
        if not (is_alternating(L) and is_reduced(L)):
            return False
    return True


def is_adequate_tangle(T: Tangle) -> bool:
    return all(adequacy_report(closure(T, kind)).adequate for kind in ("N", "D"))


@dataclass(frozen=True)
class CrossingCertificate:
    diagram_id: str | None
    crossings: int
    verdict: str
    reason: str

    @property
    def certified(self) -> bool:
        return self.verdict == "certified-minimal"

    def lines(self) -> list[str]:
        return [
            f"diagram = {self.diagram_id}",
            f"crossings = {self.crossings}",
            f"verdict = {self.verdict}",
            f"reason = {self.reason}",
        ]


def certify_crossing_number(D: LinkDiagram) -> CrossingCertificate:
    """An adequate diagram realises the crossing number of its link."""
    rep = adequacy_report(D)
    if rep.adequate:
        return CrossingCertificate(D.name, D.n_crossings, "certified-minimal", "diagram is A- and B-adequate")
    bad = [r for r, ok in (("A", rep.a_adequate), ("B", rep.b_adequate)) if not ok]
    return CrossingCertificate(
        D.name, D.n_crossings, "not-certified",
        "state graph has a self-loop in resolution " + "/".join(bad),
    )


@dataclass(frozen=True)
class NonAlternatingCertificate:
    diagram_id: str | None
    adequate: bool
    prime: bool
    non_alternating: bool

    @property
    def verdict(self) -> bool:
        return self.adequate and self.prime and self.non_alternating

    def lines(self) -> list[str]:
        return [
            f"diagram = {self.diagram_id}",
            f"adequate = {str(self.adequate).lower()}",
            f"diagrammatically_prime = {str(self.prime).lower()}",
            f"non_alternating_diagram = {str(self.non_alternating).lower()}",
            f"verdict = {'non-alternating-link' if self.verdict else 'not-certified'}",
        ]


def certify_nonalternating(D: LinkDiagram) -> NonAlternatingCertificate:
    """Prime + adequate + non-alternating diagram => the link is non-alternating.

    Primality is checked on the diagram itself (no 2-edge cut splits the
    crossings), which is the hypothesis the argument consumes.
    """
    require_connected(D)
    return NonAlternatingCertificate(
        D.name,
        adequacy_report(D).adequate,
        is_diagrammatically_prime(D),
        not is_alternating(D),
    )
