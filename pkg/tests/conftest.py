from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from linkdensity.diagram import (  # noqa: E402
    add_kink,
    braid_link,
    closure,
    conway_sum,
    mirror,
    pretzel_tangle,
    weaving_tangle,
)

ACCEPTANCE_LINES: list[str] = []


def trefoil():
    return braid_link((2, [1, 1, 1]))


def figure_eight():
    return braid_link((3, [1, -2, 1, -2]))


def hopf():
    return braid_link((2, [1, 1]))


def kinked_trefoil():
    return add_kink(trefoil())


def alternating_corpus(max_crossings: int = 16):
    """Named alternating link diagrams built by the generators."""
    out = {
        "trefoil": trefoil(),
        "figure-eight": figure_eight(),
        "hopf": hopf(),
        "braid-3-weave-3": braid_link((3, [1, -2] * 3)),
        "braid-4-alt": braid_link((4, [1, -2, 3] * 2)),
    }
    for l, m, n in [(1, 1, 1), (2, 2, 2), (3, 1, 3), (3, 2, 3), (2, 3, 4), (3, 5, 3), (4, 4, 4)]:
        P = pretzel_tangle(l, m, n)
        out[f"D(P{l},{m},{n})"] = closure(P, "D")
        out[f"N(P{l},{m},{n})"] = closure(P, "N")
    for m, n in [(3, 2), (3, 3), (4, 2), (4, 3), (4, 4), (5, 3)]:
        W = weaving_tangle(m, n)
        out[f"D(W{m},{n})"] = closure(W, "D")
        out[f"N(W{m},{n})"] = closure(W, "N")
    out["D(P2,2,2+P3,1,3)"] = closure(conway_sum(pretzel_tangle(2, 2, 2), pretzel_tangle(3, 1, 3)), "D")
    out["N(P2,2,2+W4,2)"] = closure(conway_sum(pretzel_tangle(2, 2, 2), weaving_tangle(4, 2)), "N")
    out["mirror D(P3,2,3)"] = mirror(closure(pretzel_tangle(3, 2, 3), "D"))
    return {k: v for k, v in out.items() if v.n_crossings <= max_crossings}


@pytest.fixture(scope="session")
def corpus():
    return alternating_corpus()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
