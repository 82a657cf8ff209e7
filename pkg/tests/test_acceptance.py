"""The ten acceptance criteria, each at its stated tolerance.

Every test appends one ``CRITERION n: PASS|FAIL ...`` line; conftest prints
them in an "acceptance criteria" section at the end of the run.
"""

from __future__ import annotations

import random
import time

import mpmath
import pytest

import conftest
from oracle_lib import brute_bracket
from linkdensity.adequacy import (
    adequacy_report,
    certify_crossing_number,
    certify_nonalternating,
    is_strongly_alternating,
)
from linkdensity.densities import V3, V8, det_density_value, lackenby_upper, xi
from linkdensity.diagram import (
    closure,
    conway_sum,
    is_alternating,
    is_reduced,
    mirror,
    pretzel_tangle,
    twist_regions,
    weaving_tangle,
)
from linkdensity.errors import BudgetExceeded
from linkdensity.invariants import (
    bracket_at_root,
    determinant,
    determinant_from_bracket,
    determinant_goeritz,
    jones_breadth,
    tait_spanning_trees,
)
from linkdensity.polynomial import LaurentPolynomial
from linkdensity.synthesis import nonalt_family, predict_det_density, pretzel_density, synthesize_det

# Pinned by tests/derivations/weave_gap.py (spanning trees via rational
# elimination, densities in 50-digit mpmath).
WEAVE_DETS = {3: 16, 4: 384, 5: 30976, 6: 7741440, 12: 88192375153215003517412966400000}
WEAVE_GAP_K12 = 0.16255387523086408
WEAVE_GAP_TOL = 1e-12


def _record(n: int, ok: bool, detail: str, started: float, budget: float) -> None:
    elapsed = time.perf_counter() - started
    in_time = elapsed < budget
    status = "PASS" if ok and in_time else "FAIL"
    conftest.ACCEPTANCE_LINES.append(f"CRITERION {n}: {status} {detail} [{elapsed:.2f}s / {budget:g}s]")
    assert ok, detail
    assert in_time, f"runtime {elapsed:.1f}s exceeds {budget}s"


def test_criterion_1_pretzel_determinant_law():
    t0 = time.perf_counter()
    bad = [m for m in range(1, 31) if determinant(closure(pretzel_tangle(3, m, 3), "D")) != 6 * m + 9]
    _record(1, not bad, f"det D(P3,m,3) = 6m+9 for m=1..30; mismatches={bad}", t0, 5)


def test_criterion_2_general_pretzel_law():
    t0 = time.perf_counter()
    bad = []
    checked = 0
    for l in range(2, 7):
        for m in range(2, 7):
            for n in range(2, 7):
                D = closure(pretzel_tangle(l, m, n), "D")
                g = determinant_goeritz(D)
                b = determinant_from_bracket(D)
                expected = l * m + m * n + n * l
                if not g == b == expected:
                    bad.append((l, m, n, g, b))
                checked += 1
    # brute-force state sum on the smallest cases, evaluated at the root independently
    for l, m, n in [(2, 2, 2), (2, 3, 2), (3, 2, 4)]:
        D = closure(pretzel_tangle(l, m, n), "D")
        poly = LaurentPolynomial(brute_bracket(D.crossings, D.free_loops))
        if bracket_at_root(poly).norm_squared() != (l * m + m * n + n * l) ** 2:
            bad.append(("brute", l, m, n))
    _record(2, not bad, f"{checked} pretzels, Goeritz = |<D>(zeta8)| = lm+mn+nl; mismatches={bad}", t0, 120)


def _tangle_pool():
    pool = [pretzel_tangle(l, m, n) for l in range(1, 5) for m in range(1, 5) for n in range(1, 5)]
    pool += [weaving_tangle(m, n) for m in range(3, 6) for n in range(1, 5)]
    return pool


def test_criterion_3_multiplicativity():
    t0 = time.perf_counter()
    rng = random.Random(20240611)
    pool = _tangle_pool()
    bad = []
    triples = 0
    for i in range(50):
        size = 3 if i % 5 == 0 else 2
        parts = [rng.choice(pool) for _ in range(size)]
        triples += size == 3
        whole = determinant(closure(conway_sum(*parts), "D"))
        prod = 1
        for t in parts:
            prod *= determinant(closure(t, "D"))
        if whole != prod:
            bad.append([t.name for t in parts])
    _record(3, not bad and triples > 0, f"50 sums ({triples} triples), det multiplicative; mismatches={bad}", t0, 120)


def test_criterion_4_crossing_additivity():
    t0 = time.perf_counter()
    pieces = [pretzel_tangle(2, 2, 2), pretzel_tangle(2, 3, 4), pretzel_tangle(3, 5, 3), weaving_tangle(4, 4), weaving_tangle(5, 4)]
    pieces += [mirror(p) for p in pieces[:2]]
    bad = []
    sums = 0
    for i, a in enumerate(pieces):
        assert is_strongly_alternating(a), a.name
        for b in pieces[i:]:
            for kind in ("N", "D"):
                D = closure(conway_sum(a, b), kind)
                cert = certify_crossing_number(D)
                sums += 1
                if not (adequacy_report(D).adequate and cert.certified and cert.crossings == a.n_crossings + b.n_crossings):
                    bad.append((a.name, b.name, kind))
    T = pieces[0]
    D = closure(conway_sum(T, pieces[3], pieces[1]), "N")
    cert = certify_crossing_number(D)
    sums += 1
    if not (cert.certified and cert.crossings == T.n_crossings + pieces[3].n_crossings + pieces[1].n_crossings):
        bad.append("triple")
    for k in range(4, 9):
        cert = certify_crossing_number(closure(weaving_tangle(k, k), "N"))
        if not (cert.certified and cert.crossings == k * (k - 1)):
            bad.append(f"N(W{k},{k})")
    _record(4, not bad, f"{sums} Conway sums adequate with additive c; N(Wk,k) certified k=4..8; failures={bad}", t0, 60)


def test_criterion_5_breadth_laws(corpus):
    t0 = time.perf_counter()
    bad = []
    diagrams = dict(corpus)
    for k in (4, 5):
        for kind in ("N", "D"):
            diagrams[f"{kind}(W{k},{k})"] = closure(weaving_tangle(k, k), kind)
    diagrams["D(P3,4,3+W4,4)"] = closure(conway_sum(pretzel_tangle(3, 4, 3), weaving_tangle(4, 4)), "D")
    n_alt = 0
    for name, D in diagrams.items():
        if D.n_crossings <= 20 and is_alternating(D) and is_reduced(D):
            n_alt += 1
            if jones_breadth(D) != D.n_crossings:
                bad.append(name)
    W3, W4 = weaving_tangle(3, 3), weaving_tangle(4, 4)
    strict = {
        "N(W3,3+mirror)": closure(conway_sum(W3, mirror(W3)), "N"),
        "N(W4,4+mirror)": closure(conway_sum(W4, mirror(W4)), "N"),
    }
    strict["nonalt_family(3)"] = nonalt_family(3)
    notes = []
    for name, D in strict.items():
        br = jones_breadth(D, cap=40)
        # the W3,3 sum is not adequate (W3,3 alone has a nugatory closure), so it
        # only witnesses the inequality; the other two are prime and adequate
        notes.append(f"{name}: breadth {br} < c {D.n_crossings} (adequate={adequacy_report(D).adequate})")
        if not br < D.n_crossings:
            bad.append(name)
    assert strict["N(W3,3+mirror)"].n_crossings == 12
    _record(5, not bad, f"breadth = c on {n_alt} reduced alternating (c<=20); " + "; ".join(notes) + f"; failures={bad}", t0, 300)


def test_criterion_6_engine_consensus(corpus):
    t0 = time.perf_counter()
    bad = []
    n = 0
    for name, D in corpus.items():
        if D.n_crossings > 16 or not is_alternating(D):
            continue
        n += 1
        g, t, b = determinant_goeritz(D), tait_spanning_trees(D), determinant_from_bracket(D)
        if not g == t == b:
            bad.append((name, g, t, b))
    _record(6, not bad and n > 0, f"Goeritz = Tait = |<D>(zeta8)| on {n} alternating diagrams; mismatches={bad}", t0, 300)


def test_criterion_7_weave_convergence():
    t0 = time.perf_counter()
    dets = {}
    for k in range(4, 13):
        dets[k] = determinant_goeritz(closure(weaving_tangle(k, k), "D"))
    dens = [det_density_value(dets[k], k * (k - 1)) for k in range(4, 13)]
    increasing = all(a < b for a, b in zip(dens, dens[1:]))
    below = all(d < V8 for d in dens)
    pinned = all(dets[k] == v for k, v in WEAVE_DETS.items() if k in dets)
    gap = V8 - dens[-1]
    gap_ok = abs(gap - WEAVE_GAP_K12) < WEAVE_GAP_TOL
    ok = increasing and below and pinned and gap_ok
    _record(
        7,
        ok,
        f"d_det(D(Wk,k)) increasing k=4..12: {increasing}; pinned dets match: {pinned}; "
        f"gap at k=12 = {gap!r} vs pinned {WEAVE_GAP_K12!r} (tol {WEAVE_GAP_TOL:g})",
        t0,
        120,
    )


def test_criterion_8_synthesis_end_to_end():
    t0 = time.perf_counter()
    bad = []
    notes = []
    for frac in (0.0, 0.25, 0.5, 0.75):
        x = frac * V8
        K, cert = synthesize_det(x, 0.3, k_max=12)
        # independent recomputation: closed-form prediction and full Goeritz
        if cert.b == 0:
            predicted = pretzel_density(cert.m)
        else:
            predicted = predict_det_density(cert.a, cert.b, cert.m, cert.k)
        det_ok = True
        if K.n_crossings <= 3000:
            det_ok = determinant_goeritz(K) == cert.predicted_det
        achieved = det_density_value(cert.predicted_det, K.n_crossings)
        ok = (
            cert.passed
            and det_ok
            and abs(predicted - achieved) < 1e-9
            and abs(achieved - x) < 0.3
            and K.n_crossings == cert.crossings
        )
        notes.append(f"x={frac}v8 ({cert.a},{cert.b}) k={cert.k} m={cert.m} c={K.n_crossings} err={abs(achieved - x):.4f} {cert.selection}")
        if not ok:
            bad.append(frac)
    # x = v8: the full pipeline (with exact scan) and the strict proof route
    try:
        _, cert = synthesize_det(V8, 0.3, k_max=12)
        gap_ok = abs(cert.proof_route_gap - WEAVE_GAP_K12) < WEAVE_GAP_TOL if cert.proof_route_gap is not None else True
        notes.append(f"x=v8 passes via {cert.selection} k={cert.k}, proof-route gap {cert.proof_route_gap!r}")
        if not (cert.passed and gap_ok):
            bad.append("v8")
    except BudgetExceeded as exc:
        notes.append(f"x=v8 budget-exceeded, best gap {exc.best!r}")
        if abs(exc.best - WEAVE_GAP_K12) >= WEAVE_GAP_TOL:
            bad.append("v8-gap")
    with pytest.raises(BudgetExceeded) as exc:
        synthesize_det(V8, 0.3, k_max=12, exact_fallback=False)
    notes.append(f"strict proof route at x=v8: budget-exceeded, best gap {exc.value.best!r}")
    if abs(exc.value.best - WEAVE_GAP_K12) >= WEAVE_GAP_TOL:
        bad.append("strict-gap")
    _record(8, not bad, "; ".join(notes) + f"; failures={bad}", t0, 600)


def test_criterion_9_xi_and_bounds():
    t0 = time.perf_counter()
    mpmath.mp.dps = 40
    vals = [xi(n) for n in range(12, 1001)]
    in_range = all(0 < v < 1 for v in vals)
    increasing = all(a < b for a, b in zip(vals, vals[1:]))
    worst = 0.0
    for n in range(12, 1001):
        exact = (1 - (8 * mpmath.pi / (mpmath.mpf("11.524") + n * mpmath.root(2, 4))) ** 2) ** mpmath.mpf(1.5)
        worst = max(worst, abs(vals[n - 12] - float(exact)))
    L = closure(pretzel_tangle(7, 9, 7), "N")
    lack = lackenby_upper(L)
    tw = twist_regions(L)
    ok = in_range and increasing and worst < 1e-12 and abs(lack - 20 * V3) < 1e-12 and tw == 3
    _record(
        9,
        ok,
        f"xi(12..1000) in (0,1): {in_range}, increasing: {increasing}, max dev {worst:.2e}; "
        f"lackenby N(P7,9,7) - 20 v3 = {lack - 20 * V3:.1e}; twist regions {tw}",
        t0,
        1,
    )


def test_criterion_10_nonalternating_certification():
    t0 = time.perf_counter()
    n = 3
    D = nonalt_family(n)
    cert = certify_nonalternating(D)
    c_ok = D.n_crossings == 2 * n * n * (n - 1) == 36
    ok = cert.verdict and cert.adequate and cert.prime and cert.non_alternating and c_ok
    _record(
        10,
        ok,
        f"nonalt_family(3): adequate={cert.adequate} prime={cert.prime} non_alternating_diagram={cert.non_alternating} "
        f"crossings={D.n_crossings}",
        t0,
        60,
    )
