"""Link families built from pretzel and weaving tangles.

``synthesize_det`` mixes ``a`` copies of the minimal-density pretzel tangle
P_{3,m,3} with ``b`` copies of the weaving tangle W_{k,k}. Both have k(k-1)
crossings, so the D closure of their Conway sum has determinant density
equal to the weighted average of the two summand densities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from linkdensity.adequacy import adequacy_report, is_strongly_alternating
from linkdensity.densities import V3, V8, adams_upper_value, det_density_value, xi
from linkdensity.diagram.core import LinkDiagram, Tangle
from linkdensity.diagram.generators import closure, conway_sum, mirror, pretzel_tangle, weaving_tangle
from linkdensity.errors import BudgetExceeded, ConsistencyError, DomainError
from linkdensity.invariants import determinant_goeritz, weaving_determinant

FULL_RECOMPUTE_CAP = 3000
DEFAULT_K_MAX = 12
MIN_WEAVING_ORDER = 4


@dataclass(frozen=True)
class RationalTarget:
    a: int
    b: int

    @property
    def value(self) -> float:
        return self.b / (self.a + self.b) * V8


def rational_target(x: float, eps: float) -> RationalTarget:
    """Smallest a + b (then smallest b) with |b/(a+b) v8 - x| <= eps/2."""
    if not 0.0 <= x <= V8:
        raise DomainError(f"target {x} outside [0, v8]")
    if not eps > 0:
        raise DomainError(f"tolerance must be positive, got {eps}")
    s = 1
    while True:
        for b in range(s + 1):
            if abs(b / s * V8 - x) <= eps / 2:
                return RationalTarget(s - b, b)
        s += 1


def pretzel_density(m: int) -> float:
    """d_det of D(P_{3,m,3}): 2 pi ln(6m + 9) / (m + 6)."""
    return 2.0 * math.pi * math.log(6 * m + 9) / (m + 6)


def min_pretzel_order(bound: float) -> int:
    """Smallest m >= 1 with pretzel_density(m) < bound, confirmed on the next 10 values."""
    if not bound > 0:
        raise DomainError(f"bound must be positive, got {bound}")
    m = 1
    while True:
        if pretzel_density(m) < bound and all(pretzel_density(m + j) < bound for j in range(1, 11)):
            return m
        m += 1


def weaving_density(k: int) -> float:
    return det_density_value(weaving_determinant(k, "D"), k * (k - 1))


def choose_weaving_order(bound: float, k_max: int = DEFAULT_K_MAX, min_crossings: int = 0) -> int:
    """Smallest k in [4, k_max] with |d_det(D(W_{k,k})) - v8| < bound and k(k-1) >= min_crossings."""
    if not bound > 0:
        raise DomainError(f"bound must be positive, got {bound}")
    best_gap, best_k = math.inf, None
    for k in range(MIN_WEAVING_ORDER, k_max + 1):
        gap = abs(weaving_density(k) - V8)
        if gap < best_gap:
            best_gap, best_k = gap, k
        if gap < bound and k * (k - 1) >= min_crossings:
            return k
    raise BudgetExceeded(
        f"no weaving order k <= {k_max} has |d_det - v8| < {bound} with k(k-1) >= {min_crossings}"
        f" (maximal-diagram inequality); best gap {best_gap!r} at k = {best_k}",
        best=best_gap if best_k is not None else None,
        best_parameter=best_k,
    )


def predict_det_density(a: int, b: int, m: int, k: int) -> float:
    """Weighted average of the pretzel and weaving densities."""
    if a < 0 or b < 0 or a + b == 0:
        raise DomainError(f"need a, b >= 0 not both zero, got {(a, b)}")
    if m != k * (k - 1) - 6:
        raise DomainError(f"crossing counts differ: m = {m} but k(k-1) - 6 = {k * (k - 1) - 6}")
    c = k * (k - 1)
    total = 0.0
    if a:
        total += a * det_density_value(6 * m + 9, c)
    if b:
        total += b * det_density_value(weaving_determinant(k, "D"), c)
    return total / (a + b)


@dataclass(frozen=True)
class SynthesisCertificate:
    target: float
    eps: float
    a: int
    b: int
    k: int | None
    m: int | None
    m_tilde: int | None
    predicted_det: int
    crossings: int
    mode: str
    selection: str
    adequate: bool
    k_max: int
    proof_route_gap: float | None = None

    @property
    def achieved(self) -> float:
        return det_density_value(self.predicted_det, self.crossings)

    @property
    def passed(self) -> bool:
        return abs(self.achieved - self.target) < self.eps

    def lines(self) -> list[str]:
        gap = "none" if self.proof_route_gap is None else repr(self.proof_route_gap)
        return [
            f"target = {self.target!r}",
            f"eps = {self.eps!r}",
            f"k_max = {self.k_max}",
            f"a = {self.a}",
            f"b = {self.b}",
            f"k = {self.k}",
            f"m = {self.m}",
            f"m_tilde = {self.m_tilde}",
            f"selection = {self.selection}",
            f"proof_route_best_gap = {gap}",
            f"crossings = {self.crossings}",
            f"adequate = {str(self.adequate).lower()}",
            f"determinant = {self.predicted_det}",
            f"verification = {self.mode}",
            f"achieved_det_density = {self.achieved!r}",
            f"error = {abs(self.achieved - self.target)!r}",
            f"pass = {str(self.passed).lower()}",
        ]


def _scan_orders(x: float, eps: float, a: int, b: int, k_max: int) -> int:
    best = (math.inf, None)
    for k in range(MIN_WEAVING_ORDER, k_max + 1):
        err = abs(predict_det_density(a, b, k * (k - 1) - 6, k) - x)
        if err < eps:
            return k
        best = min(best, (err, k))
    raise BudgetExceeded(
        f"no k <= {k_max} gives |d_det - x| < {eps} for (a, b) = {(a, b)}; best error {best[0]!r} at k = {best[1]}",
        best=best[0],
        best_parameter=best[1],
    )


def synthesize_det(
    x: float,
    eps: float,
    k_max: int = DEFAULT_K_MAX,
    full_recompute_cap: int = FULL_RECOMPUTE_CAP,
    exact_fallback: bool = True,
) -> tuple[LinkDiagram, SynthesisCertificate]:
    """A link whose determinant density is within ``eps`` of ``x``.

    Parameters come first from the sufficient inequalities (pretzel order
    from the minimal-diagram bound, weaving order from the maximal-diagram
    bound). Those inequalities are loose, so when they need k > k_max and
    ``exact_fallback`` is set, the smallest k in [4, k_max] whose exact
    predicted density already meets the target is used instead.
    """
    target = rational_target(x, eps)
    a, b = target.a, target.b
    proof_gap = None
    m_tilde = None
    selection = "proof-bounds"
    if b == 0:
        m = min_pretzel_order(eps / 2)
        k = None
        tangles = [pretzel_tangle(3, m, 3)]
        predicted = 6 * m + 9
        crossings = m + 6
    else:
        try:
            if a == 0:
                k = choose_weaving_order(eps / 2, k_max)
            else:
                m_tilde = min_pretzel_order((a + b) / a * eps / 2)
                k = choose_weaving_order((a + b) / b * eps / 2, k_max, min_crossings=m_tilde + 6)
        except BudgetExceeded as exc:
            if not exact_fallback:
                raise
            proof_gap = exc.best
            k = _scan_orders(x, eps, a, b, k_max)
            selection = "exact-scan"
        m = k * (k - 1) - 6
        p = pretzel_tangle(3, m, 3)
        w = weaving_tangle(k, k)
        tangles = [p] * a + [w] * b
        predicted = (6 * m + 9) ** a * weaving_determinant(k, "D") ** b
        crossings = (a + b) * k * (k - 1)
    for t in {id(t): t for t in tangles}.values():
        if not is_strongly_alternating(t):
            raise ConsistencyError(f"summand {t.name} is not strongly alternating")
    K = closure(conway_sum(*tangles), "D").with_name(f"synth(x={x!r},eps={eps!r})")
    if K.n_crossings != crossings:
        raise ConsistencyError(f"assembled diagram has {K.n_crossings} crossings, expected {crossings}")
    adequate = adequacy_report(K).adequate
    if not adequate:
        raise ConsistencyError("assembled diagram is not adequate; crossing number not certified")
    mode = "predicted"
    if crossings <= full_recompute_cap:
        full = determinant_goeritz(K)
        if full != predicted:
            raise ConsistencyError(f"Goeritz det {full} != predicted product {predicted}")
        mode = "full-recompute"
    cert = SynthesisCertificate(
        target=x, eps=eps, a=a, b=b, k=k, m=m, m_tilde=m_tilde, predicted_det=predicted,
        crossings=crossings, mode=mode, selection=selection, adequate=adequate,
        k_max=k_max, proof_route_gap=proof_gap,
    )
    if not cert.passed:
        raise ConsistencyError(f"synthesized density {cert.achieved} misses target {x} by >= {eps}")
    return K, cert


@dataclass(frozen=True)
class VolSynthesisRecipe:
    a: int
    b: int
    n: int
    m: int
    k: int
    eps: float | None
    crossings: int
    checks: dict[str, str] = field(default_factory=dict)
    upper_density: float = 0.0

    def lines(self) -> list[str]:
        out = [f"{key} = {getattr(self, key)}" for key in ("a", "b", "n", "m", "k", "eps", "crossings")]
        out += [f"check.{name} = {status}" for name, status in self.checks.items()]
        out.append(f"upper_density = {self.upper_density!r}")
        return out


def n_size_threshold(a: int, b: int, eps: float) -> float:
    """Right-hand side of the xi_n inequality."""
    s = a + b
    denom = 2 * b * V8 - eps * s
    if denom <= 0:
        raise DomainError(f"n_size inequality needs eps < 2 b v8 / (a + b), got eps = {eps}")
    return max(1 - s * eps / denom, 2 * b * V8 / (2 * b * V8 + eps * s))


def build_vol_link(a: int, b: int, n: int, m: int, k: int, eps: float | None = None) -> tuple[LinkDiagram, VolSynthesisRecipe]:
    """N closure of a*n copies of P_{7,m,7} followed by b*n copies of W_{k,k}.

    Only the combinatorial side is checked. The maximal-size volume
    condition needs hyperbolic volumes and is reported as unverified.
    """
    if a < 0 or b < 0 or a + b == 0:
        raise DomainError(f"need a, b >= 0 not both zero, got {(a, b)}")
    if k < MIN_WEAVING_ORDER:
        raise DomainError(f"weaving order must be >= 4 for strong alternation, got k = {k}")
    if n < 12:
        raise DomainError(f"belted-sum volume bound needs n >= 12, got n = {n}")
    if m != k * (k - 1) - 14:
        raise DomainError(f"crossing match violated: m = {m} but k(k-1) - 14 = {k * (k - 1) - 14}")
    checks = {"crossing_match": "verified", "maximal_size": "unverified-without-oracle"}
    if eps is None:
        checks["size_of_m"] = "unchecked-no-eps"
        checks["n_size"] = "unchecked-no-eps"
    else:
        if a and not 40 * a * V3 / ((a + b) * (m + 14)) < eps / 2:
            raise DomainError(f"size_of_m violated: 40 a v3 / ((a+b)(m+14)) >= eps/2 at m = {m}")
        checks["size_of_m"] = "verified" if a else "not-applicable"
        if b:
            if not xi(n) > n_size_threshold(a, b, eps):
                raise DomainError(f"n_size violated: xi_{n} = {xi(n)!r} <= {n_size_threshold(a, b, eps)!r}")
            checks["n_size"] = "verified"
        else:
            checks["n_size"] = "not-applicable"
    tangles = [pretzel_tangle(7, m, 7)] * (a * n) + [weaving_tangle(k, k)] * (b * n)
    K = closure(conway_sum(*tangles), "N").with_name(f"vol({a},{b},{n},{m},{k})")
    c = n * (a + b) * k * (k - 1)
    if K.n_crossings != c:
        raise ConsistencyError(f"assembled diagram has {K.n_crossings} crossings, expected {c}")
    upper = min(adams_upper_value(c), V8 * c) / c
    return K, VolSynthesisRecipe(a, b, n, m, k, eps, c, checks, upper)


def nonalt_family(n: int) -> LinkDiagram:
    """N closure of W_{n,n} + mirror(W_{n,n}) repeated n times: 2n^2(n-1) crossings."""
    if n < 3:
        raise DomainError(f"non-alternating family needs n >= 3, got {n}")
    w = weaving_tangle(n, n)
    wb = mirror(w)
    return closure(conway_sum(*([w, wb] * n)), "N").with_name(f"nonalt({n})")


def cycle_family(T: Tangle, n: int) -> LinkDiagram:
    """N closure of the n-fold Conway sum of a strongly alternating tangle."""
    if n < 2:
        raise DomainError(f"cycle family needs n >= 2 copies, got {n}")
    if not is_strongly_alternating(T):
        raise DomainError(f"tangle {T.name} is not strongly alternating; crossing additivity does not apply")
    return closure(conway_sum(*([T] * n)), "N").with_name(f"cycle({T.name},{n})")
