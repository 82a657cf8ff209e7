"""Determinant density, the xi_n factor, and volume upper bounds.

Hyperbolic volumes are never computed here. They can be supplied through
a :class:`VolumeOracle` and are then only checked against the bounds.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

from linkdensity.adequacy import adequacy_report
from linkdensity.diagram.core import LinkDiagram, require_connected
from linkdensity.diagram.predicates import is_alternating, is_reduced, twist_regions
from linkdensity.errors import DomainError
from linkdensity.invariants import determinant

# Regular ideal octahedron: 4 * Catalan's constant = 8 * Lobachevsky(pi / 4).
V8 = 3.663862376708876
# Regular ideal tetrahedron: 3 * Lobachevsky(pi / 3).
V3 = 1.0149416064096536

LN2 = math.log(2.0)


@dataclass(frozen=True)
class GeometricConstants:
    v3: float = V3
    v8: float = V8


CONSTANTS = GeometricConstants()


def ln_big(n: int) -> float:
    """Natural log of a positive integer of any size.

    Uses the top 64 bits as mantissa and the bit length as exponent, so the
    relative error stays near double rounding regardless of size.
    """
    if n <= 0:
        raise DomainError(f"log of non-positive integer {n}")
    shift = max(0, n.bit_length() - 64)
    return math.log(n >> shift) + shift * LN2


def det_density_value(det: int, crossings: int) -> float:
    if crossings < 1:
        raise DomainError("determinant density undefined for 0 crossings")
    if det == 0:
        return -math.inf
    return 2.0 * math.pi * ln_big(det) / crossings


@dataclass(frozen=True)
class DensityReport:
    diagram_id: str | None
    crossings: int
    determinant: int
    det_density: float
    certified_crossing: bool

    @property
    def degenerate(self) -> bool:
        return self.determinant == 0

    def lines(self) -> list[str]:
        return [
            f"diagram = {self.diagram_id}",
            f"crossings = {self.crossings}",
            f"certified_crossing = {str(self.certified_crossing).lower()}",
            f"determinant = {self.determinant}",
            f"det_density = {self.det_density!r}",
        ]


def det_density(D: LinkDiagram) -> DensityReport:
    """2 pi ln(det) / c with c the diagram crossing count."""
    require_connected(D)
    c = D.n_crossings
    if c < 1:
        raise DomainError("determinant density undefined for a 0-crossing diagram")
    det = determinant(D)
    certified = adequacy_report(D).adequate
    return DensityReport(D.name, c, det, det_density_value(det, c), certified)


def xi(n: int) -> float:
    """(1 - (8 pi / (11.524 + n 2^(1/4)))^2)^(3/2), defined for n >= 12."""
    if n < 12:
        raise DomainError(f"xi_n requires n >= 12 (belted-sum volume bound hypothesis), got n={n}")
    ratio = 8.0 * math.pi / (11.524 + n * 2.0 ** 0.25)
    return (1.0 - ratio * ratio) ** 1.5


def lackenby_upper(D: LinkDiagram) -> float:
    """10 v3 (tw - 1), the twist-number volume bound for reduced alternating diagrams."""
    if not (is_alternating(D) and is_reduced(D)):
        raise DomainError("twist-number volume bound needs a reduced alternating diagram")
    tw = twist_regions(D)
    if tw < 2:
        raise DomainError(f"twist-number bound needs at least 2 twist regions, got {tw}")
    return 10.0 * V3 * (tw - 1)


def adams_upper_value(c: int) -> float:
    if c < 5:
        raise DomainError(f"crossing-number volume bound needs c >= 5, got {c}")
    return (c - 5) * V8 + 4.0 * V3


@dataclass(frozen=True)
class AdamsBound:
    value: float
    crossings: int
    certified: bool


def adams_upper(D: LinkDiagram) -> AdamsBound:
    """(c - 5) v8 + 4 v3; c is certified when the diagram is adequate."""
    c = D.n_crossings
    value = adams_upper_value(c)
    return AdamsBound(value, c, adequacy_report(D).adequate)


class InconsistentOracleError(DomainError):
    """An oracle volume contradicts a proven upper bound: the data is bad."""


@dataclass
class VolumeOracle:
    """Externally computed volumes keyed by diagram id."""

    volumes: dict[str, float] = field(default_factory=dict)
    sources: dict[str, str] = field(default_factory=dict)

    @classmethod
    def from_csv(cls, path: str | Path) -> "VolumeOracle":
        out = cls()
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames != ["id", "volume", "source"]:
                raise DomainError(f"volume CSV header must be id,volume,source, got {reader.fieldnames}")
            for row in reader:
                v = float(row["volume"])
                if not v > 0:
                    raise DomainError(f"volume for {row['id']} must be positive, got {v}")
                out.volumes[row["id"]] = v
                out.sources[row["id"]] = row["source"]
        return out

    def get(self, key: str | None) -> float | None:
        return self.volumes.get(key) if key is not None else None


@dataclass(frozen=True)
class VolumeBoundInterval:
    """Bounds on vol / c."""

    lower: float
    upper: float
    basis: tuple[str, ...]

    def lines(self) -> list[str]:
        return [
            f"lower = {self.lower!r}",
            f"upper = {self.upper!r}",
            f"basis = {','.join(self.basis)}",
        ]


def vol_density_interval(D: LinkDiagram, oracle: VolumeOracle | None = None) -> VolumeBoundInterval:
    """Interval for vol(D)/c from the upper bounds that apply to the diagram."""
    require_connected(D)
    c = D.n_crossings
    if c < 1:
        raise DomainError("volume density undefined for a 0-crossing diagram")
    bounds = {"octahedral": V8 * c}
    if c >= 5:
        bounds["adams"] = adams_upper_value(c)
    if is_alternating(D) and is_reduced(D):
        tw = twist_regions(D)
        if tw >= 2:
            bounds["lackenby"] = 10.0 * V3 * (tw - 1)
    upper = min(bounds.values())
    basis = tuple(sorted(k for k, v in bounds.items() if v == upper)) + tuple(
        sorted(f"also:{k}" for k, v in bounds.items() if v != upper)
    )
    lower = 0.0
    vol = oracle.get(D.name) if oracle else None
    if vol is not None:
        if vol > upper * (1 + 1e-12):
            raise InconsistentOracleError(
                f"oracle volume {vol} for {D.name} exceeds upper bound {upper}"
            )
        lower = vol / c
        basis = basis + ("oracle",)
    return VolumeBoundInterval(lower, upper / c, basis)
