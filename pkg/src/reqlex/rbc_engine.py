"""Requirement-based complexity (RBC) computed from an SRS manifest.

Ten attribute values feed the composite:

    IOC  input-output complexity      inputs + outputs + interfaces + files
    FR   functional complexity        #functions x sum of sub-processes
    NFR  non-functional complexity    weighted count (optional=1, must-be=2,
                                      very-important=3)
    RC   requirement complexity       combination of FR and NFR (see below)
    PC   product complexity           IOC x RC
    PCA  personnel complexity         sum of cost-driver multipliers
    DCI  design constraints imposed   #constraints
    IFC  interface complexity         #external interfaces
    ULC  user-location complexity     users x locations
    SFC  system feature complexity    product of feature weights (0 if none)

    RBC = ((PC * PCA) + DCI + IFC + SFC) * ULC

The published definition of RC is ambiguous: the formula multiplies FR and
NFR while the worked reference example adds them (and reaches the same
number only because its NFR is zero).  Both readings are supported via
``RbcConfig``; the default is the product with NFR floored at 1, which
matches the formula's shape and reproduces the reference example.

All functions are pure; a given manifest and config always produce the
identical breakdown.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .srs_model import (
    CostDriverRating,
    Feature,
    ManifestInvariantError,
    NFR_WEIGHTS,
    SrsManifest,
    multiplier_for,
    validate_manifest,
)

RC_MODES = ("product", "sum")


@dataclass(frozen=True)
class RbcConfig:
    """Tunables for the requirement-complexity step.

    rc_mode: "product" combines FR and NFR multiplicatively, "sum" adds them.
    nfr_floor: in product mode, substitute 1 for a zero NFR so that a purely
        functional specification does not annihilate the whole measure.
    """

    rc_mode: str = "product"
    nfr_floor: bool = True

    def __post_init__(self):
        if self.rc_mode not in RC_MODES:
            raise ValueError(f"rc_mode must be one of {RC_MODES}")


@dataclass(frozen=True)
class RbcBreakdown:
    """All intermediate attribute values plus the final RBC for one program."""

    ioc: int
    fr: int
    nfr: int
    rc: float
    pc: float
    pca: float
    dci: int
    ifc: int
    ulc: int
    sfc: int
    rbc: float

    def recompose(self) -> float:
        """Re-evaluate the composite from the stored fields (identity check)."""
        return ((self.pc * self.pca) + self.dci + self.ifc + self.sfc) * self.ulc

    def as_dict(self) -> dict:
        return {
            "ioc": self.ioc,
            "fr": self.fr,
            "nfr": self.nfr,
            "rc": self.rc,
            "pc": self.pc,
            "pca": self.pca,
            "dci": self.dci,
            "ifc": self.ifc,
            "ulc": self.ulc,
            "sfc": self.sfc,
            "rbc": self.rbc,
        }


def compute_ioc(m: SrsManifest) -> int:
    """Input-output complexity: plain sum of the four I/O-side counts."""
    return m.inputs + m.outputs + m.interfaces + m.files


def compute_fr(m: SrsManifest) -> int:
    """Functional complexity: function count times total sub-process count."""
    return len(m.functions) * sum(f.subprocess_count for f in m.functions)


def compute_nfr(m: SrsManifest) -> int:
    """Non-functional complexity: category weight times count, summed."""
    return sum(NFR_WEIGHTS[n.category] for n in m.nfrs)


def compute_rc(fr: float, nfr: float, cfg: RbcConfig = RbcConfig()) -> float:
    if cfg.rc_mode == "sum":
        return fr + nfr
    if cfg.nfr_floor:
        return fr * max(nfr, 1)
    return fr * nfr


def compute_pc(ioc: float, rc: float) -> float:
    return ioc * rc


def compute_pca(ratings: tuple[CostDriverRating, ...] | list[CostDriverRating]) -> float:
    """Personnel complexity: sum of the rated multipliers.

    Only rated attributes contribute; an empty rating list yields the neutral
    1.00 rather than 0, which would zero out the composite.
    """
    if not ratings:
        return 1.00
    return sum(multiplier_for(r.attribute, r.rating) for r in ratings)


def compute_dci(m: SrsManifest) -> int:
    return len(m.constraints)


def compute_ifc(m: SrsManifest) -> int:
    return len(m.external_interfaces)


def compute_ulc(m: SrsManifest) -> int:
    return m.users * m.locations


def compute_sfc(features: tuple[Feature, ...] | list[Feature]) -> int:
    """System feature complexity: product of feature weights, 0 when featureless."""
    if not features:
        return 0
    return math.prod(f.weight for f in features)


def compute_rbc(m: SrsManifest, cfg: RbcConfig = RbcConfig()) -> RbcBreakdown:
    """Evaluate the full attribute breakdown and composite for a manifest.

    The manifest must be invariant-clean; violations raise
    ManifestInvariantError exactly as parsing would.
    """
    violations = validate_manifest(m)
    if violations:
        raise ManifestInvariantError(violations)

    ioc = compute_ioc(m)
    fr = compute_fr(m)
    nfr = compute_nfr(m)
    rc = compute_rc(fr, nfr, cfg)
    pc = compute_pc(ioc, rc)
    pca = compute_pca(m.personnel)
    dci = compute_dci(m)
    ifc = compute_ifc(m)
    ulc = compute_ulc(m)
    sfc = compute_sfc(m.features)
    rbc = ((pc * pca) + dci + ifc + sfc) * ulc
    return RbcBreakdown(
        ioc=ioc, fr=fr, nfr=nfr, rc=rc, pc=pc, pca=pca,
        dci=dci, ifc=ifc, ulc=ulc, sfc=sfc, rbc=rbc,
    )


def format_breakdown(name: str, b: RbcBreakdown) -> str:
    """Human-readable table: the ten attributes and the 2-decimal composite."""
    rows = [
        ("IOC", b.ioc), ("FR", b.fr), ("NFR", b.nfr), ("RC", b.rc), ("PC", b.pc),
        ("PCA", b.pca), ("DCI", b.dci), ("IFC", b.ifc), ("ULC", b.ulc), ("SFC", b.sfc),
    ]
    lines = [f"Program: {name}"]
    for label, value in rows:
        if isinstance(value, float) and not value.is_integer():
            lines.append(f"  {label:<4} {value:g}")
        else:
            lines.append(f"  {label:<4} {int(value)}")
    lines.append(f"RBC: {b.rbc:.2f}")
    return "\n".join(lines)
