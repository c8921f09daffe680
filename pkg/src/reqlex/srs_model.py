"""Structured SRS manifest: the requirement-side input of the metrics toolkit.

A manifest is a JSON document capturing the countable attributes of a software
requirements specification: I/O counts, functional requirements with their
sub-process decomposition, categorised non-functional requirements, design
constraints, external interfaces, deployment spread (users x locations),
look-and-feel features, and COCOMO personnel cost-driver ratings.

Manifests are immutable after construction.  ``parse_manifest`` is a pure
function of its input text; parsed manifests can be shared freely across
concurrent analyses.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field


class ManifestError(Exception):
    """Base class for manifest parsing and validation failures."""


class ManifestSyntaxError(ManifestError):
    """The document is not well-formed JSON."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class ManifestSchemaError(ManifestError):
    """The document is valid JSON but violates the manifest schema."""

    def __init__(self, field_name: str, message: str):
        self.field = field_name
        super().__init__(f"{field_name}: {message}")


class ManifestInvariantError(ManifestError):
    """A structurally valid manifest breaks one or more domain invariants."""

    def __init__(self, violations: list["Violation"]):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


class UndefinedCellError(ValueError):
    """No multiplier is defined for this (attribute, rating) combination."""


class NfrCategory(enum.Enum):
    OPTIONAL = "optional"
    MUST_BE = "must_be"
    VERY_IMPORTANT = "very_important"


#: Precedence weight applied to each non-functional requirement category.
NFR_WEIGHTS = {
    NfrCategory.OPTIONAL: 1,
    NfrCategory.MUST_BE: 2,
    NfrCategory.VERY_IMPORTANT: 3,
}


class ConstraintKind(enum.Enum):
    REGULATORY = "regulatory"
    HARDWARE = "hardware"
    COMMUNICATION = "communication"
    DATABASE = "database"
    OTHER = "other"


class InterfaceKind(enum.Enum):
    HARDWARE = "hardware"
    SOFTWARE = "software"
    COMMUNICATION = "communication"
    OTHER = "other"


class CostDriver(enum.Enum):
    ANALYST_CAPABILITY = "analyst_capability"
    APPLICATION_EXPERIENCE = "application_experience"
    PROGRAMMER_CAPABILITY = "programmer_capability"
    VIRTUAL_MACHINE_EXPERIENCE = "virtual_machine_experience"
    LANGUAGE_EXPERIENCE = "language_experience"


class Rating(enum.Enum):
    VERY_LOW = "very_low"
    LOW = "low"
    NOMINAL = "nominal"
    HIGH = "high"
    VERY_HIGH = "very_high"


#: COCOMO intermediate-model effort multipliers for the personnel cost
#: drivers.  Combinations absent from the published table (the very-high
#: rating of the bottom three drivers) are deliberately not filled in;
#: requesting one is an error rather than an extrapolation.
COST_DRIVER_TABLE: dict[tuple[CostDriver, Rating], float] = {
    (CostDriver.ANALYST_CAPABILITY, Rating.VERY_LOW): 1.46,
    (CostDriver.ANALYST_CAPABILITY, Rating.LOW): 1.19,
    (CostDriver.ANALYST_CAPABILITY, Rating.NOMINAL): 1.00,
    (CostDriver.ANALYST_CAPABILITY, Rating.HIGH): 0.86,
    (CostDriver.ANALYST_CAPABILITY, Rating.VERY_HIGH): 0.71,
    (CostDriver.APPLICATION_EXPERIENCE, Rating.VERY_LOW): 1.29,
    (CostDriver.APPLICATION_EXPERIENCE, Rating.LOW): 1.13,
    (CostDriver.APPLICATION_EXPERIENCE, Rating.NOMINAL): 1.00,
    (CostDriver.APPLICATION_EXPERIENCE, Rating.HIGH): 0.91,
    (CostDriver.APPLICATION_EXPERIENCE, Rating.VERY_HIGH): 0.82,
    (CostDriver.PROGRAMMER_CAPABILITY, Rating.VERY_LOW): 1.42,
    (CostDriver.PROGRAMMER_CAPABILITY, Rating.LOW): 1.17,
    (CostDriver.PROGRAMMER_CAPABILITY, Rating.NOMINAL): 1.00,
    (CostDriver.PROGRAMMER_CAPABILITY, Rating.HIGH): 0.90,
    (CostDriver.VIRTUAL_MACHINE_EXPERIENCE, Rating.VERY_LOW): 1.21,
    (CostDriver.VIRTUAL_MACHINE_EXPERIENCE, Rating.LOW): 1.10,
    (CostDriver.VIRTUAL_MACHINE_EXPERIENCE, Rating.NOMINAL): 1.00,
    (CostDriver.VIRTUAL_MACHINE_EXPERIENCE, Rating.HIGH): 0.90,
    (CostDriver.LANGUAGE_EXPERIENCE, Rating.VERY_LOW): 1.14,
    (CostDriver.LANGUAGE_EXPERIENCE, Rating.LOW): 1.07,
    (CostDriver.LANGUAGE_EXPERIENCE, Rating.NOMINAL): 1.00,
    (CostDriver.LANGUAGE_EXPERIENCE, Rating.HIGH): 0.95,
}


def multiplier_for(attribute: CostDriver | str, rating: Rating | str) -> float:
    """Return the effort multiplier for a personnel cost-driver rating.

    Raises UndefinedCellError for combinations the table leaves blank.
    """
    if isinstance(attribute, str):
        attribute = CostDriver(attribute)
    if isinstance(rating, str):
        rating = Rating(rating)
    try:
        return COST_DRIVER_TABLE[(attribute, rating)]
    except KeyError:
        raise UndefinedCellError(
            f"no multiplier defined for {attribute.value}/{rating.value}"
        ) from None


@dataclass(frozen=True)
class FunctionalReq:
    """One functional requirement and the size of its decomposition."""

    label: str
    subprocess_count: int


@dataclass(frozen=True)
class NonFunctionalReq:
    label: str
    category: NfrCategory


@dataclass(frozen=True)
class Constraint:
    label: str
    kind: ConstraintKind


@dataclass(frozen=True)
class ExternalInterface:
    label: str
    kind: InterfaceKind


@dataclass(frozen=True)
class Feature:
    """A look-and-feel feature; weights multiply, so 1 is the neutral weight."""

    label: str
    weight: int


@dataclass(frozen=True)
class CostDriverRating:
    attribute: CostDriver
    rating: Rating


@dataclass(frozen=True)
class SrsManifest:
    """Countable requirement attributes for one program."""

    name: str
    inputs: int = 0
    outputs: int = 0
    interfaces: int = 0
    files: int = 0
    functions: tuple[FunctionalReq, ...] = ()
    nfrs: tuple[NonFunctionalReq, ...] = ()
    constraints: tuple[Constraint, ...] = ()
    external_interfaces: tuple[ExternalInterface, ...] = ()
    users: int = 1
    locations: int = 1
    features: tuple[Feature, ...] = ()
    personnel: tuple[CostDriverRating, ...] = ()


@dataclass(frozen=True)
class Violation:
    """One broken invariant: which field, and which rule it breaks."""

    field: str
    message: str

    def __str__(self) -> str:
        return f"{self.field}: {self.message}"


def validate_manifest(m: SrsManifest) -> list[Violation]:
    """Check every domain invariant; returns [] when the manifest is sound.

    Violations are data, not exceptions: a manifest built in code can be
    inspected without try/except.  ``parse_manifest`` refuses to return a
    manifest with a non-empty violation list.
    """
    out: list[Violation] = []
    if not m.name:
        out.append(Violation("name", "must be non-empty"))
    for fname in ("inputs", "outputs", "interfaces", "files"):
        if getattr(m, fname) < 0:
            out.append(Violation(f"io.{fname}", "count must be non-negative"))
    for i, fn in enumerate(m.functions):
        if fn.subprocess_count < 0:
            out.append(
                Violation(f"functions[{i}]", "subprocess count must be non-negative")
            )
    if m.users < 1:
        out.append(Violation("deployment.users", "must be at least 1"))
    if m.locations < 1:
        out.append(Violation("deployment.locations", "must be at least 1"))
    for i, feat in enumerate(m.features):
        if feat.weight < 1:
            out.append(Violation(f"features[{i}]", "weight must be at least 1"))
    seen: set[CostDriver] = set()
    for i, pr in enumerate(m.personnel):
        if (pr.attribute, pr.rating) not in COST_DRIVER_TABLE:
            out.append(
                Violation(
                    f"personnel[{i}]",
                    f"no multiplier defined for {pr.attribute.value}/{pr.rating.value}",
                )
            )
        if pr.attribute in seen:
            out.append(
                Violation(f"personnel[{i}]", f"duplicate attribute {pr.attribute.value}")
            )
        seen.add(pr.attribute)
    return out


# ---------------------------------------------------------------------------
# JSON wire format

_IO_KEYS = ("inputs", "outputs", "interfaces", "files")
_TOP_KEYS = {
    "name",
    "io",
    "functions",
    "nfrs",
    "constraints",
    "external_interfaces",
    "deployment",
    "features",
    "personnel",
}


def _require(cond: bool, field_name: str, message: str) -> None:
    if not cond:
        raise ManifestSchemaError(field_name, message)


def _as_count(value, field_name: str) -> int:
    _require(isinstance(value, int) and not isinstance(value, bool), field_name,
             "must be an integer")
    _require(value >= 0, field_name, "must be non-negative")
    return value


def _as_str(value, field_name: str) -> str:
    _require(isinstance(value, str), field_name, "must be a string")
    return value


def _as_obj(value, field_name: str, allowed: set[str]) -> dict:
    _require(isinstance(value, dict), field_name, "must be an object")
    for key in value:
        _require(key in allowed, f"{field_name}.{key}", "unknown key")
    return value


def _as_list(value, field_name: str) -> list:
    _require(isinstance(value, list), field_name, "must be an array")
    return value


def _as_enum(value, field_name: str, enum_cls):
    _require(isinstance(value, str), field_name, "must be a string")
    try:
        return enum_cls(value)
    except ValueError:
        choices = ", ".join(e.value for e in enum_cls)
        raise ManifestSchemaError(field_name, f"must be one of: {choices}") from None


def manifest_from_dict(doc: dict) -> SrsManifest:
    """Build a manifest from a decoded JSON object, enforcing the schema.

    Raises ManifestSchemaError on shape problems and ManifestInvariantError
    when the shape is fine but a domain invariant fails.
    """
    _as_obj(doc, "$", _TOP_KEYS)
    _require("name" in doc, "name", "required key is missing")
    name = _as_str(doc["name"], "name")

    io = _as_obj(doc.get("io", {}), "io", set(_IO_KEYS))
    counts = {k: _as_count(io.get(k, 0), f"io.{k}") for k in _IO_KEYS}

    functions = []
    for i, item in enumerate(_as_list(doc.get("functions", []), "functions")):
        item = _as_obj(item, f"functions[{i}]", {"label", "subprocesses"})
        functions.append(
            FunctionalReq(
                label=_as_str(item.get("label", ""), f"functions[{i}].label"),
                subprocess_count=_as_count(
                    item.get("subprocesses", 0), f"functions[{i}].subprocesses"
                ),
            )
        )

    nfrs = []
    for i, item in enumerate(_as_list(doc.get("nfrs", []), "nfrs")):
        item = _as_obj(item, f"nfrs[{i}]", {"label", "category"})
        _require("category" in item, f"nfrs[{i}].category", "required key is missing")
        nfrs.append(
            NonFunctionalReq(
                label=_as_str(item.get("label", ""), f"nfrs[{i}].label"),
                category=_as_enum(item["category"], f"nfrs[{i}].category", NfrCategory),
            )
        )

    constraints = []
    for i, item in enumerate(_as_list(doc.get("constraints", []), "constraints")):
        item = _as_obj(item, f"constraints[{i}]", {"label", "kind"})
        _require("kind" in item, f"constraints[{i}].kind", "required key is missing")
        constraints.append(
            Constraint(
                label=_as_str(item.get("label", ""), f"constraints[{i}].label"),
                kind=_as_enum(item["kind"], f"constraints[{i}].kind", ConstraintKind),
            )
        )

    external = []
    key = "external_interfaces"
    for i, item in enumerate(_as_list(doc.get(key, []), key)):
        item = _as_obj(item, f"{key}[{i}]", {"label", "kind"})
        _require("kind" in item, f"{key}[{i}].kind", "required key is missing")
        external.append(
            ExternalInterface(
                label=_as_str(item.get("label", ""), f"{key}[{i}].label"),
                kind=_as_enum(item["kind"], f"{key}[{i}].kind", InterfaceKind),
            )
        )

    deployment = _as_obj(doc.get("deployment", {}), "deployment", {"users", "locations"})
    users = _as_count(deployment.get("users", 1), "deployment.users")
    locations = _as_count(deployment.get("locations", 1), "deployment.locations")

    features = []
    for i, item in enumerate(_as_list(doc.get("features", []), "features")):
        item = _as_obj(item, f"features[{i}]", {"label", "weight"})
        _require("weight" in item, f"features[{i}].weight", "required key is missing")
        features.append(
            Feature(
                label=_as_str(item.get("label", ""), f"features[{i}].label"),
                weight=_as_count(item["weight"], f"features[{i}].weight"),
            )
        )

    personnel = []
    for i, item in enumerate(_as_list(doc.get("personnel", []), "personnel")):
        item = _as_obj(item, f"personnel[{i}]", {"attribute", "rating"})
        for req_key in ("attribute", "rating"):
            _require(req_key in item, f"personnel[{i}].{req_key}",
                     "required key is missing")
        attribute = _as_enum(item["attribute"], f"personnel[{i}].attribute", CostDriver)
        rating = _as_enum(item["rating"], f"personnel[{i}].rating", Rating)
        _require(
            (attribute, rating) in COST_DRIVER_TABLE,
            f"personnel[{i}].rating",
            f"no multiplier defined for {attribute.value}/{rating.value}",
        )
        personnel.append(CostDriverRating(attribute=attribute, rating=rating))

    manifest = SrsManifest(
        name=name,
        inputs=counts["inputs"],
        outputs=counts["outputs"],
        interfaces=counts["interfaces"],
        files=counts["files"],
        functions=tuple(functions),
        nfrs=tuple(nfrs),
        constraints=tuple(constraints),
        external_interfaces=tuple(external),
        users=users,
        locations=locations,
        features=tuple(features),
        personnel=tuple(personnel),
    )
    violations = validate_manifest(manifest)
    if violations:
        raise ManifestInvariantError(violations)
    return manifest


def parse_manifest(text: str) -> SrsManifest:
    """Parse a manifest document. See ``manifest_from_dict`` for failure modes."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ManifestSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    return manifest_from_dict(doc)


def manifest_to_dict(m: SrsManifest) -> dict:
    """Serialize a manifest to its canonical wire form (all sections explicit)."""
    return {
        "name": m.name,
        "io": {
            "inputs": m.inputs,
            "outputs": m.outputs,
            "interfaces": m.interfaces,
            "files": m.files,
        },
        "functions": [
            {"label": f.label, "subprocesses": f.subprocess_count} for f in m.functions
        ],
        "nfrs": [{"label": n.label, "category": n.category.value} for n in m.nfrs],
        "constraints": [{"label": c.label, "kind": c.kind.value} for c in m.constraints],
        "external_interfaces": [
            {"label": e.label, "kind": e.kind.value} for e in m.external_interfaces
        ],
        "deployment": {"users": m.users, "locations": m.locations},
        "features": [{"label": f.label, "weight": f.weight} for f in m.features],
        "personnel": [
            {"attribute": p.attribute.value, "rating": p.rating.value}
            for p in m.personnel
        ],
    }


def serialize_manifest(m: SrsManifest, indent: int | None = 2) -> str:
    return json.dumps(manifest_to_dict(m), indent=indent) + "\n"
