import json
from pathlib import Path

import pytest

from reqlex.srs_model import (
    COST_DRIVER_TABLE,
    CostDriver,
    CostDriverRating,
    Feature,
    ManifestInvariantError,
    ManifestSchemaError,
    ManifestSyntaxError,
    Rating,
    SrsManifest,
    UndefinedCellError,
    manifest_to_dict,
    multiplier_for,
    parse_manifest,
    serialize_manifest,
    validate_manifest,
)

import reqlex

MANIFEST_DIR = Path(reqlex.__file__).parent / "corpus" / "manifests"


class TestParse:
    def test_factorial_manifest(self, factorial_manifest_text):
        m = parse_manifest(factorial_manifest_text)
        assert m.name == "factorial"
        assert (m.inputs, m.outputs, m.interfaces, m.files) == (1, 1, 1, 1)
        assert len(m.functions) == 1
        assert m.functions[0].label == "factorial"
        assert m.functions[0].subprocess_count == 2
        assert m.nfrs == ()
        assert m.constraints == ()
        assert m.external_interfaces == ()
        assert (m.users, m.locations) == (1, 1)
        assert m.personnel == (
            CostDriverRating(CostDriver.PROGRAMMER_CAPABILITY, Rating.LOW),
        )

    def test_empty_document_is_syntax_error(self):
        with pytest.raises(ManifestSyntaxError):
            parse_manifest("")

    def test_syntax_error_reports_position(self):
        with pytest.raises(ManifestSyntaxError) as exc:
            parse_manifest('{"name": "x",}')
        assert exc.value.line == 1
        assert exc.value.column is not None

    def test_undefined_table_cell_is_schema_violation(self):
        doc = {
            "name": "x",
            "personnel": [
                {"attribute": "programmer_capability", "rating": "very_high"}
            ],
        }
        with pytest.raises(ManifestSchemaError) as exc:
            parse_manifest(json.dumps(doc))
        assert "personnel[0]" in str(exc.value)

    def test_unknown_key_rejected(self):
        with pytest.raises(ManifestSchemaError) as exc:
            parse_manifest('{"name": "x", "bogus": 1}')
        assert "bogus" in str(exc.value)

    def test_unknown_nested_key_rejected(self):
        with pytest.raises(ManifestSchemaError) as exc:
            parse_manifest('{"name": "x", "io": {"inputs": 1, "widgets": 2}}')
        assert "io.widgets" in str(exc.value)

    def test_negative_count_rejected(self):
        with pytest.raises(ManifestSchemaError) as exc:
            parse_manifest('{"name": "x", "io": {"inputs": -1}}')
        assert "io.inputs" in str(exc.value)

    def test_non_integer_count_rejected(self):
        with pytest.raises(ManifestSchemaError):
            parse_manifest('{"name": "x", "io": {"inputs": 1.5}}')

    def test_bad_enum_value_rejected(self):
        with pytest.raises(ManifestSchemaError) as exc:
            parse_manifest(
                '{"name": "x", "nfrs": [{"label": "a", "category": "critical"}]}'
            )
        assert "nfrs[0].category" in str(exc.value)

    def test_minimal_document_defaults(self):
        m = parse_manifest('{"name": "tiny"}')
        assert (m.inputs, m.outputs, m.interfaces, m.files) == (0, 0, 0, 0)
        assert m.functions == () and m.features == () and m.personnel == ()
        assert (m.users, m.locations) == (1, 1)

    def test_zero_users_is_invariant_error(self):
        with pytest.raises(ManifestInvariantError) as exc:
            parse_manifest('{"name": "x", "deployment": {"users": 0}}')
        assert any(v.field == "deployment.users" for v in exc.value.violations)

    def test_name_required(self):
        with pytest.raises(ManifestSchemaError):
            parse_manifest("{}")


class TestValidate:
    def test_factorial_manifest_is_clean(self, factorial_manifest_text):
        assert validate_manifest(parse_manifest(factorial_manifest_text)) == []

    def test_zero_users_violation_names_field(self):
        m = SrsManifest(name="x", users=0)
        violations = validate_manifest(m)
        assert len(violations) == 1
        assert violations[0].field == "deployment.users"

    def test_zero_weight_feature_violation(self):
        m = SrsManifest(name="x", features=(Feature(label="skin", weight=0),))
        violations = validate_manifest(m)
        assert len(violations) == 1
        assert violations[0].field == "features[0]"

    def test_undefined_cell_reported_for_direct_construction(self):
        m = SrsManifest(
            name="x",
            personnel=(
                CostDriverRating(CostDriver.LANGUAGE_EXPERIENCE, Rating.VERY_HIGH),
            ),
        )
        assert any("personnel[0]" == v.field for v in validate_manifest(m))

    def test_duplicate_personnel_attribute_rejected(self):
        m = SrsManifest(
            name="x",
            personnel=(
                CostDriverRating(CostDriver.ANALYST_CAPABILITY, Rating.LOW),
                CostDriverRating(CostDriver.ANALYST_CAPABILITY, Rating.HIGH),
            ),
        )
        assert any("duplicate" in v.message for v in validate_manifest(m))

    def test_empty_name_violation(self):
        assert any(v.field == "name" for v in validate_manifest(SrsManifest(name="")))


class TestCostDriverTable:
    def test_reference_cells(self):
        assert multiplier_for(CostDriver.PROGRAMMER_CAPABILITY, Rating.LOW) == 1.17
        assert multiplier_for(CostDriver.ANALYST_CAPABILITY, Rating.NOMINAL) == 1.00
        assert multiplier_for(CostDriver.VIRTUAL_MACHINE_EXPERIENCE, Rating.HIGH) == 0.90

    def test_string_arguments_accepted(self):
        assert multiplier_for("analyst_capability", "very_low") == 1.46

    @pytest.mark.parametrize(
        "attribute",
        [
            CostDriver.PROGRAMMER_CAPABILITY,
            CostDriver.VIRTUAL_MACHINE_EXPERIENCE,
            CostDriver.LANGUAGE_EXPERIENCE,
        ],
    )
    def test_undefined_cells_raise(self, attribute):
        with pytest.raises(UndefinedCellError):
            multiplier_for(attribute, Rating.VERY_HIGH)

    def test_nominal_is_neutral_for_every_attribute(self):
        for attribute in CostDriver:
            assert multiplier_for(attribute, Rating.NOMINAL) == 1.00

    def test_multipliers_decrease_with_rating(self):
        order = [Rating.VERY_LOW, Rating.LOW, Rating.NOMINAL, Rating.HIGH, Rating.VERY_HIGH]
        for attribute in CostDriver:
            defined = [
                COST_DRIVER_TABLE[(attribute, r)]
                for r in order
                if (attribute, r) in COST_DRIVER_TABLE
            ]
            assert defined == sorted(defined, reverse=True)
            assert len(set(defined)) == len(defined)


class TestRoundTrip:
    @pytest.mark.parametrize(
        "path", sorted(MANIFEST_DIR.glob("*.json")), ids=lambda p: p.stem
    )
    def test_bundled_manifest_round_trips(self, path):
        m = parse_manifest(path.read_text())
        assert parse_manifest(serialize_manifest(m)) == m

    @pytest.mark.parametrize(
        "path", sorted(MANIFEST_DIR.glob("*.json")), ids=lambda p: p.stem
    )
    def test_bundled_manifest_conforms_to_schema(self, path):
        jsonschema = pytest.importorskip("jsonschema")
        schema = json.loads(
            (Path(reqlex.__file__).parent / "schemas" / "manifest.schema.json").read_text()
        )
        jsonschema.validate(json.loads(path.read_text()), schema)

    def test_serialized_form_is_canonical(self, factorial_manifest_text):
        m = parse_manifest(factorial_manifest_text)
        doc = manifest_to_dict(m)
        assert set(doc) == {
            "name", "io", "functions", "nfrs", "constraints",
            "external_interfaces", "deployment", "features", "personnel",
        }
