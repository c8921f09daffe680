"""Acceptance suite: the toolkit's exit criteria, one marker per criterion.

Run with ``pytest tests/test_acceptance.py -v``; the terminal summary prints
one PASS/FAIL line per criterion (see conftest).
"""

import dataclasses
import time
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import reqlex
from reqlex.classic_metrics import (
    HalsteadCounts,
    build_cfg,
    cyclomatic_decisions,
    cyclomatic_graph,
    halstead_metrics,
    region_count,
)
from reqlex.cli import analyze_manifest_file, analyze_source_file
from reqlex.code_model import tokenize
from reqlex.cognitive_metrics import (
    build_bcs_tree,
    cfs,
    cicm,
    cognitive_weight,
    klcid_paper_mode,
    sbcs,
    unique_lines,
)
from reqlex.rbc_engine import RbcConfig, compute_rbc
from reqlex.report import compute_trend, join_records, spearman
from reqlex.srs_model import parse_manifest, serialize_manifest

from strategies import flat_bcs_trees, line_info_lists, manifests, token_soup_sources
from support import assert_reconstructs

CORPUS = Path(reqlex.__file__).parent / "corpus"


@pytest.mark.criterion(1)
class TestCriterion1ManifestEndToEnd:
    def test_factorial_breakdown_and_timing(self, factorial_manifest_text):
        started = time.perf_counter()
        manifest = parse_manifest(factorial_manifest_text)
        b = compute_rbc(manifest)
        elapsed = time.perf_counter() - started

        assert abs(b.rbc - 9.36) <= 1e-9
        assert f"{b.rbc:.2f}" == "9.36"
        assert b.ioc == 4
        assert b.fr == 2
        assert b.rc == 2
        assert b.pc == 8
        assert b.pca == 1.17
        assert b.dci == 0
        assert b.ifc == 0
        assert b.sfc == 0
        assert b.ulc == 1
        assert elapsed < 1.0


@pytest.mark.criterion(2)
class TestCriterion2FactorialSource:
    def test_cyclomatic_suite_and_timing(self, factorial_source):
        started = time.perf_counter()
        graph = build_cfg(factorial_source)
        decisions = cyclomatic_decisions(factorial_source)
        loc = tokenize(factorial_source).loc
        elapsed = time.perf_counter() - started

        assert cyclomatic_graph(graph) == 3
        assert decisions == 3
        assert region_count(graph) == 3
        assert graph.predicate_nodes == 2
        assert loc == 19
        assert elapsed < 1.0


@pytest.mark.criterion(3)
class TestCriterion3HalsteadFormulaLayer:
    COUNTS = HalsteadCounts(n1=18, n2=4, N1=35, N2=10)

    def test_injected_counts(self):
        h = halstead_metrics(self.COUNTS)
        assert h.vocabulary == 22
        assert h.length == 45
        assert h.difficulty == 22.5

    def test_time_division_identity(self):
        h = halstead_metrics(self.COUNTS)
        assert h.time_minutes == h.effort_dv / (18 * 60)
        # The published (effort, minutes) pair satisfies the same identity.
        assert abs(5154 / (18 * 60) - 4.78) <= 0.02


@pytest.mark.criterion(4)
class TestCriterion4CognitiveLayer:
    def test_factorial_paper_mode(self, factorial_source, factorial_manifest_text):
        manifest = parse_manifest(factorial_manifest_text)
        tree = build_bcs_tree(factorial_source, mode="paper")
        wc = cognitive_weight(tree)
        assert wc == 3
        assert sbcs(tree) == 3
        assert cfs(manifest.inputs, manifest.outputs, wc) == 6
        assert klcid_paper_mode(tokenize(factorial_source)) == 1.4

    def test_cicm_reference_product(self):
        assert abs(cicm(5.33, 3) - 16.01) < 0.05


@pytest.mark.criterion(5)
class TestCriterion5CorpusTrend:
    def test_rbc_tracks_code_metrics(self):
        started = time.perf_counter()
        cfg = RbcConfig()
        manifests_by_stem = {}
        breakdowns = {}
        for path in sorted((CORPUS / "manifests").glob("*.json")):
            manifest, breakdown = analyze_manifest_file(path, cfg)
            manifests_by_stem[path.stem] = manifest
            breakdowns[path.stem] = breakdown
        codes = {}
        for path in sorted((CORPUS / "sources").glob("*.c")):
            m = manifests_by_stem[path.stem]
            codes[path.stem] = analyze_source_file(
                path, "paper", ni=m.inputs, no=m.outputs
            )
        records, warnings = join_records(breakdowns, codes)
        trend = compute_trend(records)
        elapsed = time.perf_counter() - started

        assert warnings == []
        assert len(records) >= 10
        rbcs = [r.rbc for r in records]
        assert max(rbcs) >= 5 * min(rbcs)
        for metric in ("halstead_D", "vG", "cfs", "cicm"):
            rho, n = trend.rho_by_metric[metric]
            assert rho > 0, f"rho({metric}) = {rho}"
            assert n >= 10
        assert elapsed < 10.0


@pytest.mark.criterion(6)
class TestCriterion6PropertySuites:
    @settings(max_examples=100)
    @given(manifests(), st.integers(1, 40), st.integers(1, 40))
    def test_rbc_linear_in_user_location_spread(self, m, users, locations):
        base = compute_rbc(dataclasses.replace(m, users=1, locations=1))
        spread = compute_rbc(dataclasses.replace(m, users=users, locations=locations))
        assert spread.rbc == users * locations * base.rbc

    @settings(max_examples=100)
    @given(
        manifests(),
        st.sampled_from(["inputs", "outputs", "interfaces", "files"]),
    )
    def test_rbc_monotone_in_io_counts(self, m, count_field):
        before = compute_rbc(m)
        grown = compute_rbc(
            dataclasses.replace(m, **{count_field: getattr(m, count_field) + 1})
        )
        assert grown.rbc >= before.rbc
        if before.rc > 0 and before.pca > 0:
            assert grown.rbc > before.rbc

    @settings(max_examples=100)
    @given(manifests(), st.sampled_from(["product", "sum"]))
    def test_breakdown_recomposition_identity(self, m, rc_mode):
        b = compute_rbc(m, RbcConfig(rc_mode=rc_mode))
        assert b.recompose() == b.rbc

    @settings(max_examples=100)
    @given(token_soup_sources())
    def test_tokenizer_reconstructs_source(self, source):
        assert_reconstructs(source)

    @settings(max_examples=100)
    @given(line_info_lists())
    def test_unique_lines_idempotent(self, lines):
        once = unique_lines(lines)
        assert unique_lines(once) == once

    @settings(max_examples=100)
    @given(flat_bcs_trees())
    def test_flat_tree_weight_equals_structure_sum(self, tree):
        assert cognitive_weight(tree) == sbcs(tree)

    @settings(max_examples=100)
    @given(
        st.lists(st.integers(1, 10**6), min_size=2, max_size=30),
        st.lists(st.integers(-(10**6), 10**6), min_size=2, max_size=30),
    )
    def test_spearman_invariant_under_monotone_transforms(self, xs, ys):
        import math

        n = min(len(xs), len(ys))
        xs, ys = xs[:n], ys[:n]
        base = spearman(xs, ys)
        affine = spearman([2 * x + 7 for x in xs], ys)
        cubed = spearman([x**3 for x in xs], ys)
        if math.isnan(base):  # a constant sequence stays constant under both maps
            assert math.isnan(affine) and math.isnan(cubed)
        else:
            assert affine == base
            assert cubed == base

    @settings(max_examples=100)
    @given(st.lists(st.integers(-(10**6), 10**6), min_size=2, max_size=30, unique=True))
    def test_spearman_self_correlation_is_one(self, xs):
        assert abs(spearman(xs, xs) - 1.0) < 1e-12


@pytest.mark.criterion(7)
class TestCriterion7GoldenRoundTrip:
    @pytest.mark.parametrize(
        "path",
        sorted((CORPUS / "manifests").glob("*.json")),
        ids=lambda p: p.stem,
    )
    def test_bundled_manifest_round_trips(self, path):
        m = parse_manifest(path.read_text())
        assert parse_manifest(serialize_manifest(m)) == m
