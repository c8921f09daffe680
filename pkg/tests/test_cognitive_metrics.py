import pytest

from reqlex.code_model import tokenize
from reqlex.cognitive_metrics import (
    BcsNode,
    BRANCH,
    CALL,
    ITERATION,
    RECURSION,
    SEQUENCE,
    LineInfo,
    ZeroLocError,
    build_bcs_tree,
    cfs,
    cicm,
    coding_efficiency,
    cognitive_weight,
    declared_variables,
    identifier_density,
    klcid,
    klcid_paper_mode,
    line_infos,
    sbcs,
    unique_lines,
    wics,
)


def infos(source: str):
    return line_infos(tokenize(source))


class TestIdentifierDensity:
    def test_declaration_and_use(self):
        ts = tokenize("int a;\na = 1;")
        assert identifier_density(ts) == 1.0

    def test_no_identifiers(self):
        assert identifier_density(tokenize("return 1;")) == 0.0

    def test_two_per_line(self):
        ts = tokenize("a = b;\nc = d;\ne = f;")
        assert identifier_density(ts) == 2.0

    def test_zero_loc_raises(self):
        with pytest.raises(ZeroLocError):
            identifier_density(tokenize("// only a comment"))


class TestUniqueLines:
    def test_same_shape_collapses(self):
        lines = infos("a = b + 1;\nc = d + 2;")
        assert len(unique_lines(lines)) == 1

    def test_empty(self):
        assert unique_lines([]) == []

    def test_different_operator_arrangements(self):
        lines = infos("a = 1;\na = a + 1;")
        assert len(unique_lines(lines)) == 2

    def test_keeps_first_occurrence(self):
        lines = infos("a = b + 1;\nx = y;\nc = d + 2;")
        kept = unique_lines(lines)
        assert [li.line for li in kept] == [1, 2]

    def test_idempotent(self):
        lines = infos("a = 1;\nb = 2;\na = 1;")
        once = unique_lines(lines)
        assert unique_lines(once) == once


class TestKlcid:
    def test_single_assignment(self):
        assert klcid(infos("a = b;")) == 2.0

    def test_identifier_free_source_is_undefined(self):
        assert klcid(infos("return 1;")) is None

    def test_factorial_default_mode(self, factorial_source):
        # 20 identifier occurrences across 11 identifier-bearing unique lines.
        assert klcid(infos(factorial_source)) == pytest.approx(20 / 11)

    def test_factorial_paper_mode(self, factorial_source):
        ts = tokenize(factorial_source)
        assert klcid_paper_mode(ts) == 1.4

    def test_paper_mode_undefined_without_declared_variables(self):
        ts = tokenize('printf("hi");\nprintf("ho");')
        assert klcid_paper_mode(ts) is None

    def test_declared_variables_of_factorial(self, factorial_source):
        assert declared_variables(tokenize(factorial_source)) == {"n", "fact"}


class TestBcsTree:
    def test_straight_line_is_single_sequence(self):
        tree = build_bcs_tree("a = 1;\nb = 2;")
        assert tree == BcsNode(kind=SEQUENCE)

    def test_factorial_paper_mode(self, factorial_source):
        tree = build_bcs_tree(factorial_source, mode="paper")
        assert tree.kind == SEQUENCE
        assert [c.kind for c in tree.children] == [CALL]

    def test_loop_nesting_branch(self):
        src = "while (a > 0) { if (b > 0) b = b - 1; a = a - 1; }"
        tree = build_bcs_tree(src)
        assert [c.kind for c in tree.children] == [ITERATION]
        assert [c.kind for c in tree.children[0].children] == [BRANCH]

    def test_recursive_entry_function_modes(self):
        src = """
int f(int n)
{
    if (n < 2)
        return 1;
    return f(n - 1);
}
"""
        by_kind = lambda tree: sorted(c.kind for c in tree.children)
        assert by_kind(build_bcs_tree(src, mode="default")) == [BRANCH, RECURSION]
        assert by_kind(build_bcs_tree(src, mode="paper")) == [BRANCH, CALL]

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            BcsNode(kind="loop")

    def test_unknown_mode_rejected(self):
        with pytest.raises(ValueError):
            build_bcs_tree("a = 1;", mode="verbatim")


class TestCognitiveWeight:
    def test_single_sequence(self):
        assert cognitive_weight(BcsNode(kind=SEQUENCE)) == 1

    def test_factorial_paper_tree(self, factorial_source):
        tree = build_bcs_tree(factorial_source, mode="paper")
        assert cognitive_weight(tree) == 3

    def test_nested_product(self):
        tree = BcsNode(kind=ITERATION, children=(BcsNode(kind=BRANCH),))
        assert cognitive_weight(tree) == 6

    def test_sibling_blocks_add(self):
        tree = BcsNode(
            kind=SEQUENCE,
            children=(BcsNode(kind=ITERATION), BcsNode(kind=BRANCH)),
        )
        assert cognitive_weight(tree) == 1 + 3 + 2


class TestSbcs:
    def test_factorial_paper_tree(self, factorial_source):
        assert sbcs(build_bcs_tree(factorial_source, mode="paper")) == 3

    def test_single_sequence(self):
        assert sbcs(BcsNode(kind=SEQUENCE)) == 1

    def test_flat_sum(self):
        tree = BcsNode(
            kind=SEQUENCE,
            children=(BcsNode(kind=ITERATION), BcsNode(kind=BRANCH)),
        )
        assert sbcs(tree) == 6


class TestCfs:
    def test_factorial_values(self):
        assert cfs(1, 1, 3) == 6

    def test_zero_io(self):
        assert cfs(0, 0, 99) == 0

    def test_bilinear_point(self):
        assert cfs(2, 1, 4) == 12


class TestWics:
    def line(self, ics, line=1):
        return LineInfo(shape=("x",), identifiers=(), ics=ics, line=line)

    def test_single_line(self):
        assert wics([self.line(4)]) == 4.0

    def test_zero_information(self):
        assert wics([self.line(0), self.line(0)]) == 0.0

    def test_two_lines(self):
        assert wics([self.line(2), self.line(3)]) == 2 / 2 + 3 / 1

    def test_empty_raises(self):
        with pytest.raises(ZeroLocError):
            wics([])

    def test_later_position_weighs_more(self):
        early = [self.line(2), self.line(0), self.line(0)]
        middle = [self.line(0), self.line(2), self.line(0)]
        late = [self.line(0), self.line(0), self.line(2)]
        assert wics(early) < wics(middle) < wics(late)


class TestCicm:
    def test_reference_product(self):
        value = cicm(5.33, 3)
        assert value == pytest.approx(15.99)
        assert abs(value - 16.01) < 0.05

    def test_annihilator(self):
        assert cicm(0.0, 7) == 0.0

    def test_plain_product(self):
        assert cicm(2.5, 4) == 10.0

    def test_commutative(self):
        assert cicm(5.33, 3) == cicm(3, 5.33)


class TestCodingEfficiency:
    def test_two_per_line(self):
        assert coding_efficiency(38, 19) == 2.0

    def test_zero_information(self):
        assert coding_efficiency(0, 5) == 0.0

    def test_fractional(self):
        assert coding_efficiency(10, 4) == 2.5

    def test_zero_loc_raises(self):
        with pytest.raises(ZeroLocError):
            coding_efficiency(10, 0)
