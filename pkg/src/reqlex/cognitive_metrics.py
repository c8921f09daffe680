"""Cognition-oriented code metrics: KLCID, CFS, and CICM.

Three measures over the shared token stream:

* identifier density and KLCID, built on "unique lines" -- logical lines
  deduplicated by a normalised shape in which identifiers become ``ID``,
  numeric literals ``NUM`` and string literals ``STR`` while operators and
  keywords stay verbatim;
* cognitive functional size, ``(inputs + outputs) * Wc``, where the total
  cognitive weight Wc is evaluated over a tree of basic control structures
  (sequence, branch, iteration, call, ...), each carrying a fixed weight;
* the cognitive information complexity measure, ``WICS * SBCS``, where WICS
  position-weights each line's information count (identifier plus operator
  occurrences) and SBCS is the plain sum of all structure weights.

Two accounting modes exist because published worked examples differ from
the literal definitions in two places.  ``default`` follows the literal
definitions: recursive calls weigh 3 and KLCID counts every identifier
occurrence over all unique lines.  ``paper`` reproduces the reference
example: recursive calls weigh 2 like plain calls, and KLCID counts, per
unique line, the distinct *declared variables used* there (function names
and declaration sites excluded).

Everything here is pure; structures are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classic_metrics import (
    DoWhile,
    For,
    If,
    ReturnStmt,
    Simple,
    StructureError,
    While,
    _Parser,
    _stmt_tokens,
    call_sites,
    parse_source,
)
from .code_model import (
    C_DIALECT,
    Dialect,
    IDENTIFIER,
    KEYWORD,
    LITERAL,
    STRING,
    Token,
    TokenStream,
    is_counted_operator,
    logical_lines,
    tokenize,
)

MODE_PAPER = "paper"
MODE_DEFAULT = "default"
MODES = (MODE_PAPER, MODE_DEFAULT)


class ZeroLocError(ValueError):
    """The metric divides by LOC, which is zero for this source."""


SEQUENCE = "sequence"
BRANCH = "branch"
CASE = "case"
ITERATION = "iteration"
CALL = "call"
RECURSION = "recursion"
PARALLEL = "parallel"
INTERRUPT = "interrupt"

#: Cognitive weight of each basic control structure.
BCS_WEIGHTS = {
    SEQUENCE: 1,
    BRANCH: 2,
    CASE: 3,
    ITERATION: 3,
    CALL: 2,
    RECURSION: 3,
    PARALLEL: 4,
    INTERRUPT: 4,
}


@dataclass(frozen=True)
class BcsNode:
    """One basic control structure; children are the structures nested in it."""

    kind: str
    children: tuple["BcsNode", ...] = ()

    def __post_init__(self):
        if self.kind not in BCS_WEIGHTS:
            raise ValueError(f"unknown structure kind {self.kind!r}")


def _structures_of(stmts, entry_name: str, defined: set[str], mode: str) -> list[BcsNode]:
    out: list[BcsNode] = []
    for stmt in stmts:
        if isinstance(stmt, (Simple, ReturnStmt)):
            out.extend(_call_nodes(stmt, entry_name, defined, mode))
        elif isinstance(stmt, If):
            children = _call_nodes(stmt, entry_name, defined, mode)
            children += _structures_of(stmt.then, entry_name, defined, mode)
            children += _structures_of(stmt.orelse, entry_name, defined, mode)
            out.append(BcsNode(kind=BRANCH, children=tuple(children)))
        elif isinstance(stmt, (While, DoWhile, For)):
            children = _call_nodes(stmt, entry_name, defined, mode)
            children += _structures_of(stmt.body, entry_name, defined, mode)
            out.append(BcsNode(kind=ITERATION, children=tuple(children)))
    return out


def _call_nodes(stmt, entry_name: str, defined: set[str], mode: str) -> list[BcsNode]:
    nodes = []
    for callee in call_sites(_stmt_tokens(stmt), defined):
        if callee == entry_name and mode == MODE_DEFAULT:
            nodes.append(BcsNode(kind=RECURSION))
        else:
            nodes.append(BcsNode(kind=CALL))
    return nodes


def build_bcs_tree(source: str, dialect: Dialect = C_DIALECT,
                   mode: str = MODE_DEFAULT) -> BcsNode:
    """Structure tree of the program's entry component.

    The component measured is the entry function (``main`` when present,
    otherwise the first function defined; bare statement sources are taken
    whole).  Calls to other in-source functions appear as unexpanded call
    leaves: the callee's internals are abstracted behind the call weight.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    functions = []
    function_parse_error = None
    try:
        functions = parse_source(source, dialect)
    except StructureError as exc:
        function_parse_error = exc
    if functions:
        defined = {fn.name for fn in functions}
        entry = next((fn for fn in functions if fn.name == "main"), functions[0])
        stmts = entry.body
        entry_name = entry.name
    else:
        # Bare statement snippet: take the whole source as one body.
        ts = tokenize(source, dialect)
        parser = _Parser(list(ts.tokens))
        stmts = []
        try:
            while parser._peek() is not None:
                stmts.extend(parser._parse_statement())
        except StructureError:
            raise function_parse_error or StructureError(
                "source is neither function definitions nor a statement list", 1
            ) from None
        defined = set()
        entry_name = ""
    children = _structures_of(stmts, entry_name, defined, mode)
    return BcsNode(kind=SEQUENCE, children=tuple(children))


def _block_value(node: BcsNode) -> float:
    weight = BCS_WEIGHTS[node.kind]
    if not node.children:
        return weight
    return weight * sum(_block_value(c) for c in node.children)


def cognitive_weight(t: BcsNode) -> float:
    """Total cognitive weight: sum over linear blocks of layered-weight products."""
    if t.kind == SEQUENCE:
        # The component's single sequential structure counts once; each child
        # structure is its own linear block.
        return BCS_WEIGHTS[SEQUENCE] + sum(_block_value(c) for c in t.children)
    return _block_value(t)


def sbcs(t: BcsNode) -> float:
    """Plain sum of cognitive weights over every structure in the tree."""
    return BCS_WEIGHTS[t.kind] + sum(sbcs(c) for c in t.children)


def cfs(n_inputs: int, n_outputs: int, wc: float) -> float:
    """Cognitive functional size: I/O spread scaled by total cognitive weight."""
    return (n_inputs + n_outputs) * wc


# ---------------------------------------------------------------------------
# Line-level information measures


@dataclass(frozen=True)
class LineInfo:
    """Identifier content, information count and normalised shape of one line."""

    shape: tuple[str, ...]
    identifiers: tuple[str, ...]
    ics: int
    line: int


def line_infos(ts: TokenStream, dialect: Dialect = C_DIALECT) -> list[LineInfo]:
    """Per logical line: normalised shape, identifiers, and information count."""
    out = []
    for toks in logical_lines(ts):
        shape = []
        idents = []
        ics = 0
        for t in toks:
            if t.klass == IDENTIFIER:
                shape.append("ID")
                idents.append(t.text)
                ics += 1
            elif t.klass == LITERAL:
                shape.append("NUM")
            elif t.klass == STRING:
                shape.append("STR")
            else:
                shape.append(t.text)
            if is_counted_operator(t, dialect):
                ics += 1
        out.append(
            LineInfo(shape=tuple(shape), identifiers=tuple(idents), ics=ics,
                     line=toks[0].line)
        )
    return out


def identifier_density(ts: TokenStream) -> float:
    """Identifier occurrences per line of code."""
    if ts.loc == 0:
        raise ZeroLocError("identifier density undefined for zero-LOC source")
    return sum(1 for t in ts.tokens if t.klass == IDENTIFIER) / ts.loc


def unique_lines(lines: list[LineInfo]) -> list[LineInfo]:
    """One representative per shape, first occurrence kept, order preserved."""
    seen: set[tuple[str, ...]] = set()
    out = []
    for li in lines:
        if li.shape not in seen:
            seen.add(li.shape)
            out.append(li)
    return out


def klcid(lines: list[LineInfo]) -> float | None:
    """Identifier occurrences in unique lines per identifier-bearing unique line.

    None when no unique line carries an identifier (the ratio is undefined).
    """
    uniq = unique_lines(lines)
    bearing = [li for li in uniq if li.identifiers]
    if not bearing:
        return None
    total = sum(len(li.identifiers) for li in uniq)
    return total / len(bearing)


def declared_variables(ts: TokenStream, dialect: Dialect = C_DIALECT) -> set[str]:
    """Names declared as variables or parameters (not function names)."""
    declared: set[str] = set()
    for toks in logical_lines(ts):
        if toks[0].klass != KEYWORD or toks[0].text not in dialect.type_keywords:
            continue
        texts = [t.text for t in toks]
        if "(" in texts:
            open_idx = texts.index("(")
            close_idx = len(texts) - 1 - texts[::-1].index(")") if ")" in texts else len(texts)
            # Function header or prototype: identifiers inside the parentheses
            # are parameters; the name before '(' is the function itself.
            for t in toks[open_idx + 1 : close_idx]:
                if t.klass == IDENTIFIER:
                    declared.add(t.text)
        else:
            stop = texts.index("=") if "=" in texts else len(texts)
            for t in toks[:stop]:
                if t.klass == IDENTIFIER:
                    declared.add(t.text)
    return declared


def variable_uses(toks: list[Token], declared: set[str],
                  dialect: Dialect = C_DIALECT) -> list[str]:
    """Occurrences of declared variables used (not declared, not called) here."""
    texts = [t.text for t in toks]
    is_decl_line = toks[0].klass == KEYWORD and toks[0].text in dialect.type_keywords
    if is_decl_line and "(" in texts:
        return []  # function header or prototype: parameter declarations only
    start = 0
    if is_decl_line:
        if "=" not in texts:
            return []  # pure declaration: names are being introduced, not used
        start = texts.index("=") + 1
    uses = []
    for i in range(start, len(toks)):
        t = toks[i]
        if t.klass != IDENTIFIER or t.text not in declared:
            continue
        if i + 1 < len(toks) and toks[i + 1].text == "(":
            continue
        uses.append(t.text)
    return uses


def klcid_paper_mode(ts: TokenStream, dialect: Dialect = C_DIALECT) -> float | None:
    """KLCID under the reference-example accounting.

    Identifiers are restricted to declared variables at their use sites, and
    each unique line contributes its distinct used variables rather than raw
    occurrences.
    """
    declared = declared_variables(ts, dialect)
    lines = logical_lines(ts)
    infos = line_infos(ts, dialect)
    uses_by_shape: dict[tuple[str, ...], set[str]] = {}
    order: list[tuple[str, ...]] = []
    for toks, info in zip(lines, infos):
        if info.shape in uses_by_shape:
            continue
        uses_by_shape[info.shape] = set(variable_uses(toks, declared, dialect))
        order.append(info.shape)
    bearing = [shape for shape in order if uses_by_shape[shape]]
    if not bearing:
        return None
    total = sum(len(uses_by_shape[shape]) for shape in bearing)
    return total / len(bearing)


def wics(lines: list[LineInfo]) -> float:
    """Position-weighted information count: later lines weigh more."""
    locs = len(lines)
    if locs == 0:
        raise ZeroLocError("weighted information count undefined for zero LOC")
    return sum(li.ics / (locs - k + 1) for k, li in enumerate(lines, start=1))


def cicm(wics_value: float, sbcs_value: float) -> float:
    """Cognitive information complexity: weighted information times structure sum."""
    return wics_value * sbcs_value


def coding_efficiency(ics_total: int, locs: int) -> float:
    """Information carried per line of code."""
    if locs == 0:
        raise ZeroLocError("coding efficiency undefined for zero LOC")
    return ics_total / locs
