"""Halstead software-science metrics and McCabe cyclomatic complexity.

Halstead values are derived from the distinct/total operator and operand
counts of a token stream under the counting convention frozen in
``code_model``.  Two effort figures are reported: ``effort_dv`` (difficulty
times volume, the value used downstream) and ``effort_vl`` (volume divided
by program level), because the two classical formulations disagree once the
potential-volume approximation enters.

Cyclomatic complexity is computed two equivalent ways and both are exposed:

* from the control-flow graph, ``v = e - n + 2p``;
* from the source, decision points plus one, where decision points are the
  branching/looping keywords, the ternary operator, and recursive call
  sites (a recursive call decides between terminating and re-entering, and
  contributes a cycle to the graph just as a loop keyword does).

Graph modelling for multi-function sources: a call to a function defined in
the same source splices the callee into the caller's flow (call site ->
callee entry, callee exit -> continuation, replacing the straight-line
edge), merging both functions into one connected component.  A recursive
call site adds a single re-entry edge.  Under this model the two forms of
v(G) agree whenever each helper function has one call site, which holds for
the bundled corpus and is asserted in its tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .code_model import (
    COMMENT,
    Dialect,
    C_DIALECT,
    IDENTIFIER,
    KEYWORD,
    OPERATOR,
    PUNCTUATION,
    Token,
    TokenStream,
    operand_occurrences,
    operator_occurrences,
    tokenize,
)


class StructureError(Exception):
    """Source could not be analysed structurally (bad nesting, unsupported form)."""

    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


# ---------------------------------------------------------------------------
# Halstead


@dataclass(frozen=True)
class HalsteadCounts:
    n1: int  # distinct operators
    n2: int  # distinct operands
    N1: int  # total operator occurrences
    N2: int  # total operand occurrences


@dataclass(frozen=True)
class HalsteadMetrics:
    vocabulary: int
    length: int
    volume: float
    estimated_length: float
    potential_volume: float
    level: float
    difficulty: float
    effort_dv: float
    effort_vl: float
    time_minutes: float

    def as_dict(self) -> dict:
        return {
            "n": self.vocabulary,
            "N": self.length,
            "V": self.volume,
            "Nhat": self.estimated_length,
            "Vstar": self.potential_volume,
            "L": self.level,
            "D": self.difficulty,
            "effort_dv": self.effort_dv,
            "effort_vl": self.effort_vl,
            "T_min": self.time_minutes,
        }


def halstead_counts(ts: TokenStream, dialect: Dialect = C_DIALECT) -> HalsteadCounts:
    """Distinct and total operator/operand counts for a token stream."""
    ops = operator_occurrences(ts, dialect)
    opnds = operand_occurrences(ts)
    return HalsteadCounts(
        n1=len({t.text for t in ops}),
        n2=len({t.text for t in opnds}),
        N1=len(ops),
        N2=len(opnds),
    )


def _nlog2n(x: float) -> float:
    return x * math.log2(x) if x > 0 else 0.0


def halstead_metrics(c: HalsteadCounts) -> HalsteadMetrics:
    """Derive the full Halstead suite; degenerate counts yield defined zeros."""
    n = c.n1 + c.n2
    length = c.N1 + c.N2
    volume = length * math.log2(n) if n >= 2 else 0.0
    estimated = _nlog2n(c.n1) + _nlog2n(c.n2)
    potential = _nlog2n(2 + c.n1) if c.n1 > 0 else 0.0
    level = potential / volume if volume > 0 else 0.0
    difficulty = (c.n1 / 2) * (c.N2 / c.n2) if c.n2 > 0 else 0.0
    effort_dv = difficulty * volume
    effort_vl = volume / level if level > 0 else 0.0
    time_minutes = effort_dv / (18 * 60)
    return HalsteadMetrics(
        vocabulary=n,
        length=length,
        volume=volume,
        estimated_length=estimated,
        potential_volume=potential,
        level=level,
        difficulty=difficulty,
        effort_dv=effort_dv,
        effort_vl=effort_vl,
        time_minutes=time_minutes,
    )


# ---------------------------------------------------------------------------
# Structural parse of the C-like subset (functions, if/else, loops, calls)


@dataclass
class Simple:
    tokens: list[Token]
    line: int


@dataclass
class ReturnStmt:
    tokens: list[Token]
    line: int


@dataclass
class If:
    cond: list[Token]
    then: list
    orelse: list
    line: int


@dataclass
class While:
    cond: list[Token]
    body: list
    line: int


@dataclass
class DoWhile:
    body: list
    cond: list[Token]
    line: int


@dataclass
class For:
    init: list[Token]
    cond: list[Token]
    update: list[Token]
    body: list
    line: int


@dataclass
class FunctionDef:
    name: str
    body: list
    line: int


_UNSUPPORTED = frozenset({"switch", "goto", "break", "continue", "case", "default"})


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = [t for t in tokens if t.klass != COMMENT]
        self.pos = 0

    def _peek(self) -> Token | None:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def _next(self) -> Token:
        tok = self._peek()
        if tok is None:
            last_line = self.toks[-1].line if self.toks else 1
            raise StructureError("unexpected end of source", last_line)
        self.pos += 1
        return tok

    def _expect(self, text: str) -> Token:
        tok = self._next()
        if tok.text != text:
            raise StructureError(f"expected {text!r}, found {tok.text!r}", tok.line)
        return tok

    def _collect_until(self, stop: str, line: int) -> list[Token]:
        """Tokens up to (not including) `stop` at the current nesting depth."""
        depth = 0
        out: list[Token] = []
        while True:
            tok = self._peek()
            if tok is None:
                raise StructureError(f"missing {stop!r}", line)
            if depth == 0 and tok.text == stop:
                self._next()
                return out
            if tok.text in "([{":
                depth += 1
            elif tok.text in ")]}":
                if depth == 0:
                    raise StructureError(
                        f"unbalanced {tok.text!r} before {stop!r}", tok.line
                    )
                depth -= 1
            out.append(self._next())

    def parse_program(self) -> list[FunctionDef]:
        functions: list[FunctionDef] = []
        while self._peek() is not None:
            fn = self._parse_top_level()
            if fn is not None:
                functions.append(fn)
        return functions

    def _parse_top_level(self) -> FunctionDef | None:
        # Declaration prefix: keywords / identifiers / pointer stars.
        start = self.pos
        name: Token | None = None
        while True:
            tok = self._peek()
            if tok is None:
                if self.pos == start:
                    return None
                raise StructureError("unterminated declaration", self.toks[start].line)
            if tok.klass in (KEYWORD, IDENTIFIER) or tok.text == "*":
                name = tok if tok.klass == IDENTIFIER else name
                self._next()
                continue
            break
        tok = self._peek()
        if tok is not None and tok.text == "(" and name is not None:
            self._next()
            self._collect_until(")", tok.line)
            nxt = self._peek()
            if nxt is not None and nxt.text == "{":
                self._next()
                body = self._parse_statements_until("}")
                return FunctionDef(name=name.text, body=body, line=name.line)
            # Prototype or pointer-to-function declaration: no body to analyse.
            self._collect_until(";", tok.line)
            return None
        # Plain global declaration.
        line = self.toks[start].line if start < len(self.toks) else 1
        self._collect_until(";", line)
        return None

    def _parse_statements_until(self, stop: str) -> list:
        out: list = []
        while True:
            tok = self._peek()
            if tok is None:
                raise StructureError(f"missing {stop!r}", self.toks[-1].line)
            if tok.text == stop:
                self._next()
                return out
            out.extend(self._parse_statement())

    def _parse_statement(self) -> list:
        tok = self._peek()
        if tok is None:
            raise StructureError("unexpected end of source", self.toks[-1].line)
        if tok.text == "{":
            self._next()
            return self._parse_statements_until("}")
        if tok.text == ";":
            self._next()
            return []
        if tok.klass == KEYWORD and tok.text in _UNSUPPORTED:
            raise StructureError(
                f"{tok.text!r} is outside the structured subset", tok.line
            )
        if tok.text == "if":
            self._next()
            self._expect("(")
            cond = self._collect_until(")", tok.line)
            then = self._parse_statement()
            orelse: list = []
            nxt = self._peek()
            if nxt is not None and nxt.text == "else":
                self._next()
                orelse = self._parse_statement()
            return [If(cond=cond, then=then, orelse=orelse, line=tok.line)]
        if tok.text == "while":
            self._next()
            self._expect("(")
            cond = self._collect_until(")", tok.line)
            body = self._parse_statement()
            return [While(cond=cond, body=body, line=tok.line)]
        if tok.text == "do":
            self._next()
            body = self._parse_statement()
            kw = self._expect("while")
            self._expect("(")
            cond = self._collect_until(")", kw.line)
            self._expect(";")
            return [DoWhile(body=body, cond=cond, line=tok.line)]
        if tok.text == "for":
            self._next()
            self._expect("(")
            init = self._collect_until(";", tok.line)
            cond = self._collect_until(";", tok.line)
            update = self._collect_until(")", tok.line)
            body = self._parse_statement()
            return [For(init=init, cond=cond, update=update, body=body, line=tok.line)]
        if tok.text == "return":
            self._next()
            expr = self._collect_until(";", tok.line)
            return [ReturnStmt(tokens=expr, line=tok.line)]
        expr = self._collect_until(";", tok.line)
        return [Simple(tokens=expr, line=tok.line)]


def parse_source(source: str, dialect: Dialect = C_DIALECT) -> list[FunctionDef]:
    """Parse source into function definitions with structured statement trees."""
    ts = tokenize(source, dialect)
    return _Parser(list(ts.tokens)).parse_program()


def call_sites(tokens: list[Token], defined: set[str]) -> list[str]:
    """Names of in-source functions invoked within this token run, in order."""
    out = []
    for i, tok in enumerate(tokens[:-1]):
        if (
            tok.klass == IDENTIFIER
            and tok.text in defined
            and tokens[i + 1].text == "("
        ):
            out.append(tok.text)
    return out


def _stmt_tokens(stmt) -> list[Token]:
    if isinstance(stmt, (Simple, ReturnStmt)):
        return stmt.tokens
    if isinstance(stmt, If):
        return stmt.cond
    if isinstance(stmt, (While, DoWhile)):
        return stmt.cond
    if isinstance(stmt, For):
        return stmt.init + stmt.cond + stmt.update
    return []


def _walk_statements(stmts):
    for stmt in stmts:
        yield stmt
        if isinstance(stmt, If):
            yield from _walk_statements(stmt.then)
            yield from _walk_statements(stmt.orelse)
        elif isinstance(stmt, (While, DoWhile)):
            yield from _walk_statements(stmt.body)
        elif isinstance(stmt, For):
            yield from _walk_statements(stmt.body)


# ---------------------------------------------------------------------------
# Control-flow graph


@dataclass(frozen=True)
class CfgNode:
    id: int
    label: str
    line: int
    function: str


@dataclass(frozen=True)
class ControlFlowGraph:
    nodes: tuple[CfgNode, ...]
    edges: tuple[tuple[int, int], ...]
    components: int
    predicate_nodes: int

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    @property
    def n_edges(self) -> int:
        return len(self.edges)


class _CfgBuilder:
    def __init__(self):
        self.nodes: list[CfgNode] = []
        self.edges: list[list[int]] = []  # mutable [u, v] pairs
        self.entries: dict[str, int] = {}
        self.exits: dict[str, int] = {}
        self.anchors: dict[int, int] = {}  # id(stmt) -> its flow node

    def new_node(self, label: str, line: int, function: str) -> int:
        nid = len(self.nodes)
        self.nodes.append(CfgNode(id=nid, label=label, line=line, function=function))
        return nid

    def connect(self, sources: list[int], target: int) -> None:
        for src in sources:
            self.edges.append([src, target])

    def build_function(self, fn: FunctionDef) -> None:
        entry = self.new_node("entry", fn.line, fn.name)
        self.entries[fn.name] = entry
        # Exit id is reserved after the body so node ids follow source order.
        outs, returns = self._emit_block(fn.body, [entry], fn.name)
        exit_id = self.new_node("exit", fn.line, fn.name)
        self.exits[fn.name] = exit_id
        self.connect(outs, exit_id)
        self.connect(returns, exit_id)

    def _emit_block(self, stmts, preds: list[int], fname: str):
        """Returns (fall-through predecessors, pending return nodes)."""
        returns: list[int] = []
        for stmt in stmts:
            preds, rets = self._emit(stmt, preds, fname)
            returns.extend(rets)
        return preds, returns

    def _emit(self, stmt, preds: list[int], fname: str):
        if isinstance(stmt, Simple):
            nid = self.new_node("stmt", stmt.line, fname)
            self.anchors[id(stmt)] = nid
            self.connect(preds, nid)
            return [nid], []
        if isinstance(stmt, ReturnStmt):
            nid = self.new_node("return", stmt.line, fname)
            self.anchors[id(stmt)] = nid
            self.connect(preds, nid)
            return [], [nid]
        if isinstance(stmt, If):
            cond = self.new_node("if", stmt.line, fname)
            self.anchors[id(stmt)] = cond
            self.connect(preds, cond)
            then_out, then_ret = self._emit_block(stmt.then, [cond], fname)
            if stmt.orelse:
                else_out, else_ret = self._emit_block(stmt.orelse, [cond], fname)
                return then_out + else_out, then_ret + else_ret
            return then_out + [cond], then_ret
        if isinstance(stmt, While):
            cond = self.new_node("while", stmt.line, fname)
            self.anchors[id(stmt)] = cond
            self.connect(preds, cond)
            body_out, body_ret = self._emit_block(stmt.body, [cond], fname)
            self.connect(body_out, cond)
            return [cond], body_ret
        if isinstance(stmt, DoWhile):
            first = len(self.nodes)
            body_out, body_ret = self._emit_block(stmt.body, preds, fname)
            cond = self.new_node("do-while", stmt.line, fname)
            self.anchors[id(stmt)] = cond
            self.connect(body_out, cond)
            self.connect([cond], first if first < cond else cond)
            return [cond], body_ret
        if isinstance(stmt, For):
            if stmt.init:
                init = self.new_node("for-init", stmt.line, fname)
                self.connect(preds, init)
                preds = [init]
            cond = self.new_node("for", stmt.line, fname)
            self.anchors[id(stmt)] = cond
            self.connect(preds, cond)
            body_out, body_ret = self._emit_block(stmt.body, [cond], fname)
            if stmt.update:
                upd = self.new_node("for-update", stmt.line, fname)
                self.connect(body_out, upd)
                self.connect([upd], cond)
            else:
                self.connect(body_out, cond)
            return [cond], body_ret
        raise TypeError(f"unknown statement {stmt!r}")

    def splice_calls(self, functions: list[FunctionDef]) -> None:
        """Wire call sites to callee entries per the interprocedural model."""
        defined = set(self.entries)
        for fn in functions:
            for stmt in _walk_statements(fn.body):
                calls = call_sites(_stmt_tokens(stmt), defined)
                if not calls:
                    continue
                nid = self.anchors[id(stmt)]
                plain = [c for c in calls if c != fn.name]
                recursive = [c for c in calls if c == fn.name]
                recursive_targets = {self.entries[c] for c in recursive}
                for callee in recursive:
                    self.edges.append([nid, self.entries[callee]])
                if not plain:
                    continue
                flow_outs = [
                    e
                    for e in self.edges
                    if e[0] == nid and e[1] not in recursive_targets
                ]
                if len(flow_outs) == 1:
                    # Straight-line node: splice the callee(s) into the flow.
                    succ = flow_outs[0][1]
                    self.edges.remove(flow_outs[0])
                    prev = nid
                    for callee in plain:
                        self.edges.append([prev, self.entries[callee]])
                        prev = self.exits[callee]
                    self.edges.append([prev, succ])
                else:
                    # Branching node (condition): keep its flow edges and
                    # attach one structural edge per callee.
                    for callee in plain:
                        self.edges.append([nid, self.entries[callee]])

    def finish(self) -> ControlFlowGraph:
        parent = list(range(len(self.nodes)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        components = len({find(i) for i in range(len(self.nodes))}) if self.nodes else 0

        out_degree: dict[int, int] = {}
        for u, _ in self.edges:
            out_degree[u] = out_degree.get(u, 0) + 1
        predicates = sum(1 for d in out_degree.values() if d >= 2)

        return ControlFlowGraph(
            nodes=tuple(self.nodes),
            edges=tuple((u, v) for u, v in self.edges),
            components=components,
            predicate_nodes=predicates,
        )


def build_cfg(source: str, dialect: Dialect = C_DIALECT) -> ControlFlowGraph:
    """Construct the interprocedural control-flow graph for a source file."""
    functions = parse_source(source, dialect)
    if not functions:
        raise StructureError("no function definitions found", 1)
    builder = _CfgBuilder()
    for fn in functions:
        builder.build_function(fn)
    builder.splice_calls(functions)
    return builder.finish()


def cyclomatic_graph(g: ControlFlowGraph) -> int:
    """v(G) from the graph: edges - nodes + 2 * components."""
    return g.n_edges - g.n_nodes + 2 * g.components


def region_count(g: ControlFlowGraph) -> int:
    """Planar regions of the flow graph; equals v(G) by Euler's formula."""
    return cyclomatic_graph(g)


def _function_spans(tokens: list[Token]) -> list[tuple[str, int, int]]:
    """(name, body_start, body_end) index triples for each function definition."""
    toks = [t for t in tokens if t.klass != COMMENT]
    spans = []
    depth = 0
    i = 0
    while i < len(toks):
        tok = toks[i]
        if tok.text == "{":
            depth += 1
        elif tok.text == "}":
            depth -= 1
        elif (
            depth == 0
            and tok.klass == IDENTIFIER
            and i + 1 < len(toks)
            and toks[i + 1].text == "("
        ):
            j = i + 2
            pdepth = 1
            while j < len(toks) and pdepth:
                if toks[j].text == "(":
                    pdepth += 1
                elif toks[j].text == ")":
                    pdepth -= 1
                j += 1
            if j < len(toks) and toks[j].text == "{":
                start = j + 1
                bdepth = 1
                k = start
                while k < len(toks) and bdepth:
                    if toks[k].text == "{":
                        bdepth += 1
                    elif toks[k].text == "}":
                        bdepth -= 1
                    k += 1
                spans.append((tok.text, start, k - 1))
                i = k
                depth = 0
                continue
        i += 1
    return spans


def recursive_call_count(source: str, dialect: Dialect = C_DIALECT) -> int:
    """Call sites where a function invokes itself."""
    ts = tokenize(source, dialect)
    toks = [t for t in ts.tokens if t.klass != COMMENT]
    spans = _function_spans(list(ts.tokens))
    count = 0
    for name, start, end in spans:
        body = toks[start:end]
        count += sum(
            1
            for i, t in enumerate(body[:-1])
            if t.klass == IDENTIFIER and t.text == name and body[i + 1].text == "("
        )
    return count


def cyclomatic_decisions(source: str, dialect: Dialect = C_DIALECT) -> int:
    """v(G) from decision points: branch keywords, ternaries, recursion, plus 1."""
    ts = tokenize(source, dialect)
    decisions = sum(
        1
        for t in ts.tokens
        if (t.klass == KEYWORD and t.text in dialect.decision_keywords)
        or (t.klass == OPERATOR and t.text == "?")
    )
    return decisions + recursive_call_count(source, dialect) + 1
