"""Lexer for a C-like source dialect: classified tokens and logical lines.

Every code-side metric in the toolkit is computed from the ``TokenStream``
produced here, so the counting convention is fixed in one place:

* counted operators: every symbolic operator, the opening half of each
  bracket pair ``( { [`` (closers are the pair's other half, not a second
  operator), the statement separator ``;``, the control-flow keywords
  ``if else for while return`` and the primitive type keywords;
* counted operands: identifiers and literals, each string literal once;
* never counted: comments, closing brackets, commas, and preprocessor
  directives, which are lexed as comment tokens since they contribute no
  executable content.

LOC is the number of physical lines carrying at least one non-comment token,
which also makes it the length of ``logical_lines``.

Lexing is pure and stateless; line endings are normalised before scanning,
so CRLF and LF input produce identical streams.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

OPERATOR = "operator"
IDENTIFIER = "identifier"
LITERAL = "literal"
KEYWORD = "keyword"
PUNCTUATION = "punctuation"
COMMENT = "comment"
STRING = "string"

TOKEN_CLASSES = frozenset(
    {OPERATOR, IDENTIFIER, LITERAL, KEYWORD, PUNCTUATION, COMMENT, STRING}
)


class LexError(Exception):
    """Scanning failed; carries the 1-based line of the offending construct."""

    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


@dataclass(frozen=True)
class Token:
    text: str
    klass: str
    line: int
    offset: int  # absolute character offset into the normalised source


@dataclass(frozen=True)
class Dialect:
    """Lexical profile of one surface syntax (keywords, operators, comments)."""

    name: str
    keywords: frozenset[str]
    counted_keywords: frozenset[str]
    type_keywords: frozenset[str]
    decision_keywords: frozenset[str]
    operators: tuple[str, ...]  # longest-first for maximal munch
    punctuation: frozenset[str]
    counted_punctuation: frozenset[str]
    line_comment: str = "//"
    block_comment: tuple[str, str] = ("/*", "*/")
    string_delimiters: frozenset[str] = frozenset({'"', "'"})
    preprocessor_prefix: str | None = "#"

    def __post_init__(self):
        ordered = tuple(sorted(self.operators, key=len, reverse=True))
        object.__setattr__(self, "operators", ordered)
        # Maximal munch is only sound when every proper prefix of an operator
        # is itself an operator.
        for op in ordered:
            for i in range(1, len(op)):
                if op[:i] not in self.operators:
                    raise ValueError(f"operator set not prefix-closed at {op!r}")


_C_OPERATORS = (
    "<<=", ">>=",
    "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
    "+", "-", "*", "/", "%", "=", "<", ">", "!", "&", "|", "^", "~",
    "?", ":", ".",
)

_C_TYPE_KEYWORDS = frozenset(
    {"int", "void", "char", "float", "double", "long", "short", "signed", "unsigned"}
)

C_DIALECT = Dialect(
    name="c",
    keywords=frozenset(
        {
            "if", "else", "for", "while", "do", "return", "switch", "case",
            "default", "break", "continue", "goto", "sizeof", "typedef",
            "extern", "static", "register", "volatile", "auto", "const",
            "struct", "union", "enum",
        }
    )
    | _C_TYPE_KEYWORDS,
    counted_keywords=frozenset({"if", "else", "for", "while", "return"})
    | _C_TYPE_KEYWORDS,
    type_keywords=_C_TYPE_KEYWORDS,
    decision_keywords=frozenset({"if", "while", "for", "case"}),
    operators=_C_OPERATORS,
    punctuation=frozenset({"(", ")", "{", "}", "[", "]", ";", ","}),
    counted_punctuation=frozenset({"(", "{", "[", ";"}),
)

CPP_DIALECT = Dialect(
    name="cpp",
    keywords=C_DIALECT.keywords
    | frozenset(
        {
            "class", "public", "private", "protected", "namespace", "using",
            "new", "delete", "template", "typename", "bool", "true", "false",
            "this", "virtual", "operator", "try", "catch", "throw", "inline",
            "friend",
        }
    ),
    counted_keywords=C_DIALECT.counted_keywords | frozenset({"bool", "new", "delete"}),
    type_keywords=_C_TYPE_KEYWORDS | frozenset({"bool"}),
    decision_keywords=frozenset({"if", "while", "for", "case", "catch"}),
    operators=_C_OPERATORS + ("::",),
    punctuation=C_DIALECT.punctuation,
    counted_punctuation=C_DIALECT.counted_punctuation,
)

JAVA_DIALECT = Dialect(
    name="java",
    keywords=frozenset(
        {
            "if", "else", "for", "while", "do", "return", "switch", "case",
            "default", "break", "continue", "class", "public", "private",
            "protected", "static", "final", "void", "int", "char", "float",
            "double", "long", "short", "boolean", "byte", "new", "try",
            "catch", "finally", "throw", "throws", "import", "package",
            "extends", "implements", "interface", "this", "super", "true",
            "false", "null", "instanceof", "abstract",
        }
    ),
    counted_keywords=frozenset({"if", "else", "for", "while", "return"})
    | frozenset(
        {"int", "void", "char", "float", "double", "long", "short", "boolean", "byte", "new"}
    ),
    type_keywords=frozenset(
        {"int", "void", "char", "float", "double", "long", "short", "boolean", "byte"}
    ),
    decision_keywords=frozenset({"if", "while", "for", "case", "catch"}),
    operators=_C_OPERATORS + (">>>",),
    punctuation=C_DIALECT.punctuation | frozenset({"@"}),
    counted_punctuation=C_DIALECT.counted_punctuation,
    preprocessor_prefix=None,
)

DIALECTS = {"c": C_DIALECT, "cpp": CPP_DIALECT, "java": JAVA_DIALECT}

_EXTENSION_MAP = {
    ".c": "c",
    ".h": "c",
    ".cc": "cpp",
    ".cpp": "cpp",
    ".cxx": "cpp",
    ".hpp": "cpp",
    ".java": "java",
}


def dialect_for_path(path: str, override: str | None = None) -> Dialect:
    """Pick a dialect from a file extension, or by explicit name."""
    if override:
        try:
            return DIALECTS[override]
        except KeyError:
            raise ValueError(
                f"unknown dialect {override!r}; choose from {sorted(DIALECTS)}"
            ) from None
    for ext, name in _EXTENSION_MAP.items():
        if path.lower().endswith(ext):
            return DIALECTS[name]
    return C_DIALECT


@dataclass(frozen=True)
class TokenStream:
    tokens: tuple[Token, ...]
    source_name: str = "<source>"
    loc: int = field(default=0)


_IDENT_RE = re.compile(r"[A-Za-z_]\w*")
_NUMBER_RE = re.compile(
    r"0[xX][0-9a-fA-F]+[uUlL]*"
    r"|\d+\.\d*(?:[eE][+-]?\d+)?[fFlL]?"
    r"|\.\d+(?:[eE][+-]?\d+)?[fFlL]?"
    r"|\d+(?:[eE][+-]?\d+)?[uUlLfF]*"
)


def tokenize(source: str, dialect: Dialect = C_DIALECT,
             source_name: str = "<source>") -> TokenStream:
    """Scan source text into a complete, ordered token stream.

    Every non-whitespace character lands in exactly one token, so the source
    is reconstructible from token texts plus the whitespace between them.
    """
    text = source.replace("\r\n", "\n").replace("\r", "\n")
    tokens: list[Token] = []
    i = 0
    line = 1
    n = len(text)
    open_cmt, close_cmt = dialect.block_comment

    def at_line_start(pos: int) -> bool:
        j = pos - 1
        while j >= 0 and text[j] in " \t":
            j -= 1
        return j < 0 or text[j] == "\n"

    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            i += 1
            continue
        if ch in " \t\f\v":
            i += 1
            continue

        # Preprocessor directive: the whole physical line is one non-code token.
        if (
            dialect.preprocessor_prefix
            and text.startswith(dialect.preprocessor_prefix, i)
            and at_line_start(i)
        ):
            end = text.find("\n", i)
            end = n if end == -1 else end
            tokens.append(Token(text[i:end], COMMENT, line, i))
            i = end
            continue

        if text.startswith(dialect.line_comment, i):
            end = text.find("\n", i)
            end = n if end == -1 else end
            tokens.append(Token(text[i:end], COMMENT, line, i))
            i = end
            continue

        if text.startswith(open_cmt, i):
            end = text.find(close_cmt, i + len(open_cmt))
            if end == -1:
                raise LexError("unterminated block comment", line)
            end += len(close_cmt)
            tokens.append(Token(text[i:end], COMMENT, line, i))
            line += text.count("\n", i, end)
            i = end
            continue

        if ch in dialect.string_delimiters:
            j = i + 1
            while j < n:
                if text[j] == "\\" and j + 1 < n:
                    j += 2
                    continue
                if text[j] == ch:
                    break
                if text[j] == "\n":
                    raise LexError("unterminated string literal", line)
                j += 1
            else:
                raise LexError("unterminated string literal", line)
            tokens.append(Token(text[i : j + 1], STRING, line, i))
            i = j + 1
            continue

        m = _NUMBER_RE.match(text, i)
        if m and (ch.isdigit() or (ch == "." and i + 1 < n and text[i + 1].isdigit())):
            tokens.append(Token(m.group(), LITERAL, line, i))
            i = m.end()
            continue

        m = _IDENT_RE.match(text, i)
        if m:
            word = m.group()
            klass = KEYWORD if word in dialect.keywords else IDENTIFIER
            tokens.append(Token(word, klass, line, i))
            i = m.end()
            continue

        for op in dialect.operators:
            if text.startswith(op, i):
                tokens.append(Token(op, OPERATOR, line, i))
                i += len(op)
                break
        else:
            if ch in dialect.punctuation:
                tokens.append(Token(ch, PUNCTUATION, line, i))
                i += 1
            else:
                raise LexError(f"unexpected character {ch!r}", line)

    loc = len({t.line for t in tokens if t.klass != COMMENT})
    return TokenStream(tokens=tuple(tokens), source_name=source_name, loc=loc)


def is_counted_operator(token: Token, dialect: Dialect = C_DIALECT) -> bool:
    """Frozen convention: does this token count as an operator occurrence?"""
    if token.klass == OPERATOR:
        return True
    if token.klass == PUNCTUATION:
        return token.text in dialect.counted_punctuation
    if token.klass == KEYWORD:
        return token.text in dialect.counted_keywords
    return False


def operand_occurrences(ts: TokenStream) -> list[Token]:
    """All operand tokens in order: identifiers plus numeric/string literals."""
    return [t for t in ts.tokens if t.klass in (IDENTIFIER, LITERAL, STRING)]


def operator_occurrences(ts: TokenStream, dialect: Dialect = C_DIALECT) -> list[Token]:
    """All counted operator tokens in order, per the frozen convention."""
    return [t for t in ts.tokens if is_counted_operator(t, dialect)]


def logical_lines(ts: TokenStream) -> list[list[Token]]:
    """Tokens grouped by physical line; blank and comment-only lines dropped."""
    by_line: dict[int, list[Token]] = {}
    for t in ts.tokens:
        if t.klass == COMMENT:
            continue
        by_line.setdefault(t.line, []).append(t)
    return [by_line[k] for k in sorted(by_line)]
