"""Assertions shared between the unit and acceptance suites."""

from reqlex.code_model import tokenize


def assert_reconstructs(source: str) -> None:
    """Tokens must tile the normalised source exactly, whitespace aside."""
    normalised = source.replace("\r\n", "\n").replace("\r", "\n")
    ts = tokenize(source)
    covered = bytearray(len(normalised))
    pos = -1
    for tok in ts.tokens:
        assert tok.offset > pos, "tokens out of order or overlapping"
        assert normalised[tok.offset : tok.offset + len(tok.text)] == tok.text
        for i in range(tok.offset, tok.offset + len(tok.text)):
            covered[i] = 1
        pos = tok.offset
    for i, hit in enumerate(covered):
        if not hit:
            assert normalised[i] in " \t\n\f\v", f"uncovered non-whitespace at {i}"
