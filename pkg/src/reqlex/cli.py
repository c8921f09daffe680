"""Command-line interface.

Three subcommands:

* ``rbc <manifest.json>``: the requirement-based complexity breakdown;
* ``code <source>``: the full code-metric bundle for one source file;
* ``compare <manifests-dir> <sources-dir>``: joined records plus the trend
  report over a corpus, pairing ``X.json`` with ``X.*`` by stem.

Exit status: 0 on success, 1 when an input fails to parse or validate,
2 on usage errors.  Machine output (json/csv) is byte-deterministic for
identical invocations.

The source dialect is chosen from the file extension; the ``REQLEX_DIALECT``
environment variable (``c``, ``cpp`` or ``java``) overrides detection.
For standalone ``code`` runs the I/O counts that scale cognitive functional
size are read from an annotation comment such as ``/* io: inputs=1
outputs=1 */``; under ``compare`` they come from the paired manifest.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

from . import __version__
from .classic_metrics import (
    StructureError,
    build_cfg,
    cyclomatic_decisions,
    cyclomatic_graph,
    halstead_counts,
    halstead_metrics,
    region_count,
)
from .code_model import (
    COMMENT,
    IDENTIFIER,
    LexError,
    dialect_for_path,
    logical_lines,
    operator_occurrences,
    tokenize,
)
from .cognitive_metrics import (
    MODE_DEFAULT,
    MODE_PAPER,
    MODES,
    build_bcs_tree,
    cfs,
    cicm,
    coding_efficiency,
    cognitive_weight,
    identifier_density,
    klcid,
    klcid_paper_mode,
    line_infos,
    sbcs,
    wics,
)
from .rbc_engine import RbcConfig, compute_rbc, format_breakdown
from .report import FORMATS, compute_trend, emit, join_records
from .srs_model import ManifestError, parse_manifest

_INPUTS_RE = re.compile(r"\binputs\s*=\s*(\d+)")
_OUTPUTS_RE = re.compile(r"\boutputs\s*=\s*(\d+)")


def annotated_io_counts(tokens) -> tuple[int, int]:
    """(inputs, outputs) from the first annotation comment, else (0, 0)."""
    for tok in tokens:
        if tok.klass != COMMENT:
            continue
        m_in = _INPUTS_RE.search(tok.text)
        m_out = _OUTPUTS_RE.search(tok.text)
        if m_in or m_out:
            return (
                int(m_in.group(1)) if m_in else 0,
                int(m_out.group(1)) if m_out else 0,
            )
    return 0, 0


def analyze_source_text(
    source: str,
    dialect,
    mode: str = MODE_PAPER,
    ni: int | None = None,
    no: int | None = None,
    source_name: str = "<source>",
) -> dict:
    """Compute every code-side metric for one source text.

    Returns the flat machine-format dictionary used by reports and the CLI.
    """
    ts = tokenize(source, dialect, source_name)
    counts = halstead_counts(ts, dialect)
    hal = halstead_metrics(counts)

    graph = build_cfg(source, dialect)
    infos = line_infos(ts, dialect)

    tree_paper = build_bcs_tree(source, dialect, MODE_PAPER)
    tree_default = build_bcs_tree(source, dialect, MODE_DEFAULT)
    tree = tree_paper if mode == MODE_PAPER else tree_default
    wc = cognitive_weight(tree)

    if ni is None or no is None:
        ann_in, ann_out = annotated_io_counts(ts.tokens)
        ni = ann_in if ni is None else ni
        no = ann_out if no is None else no

    identifiers = [t.text for t in ts.tokens if t.klass == IDENTIFIER]
    klcid_value = klcid_paper_mode(ts, dialect) if mode == MODE_PAPER else klcid(infos)
    wics_value = wics(infos) if infos else 0.0
    sbcs_value = sbcs(tree)
    ics_total = sum(li.ics for li in infos)

    out = {
        "n1": counts.n1,
        "n2": counts.n2,
        "N1": counts.N1,
        "N2": counts.N2,
        **hal.as_dict(),
        "vG_graph": cyclomatic_graph(graph),
        "vG_decisions": cyclomatic_decisions(source, dialect),
        "regions": region_count(graph),
        "nodes": graph.n_nodes,
        "edges": graph.n_edges,
        "p": graph.components,
        "predicate_nodes": graph.predicate_nodes,
        "id_count": len(identifiers),
        "id_distinct": len(set(identifiers)),
        "loc": ts.loc,
        "id_density": identifier_density(ts) if ts.loc else 0.0,
        "unique_lines": len({li.shape for li in infos}),
        "klcid": klcid_value,
        "wc": wc,
        "wc_paper": cognitive_weight(tree_paper),
        "wc_default": cognitive_weight(tree_default),
        "cfs": cfs(ni, no, wc),
        "sbcs": sbcs_value,
        "wics": wics_value,
        "cicm": cicm(wics_value, sbcs_value),
        "ei": coding_efficiency(ics_total, ts.loc) if ts.loc else 0.0,
        "ni": ni,
        "no": no,
        "mode": mode,
    }
    return out


def analyze_source_file(
    path: str | Path,
    mode: str = MODE_PAPER,
    dialect_override: str | None = None,
    ni: int | None = None,
    no: int | None = None,
) -> dict:
    path = Path(path)
    dialect = dialect_for_path(str(path), dialect_override)
    source = path.read_text(encoding="utf-8")
    result = analyze_source_text(source, dialect, mode, ni, no, path.name)
    result["dialect"] = dialect.name
    return result


def analyze_manifest_file(path: str | Path, cfg: RbcConfig):
    path = Path(path)
    manifest = parse_manifest(path.read_text(encoding="utf-8"))
    return manifest, compute_rbc(manifest, cfg)


def _write(document: str, out_path: str | None) -> None:
    if out_path:
        Path(out_path).write_text(document, encoding="utf-8")
    else:
        sys.stdout.write(document)
        if not document.endswith("\n"):
            sys.stdout.write("\n")


def _fail(path, exc) -> int:
    sys.stderr.write(f"error: {path}: {exc}\n")
    return 1


def _cmd_rbc(args) -> int:
    cfg = RbcConfig(rc_mode=args.rc_mode)
    try:
        manifest, breakdown = analyze_manifest_file(args.manifest, cfg)
    except (ManifestError, OSError) as exc:
        return _fail(args.manifest, exc)
    if args.format == "json":
        doc = {
            "name": manifest.name,
            "config": {"rc_mode": cfg.rc_mode, "nfr_floor": cfg.nfr_floor},
            **breakdown.as_dict(),
        }
        _write(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        _write(format_breakdown(manifest.name, breakdown) + "\n", args.out)
    return 0


def _cmd_code(args) -> int:
    dialect_override = os.environ.get("REQLEX_DIALECT") or None
    try:
        result = analyze_source_file(args.source, args.bcs_mode, dialect_override)
    except (LexError, StructureError, OSError, ValueError) as exc:
        return _fail(args.source, exc)
    if args.format == "json":
        _write(json.dumps({"source": Path(args.source).name, **result}, indent=2) + "\n",
               args.out)
    else:
        lines = [f"Source: {Path(args.source).name} ({result['dialect']})"]
        for key, value in result.items():
            if key == "dialect":
                continue
            shown = f"{value:.4f}" if isinstance(value, float) else value
            lines.append(f"  {key:<14} {shown if shown is not None else '-'}")
        _write("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_compare(args) -> int:
    cfg = RbcConfig(rc_mode=args.rc_mode)
    dialect_override = os.environ.get("REQLEX_DIALECT") or None
    manifest_dir = Path(args.manifests_dir)
    source_dir = Path(args.sources_dir)
    if not manifest_dir.is_dir():
        return _fail(manifest_dir, "not a directory")
    if not source_dir.is_dir():
        return _fail(source_dir, "not a directory")

    sources_by_stem: dict[str, Path] = {}
    for path in sorted(source_dir.iterdir()):
        if path.is_file():
            sources_by_stem.setdefault(path.stem, path)

    manifests = {}
    breakdowns = {}
    for path in sorted(manifest_dir.glob("*.json")):
        try:
            manifest, breakdown = analyze_manifest_file(path, cfg)
        except (ManifestError, OSError) as exc:
            return _fail(path, exc)
        manifests[path.stem] = manifest
        breakdowns[path.stem] = breakdown

    codes = {}
    for stem, path in sources_by_stem.items():
        manifest = manifests.get(stem)
        try:
            codes[stem] = analyze_source_file(
                path,
                args.bcs_mode,
                dialect_override,
                ni=manifest.inputs if manifest else None,
                no=manifest.outputs if manifest else None,
            )
        except (LexError, StructureError, OSError, ValueError) as exc:
            return _fail(path, exc)

    records, warnings = join_records(breakdowns, codes)
    for message in warnings:
        sys.stderr.write(f"warning: {message}\n")
    trend = compute_trend(records) if len(records) >= 2 else None
    _write(emit(records, trend, args.format), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reqlex",
        description="Requirement-based and code-based software complexity metrics.",
    )
    parser.add_argument("--version", action="version", version=f"reqlex {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_rbc = sub.add_parser("rbc", help="complexity breakdown from a manifest")
    p_rbc.add_argument("manifest", help="path to a manifest JSON file")
    p_rbc.add_argument("--rc-mode", choices=("product", "sum"), default="product")
    p_rbc.add_argument("--format", choices=("human", "json"), default="human")
    p_rbc.add_argument("--out", help="write output to this path instead of stdout")
    p_rbc.set_defaults(func=_cmd_rbc)

    p_code = sub.add_parser("code", help="code metrics for one source file")
    p_code.add_argument("source", help="path to a source file")
    p_code.add_argument("--bcs-mode", choices=MODES, default=MODE_PAPER)
    p_code.add_argument("--format", choices=("human", "json"), default="human")
    p_code.add_argument("--out", help="write output to this path instead of stdout")
    p_code.set_defaults(func=_cmd_code)

    p_cmp = sub.add_parser("compare", help="join manifests with sources and correlate")
    p_cmp.add_argument("manifests_dir", help="directory of manifest JSON files")
    p_cmp.add_argument("sources_dir", help="directory of source files")
    p_cmp.add_argument("--rc-mode", choices=("product", "sum"), default="product")
    p_cmp.add_argument("--bcs-mode", choices=MODES, default=MODE_PAPER)
    p_cmp.add_argument("--format", choices=FORMATS, default="human")
    p_cmp.add_argument("--out", help="write output to this path instead of stdout")
    p_cmp.set_defaults(func=_cmd_compare)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
