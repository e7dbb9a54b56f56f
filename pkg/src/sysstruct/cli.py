"""Command-line front end: ``python3 -m sysstruct <command> ...``.

Every command reads one realization file (JSON, see :mod:`sysstruct.io`);
a bare name such as ``ring`` that is not an existing path is looked up in
the bundled corpus.  ``check`` exits 0 only if every applicable check holds.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import corpus
from .dsf import check_relation, dsf, dsf_transfer, signal_structure_graph
from .errors import StructureError
from .gds import cyclic_inputs, dependency_graph, load_edge_list, simulate
from .io import dsf_to_dict, format_document, load_realization, rational_matrix_to_rows, realization_to_dict
from .polyrat import Properness, RationalFunction, RationalMatrix
from .realization import minimize_intricacy, output_normal_form, transfer_function
from .sparsity import sparsity
from .structure import comp_structure, lft_transfer, subsystem_structure, to_lft

__all__ = ["main", "build_parser", "AnalysisReport", "analyse"]


def _load(spec: str):
    p = Path(spec)
    if p.exists():
        return load_realization(p)
    if spec in corpus.names():
        return corpus.load(spec)
    raise FileNotFoundError(f"{spec}: no such file or corpus entry")


def _matrix_text(M, row_labels=None, col_labels=None) -> list[str]:
    rows = rational_matrix_to_rows(M) if isinstance(M, RationalMatrix) else [
        [str(x) for x in r] for r in M.data]
    if not rows:
        return ["  (empty)"]
    lines = []
    if col_labels:
        lines.append("  cols: " + " ".join(col_labels))
    for i, r in enumerate(rows):
        tag = f"{row_labels[i]}: " if row_labels else ""
        lines.append(f"  {tag}[" + ", ".join(r) + "]")
    return lines


def _write_dot(outdir: str | None, name: str, text: str, written: list[str]):
    if outdir is None:
        return
    d = Path(outdir)
    d.mkdir(parents=True, exist_ok=True)
    (d / name).write_text(text, encoding="utf-8")
    written.append(str(d / name))


def _emit(args, text_lines: list[str], doc: dict):
    if args.format == "json":
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


# -- commands -------------------------------------------------------------


def cmd_minimize(args) -> int:
    g = _load(args.file)
    r = minimize_intricacy(g)
    if args.format == "json":
        sys.stdout.write(format_document(realization_to_dict(r)))
        return 0
    lines = [f"minimal intricacy realization: n={r.n} m={r.m} p={r.p} (l was {g.l})"]
    for name in ("A", "B", "C", "D"):
        lines.append(f"{name}o =")
        lines += _matrix_text(getattr(r, name))
    _emit(args, lines, {})
    return 0


def cmd_tf(args) -> int:
    g = _load(args.file)
    G = transfer_function(g)
    lines = ["G(s) ="] + _matrix_text(G, g.output_labels, g.input_labels)
    _emit(args, lines, {"inputs": list(g.input_labels), "outputs": list(g.output_labels),
                        "G": rational_matrix_to_rows(G)})
    return 0


def cmd_subsystems(args) -> int:
    g = _load(args.file)
    c = comp_structure(g)
    ss = subsystem_structure(c)
    lft = to_lft(ss)
    written: list[str] = []
    _write_dot(args.dot, "computational.dot", c.to_dot(ss.components), written)
    _write_dot(args.dot, "subsystem.dot", ss.to_dot(), written)
    lines = [f"manifest variables: {', '.join(sorted(c.manifest_vars))}",
             f"components ({ss.q}):"]
    for i, comp in enumerate(ss.components):
        lines.append(f"  {i + 1}: {{{', '.join(v.name for v in comp)}}}")
    lines.append(f"blocks ({len(lft.blocks)}):")
    blocks = []
    for k, b in enumerate(lft.blocks):
        lines.append(f"  S{k + 1}: {', '.join(b.input_names)} -> {', '.join(b.output_names)}")
        lines += ["  " + x for x in _matrix_text(b.S, b.output_names)]
        blocks.append({"component": b.component + 1, "inputs": list(b.input_names),
                       "outputs": list(b.output_names), "S": rational_matrix_to_rows(b.S)})
    lines.append("pi = L u + K w,  pi = " + ", ".join(lft.pi))
    lines.append("L =")
    lines += _matrix_text(lft.L, lft.pi, lft.inputs)
    lines.append("K =")
    lines += _matrix_text(lft.K, lft.pi, lft.signals)
    lines += [f"wrote {w}" for w in written]
    _emit(args, lines, {
        "manifest": sorted(c.manifest_vars),
        "components": [[v.name for v in comp] for comp in ss.components],
        "blocks": blocks, "pi": list(lft.pi), "signals": list(lft.signals),
        "L": [[str(x) for x in r] for r in lft.L.data],
        "K": [[str(x) for x in r] for r in lft.K.data],
        "dot": written,
    })
    return 0


def cmd_dsf(args) -> int:
    g = _load(args.file)
    nf = output_normal_form(g)
    d = dsf(nf)
    written: list[str] = []
    _write_dot(args.dot, "signal.dot", signal_structure_graph(d).to_dot(), written)
    ys = list(d.row_labels)
    lines = [f"p1 = {d.p1}; output order: {', '.join(ys)}", "T ="]
    lines += _matrix_text(nf.T)
    lines.append("Q =")
    lines += _matrix_text(d.Q, ys[:d.p1], ys[:d.p1])
    lines.append("P =")
    lines += _matrix_text(d.P, ys[:d.p1], d.input_labels)
    if d.p > d.p1:
        lines.append("C2 =")
        lines += _matrix_text(d.C2, ys[d.p1:], ys[:d.p1])
    lines += [f"wrote {w}" for w in written]
    doc = dsf_to_dict(d)
    doc["dot"] = written
    _emit(args, lines, doc)
    return 0


def cmd_sparsity(args) -> int:
    g = _load(args.file)
    z = sparsity(transfer_function(g), g.input_labels, g.output_labels)
    written: list[str] = []
    _write_dot(args.dot, "sparsity.dot", z.to_dot(), written)
    lines = [f"{len(z.edges)} edges"]
    lines += [f"  {a} -> {b}: {tf}" for a, b, tf in z.edges]
    lines += [f"wrote {w}" for w in written]
    _emit(args, lines, {"edges": [[a, b, str(tf)] for a, b, tf in z.edges], "dot": written})
    return 0


@dataclass
class AnalysisReport:
    n: int
    l: int
    m: int
    p: int
    verdicts: list = field(default_factory=list)   # (name, True/False/None, detail)
    timing: dict = field(default_factory=dict)

    def add(self, name: str, ok, detail: str = ""):
        self.verdicts.append((name, ok, detail))

    @property
    def passed(self) -> bool:
        return all(ok is not False for _, ok, _ in self.verdicts)

    def lines(self, timing: bool = False) -> list[str]:
        out = [f"n={self.n} l={self.l} m={self.m} p={self.p}"]
        for name, ok, detail in self.verdicts:
            tag = "skip" if ok is None else ("PASS" if ok else "FAIL")
            out.append(f"[{tag}] {name}" + (f": {detail}" if detail else ""))
        if timing:
            out += [f"  {k}: {v * 1000:.1f} ms" for k, v in self.timing.items()]
        out.append("all checks passed" if self.passed else "some checks FAILED")
        return out

    def as_dict(self, timing: bool = False) -> dict:
        doc = {"n": self.n, "l": self.l, "m": self.m, "p": self.p, "passed": self.passed,
               "verdicts": [{"name": n, "ok": ok, "detail": d} for n, ok, d in self.verdicts]}
        if timing:
            doc["timing_ms"] = {k: round(v * 1000, 3) for k, v in self.timing.items()}
        return doc


def _residual_text(R: RationalMatrix) -> str:
    bad = [f"({i + 1},{j + 1}) {R[i, j]}" for i in range(R.rows) for j in range(R.cols) if R[i, j]]
    return "nonzero residual at " + "; ".join(bad)


def analyse(g, perturb_block: int | None = None) -> AnalysisReport:
    """Run every transfer-function route and the subsystem/signal relation."""
    rep = AnalysisReport(g.n, g.l, g.m, g.p)
    clock = time.perf_counter

    t = clock()
    r = minimize_intricacy(g)
    G = transfer_function(r)
    rep.timing["state-space"] = clock() - t

    t = clock()
    lft = to_lft(subsystem_structure(comp_structure(g)))
    if perturb_block is not None:
        Ss = list(lft.Sblocks)
        k = perturb_block - 1
        bump = RationalMatrix(Ss[k].rows, Ss[k].cols,
                              [RationalFunction.coerce("1/(s+1)") if i == 0 else 0
                               for i in range(Ss[k].rows * Ss[k].cols)])
        Ss[k] = Ss[k] + bump
        lft = lft.with_blocks(Ss)
    G_lft = lft_transfer(lft)
    rep.timing["lft"] = clock() - t
    rep.add("lft route equals state-space route", G_lft == G,
            "" if G_lft == G else _residual_text(G_lft - G))

    try:
        t = clock()
        nf = output_normal_form(r)
        d = dsf(nf)
        G_dsf = dsf_transfer(d)
        rep.timing["dsf"] = clock() - t
    except StructureError as exc:
        rep.add("dsf route equals state-space route", None, str(exc))
        return rep
    rep.add("dsf route equals state-space route", G_dsf == G,
            "" if G_dsf == G else _residual_text(G_dsf - G))
    G_nf = transfer_function(nf.realization)
    inv = sorted(range(g.p), key=lambda k: nf.output_perm[k])
    rep.add("output normal form preserves G", G_nf.permute(inv, None) == G)
    rep.add("Q has zero diagonal", all(d.Q[i, i].is_zero() for i in range(d.p1)))
    rep.add("Q strictly proper", all(d.Q[i, j].properness == Properness.STRICTLY_PROPER
                                     for i in range(d.p1) for j in range(d.p1) if d.Q[i, j]))
    patterns = {str(sparsity(X).pattern()) for X in (G, G_lft, G_dsf)}
    rep.add("sparsity identical across routes", len(patterns) == 1)
    try:
        chk = check_relation(lft, d)
    except StructureError as exc:
        rep.add("subsystem/signal relation", None, str(exc))
    else:
        rep.add("subsystem/signal relation", chk.holds,
                "" if chk.holds else _residual_text(chk.residual))
    return rep


def cmd_check(args) -> int:
    g = _load(args.file)
    rep = analyse(g, args.perturb_block)
    if args.format == "json":
        sys.stdout.write(json.dumps(rep.as_dict(args.timing), indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(rep.lines(args.timing)) + "\n")
    return 0 if rep.passed else 1


def _parse_bits(text: str, n: int) -> list[int]:
    bits = [int(ch) for ch in text.replace(",", "").replace(" ", "")]
    if len(bits) != n or any(b not in (0, 1) for b in bits):
        raise ValueError(f"x0 must be {n} binary digits")
    return bits


def cmd_gds(args) -> int:
    if Path(args.graph).exists():
        g = load_edge_list(args.graph)
    else:
        g = corpus.load_graph(args.graph)
    x0 = _parse_bits(args.x0, g.n) if args.x0 else [0] * g.n
    if args.inputs in (None, "cyclic"):
        inputs = cyclic_inputs(g.n, args.steps)
    else:
        inputs = [int(v) for v in args.inputs.split(",") if v.strip()]
    tr = simulate(g, x0, inputs, args.steps)
    sys.stdout.write(tr.to_csv())
    if args.deps:
        edges = sorted(dependency_graph(g), key=lambda e: (e[0].sort_key(), e[1].sort_key()))
        sys.stdout.write("# dependency graph\n")
        sys.stdout.writelines(f"{a.name} -> {b.name}\n" for a, b in edges)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sysstruct", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, dot=False):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="realization JSON file or corpus name")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if dot:
            p.add_argument("--dot", metavar="DIR", help="write DOT files into DIR")
        p.set_defaults(func=fn)
        return p

    add("minimize", cmd_minimize, "eliminate auxiliary variables")
    add("tf", cmd_tf, "transfer function")
    add("subsystems", cmd_subsystems, "subsystem structure and LFT", dot=True)
    add("dsf", cmd_dsf, "dynamical structure function", dot=True)
    add("sparsity", cmd_sparsity, "sparsity structure", dot=True)
    chk = add("check", cmd_check, "cross-check every representation")
    chk.add_argument("--timing", action="store_true", help="report per-route timings")
    chk.add_argument("--perturb-block", type=int, metavar="K",
                     help="add 1/(s+1) to entry (1,1) of block K before checking")

    p = sub.add_parser("gds", help="simulate a graph dynamical system")
    p.add_argument("graph", help="edge-list file or corpus name (e.g. gds-ring)")
    p.add_argument("--x0", help="initial state as binary digits, default all zero")
    p.add_argument("--inputs", help="comma-separated node sequence, or 'cyclic' (default)")
    p.add_argument("--steps", type=int, default=28)
    p.add_argument("--deps", action="store_true", help="also print the dependency graph")
    p.set_defaults(func=cmd_gds)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (StructureError, ValueError, ArithmeticError, FileNotFoundError, KeyError) as exc:
        sys.stderr.write(f"sysstruct: error: {exc}\n")
        return 2
