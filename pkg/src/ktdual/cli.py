"""Command line front end: ``ktdual <subcommand> --group G --rep V``."""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import Sequence

from .groups import CharacterTableError, FiniteGroupData, resolve_group
from .ktheory import (
    KContext,
    PerfectionError,
    context_for,
    euler_class,
    fundamental_class,
    gram_matrix,
    poincare_dual,
    verify_perfect,
)
from .repring import IntegralityError, NotGenuineError, VirtualCharacter, parse_rep
from .symbolic import generic_table
from . import flags as flagmod
from . import verify as verifymod

FORMATS = ("text", "json", "latex")


class UsageError(Exception):
    """Raised for anything that should exit with status 2."""


@dataclass
class CommandConfig:
    subcommand: str
    group: str | None = None
    rep: str | None = None
    fmt: str = "text"
    verbosity: int = 0
    seed: int = 0
    smax: int | None = None
    dim: int | None = None
    suite: str | None = None
    out: str | None = None
    list_flags: bool = False
    verify_flags: bool = False


# -- rendering ------------------------------------------------------------


def _basis_label(i: int, latex: bool = False) -> str:
    if i == 0:
        return "1"
    if i == 1:
        return "y"
    return f"y^{i}" if not latex or i < 10 else f"y^{{{i}}}"


def _latex_rep(x: VirtualCharacter) -> str:
    # labels become \mathrm{label}; integer coefficients lose their '*'
    s = re.sub(r"[A-Za-z_][\w.^]*", lambda m: "\\mathrm{" + m.group(0) + "}", x.format())
    return s.replace("*", "")


def _text_table(n: int, cells: list[list[str]]) -> str:
    header = [""] + [_basis_label(j) for j in range(n)]
    rows = [header] + [[_basis_label(i)] + cells[i] for i in range(n)]
    widths = [max(len(r[c]) for r in rows) for c in range(n + 1)]
    lines = []
    for k, r in enumerate(rows):
        lines.append(" | ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
        if k == 0:
            lines.append("-+-".join("-" * w for w in widths))
    return "\n".join(lines)


def _latex_table(n: int, cells: list[list[str]], caption: str, notes: Sequence[str] = ()) -> str:
    cols = "c" * (2 * n - 1)
    out = ["\\begin{center}", f"\\begin{{tabular}}{{|c|{cols}|}}\\hline"]
    out.append("&" + "&&".join(f"${_basis_label(j, True)}$" for j in range(n)) + "\\\\\\hline")
    for i in range(n):
        out.append(f"${_basis_label(i, True)}$&" + "&&".join(f"${c}$" for c in cells[i]) + "\\\\")
    out.append("\\hline")
    out.append(f"\\multicolumn{{{2 * n}}}{{c}}{{}}\\\\")
    out.append(f"\\multicolumn{{{2 * n}}}{{c}}{{{caption}}}")
    out.append("\\end{tabular}")
    out.append("\\end{center}")
    out.extend(f"% {note}" for note in notes)
    return "\n".join(out)


# -- resolution -----------------------------------------------------------


def _resolve(cfg: CommandConfig) -> tuple[FiniteGroupData, VirtualCharacter]:
    if not cfg.group:
        raise UsageError("--group is required")
    try:
        g = resolve_group(cfg.group)
    except (LookupError, CharacterTableError, ValueError, OSError) as exc:
        raise UsageError(str(exc)) from exc
    if cfg.rep is None:
        raise UsageError("--rep is required")
    try:
        v = parse_rep(g, cfg.rep)
    except (LookupError, ValueError) as exc:
        raise UsageError(f"bad representation {cfg.rep!r}: {exc}") from exc
    return g, v


def _context(cfg: CommandConfig) -> KContext:
    g, v = _resolve(cfg)
    try:
        if cfg.smax is not None:
            return KContext(v, cfg.smax)
        return context_for(v)
    except (NotGenuineError, IntegralityError, ValueError) as exc:
        raise UsageError(f"{cfg.rep!r} is not a usable representation: {exc}") from exc


# -- subcommands ------------------------------------------------------------


def cmd_euler(cfg: CommandConfig) -> tuple[int, str]:
    ctx = _context(cfg)
    chi = euler_class(ctx.v)
    ycoeffs = chi.to_y_coeffs()
    if cfg.fmt == "json":
        doc = {
            "group": ctx.group.name,
            "rep": ctx.v.format(),
            "n": ctx.n,
            "euler_z": {str(e): chi.terms[e].format() for e in sorted(chi.terms)},
            "euler_y": [c.format() for c in ycoeffs],
        }
        return 0, json.dumps(doc, sort_keys=True)
    # one coefficient per line: group labels may themselves be called z
    lines = [f"chi(Vz), coefficient of z^{e}: {chi.terms[e].format()}" for e in sorted(chi.terms)]
    lines += [f"chi(Vz), coefficient of y^{i}: {c.format()}" for i, c in enumerate(ycoeffs)]
    return 0, "\n".join(lines)


def cmd_sigma(cfg: CommandConfig) -> tuple[int, str]:
    ctx = _context(cfg)
    if cfg.fmt == "json":
        doc = {"group": ctx.group.name, "rep": ctx.v.format(), "n": ctx.n, "sigma": [s.format() for s in ctx.sigma]}
        return 0, json.dumps(doc, sort_keys=True)
    return 0, "\n".join(f"sigma_{j} = {s.format()}" for j, s in enumerate(ctx.sigma, 1))


def _generic_pairing(cfg: CommandConfig) -> tuple[int, str]:
    n = cfg.dim
    if n is None or n < 1:
        raise UsageError("--dim must be a positive integer")
    table = generic_table(n)
    latex = cfg.fmt == "latex"
    cells = [[e.text(latex) for e in row] for row in table]
    notes = []
    if n == 4:
        rep = verifymod.dim4_corner_report()
        notes.append(
            f"<y^3,y^3>: inner constant {rep['computed_constant']}; "
            f"check V = C^4 gives epsilon(y^6) = {rep['computed_value_trivial']} "
            f"(constant {rep['printed_constant']} would give {rep['printed_value_trivial']})"
        )
    if cfg.fmt == "json":
        doc = {"n": n, "basis": [_basis_label(i) for i in range(n)], "gram": cells, "notes": notes}
        return 0, json.dumps(doc, sort_keys=True, ensure_ascii=False)
    if latex:
        return 0, _latex_table(n, cells, f"Pairing for $\\dim V={n}$", notes)
    body = _text_table(n, cells)
    return 0, body + "".join(f"\nnote: {s}" for s in notes)


def cmd_pairing(cfg: CommandConfig) -> tuple[int, str]:
    if cfg.dim is not None:
        if cfg.group or cfg.rep:
            raise UsageError("--dim (generic mode) excludes --group/--rep")
        return _generic_pairing(cfg)
    ctx = _context(cfg)
    G = gram_matrix(ctx)
    try:
        cert = verify_perfect(ctx)
        perfect, inverse = True, [[c.format() for c in row] for row in cert.inverse]
    except PerfectionError:
        perfect, inverse = False, None
    if cfg.fmt == "json":
        doc = {
            "group": ctx.group.name,
            "rep": ctx.v.format(),
            "n": ctx.n,
            "sigma": [s.format() for s in ctx.sigma],
            "gram": [[c.format() for c in row] for row in G],
            "perfect": perfect,
            "inverse": inverse,
        }
        return 0, json.dumps(doc, sort_keys=True)
    if cfg.fmt == "latex":
        cells = [[_latex_rep(c) for c in row] for row in G]
        return 0, _latex_table(ctx.n, cells, f"Pairing for ${ctx.group.name}$, $V={_latex_rep(ctx.v)}$")
    out = _text_table(ctx.n, [[c.format() for c in row] for row in G])
    out += f"\nperfect: {'yes' if perfect else 'no'}"
    if inverse is not None and cfg.verbosity:
        out += "\ninverse:\n" + _text_table(ctx.n, inverse)
    return 0, out


def cmd_fundamental(cfg: CommandConfig) -> tuple[int, str]:
    ctx = _context(cfg)
    fc = fundamental_class(ctx)
    pd1 = poincare_dual(ctx.one())
    values = [fc.evaluate(ctx.y_power(i)).format() for i in range(ctx.n)]
    doc = {
        "group": ctx.group.name,
        "rep": ctx.v.format(),
        "n": ctx.n,
        "coordinates": [c.format() for c in fc.coords],
        "values": values,
        "equals_poincare_dual_of_one": pd1 == fc,
    }
    if cfg.fmt == "json":
        return 0, json.dumps(doc, sort_keys=True)
    lines = [f"sum of beta_i = ({', '.join(doc['coordinates'])})"]
    lines += [f"<{_basis_label(i)}, [CP(V)]> = {v}" for i, v in enumerate(values)]
    lines.append(f"equals PD(1): {'yes' if doc['equals_poincare_dual_of_one'] else 'no'}")
    return 0, "\n".join(lines)


def cmd_flags(cfg: CommandConfig) -> tuple[int, str]:
    ctx = _context(cfg)
    try:
        fl = flagmod.enumerate_flags(ctx)
    except flagmod.NonAbelianError as exc:
        raise UsageError(str(exc)) from exc
    if cfg.list_flags:
        entries = []
        for f in fl:
            s = flagmod.flag_dual_sum(f)
            entries.append({"order": list(f.labels()), "dual_sum": [c.format() for c in s.coords]})
        if cfg.fmt == "json":
            return 0, json.dumps({"flag_count": len(fl), "flags": entries}, sort_keys=True)
        return 0, "\n".join(f"({', '.join(e['order'])}): ({', '.join(e['dual_sum'])})" for e in entries)
    report = flagmod.verify_flag_independence(ctx)
    status = 0 if report.passed else 1
    if cfg.fmt == "json":
        return status, json.dumps(report.to_json(), sort_keys=True)
    lines = [
        f"flags: {report.flag_count}",
        f"independent of flag: {'yes' if report.independent else 'no'}",
        f"sum coordinates: ({', '.join(c.format() for c in report.sum_coordinates)})",
        f"equals fundamental class: {'yes' if report.equals_fundamental else 'no'}",
    ]
    return status, "\n".join(lines)


def cmd_verify(cfg: CommandConfig) -> tuple[int, str]:
    if cfg.group or cfg.rep:
        g, v = _resolve(cfg)
        try:
            context_for(v)
        except (NotGenuineError, IntegralityError, ValueError) as exc:
            raise UsageError(str(exc)) from exc
        scope = [verifymod.Case(g, v)]
    else:
        scope = verifymod.default_scope(cfg.seed)
    name = cfg.suite or "all"
    if name == "all":
        names = list(verifymod.SUITES)
    elif name in verifymod.SUITES:
        names = [name]
    else:
        raise UsageError(f"unknown suite {name!r}; choose from all, {', '.join(verifymod.SUITES)}")
    lines = []
    ok = True
    for s in names:
        r = verifymod.run_suite(s, scope, seed=cfg.seed)
        ok = ok and r.passed
        lines.extend(f.to_line() for f in r.failures)
        summary = {"suite": s, "passed": r.passed, "cases_run": r.cases_run, "checks": sum(r.checks.values())}
        if r.notes:
            summary["notes"] = r.notes
        if cfg.verbosity:
            summary["elapsed"] = round(r.elapsed, 3)
        lines.append(json.dumps(summary, sort_keys=True, ensure_ascii=False))
    return (0 if ok else 1), "\n".join(lines)


def cmd_group(cfg: CommandConfig) -> tuple[int, str]:
    if not cfg.group:
        raise UsageError("--group is required")
    try:
        g = resolve_group(cfg.group)
    except (LookupError, CharacterTableError, ValueError, OSError) as exc:
        raise UsageError(str(exc)) from exc
    if cfg.fmt == "json":
        return 0, json.dumps(g.to_json(), sort_keys=True)
    lines = [f"{g.name}: order {g.order}, exponent {g.exponent}, {g.num_classes} classes"]
    head = ["", *[f"{c.label}({c.size})" for c in g.classes]]
    rows = [head] + [[lbl, *[str(v) for v in row]] for lbl, row in zip(g.labels, g.irreducibles)]
    widths = [max(len(r[i]) for r in rows) for i in range(len(head))]
    lines += ["  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip() for r in rows]
    return 0, "\n".join(lines)


COMMANDS = {
    "euler": cmd_euler,
    "sigma": cmd_sigma,
    "pairing": cmd_pairing,
    "fundamental": cmd_fundamental,
    "flags": cmd_flags,
    "verify": cmd_verify,
    "group": cmd_group,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", help="builtin (c<n>, d<n>, s3, s4, q8, products like c2xc3) or table file")
    common.add_argument("--rep", help='representation, e.g. "triv+sigma" or "chi1+2*chi3"')
    common.add_argument("--format", dest="fmt", choices=FORMATS, default="text")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--smax", type=int, default=None, help="number of lambda rows to precompute")
    common.add_argument("-v", "--verbose", dest="verbosity", action="count", default=0)

    p = argparse.ArgumentParser(prog="ktdual", description="Equivariant K-theory of projective spaces and its duality pairing.")
    sub = p.add_subparsers(dest="subcommand", required=True)
    sub.add_parser("euler", parents=[common], help="Euler class chi(V z)")
    sub.add_parser("sigma", parents=[common], help="y-coefficients sigma_j of the normalized Euler class")
    pp = sub.add_parser("pairing", parents=[common], help="Gram table of the pairing on {y^i}")
    pp.add_argument("--dim", type=int, help="generic symbolic table for dim V = N (no group)")
    sub.add_parser("fundamental", parents=[common], help="fundamental class coordinates and values")
    fp = sub.add_parser("flags", parents=[common], help="flag bases for abelian groups")
    mode = fp.add_mutually_exclusive_group()
    mode.add_argument("--list", dest="list_flags", action="store_true")
    mode.add_argument("--verify", dest="verify_flags", action="store_true")
    vp = sub.add_parser("verify", parents=[common], help="run invariant suites")
    vp.add_argument("--suite", help="suite name or 'all'")
    sub.add_parser("group", parents=[common], help="print a character table")
    return p


def run(cfg: CommandConfig) -> tuple[int, str]:
    return COMMANDS[cfg.subcommand](cfg)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = CommandConfig(**{k: v for k, v in vars(ns).items() if k in CommandConfig.__dataclass_fields__})
    try:
        status, text = run(cfg)
    except UsageError as exc:
        print(f"ktdual: error: {exc}", file=sys.stderr)
        return 2
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return status


if __name__ == "__main__":
    raise SystemExit(main())
