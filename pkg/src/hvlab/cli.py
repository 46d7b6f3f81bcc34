"""Command-line front end.

Every command builds an envelope ``{"command", "payload", "verification"}``
and prints it as aligned text, JSON or CSV.  Exit codes: 0 success, 1 usage
error, 2 domain error, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from . import borel, checks, engine, hseq, liaison

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_MISMATCH = 0, 1, 2, 3

SCHEMA_PATH = Path(__file__).with_name("schemas") / "envelope.schema.json"


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# text forms of the domain objects


def fmt_h(h) -> str:
    return ",".join(map(str, h)) if h else "0"


def parse_h(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()[]")
    if text in ("", "0"):
        return ()
    try:
        return hseq.hseq(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def parse_ci(text: str) -> liaison.CIType:
    h = parse_h(text)
    try:
        return liaison.CIType(h)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def parse_pair(text: str) -> tuple[int, int]:
    h = parse_h(text)
    if len(h) != 2:
        raise argparse.ArgumentTypeError(f"expected two integers a,b, got {text!r}")
    return h


_LINEAR = re.compile(r"^([+-]?\d*)\*?t(?:([+-]\d+))?$")


def parse_poly(text: str) -> hseq.IntPoly:
    """``A*t+B`` (also ``3t+1``, ``t``, ``-2``) or ``bin:c0,c1,...``."""
    s = re.sub(r"\s+", "", text)
    if s.startswith("bin:"):
        try:
            return hseq.IntPoly(tuple(int(x) for x in s[4:].split(",") if x))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad binomial coefficients in {text!r}") from None
    if re.fullmatch(r"[+-]?\d+", s):
        return hseq.IntPoly.linear(0, int(s))
    m = _LINEAR.match(s)
    if not m:
        raise argparse.ArgumentTypeError(f"cannot parse polynomial {text!r}; use A*t+B or bin:c0,c1,...")
    a = m.group(1)
    slope = int(a + "1") if a in ("", "+", "-") else int(a)
    return hseq.IntPoly.linear(slope, int(m.group(2) or 0))


def ideal_text(ideal: borel.MonIdeal) -> str:
    return str(ideal)


# ---------------------------------------------------------------------------
# envelope and output


@dataclass
class Envelope:
    command: str
    payload: dict
    verification: dict | None = None

    def as_dict(self) -> dict:
        return {"command": self.command, "payload": self.payload, "verification": self.verification}


def table(columns: list[str], rows: list[list]) -> dict:
    return {"columns": columns, "rows": [[_plain(c) for c in row] for row in rows]}


def _plain(value):
    if isinstance(value, (list, tuple)):
        return " ".join(f"({fmt_h(v)})" if isinstance(v, tuple) else str(v) for v in value) \
            if value and isinstance(value[0], tuple) else fmt_h(value)
    return value


def render(env: Envelope, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(env.as_dict(), sort_keys=True, indent=2)
    if fmt == "csv":
        return _render_csv(env)
    return _render_pretty(env)


def _render_csv(env: Envelope) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    tab = env.payload.get("table")
    if tab:
        writer.writerow(tab["columns"])
        writer.writerows([_scalar(c) for c in row] for row in tab["rows"])
    else:
        writer.writerow(["key", "value"])
        for key in sorted(env.payload):
            writer.writerow([key, _scalar(env.payload[key])])
    return buf.getvalue().rstrip("\n")


def _scalar(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    if isinstance(value, bool):
        return "true" if value else "false"
    return "" if value is None else str(value)


def _render_pretty(env: Envelope) -> str:
    lines = []
    for key in sorted(env.payload):
        if key == "table":
            continue
        lines.append(f"{key}: {_scalar(env.payload[key])}")
    tab = env.payload.get("table")
    if tab:
        cells = [tab["columns"]] + [[_scalar(c) for c in row] for row in tab["rows"]]
        widths = [max(len(str(row[j])) for row in cells) for j in range(len(tab["columns"]))]
        for row in cells:
            lines.append("  ".join(str(c).ljust(w) for c, w in zip(row, widths)).rstrip())
    if env.verification is not None:
        status = "PASS" if env.verification["passed"] else "FAIL"
        lines.append(f"verification: {status}")
        for item in env.verification.get("mismatches", []):
            lines.append(f"  mismatch: {_scalar(item)}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# commands


def cmd_admissible(a) -> Envelope:
    v = hseq.check_osequence(a.h)
    violation = None
    if v.first_violation:
        t, value, bound = v.first_violation
        violation = {"t": t, "value": value, "bound": bound}
    return Envelope("admissible", {"h": fmt_h(a.h), "positive": v.positive, "admissible": v.admissible,
                                   "violation": violation})


def cmd_macaulay(a) -> Envelope:
    if a.a < 0 or a.d < 1:
        raise ValueError("macaulay needs a >= 0 and d >= 1")
    bound, tops = hseq.macaulay_bound(a.a, a.d)
    return Envelope("macaulay", {"a": a.a, "d": a.d, "bound": bound, "expansion": tops})


def cmd_hf(a) -> Envelope:
    data = hseq.hilbert_from_h(a.h, a.dim)
    return Envelope("hf", {"h": fmt_h(a.h), "dim": a.dim, "values": data.values(a.terms),
                           "polynomial": str(data.tail), "rho": data.rho})


def cmd_genus(a) -> Envelope:
    return Envelope("genus", {"h": fmt_h(a.h), "genus": hseq.genus_from_h(a.h)})


def cmd_ci(a) -> Envelope:
    ci = a.type
    return Envelope("ci", {"type": str(ci), "hvector": fmt_h(liaison.ci_hvector(ci)),
                           "degree": ci.degree, "reg": ci.reg})


def cmd_link(a) -> Envelope:
    res = liaison.dgo_link(a.h, a.ci)
    return Envelope("link", {"h": fmt_h(a.h), "ci": str(a.ci), "linked": fmt_h(res.h_linked),
                             "degree": res.deg_linked, "reg_Y": res.reg_Y, "alpha_bar": res.alpha_bar,
                             "alpha_bar_prime": res.alpha_bar_prime})


def cmd_bdl(a) -> Envelope:
    x, y = a.type
    return Envelope("bdl", {"h": fmt_h(a.h), "type": f"{x},{y}",
                            "result": fmt_h(liaison.basic_double_link(a.h, x, y))})


def cmd_chain(a) -> Envelope:
    try:
        text = Path(a.script).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read chain script: {exc}") from None
    try:
        steps = liaison.parse_chain_script(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    trace = liaison.run_chain(a.h0, a.g0, steps, a.n)
    rows = [[i, s.kind, fmt_h(s.params) if s.params else "", fmt_h(s.h), s.degree, s.genus,
             hseq.check_osequence(s.h).positive, hseq.check_osequence(s.h).admissible]
            for i, s in enumerate(trace.steps)]
    cols = ["step", "kind", "params", "h", "degree", "genus", "positive", "admissible"]
    return Envelope("chain", {"final": fmt_h(trace.last.h), "genus": trace.last.genus,
                              "table": table(cols, rows)})


def cmd_tk(a) -> Envelope:
    return Envelope("tk", {"hz": fmt_h(a.hz), "ci": str(a.ci),
                           "t_k": liaison.compute_tk(a.hz, liaison.ci_hvector(a.ci))})


def cmd_points(a) -> Envelope:
    rows = [[fmt_h(h), hseq.is_degenerate_section(h)] for h in hseq.point_hvectors(a.deg, a.ambient)]
    return Envelope("points", {"degree": a.deg, "ambient": a.ambient,
                               "table": table(["h", "degenerate"], rows)})


def _config(a) -> engine.ScenarioConfig:
    return engine.ScenarioConfig(a.dim, a.codim, a.ci, a.defect, a.zprime, a.profile)


def _candidate_rows(reports) -> dict:
    cols = ["h_Zprime", "h_Z", "t_k", "h_X", "positive", "admissible", "equals_section",
            "D_t", "t", "g_linked", "classification", "rule"]
    rows = []
    for r in reports:
        g = r.genus_data
        rows.append([fmt_h(r.h_Zprime), fmt_h(r.h_Z), r.t_k, fmt_h(r.h_X), r.positive, r.admissible,
                     r.equals_section, g.d_t if g else None, g.t if g else None,
                     g.g_linked if g else None, r.classification, r.rule_citation])
    return table(cols, rows)


def cmd_candidates(a) -> Envelope:
    cfg = _config(a)
    reports = engine.enumerate_candidates(cfg)
    return Envelope("candidates", {"ci": str(cfg.ci), "k": cfg.k, "c": cfg.c, "defect": cfg.defect,
                                   "profile": cfg.profile, "count": len(reports),
                                   "table": _candidate_rows(reports)})


def cmd_classify(a) -> Envelope:
    cfg = _config(a)
    summary = engine.classify(cfg)
    rows = [[fmt_h(s.h_Zprime), s.linkable, s.verdict, s.route,
             ";".join(f"{k}={v}" for k, v in sorted(s.counts.items()))] for s in summary.sections]
    return Envelope("classify", {"ci": str(cfg.ci), "k": cfg.k, "c": cfg.c, "defect": cfg.defect,
                                 "verdict": summary.verdict,
                                 "table": table(["h_Zprime", "linkable", "verdict", "route", "counts"], rows)})


def _ideal(a) -> borel.MonIdeal:
    try:
        return borel.MonIdeal.parse(a.ideal, a.vars)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_borel_check(a) -> Envelope:
    ideal = _ideal(a)
    cert = borel.is_borel(ideal)
    witness = None
    if cert.witness:
        g, j, i = cert.witness
        witness = {"generator": borel.format_monomial(g), "from": f"x{j}", "to": f"x{i}"}
    return Envelope("borel-check", {"ideal": ideal_text(ideal), "borel": cert.is_borel, "witness": witness})


def cmd_borel_hf(a) -> Envelope:
    ideal = _ideal(a)
    data = borel.quotient_hilbert(ideal)
    return Envelope("borel-hf", {"ideal": ideal_text(ideal), "numerator": list(borel.hilbert_numerator(ideal)),
                                 "values": data.values(a.terms), "polynomial": str(data.tail),
                                 "rho": data.rho})


def cmd_borel_sat(a) -> Envelope:
    ideal = _ideal(a)
    return Envelope("borel-sat", {"ideal": ideal_text(ideal), "saturation": ideal_text(borel.saturate(ideal))})


def cmd_borel_section(a) -> Envelope:
    ideal = _ideal(a)
    sec = borel.restrict_section(ideal)
    data = borel.quotient_hilbert(sec)
    return Envelope("borel-section", {"ideal": ideal_text(ideal), "section": ideal_text(sec),
                                      "section_polynomial": str(data.tail),
                                      "section_hvector": fmt_h(data.hvector())})


def cmd_borel_enum(a) -> Envelope:
    ideals = borel.enumerate_borel(a.vars, a.hp, a.max_gotzmann)
    rows = [[ideal_text(i), borel.borel_regularity(i)] for i in ideals]
    return Envelope("borel-enum", {"vars": a.vars, "hp": str(a.hp), "gotzmann": borel.gotzmann_number(a.hp),
                                   "count": len(ideals), "table": table(["ideal", "reg"], rows)})


def cmd_davis(a) -> Envelope:
    p = engine.davis_params(a.defect)
    return Envelope("davis", {"defect": a.defect, "e": p.e, "f": p.f, "type": str(p.dtype),
                              "section": fmt_h(p.section), "consistent": p.consistent})


def cmd_prop26(a) -> Envelope:
    rec = engine.prop26_chain(a.defect)
    rows = [[i, fmt_h(s.params) if s.params else "", fmt_h(s.h), s.degree, s.genus]
            for i, s in enumerate(rec.trace.steps)]
    payload = {"defect": a.defect, "xprime_section": fmt_h(rec.xprime.h), "final_degree": rec.final_degree,
               "final_genus": rec.final_genus, "final_section": fmt_h(rec.trace.last.h),
               "listed_hvector": fmt_h(rec.listed_hvector) if rec.listed_hvector else None,
               "davis_type": str(rec.davis.dtype) if rec.davis else None, "davis_match": rec.davis_match,
               "table": table(["step", "link", "section", "degree", "genus"], rows)}
    failed = [k for k, ok in rec.checks.items() if not ok]
    return Envelope("prop26", payload, {"passed": not failed, "checks": rec.checks, "mismatches": failed})


def cmd_table(a) -> Envelope:
    t = engine.paper_table(a.name)
    rows = t.regenerated
    cols = t.columns
    if a.verify:
        rows = [r + [all(m)] for r, m in zip(t.regenerated, t.matches)]
        cols = cols + ["match"]
    payload = {"name": t.name, "notes": t.notes, "table": table(cols, rows)}
    verification = None
    if a.verify:
        mism = [{"row": i, "column": c, "regenerated": _plain(r), "expected": _plain(e)}
                for i, c, r, e in t.mismatches()]
        verification = {"passed": t.all_match, "mismatches": mism}
    return Envelope("table", payload, verification)


def cmd_property(a) -> Envelope:
    fn = checks.CHECKS[a.name]
    res = fn(a.seed, a.count) if a.count else fn(a.seed)
    return Envelope("property", {"name": res.name, "seed": res.seed, "trials": res.trials},
                    {"passed": res.passed, "mismatches": res.failures})


# ---------------------------------------------------------------------------
# parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hvlab", description="h-vectors, liaison and Borel-fixed ideals")
    parser.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, fn: Callable, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=fn)
        p.add_argument("--format", choices=("pretty", "json", "csv"), default=argparse.SUPPRESS)
        return p

    p = add("admissible", cmd_admissible, "Macaulay admissibility and positivity")
    p.add_argument("h", type=parse_h)
    p = add("macaulay", cmd_macaulay, "the bound a^<d>")
    p.add_argument("a", type=int)
    p.add_argument("d", type=int)
    p = add("hf", cmd_hf, "Hilbert function from an h-vector")
    p.add_argument("--h", type=parse_h, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--terms", type=int, default=10)
    p = add("genus", cmd_genus, "arithmetic genus of a curve")
    p.add_argument("--h", type=parse_h, required=True)
    p = add("ci", cmd_ci, "complete intersection h-vector")
    p.add_argument("--type", type=parse_ci, required=True)
    p = add("link", cmd_link, "link an h-vector in a complete intersection")
    p.add_argument("--ci", type=parse_ci, required=True)
    p.add_argument("--h", type=parse_h, required=True)
    p = add("bdl", cmd_bdl, "basic double link")
    p.add_argument("--type", type=parse_pair, required=True)
    p.add_argument("--h", type=parse_h, required=True)
    p = add("chain", cmd_chain, "run a script of links and basic double links")
    p.add_argument("--script", required=True)
    p.add_argument("--h0", type=parse_h, default=(1,))
    p.add_argument("--g0", type=int, default=0)
    p.add_argument("--n", type=int, default=3)
    p = add("tk", cmd_tk, "first index where h_Z drops below h_Y")
    p.add_argument("--hz", type=parse_h, required=True)
    p.add_argument("--ci", type=parse_ci, required=True)
    p = add("points", cmd_points, "h-vectors of zero-dimensional schemes")
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--ambient", type=int, required=True)
    for name, fn, text in (("candidates", cmd_candidates, "enumerate candidate h-vectors"),
                           ("classify", cmd_classify, "classify a scenario")):
        p = add(name, fn, text)
        p.add_argument("--dim", type=int, required=True)
        p.add_argument("--codim", type=int, required=True)
        p.add_argument("--ci", type=parse_ci, required=True)
        p.add_argument("--defect", type=int, required=True)
        p.add_argument("--zprime", type=parse_h)
        p.add_argument("--profile", choices=("curve", "general"))
    for name, fn, text in (("borel-check", cmd_borel_check, "Borel-fixedness with a witness"),
                           ("borel-hf", cmd_borel_hf, "Hilbert function of S/I"),
                           ("borel-sat", cmd_borel_sat, "saturation of a Borel ideal"),
                           ("borel-section", cmd_borel_section, "general hyperplane section")):
        p = add(name, fn, text)
        p.add_argument("--vars", type=int, required=True)
        p.add_argument("--ideal", required=True)
        if name == "borel-hf":
            p.add_argument("--terms", type=int, default=10)
    p = add("borel-enum", cmd_borel_enum, "saturated Borel ideals with a Hilbert polynomial")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--hp", type=parse_poly, required=True)
    p.add_argument("--max-gotzmann", type=int, default=8)
    p = add("davis", cmd_davis, "Davis curve parameters")
    p.add_argument("--defect", type=int, required=True)
    p = add("prop26", cmd_prop26, "liaison chain from the Veronese surface")
    p.add_argument("--defect", type=int, required=True)
    p = add("table", cmd_table, "regenerate a printed table")
    p.add_argument("--name", choices=engine.TABLE_NAMES, required=True)
    p.add_argument("--verify", action="store_true")
    p = add("property", cmd_property, "seeded randomized consistency check")
    p.add_argument("--name", choices=sorted(checks.CHECKS), required=True)
    p.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)
    p.add_argument("--count", type=int)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        env = args.func(args)
    except UsageError as exc:
        print(f"hvlab: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, RuntimeError) as exc:
        print(f"hvlab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(render(env, args.format))
    if env.verification is not None and not env.verification["passed"]:
        return EXIT_MISMATCH
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
