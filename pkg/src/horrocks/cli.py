"""Command-line front end: ``horrocks {spectra,candidates,verify,tables}``.

Defaults can be overridden with HORROCKS_CHAR, HORROCKS_FORMAT, HORROCKS_L_RANGE
and HORROCKS_JOBS.  Exit codes: 0 ok/pass, 1 verification failed, 2 bad input,
3 inconclusive.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .candidates import Candidate, rho_bounds
from .cohomology import Spectrum
from .moduli import component_separation, dimension_table
from .spectra import enumerate_spectra, spectrum_label
from .symbolic.monad import (BACKUP_PRIME, DEFAULT_PRIME, MalformedMonad, MonadPresentation,
                             verify_monad)
from .tables import classify, classify_negative

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3
FORMATS = ("table", "csv", "json")
TABLES = ("spectra", "terms", "candidates", "dimensions")


class UsageError(Exception):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def parse_l_range(text: str) -> range:
    """``"-8..-1"`` (inclusive) to a range."""
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise UsageError(f"l-range must look like -8..-1, got {text!r}") from None
    if lo > hi:
        raise UsageError(f"empty l-range {text!r}")
    return range(lo, hi + 1)


@dataclass(frozen=True)
class RunConfig:
    field_char: int = DEFAULT_PRIME
    output_format: str = "table"
    l_range: range = range(-8, 0)
    jobs: int = 1

    def __post_init__(self):
        if not _is_prime(self.field_char) or self.field_char <= 3:
            raise UsageError(f"--char must be a prime > 3, got {self.field_char}")
        if self.output_format not in FORMATS:
            raise UsageError(f"--format must be one of {', '.join(FORMATS)}")
        if len(self.l_range) == 0:
            raise UsageError("l-range is empty")
        if self.jobs < 1:
            raise UsageError("--jobs must be positive")

    @property
    def backup_char(self) -> int:
        return BACKUP_PRIME if self.field_char != BACKUP_PRIME else DEFAULT_PRIME


def _config(args) -> RunConfig:
    env = os.environ
    char = args.char
    fmt = args.format or env.get("HORROCKS_FORMAT", "table")
    lr = args.l_range or env.get("HORROCKS_L_RANGE", "-8..-1")
    try:
        if args.char is None:
            char = int(env.get("HORROCKS_CHAR", DEFAULT_PRIME))
        jobs = args.jobs if args.jobs is not None else int(env.get("HORROCKS_JOBS", 1))
    except ValueError as exc:
        raise UsageError(f"bad environment override: {exc}") from None
    return RunConfig(char, fmt, parse_l_range(lr), jobs)


def _parse_spectrum(text: str) -> Spectrum:
    try:
        return Spectrum.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad spectrum {text!r}: {exc}") from None


# rendering

def _tuple(t) -> str:
    return "(" + ",".join(map(str, t)) + ")"


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines) + "\n"


def _render(header, rows, records, fmt: str) -> str:
    if fmt == "csv":
        return _csv(header, rows)
    if fmt == "json":
        return json.dumps(records, indent=2) + "\n"
    return _table(header, rows)


def render_spectra(c2: int, fmt: str) -> str:
    specs = enumerate_spectra(c2)
    rows = [[spectrum_label(s), str(s), s.notation()] for s in specs]
    recs = [{"label": spectrum_label(s), "mult": list(s.mult), "values": list(s.values)}
            for s in specs]
    return _render(["label", "mult", "spectrum"], rows, recs, fmt)


def terms_cell(spec: Spectrum) -> str:
    intervals, top = rho_bounds(spec)
    parts = [f"ρ({-spec.K - 1})={top}"]
    for i, (lo, hi) in sorted(intervals.items()):
        parts.append(f"ρ({-i - 1})∈{{{','.join(map(str, range(lo, hi + 1)))}}}")
    return ", ".join(parts)


def render_terms(c2: int, fmt: str) -> str:
    specs = enumerate_spectra(c2)
    rows = [[spectrum_label(s), terms_cell(s)] for s in specs]
    recs = []
    for s in specs:
        intervals, top = rho_bounds(s)
        recs.append({"label": spectrum_label(s), "top": {str(-s.K - 1): top},
                     "intervals": {str(-i - 1): [lo, hi] for i, (lo, hi) in sorted(intervals.items())}})
    return _render(["label", "generators"], rows, recs, fmt)


def _cand_row(c: Candidate) -> list[str]:
    b = "no solution" if c.shape is None else _tuple(c.shape.b)
    return [spectrum_label(c.spectrum), str(c.rho), _tuple(c.a), b, str(c.verdict)]


def render_candidates(cands: list[Candidate], fmt: str) -> str:
    rows = [_cand_row(c) for c in cands]
    recs = [dict(c.to_json(), label=spectrum_label(c.spectrum)) for c in cands]
    return _render(["spectrum", "rho", "a", "b", "verdict"], rows, recs, fmt)


def render_dimensions(c2: int, fmt: str) -> str:
    table = dimension_table(c2)
    header = ["spectrum", "b", "a", "w", "g", "s", "h", "dim"]
    rows = [[spectrum_label(s), _tuple(r.shape.b), _tuple(r.shape.a),
             r.w, r.g, r.s_dim, r.h, r.dim] for s, r in table]
    recs = [dict(zip(header, row)) for row in rows]
    return _render(header, rows, recs, fmt)


# commands

def cmd_spectra(args, cfg: RunConfig) -> int:
    try:
        sys.stdout.write(render_spectra(args.c2, cfg.output_format))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def cmd_candidates(args, cfg: RunConfig) -> int:
    try:
        cands = classify_negative(args.c2) if args.negative else classify(args.c2)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.spectrum:
        spec = _parse_spectrum(args.spectrum)
        cands = [c for c in cands if c.spectrum == spec]
    sys.stdout.write(render_candidates(cands, cfg.output_format))
    return EXIT_OK


def _verify_one(job) -> tuple[str, int, str]:
    path, spec_text, cfg = job
    try:
        pres = MonadPresentation.load(path)
    except MalformedMonad as exc:
        return path, EXIT_USAGE, f"{path}: malformed monad file: {exc}"
    spec = Spectrum.parse(spec_text) if spec_text else None
    rep = verify_monad(pres, spec, cfg.l_range, p=cfg.field_char, backup=cfg.backup_char)
    code = {"pass": EXIT_OK, "fail": EXIT_FAIL, "inconclusive": EXIT_INCONCLUSIVE}[rep.status]
    if cfg.output_format == "json":
        text = json.dumps(rep.to_json(), indent=2)
    elif cfg.output_format == "csv":
        text = _csv(["monad", "check", "status", "detail"],
                    [[rep.name, c.name, c.status, c.detail] for c in rep.checks]).rstrip("\n")
    else:
        text = rep.render()
    return path, code, text


_SEVERITY = {EXIT_OK: 0, EXIT_FAIL: 1, EXIT_INCONCLUSIVE: 2, EXIT_USAGE: 3}


def cmd_verify(args, cfg: RunConfig) -> int:
    if args.spectrum:
        _parse_spectrum(args.spectrum)
    jobs = [(f, args.spectrum, cfg) for f in args.files]
    if cfg.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(cfg.jobs, len(jobs))) as pool:
            results = list(pool.map(_verify_one, jobs))
    else:
        results = [_verify_one(j) for j in jobs]
    worst = EXIT_OK
    reports = []
    for _, code, text in results:
        if code == EXIT_USAGE:
            sys.stderr.write(text + "\n")
        elif cfg.output_format == "json":
            reports.append(json.loads(text))
        else:
            sys.stdout.write(text + "\n")
        if _SEVERITY[code] > _SEVERITY[worst]:
            worst = code
    if reports:
        sys.stdout.write(json.dumps(reports, indent=2) + "\n")
    return worst


def render_reference_table(name: str, fmt: str) -> str:
    if name == "spectra":
        return render_spectra(10, fmt)
    if name == "terms":
        return render_terms(10, fmt)
    if name == "candidates":
        return render_candidates(classify(10), fmt)
    if name == "dimensions":
        return render_dimensions(10, fmt)
    raise UsageError(f"unknown table {name!r}")


def cmd_tables(args, cfg: RunConfig) -> int:
    names = [args.which] if args.which else list(TABLES)
    fmt = cfg.output_format if cfg.output_format != "table" or not args.paper else "csv"
    rendered = {n: render_reference_table(n, fmt) for n in names}
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        ext = {"csv": "csv", "json": "json", "table": "txt"}[fmt]
        for n, text in rendered.items():
            (out / f"{n}.{ext}").write_text(text, encoding="utf-8")
    else:
        for i, (n, text) in enumerate(rendered.items()):
            if len(names) > 1:
                sys.stdout.write(("\n" if i else "") + f"# {n}\n")
            sys.stdout.write(text)
    if args.separation:
        sys.stdout.write("\n" + component_separation(10).render() + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None,
                        help="output format (env HORROCKS_FORMAT, default table)")
    common.add_argument("--char", type=int, default=None,
                        help="prime for Groebner work (env HORROCKS_CHAR, default 32003)")
    common.add_argument("--l-range", default=None,
                        help="twists for h1 series, e.g. --l-range=-8..-1 (env HORROCKS_L_RANGE)")
    common.add_argument("--jobs", type=int, default=None,
                        help="worker processes for batch verification (env HORROCKS_JOBS)")

    p = argparse.ArgumentParser(prog="horrocks", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectra", parents=[common], help="list possible spectra for c2")
    sp.add_argument("--c2", type=int, required=True)
    sp.set_defaults(func=cmd_spectra)

    cp = sub.add_parser("candidates", parents=[common], help="candidate monads with verdicts")
    cp.add_argument("--c2", type=int, required=True)
    cp.add_argument("--negative", action="store_true", help="negative monads instead of positive")
    cp.add_argument("--spectrum", help="restrict to one spectrum, multiplicities like 1,2,1,1")
    cp.set_defaults(func=cmd_candidates)

    vp = sub.add_parser("verify", parents=[common], help="verify explicit monad JSON files")
    vp.add_argument("files", nargs="+")
    vp.add_argument("--spectrum", help="claimed spectrum, multiplicities like 1,2,1,1")
    vp.set_defaults(func=cmd_verify)

    tp = sub.add_parser("tables", parents=[common], help="render the c2 = 10 tables")
    tp.add_argument("--paper", action="store_true", help="golden CSV renditions (default csv)")
    tp.add_argument("--which", choices=TABLES)
    tp.add_argument("--out", help="write one file per table into this directory")
    tp.add_argument("--separation", action="store_true", help="append the component separation report")
    tp.set_defaults(func=cmd_tables)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = _config(args)
        return args.func(args, cfg)
    except UsageError as exc:
        print(f"horrocks: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
