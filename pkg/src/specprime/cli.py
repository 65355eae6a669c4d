"""Batch front door.

    specprime run <job.json> [--bruteforce-cap N]
    specprime dot --space {spec,sprimes,xspace} <input.json> [-o FILE]
    specprime check (--all | --checks a,b,...) <input.json> [--bruteforce-cap N]

A job file holds {"inputs": [...], "checks": [...], "output": DIR,
"formats": [...]}; inputs may also be the string "corpus" for the built-in
corpus.  Formats: "json" (a JSON-lines stream plus one JSON file per input),
"dot" (Hasse diagrams), "png" (rendered Hasse figures).  Exit status: 0 all
checks passed, 1 input error, 2 check failure (witness files are written).

SPECPRIME_SEED fixes the randomized pair selection in the monotonicity check.
"""

import argparse
import json
import os
import re
import sys
from pathlib import Path

from .checks import ALL_CHECK_NAMES, CHECKS_BY_KIND
from .corpus import corpus_homs, corpus_posets, corpus_profiles, corpus_rings
from .dot import SPACES, export_dot
from .errors import InvariantViolation, SpecprimeError
from .serialize import parse_input

FORMATS = ("json", "dot", "png")


def _fail(message):
    print(f"specprime: {message}", file=sys.stderr)
    return 1


def _load_json(path):
    text = Path(path).read_text()
    return json.loads(text)


def _seed():
    try:
        return int(os.environ.get("SPECPRIME_SEED", "0"))
    except ValueError:
        return 0


def _slug(label):
    return re.sub(r"[^A-Za-z0-9._-]+", "_", label).strip("_") or "input"


def _check_kwargs(name, kind, args):
    kwargs = {}
    if kind == "ring" and name == "sprimes":
        kwargs["bruteforce_cap"] = args.bruteforce_cap
    if name in ("lattice", "monotonicity") or (kind == "poset" and name == "closures"):
        kwargs["seed"] = _seed()
    return kwargs


def _run_checks(kind, obj, label, check_names, args):
    table = CHECKS_BY_KIND[kind]
    records = []
    for name in check_names:
        if name not in table:
            continue
        try:
            payload = table[name](obj, **_check_kwargs(name, kind, args))
        except InvariantViolation as exc:
            payload = {"ok": False, "invariant_violation": str(exc),
                       "witness": exc.witness}
        except SpecprimeError as exc:
            payload = {"ok": False, "error": f"{type(exc).__name__}: {exc}"}
        ok = bool(payload.pop("ok"))
        records.append({"input": label, "kind": kind, "check": name,
                        "ok": ok, "detail": payload})
    return records


def _corpus_entries():
    entries = [("ring", r, r.label) for r in corpus_rings()]
    entries += [("poset", p, f"poset-{i}-{p.n}pt") for i, p in enumerate(corpus_posets())]
    entries += [("hom", h, label) for label, h in corpus_homs()]
    entries += [("profile", pr, f"Cl={pr.label()}") for pr in corpus_profiles()]
    return entries


def cmd_run(args):
    try:
        job = _load_json(args.job)
    except OSError as exc:
        return _fail(f"cannot read job file: {exc}")
    except json.JSONDecodeError as exc:
        return _fail(f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}")
    if not isinstance(job, dict):
        return _fail("job file must hold a JSON object")

    raw_inputs = job.get("inputs", [])
    check_names = job.get("checks") or ALL_CHECK_NAMES
    unknown = [c for c in check_names if c not in ALL_CHECK_NAMES]
    if unknown:
        return _fail(f"unknown checks: {', '.join(unknown)}")
    formats = job.get("formats", ["json"])
    bad = [f for f in formats if f not in FORMATS]
    if bad:
        return _fail(f"unknown formats: {', '.join(bad)}; expected subset of {FORMATS}")

    if raw_inputs == "corpus":
        entries = _corpus_entries()
    else:
        if not isinstance(raw_inputs, list):
            return _fail("'inputs' must be a list of objects or the string \"corpus\"")
        entries = []
        for obj in raw_inputs:
            try:
                entries.append(parse_input(obj))
            except SpecprimeError as exc:
                return _fail(f"bad input {obj!r}: {exc}")
    if not entries:
        return 0  # nothing to do, no artifacts

    out_dir = Path(job.get("output", args.output or "specprime-out"))
    out_dir.mkdir(parents=True, exist_ok=True)

    all_records = []
    failures = []
    stream_path = out_dir / "reports.jsonl"
    with stream_path.open("w") as stream:
        for pos, (kind, obj, label) in enumerate(entries):
            records = _run_checks(kind, obj, label, check_names, args)
            all_records.extend(records)
            stem = f"input-{pos:03d}-{_slug(label)}"
            if "json" in formats:
                with (out_dir / f"{stem}.json").open("w") as fh:
                    json.dump({"input": label, "kind": kind,
                               "reports": records}, fh, indent=2)
                    fh.write("\n")
            for rec in records:
                stream.write(json.dumps(rec) + "\n")
                if not rec["ok"]:
                    failures.append(rec)
                    witness = out_dir / f"{stem}.{rec['check']}.witness.json"
                    with witness.open("w") as fh:
                        json.dump(rec, fh, indent=2)
                        fh.write("\n")
            if "dot" in formats:
                if kind == "ring":
                    for space in SPACES:
                        (out_dir / f"{stem}.{space}.dot").write_text(
                            export_dot(space, obj))
                elif kind == "poset":
                    (out_dir / f"{stem}.xspace.dot").write_text(
                        export_dot("xspace", obj))
            if "png" in formats and kind == "ring":
                from .figures import render_ring_spaces
                render_ring_spaces(obj, out_dir, stem)

    passed = len(all_records) - len(failures)
    print(f"{passed}/{len(all_records)} checks passed; reports in {out_dir}")
    return 2 if failures else 0


def cmd_dot(args):
    try:
        obj = _load_json(args.input)
    except OSError as exc:
        return _fail(f"cannot read input file: {exc}")
    except json.JSONDecodeError as exc:
        return _fail(f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}")
    try:
        kind, built, _ = parse_input(obj)
        if kind not in ("ring", "poset"):
            return _fail(f"dot export needs a ring or poset input, got {kind}")
        text = export_dot(args.space, built)
    except SpecprimeError as exc:
        return _fail(str(exc))
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_check(args):
    try:
        obj = _load_json(args.input)
    except OSError as exc:
        return _fail(f"cannot read input file: {exc}")
    except json.JSONDecodeError as exc:
        return _fail(f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}")
    if args.all:
        names = ALL_CHECK_NAMES
    else:
        names = [c.strip() for c in (args.checks or "").split(",") if c.strip()]
        unknown = [c for c in names if c not in ALL_CHECK_NAMES]
        if unknown:
            return _fail(f"unknown checks: {', '.join(unknown)}")
        if not names:
            return _fail("nothing to do: pass --all or --checks")
    try:
        kind, built, label = parse_input(obj)
    except SpecprimeError as exc:
        return _fail(f"bad input: {exc}")
    records = _run_checks(kind, built, label, names, args)
    bad = False
    for rec in records:
        status = "PASS" if rec["ok"] else "FAIL"
        bad = bad or not rec["ok"]
        print(f"{status} {rec['check']} [{label}]")
    return 2 if bad else 0


def build_parser():
    parser = argparse.ArgumentParser(prog="specprime",
                                     description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a batch job file")
    p_run.add_argument("job", help="path to the job JSON")
    p_run.add_argument("--bruteforce-cap", type=int, default=16,
                       help="subset-scan cap for the semigroup-prime oracle")
    p_run.add_argument("--output", default=None,
                       help="output directory when the job does not name one")
    p_run.set_defaults(fn=cmd_run)

    p_dot = sub.add_parser("dot", help="emit a Hasse diagram in DOT form")
    p_dot.add_argument("--space", required=True, choices=SPACES)
    p_dot.add_argument("input", help="ring (or poset, for xspace) JSON file")
    p_dot.add_argument("-o", "--output", default=None)
    p_dot.set_defaults(fn=cmd_dot)

    p_check = sub.add_parser("check", help="run checks on one input and print verdicts")
    p_check.add_argument("input", help="input JSON file")
    p_check.add_argument("--all", action="store_true", help="run every applicable check")
    p_check.add_argument("--checks", default=None, help="comma-separated check names")
    p_check.add_argument("--bruteforce-cap", type=int, default=16)
    p_check.set_defaults(fn=cmd_check)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
