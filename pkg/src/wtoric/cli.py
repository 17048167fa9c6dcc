"""Command line: ``wtoric run``, ``wtoric example``, ``wtoric selftest``."""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .pipeline import EXAMPLES, ConfigError, JobConfig, example, run, selftest


def _cmd_run(args):
    try:
        config = JobConfig.load(args.config)
    except (OSError, ConfigError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    report = run(config)
    text = report.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"{'ok' if report.ok else 'FAILED'}: report written to {args.out}")
    else:
        sys.stdout.write(text)
    for e in report.data["errors"]:
        print(f"error: {e}", file=sys.stderr)
    return report.exit_code


def _cmd_example(args):
    report, diff = example(args.name)
    for line in report.data["example"]["rendered"]:
        print(line)
    if diff:
        print("\ngolden mismatch:", file=sys.stderr)
        sys.stderr.write(diff)
    else:
        print("\ngolden: match")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report.to_json())
    return report.exit_code


def _cmd_selftest(args):
    cap = min(args.rank_cap if args.rank_cap is not None else 3, 3)
    ok, _ = selftest(rank_cap=cap, rank4=args.rank4)
    return 0 if ok else 1


def build_parser():
    ap = argparse.ArgumentParser(prog="wtoric", description=__doc__)
    ap.add_argument("--version", action="version", version=f"wtoric {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="run a JSON job config")
    r.add_argument("config")
    r.add_argument("--out", help="write the JSON report here instead of stdout")
    r.set_defaults(func=_cmd_run)

    e = sub.add_parser("example", help="run a worked example and diff against its golden")
    e.add_argument("name", choices=sorted(EXAMPLES))
    e.add_argument("--out", help="also write the JSON report here")
    e.set_defaults(func=_cmd_example)

    s = sub.add_parser("selftest", help="sweep the supported types of rank <= 3")
    s.add_argument("--rank-cap", type=int, default=None, help="only sweep types up to this rank")
    s.add_argument("--rank4", action="store_true", help="add the slow A4/B4 spot checks")
    s.set_defaults(func=_cmd_selftest)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
