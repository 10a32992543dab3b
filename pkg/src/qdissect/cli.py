"""Command-line front end.

Thin adapters over the library: expand named series, verify identity
catalog entries, run the theorem suite, emit rank/crank tables, and
sweep custom congruence specs.  All output is machine-readable; big
integers serialize as decimal strings in JSON so 53-bit consumers
cannot truncate them.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 internal error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Optional

from . import combinatorics as comb
from . import theta
from . import verification

ENV_PRECISION = "QDISSECT_PRECISION"

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _default_precision() -> int:
    value = os.environ.get(ENV_PRECISION)
    if value is None:
        return verification.DEFAULT_PRECISION
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"invalid {ENV_PRECISION}: {value!r}")


def _write(text: str, output: Optional[str]):
    if output is None or output == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(output, "w") as handle:
            handle.write(text)


def _series_param(args) -> Optional[int]:
    name = args.series
    if name == "f":
        if args.k is None:
            raise ValueError("series 'f' requires --k")
        return args.k
    if name in ("w", "c"):
        if args.t is None:
            raise ValueError(f"series {name!r} requires --t")
        return args.t
    return None


_SERIES_ALIASES = {"w_t": "w", "c_t": "c", "phi-neg": "phi_neg", "f_k": "f"}


def cmd_expand(args) -> int:
    name = _SERIES_ALIASES.get(args.series, args.series)
    args.series = name
    param = _series_param(args)
    series = theta.build(name, args.precision, param)
    if args.format == "json":
        payload = {
            "series": name,
            "parameter": param,
            "precision": args.precision,
            "coefficients": series.to_decimal_strings(),
        }
        _write(json.dumps(payload, indent=2), args.output)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["n", "coefficient"])
        for n, c in enumerate(series.coeffs):
            writer.writerow([n, c])
        _write(buf.getvalue(), args.output)
    else:
        lines = [f"{n}: {c}" for n, c in enumerate(series.coeffs)]
        _write("\n".join(lines), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.list:
        _write(json.dumps(theta.catalog_summaries(), indent=2), args.output)
        return EXIT_OK
    entries = theta.catalog()
    if args.id:
        entries = [theta.catalog_entry(args.id)]
    failed = False
    rows = []
    for entry in entries:
        report = theta.verify_entry(entry, args.precision)
        failed = failed or report.status != "pass"
        rows.append({
            "id": report.id,
            "status": report.status,
            "precision": report.precision,
            "mismatch_index": report.mismatch_index,
            "millis": round(report.millis, 3),
        })
    if args.format == "json":
        _write(json.dumps(rows, indent=2), args.output)
    else:
        _write("\n".join(f"{r['id']}: {r['status']} (N={r['precision']})" for r in rows),
               args.output)
    return EXIT_VERIFICATION_FAILED if failed else EXIT_OK


def cmd_suite(args) -> int:
    reports = verification.run_suite(args.precision, name_filter=args.filter)
    payload = [r.to_dict() for r in reports]
    if args.format == "plain":
        lines = [f"{r.id}: {r.status}" for r in reports]
        _write("\n".join(lines), args.output)
    else:
        _write(json.dumps(payload, indent=2), args.output)
    return EXIT_VERIFICATION_FAILED if verification.suite_failed(reports) else EXIT_OK


def _table(args, family: str) -> int:
    t = args.t if family == "V" else None
    vectors = comb.enumerate_vectors(family, t, args.n, allow_large=args.allow_large)
    modulus = args.modulus
    dist = {}
    for v in vectors:
        dist[v.statistic] = dist.get(v.statistic, 0) + v.weight
    summary = [
        sum(c for m, c in dist.items() if m % modulus == k) for k in range(modulus)
    ]
    if args.format == "json":
        payload = {
            "family": family,
            "t": t if family == "V" else 2,
            "n": args.n,
            "vectors": [
                {
                    "components": v.render_components(),
                    "weight": v.weight,
                    "statistic": v.statistic,
                }
                for v in vectors
            ],
            "residue_classes": {str(k): str(c) for k, c in enumerate(summary)},
            "total": str(sum(dist.values())),
        }
        _write(json.dumps(payload, indent=2), args.output)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["family", "t", "n", "components", "weight", "statistic"])
        for v in vectors:
            writer.writerow([family, t if family == "V" else 2, args.n,
                             v.render_components(), v.weight, v.statistic])
        writer.writerow([])
        writer.writerow(["residue", "weighted_count"])
        for k, c in enumerate(summary):
            writer.writerow([k, c])
        writer.writerow(["total", sum(dist.values())])
        _write(buf.getvalue(), args.output)
    return EXIT_OK


def cmd_ranktable(args) -> int:
    if args.family == "V" and args.t is None:
        raise ValueError("family V requires --t")
    return _table(args, args.family)


def cmd_cranktable(args) -> int:
    args.family = "W2"
    args.t = None
    return _table(args, "W2")


def cmd_sweep(args) -> int:
    name = _SERIES_ALIASES.get(args.series, args.series)
    args.series = name
    param = _series_param(args)
    spec = verification.CongruenceSpec(
        "sweep", name, param, args.a, args.b,
        args.mod if args.mod else None, args.nmax,
    )
    report = verification.check_congruence(spec, args.precision)
    _write(json.dumps(report.to_dict(), indent=2), args.output)
    if report.status == "fail":
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdissect",
        description="Exact q-series and colored-partition congruence toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, precision_default=None):
        p.add_argument("--precision", type=int,
                       default=precision_default or _default_precision())
        p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
        p.add_argument("--output", default=None, help="file path or '-' for stdout")

    p = sub.add_parser("expand", help="expand a named series")
    p.add_argument("--series", required=True, choices=tuple(
        sorted(set(theta.SERIES_NAMES) | set(_SERIES_ALIASES))))
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    common(p, precision_default=32)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="check identity catalog entries")
    p.add_argument("--list", action="store_true", help="list entries as JSON")
    p.add_argument("--id", default=None)
    p.add_argument("--precision", type=int, default=None)
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("suite", help="run the full theorem suite")
    p.add_argument("--filter", default=None, help="substring filter on item ids")
    p.add_argument("--precision", type=int, default=_default_precision())
    p.add_argument("--format", choices=("plain", "json"), default="json")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("ranktable", help="enumerate V_t (or W2) with statistics")
    p.add_argument("--family", choices=("V", "W2"), default="V")
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--modulus", type=int, default=5)
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_ranktable)

    p = sub.add_parser("cranktable", help="enumerate W2 with the vector crank")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--modulus", type=int, default=7)
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_cranktable)

    p = sub.add_parser("sweep", help="check a custom congruence spec")
    p.add_argument("--series", required=True)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--a", type=int, required=True, help="progression step")
    p.add_argument("--b", type=int, required=True, help="progression offset")
    p.add_argument("--mod", type=int, default=None,
                   help="modulus; omit to demand exact zeros")
    p.add_argument("--nmax", type=int, default=100)
    p.add_argument("--precision", type=int, default=_default_precision())
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit:
        raise
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
