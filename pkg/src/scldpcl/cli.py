"""Command-line surface: analyze, transfer-sweep, design-search, markov, reproduce.

Inputs are protograph / channel JSON documents; outputs are CSV files with
a '#'-prefixed manifest header (or JSON with --format json).  Exit codes:
0 success, 1 validation failure, 2 numeric non-convergence, 3 reproduction
mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from datetime import datetime, timezone

import numpy as np

from . import __version__, pipelines
from .density_evolution import (
    BISECT_WIDTH,
    DeConfig,
    Direction,
    helper_transfer,
    q_of,
)
from .errors import NonConvergenceError, ProtographValidationError, ThresholdSearchError
from .markov import ChannelModel, gilbert_elliott, iid_channel
from .protograph import is_symmetric_sb, load_protograph
from .thresholds import sg_threshold, sb_thresholds

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_NONCONVERGENCE = 2
EXIT_MISMATCH = 3


@dataclass
class RunManifest:
    """Reproducibility header embedded in every output file."""

    command: str
    inputs: list = field(default_factory=list)
    overrides: dict = field(default_factory=dict)
    output: str = "-"
    emitted_at: str = field(
        default_factory=lambda: datetime.now(timezone.utc).isoformat(timespec="seconds")
    )
    version: str = __version__

    def header_lines(self):
        yield f"# command: {self.command}"
        yield f"# inputs: {', '.join(self.inputs) if self.inputs else '-'}"
        overrides = ", ".join(f"{k}={v}" for k, v in sorted(self.overrides.items()))
        yield f"# overrides: {overrides or '-'}"
        yield f"# output: {self.output}"
        yield f"# emitted-at: {self.emitted_at}"
        yield f"# version: {self.version}"

    def as_dict(self):
        return {
            "command": self.command,
            "inputs": self.inputs,
            "overrides": self.overrides,
            "output": self.output,
            "emitted_at": self.emitted_at,
            "version": self.version,
        }


def _fmt(value):
    if value is None:
        return ""
    if isinstance(value, float):
        if math.isinf(value):
            return "inf"
        return f"{value:.6f}"
    return str(value)


def write_csv(stream, manifest: RunManifest, columns, rows):
    for line in manifest.header_lines():
        stream.write(line + "\n")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])


def _emit(args, manifest, columns, rows, json_payload=None):
    """Write CSV (default) or JSON to -o / stdout."""
    if args.format == "json":
        payload = json_payload if json_payload is not None else {
            "columns": list(columns),
            "rows": [list(row) for row in rows],
        }
        payload = dict(payload)
        payload["_manifest"] = manifest.as_dict()
        text = json.dumps(payload, indent=2, default=_json_default) + "\n"
    else:
        buf = io.StringIO()
        write_csv(buf, manifest, columns, rows)
        text = buf.getvalue()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_default(value):
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (np.integer, np.floating)):
        return value.item()
    raise TypeError(f"not JSON serializable: {type(value)}")


def load_channel(path) -> ChannelModel:
    """Channel document: {"states": [...]} plus one of "p" / "alpha" / "iid"."""
    with open(path) as fh:
        doc = json.load(fh)
    if "states" not in doc:
        raise ValueError("channel document lacks 'states'")
    states = doc["states"]
    if "p" in doc:
        return ChannelModel(states, doc["p"])
    if "alpha" in doc:
        return gilbert_elliott(states, float(doc["alpha"]))
    if "iid" in doc:
        return iid_channel(states, doc["iid"])
    raise ValueError("channel document needs one of 'p', 'alpha', 'iid'")


def _config(args) -> DeConfig:
    return DeConfig(max_iters=args.max_iters)


def _overrides(args, *names):
    out = {}
    for name in names:
        value = getattr(args, name.replace("-", "_"), None)
        if value is not None:
            out[name] = value
    return out


# ---------------------------------------------------------------------------
# commands


def cmd_analyze(args):
    sb = load_protograph(args.protograph)
    cfg = _config(args)
    width = args.tol or BISECT_WIDTH
    th = sb_thresholds(sb, args.direction, cfg, width)
    witness = is_symmetric_sb(sb)
    report = {
        "l": sb.l,
        "r": sb.r,
        "t": sb.t,
        "direction": args.direction,
        "thresholds": th.as_dict(),
        "symmetric": witness is not None,
    }
    if witness is not None:
        report["witness"] = {
            "row_perm": list(witness.row_perm),
            "col_perm": list(witness.col_perm),
        }
        if sb.t > 0:
            report["sg_thresholds"] = {
                "non_termination_both": sg_threshold(sb, 1, 1, cfg, width),
                "termination_one_side": sg_threshold(sb, 0, 1, cfg, width),
                "termination_both": sg_threshold(sb, 0, 0, cfg, width),
            }
    if args.q_at:
        q_report = []
        for eps in args.q_at:
            entry = {"eps": eps, "q": q_of(sb, args.direction, eps, cfg)}
            if eps < th.eps1:
                entry["regime"] = "locally decodable (eps < eps1)"
            elif eps >= th.eps2:
                entry["regime"] = "no finite reduction length (eps >= eps2)"
            else:
                entry["regime"] = "error reduction (eps1 <= eps < eps2)"
            q_report.append(entry)
        report["q_at"] = q_report
    manifest = RunManifest(
        command="analyze",
        inputs=[args.protograph],
        overrides=_overrides(args, "tol", "max-iters", "direction"),
        output=args.output or "-",
    )
    if args.format == "json" or args.output:
        payload = dict(report)
        payload["_manifest"] = manifest.as_dict()
        text = json.dumps(payload, indent=2, default=_json_default) + "\n"
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(text)
        if args.format == "json" or not args.output:
            sys.stdout.write(text)
    if args.format != "json":
        _print_analyze_table(report)
    return EXIT_OK


def _print_analyze_table(report):
    rows = [
        ("local decoding succeeds below", report["thresholds"]["eps1_local"]),
        ("outgoing always below incoming below", report["thresholds"]["eps2_reduction"]),
        ("zero incoming preserved below", report["thresholds"]["eps3_zero_preserving"]),
        ("full side info decodes below", report["thresholds"]["eps4_full_side_info"]),
        ("regular ensemble threshold", report["thresholds"]["eps_regular"]),
    ]
    print(f"sub-block (l={report['l']}, r={report['r']}, t={report['t']}), "
          f"{report['direction']} helper")
    for label, value in rows:
        print(f"  {label:40s} {value:.6f}")
    print(f"  symmetric: {'yes' if report['symmetric'] else 'no'}")
    for key, value in report.get("sg_thresholds", {}).items():
        print(f"  semi-global {key:29s} {value:.6f}")
    for entry in report.get("q_at", []):
        q = entry["q"]
        q_text = "inf" if isinstance(q, float) and math.isinf(q) else str(q)
        print(f"  q({entry['eps']}) = {q_text}   [{entry['regime']}]")


def cmd_transfer_sweep(args):
    sb = load_protograph(args.protograph)
    cfg = _config(args)
    n = args.grid
    deltas = np.linspace(0.0, 1.0, n)
    eps_list = args.eps or [0.3547]
    if sb.t == 0:
        raise ValueError("transfer sweep needs at least one coupling row")
    rows = []
    for eps in eps_list:
        if sb.t == 1:
            for d in deltas:
                out = helper_transfer(sb, args.direction, eps, [d], cfg)
                rows.append((eps, d, out[0]))
        elif sb.t == 2:
            for d1 in deltas:
                for d2 in deltas:
                    out = helper_transfer(sb, args.direction, eps, [d1, d2], cfg)
                    rows.append((eps, d1, d2, out[0], out[1]))
        else:
            # no flat plotting layout beyond two coupling rows: sweep the
            # diagonal so the data is still usable
            for d in deltas:
                out = helper_transfer(sb, args.direction, eps, np.full(sb.t, d), cfg)
                rows.append((eps, *([d] * sb.t), *out))
    if sb.t == 1:
        columns = ("eps", "delta_1", "Delta_1")
    else:
        columns = ("eps", *(f"delta_{i+1}" for i in range(sb.t)),
                   *(f"Delta_{i+1}" for i in range(sb.t)))
    manifest = RunManifest(
        command="transfer-sweep",
        inputs=[args.protograph],
        overrides=_overrides(args, "max-iters", "grid", "direction"),
        output=args.output or "-",
    )
    _emit(args, manifest, columns, rows)
    return EXIT_OK


def cmd_design_search(args):
    cfg = _config(args)
    if args.t_max > 2:
        raise ValueError("design enumeration covers t <= 2")
    width = args.tol or BISECT_WIDTH
    rows = pipelines.design_rows(args.l, args.r, args.t_max, args.m, args.eps0, cfg, width=width)
    out_rows = [
        (
            i + 1,
            row.t,
            "-".join(str(x) for x in row.d_c) or "",
            row.j if row.j is not None else "",
            row.eps1,
            row.eps2,
            row.eps3,
            row.eps_g,
            row.q_eps0,
        )
        for i, row in enumerate(rows)
    ]
    columns = ("design", "t", "d_c", "j", "eps1", "eps2", "eps3", "eps_g", "q_eps0")
    manifest = RunManifest(
        command="design-search",
        inputs=[],
        overrides={"l": args.l, "r": args.r, "t_max": args.t_max, "m": args.m,
                   "eps0": args.eps0, **_overrides(args, "max-iters")},
        output=args.output or "-",
    )
    _emit(args, manifest, columns, out_rows)
    return EXIT_OK


def cmd_markov(args):
    sb = load_protograph(args.protograph)
    model = load_channel(args.channel)
    cfg = _config(args)
    d_values = list(range(args.d_min, args.d_max + 1, args.d_step))
    modes = ("one", "two")
    if args.one_sided and not args.two_sided:
        modes = ("one",)
    elif args.two_sided and not args.one_sided:
        modes = ("two",)
    if "two" in modes and any(d % 2 for d in d_values) and modes == ("two",):
        raise ValueError("two-sided decoding needs even d values")
    width = args.tol or BISECT_WIDTH
    rows, info = pipelines.markov_success_rows(sb, model, d_values, cfg, modes, width=width)
    columns = ("d", "p_one_sided_l", "p_one_sided_r", "p_two_sided")
    manifest = RunManifest(
        command="markov",
        inputs=[args.protograph, args.channel],
        overrides={"d": f"{args.d_min}:{args.d_max}:{args.d_step}",
                   **_overrides(args, "max-iters")},
        output=args.output or "-",
    )
    payload = {
        "q": info["q"],
        "a_sets": [list(s) for s in info["a_sets"]],
        "closed_form": info["closed_form"],
        "columns": list(columns),
        "rows": rows,
    }
    _emit(args, manifest, columns, rows, json_payload=payload)
    return EXIT_OK


def cmd_reproduce(args):
    cfg = _config(args)
    result = pipelines.reproduce(args.artifact, cfg)
    out_dir = args.out_dir or "."
    import os

    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, f"{args.artifact}.csv")
    manifest = RunManifest(
        command=f"reproduce {args.artifact}",
        inputs=[],
        overrides=_overrides(args, "max-iters"),
        output=path,
    )
    columns = ("curve", "key", "expected", "computed", "abs_deviation")
    rows = [
        (c.curve, c.key, c.expected, c.computed, c.deviation) for c in result.cells
    ]
    with open(path, "w") as fh:
        write_csv(fh, manifest, columns, rows)
    n_fail = len(result.failures)
    status = "PASS" if result.passed else "FAIL"
    print(
        f"{args.artifact}: {len(result.cells)} cells, max deviation "
        f"{result.max_deviation:.3e}, {n_fail} out of tolerance -> {status}"
    )
    return EXIT_OK if result.passed else EXIT_MISMATCH


# ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="scldpcl",
        description="Decoding thresholds and channel success bounds for "
                    "spatially coupled LDPC protographs with sub-block access",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_direction=False):
        p.add_argument("-o", "--output", default=None, help="output file")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--tol", type=float, default=None,
                       help="bisection interval width (default 1e-5)")
        p.add_argument("--max-iters", type=int, default=DeConfig().max_iters)
        if needs_direction:
            p.add_argument("--direction", choices=(Direction.LEFT_HELPER,
                                                   Direction.RIGHT_HELPER),
                           default=Direction.LEFT_HELPER)

    p = sub.add_parser("analyze", help="threshold report for one sub-block")
    p.add_argument("protograph")
    p.add_argument("--q-at", type=float, action="append", default=None,
                   help="report the reduction length q at this erasure rate")
    common(p, needs_direction=True)
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("transfer-sweep", help="erasure-transfer curve data")
    p.add_argument("protograph")
    p.add_argument("--eps", type=float, action="append", default=None)
    p.add_argument("--grid", type=int, default=101, help="delta grid points")
    common(p, needs_direction=True)
    p.set_defaults(fn=cmd_transfer_sweep)

    p = sub.add_parser("design-search", help="threshold table over symmetric designs")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--t-max", type=int, default=2)
    p.add_argument("--m", type=int, default=50, help="coupled copies for eps_g")
    p.add_argument("--eps0", type=float, required=True, help="erasure rate for the q column")
    common(p)
    p.set_defaults(fn=cmd_design_search)

    p = sub.add_parser("markov", help="success-probability bounds over a block-varying channel")
    p.add_argument("protograph")
    p.add_argument("channel")
    p.add_argument("--d-min", type=int, default=0)
    p.add_argument("--d-max", type=int, default=30)
    p.add_argument("--d-step", type=int, default=2)
    p.add_argument("--one-sided", action="store_true")
    p.add_argument("--two-sided", action="store_true")
    common(p)
    p.set_defaults(fn=cmd_markov)

    p = sub.add_parser("reproduce", help="regression against the published values")
    p.add_argument("artifact", choices=sorted(pipelines.REPRODUCIBLES))
    p.add_argument("--out-dir", default=None)
    common(p)
    p.set_defaults(fn=cmd_reproduce)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ProtographValidationError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (NonConvergenceError, ThresholdSearchError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
