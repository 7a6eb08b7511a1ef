"""Command-line interface.

Exit codes: 0 success, 2 validation or parse failure, 3 total conflict
(either rule degenerate), 4 anomaly detected while --fail-on-anomaly is
set, 5 verifier violation (a counterexample pair was found).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .alt import fuse, transform
from .classic import dempster_combine, detect_anomaly
from .core import Frame, MassFunction, make_frame
from .documents import parse_document, serialize_document
from .errors import TotalAltConflict, TotalConflict, ValidationError
from .reports import (
    RunReport,
    canonical_json,
    format_float,
    sweep_report_csv,
    sweep_report_dict,
    text_digest,
    theorem_report_csv,
    theorem_report_dict,
)
from .scenarios import (
    DEFAULT_EPSILON,
    TwoDoctorsParams,
    paradox_sweep,
    parameter_grid,
    two_doctors,
    verify_theorem,
)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_TOTAL_CONFLICT = 3
EXIT_ANOMALY = 4
EXIT_VIOLATION = 5


def _parse_values(text: str) -> list[float]:
    """Parse 'start:stop:step' or a comma-separated list of floats."""
    try:
        if ":" in text:
            parts = [float(p) for p in text.split(":")]
            if len(parts) != 3:
                raise ValueError("expected start:stop:step")
            start, stop, step = parts
            if step <= 0 or stop < start:
                raise ValueError("need step > 0 and stop >= start")
            count = int((stop - start) / step + 1e-9) + 1
            return [start + i * step for i in range(count)]
        return [float(p) for p in text.split(",") if p]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad range {text!r}: {exc}") from None


def _parse_labels(text: str) -> list[str]:
    return [p for p in text.split(",") if p]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="belfusion",
        description="Combine basic belief assignments with Dempster's rule "
                    "or the replication-immune alternative rule.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a document and report its BBAs")
    p.add_argument("document", help="path to a JSON document")
    p.add_argument("--normalize", action="store_true",
                   help="rescale masses to sum to one instead of rejecting")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("combine", help="combine two named BBAs from a document")
    p.add_argument("document")
    p.add_argument("--bba", action="append", required=True,
                   help="BBA name; give exactly twice")
    p.add_argument("--rule", choices=["dempster", "alt"], required=True)
    p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    p.add_argument("--fail-on-anomaly", action="store_true",
                   help="exit 4 when the combination replicates an input")
    p.add_argument("--normalize", action="store_true")
    p.add_argument("-o", "--output", help="write the canonical JSON report here")
    p.add_argument("--plot", action="store_true",
                   help="render a distribution figure next to the report")
    p.set_defaults(func=cmd_combine)

    for name, help_text in (("bel", "belief of a subset"),
                            ("pl", "plausibility of a subset")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("document")
        p.add_argument("--bba", required=True)
        p.add_argument("--subset", required=True, type=_parse_labels,
                       help="comma-separated labels, e.g. head,hand")
        p.set_defaults(func=cmd_bel if name == "bel" else cmd_pl)

    p = sub.add_parser("transform", help="subset weights of a named BBA")
    p.add_argument("document")
    p.add_argument("--bba", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("two-doctors",
                       help="combine one instance of the two-doctors template")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b1", type=float, required=True)
    p.add_argument("--b2", type=float, required=True)
    p.add_argument("--rule", choices=["dempster", "alt"], default="dempster")
    p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    p.add_argument("--fail-on-anomaly", action="store_true")
    p.add_argument("-o", "--output")
    p.add_argument("--plot", action="store_true")
    p.set_defaults(func=cmd_two_doctors)

    p = sub.add_parser("sweep",
                       help="run both rules over a grid of template parameters")
    p.add_argument("--a-range", type=_parse_values, default=_parse_values("0.1:0.9:0.2"))
    p.add_argument("--b1-range", type=_parse_values, default=_parse_values("0.1:0.5:0.2"))
    p.add_argument("--b2-range", type=_parse_values, default=_parse_values("0.1:0.4:0.1"))
    p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    p.add_argument("-o", "--output", help="prefix for .json/.csv (and .png) outputs")
    p.add_argument("--plot", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify-theorem",
                       help="randomized no-replication check of the alternative rule")
    p.add_argument("--n", type=int, required=True, help="frame size (2..8)")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    p.add_argument("--witness-mode", choices=["same", "per-input"], default="same")
    p.add_argument("--include-degenerate", action="store_true",
                   help="score provably replicating input families too")
    p.add_argument("-o", "--output", help="prefix for .json/.csv (and .png) outputs")
    p.add_argument("--plot", action="store_true")
    p.set_defaults(func=cmd_verify_theorem)

    return parser


def _load_document(path: str, normalize: bool = False):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    frame, bbas = parse_document(text, normalize=normalize)
    return text, frame, bbas


def _pick_bba(bbas: dict[str, MassFunction], name: str) -> MassFunction:
    if name not in bbas:
        raise ValidationError(
            f"no bba named {name!r}; document has {sorted(bbas)}"
        )
    return bbas[name]


def cmd_validate(args) -> int:
    _, frame, bbas = _load_document(args.document, args.normalize)
    print(f"frame: {list(frame.labels)}")
    for name, m in bbas.items():
        print(f"ok: {name} ({len(m)} focal elements)")
    return EXIT_OK


def _print_distribution(m: MassFunction) -> None:
    for s, v in m.items():
        print(f"{m.frame.format_subset(s)}: {format_float(v)}")


def _run_combination(frame: Frame, names: tuple[str, str],
                     m1: MassFunction, m2: MassFunction, rule: str,
                     epsilon: float, fail_on_anomaly: bool,
                     output: str | None, plot: bool, normalized: bool,
                     input_digest: str) -> int:
    if rule == "dempster":
        combined, conflict_value = dempster_combine(m1, m2)
        normalizer = None
        pair_count = None
    else:
        result = fuse(m1, m2)
        combined = result.combined
        conflict_value = result.conflict_mu
        normalizer = result.normalizer_k
        pair_count = result.pair_count
    verdict = detect_anomaly(m1, m2, combined, epsilon)
    report = RunReport(
        rule=rule,
        inputs=names,
        frame=frame,
        combined=combined,
        conflict=conflict_value,
        anomaly=verdict,
        epsilon=epsilon,
        input_digest=input_digest,
        normalized_inputs=normalized,
        normalizer=normalizer,
        pair_count=pair_count,
    )
    print(f"rule: {rule}")
    print(f"conflict: {format_float(conflict_value)}")
    _print_distribution(combined)
    if verdict.anomalous:
        note = " (vacuous partner)" if verdict.vacuous_input else ""
        print(f"anomalous: replicated {verdict.matched_source}{note}")
    else:
        print("anomalous: no")
    if output:
        Path(output).write_text(report.to_json(), encoding="utf-8")
    if plot:
        if not output:
            raise ValidationError("--plot needs -o to know where to write")
        from .plots import plot_distributions
        figure_path = str(Path(output).with_suffix(".png"))
        plot_distributions(m1, m2, combined, rule, figure_path)
    if fail_on_anomaly and verdict.anomalous:
        return EXIT_ANOMALY
    return EXIT_OK


def cmd_combine(args) -> int:
    if len(args.bba) != 2:
        raise ValidationError(f"need exactly two --bba names, got {len(args.bba)}")
    text, frame, bbas = _load_document(args.document, args.normalize)
    m1 = _pick_bba(bbas, args.bba[0])
    m2 = _pick_bba(bbas, args.bba[1])
    return _run_combination(
        frame, (args.bba[0], args.bba[1]), m1, m2, args.rule, args.epsilon,
        args.fail_on_anomaly, args.output, args.plot, args.normalize,
        text_digest(text),
    )


def cmd_bel(args) -> int:
    from .classic import belief
    _, frame, bbas = _load_document(args.document)
    m = _pick_bba(bbas, args.bba)
    print(format_float(belief(m, frame.encode(args.subset))))
    return EXIT_OK


def cmd_pl(args) -> int:
    from .classic import plausibility
    _, frame, bbas = _load_document(args.document)
    m = _pick_bba(bbas, args.bba)
    print(format_float(plausibility(m, frame.encode(args.subset))))
    return EXIT_OK


def cmd_transform(args) -> int:
    text, frame, bbas = _load_document(args.document)
    m = _pick_bba(bbas, args.bba)
    measure = transform(m, source=args.bba)
    for s, w in measure.items():
        print(f"{frame.format_subset(s)}: {format_float(w)}")
    if args.output:
        payload = {
            "bba": args.bba,
            "frame": list(frame.labels),
            "weights": [
                {"subset": list(frame.decode(s)), "weight": w}
                for s, w in measure.items()
            ],
            "input_digest": text_digest(text),
        }
        Path(args.output).write_text(canonical_json(payload), encoding="utf-8")
    return EXIT_OK


def cmd_two_doctors(args) -> int:
    params = TwoDoctorsParams(args.a, args.b1, args.b2)
    m1, m2 = two_doctors(params)
    digest = text_digest(serialize_document(m1.frame, {"m1": m1, "m2": m2}))
    return _run_combination(
        m1.frame, ("m1", "m2"), m1, m2, args.rule, args.epsilon,
        args.fail_on_anomaly, args.output, args.plot, False, digest,
    )


def cmd_sweep(args) -> int:
    points = parameter_grid(args.a_range, args.b1_range, args.b2_range)
    report = paradox_sweep(points, args.epsilon)
    frame = make_frame(("A", "B", "C"))
    print(f"points: {len(report.points)}")
    print(
        f"dempster_anomalous: {report.dempster_anomalous_fraction * 100:g}%, "
        f"alt_anomalous: {report.alt_anomalous_fraction * 100:g}%"
    )
    if args.output:
        Path(args.output + ".json").write_text(
            canonical_json(sweep_report_dict(report)), encoding="utf-8")
        Path(args.output + ".csv").write_text(
            sweep_report_csv(report, frame), encoding="utf-8")
    if args.plot:
        if not args.output:
            raise ValidationError("--plot needs -o to know where to write")
        from .plots import plot_sweep
        plot_sweep(report, args.output + ".png")
    return EXIT_OK


def _print_bba_lines(label: str, m: MassFunction) -> None:
    print(f"  {label}:")
    for s, v in m.items():
        print(f"    {m.frame.format_subset(s)}: {format_float(v)}")


def cmd_verify_theorem(args) -> int:
    report = verify_theorem(
        args.n, args.trials, args.seed, args.epsilon,
        witness_mode=args.witness_mode.replace("-", "_"),
        skip_degenerate=not args.include_degenerate,
    )
    print(
        f"n={report.frame_size} trials={report.trials} seed={report.seed}: "
        f"passes={report.passes} violations={len(report.violations)} "
        f"skipped_identical={report.skipped_identical} "
        f"skipped_degenerate={report.skipped_degenerate} "
        f"degenerate_conflict={report.degenerate_conflict}"
    )
    if report.margins:
        print(f"smallest witness margin: {format_float(min(report.margins))}")
    if args.output:
        Path(args.output + ".json").write_text(
            canonical_json(theorem_report_dict(report)), encoding="utf-8")
        Path(args.output + ".csv").write_text(
            theorem_report_csv(report), encoding="utf-8")
    if args.plot:
        if not args.output:
            raise ValidationError("--plot needs -o to know where to write")
        from .plots import plot_theorem
        plot_theorem(report, args.output + ".png")
    if report.violations:
        print(f"counterexamples found: {len(report.violations)}")
        for v in report.violations:
            print(f"trial {v.trial} (margin {format_float(v.margin)}):")
            _print_bba_lines("m1", v.m1)
            _print_bba_lines("m2", v.m2)
            _print_bba_lines("combined", v.combined)
        return EXIT_VIOLATION
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (TotalConflict, TotalAltConflict) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOTAL_CONFLICT
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
