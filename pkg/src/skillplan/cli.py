"""Command-line interface.

Bandwidth values on the CLI are in kbytes/s (1 kbyte = 1000 bytes); all
internal computation is in bytes/s. Exit codes: 0 success, 1 validation
failure, 2 infeasible plan, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from . import corpus, experiments, xmlio
from .errors import MalformedXmlError, SchemaViolationError, SkillplanError
from .graph import build_sdg, export_edge_list, topological_order
from .model import SessionEnvironment, validate_catalog
from .session import parse_policy_script, run_session
from .solver import InfeasibilityDiagnosis, filter_feasible, solve_blp

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_INFEASIBLE = 2
EXIT_IO = 3

KBYTE = 1000  # bytes


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as exc:
        raise _IoFailure(f"cannot read {path}: {exc}")


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
    except OSError as exc:
        raise _IoFailure(f"cannot write {path}: {exc}")


class _IoFailure(Exception):
    pass


def _load_catalog(path: str):
    cat = xmlio.parse_catalog(_read(path))
    report = validate_catalog(cat)
    return cat, report


def cmd_validate(args) -> int:
    cat, report = _load_catalog(args.catalog)
    for v in report.violations:
        print(v)
    if not report.ok:
        return EXIT_VALIDATION
    print(f"OK: {len(cat.subjects)} subjects, {len(cat.learning_objects)} objects, "
          f"{len(cat.skills)} skills")
    return EXIT_OK


def cmd_plan(args) -> int:
    cat, report = _load_catalog(args.catalog)
    if not report.ok:
        for v in report.violations:
            print(v, file=sys.stderr)
        return EXIT_VALIDATION
    device, user = xmlio.parse_uda_ontology(_read(args.profile))
    env = SessionEnvironment(args.bandwidth * KBYTE)

    sdg = build_sdg(cat, user.known_subject_ids(), args.target_subject)
    if args.export_graph:
        _write(args.export_graph, export_edge_list(sdg))
    table = filter_feasible(sdg, cat, device, env)
    result = solve_blp(sdg, table, user.max_time)
    if isinstance(result, InfeasibilityDiagnosis):
        print(f"infeasible: {result}", file=sys.stderr)
        return EXIT_INFEASIBLE
    for sid in topological_order(sdg):
        obj = cat.object_by_id[result.assignment[sid]]
        print(f"{sid}\t{obj.id}\t{obj.duration}\t{float(obj.bitrate):.3f}")
    print(f"# objective {float(result.objective_value):.3f} bytes/s", file=sys.stderr)
    return EXIT_OK


def cmd_simulate(args) -> int:
    cat, report = _load_catalog(args.catalog)
    if not report.ok:
        for v in report.violations:
            print(v, file=sys.stderr)
        return EXIT_VALIDATION
    device, user = xmlio.parse_uda_ontology(_read(args.profile))
    env = SessionEnvironment(args.bandwidth * KBYTE)
    policy = parse_policy_script(_read(args.policy_file))

    result = run_session(cat, device, user, env, policy)
    for msg in result.transcript:
        sys.stdout.write(xmlio.encode_acml(msg))
    sys.stdout.write(xmlio.serialize_uda_ontology(device, result.profile))
    if result.diagnosis is not None:
        print(f"infeasible: {result.diagnosis}", file=sys.stderr)
        return EXIT_INFEASIBLE
    return EXIT_OK


def cmd_matrix(args) -> int:
    cat, report = _load_catalog(args.catalog)
    if not report.ok:
        for v in report.violations:
            print(v, file=sys.stderr)
        return EXIT_VALIDATION
    out = experiments.run_device_matrix(cat, args.regime, seed=args.seed,
                                        n_users=args.users).to_csv()
    if args.output:
        _write(args.output, out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    cat, report = _load_catalog(args.catalog)
    if not report.ok:
        for v in report.violations:
            print(v, file=sys.stderr)
        return EXIT_VALIDATION
    points = [int(float(p) * KBYTE) for p in args.points.split(",") if p.strip()]
    out = experiments.run_bandwidth_sweep(cat, points, seed=args.seed,
                                          n_users=args.users).to_csv()
    if args.output:
        _write(args.output, out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


def cmd_gen_corpus(args) -> int:
    spec = corpus.CorpusSpec(
        seed=args.seed,
        n_subjects=args.subjects,
        objects_per_subject=args.objects_per_subject,
        p_text=args.p_text,
        p_audio=args.p_audio,
        p_video=args.p_video,
    )
    cat = corpus.generate_corpus(spec)
    text = xmlio.serialize_catalog(cat)
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skillplan", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a catalog document")
    p.add_argument("catalog")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("plan", help="compute the best learning program")
    p.add_argument("--catalog", required=True)
    p.add_argument("--profile", required=True, help="user/device profile document")
    p.add_argument("--bandwidth", required=True, type=float, help="network bandwidth, kbytes/s")
    p.add_argument("--target-subject", required=True)
    p.add_argument("--export-graph", help="write the dependency graph edge list here")
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("simulate", help="replay a session from a policy script")
    p.add_argument("--catalog", required=True)
    p.add_argument("--profile", required=True)
    p.add_argument("--policy-file", required=True)
    p.add_argument("--bandwidth", required=True, type=float, help="network bandwidth, kbytes/s")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("matrix", help="device-typology selection fractions for a regime")
    p.add_argument("--catalog", required=True)
    p.add_argument("--regime", required=True, choices=sorted(experiments.REGIME_BANDWIDTH))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--users", type=int, default=experiments.DEFAULT_USERS_PER_CELL)
    p.add_argument("--output")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("sweep", help="bandwidth sweep selection fractions (CSV)")
    p.add_argument("--catalog", required=True)
    p.add_argument("--points", required=True, help="comma-separated bandwidths, kbytes/s")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--users", type=int, default=experiments.DEFAULT_USERS_PER_CELL)
    p.add_argument("--output")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("gen-corpus", help="generate a synthetic catalog")
    p.add_argument("--seed", type=int, default=corpus.DEFAULT_SEED)
    p.add_argument("--subjects", type=int, default=30)
    p.add_argument("--objects-per-subject", type=int, default=20)
    p.add_argument("--p-text", type=float, default=0.72)
    p.add_argument("--p-audio", type=float, default=0.72)
    p.add_argument("--p-video", type=float, default=0.72)
    p.add_argument("--output")
    p.set_defaults(func=cmd_gen_corpus)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _IoFailure as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_IO
    except (MalformedXmlError, SchemaViolationError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except SkillplanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
