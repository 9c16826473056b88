"""
Command line for the ring invariants toolkit.

    python cli.py validate catalog.ring
    python cli.py check catalog.ring --theorems N1,RAD_1_4 --out report.json
    python cli.py check --named --random 50 --jobs 4
    python cli.py profile --named --instance "2Z8/neg"
    python cli.py search --named --random 200 --mask N2:2
    python cli.py catalog --out named.ring --manifest named.json
"""
import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Dict, List, Optional

from pydantic import ValidationError as ConfigError

from algebra import catalog, ringfile
from algebra.errors import ParseError, RingError, ValidationError
from algebra.theorems import check_instance, counterexample_search
from config.settings import load_config, log_level
from models.report_models import VERDICT_GLYPHS, Caps, RunConfig, TheoremReport, Verdict

logger = logging.getLogger("ringinv")

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_COUNTEREXAMPLE = 4


def gather(paths: List[str], named: bool, random_count: int, max_order: int,
           config: RunConfig) -> List[catalog.Instance]:
    """Instances from files, then the named catalog, then a seeded random batch."""
    instances: List[catalog.Instance] = []
    for path in paths:
        instances.extend(ringfile.loads(Path(path).read_text(), config.caps, tags=False))
    if named:
        instances.extend(catalog.named_instances(config.caps, tags=False))
    if random_count:
        batch, stats = catalog.random_instances(max_order, random_count, config.seed, caps=config.caps, tags=False)
        logger.info(f"random batch: {stats.valid}/{stats.attempted} valid tables, {stats.rigid} rigid rings")
        instances.extend(batch)
    return instances


def _check_text(text: str, theorems: List[str], caps: Dict, seed: int, masks: List[str]) -> List[Dict]:
    """Worker entry point: rebuild one instance from its canonical text and check it."""
    config = RunConfig(caps=Caps(**caps), seed=seed, theorems=theorems, masks=masks)
    reports = []
    for instance in ringfile.loads(text, config.caps, tags=False):
        reports.extend(check_instance(instance.ring, instance.group, config.theorems, config.caps, seed,
                                      config.mask_map()))
    return [r.model_dump(mode="json") for r in reports]


def run_checks(instances: List[catalog.Instance], config: RunConfig) -> List[TheoremReport]:
    if config.jobs > 1 and len(instances) > 1:
        texts = [ringfile.dumps([instance]) for instance in instances]
        theorems = [t.value for t in config.theorems]
        caps = config.caps.model_dump()
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            batches = pool.map(_check_text, texts, [theorems] * len(texts), [caps] * len(texts),
                               [config.seed] * len(texts), [config.masks] * len(texts))
            reports = [TheoremReport(**r) for batch in batches for r in batch]
    else:
        reports = []
        for instance in instances:
            reports.extend(check_instance(instance.ring, instance.group, config.theorems, config.caps,
                                          config.seed, config.mask_map()))
    return sorted(reports, key=lambda r: r.key)


def report_json(reports: List[TheoremReport]) -> str:
    return json.dumps([r.model_dump(mode="json") for r in reports], indent=2, ensure_ascii=False) + "\n"


def write_report(reports: List[TheoremReport], out: str) -> None:
    text = report_json(reports)
    if out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")
        logger.info(f"wrote {len(reports)} reports to {out}")


def summary_table(reports: List[TheoremReport], theorems) -> str:
    rows: Dict[str, Dict[str, str]] = {}
    for report in reports:
        rows.setdefault(f"{report.ring}/{report.group}", {})[report.theorem.value] = VERDICT_GLYPHS[report.verdict]
    columns = [t.value for t in theorems]
    width = max([len(name) for name in rows] + [8])
    lines = [" " * width + " " + " ".join(columns)]
    for name in sorted(rows):
        cells = [rows[name].get(c, " ").center(len(c)) for c in columns]
        lines.append(name.ljust(width) + " " + " ".join(cells))
    counts = {v: sum(1 for r in reports if r.verdict == v) for v in Verdict}
    lines.append(", ".join(f"{v.value}: {n}" for v, n in counts.items()))
    return "\n".join(lines)


def cmd_validate(args) -> int:
    try:
        instances = ringfile.load(args.path)
    except FileNotFoundError:
        logger.error(f"no such file: {args.path}")
        print(f"error: no such file: {args.path}", file=sys.stderr)
        return EXIT_PARSE
    except ParseError as exc:
        logger.error(f"{args.path}: {exc}")
        print(f"parse error: {args.path}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        logger.error(f"{args.path}: {exc}")
        print(f"invalid: {args.path}: {exc}; witness {exc.witness}", file=sys.stderr)
        return EXIT_INVALID
    for instance in instances:
        print(f"{instance.name}: |R|={instance.ring.order} |G|={instance.group.order} [{', '.join(instance.tags)}]")
    return EXIT_OK


def cmd_check(args, config: RunConfig) -> int:
    instances = gather(args.paths, args.named, args.random, args.max_order, config)
    reports = run_checks(instances, config)
    write_report(reports, config.out)
    print(summary_table(reports, config.theorems))
    bad = [r for r in reports if r.verdict == Verdict.COUNTEREXAMPLE]
    for report in bad:
        logger.error(f"counterexample: {report.theorem.value} on {report.ring}/{report.group}: "
                     f"{report.conclusion.witness}")
    return EXIT_COUNTEREXAMPLE if bad else EXIT_OK


def cmd_profile(args, config: RunConfig) -> int:
    instances = gather(args.paths, args.named or not args.paths, 0, 0, config)
    chosen = [i for i in instances if args.instance is None or i.name == args.instance]
    if not chosen:
        print(f"error: no instance named {args.instance!r}", file=sys.stderr)
        return EXIT_INVALID
    for instance in chosen:
        print(json.dumps(catalog.profile(instance, config.caps, config.seed).model_dump(mode="json"),
                         indent=2, ensure_ascii=False))
    return EXIT_OK


def cmd_search(args, config: RunConfig) -> int:
    instances = gather(args.paths, args.named, args.random, args.max_order, config)
    budget = args.budget if args.budget is not None else len(instances)
    hits = counterexample_search(config.theorems, instances, budget, config.caps, config.seed, config.mask_map())
    hits = sorted(hits, key=lambda r: r.key)
    write_report(hits, config.out)
    print(f"{len(hits)} counterexamples over {min(budget, len(instances))} instances (masks: {config.masks or 'none'})")
    for report in hits:
        print(f"  {report.theorem.value} on {report.ring}/{report.group}: {report.conclusion.witness}")
    return EXIT_COUNTEREXAMPLE if hits else EXIT_OK


def cmd_catalog(args, config: RunConfig) -> int:
    if args.random:
        instances, stats = catalog.random_instances(args.max_order, args.random, config.seed, caps=config.caps)
        instances, stats.duplicates = catalog.dedup(instances, config.caps)
        print(stats.model_dump_json())
    else:
        instances = catalog.named_instances(config.caps)
    ringfile.save(instances, args.out)
    if args.manifest:
        ringfile.write_manifest(instances, args.manifest, config.caps)
    print(f"wrote {len(instances)} instances to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ringinv", description="Invariants of finite rings under automorphism groups")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    validate = sub.add_parser("validate", help="parse and validate a ring file")
    validate.add_argument("path")

    def run_flags(p, out=True):
        p.add_argument("paths", nargs="*", help="ring files")
        p.add_argument("--named", action="store_true", help="include the named catalog")
        p.add_argument("--random", type=int, default=0, help="add this many seeded random instances")
        p.add_argument("--max-order", type=int, default=16, help="largest random ring order")
        p.add_argument("--caps", help="cap overrides, key=value,...")
        p.add_argument("--seed", type=int)
        p.add_argument("--theorems", help="comma separated theorem ids")
        p.add_argument("--mask", action="append", help="disable a hypothesis, THEOREM:key")
        p.add_argument("--jobs", type=int)
        if out:
            p.add_argument("--out", help="report path, '-' for stdout")

    run_flags(sub.add_parser("check", help="check theorems and write a JSON report"))
    profile = sub.add_parser("profile", help="print the invariants of instances")
    run_flags(profile, out=False)
    profile.add_argument("--instance", help="instance name, e.g. 2Z8/neg")
    search = sub.add_parser("search", help="search for counterexamples, optionally with masked hypotheses")
    run_flags(search)
    search.add_argument("--budget", type=int, help="number of instances to examine")

    build = sub.add_parser("catalog", help="write the named catalog (or a random batch) to a ring file")
    build.add_argument("--out", required=True)
    build.add_argument("--manifest", help="also write a JSON manifest")
    build.add_argument("--random", type=int, default=0)
    build.add_argument("--max-order", type=int, default=16)
    build.add_argument("--seed", type=int)
    build.add_argument("--caps")
    return parser


def _overrides(args) -> Dict:
    theorems = getattr(args, "theorems", None)
    return {
        "caps": getattr(args, "caps", None),
        "seed": getattr(args, "seed", None),
        "jobs": getattr(args, "jobs", None),
        "out": getattr(args, "out", None) if args.command in ("check", "search") else None,
        "theorems": [t.strip() for t in theorems.split(",") if t.strip()] if theorems else None,
        "masks": getattr(args, "mask", None),
    }


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else log_level("WARNING"), stream=sys.stderr)
    if args.command == "validate":
        return cmd_validate(args)
    try:
        config = load_config(_overrides(args))
    except (ConfigError, ValueError) as exc:
        parser.error(str(exc))
    try:
        if args.command == "check":
            return cmd_check(args, config)
        if args.command == "profile":
            return cmd_profile(args, config)
        if args.command == "search":
            return cmd_search(args, config)
        return cmd_catalog(args, config)
    except FileNotFoundError as exc:
        logger.error(f"missing file: {exc.filename}")
        print(f"error: no such file: {exc.filename}", file=sys.stderr)
        return EXIT_PARSE
    except ParseError as exc:
        logger.error(f"parse error: {exc}")
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except RingError as exc:
        logger.error(f"invalid instance: {exc}")
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
