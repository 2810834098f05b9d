"""Command line front end.

Subcommands: decide, solve, reduce, labellings, oracle, gen. Exit codes:
0 for a positive verdict, 1 for a negative one, 2 for input errors, 3 for
internal errors. Results go to stdout, diagnostics to stderr. The env var
PREFARG_SIZE_CAP overrides the enumeration caps.
"""

import argparse
import json
import os
import random
import sys
import time
from pathlib import Path

from .errors import PrefargError
from .framework import Framework
from .io_formats import (
    emit_apx,
    emit_dot,
    emit_labelling,
    emit_result,
    parse_apx,
    parse_labelling,
    parse_order,
)
from .oracle import DEFAULT_COMPONENT_CAP, brute_force_ex
from .reductions import reduce as apply_reduction
from .semantics import DEFAULT_LABELLING_CAP, Labelling, enumerate_complete, require_total
from .solvers import Decision, decide, verify_witness

SIZE_CAP_ENV = "PREFARG_SIZE_CAP"

EXIT_YES = 0
EXIT_NO = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL_ERROR = 3


def _size_cap(default: int) -> int:
    raw = os.environ.get(SIZE_CAP_ENV)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise PrefargError(f"{SIZE_CAP_ENV} must be an integer, got {raw!r}") from None


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_instance(framework_path: str, labelling_path: str):
    framework = parse_apx(_read(framework_path))
    labelling = parse_labelling(_read(labelling_path))
    require_total(framework, labelling)
    return framework, labelling


def _reduction_list(value: str) -> list[int]:
    return [1, 2, 3, 4] if value == "all" else [int(value)]


def _decide_one(framework, labelling, reduction: int, verified: bool) -> Decision:
    decision = decide(framework, labelling, reduction)
    if decision.yes and verified:
        if decision.witness is None or not verify_witness(
            framework, labelling, reduction, decision.witness
        ):
            raise _InternalError(
                f"witness for reduction {reduction} failed verification"
            )
    return decision


class _InternalError(Exception):
    pass


def _cmd_decide(args, verified: bool) -> int:
    framework_path, labelling_path = Path(args.framework), Path(args.labelling)
    if framework_path.is_dir() or labelling_path.is_dir():
        return _run_batch(args, verified)
    framework, labelling = _load_instance(args.framework, args.labelling)
    any_yes = False
    for reduction in _reduction_list(args.reduction):
        started = time.perf_counter()
        decision = _decide_one(framework, labelling, reduction, verified)
        elapsed = (time.perf_counter() - started) * 1000.0
        print(
            emit_result(
                decision,
                fmt=args.format,
                elapsed_ms=elapsed if args.format == "json" else None,
            )
        )
        any_yes = any_yes or decision.yes
    return EXIT_YES if any_yes else EXIT_NO


def _run_batch(args, verified: bool) -> int:
    """Directory mode: instances paired by stem, one JSON line per verdict."""
    framework_dir, labelling_dir = Path(args.framework), Path(args.labelling)
    if not (framework_dir.is_dir() and labelling_dir.is_dir()):
        raise PrefargError("batch mode needs both --framework and --labelling directories")
    frameworks = {p.stem: p for p in sorted(framework_dir.iterdir()) if p.suffix == ".apx"}
    labellings = {p.stem: p for p in sorted(labelling_dir.iterdir()) if p.suffix == ".json"}
    stems = sorted(set(frameworks) & set(labellings))
    if not stems:
        raise PrefargError("no instances paired by filename stem")
    for stem in sorted(set(frameworks) ^ set(labellings)):
        print(f"warning: unpaired instance {stem!r} skipped", file=sys.stderr)
    for stem in stems:
        framework, labelling = _load_instance(str(frameworks[stem]), str(labellings[stem]))
        for reduction in _reduction_list(args.reduction):
            decision = _decide_one(framework, labelling, reduction, verified)
            payload = {"instance": stem, **json.loads(emit_result(decision, fmt="json"))}
            print(json.dumps(payload))
    return EXIT_YES


def _cmd_reduce(args) -> int:
    framework = parse_apx(_read(args.framework))
    order = parse_order(_read(args.order))
    reduced = apply_reduction(framework, order, args.reduction)
    output = emit_dot(reduced) if args.dot else emit_apx(reduced)
    sys.stdout.write(output)
    return EXIT_YES


def _cmd_labellings(args) -> int:
    framework = parse_apx(_read(args.framework))
    cap = _size_cap(DEFAULT_LABELLING_CAP)
    for labelling in enumerate_complete(framework, cap):
        print(emit_labelling(labelling))
    return EXIT_YES


def _cmd_oracle(args) -> int:
    framework, labelling = _load_instance(args.framework, args.labelling)
    cap = _size_cap(DEFAULT_COMPONENT_CAP)
    found, order = brute_force_ex(framework, labelling, args.reduction, component_cap=cap)
    decision = Decision(found, args.reduction, witness=order)
    print(emit_result(decision, fmt=args.format))
    return EXIT_YES if found else EXIT_NO


def _cmd_gen(args) -> int:
    if args.args < 0:
        raise PrefargError("--args must be nonnegative")
    if not 0.0 <= args.attack_prob <= 1.0:
        raise PrefargError("--attack-prob must lie in [0, 1]")
    rng = random.Random(args.seed)
    width = max(1, len(str(max(args.args - 1, 0))))
    names = [f"a{i:0{width}d}" for i in range(args.args)]
    attacks = [(s, t) for s in names for t in names if rng.random() < args.attack_prob]
    framework = Framework(names, attacks)
    apx_text = f"% seed: {args.seed}\n" + emit_apx(framework)

    labelling_text = None
    if args.labelling_mode is not None:
        if args.labelling_mode == "complete":
            cap = _size_cap(DEFAULT_LABELLING_CAP)
            if len(names) <= cap:
                complete = enumerate_complete(framework, cap)
                labelling = complete[rng.randrange(len(complete))]
            else:
                print(
                    "warning: framework above the enumeration cap,"
                    " falling back to a random labelling",
                    file=sys.stderr,
                )
                labelling = _random_labelling(rng, names)
        else:
            labelling = _random_labelling(rng, names)
        labelling_text = emit_labelling(labelling) + "\n"

    if args.framework_out:
        Path(args.framework_out).write_text(apx_text, encoding="utf-8")
    else:
        sys.stdout.write(apx_text)
    if labelling_text is not None:
        if args.labelling_out:
            Path(args.labelling_out).write_text(labelling_text, encoding="utf-8")
        else:
            if not args.framework_out:
                sys.stdout.write("\n")
            sys.stdout.write(labelling_text)
    return EXIT_YES


def _random_labelling(rng: random.Random, names: list[str]) -> Labelling:
    return Labelling.from_map({n: rng.choice(("in", "out", "undec")) for n in names})


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prefarg",
        description=(
            "Decide whether a preference order over arguments can make a"
            " target labelling complete after one of the four reductions."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_instance_flags(p, with_all=True):
        p.add_argument("--framework", required=True, help="APX file (or directory in batch mode)")
        p.add_argument("--labelling", required=True, help="labelling JSON file (or directory)")
        choices = ["1", "2", "3", "4"] + (["all"] if with_all else [])
        p.add_argument("--reduction", required=True, choices=choices)
        p.add_argument("--format", choices=["json", "text"], default="json")

    p_decide = sub.add_parser("decide", help="decide the inverse problem")
    add_instance_flags(p_decide)
    p_decide.set_defaults(func=lambda a: _cmd_decide(a, verified=False))

    p_solve = sub.add_parser("solve", help="decide and emit a self-verified witness")
    add_instance_flags(p_solve)
    p_solve.set_defaults(func=lambda a: _cmd_decide(a, verified=True))

    p_reduce = sub.add_parser("reduce", help="apply a reduction under an order file")
    p_reduce.add_argument("--framework", required=True)
    p_reduce.add_argument("--order", required=True, help="order file, one component per line")
    p_reduce.add_argument("--reduction", required=True, type=int, choices=[1, 2, 3, 4])
    p_reduce.add_argument("--dot", action="store_true", help="emit DOT instead of APX")
    p_reduce.set_defaults(func=_cmd_reduce)

    p_lab = sub.add_parser("labellings", help="enumerate all complete labellings")
    p_lab.add_argument("--framework", required=True)
    p_lab.set_defaults(func=_cmd_labellings)

    p_oracle = sub.add_parser("oracle", help="brute-force verdict over every order")
    p_oracle.add_argument("--framework", required=True)
    p_oracle.add_argument("--labelling", required=True)
    p_oracle.add_argument("--reduction", required=True, type=int, choices=[1, 2, 3, 4])
    p_oracle.add_argument("--format", choices=["json", "text"], default="json")
    p_oracle.set_defaults(func=_cmd_oracle)

    p_gen = sub.add_parser("gen", help="generate a random framework (and labelling)")
    p_gen.add_argument("--args", required=True, type=int)
    p_gen.add_argument("--attack-prob", required=True, type=float)
    p_gen.add_argument("--seed", required=True, type=int)
    p_gen.add_argument("--labelling-mode", choices=["random", "complete"])
    p_gen.add_argument("--framework-out", help="write APX here instead of stdout")
    p_gen.add_argument("--labelling-out", help="write labelling JSON here instead of stdout")
    p_gen.set_defaults(func=_cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL_ERROR
    except (PrefargError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
