"""Command-line front end.

Subcommands:

  gen       draw public parameters and write them as JSON
  exchange  run a key exchange, write the transcript and both keys
  attack    read a transcript, recover the key, write the result as JSON
  bench     run the timing/key-size experiment grid, write CSV

Every command takes --seed; when absent, the TROPKEX_SEED environment
variable is used, and failing that, seed 0.  Exit codes are 0 on
success, 2 for usage errors, 3 for I/O errors, 4 for malformed input
files, 5 for attack failures; the matching category is printed to
stderr as ``error:<category>: <message>``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from random import Random

from .attack import AttackError, attack_result_to_json, recover_key_targeting
from .bench import RunConfig, rows_to_csv, run_experiment
from .protocol import (
    KeyAgreementError,
    params_from_json,
    params_to_json,
    run_exchange,
    setup,
    transcript_from_json,
    transcript_to_json,
)
from .semidirect import SemigroupOpKind
from .tropical import FormatError, matrix_to_json

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_FORMAT = 4
EXIT_ATTACK = 5


def _resolve_seed(flag_value: int | None) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get("TROPKEX_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise FormatError(f"TROPKEX_SEED must be an integer, got {env!r}")
    return 0


def _op_kind(name: str) -> SemigroupOpKind:
    return SemigroupOpKind(name)


def _k_list_arg(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        )
    if not values:
        raise argparse.ArgumentTypeError("at least one matrix dimension is required")
    return values


def _emit(payload: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(payload)
        if not payload.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w") as handle:
            handle.write(payload)


def _load_json(path: str):
    with open(path) as handle:
        return json.load(handle)


def _add_param_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--k", type=int, default=10, help="matrix dimension")
    parser.add_argument("--N", type=int, default=1000, help="entry bound for M and H")
    parser.add_argument("--K", type=int, default=200, help="private exponent bit bound")
    parser.add_argument(
        "--op", choices=["circ", "star"], default="circ", help="semigroup operation"
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropkex",
        description="Min-plus matrix key exchange and the attack that breaks it.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate public protocol parameters")
    _add_param_flags(p_gen)
    p_gen.add_argument("--seed", type=int, default=None)
    p_gen.add_argument("--out", default=None, help="params JSON path (default stdout)")

    p_ex = sub.add_parser("exchange", help="run one key exchange")
    _add_param_flags(p_ex)
    p_ex.add_argument("--params", default=None, help="reuse params from a 'gen' file")
    p_ex.add_argument("--seed", type=int, default=None)
    p_ex.add_argument("--out", default=None, help="transcript JSON path (default stdout)")
    p_ex.add_argument(
        "--keys-out",
        default=None,
        help="shared-key JSON path (default stdout)",
    )

    p_at = sub.add_parser("attack", help="recover the key from a transcript")
    p_at.add_argument("--transcript", required=True, help="transcript JSON path")
    p_at.add_argument("--out", default=None, help="result JSON path (default stdout)")
    p_at.add_argument(
        "--target",
        choices=["alice", "bob"],
        default="alice",
        help="whose public message to search for",
    )
    p_at.add_argument(
        "--no-cache",
        action="store_true",
        help="recompute every probe power from scratch (reference cost variant)",
    )

    p_bench = sub.add_parser("bench", help="run the experiment grid")
    p_bench.add_argument(
        "--k",
        required=True,
        type=_k_list_arg,
        help="comma-separated matrix dimensions, e.g. 5,10",
    )
    p_bench.add_argument("--N", type=int, default=1000)
    p_bench.add_argument("--K", type=int, default=200)
    p_bench.add_argument("--op", choices=["circ", "star"], default="circ")
    p_bench.add_argument("--trials", type=int, default=40)
    p_bench.add_argument("--seed", type=int, default=None)
    p_bench.add_argument("--out", default=None, help="CSV path (default stdout)")

    return parser


def _cmd_gen(args) -> int:
    rng = Random(_resolve_seed(args.seed))
    params = setup(args.k, args.N, args.K, _op_kind(args.op), rng)
    _emit(json.dumps(params_to_json(params), indent=2), args.out)
    return EXIT_OK


def _cmd_exchange(args) -> int:
    if args.params is not None:
        params = params_from_json(_load_json(args.params))
        rng = Random(_resolve_seed(args.seed))
    else:
        rng = Random(_resolve_seed(args.seed))
        params = setup(args.k, args.N, args.K, _op_kind(args.op), rng)
    transcript, alice_key, bob_key = run_exchange(params, rng)
    _emit(json.dumps(transcript_to_json(transcript), indent=2), args.out)
    keys = {
        "alice_key": matrix_to_json(alice_key),
        "bob_key": matrix_to_json(bob_key),
    }
    _emit(json.dumps(keys, indent=2), args.keys_out)
    return EXIT_OK


def _cmd_attack(args) -> int:
    transcript = transcript_from_json(_load_json(args.transcript))
    result = recover_key_targeting(
        transcript, args.target, cached=not args.no_cache
    )
    _emit(json.dumps(attack_result_to_json(result), indent=2), args.out)
    return EXIT_OK


def _cmd_bench(args) -> int:
    config = RunConfig(
        k_list=args.k,
        N=args.N,
        K=args.K,
        op=_op_kind(args.op),
        trials=args.trials,
        seed=_resolve_seed(args.seed),
        output_path=args.out,
    )
    rows = run_experiment(config)
    _emit(rows_to_csv(rows), args.out)
    return EXIT_OK


_COMMANDS = {
    "gen": _cmd_gen,
    "exchange": _cmd_exchange,
    "attack": _cmd_attack,
    "bench": _cmd_bench,
}


def cli_main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed usage; translate to a return code.
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except OSError as exc:
        print(f"error:io: {exc}", file=sys.stderr)
        return EXIT_IO
    except (FormatError, json.JSONDecodeError) as exc:
        print(f"error:format: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except (AttackError, KeyAgreementError) as exc:
        print(f"error:attack: {exc}", file=sys.stderr)
        return EXIT_ATTACK
    except ValueError as exc:
        print(f"error:usage: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
