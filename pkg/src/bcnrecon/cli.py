"""Command-line frontend.

Subcommands: ``analyze`` (reconstructibility verdicts plus witnesses),
``track`` (current-state tracking from an input/output record),
``export`` (DOT for the pair graph, observer automaton or state
transition graph), ``gen`` (write example/random network files) and
``oracle-check`` (cross-check fast deciders against brute-force
oracles).  All indices on the command line are 1-based.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .bcn import Bcn
from .decider import (
    NoConsistentStateError,
    NotHomingError,
    determine_current_state,
    is_fornasini_reconstructible,
    is_reconstructible,
    is_reconstructible_via_dfa,
    oracle_fornasini,
    oracle_reconstructible,
)
from .dot import dfa_dot, stg_dot, wpg_dot
from .generators import (
    example_5state,
    family_cycle_stayer,
    family_stay_stepper,
    random_bcn,
    sat_reduction_bn,
)
from .netfile import NetworkFormatError, parse_network, serialize_network
from .observer import build_observer_dfa
from .pair_graph import build_wpg

__all__ = ["main"]


def _load(path: str) -> Bcn:
    return parse_network(Path(path).read_text())


def _parse_word(text: str) -> tuple[int, ...]:
    tokens = text.split()
    word = []
    for token in tokens:
        try:
            value = int(token)
        except ValueError:
            raise ValueError(f"word letter {token!r} is not an integer") from None
        if value < 1:
            raise ValueError(f"word letter {value} must be >= 1")
        word.append(value)
    return tuple(word)


def _fmt_word(word: Sequence[int]) -> str:
    return " ".join(map(str, word)) if word else "eps"


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _cmd_analyze(args: argparse.Namespace) -> int:
    bcn = _load(args.file)
    wpg = build_wpg(bcn)
    dfa = build_observer_dfa(wpg)
    existential = is_reconstructible(bcn)
    fornasini = is_fornasini_reconstructible(bcn)
    print(f"wpg: {len(wpg.vertices)} vertices, {len(wpg.edges)} edges")
    print(f"observer-dfa: {len(dfa.states)} states")
    print(f"reconstructible: {_yn(existential.reconstructible)}")
    if existential.reconstructible:
        print(f"homing: {_fmt_word(existential.homing_word)}")
    else:
        subgraph = " ".join(str(v) for v in sorted(existential.complete_subgraph))
        print(f"complete-subgraph: {subgraph}")
    print(f"fornasini-reconstructible: {_yn(fornasini.reconstructible)}")
    if fornasini.reconstructible:
        print(f"horizon: {fornasini.horizon}")
    else:
        print("cycle: " + " -> ".join(str(v) for v in fornasini.cycle))
    return 0 if existential.reconstructible else 1


def _cmd_track(args: argparse.Namespace) -> int:
    bcn = _load(args.file)
    inputs = _parse_word(args.inputs)
    outputs = _parse_word(args.outputs)
    state, trace = determine_current_state(bcn, inputs, outputs)
    for t, candidates in enumerate(trace.candidates):
        print(f"X{t}: " + " ".join(map(str, candidates)))
    print(f"current state: {state}")
    return 0


def _cmd_export(args: argparse.Namespace) -> int:
    bcn = _load(args.file)
    if args.kind == "wpg":
        text = wpg_dot(build_wpg(bcn))
    elif args.kind == "dfa":
        text = dfa_dot(build_observer_dfa(build_wpg(bcn)))
    else:
        text = stg_dot(bcn.state_transition_graph())
    sys.stdout.write(text)
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    family = args.family
    params = args.params
    try:
        if family == "example5":
            _expect_params(params, 0, "example5")
            bcn = example_5state()
        elif family == "cycle-stayer":
            _expect_params(params, 1, "cycle-stayer N")
            bcn = family_cycle_stayer(int(params[0]))
        elif family == "stay-stepper":
            _expect_params(params, 1, "stay-stepper N")
            bcn = family_stay_stepper(int(params[0]))
        elif family == "sat":
            _expect_params(params, 2, "sat n g-bits")
            n = int(params[0])
            bits = params[1]
            if n < 2:
                raise ValueError(f"sat needs n >= 2, got {n}")
            if len(bits) != 2 ** (n - 1) or set(bits) - {"0", "1"}:
                raise ValueError(
                    f"g-bits must be {2 ** (n - 1)} characters of 0/1 for n={n}, "
                    f"got {bits!r}"
                )
            bcn = sat_reduction_bn([int(c) for c in bits])
        else:
            _expect_params(params, 4, "random N M Q seed")
            bcn = random_bcn(*(int(p) for p in params))
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(serialize_network(bcn))
    return 0


def _expect_params(params: list[str], count: int, usage: str) -> None:
    if len(params) != count:
        raise ValueError(f"expected {count} parameter(s): {usage}")


def _cmd_oracle_check(args: argparse.Namespace) -> int:
    bcn = _load(args.file)
    recon_wpg = is_reconstructible(bcn).reconstructible
    recon_dfa = is_reconstructible_via_dfa(bcn)
    recon_oracle = oracle_reconstructible(bcn)
    fornasini_wpg = is_fornasini_reconstructible(bcn).reconstructible
    fornasini_oracle = oracle_fornasini(bcn)
    print(f"reconstructible-wpg: {_yn(recon_wpg)}")
    print(f"reconstructible-dfa: {_yn(recon_dfa)}")
    print(f"reconstructible-oracle: {_yn(recon_oracle)}")
    print(f"fornasini-wpg: {_yn(fornasini_wpg)}")
    print(f"fornasini-oracle: {_yn(fornasini_oracle)}")
    agree = (recon_wpg == recon_dfa == recon_oracle
             and fornasini_wpg == fornasini_oracle)
    print(f"agreement: {'ok' if agree else 'MISMATCH'}")
    return 0 if agree else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bcnrecon",
        description="Reconstructibility analysis for Boolean control networks "
                    "given as plain-text network files (1-based indices).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="decide reconstructibility and print witnesses")
    analyze.add_argument("file", help="network file")
    analyze.set_defaults(handler=_cmd_analyze)

    track = sub.add_parser("track", help="determine the current state from a record")
    track.add_argument("file", help="network file")
    track.add_argument("--inputs", required=True,
                       help="input word, whitespace-separated indices ('' for the empty word)")
    track.add_argument("--outputs", required=True,
                       help="output word, one letter longer than the inputs")
    track.set_defaults(handler=_cmd_track)

    export = sub.add_parser("export", help="emit a graph in DOT form")
    export.add_argument("kind", choices=["wpg", "dfa", "stg"])
    export.add_argument("file", help="network file")
    export.set_defaults(handler=_cmd_export)

    gen = sub.add_parser("gen", help="write a network file to stdout")
    gen.add_argument("family",
                     choices=["example5", "cycle-stayer", "stay-stepper", "sat", "random"])
    gen.add_argument("params", nargs="*",
                     help="cycle-stayer/stay-stepper: N; sat: n g-bits; random: N M Q seed")
    gen.set_defaults(handler=_cmd_gen)

    oracle = sub.add_parser("oracle-check",
                            help="cross-check fast deciders against brute-force oracles")
    oracle.add_argument("file", help="network file")
    oracle.set_defaults(handler=_cmd_oracle_check)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (NetworkFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NoConsistentStateError, NotHomingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
