"""Command line entry point.

Subcommands::

    bddcheck verify LEFT.net RIGHT.net      equivalence check (exit 0/1/2/3)
    bddcheck simulate CIRCUIT.net           symbolic simulation stats
    bddcheck gen-tree N                     random fanout-free netlist
    bddcheck expand-bdd CIRCUIT.net         BDD-to-MUX netlist + round trip

Exit codes: 0 success/equivalent, 1 not equivalent (or round-trip
violation), 2 capacity abort, 3 usage or parse error.  All randomized
commands are reproducible from ``--seed``; every report echoes the tool
version, the seed and a hash of the effective configuration.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import __version__
from .bdd import DEFAULT_NODE_LIMIT
from .bddcircuit import expand_to_circuit, roundtrip_verify
from .circuit import dfs_variable_order
from .equivalence import EQUIVALENT, NOT_EQUIVALENT, check_equivalence
from .errors import BddCheckError, ParseError
from .generators import random_tree_circuit
from .netlist import load, serialize
from .simulate import (PolyBoundConfig, SimulationCapacityError,
                       check_poly_bound, simulate, stats_to_csv,
                       stats_to_json)

EXIT_OK = 0
EXIT_NOT_EQUIVALENT = 1
EXIT_CAPACITY = 2
EXIT_USAGE = 3


def _config_hash(cfg: dict) -> str:
    blob = json.dumps(cfg, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


def _provenance(args, **extra) -> dict:
    cfg = {
        "command": args.command,
        "order": getattr(args, "order", None),
        "capacity": getattr(args, "capacity", None),
        "seed": getattr(args, "seed", None),
        "format": getattr(args, "format", None),
        "mode": getattr(args, "mode", None),
    }
    cfg.update(extra)
    return {
        "tool": "bddcheck",
        "version": __version__,
        "seed": cfg["seed"],
        "config": cfg,
        "config_hash": _config_hash(cfg),
    }


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _resolve_order(source: str, circuit) -> list[int]:
    if source == "dfs":
        return dfs_variable_order(circuit)
    if source == "declared":
        return list(range(len(circuit.inputs)))
    if source.startswith("file:"):
        path = source[5:]
        with open(path, "r", encoding="utf-8") as fh:
            names = fh.read().split()
        index = circuit.input_index()
        if sorted(names) != sorted(circuit.inputs):
            raise BddCheckError(
                f"order file '{path}' is not a permutation of the inputs")
        return [index[name] for name in names]
    raise BddCheckError(f"unknown order source '{source}'")


def _load_or_exit(path: str):
    try:
        return load(path)
    except ParseError as exc:
        sys.stderr.write(f"{path}: {exc}\n")
        raise SystemExit(EXIT_USAGE) from None
    except OSError as exc:
        sys.stderr.write(f"{path}: {exc}\n")
        raise SystemExit(EXIT_USAGE) from None


def _cmd_verify(args) -> int:
    left = _load_or_exit(args.left)
    right = _load_or_exit(args.right)
    try:
        order = _resolve_order(args.order, left)
        outcome = check_equivalence(left, right, order,
                                    node_limit=args.capacity)
    except BddCheckError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    report = {
        "verdict": outcome.verdict,
        "counterexample": outcome.counterexample,
        "stats": {
            "created_total": outcome.stats.created_total,
            "peak_live": outcome.stats.peak_live,
            "ite_entries_total": outcome.stats.ite_entries_total,
            "order_used": list(outcome.stats.order_used),
            "completed": outcome.stats.completed,
            "failing_signal": outcome.stats.failing_signal,
        },
        "provenance": _provenance(args),
    }
    if args.format == "text":
        lines = [f"verdict: {outcome.verdict}"]
        if outcome.counterexample is not None:
            pretty = " ".join(f"{k}={v}"
                              for k, v in outcome.counterexample.items())
            lines.append(f"counterexample: {pretty}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(json.dumps(report, indent=2) + "\n", args.out)
    if outcome.verdict == EQUIVALENT:
        return EXIT_OK
    if outcome.verdict == NOT_EQUIVALENT:
        return EXIT_NOT_EQUIVALENT
    return EXIT_CAPACITY


def _cmd_simulate(args) -> int:
    circuit = _load_or_exit(args.circuit)
    code = EXIT_OK
    try:
        order = _resolve_order(args.order, circuit)
    except BddCheckError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    try:
        res = simulate(circuit, order, node_limit=args.capacity)
        stats = res.stats
    except SimulationCapacityError as exc:
        stats = exc.stats
        code = EXIT_CAPACITY
        sys.stderr.write(
            f"capacity abort while simulating '{stats.failing_signal}'\n")
    poly_report = None
    if args.poly_degree is not None:
        cfg = PolyBoundConfig(args.poly_degree, args.poly_coeff, args.poly_gap)
        poly_report = check_poly_bound(stats, cfg, outputs=set(circuit.outputs))
    if args.format == "csv":
        _emit(stats_to_csv(stats), args.out)
        if poly_report is not None:
            sys.stderr.write(_poly_text(poly_report))
    elif args.format == "text":
        text = (f"signals: {len(stats.rows)}\n"
                f"created_total: {stats.created_total}\n"
                f"peak_live: {stats.peak_live}\n"
                f"ite_entries_total: {stats.ite_entries_total}\n"
                f"completed: {stats.completed}\n")
        if poly_report is not None:
            text += _poly_text(poly_report)
        _emit(text, args.out)
    else:
        doc = stats_to_json(stats)
        doc["provenance"] = _provenance(args)
        if poly_report is not None:
            doc["poly_bound"] = {
                "passed": poly_report.passed,
                "bound": poly_report.bound,
                "n": poly_report.n,
                "checked": poly_report.checked,
                "violations": [
                    {"signal": v.signal, "size": v.size, "margin": v.margin}
                    for v in poly_report.violations
                ],
            }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return code


def _poly_text(report) -> str:
    head = (f"poly_bound: {'pass' if report.passed else 'FAIL'} "
            f"(bound {report.bound}, {report.checked} signals checked)\n")
    lines = [head]
    for v in report.violations:
        lines.append(f"  {v.signal}: size {v.size} margin {v.margin}\n")
    return "".join(lines)


def _cmd_gen_tree(args) -> int:
    circuit = random_tree_circuit(args.n, depth=args.depth, seed=args.seed)
    prov = _provenance(args, n=args.n, depth=args.depth)
    header = (f"# bddcheck {__version__} gen-tree n={args.n} "
              f"depth={args.depth} seed={args.seed} "
              f"config={prov['config_hash']}\n")
    _emit(header + serialize(circuit), args.out)
    return EXIT_OK


def _cmd_expand_bdd(args) -> int:
    circuit = _load_or_exit(args.circuit)
    try:
        order = _resolve_order(args.order, circuit)
    except BddCheckError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    try:
        res = simulate(circuit, order, node_limit=args.capacity)
    except SimulationCapacityError as exc:
        sys.stderr.write(
            f"capacity abort while simulating '{exc.stats.failing_signal}'\n")
        return EXIT_CAPACITY
    mgr = res.manager
    roots = [res.signal_bdds[po] for po in circuit.outputs]
    var_names = {i: circuit.inputs[i] for i in range(len(circuit.inputs))}
    generated, _ = expand_to_circuit(mgr, roots, args.mode, var_names)
    try:
        report = roundtrip_verify(mgr, roots, args.mode, var_names,
                                  node_limit=args.capacity)
    except SimulationCapacityError as exc:
        sys.stderr.write(
            f"capacity abort during round trip at '{exc.stats.failing_signal}'\n")
        return EXIT_CAPACITY
    doc = report.to_json()
    doc["provenance"] = _provenance(args)
    netlist_text = serialize(generated)
    if args.out:
        _emit(netlist_text, args.out)
        if args.format == "text":
            sys.stdout.write(_roundtrip_text(report))
        else:
            sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write(netlist_text)
        if args.format == "text":
            sys.stderr.write(_roundtrip_text(report))
        else:
            sys.stderr.write(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK if report.ok else EXIT_NOT_EQUIVALENT


def _roundtrip_text(report) -> str:
    lines = [f"roundtrip: {'pass' if report.ok else 'FAIL'} "
             f"(original size {report.original_size}, "
             f"max internal size {report.max_internal_size}, "
             f"created {report.created_total})\n"]
    for v in report.violations:
        lines.append(f"  node {v.node} signal {v.signal}: {v.check} {v.detail}\n")
    return "".join(lines)


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bddcheck",
        description="BDD-based combinational circuit verification toolkit")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, seed=False, mode=False):
        sp.add_argument("--order", default="dfs",
                        help="variable order source: dfs, declared, or file:PATH")
        sp.add_argument("--capacity", type=int, default=DEFAULT_NODE_LIMIT,
                        help="node limit (default 2^26)")
        sp.add_argument("--format", choices=("json", "csv", "text"),
                        default="json")
        sp.add_argument("--out", default=None, help="output path (default stdout)")
        if seed:
            sp.add_argument("--seed", type=int, default=0)
        if mode:
            sp.add_argument("--mode", choices=("mux", "gates"), default="mux")

    sp = sub.add_parser("verify", help="check two netlists for equivalence")
    sp.add_argument("left")
    sp.add_argument("right")
    common(sp)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("simulate", help="symbolically simulate a netlist")
    sp.add_argument("circuit")
    common(sp)
    sp.add_argument("--poly-degree", type=int, default=None)
    sp.add_argument("--poly-coeff", type=float, default=1.0)
    sp.add_argument("--poly-gap", type=int, default=1)
    sp.set_defaults(func=_cmd_simulate)

    sp = sub.add_parser("gen-tree", help="emit a random fanout-free netlist")
    sp.add_argument("n", type=int)
    sp.add_argument("--depth", type=int, default=0)
    common(sp, seed=True)
    sp.set_defaults(func=_cmd_gen_tree)

    sp = sub.add_parser("expand-bdd",
                        help="expand a netlist's output BDDs into a MUX netlist")
    sp.add_argument("circuit")
    common(sp, mode=True)
    sp.set_defaults(func=_cmd_expand_bdd)
    return p


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except BddCheckError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
