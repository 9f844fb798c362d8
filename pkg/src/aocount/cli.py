"""Command-line front end.

Counts acyclic orientations of complete multipartite graphs, inspects the
Hamiltonian-path table or a Stirling row, and cross-verifies the production
counters against the brute-force oracles.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 capacity
error.  Structured (--json) output is a single newline-terminated object on
stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass

from . import counting, oracles
from .errors import CapacityError

EXIT_OK = 0
EXIT_VERIFY_MISMATCH = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3

MODES = ("ao", "hp", "ao-plus-edge", "verify", "stirling")

DEFAULT_VERIFY_CAP = 8
PIVOT_CHECK_SHAPES = ((6, 6, 6), (4, 5, 6, 7))


@dataclass
class RunConfig:
    """One invocation's worth of settings; parts is the raw user tuple."""

    parts: tuple[int, ...]
    mode: str = "ao"
    blocks: tuple[int, ...] | None = None
    plus_edge_part: int | None = None
    verify_cap: int = DEFAULT_VERIFY_CAP
    output_format: str = "plain"  # "plain" or "json"
    time_report: bool = False
    memory_budget_cells: int = counting.DEFAULT_MEMORY_BUDGET_CELLS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aocount",
        description=(
            "Exact counts of acyclic orientations of complete multipartite "
            "graphs, via a Hamiltonian-path lattice table convolved with "
            "Stirling numbers."
        ),
    )
    parser.add_argument(
        "--parts",
        required=True,
        metavar="N1,N2,...",
        help="comma-separated part sizes; parts of size zero are dropped",
    )
    parser.add_argument(
        "--mode",
        choices=MODES,
        default="ao",
        help="ao: orientation count (default); hp: Hamiltonian-path table; "
        "ao-plus-edge: count with one extra inner edge; verify: run oracle "
        "cross-checks; stirling: print the Stirling row for the vertex total",
    )
    parser.add_argument(
        "--blocks",
        metavar="M1,M2,...",
        help="with --mode hp: print s_m for this single block tuple",
    )
    parser.add_argument(
        "--plus-edge-part",
        type=int,
        metavar="I",
        help="with --mode ao-plus-edge: 1-based part receiving the extra edge",
    )
    parser.add_argument(
        "--verify-cap",
        type=int,
        default=DEFAULT_VERIFY_CAP,
        metavar="T",
        help="with --mode verify: total-vertex cap for the orientation-oracle "
        f"sweep (default {DEFAULT_VERIFY_CAP}; the path sweep uses T+1)",
    )
    parser.add_argument(
        "--json",
        action="store_true",
        help="emit one JSON object (counts as decimal strings) instead of plain text",
    )
    parser.add_argument(
        "--time",
        action="store_true",
        help="in plain mode, report elapsed milliseconds on stderr",
    )
    parser.add_argument(
        "--memory-cells",
        type=int,
        default=counting.DEFAULT_MEMORY_BUDGET_CELLS,
        metavar="N",
        help="largest lattice table, in cells, before giving up with a capacity error",
    )
    return parser


def _int_tuple(text: str, flag: str, parser: argparse.ArgumentParser, minimum: int):
    values = []
    for piece in text.split(","):
        try:
            value = int(piece.strip())
        except ValueError:
            parser.error(f"{flag}: {piece.strip()!r} is not an integer")
        if value < minimum:
            parser.error(f"{flag}: values must be >= {minimum}, got {value}")
        values.append(value)
    return tuple(values)


def parse_args(argv=None) -> RunConfig:
    """Parse argv into a validated RunConfig; exits with status 2 on misuse."""
    parser = build_parser()
    ns = parser.parse_args(argv)

    parts = _int_tuple(ns.parts, "--parts", parser, minimum=0)
    if not any(parts):
        parser.error("--parts: every part is zero; the graph has no vertices")
    normalized = counting.normalize_part_sizes(parts)

    blocks = None
    if ns.blocks is not None:
        if ns.mode != "hp":
            parser.error("--blocks: only valid with --mode hp")
        blocks = _int_tuple(ns.blocks, "--blocks", parser, minimum=1)
        if len(blocks) != len(normalized):
            parser.error(
                f"--blocks: expected {len(normalized)} entries matching the "
                f"normalized parts {','.join(map(str, normalized))}"
            )
        for b, n_i in zip(blocks, normalized):
            if b > n_i:
                parser.error(f"--blocks: entry {b} exceeds its part size {n_i}")

    if ns.mode == "ao-plus-edge":
        if ns.plus_edge_part is None:
            parser.error("--plus-edge-part: required with --mode ao-plus-edge")
        if not 1 <= ns.plus_edge_part <= len(normalized):
            parser.error(
                f"--plus-edge-part: must be in 1..{len(normalized)} after normalization"
            )
        if normalized[ns.plus_edge_part - 1] < 2:
            parser.error("--plus-edge-part: the chosen part needs at least two vertices")
    elif ns.plus_edge_part is not None:
        parser.error("--plus-edge-part: only valid with --mode ao-plus-edge")

    if ns.verify_cap < 1:
        parser.error("--verify-cap: must be >= 1")
    if ns.memory_cells < 1:
        parser.error("--memory-cells: must be >= 1")

    return RunConfig(
        parts=parts,
        mode=ns.mode,
        blocks=blocks,
        plus_edge_part=ns.plus_edge_part,
        verify_cap=ns.verify_cap,
        output_format="json" if ns.json else "plain",
        time_report=ns.time,
        memory_budget_cells=ns.memory_cells,
    )


def verification_checks(
    triple_cap: int = DEFAULT_VERIFY_CAP,
    hp_cap: int = DEFAULT_VERIFY_CAP + 1,
    bipartite_cap: int = 12,
    memory_budget_cells: int = counting.DEFAULT_MEMORY_BUDGET_CELLS,
) -> list[tuple[str, bool]]:
    """Cross-check the production counters against the independent oracles.

    Returns (name, passed) pairs for: the bipartite closed form against the
    lattice count, triple agreement of the orientation count with direct
    enumeration, the chromatic polynomial and block-order enumeration, the
    Hamiltonian-path table against backtracking (plus the feasibility test),
    and pivot invariance of the table fill.
    """
    checks = []

    ok = True
    for n1 in range(1, bipartite_cap + 1):
        for n2 in range(1, bipartite_cap + 1):
            lattice = counting.ao_count((n1, n2), memory_budget_cells=memory_budget_cells)
            if lattice != counting.ao_count_bipartite_closed_form(n1, n2):
                ok = False
    checks.append(("bipartite-closed-form", ok))

    ok = True
    for n in oracles.iter_part_sizes(triple_cap, 4):
        graph = oracles.make_complete_multipartite(n)
        expected = counting.ao_count(n, memory_budget_cells=memory_budget_cells)
        if expected != oracles.count_acyclic_orientations_brute(graph):
            ok = False
        if expected != oracles.count_acyclic_orientations_chromatic(graph):
            ok = False
        if expected != oracles.count_phi_brute(n):
            ok = False
    checks.append(("oracle-triple-agreement", ok))

    ok = True
    for m in oracles.iter_part_sizes(hp_cap, 4):
        brute = oracles.count_hamiltonian_paths_brute(m)
        if counting.hp_count(m, m, memory_budget_cells=memory_budget_cells) != brute:
            ok = False
        if counting.hp_feasible(m) != (brute > 0):
            ok = False
    checks.append(("hp-backtracking", ok))

    ok = True
    for shape in PIVOT_CHECK_SHAPES:
        first = counting.build_hp_table(shape, pivot_policy="first")
        last = counting.build_hp_table(shape, pivot_policy="last")
        if [v for _, v in first.cells()] != [v for _, v in last.cells()]:
            ok = False
    checks.append(("pivot-invariance", ok))

    return checks


def run(config: RunConfig) -> int:
    """Execute one configuration, print its report, return the exit status."""
    started = time.perf_counter()
    normalized = counting.normalize_part_sizes(config.parts)
    budget = config.memory_budget_cells

    result = None
    lattice_cells = 0
    checks = None
    plain_lines: list[str] = []

    if config.mode == "ao":
        result = counting.ao_count(normalized, memory_budget_cells=budget)
        lattice_cells = math.prod(normalized)
        plain_lines = [str(result)]
    elif config.mode == "hp":
        table = counting.build_hp_table(normalized, memory_budget_cells=budget)
        lattice_cells = table.lattice_cells
        if config.blocks is not None:
            result = table[config.blocks]
            plain_lines = [str(result)]
        else:
            result = table[normalized]
            plain_lines = [
                f"{','.join(map(str, m))} {value}" for m, value in table.cells()
            ]
    elif config.mode == "ao-plus-edge":
        result = counting.ao_count_plus_inner_edge(
            normalized, config.plus_edge_part, memory_budget_cells=budget
        )
        lattice_cells = math.prod(normalized)
        plain_lines = [str(result)]
    elif config.mode == "stirling":
        row_index = sum(normalized)
        row = counting.build_stirling_table(row_index).row(row_index)
        result = " ".join(str(v) for v in row)
        plain_lines = [result]
    elif config.mode == "verify":
        checks = verification_checks(
            triple_cap=config.verify_cap,
            hp_cap=config.verify_cap + 1,
            memory_budget_cells=budget,
        )
        plain_lines = [f"{'PASS' if ok else 'FAIL'} {name}" for name, ok in checks]
    else:  # unreachable through parse_args
        raise ValueError(f"unknown mode {config.mode!r}")

    elapsed_ms = round((time.perf_counter() - started) * 1000.0, 3)

    if tuple(normalized) != tuple(config.parts):
        print(
            f"note: empty parts dropped, using {','.join(map(str, normalized))}",
            file=sys.stderr,
        )

    if config.output_format == "json":
        payload = {
            "input": list(config.parts),
            "normalized": list(normalized),
            "mode": config.mode,
            "result": None if result is None else str(result),
            "lattice_cells": lattice_cells,
            "elapsed_ms": elapsed_ms,
        }
        if checks is not None:
            payload["checks"] = [
                {"name": name, "status": "pass" if ok else "fail"} for name, ok in checks
            ]
        print(json.dumps(payload))
    else:
        for line in plain_lines:
            print(line)
        if config.time_report:
            print(f"elapsed_ms={elapsed_ms}", file=sys.stderr)

    if checks is not None and not all(ok for _, ok in checks):
        return EXIT_VERIFY_MISMATCH
    return EXIT_OK


def main(argv=None) -> int:
    try:
        config = parse_args(argv)
    except SystemExit as exc:  # argparse has already written the diagnostic
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE
    try:
        return run(config)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
