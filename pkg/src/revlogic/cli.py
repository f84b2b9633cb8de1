"""Command-line front end: tables, histograms, and verification reports.

Data goes to stdout, diagnostics to stderr. Every verb grows machine-readable
output with --json. Exit codes: 0 on success and all-PASS verification, 1 on
any FAIL verdict, 2 on usage errors.
"""
from __future__ import annotations

import csv
import io
import json

import click

from . import device, library
from .derivation import Fixing, InvalidFixing, derived_connectives
from .device import DeviceConfig, ProbeState, run_histogram
from .energy import Distribution, info_loss, transfer_table
from .library import GateId, build
from .machine import (
    ConclusionVerdict,
    MachineTable,
    NormalizationId,
    coherence_check,
    verify_conclusion,
)

SEED_ENVVAR = "REVLOGIC_SEED"


def _gate(gate_id: str):
    try:
        return build(library.coerce_gate_id(gate_id))
    except library.UnknownId as exc:
        raise click.UsageError(str(exc)) from None


def _format_rows(rows, width: int) -> str:
    head_in = " ".join(f"x{j}" for j in range(1, width + 1))
    head_out = " ".join(f"x{j}'" for j in range(1, width + 1))
    lines = [f" {head_in}  ->  {head_out}"]
    for win, wout in rows:
        cin = "  ".join(str(b) for b in win.bits)
        cout = "   ".join(str(b) for b in wout.bits)
        lines.append(f" {cin}   ->  {cout}")
    return "\n".join(lines)


@click.group()
def main() -> None:
    """Reversible-logic workbench: gates, connective derivation, the
    probe-cantilever device simulator, and Landauer accounting."""


@main.group()
def gates() -> None:
    """Inspect the built-in gates."""


@gates.command("list")
def gates_list() -> None:
    for gate_id in library.all_gate_ids():
        gate = build(gate_id)
        click.echo(f"{gate_id.value:10s} width {gate.width}")


@gates.command("show")
@click.argument("gate_id")
@click.option("--json", "as_json", is_flag=True, help="Emit the JSON gate form.")
def gates_show(gate_id: str, as_json: bool) -> None:
    """Print a gate's table and its JSON serialization."""
    gate = _gate(gate_id)
    if as_json:
        click.echo(json.dumps(gate.to_json(), indent=2))
        return
    rows = [(win, gate.apply(win)) for win in gate.words()]
    click.echo(f"gate {gate.name} ({gate.width} lines)")
    click.echo(_format_rows(rows, gate.width))
    click.echo(gate.dumps())


@main.command()
@click.argument("gate_id")
@click.option("--json", "as_json", is_flag=True)
def derive(gate_id: str, as_json: bool) -> None:
    """Connectives realizable from GATE_ID by fixing ancilla lines."""
    gate = _gate(gate_id)
    result = derived_connectives(gate)
    if as_json:
        click.echo(json.dumps({
            "gate": gate.name,
            "entries": [
                {
                    "fixing": entry.fixing.label(),
                    "line": entry.line,
                    "connective": entry.connective.value,
                    "essential": list(entry.classification.essential),
                }
                for entry in result.entries
            ],
            "names": sorted(name.value for name in result.names),
        }))
        return
    click.echo(f"derived connectives of {gate.name}:")
    for entry in result.entries:
        click.echo(f"  fix {entry.fixing.label():12s} line {entry.line}  ->  "
                   f"{entry.connective.value}")
    click.echo("summary: " + ", ".join(sorted(name.value for name in result.names)))


def _device_config(sigma, distinguishable, alpha_hat1, alpha_tilde1, alpha2) -> DeviceConfig:
    defaults = DeviceConfig()
    return DeviceConfig(
        alpha_hat1=alpha_hat1 if alpha_hat1 is not None else defaults.alpha_hat1,
        alpha_tilde1=alpha_tilde1 if alpha_tilde1 is not None else defaults.alpha_tilde1,
        alpha2=alpha2 if alpha2 is not None else defaults.alpha2,
        sigma=sigma if sigma is not None else defaults.sigma,
        distinguishable=distinguishable,
    )


@main.command()
@click.option("--input", "probe_bits", required=True,
              type=click.Choice(["00", "01", "10", "11"]),
              help="Probe pair as bits: 0 = off, 1 = on; position 0 is probe 1.")
@click.option("--n", "trials", default=10_000, show_default=True)
@click.option("--seed", envvar=SEED_ENVVAR, default=0, show_default=True,
              help=f"RNG seed (env {SEED_ENVVAR}).")
@click.option("--sigma", type=float, default=None, help="Gaussian noise width.")
@click.option("--bin-width", type=float, default=device.DEFAULT_BIN_WIDTH, show_default=True)
@click.option("--distinguishable", is_flag=True,
              help="Resolve the two one-probe rest angles.")
@click.option("--alpha-hat1", type=float, default=None)
@click.option("--alpha-tilde1", type=float, default=None)
@click.option("--alpha2", type=float, default=None)
@click.option("--json", "as_json", is_flag=True,
              help="One JSON document instead of CSV + summary on stderr.")
def simulate(probe_bits, trials, seed, sigma, bin_width, distinguishable,
             alpha_hat1, alpha_tilde1, alpha2, as_json) -> None:
    """Seeded Monte Carlo histogram of device output angles."""
    if trials < 1:
        raise click.UsageError("--n must be at least 1")
    cfg = _device_config(sigma, distinguishable, alpha_hat1, alpha_tilde1, alpha2)
    ps = ProbeState.from_bits(probe_bits)
    hist = run_histogram(ps, trials, cfg, seed=seed, bin_width=bin_width)
    summary = {
        "input": probe_bits,
        "symbol": device.encode_symbolic(ps),
        "n": hist.n,
        "seed": seed,
        "mean": hist.mean,
        "stddev": hist.stddev,
        "mode_bin": list(hist.mode_bin),
        "bin_width": bin_width,
    }
    if as_json:
        summary["histogram"] = [
            {"bin_low": hist.bin_edges[i], "bin_high": hist.bin_edges[i + 1], "count": c}
            for i, c in enumerate(hist.counts)
        ]
        click.echo(json.dumps(summary))
        return
    out = io.StringIO()
    writer = csv.writer(out)
    writer.writerow(["bin_low", "bin_high", "count"])
    for i, count in enumerate(hist.counts):
        writer.writerow([f"{hist.bin_edges[i]:.6g}", f"{hist.bin_edges[i + 1]:.6g}", count])
    click.echo(out.getvalue(), nl=False)
    click.echo(json.dumps(summary), err=True)


def _print_machine_table(table: MachineTable) -> None:
    click.echo(f"normalization {table.norm.value} "
               f"(ancilla line x{table.ancilla_line}, inputs "
               + ", ".join(f"x{j}" for j in table.free_lines) + ")")
    click.echo(_format_rows(table.rows, 3))
    click.echo(f"connective: {table.connective.value}")


def _machine_json(verdict: ConclusionVerdict) -> dict:
    return {
        "normalization": verdict.norm.value,
        "gate": verdict.gate_id.value,
        "fixing": verdict.fixing.label(),
        "connective": verdict.table.connective.value,
        "expected": verdict.expected.value,
        "rows": [[str(a), str(b)] for a, b in verdict.table.rows],
        "passed": verdict.passed,
    }


@main.command("machine")
@click.option("--norm", "norm_name",
              type=click.Choice([n.value for n in NormalizationId]))
@click.option("--all", "run_all", is_flag=True, help="Check every normalization.")
@click.option("--distinguishable", is_flag=True)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def machine_cmd(ctx, norm_name, run_all, distinguishable, as_json) -> None:
    """Run the normalization machine and verify it against its gate."""
    if run_all == (norm_name is not None):
        raise click.UsageError("give exactly one of --norm or --all")
    if norm_name == NormalizationId.U4.value and not distinguishable:
        raise click.UsageError("u4 needs --distinguishable")
    # with no explicit config, verify_conclusion picks the right default per id
    cfg = DeviceConfig(distinguishable=True) if distinguishable else None
    norms = list(NormalizationId) if run_all else [NormalizationId(norm_name)]
    verdicts = [verify_conclusion(n, cfg) for n in norms]
    if as_json:
        click.echo(json.dumps([_machine_json(v) for v in verdicts]))
    else:
        for verdict in verdicts:
            _print_machine_table(verdict.table)
            status = "PASS" if verdict.passed else "FAIL"
            click.echo(f"{status}: matches {verdict.gate_id.value} with "
                       f"{verdict.fixing.label()} -> {verdict.expected.value}")
            click.echo("")
    if not all(v.passed for v in verdicts):
        ctx.exit(1)


def _parse_fix(fix_texts: tuple[str, ...]) -> dict[int, int]:
    assignments: dict[int, int] = {}
    for text in fix_texts:
        try:
            lhs, rhs = text.split("=")
            line = int(lhs.lstrip("xX"))
            bit = int(rhs)
        except ValueError:
            raise click.UsageError(f"--fix wants x<line>=<bit>, got {text!r}") from None
        if line in assignments:
            raise click.UsageError(f"line {line} fixed twice")
        assignments[line] = bit
    return assignments


@main.command("energy")
@click.option("--gate", "gate_id", required=True)
@click.option("--project", "project_line", type=int, default=None,
              help="Keep only this output line (drops the garbage).")
@click.option("--fix", "fixes", multiple=True, help="Ancilla fixing, e.g. x3=0.")
@click.option("--temp", "temperature", type=float, default=None, help="Kelvin.")
def energy_cmd(gate_id, project_line, fixes, temperature) -> None:
    """Erased bits and Landauer cost of a (possibly projected) gate table."""
    if temperature is not None and temperature <= 0:
        raise click.UsageError("--temp must be a positive temperature in kelvin")
    gate = _gate(gate_id)
    assignments = _parse_fix(fixes)
    try:
        fixing = Fixing.of(gate.width, assignments) if assignments else None
        table = transfer_table(gate, fixing, project_line)
    except (InvalidFixing, ValueError) as exc:
        raise click.UsageError(str(exc)) from None
    dist = Distribution.uniform(table.keys())
    report = info_loss(table, dist)
    payload = {"gate": gate.name, "fixing": fixing.label() if fixing else None,
               "project_line": project_line}
    payload.update(report.to_json(temperature))
    click.echo(json.dumps(payload))


def _derived_set_checks() -> list[tuple[str, bool]]:
    wanted = {
        GateId.CL: {"XOR", "OR", "NOR", "NOT", "FANOUT"},
        GateId.TOFFOLI: {"XOR", "AND", "NAND", "NOT", "FANOUT"},
        GateId.X: {"XOR", "NXOR", "NOT", "FANOUT"},
    }
    checks = []
    for gate_id, names in wanted.items():
        got = {n.value for n in derived_connectives(build(gate_id)).names}
        checks.append((f"derived-set {gate_id.value} includes "
                       f"{{{', '.join(sorted(names))}}}", names <= got))
    return checks


@main.command("verify-all")
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def verify_all(ctx, as_json) -> None:
    """Re-derive every conclusion: one PASS/FAIL line each."""
    lines: list[tuple[str, bool]] = []
    for norm in NormalizationId:
        verdict = verify_conclusion(norm)
        lines.append((
            f"conclusion {norm.value:6s} -> {verdict.gate_id.value} "
            f"{verdict.fixing.label()} -> {verdict.expected.value}",
            verdict.passed,
        ))
    coherence = coherence_check()
    lines.append(("coherence u1(out) = |u1(in) - u1(out)| at vertical start",
                  coherence.passed))
    lines.extend(_derived_set_checks())

    if as_json:
        click.echo(json.dumps([{"check": text, "passed": ok} for text, ok in lines]))
    else:
        for text, ok in lines:
            click.echo(f"{'PASS' if ok else 'FAIL'}  {text}")
    if not all(ok for _, ok in lines):
        ctx.exit(1)


if __name__ == "__main__":
    main()
