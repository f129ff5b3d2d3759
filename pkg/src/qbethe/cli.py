"""Command line: ``qbethe spectrum|pieri|verify|hamiltonian|bethe|states``.

Exit status: 0 when every gate passes, 1 when a verification gate fails,
2 for usage or configuration errors.
"""
from __future__ import annotations

import argparse
import dataclasses
import sys

from .bethe import NonConvergenceError, solve_spectrum
from .config import FORMATS, SUITES, ConfigError, RunConfig, worker_count
from .exports import (
    bethe_text,
    dumps_json,
    hamiltonian_record,
    hamiltonian_text,
    states_records,
    states_text,
    write_text,
)
from .params import ParameterDomainError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

PARAM_FLAGS = {
    "q": "q",
    "a_minus": "a-minus",
    "a_hat_minus": "a-hat-minus",
    "a_plus": "a-plus",
    "a_hat_plus": "a-hat-plus",
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with RunConfig fields (snake_case)")
    common.add_argument("--n", type=int, help="particle number")
    common.add_argument("--m", type=int, help="lattice extent (sites 0..m)")
    for attr, flag in PARAM_FLAGS.items():
        common.add_argument(f"--{flag}", dest=attr, type=float)
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument("--format", choices=FORMATS, help="output format")
    common.add_argument("--seed", type=int, help="seed of the parameter grid used by the suites")
    common.add_argument("--grid-points", dest="grid_points", type=int, help="extra grid points per suite")

    parser = argparse.ArgumentParser(prog="qbethe", description="Open q-boson chain: Bethe roots, eigenbasis and checks.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("spectrum", parents=[common], help="Bethe eigenbasis, eigen-residuals and completeness rank")
    sub.add_parser("pieri", parents=[common], help="affine Pieri rule at the Bethe roots (general and q=0)")
    verify = sub.add_parser("verify", parents=[common], help="run property suites")
    verify.add_argument("--suite", action="append", choices=SUITES + ("all",), help="suite name (repeatable)")
    sub.add_parser("hamiltonian", parents=[common], help="export the n-particle Hamiltonian")
    sub.add_parser("bethe", parents=[common], help="solve and export all Bethe roots")
    sub.add_parser("states", parents=[common], help="export the state table with weights")
    return parser


def resolve_config(args) -> RunConfig:
    cfg = RunConfig.load(args.config) if args.config else RunConfig()
    updates = {k: getattr(args, k) for k in ("n", "m", "format", "seed", "grid_points", "out") if getattr(args, k, None) is not None}
    if "out" in updates:
        updates["output"] = updates.pop("out")
    if getattr(args, "suite", None):
        updates["suites"] = tuple(args.suite)
    overrides = {k: getattr(args, k) for k in PARAM_FLAGS if getattr(args, k) is not None}
    if overrides:
        updates["params"] = dataclasses.replace(cfg.params, **overrides)
    return dataclasses.replace(cfg, **updates) if updates else cfg


def _emit(text, cfg):
    out = write_text(text, cfg.output)
    if cfg.output is None:
        sys.stdout.write(out)


def _summary(line):
    print(line, file=sys.stderr)


def cmd_spectrum(cfg: RunConfig):
    from .spectrum import compute_spectrum

    if cfg.n < 1:
        raise ConfigError("spectrum needs n >= 1")
    sp = compute_spectrum(cfg.n, cfg.m, cfg.params, cfg.tolerances.newton, cfg.max_iter, worker_count())
    record = sp.to_record()
    tol = cfg.tolerances.eigen
    gates = {
        "eigen_residual": sp.max_eigen_residual <= tol,
        "integral_residual": sp.max_integral_residual <= tol,
        "bethe_equations": sp.max_bae_residual <= tol,
    }
    if cfg.params.strict:
        gates["complete"] = sp.complete
    record["gates"] = gates
    record["passed"] = all(gates.values())
    if cfg.format == "json":
        text = dumps_json(record)
    elif cfg.format == "csv":
        text = bethe_text(record["roots"], "csv")
    else:
        raise ConfigError("spectrum supports json or csv")
    _emit(text, cfg)
    _summary(f"spectrum n={cfg.n} m={cfg.m}: rank {sp.rank}/{sp.dimension}, max eigen residual {sp.max_eigen_residual:.3e}")
    return record


def cmd_pieri(cfg: RunConfig):
    from .pieri import pieri_check

    if cfg.n < 1:
        raise ConfigError("pieri needs n >= 1")
    workers = worker_count()
    reports = [pieri_check(cfg.n, cfg.m, cfg.params, q0, cfg.tolerances.newton, workers) for q0 in (False, True)]
    tol = cfg.tolerances.eigen
    record = {
        "reports": [r.to_record() for r in reports],
        "tol": tol,
        "passed": all(r.max_residual <= tol for r in reports),
    }
    if cfg.format != "json":
        raise ConfigError("pieri reports are JSON only")
    _emit(dumps_json(record), cfg)
    _summary("pieri: " + ", ".join(f"{'q=0' if r.q0 else 'general'} {r.max_residual:.3e}" for r in reports))
    return record


def cmd_verify(cfg: RunConfig):
    from .verify import run_suites

    results = run_suites(cfg)
    record = {
        "config": cfg.to_dict(),
        "suites": [r.to_record() for r in results],
        "passed": all(r.passed for r in results),
    }
    if cfg.format != "json":
        raise ConfigError("verification reports are JSON only")
    _emit(dumps_json(record), cfg)
    for r in results:
        worst = max((c.value for c in r.checks), default=0.0)
        _summary(f"{r.name:<13} {'PASS' if r.passed else 'FAIL'}  checks={len(r.checks)} worst={worst:.3e}")
    return record


def cmd_hamiltonian(cfg: RunConfig):
    from .qboson_fock import hamiltonian_explicit, hamiltonian_from_generators

    build = hamiltonian_explicit if cfg.n >= 1 else hamiltonian_from_generators
    mat = build(cfg.n, cfg.m, cfg.params).matrix
    record = hamiltonian_record(cfg.n, cfg.m, cfg.params, mat)
    _emit(hamiltonian_text(record, cfg.format), cfg)
    record["passed"] = True
    return record


def cmd_bethe(cfg: RunConfig):
    if cfg.n < 1:
        raise ConfigError("bethe needs n >= 1")
    roots = solve_spectrum(cfg.n, cfg.m, cfg.params, cfg.tolerances.newton, cfg.max_iter, worker_count())
    records = [s.to_record() for s in roots]
    if cfg.format not in ("json", "csv"):
        raise ConfigError("bethe supports json or csv")
    _emit(bethe_text(records, cfg.format), cfg)
    ok = all(
        s.in_alcove and s.in_brackets and max(s.bae_residual, default=0.0) <= cfg.tolerances.eigen for s in roots
    )
    _summary(f"bethe n={cfg.n} m={cfg.m}: {len(roots)} roots, max BAE residual {max(max(r['bae_residual'], default=0.0) for r in records):.3e}")
    return {"passed": ok}


def cmd_states(cfg: RunConfig):
    if cfg.format not in ("json", "csv"):
        raise ConfigError("states support json or csv")
    _emit(states_text(states_records(cfg.n, cfg.m, cfg.params), cfg.format), cfg)
    return {"passed": True}


COMMANDS = {
    "spectrum": cmd_spectrum,
    "pieri": cmd_pieri,
    "verify": cmd_verify,
    "hamiltonian": cmd_hamiltonian,
    "bethe": cmd_bethe,
    "states": cmd_states,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve_config(args)
        result = COMMANDS[args.command](cfg)
    except (ConfigError, ParameterDomainError) as exc:
        print(f"qbethe: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"qbethe: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NonConvergenceError as exc:
        print(f"qbethe: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK if result.get("passed", True) else EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
