"""Command-line frontend.

Subcommands
-----------
relations   print the commutator table of the configured algebra
verify      run the verification suites; exit status 0 iff all checks pass
center      compute the central generators and print/save them as JSON
blocks      partition a weight sample by central character
charp       rank-one prime-characteristic suite for a given p and c(h)

A JSON config file may mirror any flag (--config); explicit flags win.
All numeric I/O is exact strings ("p/q"), never floating point.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from . import center as center_mod
from . import charp as charp_mod
from . import rep
from .deform import DeformationParams, pairing_from_params
from .pbw import (
    AlgebraSpec,
    anti_involution,
    check_ctable_equivariance,
    check_pbw_consistency,
    nc_from_json,
    nc_to_json,
)
from .polyring import hessian_identity_check, lambda_identity_check
from .scalars import field_of_characteristic


@dataclass
class RunConfig:
    command: str
    n: int = 1
    characteristic: int = 0
    b: tuple = ("1",)
    maxdeg: int = 3
    center_bound: int | None = None
    verma_depth: int | None = None
    weights_path: str | None = None
    ctable_path: str | None = None
    fmt: str = "text"
    out: str | None = None
    p: int | None = None
    c: tuple = ()

    def __post_init__(self):
        if self.maxdeg < 3:
            raise ValueError("--maxdeg must be >= 3")
        if not self.b:
            raise ValueError("--b must be nonempty")
        if self.n < 1:
            raise ValueError("--n must be >= 1")


def _build_spec(config: RunConfig):
    """The algebra under test plus its parameters (None for a ctable file)."""
    if config.ctable_path:
        with open(config.ctable_path) as fh:
            data = json.load(fh)
        fld = field_of_characteristic(int(data["char"]))
        spec = AlgebraSpec(int(data["n"]), fld, {})
        table = {}
        for key, el_json in data["ctable"].items():
            i, j = (int(x) for x in key.split(","))
            table[(i, j)] = nc_from_json(el_json, spec, renormalize=True)
        return AlgebraSpec(int(data["n"]), fld, table), None
    params = DeformationParams(
        n=config.n, characteristic=config.characteristic, b=config.b
    )
    return pairing_from_params(params), params


# ---------------------------------------------------------------------------
# Verification suites.
# ---------------------------------------------------------------------------


class CheckResult:
    def __init__(self, name, passed, seconds, detail=""):
        self.name = name
        self.passed = passed
        self.seconds = seconds
        self.detail = detail


def _run_checks(checks):
    """Run named thunks; each returns (passed, detail).  Report order is
    fixed (sorted by name) regardless of execution order."""
    results = []
    for name, thunk in checks:
        start = time.monotonic()
        try:
            passed, detail = thunk()
        except Exception as exc:  # a crashed check is a failed check
            passed, detail = False, f"error: {exc}"
        results.append(CheckResult(name, passed, time.monotonic() - start, detail))
    results.sort(key=lambda r: r.name)
    return results


def _structural_checks(config: RunConfig, spec):
    checks = []

    def pbw_check():
        report = check_pbw_consistency(spec, config.maxdeg)
        return report.ok, repr(report)

    checks.append(("pbw_consistency", pbw_check))
    checks.append(
        ("ctable_equivariance", lambda: (check_ctable_equivariance(spec), ""))
    )

    def anti_symmetry():
        for i in range(1, spec.n + 1):
            for j in range(1, spec.n + 1):
                if anti_involution(spec.pairing(i, j), spec) != spec.pairing(j, i):
                    return False, f"fails at ({i},{j})"
        return True, ""

    checks.append(("ctable_anti_involution", anti_symmetry))

    def hessian():
        bad = [
            (k, r.failures)
            for k in range(1, spec.n + 1)
            if not (r := hessian_identity_check(spec.n, k, spec.field)).ok
        ]
        return not bad, str(bad) if bad else ""

    checks.append(("hessian_identity", hessian))

    def invariants():
        report = center_mod.symmetrized_invariants_check(spec.n, field=spec.field)
        return report.ok, repr(report)

    if spec.characteristic == 0 or spec.characteristic > spec.n + 1:
        checks.append(("symmetrized_invariants", invariants))
    return checks


def _dependent_checks(config: RunConfig, spec, params):
    """Checks that presuppose a consistent PBW deformation."""
    checks = []
    if spec.characteristic == 0:
        state = {}

        def solve():
            state["cset"] = center_mod.central_generators(
                spec, d0=config.center_bound, params=params
            )
            return True, f"degree bounds {state['cset'].degree_bounds}"

        def pairwise():
            cset = state["cset"]
            from .pbw import commutator

            for a in range(spec.n):
                for b in range(a + 1, spec.n):
                    if commutator(cset.etas[a], cset.etas[b], spec):
                        return False, f"eta_{a+1}, eta_{b+1} do not commute"
            return True, ""

        def fixed_by_anti():
            cset = state["cset"]
            bad = [
                i + 1
                for i, eta in enumerate(cset.etas)
                if anti_involution(eta, spec) != eta
            ]
            return not bad, str(bad) if bad else ""

        def filtration_match():
            from .pbw import filtration_degree

            cset = state["cset"]
            for i, eta in enumerate(cset.etas, start=1):
                diff = eta - center_mod.t_element(i, spec)
                if diff and filtration_degree(diff) != 0:
                    return False, f"eta_{i} - t_{i} leaves U(gl_n)"
            return True, ""

        def uniqueness():
            cset = state["cset"]
            bad = [
                i
                for i in range(1, spec.n + 1)
                if not center_mod.uniqueness_relation_check(i, spec, cset)
            ]
            return not bad, str(bad) if bad else ""

        def characters():
            cset = state["cset"]
            fld = spec.field
            probe = [tuple(fld(k + i) for i in range(spec.n)) for k in range(3)]
            for lam in probe:
                chi = rep.central_character(lam, spec, cset)
                expected = tuple(
                    -rep.hc_evaluate(c, lam, spec) for c in cset.corrections
                )
                if chi != expected:
                    return False, f"character mismatch at {lam}"
            return True, ""

        checks.append(("center_solve", solve))
        checks.append(("center_pairwise_commute", pairwise))
        checks.append(("center_fixed_by_anti_involution", fixed_by_anti))
        checks.append(("center_filtration_match", filtration_match))
        checks.append(("center_uniqueness_relation", uniqueness))
        checks.append(("verma_character_consistency", characters))

        if params is not None and params.m >= 1:
            checks.append(
                (
                    "gf_lambda_identity",
                    lambda: (
                        lambda_identity_check(spec.n, params.m, spec.field),
                        "",
                    ),
                )
            )

            def top_symbol():
                cset = state["cset"]
                bad = [
                    i
                    for i in range(1, spec.n + 1)
                    if not center_mod.top_symbol_crosscheck(i, spec, cset)
                ]
                return not bad, str(bad) if bad else ""

            checks.append(("center_top_symbol", top_symbol))
    else:
        def p_center():
            report = charp_mod.p_center_check(spec)
            failing = sorted(k for k, v in report.central.items() if not v)
            return report.ok, str(failing) if failing else ""

        checks.append(("p_center", p_center))
    return checks


# ---------------------------------------------------------------------------
# Commands.
# ---------------------------------------------------------------------------


def cmd_relations(config: RunConfig):
    spec, _ = _build_spec(config)
    table = {
        f"{i},{j}": nc_to_json(spec.pairing(i, j), spec)
        for i in range(1, spec.n + 1)
        for j in range(1, spec.n + 1)
    }
    payload = {"n": spec.n, "char": spec.characteristic, "ctable": table}
    if config.fmt == "text":
        lines = [
            f"[Y({i}), X({j})] = {spec.pairing(i, j)!r}"
            for i in range(1, spec.n + 1)
            for j in range(1, spec.n + 1)
        ]
        return 0, "\n".join(lines)
    return 0, json.dumps(payload, indent=2)


def cmd_verify(config: RunConfig):
    spec, params = _build_spec(config)
    results = _run_checks(_structural_checks(config, spec))
    if all(r.passed for r in results):
        results += _run_checks(_dependent_checks(config, spec, params))
        results.sort(key=lambda r: r.name)
    ok = all(r.passed for r in results)
    if config.fmt == "json":
        payload = [
            {
                "name": r.name,
                "pass": r.passed,
                "seconds": round(r.seconds, 4),
                "detail": r.detail,
            }
            for r in results
        ]
        text = json.dumps({"ok": ok, "checks": payload}, indent=2)
    else:
        lines = [
            f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.seconds:.2f}s)"
            + (f"  {r.detail}" if r.detail and not r.passed else "")
            for r in results
        ]
        lines.append(f"{'ALL CHECKS PASSED' if ok else 'FAILURES PRESENT'}")
        text = "\n".join(lines)
    return (0 if ok else 1), text


def cmd_center(config: RunConfig):
    spec, params = _build_spec(config)
    if spec.characteristic != 0:
        raise ValueError("center computation is supported in characteristic 0")
    cset = center_mod.central_generators(
        spec, d0=config.center_bound, params=params
    )
    payload = center_mod.central_set_to_json(cset, spec)
    return 0, json.dumps(payload, indent=2)


def cmd_blocks(config: RunConfig):
    if not config.weights_path:
        raise ValueError("blocks requires --weights file.json")
    spec, params = _build_spec(config)
    with open(config.weights_path) as fh:
        sample = json.load(fh)
    cset = center_mod.central_generators(spec, d0=config.center_bound, params=params)
    partition = rep.block_partition(sample, spec, cset)
    payload = rep.blocks_to_json(partition, spec)
    return 0, json.dumps(payload, indent=2)


def cmd_charp(config: RunConfig):
    if config.p is None:
        raise ValueError("charp requires --p")
    g = charp_mod.Gl1Spec(p=config.p, c_coeffs=config.c)
    report = charp_mod.gl1_p_center_check(g)
    rank = charp_mod.z0_rank_check(g)
    payload = {
        "p": g.p,
        "c": [g.field.to_str(v) for v in g.c_coeffs],
        "central": dict(sorted(report.central.items())),
        "rank": rank,
    }
    ok = report.ok and rank == g.p**3
    return (0 if ok else 1), json.dumps(payload, indent=2)


COMMANDS = {
    "relations": cmd_relations,
    "verify": cmd_verify,
    "center": cmd_center,
    "blocks": cmd_blocks,
    "charp": cmd_charp,
}


def _parser():
    parser = argparse.ArgumentParser(
        prog="icherednik",
        description="Exact engine for infinitesimal Cherednik algebras of gl(n).",
    )
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--config", help="JSON file mirroring the flags")
    parser.add_argument("--n", type=int)
    parser.add_argument("--char", type=int)
    parser.add_argument("--b", help="comma-separated deformation vector, e.g. '0,1'")
    parser.add_argument("--maxdeg", type=int)
    parser.add_argument("--center-bound", type=int, dest="center_bound")
    parser.add_argument("--verma-depth", type=int, dest="verma_depth")
    parser.add_argument("--weights", dest="weights_path", help="JSON weight sample")
    parser.add_argument("--ctable", dest="ctable_path", help="JSON commutator table")
    parser.add_argument("--format", dest="fmt", choices=["json", "text"])
    parser.add_argument("--out", help="write the report to this path")
    parser.add_argument("--p", type=int, help="prime for the charp suite")
    parser.add_argument("--c", help="comma-separated c(h) coefficients over F_p")
    return parser


def _merge_config(args) -> RunConfig:
    settings = {}
    if args.config:
        with open(args.config) as fh:
            settings.update(json.load(fh))
    overrides = {
        "n": args.n,
        "characteristic": args.char,
        "b": tuple(args.b.split(",")) if args.b else None,
        "maxdeg": args.maxdeg,
        "center_bound": args.center_bound,
        "verma_depth": args.verma_depth,
        "weights_path": args.weights_path,
        "ctable_path": args.ctable_path,
        "fmt": args.fmt,
        "out": args.out,
        "p": args.p,
        "c": tuple(args.c.split(",")) if args.c else None,
    }
    for key, value in overrides.items():
        if value is not None:
            settings[key] = value
    if "b" in settings:
        settings["b"] = tuple(settings["b"])
    if "c" in settings:
        settings["c"] = tuple(settings["c"])
    settings.pop("command", None)
    known = {f.name for f in RunConfig.__dataclass_fields__.values()} - {"command"}
    unknown = set(settings) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    return RunConfig(command=args.command, **settings)


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        config = _merge_config(args)
        code, text = COMMANDS[config.command](config)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
