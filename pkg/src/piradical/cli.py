"""Experiment runner: reproducible width/radical computations as reports.

Every subcommand assembles an :class:`ExperimentReport` — the echoed inputs,
a flat list of result records, and provenance (version, seed, budgets, wall
time) — and renders it as text, JSON, or CSV.  Result records are plain
JSON scalars/arrays, so the JSON and CSV renderings of one run carry
identical records; re-running with the echoed inputs reproduces the report
bit-identically except for the wall-time field.

Exit codes: 0 success; 1 a verified mathematical invariant failed (an
implementation bug, never an input problem); 2 input/validation errors;
3 budget exhaustion or a sampled (non-exhaustive) sweep.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .catalog import (
    alternating_group,
    automorphism_by_name,
    catalog_groups,
    group_by_name,
    load_spec,
    prime_order_class_representatives,
    projective_semilinear_9,
    socle_by_name,
)
from .errors import BudgetExhausted, InvariantViolation, PiradicalError
from .factored import is_prime
from .groups import PermGroup
from .perms import Permutation
from .structure import PrimeSet, normal_subgroups, pi_radical
from .width import (
    AlmostSimpleContext,
    GroupClassData,
    SearchBudget,
    alpha,
    baer_suzuki_check,
    beta,
    bs_membership,
    minimal_membership_width,
    transposition_pi_sweep,
)


class _InputError(Exception):
    """Invalid user input (bad name, unreadable spec, missing flag)."""


# ---------------------------------------------------------------------------
# reports


def csv_cell(value) -> str:
    """Canonical CSV rendering of a JSON value: None -> empty, booleans in
    JSON spelling, containers as compact JSON."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, float, str)):
        return str(value)
    return json.dumps(value, separators=(",", ":"))


@dataclass
class ExperimentReport:
    experiment: str
    inputs: dict
    results: list[dict]
    summary: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(
            {
                "experiment": self.experiment,
                "inputs": self.inputs,
                "summary": self.summary,
                "results": self.results,
                "provenance": self.provenance,
            },
            indent=2,
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        for key, value in [("experiment", self.experiment)] + sorted(
            self.inputs.items()
        ) + sorted(self.summary.items()):
            buf.write(f"# {key}={csv_cell(value)}\n")
        header: list[str] = []
        for rec in self.results:
            for k in rec:
                if k not in header:
                    header.append(k)
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for rec in self.results:
            writer.writerow([csv_cell(rec.get(k)) for k in header])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"experiment: {self.experiment}"]
        for k, v in self.inputs.items():
            lines.append(f"  {k} = {csv_cell(v)}")
        if self.summary:
            lines.append("summary:")
            for k, v in self.summary.items():
                lines.append(f"  {k} = {csv_cell(v)}")
        if self.results:
            lines.append(f"records ({len(self.results)}):")
            for rec in self.results:
                lines.append(
                    "  " + "  ".join(f"{k}={csv_cell(v)}" for k, v in rec.items())
                )
        prov = ", ".join(f"{k}={csv_cell(v)}" for k, v in self.provenance.items())
        lines.append(f"provenance: {prov}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        text = {"json": self.to_json, "csv": self.to_csv, "text": self.to_text}[fmt]()
        return text if text.endswith("\n") else text + "\n"


def _provenance(args, t0: float) -> dict:
    return {
        "package": "piradical",
        "version": __version__,
        "seed": getattr(args, "seed", 0),
        "budget_max_width": getattr(args, "budget_max_width", None),
        "budget_max_states": getattr(args, "budget_max_states", None),
        "budget_max_class": getattr(args, "budget_max_class", None),
        "wall_time_s": round(time.monotonic() - t0, 3),
    }


def _emit(report: ExperimentReport, args) -> None:
    text = report.render(args.format)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# shared flag groups and input resolution


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", type=str, default=None, help="write the report to a file")


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-max-width", type=int, default=12)
    p.add_argument("--budget-max-states", type=int, default=100_000)
    p.add_argument("--budget-max-class", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)


def _add_group_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--group", help="catalog name: S5, A6, D8, psl2(7), pgammal2(9), ...")
    p.add_argument("--spec", help="path to a group-spec file")


def _budget(args) -> SearchBudget:
    return SearchBudget(
        max_width=args.budget_max_width,
        max_states=args.budget_max_states,
        max_class_size=args.budget_max_class,
        seed=args.seed,
    )


def _resolve_group(args) -> tuple[str, PermGroup, "object"]:
    """(name, group, spec-or-None), mapping all load problems to _InputError."""
    try:
        if getattr(args, "spec", None):
            spec = load_spec(args.spec)
            return spec.name, spec.group(), spec
        if getattr(args, "group", None):
            return args.group, group_by_name(args.group), None
    except (PiradicalError, ValueError, OSError) as e:
        raise _InputError(str(e))
    raise _InputError("one of --group or --spec is required")


def _resolve_context(args, budget: SearchBudget) -> tuple[str, AlmostSimpleContext]:
    try:
        if getattr(args, "spec", None):
            spec = load_spec(args.spec)
            socle = spec.socle()
            if socle is None:
                raise _InputError(f"{args.spec} has no 'socle' line")
            aut = (
                Permutation.parse(args.aut, degree=socle.degree)
                if args.aut
                else spec.aut()
            )
            if aut is None:
                raise _InputError("no automorphism: pass --aut or add an 'aut' line")
            name = spec.name
        else:
            if not getattr(args, "group", None):
                raise _InputError("one of --group or --spec is required")
            if not args.aut:
                raise _InputError("--aut is required with --group")
            socle = socle_by_name(args.group)
            aut = automorphism_by_name(args.aut, socle.degree)
            name = args.group
    except _InputError:
        raise
    except (PiradicalError, ValueError, OSError) as e:
        raise _InputError(str(e))
    try:
        return name, AlmostSimpleContext.build(socle, aut, budget=budget)
    except InvariantViolation:
        raise
    except (PiradicalError, ValueError) as e:
        raise _InputError(str(e))


def _resolve_pi(args, spec) -> PrimeSet:
    if getattr(args, "pi", None):
        try:
            return PrimeSet.parse(args.pi)
        except ValueError as e:
            raise _InputError(str(e))
    if spec is not None and spec.pi is not None:
        return spec.pi
    raise _InputError("--pi is required (or a 'pi' line in the spec file)")


def _width_record(res) -> dict:
    """Flatten a WidthResult into a JSON-scalar record (certificate schema)."""
    return {
        "value": res.value,
        "witness": [str(w) for w in res.witness] if res.witness else None,
        "members": [str(m) for m in res.members] if res.members else None,
        "certificate_order": str(res.certificate_order)
        if res.certificate_order
        else None,
        "explored_width": res.explored_width,
        "saturated": res.saturated,
        "exhaustive": res.exhaustive,
        "states_visited": res.states_visited,
    }


# ---------------------------------------------------------------------------
# subcommands


def cmd_radical(args) -> int:
    t0 = time.monotonic()
    name, G, spec = _resolve_group(args)
    pi = _resolve_pi(args, spec)
    radical = pi_radical(G, pi)
    crosscheck = "skipped"
    if G.order_int <= args.crosscheck_cap:
        # independent route: the largest pi-member of the full normal
        # subgroup lattice must be the radical itself
        best = max(
            (N for N in normal_subgroups(G) if all(p in pi for p in N.order.prime_support)),
            key=lambda N: N.order_int,
        )
        if not best.same_group_as(radical):
            raise InvariantViolation(
                f"radical(order {radical.order_int}) disagrees with the normal-"
                f"subgroup lattice maximum (order {best.order_int})"
            )
        crosscheck = "agrees"
    report = ExperimentReport(
        experiment="radical",
        inputs={"group": name, "pi": str(pi), "crosscheck_cap": args.crosscheck_cap},
        results=[
            {
                "group": name,
                "group_order": G.order_int,
                "pi": str(pi),
                "radical_order": str(radical.order),
                "radical_order_int": radical.order_int,
                "radical_generators": [str(g) for g in radical.generators],
                "crosscheck": crosscheck,
            }
        ],
        summary={"radical_order_int": radical.order_int},
        provenance=_provenance(args, t0),
    )
    _emit(report, args)
    return 0


def _run_width(args, kind: str) -> int:
    t0 = time.monotonic()
    budget = _budget(args)
    name, ctx = _resolve_context(args, budget)
    if kind == "alpha":
        res = alpha(ctx, budget)
    else:
        res = beta(ctx, args.r, budget)
    record = {
        "socle": name,
        "socle_order": ctx.socle.order_int,
        "ambient_order": ctx.ambient.order_int,
        "aut": str(ctx.element),
        "class_size": len(ctx.conjugates),
    }
    if kind == "beta":
        record["r"] = args.r
    record.update(_width_record(res))
    record["revalidated"] = res.revalidate() if res.value is not None else None
    report = ExperimentReport(
        experiment=kind,
        inputs={
            "group": getattr(args, "group", None),
            "spec": getattr(args, "spec", None),
            "aut": args.aut,
            **({"r": args.r} if kind == "beta" else {}),
            "seed": args.seed,
        },
        results=[record],
        summary={"value": res.value, "exhaustive": res.exhaustive},
        provenance=_provenance(args, t0),
    )
    _emit(report, args)
    if res.value is None and not (res.exhaustive and res.saturated):
        return 3  # could not certify absence within budget
    return 0


def cmd_alpha(args) -> int:
    return _run_width(args, "alpha")


def cmd_beta(args) -> int:
    return _run_width(args, "beta")


def cmd_bs_check(args) -> int:
    t0 = time.monotonic()
    budget = _budget(args)
    name, G, spec = _resolve_group(args)
    pi = _resolve_pi(args, spec)
    if args.m < 1:
        raise _InputError(f"--m must be >= 1, got {args.m}")
    data = GroupClassData(G)
    res = bs_membership(G, pi, args.m, budget=budget, data=data)
    records = [
        {
            "representative": str(r.representative),
            "class_size": r.class_size,
            "in_radical": r.in_radical,
            "violation_width": r.violation_width,
            "witness": [str(w) for w in r.witness] if r.witness else None,
            "witness_order": str(r.witness_order) if r.witness_order else None,
            "exhaustive": r.exhaustive,
            "states_visited": r.states_visited,
        }
        for r in res.records
    ]
    summary = {
        "holds": res.holds,
        "m": args.m,
        "violating_element": str(res.violating_element)
        if res.violating_element
        else None,
        "radical_order": str(res.radical_order),
        "exhaustive": res.exhaustive,
    }
    if args.find_min:
        m_min, per_rep = minimal_membership_width(G, pi, budget=budget, data=data)
        summary["minimal_m"] = m_min
        summary["minimal_m_per_class"] = {str(rep): w for rep, w in per_rep}
    report = ExperimentReport(
        experiment="bs-check",
        inputs={"group": name, "pi": str(pi), "m": args.m, "seed": args.seed},
        results=records,
        summary=summary,
        provenance=_provenance(args, t0),
    )
    _emit(report, args)
    return 0


def cmd_transposition_sweep(args) -> int:
    t0 = time.monotonic()
    r = args.r
    if not is_prime(r) or r < 3:
        raise _InputError(f"--r must be an odd prime >= 3, got {r}")
    sample = args.sample
    if r > 7 and sample is None:
        sample = 20_000  # full exhaustion is out of reach; sample and say so
    rep = transposition_pi_sweep(r, sample=sample, seed=args.seed)
    report = ExperimentReport(
        experiment="transposition-sweep",
        inputs={"r": r, "sample": sample, "seed": args.seed},
        results=[
            {
                "r": rep.r,
                "pi": str(rep.pi),
                "subset_width": rep.r - 2,
                "subsets_checked": rep.subsets_checked,
                "all_small_subsets_pi": rep.all_small_subsets_pi,
                "witness_subset": [str(t) for t in rep.witness_subset],
                "witness_order": str(rep.witness_order),
                "radical_order": str(rep.radical_order),
                "crosschecks": rep.crosschecks,
                "exhaustive": rep.exhaustive,
                "implied_lower_bound": rep.implied_lower_bound,
            }
        ],
        summary={
            "all_small_subsets_pi": rep.all_small_subsets_pi,
            "exhaustive": rep.exhaustive,
            "implied_lower_bound": rep.implied_lower_bound,
        },
        provenance=_provenance(args, t0),
    )
    _emit(report, args)
    if not rep.all_small_subsets_pi:
        return 1  # contradicts the certified small-subset property: a bug
    return 0 if rep.exhaustive else 3


def _parse_n_range(text: str) -> list[int]:
    if "-" in text:
        a, b = text.split("-", 1)
        lo, hi = int(a), int(b)
    else:
        lo = hi = int(text)
    if not 5 <= lo <= hi <= 9:
        raise _InputError(f"--n must lie within 5..9, got {text!r}")
    return list(range(lo, hi + 1))


def cmd_width_table(args) -> int:
    t0 = time.monotonic()
    budget = _budget(args)
    try:
        ns = _parse_n_range(args.n)
        r_given = (
            [int(tok) for tok in args.r.split(",")] if args.r else None
        )
    except ValueError as e:
        raise _InputError(str(e))
    if r_given is not None:
        for r in r_given:
            if not is_prime(r) or r == 2:
                raise _InputError(f"--r entries must be odd primes, got {r}")
    records: list[dict] = []
    any_unknown = False
    any_violation = False

    def run_cell(label: str, ctx: AlmostSimpleContext, r: int, expected: str) -> None:
        nonlocal any_unknown, any_violation
        res = beta(ctx, r, budget)
        if res.value is None:
            ok = None
            any_unknown = True
        elif expected == "eq-r-1":
            ok = res.value == r - 1
        elif expected == "eq-3":
            ok = res.value == 3
        else:
            ok = res.value <= r - 1
        if ok is False:
            any_violation = True
        rec = {
            "socle": label,
            "aut": str(ctx.element),
            "aut_order": ctx.element.order(),
            "r": r,
            "beta": res.value,
            "expected": {"eq-r-1": "= r-1", "eq-3": "= 3", "le-r-1": "<= r-1"}[
                expected
            ],
            "bound_ok": ok,
            "exhaustive": res.exhaustive,
            "witness": [str(w) for w in res.witness] if res.witness else None,
            "certificate_order": str(res.certificate_order)
            if res.certificate_order
            else None,
        }
        if args.include_alpha:
            a = alpha(ctx, budget)
            rec["alpha"] = a.value
            if res.value is not None and a.value is not None and res.value > a.value:
                raise InvariantViolation(
                    f"beta {res.value} exceeds alpha {a.value} for {label}, "
                    f"x={ctx.element}, r={r}"
                )
        records.append(rec)

    for n in ns:
        socle = alternating_group(n)
        r_list = r_given if r_given is not None else [
            p for p in range(3, n + 1) if is_prime(p)
        ]
        r_list = [r for r in r_list if r <= n]
        for x, p, _k in prime_order_class_representatives(n):
            ctx = AlmostSimpleContext.build(socle, x, budget=budget)
            for r in r_list:
                expected = "eq-r-1" if x.is_transposition() else "le-r-1"
                run_cell(f"A{n}", ctx, r, expected)
        if n == 6:
            pg = projective_semilinear_9()
            ctx = AlmostSimpleContext.build(
                pg.socle, pg.involution_outside_s6, budget=budget
            )
            for r in [r for r in r_list if r in (3, 5)]:
                run_cell("A6:pgammal", ctx, r, "eq-3" if r == 3 else "le-r-1")

    report = ExperimentReport(
        experiment="width-table",
        inputs={
            "n": args.n,
            "r": args.r,
            "include_alpha": args.include_alpha,
            "seed": args.seed,
        },
        results=records,
        summary={
            "cells": len(records),
            "violations": sum(1 for rec in records if rec["bound_ok"] is False),
            "unknown": sum(1 for rec in records if rec["bound_ok"] is None),
        },
        provenance=_provenance(args, t0),
    )
    _emit(report, args)
    if any_violation:
        return 1
    if any_unknown:
        return 3
    return 0


def cmd_verify_bs(args) -> int:
    t0 = time.monotonic()
    budget = _budget(args)
    name, G, spec = _resolve_group(args)
    if args.p is not None and not is_prime(args.p):
        raise _InputError(f"--p must be prime, got {args.p}")
    primes = [args.p] if args.p is not None else sorted(G.order.prime_support)
    if not primes:
        raise _InputError("the trivial group has no primes to verify")
    data = GroupClassData(G)
    records: list[dict] = []
    for p in primes:
        rep = baer_suzuki_check(G, p, budget=budget, data=data)
        for r in rep.records:
            records.append(
                {
                    "group": name,
                    "p": p,
                    "representative": str(r.representative),
                    "in_radical": r.in_radical,
                    "all_pairs_p_groups": r.all_pairs_p_groups,
                    "witness_pair": [str(w) for w in r.witness_pair]
                    if r.witness_pair
                    else None,
                    "witness_order": str(r.witness_order)
                    if r.witness_order
                    else None,
                    "radical_order": str(rep.radical_order),
                }
            )
    report = ExperimentReport(
        experiment="verify-bs",
        inputs={"group": name, "p": args.p, "seed": args.seed},
        results=records,
        summary={"consistent": True, "primes": primes},
        provenance=_provenance(args, t0),
    )
    _emit(report, args)
    return 0


def cmd_verify_bs_sweep(args) -> int:
    t0 = time.monotonic()
    budget = _budget(args)
    records: list[dict] = []
    for entry in catalog_groups(max_order=args.order_cap):
        G = entry.group
        if G.order_int == 1:
            continue
        data = GroupClassData(G)
        for p in sorted(G.order.prime_support):
            rep = baer_suzuki_check(G, p, budget=budget, data=data)
            records.append(
                {
                    "group": entry.name,
                    "order": G.order_int,
                    "p": p,
                    "classes_checked": len(rep.records),
                    "radical_order": str(rep.radical_order),
                    "consistent": rep.consistent,
                }
            )
    report = ExperimentReport(
        experiment="verify-bs-sweep",
        inputs={"order_cap": args.order_cap, "seed": args.seed},
        results=records,
        summary={"groups_and_primes": len(records), "consistent": True},
        provenance=_provenance(args, t0),
    )
    _emit(report, args)
    return 0


# ---------------------------------------------------------------------------
# parser assembly


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="piradical",
        description="Exact width and radical experiments on small permutation groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radical", help="largest normal subgroup with order support in pi")
    _add_group_flags(p)
    p.add_argument("--pi", help='prime set: "2,3" or "all-except:5"')
    p.add_argument(
        "--crosscheck-cap",
        type=int,
        default=10_000,
        help="verify against the full normal-subgroup lattice up to this group order",
    )
    _add_budget_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_radical)

    p = sub.add_parser("alpha", help="minimal conjugates of --aut generating <socle, aut>")
    _add_group_flags(p)
    p.add_argument("--aut", help='cycles like "(1 2)", or outer-involution / field-involution')
    _add_budget_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser(
        "beta", help="minimal conjugates of --aut generating order divisible by --r"
    )
    _add_group_flags(p)
    p.add_argument("--aut", help='cycles like "(1 2)", or outer-involution / field-involution')
    p.add_argument("--r", type=int, required=True, help="a prime")
    _add_budget_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_beta)

    p = sub.add_parser(
        "bs-check", help="does width m separate the radical from its complement?"
    )
    _add_group_flags(p)
    p.add_argument("--pi", help='prime set: "2,3" or "all-except:5"')
    p.add_argument("--m", type=int, required=True)
    p.add_argument(
        "--find-min",
        action="store_true",
        help="also compute the least m for which the test holds",
    )
    _add_budget_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_bs_check)

    p = sub.add_parser(
        "transposition-sweep",
        help="sweep (r-2)-subsets of transpositions of Sym(r) for pi = primes below r",
    )
    p.add_argument("--r", type=int, required=True, help="an odd prime")
    p.add_argument(
        "--sample",
        type=int,
        default=None,
        help="check a seeded sample instead of all subsets (forced above r = 7)",
    )
    _add_budget_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_transposition_sweep)

    p = sub.add_parser(
        "width-table",
        help="tabulate beta over prime-order class representatives for Alt(n) socles",
    )
    p.add_argument("--n", required=True, help='degree or range: "6" or "5-8"')
    p.add_argument("--r", help='comma-separated odd primes; default: all odd primes <= n')
    p.add_argument("--include-alpha", action="store_true")
    _add_budget_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_width_table)

    p = sub.add_parser(
        "verify-bs", help="pairwise-generation criterion for the p-radical, one group"
    )
    _add_group_flags(p)
    p.add_argument("--p", type=int, default=None, help="a prime; default: all dividing |G|")
    _add_budget_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_verify_bs)

    p = sub.add_parser(
        "verify-bs-sweep",
        help="pairwise-generation criterion across the whole catalog",
    )
    p.add_argument("--order-cap", type=int, default=2000)
    _add_budget_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_verify_bs_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except BudgetExhausted as e:
        print(f"budget exhausted: {e}", file=sys.stderr)
        return 3
    except InvariantViolation as e:
        print(f"INVARIANT VIOLATION (implementation bug): {e}", file=sys.stderr)
        return 1
    except (PiradicalError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
