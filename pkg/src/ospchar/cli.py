"""Command-line interface: compute characters, enumerate tableaux, verify identities.

Exit codes: 0 on success (or all checks passing), 1 when a verification
fails, 2 on usage errors.  Text output is canonical and byte-stable; JSON
round-trips through the documented schema.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from .characters import FAMILIES, METHODS, CharacterRequest
from .identities import (
    VerificationReport,
    run_suite,
    verify_beta_complement,
    verify_bkw_general,
    verify_bkw_original,
    verify_cauchy_binet,
    verify_golden,
    verify_hook_methods,
    verify_kernel_det,
    verify_odd_denominator,
    verify_odd_methods,
    verify_odd_ortho_specialization,
    verify_ortho_methods,
    verify_power_product,
    verify_specialization_reduction,
    verify_supersymmetry,
    verify_symplectic_denominator,
    verify_symplectic_methods,
)
from .symfun import Partition
from . import tableaux


class _UsageError(Exception):
    pass


# identity name -> (required flags, optional flags, runner(args) -> [report])
_IDENTITIES: dict[str, tuple[tuple[str, ...], tuple[str, ...], Callable]] = {
    "ortho_methods": (("lam", "n", "m"), (), lambda a: [verify_ortho_methods(a.lam, a.n, a.m)]),
    "hook_methods": (("lam", "n", "m"), (), lambda a: [verify_hook_methods(a.lam, a.n, a.m)]),
    "symplectic_methods": (("lam", "n"), (), lambda a: [verify_symplectic_methods(a.lam, a.n)]),
    "odd_methods": (("lam", "n"), (), lambda a: [verify_odd_methods(a.lam, a.n)]),
    "odd_ortho_specialization": (
        ("lam", "n"),
        (),
        lambda a: [verify_odd_ortho_specialization(a.lam, a.n)],
    ),
    "supersymmetry": (("lam", "n", "m"), (), lambda a: [verify_supersymmetry(a.lam, a.n, a.m)]),
    "power_product": (("n", "l"), (), lambda a: [verify_power_product(a.n, a.l)]),
    "beta_complement": (
        ("lam", "n1", "n2"),
        (),
        lambda a: [verify_beta_complement(a.lam, a.n1, a.n2)],
    ),
    "cauchy_binet": (
        ("m", "n"),
        ("seed",),
        lambda a: [verify_cauchy_binet(a.m, a.n, seed=a.seed or 0)],
    ),
    "specialization_reduction": (
        ("lam", "n", "r", "variant"),
        (),
        lambda a: [verify_specialization_reduction(a.lam, a.n, a.r, a.variant)],
    ),
    "kernel_det": (("n", "variant"), (), lambda a: [verify_kernel_det(a.n, a.variant)]),
    "bkw_general": (("n", "m", "r"), (), lambda a: [verify_bkw_general(a.n, a.m, a.r)]),
    "bkw_original": (("n", "m", "r"), (), lambda a: [verify_bkw_original(a.n, a.m, a.r)]),
    "symplectic_denominator": (("n",), (), lambda a: [verify_symplectic_denominator(a.n)]),
    "odd_denominator": (("n",), (), lambda a: [verify_odd_denominator(a.n)]),
    "golden": ((), (), lambda a: verify_golden()),
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ospchar",
        description="Exact characters of classical groups and supergroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    comp = sub.add_parser("compute", help="evaluate one character by one method")
    comp.add_argument("--family", required=True, choices=FAMILIES)
    comp.add_argument("--method", required=True, choices=METHODS)
    comp.add_argument("--n", type=int, required=True)
    comp.add_argument("--m", type=int, default=0)
    comp.add_argument("--lambda", dest="lam", required=True, help="comma-separated parts; empty for the empty partition")
    comp.add_argument("--format", choices=("text", "json"), default="text")

    enum = sub.add_parser("enumerate", help="list all tableaux of a shape")
    enum.add_argument("--family", required=True, choices=FAMILIES)
    enum.add_argument("--n", type=int, required=True)
    enum.add_argument("--m", type=int, default=0)
    enum.add_argument("--lambda", dest="lam", required=True)
    enum.add_argument("--mu", default=None, help="inner shape (schur only)")

    ver = sub.add_parser("verify", help="check one identity")
    ver.add_argument("--identity", required=True, choices=sorted(_IDENTITIES))
    ver.add_argument("--lambda", dest="lam", default=None)
    ver.add_argument("--n", type=int, default=None)
    ver.add_argument("--m", type=int, default=None)
    ver.add_argument("--l", type=int, default=None)
    ver.add_argument("--r", type=int, default=None)
    ver.add_argument("--n1", type=int, default=None)
    ver.add_argument("--n2", type=int, default=None)
    ver.add_argument("--seed", type=int, default=None)
    ver.add_argument("--variant", default=None)
    ver.add_argument("--json", action="store_true")

    suite = sub.add_parser("suite", help="run every identity over a bounded grid")
    suite.add_argument("--max-n", type=int, required=True)
    suite.add_argument("--max-m", type=int, required=True)
    suite.add_argument("--max-weight", type=int, required=True)
    suite.add_argument("--json", action="store_true")
    return parser


def _parse_partition(text: str) -> Partition:
    try:
        return Partition.from_string(text)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _cmd_compute(args) -> int:
    req = CharacterRequest(args.family, args.method, _parse_partition(args.lam), args.n, args.m)
    try:
        req.validate()
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    value = req.compute()
    if args.format == "json":
        print(json.dumps(value.to_json_dict(), separators=(",", ":")))
    else:
        print(value.to_text())
    return 0


def _cmd_enumerate(args) -> int:
    lam = _parse_partition(args.lam)
    if args.mu is not None and args.family != "schur":
        raise _UsageError("--mu applies to the schur family only")
    try:
        if args.family == "schur":
            mu = _parse_partition(args.mu) if args.mu is not None else Partition()
            stream = tableaux.ssyt_tableaux(lam, mu, args.n)
        elif args.family == "hook":
            stream = tableaux.super_tableaux(lam, args.n, args.m)
        elif args.family == "symplectic":
            stream = tableaux.symplectic_tableaux(lam, args.n)
        elif args.family == "orthosymplectic":
            stream = tableaux.orthosymplectic_tableaux(lam, args.n, args.m)
        else:
            stream = tableaux.odd_symplectic_tableaux(lam, args.n)
        for t in stream:
            print(t)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    return 0


def _cmd_verify(args) -> int:
    required, optional, runner = _IDENTITIES[args.identity]
    if "lam" in required:
        if args.lam is None:
            raise _UsageError(f"identity {args.identity} needs --lambda")
        args.lam = _parse_partition(args.lam)
    for flag in required:
        if flag != "lam" and getattr(args, flag) is None:
            raise _UsageError(f"identity {args.identity} needs --{flag}")
    try:
        reports = runner(args)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    return _emit(reports, args.json)


def _cmd_suite(args) -> int:
    try:
        reports = run_suite(args.max_n, args.max_m, args.max_weight)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    return _emit(reports, args.json, summary=True)


def _emit(reports: Sequence[VerificationReport], as_json: bool, summary: bool = False) -> int:
    failures = sum(not r.passed for r in reports)
    if as_json:
        print(json.dumps([r.to_json_dict() for r in reports], separators=(",", ":")))
    else:
        for r in reports:
            print(r)
        if summary:
            print(f"{len(reports)} checks, {failures} failures")
    return 1 if failures else 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.command == "compute":
            return _cmd_compute(args)
        if args.command == "enumerate":
            return _cmd_enumerate(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_suite(args)
    except _UsageError as exc:
        print(f"ospchar: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
