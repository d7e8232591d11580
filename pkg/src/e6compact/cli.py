"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Callable

from . import builder, f4, modp, verify
from .rep78 import Vec78, extraspecial_check, root_set, verify_relations, verify_root_preservation
from .report import SuiteReport
from .tensor import StructureTensor

log = logging.getLogger("e6compact")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SUITES = ("relations", "roots", "antisymmetry", "jacobi", "invariance", "killing",
          "cartan", "tables", "f4", "modp", "char2")
DEFAULT_PRIMES = (2, 5, 7, 13)


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    out: str | None = None
    mode: str = "propagate"
    primes: tuple[int, ...] = DEFAULT_PRIMES
    suites: tuple[str, ...] = ("all",)
    threads: int = 1
    seed_file: str | None = None
    tensor_file: str | None = None
    errata: bool = False
    extra: dict = field(default_factory=dict)

    def validate(self) -> "RunConfig":
        if self.threads < 1:
            raise UsageError("--threads must be at least 1")
        for p in self.primes:
            try:
                modp.check_prime(p)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
        for s in self.suites:
            if s != "all" and s not in SUITES:
                raise UsageError(f"unknown suite {s!r}")
        return self

    def selected_suites(self) -> list[str]:
        return list(SUITES) if "all" in self.suites else list(dict.fromkeys(self.suites))


# ---------------------------------------------------------------------------
# helpers


def _read_seeds(path: str) -> list[tuple[str, str, str]]:
    seeds = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = [p.strip() for p in line.split(";")]
            if len(parts) != 3:
                raise UsageError(f"{path}:{lineno}: expected 'x ; y ; [x,y]'")
            seeds.append(tuple(parts))
    if not seeds:
        raise UsageError(f"{path}: no seed products")
    return seeds


def _write(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _tensor(cfg: RunConfig) -> StructureTensor:
    if cfg.tensor_file:
        with open(cfg.tensor_file, encoding="ascii") as fh:
            return StructureTensor.from_text(fh.read())
    if cfg.seed_file:
        return builder.build(cfg.mode, _read_seeds(cfg.seed_file), errata=cfg.errata)
    if cfg.mode == "propagate":
        return builder.canonical_tensor()
    return builder.build(cfg.mode, errata=cfg.errata)


def _checks_report(name: str, checks) -> SuiteReport:
    rep = SuiteReport(name)
    for c in checks:
        rep.check(c.ok, f"{c.name}: {c.detail}".rstrip(": "))
        if c.ok and c.detail:
            rep.note(f"{c.name}: {c.detail}")
    return rep


def _suite(name: str, cfg: RunConfig, tensor_fn: Callable[[], StructureTensor]) -> list[SuiteReport]:
    if name == "relations":
        return [_checks_report("relations", verify_relations())]
    if name == "roots":
        return [_checks_report("roots", verify_root_preservation() + [extraspecial_check()])]
    T = tensor_fn()
    if name == "antisymmetry":
        return [verify.verify_antisymmetry(T)]
    if name == "jacobi":
        return [verify.verify_jacobi_all(T, threads=cfg.threads), verify.verify_jacobi_cases(T)]
    if name == "invariance":
        return [verify.verify_all_invariance(T)]
    if name == "killing":
        return [verify.verify_killing(T)[0]]
    if name == "cartan":
        return [verify.verify_cartan_and_roots(T)]
    if name == "tables":
        return [verify.verify_displayed(T)]
    if name == "f4":
        return [f4.verify_w_closure(T), f4.verify_f4_table(T), f4.verify_quaternionic_actions(),
                f4.verify_f4_eigencorrespondences(T), f4.verify_f4_axioms(T)]
    if name == "modp":
        out = [modp.verify_integrality(T)]
        if out[0].ok:
            for p in cfg.primes:
                out.append(modp.verify_modp(modp.reduce_tensor(T, p), T, threads=cfg.threads))
        return out
    if name == "char2":
        return [modp.char2_ideal(modp.reduce_tensor(T, 2))]
    raise UsageError(f"unknown suite {name!r}")


# ---------------------------------------------------------------------------
# commands


def _check_writable(path: str | None) -> None:
    if path in (None, "-"):
        return
    parent = os.path.dirname(os.path.abspath(path))
    if not os.path.isdir(parent) or not os.access(parent, os.W_OK):
        raise OSError(f"cannot write {path}: directory {parent} is not writable")


def cmd_build(cfg: RunConfig) -> int:
    _check_writable(cfg.out)
    try:
        seeds = _read_seeds(cfg.seed_file) if cfg.seed_file else None
        tensor = builder.build(cfg.mode, seeds, errata=cfg.errata)
    except (builder.ConflictError, builder.IncompleteError, builder.MismatchError) as exc:
        print(f"build failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _write(cfg.out, tensor.to_text())
    if cfg.out not in (None, "-"):
        print(f"wrote {len(tensor)} structure constants to {cfg.out}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    _check_writable(cfg.out)
    cache: dict[str, StructureTensor] = {}

    def tensor_fn():
        if "t" not in cache:
            cache["t"] = _tensor(cfg)
        return cache["t"]

    reports = []
    for name in cfg.selected_suites():
        reports.extend(_suite(name, cfg, tensor_fn))
    text = "\n".join(r.render() for r in reports)
    ok = all(r.ok for r in reports)
    _write(cfg.out, text + f"\nresult={'pass' if ok else 'fail'}\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_f4(cfg: RunConfig) -> int:
    _check_writable(cfg.out)
    table = f4.f4_table(_tensor(cfg))
    _write(cfg.out, f4.export_text(table))
    return EXIT_OK


def _vec_key(v: Vec78):
    return (min(v.support()), tuple(v.coords))


def cmd_roots(cfg: RunConfig) -> int:
    lines = []
    if cfg.extra.get("list") or not cfg.extra.get("correspondences"):
        lines += [str(r) for r in sorted(root_set(), key=_vec_key)]
    if cfg.extra.get("correspondences"):
        for label, s1, s2 in verify.CORRESPONDENCES:
            lines.append(f"+-{label} <-> <{s1}, {s2}>")
        for label, s1, s2 in f4.tables.F4_CORRESPONDENCES:
            lines.append(f"+-{label} <-> <{s1}, {s2}>")
    _write(cfg.out, "\n".join(lines) + "\n")
    return EXIT_OK


COMMANDS = {"build": cmd_build, "verify": cmd_verify, "f4": cmd_f4, "roots": cmd_roots}


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="e6compact", description="Exact compact E6 construction and checks.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, out_help="output file (default stdout)"):
        p.add_argument("--out", help=out_help)
        p.add_argument("--mode", choices=("propagate", "table", "both"), default=None)
        p.add_argument("--seed-file", help="alternative seed products, one 'x ; y ; [x,y]' per line")
        p.add_argument("--table-errata", action="store_true",
                       help="use the re-indexed (3,9) block of the product table")

    b = sub.add_parser("build", help="build the structure constants")
    common(b)
    v = sub.add_parser("verify", help="run verification suites")
    common(v, "report file (default stdout)")
    v.add_argument("--suite", action="append", help=f"one of all, {', '.join(SUITES)}; repeatable")
    v.add_argument("--p", action="append", type=int, help="prime for the modp suite; repeatable")
    v.add_argument("--threads", type=int, default=1)
    v.add_argument("--tensor", help="read structure constants from a file instead of building")
    f = sub.add_parser("f4", help="export the F4 product table")
    common(f)
    f.add_argument("--export", help="same as --out")
    f.add_argument("--tensor", help="read structure constants from a file")
    r = sub.add_parser("roots", help="list the 936 roots and the root-space correspondences")
    r.add_argument("--out")
    r.add_argument("--list", action="store_true")
    r.add_argument("--correspondences", action="store_true")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cmd = args.command
    mode = getattr(args, "mode", None) or ("both" if cmd == "build" else "propagate")
    cfg = RunConfig(
        command=cmd,
        out=getattr(args, "export", None) or args.out,
        mode=mode,
        primes=tuple(args.p) if getattr(args, "p", None) else DEFAULT_PRIMES,
        suites=tuple(args.suite) if getattr(args, "suite", None) else ("all",),
        threads=getattr(args, "threads", 1),
        seed_file=getattr(args, "seed_file", None),
        tensor_file=getattr(args, "tensor", None),
        errata=getattr(args, "table_errata", False),
        extra={"list": getattr(args, "list", False),
               "correspondences": getattr(args, "correspondences", False)},
    )
    return cfg.validate()


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = config_from_args(args)
        return COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
