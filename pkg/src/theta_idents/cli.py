"""Command-line front end: list the catalog, verify identities, run sweeps,
derive tau-shift variants, and emit JSON/CSV reports.

Exit codes: 0 = every non-erratum instance passed (skips allowed);
1 = at least one unexpected failure; 2 = usage/configuration/catalog error.
"""

from __future__ import annotations

import argparse
import fnmatch
import os
import sys

from . import __version__
from .catalog import builtin_catalog, catalog_by_id, load_catalog, save_catalog
from .errors import ThetaIdentsError
from .special import EllipticContext
from .verify import (
    SweepGrid,
    VerificationInstance,
    reports_to_json,
    rows_to_csv,
    sweep_many,
    verify,
)

CATALOG_ENV = "THETA_IDENTS_CATALOG"

DEFAULT_M = (0.1, 0.3, 0.5, 0.7, 0.9)
DEFAULT_P = "2..9"
DEFAULT_SAMPLES = 16
DEFAULT_TOLERANCE = 1e-9

MIN_TOLERANCE, MAX_TOLERANCE = 1e-14, 1e-3


class UsageError(Exception):
    pass


def _parse_m_list(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"--m: bad float in {text!r}") from exc
    for v in values:
        if not 1e-6 <= v <= 1 - 1e-6:
            raise UsageError(f"--m: {v} outside supported range [1e-6, 1-1e-6]")
    return values


def _parse_p_range(text: str) -> tuple[int, ...]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            values = tuple(range(int(lo), int(hi) + 1))
        else:
            values = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"--p: cannot parse {text!r}") from exc
    if not values:
        raise UsageError("--p: empty range")
    for p in values:
        if p < 2:
            raise UsageError("p must be >= 2")
        if p > 64:
            raise UsageError("p must be <= 64")
    return values


def _load_active_catalog(args):
    path = getattr(args, "catalog", None) or os.environ.get(CATALOG_ENV)
    if path:
        return load_catalog(path)
    return builtin_catalog()


def _select_ids(catalog, pattern):
    ids = [spec.id for spec in catalog]
    if pattern:
        ids = [i for i in ids if fnmatch.fnmatch(i, pattern)]
        if not ids:
            raise UsageError(f"no identity matches {pattern!r}")
    return sorted(ids)


def _grid_from_args(args) -> SweepGrid:
    tolerance = args.tolerance
    if not MIN_TOLERANCE <= tolerance <= MAX_TOLERANCE:
        raise UsageError(
            f"tolerance must lie in [{MIN_TOLERANCE:g}, {MAX_TOLERANCE:g}]"
        )
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    return SweepGrid(
        m_values=_parse_m_list(args.m),
        p_values=_parse_p_range(args.p),
        samples=args.samples,
        seed=args.seed,
        tolerance=tolerance,
        quadrature_n=args.quadrature_n,
    )


def _write_output(text: str, path):
    if path is None:
        sys.stdout.write(text)
        return
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _human_summary(reports) -> str:
    lines = [
        f"{'id':12s} {'family':10s} {'status':9s} {'pass':>6s} {'fail':>6s} "
        f"{'skip':>5s} {'max rel residual':>18s}"
    ]
    for rep in reports:
        note = ""
        if rep.erratum and rep.fail_count:
            note = "  (fails as printed; see corrected sibling)"
        elif rep.erratum:
            note = "  (erratum entry)"
        lines.append(
            f"{rep.identity_id:12s} {rep.family:10s} {rep.status_kind:9s} "
            f"{rep.pass_count:6d} {rep.fail_count:6d} {rep.skip_count:5d} "
            f"{rep.max_rel_residual:18.3e}{note}"
        )
    unexpected = [r for r in reports if r.failed and not r.erratum]
    expected = [r for r in reports if r.failed and r.erratum]
    lines.append(
        f"-- {len(reports)} identities; unexpected failures: "
        f"{len(unexpected)}; erratum entries failing as printed: {len(expected)}"
    )
    return "\n".join(lines) + "\n"


def _emit_reports(reports, grid, args) -> int:
    fmt = args.format
    if fmt == "json":
        _write_output(reports_to_json(reports, grid), args.output)
    elif fmt == "csv":
        _write_output(rows_to_csv(reports), args.output)
    else:
        _write_output(_human_summary(reports), args.output)
    return 1 if any(r.failed and not r.erratum for r in reports) else 0


def cmd_list(args) -> int:
    catalog = _load_active_catalog(args)
    ids = set(_select_ids(catalog, args.id))
    print(f"{'id':12s} {'eq':6s} {'family':10s} {'period':6s} {'status':9s}  note")
    count = 0
    for spec in catalog:
        if spec.id not in ids:
            continue
        note = spec.status.note or ""
        if spec.status.corrected:
            note = f"corrected by {spec.status.corrected}; {note}"
        print(
            f"{spec.id:12s} {spec.paper_eq:6s} {spec.family:10s} "
            f"{spec.period:6s} {spec.status.kind:9s}  {note}"
        )
        count += 1
    print(f"-- {count} identities")
    return 0


def cmd_verify(args) -> int:
    catalog = _load_active_catalog(args)
    by_id = catalog_by_id(catalog)
    grid = _grid_from_args(args)
    if args.r is not None or args.l is not None or args.s is not None or args.t is not None:
        # fully explicit single instance
        if args.id is None or any(ch in args.id for ch in "*?["):
            raise UsageError("explicit -r/-s/-t/-l require a single --id")
        if args.id not in by_id:
            raise UsageError(f"unknown identity {args.id!r}")
        ps = _parse_p_range(args.p)
        if len(ps) != 1:
            raise UsageError("explicit binding requires a single --p value")
        binding = {"p": ps[0]}
        for name in ("r", "s", "t", "l"):
            value = getattr(args, name)
            if value is not None:
                binding[name] = value
        import numpy as np

        rng = np.random.default_rng(args.seed)
        spec = by_id[args.id]
        zs = tuple(rng.random(args.samples) * spec.T)
        results = []
        for m in grid.m_values:
            inst = VerificationInstance(args.id, binding, m, zs, grid.tolerance, grid.quadrature_n)
            res = verify(inst, catalog)
            results.append(res)
            print(
                f"{args.id} p={binding} m={m}: {res.verdict} "
                f"(max rel residual {res.max_rel_residual:.3e} at z={res.worst_z.real:.4f})"
            )
        return 0 if all(r.passed for r in results) else 1
    ids = _select_ids(catalog, args.id)
    reports = sweep_many(ids, grid, catalog)
    return _emit_reports(reports, grid, args)


def cmd_sweep(args) -> int:
    catalog = _load_active_catalog(args)
    ids = _select_ids(catalog, args.id)
    grid = _grid_from_args(args)
    reports = sweep_many(ids, grid, catalog)
    return _emit_reports(reports, grid, args)


def cmd_selftest(args) -> int:
    catalog = _load_active_catalog(args)
    grid = _grid_from_args(args)
    reports = sweep_many([spec.id for spec in catalog], grid, catalog)
    code = _emit_reports(reports, grid, args)
    errata = [spec for spec in catalog if spec.status.kind == "erratum"]
    print(f"catalog errata: {len(errata)} entries kept as printed with corrected siblings")
    return code


def cmd_derive(args) -> int:
    from .transforms import MINUS_INVERSE_MAP, OVER_ONE_MINUS_MAP, derive_tau_shift_identity

    catalog = _load_active_catalog(args)
    by_id = catalog_by_id(catalog)
    if args.id not in by_id:
        raise UsageError(f"unknown identity {args.id!r}")
    mm = MINUS_INVERSE_MAP if args.map == "minusinverse" else OVER_ONE_MINUS_MAP
    derived = derive_tau_shift_identity(by_id[args.id], mm)
    extended = tuple(catalog) + (derived,)
    grid = _grid_from_args(args)
    reports = sweep_many([derived.id], grid, extended)
    code = _emit_reports(reports, grid, args)
    if args.emit:
        save_catalog([derived], args.emit)
        print(f"derived identity written to {args.emit}")
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="theta-idents",
        description="Catalog and numerical verifier for cyclic theta-ratio identities.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_binding=False):
        p.add_argument("--id", help="identity id or glob pattern")
        p.add_argument("--m", default=",".join(str(x) for x in DEFAULT_M),
                       help="comma-separated modulus values")
        p.add_argument("--p", default=DEFAULT_P, help="p range, e.g. 2..9 or 3,5,7")
        p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES,
                       help="base points per binding")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
        p.add_argument("--quadrature-n", type=int, default=256,
                       help="trapezoid nodes for mean-value right sides")
        p.add_argument("--format", choices=("human", "json", "csv"), default="human")
        p.add_argument("--output", help="write the report to this path (atomic)")
        p.add_argument("--catalog", help=f"catalog file (overrides ${CATALOG_ENV})")
        if with_binding:
            for name in ("r", "s", "t", "l"):
                p.add_argument(f"-{name}", f"--{name}", type=int, default=None,
                               help=f"explicit {name} binding")

    p_list = sub.add_parser("list", help="list catalog entries")
    p_list.add_argument("--id", help="glob filter")
    p_list.add_argument("--catalog", help=f"catalog file (overrides ${CATALOG_ENV})")
    p_list.set_defaults(func=cmd_list)

    p_verify = sub.add_parser("verify", help="verify one identity (optionally one binding)")
    common(p_verify, with_binding=True)
    p_verify.set_defaults(func=cmd_verify)

    p_sweep = sub.add_parser("sweep", help="sweep identities over the grid")
    common(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    p_self = sub.add_parser("selftest", help="sweep the whole catalog")
    common(p_self)
    p_self.set_defaults(func=cmd_selftest)

    p_derive = sub.add_parser("derive", help="derive and verify a tau-shift variant")
    common(p_derive)
    p_derive.add_argument("--map", choices=("minusinverse", "overoneminus"),
                          default="minusinverse")
    p_derive.add_argument("--emit", help="write the derived identity to a catalog file")
    p_derive.set_defaults(func=cmd_derive)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already; preserve --version/-h (0)
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ThetaIdentsError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
