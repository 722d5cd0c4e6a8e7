"""Command-line front end.

Exit codes: 0 success, 1 malformed input, 2 a verification op found a
mathematical mismatch. ``--json`` switches every op to a stable
machine-readable format; term order is always box count descending,
then lexicographic, so output is byte-stable.
"""

import argparse
import contextlib
import io
import json
import sys

from .brauer import BrauerLabel, brauer_dim, verify_induced_dim
from .characters import (
    decompose_via_characters,
    group_dim,
    oracle_matches,
    split_decomposition,
    verify_product,
)
from .littlewood_richardson import Decomposition, lr_product, sort_terms
from .modification import GroupContext, kronecker, standardize_steps
from .partitions import format_partition, parse_partition
from .stable_product import stable_kronecker


class CliError(Exception):
    pass


def _context(args) -> GroupContext:
    if not args.family or args.n is None:
        raise CliError("this op requires --family and --n")
    try:
        return GroupContext(args.family, args.n)
    except ValueError as e:
        raise CliError(str(e)) from e


def _operands(args, count: int):
    if len(args.partitions) != count:
        raise CliError(f"expected {count} partition operand(s)")
    try:
        return [parse_partition(p) for p in args.partitions]
    except ValueError as e:
        raise CliError(f"bad partition: {e}") from e


def _render_terms(dec: Decomposition) -> str:
    if not dec:
        return "0"
    parts = []
    for shape, mult in sort_terms(dec):
        prefix = "" if mult == 1 else f"{mult}"
        parts.append(f"{prefix}{format_partition(shape)}")
    return " + ".join(parts)


def _json_terms(dec: Decomposition) -> list:
    return [{"shape": list(shape), "mult": mult} for shape, mult in sort_terms(dec)]


def _emit(args, op: str, inputs: dict, text: str, terms=None, certified=None, extra=None):
    if args.json:
        obj = {"op": op, "inputs": inputs}
        if terms is not None:
            obj["terms"] = _json_terms(terms)
        if certified is not None:
            obj["certified"] = certified
        if extra:
            obj.update(extra)
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def _trace_standardization(dec: Decomposition, ctx: GroupContext) -> None:
    for shape, mult in sort_terms(dec):
        if ctx.is_standard(shape):
            continue
        label, steps = standardize_steps(shape, ctx)
        print(f"# {format_partition(shape)} (x{mult}):")
        for strip, factor in steps:
            boxes = ",".join(f"({r},{c})" for r, c in strip.boxes)
            print(
                f"#   remove {len(strip.boxes)} boxes {boxes} spanning "
                f"{strip.columns_spanned} column(s): sign {factor:+d} -> "
                f"{format_partition(strip.inner)}"
            )
        if label.sign == 0:
            print("#   -> dropped (no removable strip)")
        else:
            print(f"#   -> {label.sign:+d} {format_partition(label.shape)}")


def _certify(lam1, lam2, ctx, dec) -> bool | None:
    """Character certification when the oracle caps allow it."""
    try:
        report = verify_product(lam1, lam2, ctx, dec)
        return bool(report) and oracle_matches(lam1, lam2, ctx, dec)
    except ValueError:
        return None


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_intermixed_args(argv)
    except SystemExit as e:
        return 1 if e.code not in (0, None) else 0
    if args.op is None:
        parser.print_help()
        return 1
    try:
        return _dispatch(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def _dispatch(args) -> int:
    op = args.op

    if op == "lr":
        lam1, lam2 = _operands(args, 2)
        dec = lr_product(lam1, lam2)
        _emit(args, op, _inputs(args), _render_terms(dec), terms=dec)
        return 0

    if op == "stable":
        lam1, lam2 = _operands(args, 2)
        dec = stable_kronecker(lam1, lam2)
        _emit(args, op, _inputs(args), _render_terms(dec), terms=dec)
        return 0

    if op == "decompose":
        ctx = _context(args)
        lam1, lam2 = _operands(args, 2)
        if args.stable:
            dec = stable_kronecker(lam1, lam2)
            _emit(args, op, _inputs(args), _render_terms(dec), terms=dec)
            return 0
        try:
            dec = kronecker(lam1, lam2, ctx)
        except ValueError as e:
            raise CliError(str(e)) from e
        if args.trace:
            _trace_standardization(stable_kronecker(lam1, lam2), ctx)
        certified = _certify(lam1, lam2, ctx, dec)
        _emit(args, op, _inputs(args), _render_terms(dec), terms=dec, certified=certified)
        return 0

    if op == "modify":
        ctx = _context(args)
        (lam,) = _operands(args, 1)
        label, steps = standardize_steps(lam, ctx)
        if args.trace:
            _trace_standardization({lam: 1}, ctx)
        if label.sign == 0:
            text, terms = "0", {}
        else:
            sign = "-" if label.sign < 0 else ""
            text = f"{sign}{format_partition(label.shape)}"
            terms = {label.shape: label.sign}
        _emit(args, op, _inputs(args), text, terms=terms)
        return 0

    if op == "dim":
        ctx = _context(args)
        (lam,) = _operands(args, 1)
        try:
            d = group_dim(lam, ctx)
        except ValueError as e:
            raise CliError(str(e)) from e
        _emit(args, op, _inputs(args), str(d), extra={"dim": d})
        return 0

    if op == "brauer-dim":
        (lam,) = _operands(args, 1)
        level = args.level if args.level is not None else sum(lam)
        try:
            d = brauer_dim(BrauerLabel(lam, level))
        except (ValueError, KeyError) as e:
            raise CliError(f"bad label/level: {e}") from e
        _emit(args, op, _inputs(args), str(d), extra={"dim": d})
        return 0

    if op == "verify-eq11":
        lam1, lam2 = _operands(args, 2)
        h = verify_induced_dim(lam1, lam2)
        integral = h.denominator == 1
        text = f"h = {h}, integral: {'yes' if integral else 'no'}"
        _emit(args, op, _inputs(args), text, certified=integral, extra={"h": str(h)})
        return 0 if integral else 2

    if op == "verify-characters":
        ctx = _context(args)
        lam1, lam2 = _operands(args, 2)
        try:
            dec = kronecker(lam1, lam2, ctx)
            report = verify_product(lam1, lam2, ctx, dec)
            matches = bool(report) and oracle_matches(lam1, lam2, ctx, dec)
        except ValueError as e:
            raise CliError(str(e)) from e
        text = "certified" if matches else "MISMATCH"
        if not matches and report.difference:
            text += f" (difference has {len(report.difference.terms)} terms)"
        _emit(args, op, _inputs(args), text, terms=dec, certified=matches)
        return 0 if matches else 2

    if op == "batch":
        return _run_batch(args)

    raise CliError(f"unknown op {op!r}")


def _inputs(args) -> dict:
    inputs: dict = {"partitions": list(args.partitions)}
    if getattr(args, "family", None):
        inputs["family"] = args.family
    if getattr(args, "n", None) is not None:
        inputs["n"] = args.n
    if getattr(args, "level", None) is not None:
        inputs["level"] = args.level
    return inputs


def _run_batch(args) -> int:
    """Execute line-delimited JSON requests; one result object per line."""
    if len(args.partitions) != 1:
        raise CliError("batch expects exactly one file path")
    try:
        with open(args.partitions[0]) as fh:
            lines = fh.readlines()
    except OSError as e:
        raise CliError(str(e)) from e
    passed = failed = errors = 0
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            record = json.loads(line)
            argv = _record_to_argv(record)
        except (ValueError, KeyError) as e:
            print(json.dumps({"line": lineno, "error": str(e)}))
            errors += 1
            continue
        sub = _build_parser().parse_intermixed_args(argv)
        sub.json = True
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            try:
                code = _dispatch(sub)
            except CliError as e:
                print(json.dumps({"line": lineno, "error": str(e)}))
                errors += 1
                continue
        out = buf.getvalue().strip()
        for out_line in out.splitlines():
            print(out_line)
        if record["op"].startswith("verify") or record["op"] == "decompose":
            if code == 0:
                passed += 1
            else:
                failed += 1
        else:
            passed += 1
    print(f"summary: {passed + failed + errors} records, {passed} passed, "
          f"{failed} failed, {errors} errors")
    return 2 if failed else 0


def _record_to_argv(record: dict) -> list[str]:
    argv = [record["op"]]
    if "family" in record:
        argv += ["--family", str(record["family"])]
    if "n" in record:
        argv += ["--n", str(record["n"])]
    if "level" in record:
        argv += ["--level", str(record["level"])]
    if record.get("stable"):
        argv.append("--stable")
    operands = record.get("operands") or record.get("partitions") or []
    argv += [op if isinstance(op, str) else json.dumps(op) for op in operands]
    return argv


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ospkron",
        description="Exact Kronecker products for O(n), SO(n) and Sp(2m).",
    )
    parser.add_argument("op", nargs="?", choices=[
        "lr", "stable", "decompose", "modify", "dim", "brauer-dim",
        "verify-eq11", "verify-characters", "batch",
    ])
    parser.add_argument("partitions", nargs="*", help="partition operands, e.g. \"[2,1]\"")
    parser.add_argument("--family", choices=["O", "SO", "Sp"])
    parser.add_argument("--n", type=int, help="vector-space dimension (Sp: 2m)")
    parser.add_argument("--level", type=int, help="Brauer-algebra level f")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--trace", action="store_true",
                        help="print each nonstandard label's strip removals")
    parser.add_argument("--stable", action="store_true",
                        help="emit the pre-modification stable product")
    return parser


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
