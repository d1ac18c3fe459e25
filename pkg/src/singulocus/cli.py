"""Command-line frontend: session file + command string -> canonical output.

Exit codes: 0 success, 1 usage error, 2 degree-guard abort, 3 undetermined-at-bound.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys

from . import cache
from .basis import std_basis_polys
from .config import LIMITS, DegreeOverflow
from .derivations import der_module, der_module_m
from .ideals import (
    UNDETERMINED,
    Ideal,
    eliminate,
    ideal_intersect,
    ideal_quotient,
    ideal_sum,
    radical_member,
    saturation,
)
from .matrices import RMat, ann_coker, ann_coker_j, det_ideal
from .parse import ParseError
from .ring import RingSpec
from .session import Session, SessionError, parse_session
from .singloc import fitt_omega, pfaffian_ideal, sing_locus
from .tjurina import GroupAction, bounds_for_action, radical_support_check, t1_annihilator

CACHE_VERSION = "1"


class UsageError(ValueError):
    pass


def _ideal_arg(session: Session, name: str) -> Ideal:
    obj = session.get(name)
    if not isinstance(obj, Ideal):
        raise UsageError(f"{name!r} is not an ideal")
    return obj


def _matrix_arg(session: Session, name: str) -> RMat:
    obj = session.get(name)
    if not isinstance(obj, RMat):
        raise UsageError(f"{name!r} is not a matrix")
    return obj


def _ring_arg(session: Session, name: str) -> RingSpec:
    obj = session.get(name)
    if not isinstance(obj, RingSpec):
        raise UsageError(f"{name!r} is not a ring")
    return obj


def _fmt_ideal(I: Ideal) -> str:
    return ", ".join(str(g) for g in I.gens) if I.gens else "0"


def _ideal_result(op: str, inputs, I: Ideal, json_output: bool):
    if json_output:
        return (
            json.dumps(
                {"op": op, "inputs": list(inputs), "generators": [str(g) for g in I.gens]}
            )
            + "\n",
            0,
        )
    return f"ideal: {_fmt_ideal(I)}\n", 0


def _int_arg(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {text!r}") from None


_GROUP_NAMES = {"glr": "Glr", "aut": "Aut", "cglr": "cGlr", "congr": "cGcongr"}


def run_command(session: Session, command: str, json_output: bool = False):
    """Dispatch one command against a parsed session; returns (text, exit_code)."""
    words = shlex.split(command)
    if not words:
        raise UsageError("empty command")
    op, args = words[0], words[1:]
    if op == "t1":
        return _run_t1(session, args, json_output)
    flags = {a for a in args if a.startswith("--")}
    args = [a for a in args if not a.startswith("--")]

    if op == "gb":
        I = _ideal_arg(session, _one(args, "gb <ideal>"))
        basis = std_basis_polys(list(I.gens), I.ring)
        if json_output:
            return (
                json.dumps({"op": op, "inputs": args, "generators": [str(g) for g in basis]})
                + "\n",
                0,
            )
        return "basis: " + (", ".join(str(g) for g in basis) if basis else "0") + "\n", 0
    if op == "nf":
        if len(args) != 2:
            raise UsageError("usage: nf <ideal> <poly>")
        I = _ideal_arg(session, args[0])
        f = I.ring.poly(args[1])
        return f"poly: {I.normal_form(f)}\n", 0
    if op == "member":
        if len(args) != 2:
            raise UsageError("usage: member <ideal> <poly>")
        I = _ideal_arg(session, args[0])
        f = I.ring.poly(args[1])
        return f"member: {'true' if I.contains(f) else 'false'}\n", 0
    if op == "radmember":
        if len(args) != 2:
            raise UsageError("usage: radmember <ideal> <poly>")
        I = _ideal_arg(session, args[0])
        f = I.ring.poly(args[1])
        res = radical_member(f, I)
        if res is UNDETERMINED:
            return f"radical member: undetermined at bound {LIMITS.power_bound}\n", 3
        return f"radical member: {'true' if res else 'false'}\n", 0
    if op in ("sum", "intersect", "quot", "sat"):
        if len(args) != 2:
            raise UsageError(f"usage: {op} <ideal> <ideal>")
        I = _ideal_arg(session, args[0])
        J = _ideal_arg(session, args[1])
        fn = {
            "sum": ideal_sum,
            "intersect": ideal_intersect,
            "quot": ideal_quotient,
            "sat": lambda a, b: saturation(a, b),
        }[op]
        return _ideal_result(op, args, fn(I, J), json_output)
    if op == "eliminate":
        if len(args) < 2:
            raise UsageError("usage: eliminate <ideal> <var> [<var> ...]")
        I = _ideal_arg(session, args[0])
        return _ideal_result(op, args, eliminate(I, args[1:]), json_output)
    if op == "detideal":
        if len(args) != 2:
            raise UsageError("usage: detideal <matrix> <j>")
        A = _matrix_arg(session, args[0])
        return _ideal_result(op, args, det_ideal(A, _int_arg(args[1], "j")), json_output)
    if op == "pfaffian":
        if len(args) != 2:
            raise UsageError("usage: pfaffian <matrix> <j>")
        A = _matrix_arg(session, args[0])
        return _ideal_result(op, args, pfaffian_ideal(A, _int_arg(args[1], "j")), json_output)
    if op == "anncoker":
        A = _matrix_arg(session, _one(args, "anncoker <matrix>"))
        return _ideal_result(op, args, ann_coker(A), json_output)
    if op == "anncokerj":
        if len(args) != 2:
            raise UsageError("usage: anncokerj <matrix> <j>")
        A = _matrix_arg(session, args[0])
        return _ideal_result(op, args, ann_coker_j(A, _int_arg(args[1], "j")), json_output)
    if op == "der":
        ring = _ring_arg(session, _one(args, "der <ring>"))
        basis = der_module_m(ring) if "--m-variant" in flags else der_module(ring)
        lines = []
        for g in basis.gens:
            terms = [f"({a})*d/d{v}" for a, v in zip(g, ring.vars) if not a.is_zero()]
            lines.append("derivation: " + (" + ".join(terms) if terms else "0"))
        return "\n".join(lines) + "\n", 0
    if op == "singlocus":
        if len(args) != 2:
            raise UsageError("usage: singlocus <ideal> <r> [--m-variant|--full-der]")
        I = _ideal_arg(session, args[0])
        variant = "into-maximal" if "--m-variant" in flags else "full"
        result = sing_locus(I, _int_arg(args[1], "r"), variant=variant)
        return _ideal_result(op, args, result, json_output)
    if op == "fittomega":
        if len(args) != 2:
            raise UsageError("usage: fittomega <ideal> <k>")
        I = _ideal_arg(session, args[0])
        return _ideal_result(op, args, fitt_omega(I.ring, I, _int_arg(args[1], "k")), json_output)
    raise UsageError(f"unknown command {op!r}")


def _one(args, usage):
    if len(args) != 1:
        raise UsageError(f"usage: {usage}")
    return args[0]


def _run_t1(session, words, json_output):
    group = shape = None
    flags = set()
    rest = []
    i = 0
    while i < len(words):
        w = words[i]
        if w in ("--group", "--shape"):
            if i + 1 >= len(words):
                raise UsageError(f"{w} needs a value")
            if w == "--group":
                group = words[i + 1]
            else:
                shape = words[i + 1]
            i += 2
        elif w.startswith("--group="):
            group = w.split("=", 1)[1]
            i += 1
        elif w.startswith("--shape="):
            shape = w.split("=", 1)[1]
            i += 1
        elif w.startswith("--"):
            flags.add(w)
            i += 1
        else:
            rest.append(w)
            i += 1
    if len(rest) != 1:
        raise UsageError("usage: t1 <matrix> --group glr|aut|cglr|congr [--shape full|sym|skew]")
    A = _matrix_arg(session, rest[0])
    if group not in _GROUP_NAMES:
        raise UsageError("t1 requires --group glr|aut|cglr|congr")
    action = GroupAction(_GROUP_NAMES[group], shape or "full")
    ring = A.ring
    ann = t1_annihilator(ring, A, action)
    lines = [f"annihilator: {_fmt_ideal(ann)}"]
    code = 0
    payload = {"op": "t1", "inputs": [rest[0], group, shape or "full"],
               "generators": [str(g) for g in ann.gens]}
    if "--bounds" in flags or "--radical-check" in flags:
        if action.group not in ("cGlr", "cGcongr"):
            raise UsageError("bounds are defined for the cglr and congr groups")
        lower, upper = bounds_for_action(ring, A, action)
        lines.append(f"lower: {_fmt_ideal(lower)}")
        lines.append(f"upper: {_fmt_ideal(upper)}")
        ok_low = ann.contains_ideal(lower)
        ok_up = upper.contains_ideal(ann)
        lines.append(f"lower_in_annihilator: {'PASS' if ok_low else 'FAIL'}")
        lines.append(f"annihilator_in_upper: {'PASS' if ok_up else 'FAIL'}")
        payload["lower"] = [str(g) for g in lower.gens]
        payload["upper"] = [str(g) for g in upper.gens]
        if not (ok_low and ok_up):
            code = 1
    if "--radical-check" in flags:
        report = radical_support_check(ring, A, action)
        status = (
            "PASS"
            if report.radical_support is True
            else "UNDETERMINED" if report.radical_support is UNDETERMINED else "FAIL"
        )
        lines.append(f"radical_support: {status}")
        payload["radical_support"] = status
        if status == "UNDETERMINED" and code == 0:
            code = 3
        elif status == "FAIL":
            code = 1
    if json_output:
        return json.dumps(payload) + "\n", code
    return "\n".join(lines) + "\n", code


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="singulocus",
        description="Exact commutative-algebra calculator over session files",
    )
    parser.add_argument("session", help="session file declaring rings, ideals, matrices")
    parser.add_argument("--cmd", required=True, help="command to run, e.g. 'anncoker A'")
    parser.add_argument("--json", action="store_true", help="JSON output")
    parser.add_argument("--no-cache", action="store_true", help="disable the result cache")
    parser.add_argument("--power-bound", type=int, default=None)
    parser.add_argument("--degree-cap", type=int, default=None)
    args = parser.parse_args(argv)

    if args.power_bound is not None:
        LIMITS.power_bound = args.power_bound
    if args.degree_cap is not None:
        LIMITS.degree_cap = args.degree_cap

    try:
        with open(args.session, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    try:
        session = parse_session(text)
    except (SessionError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    key = cache.cache_key(
        CACHE_VERSION,
        session.content_hash,
        args.cmd,
        "json" if args.json else "text",
        str(LIMITS.power_bound),
        str(LIMITS.degree_cap),
    )
    if not args.no_cache:
        hit = cache.lookup(key)
        if hit is not None:
            sys.stdout.write(hit)
            return 0

    try:
        out, code = run_command(session, args.cmd, json_output=args.json)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DegreeOverflow as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    sys.stdout.write(out)
    if code == 0 and not args.no_cache:
        cache.store(key, out)
    return code


if __name__ == "__main__":
    sys.exit(main())
