"""Command-line front door: parse inputs, dispatch, emit reports.

Exit codes partition outcomes: 0 for a positive or neutral result, 2 for a
mathematical negative (not legendrian, equation fails), 3 for a resource
undecided, 1 for usage or parse errors.  A resource limit is never reported
as a mathematical answer.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import List, Optional

from . import catalog
from .groebner import (
    BudgetExceeded,
    DEFAULT_PAIR_BUDGET,
    IdealPresentation,
    buchberger,
    krull_dimension,
    normal_form,
)
from .legendrian import VarietyPresentation, legendrian_verdict, rational_curve_check, tangent_point_check
from .liealg import close_and_present, cartan_subalgebra, root_decomposition, identify_algebra
from .poly import Polynomial, PolyParseError, parse_poly
from .symplectic import SymplecticForm, poisson_bracket, standard_form
from .classify import enumerate_semisimple_pairs, enumerate_simple

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NEGATIVE = 2
EXIT_UNDECIDED = 3

DEFAULT_SEED = 20140601


class InputError(ValueError):
    pass


def _load_presentation(args) -> VarietyPresentation:
    text = _read_source(args.file)
    override = getattr(args, "form", None)
    return parse_variety_file(text, form_override=override)


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as handle:
        return handle.read()


def parse_variety_file(text: str, form_override: Optional[str] = None) -> VarietyPresentation:
    """Input format: 'n=<n>' header, optional 'form=<file|standard|json:...>',
    then one generator per line; '#' starts a comment.  A non-None
    form_override wins over the header."""
    n = None
    form_spec = "standard"
    gen_lines: List[tuple] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            n = int(line[2:])
        elif line.startswith("form="):
            form_spec = line[5:].strip()
        else:
            gen_lines.append((lineno, line))
    if n is None or n < 1:
        raise InputError("missing or invalid 'n=<n>' header")
    if form_override:
        form_spec = form_override
    if form_spec == "standard":
        form = standard_form(n)
    elif form_spec.startswith("json:"):
        form = SymplecticForm.from_json(form_spec[5:])
    else:
        form = SymplecticForm.from_json(_read_source(form_spec))
    if form.dim != 2 * n:
        raise InputError(f"form dimension {form.dim} does not match n={n}")
    gens = []
    for lineno, line in gen_lines:
        try:
            gens.append(parse_poly(line, 2 * n))
        except PolyParseError as exc:
            raise InputError(f"line {lineno}: {exc}") from None
    return VarietyPresentation("input", form, gens)


def _report(args, command: str, inputs: dict, result: dict, status: str, timings: dict) -> None:
    payload = {
        "command": command,
        "inputs": inputs,
        "result": result,
        "timings": {k: round(v, 6) for k, v in timings.items()},
        "status": status,
        "seed": args.seed,
    }
    if args.json:
        print(json.dumps(payload, indent=2, default=str))
    else:
        _print_text(payload)


def _print_text(payload: dict) -> None:
    print(f"[{payload['command']}] status: {payload['status']}")
    for key, value in payload["result"].items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            for item in value:
                print("  " + json.dumps(item, default=str))
        else:
            print(f"  {key}: {value}")


def _cmd_check(args) -> int:
    t0 = time.perf_counter()
    pres = _load_presentation(args)
    verdict = legendrian_verdict(pres, budget=args.budget)
    timings = {"total": time.perf_counter() - t0}
    result = verdict.to_dict()
    status = {"legendrian": "ok", "not-legendrian": "ok", "undecided": "undecided"}[verdict.verdict]
    _report(args, "check", {"file": args.file, "n": pres.half_dim}, result, status, timings)
    if verdict.verdict == "undecided":
        return EXIT_UNDECIDED
    return EXIT_OK if verdict.verdict == "legendrian" else EXIT_NEGATIVE


def _parse_poly_or_index(token: str, pres: VarietyPresentation) -> Polynomial:
    try:
        index = int(token)
    except ValueError:
        return parse_poly(token, pres.nvars)
    return pres.generators[index]


def _cmd_bracket(args) -> int:
    t0 = time.perf_counter()
    pres = _load_presentation(args)
    f = _parse_poly_or_index(args.f, pres)
    g = _parse_poly_or_index(args.g, pres)
    br = poisson_bracket(f, g, pres.form)
    _report(
        args, "bracket", {"file": args.file, "f": str(f), "g": str(g)},
        {"bracket": str(br)}, "ok", {"total": time.perf_counter() - t0},
    )
    return EXIT_OK


def _cmd_gb(args) -> int:
    t0 = time.perf_counter()
    pres = _load_presentation(args)
    try:
        gb = buchberger(IdealPresentation(pres.generators, pres.nvars), max_pairs=args.budget)
    except BudgetExceeded as exc:
        _report(args, "gb", {"file": args.file}, {"budget": exc.budget_name}, "undecided",
                {"total": time.perf_counter() - t0})
        return EXIT_UNDECIDED
    result = {
        "size": len(gb),
        "dimension": krull_dimension(gb),
        "elements": [str(g) for g in gb],
    }
    _report(args, "gb", {"file": args.file}, result, "ok", {"total": time.perf_counter() - t0})
    return EXIT_OK


def _cmd_nf(args) -> int:
    t0 = time.perf_counter()
    pres = _load_presentation(args)
    p = parse_poly(args.poly, pres.nvars)
    try:
        gb = buchberger(IdealPresentation(pres.generators, pres.nvars), max_pairs=args.budget)
    except BudgetExceeded as exc:
        _report(args, "nf", {"file": args.file}, {"budget": exc.budget_name}, "undecided",
                {"total": time.perf_counter() - t0})
        return EXIT_UNDECIDED
    r = normal_form(p, gb)
    result = {"normal_form": str(r), "in_ideal": r.is_zero()}
    _report(args, "nf", {"file": args.file, "poly": str(p)}, result, "ok",
            {"total": time.perf_counter() - t0})
    return EXIT_OK


def _cmd_algebra(args) -> int:
    t0 = time.perf_counter()
    pres = _load_presentation(args)
    quadrics = [g for g in pres.generators if g.homogeneous_degree() == 2]
    algebra = close_and_present(quadrics, pres.form)
    semisimple = algebra.is_semisimple()
    result = {"dim": algebra.dim, "semisimple": semisimple}
    if semisimple:
        result["types"] = identify_algebra(algebra)
        try:
            cd = cartan_subalgebra(algebra)
            full = root_decomposition(algebra, cd)
            result["cartan_rank"] = cd.rank
            result["root_count"] = len(full.roots)
        except Exception:
            result["cartan_rank"] = None
            result["root_count"] = None
    _report(args, "algebra", {"file": args.file}, result, "ok",
            {"total": time.perf_counter() - t0})
    return EXIT_OK


def _cmd_classify(args) -> int:
    t0 = time.perf_counter()
    simple = enumerate_simple(args.max_rank, args.max_dim)
    t1 = time.perf_counter()
    pairs = enumerate_semisimple_pairs(args.max_rank, args.max_dim)
    result = {
        "accepted_simple": [v.to_dict() for v in simple if v.status == "accepted"],
        "accepted_pairs": [v.to_dict() for v in pairs if v.status == "accepted"],
        "rejected_simple": [v.to_dict() for v in simple if v.status != "accepted"],
        "rejected_pairs": [v.to_dict() for v in pairs if v.status != "accepted"],
    }
    _report(
        args, "classify", {"max_rank": args.max_rank, "max_dim": args.max_dim},
        result, "ok",
        {"simple": t1 - t0, "pairs": time.perf_counter() - t1},
    )
    return EXIT_OK


def _cmd_catalog(args) -> int:
    t0 = time.perf_counter()
    if args.name is None:
        result = {"entries": catalog.entry_names()}
        _report(args, "catalog", {}, result, "ok", {"total": time.perf_counter() - t0})
        return EXIT_OK
    entry = catalog.get_entry(args.name)
    sys.stdout.write(catalog.dump_entry(entry))
    return EXIT_OK


def _cmd_curve(args) -> int:
    t0 = time.perf_counter()
    polys = []
    for text in (args.f1, args.f2, args.f3):
        polys.append(parse_poly(text.replace("t", "x0"), 1))
    holds = rational_curve_check(*polys)
    _report(
        args, "curve",
        {"f1": str(polys[0]), "f2": str(polys[1]), "f3": str(polys[2])},
        {"equation_holds": holds}, "ok", {"total": time.perf_counter() - t0},
    )
    return EXIT_OK if holds else EXIT_NEGATIVE


def _cmd_xf(args) -> int:
    t0 = time.perf_counter()
    f = _parse_xf_poly(args.poly)
    entry = catalog.x_f(f, implicit_degree=args.implicit_degree)
    pres = entry.presentation
    import random

    rng = random.Random(args.seed)
    points = [
        [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(f.nvars)]
        for _ in range(5)
    ]
    tangent_ok = all(tangent_point_check(pres, pt) for pt in points)
    result = {
        "name": entry.name,
        "ambient_dim": pres.nvars,
        "generators": [str(g) for g in pres.generators],
        "tangent_checks_pass": tangent_ok,
    }
    _report(args, "xf", {"poly": str(f)}, result, "ok", {"total": time.perf_counter() - t0})
    return EXIT_OK if tangent_ok else EXIT_NEGATIVE


def _parse_xf_poly(text: str) -> Polynomial:
    import re

    indices = [int(m) for m in re.findall(r"[xy](\d+)", text)]
    if not indices:
        raise InputError("no variables found in the chart polynomial")
    return parse_poly(text, max(indices) + 1)


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="legquad",
        description="Exact verdicts and classification for legendrian varieties cut out by quadrics.",
    )
    parser.add_argument("--json", action="store_true", help="emit machine-readable reports")
    parser.add_argument("--text", dest="json", action="store_false", help="emit plain text (default)")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for sampled points")
    parser.add_argument("--budget", type=int, default=DEFAULT_PAIR_BUDGET,
                        help="cap on processed S-pairs in basis computations")
    parser.add_argument("--form", default=None,
                        help="override the input file's form: 'standard', a JSON file path, or json:<...>")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="legendrian verdict for a variety file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("bracket", help="Poisson bracket of two polynomials or generator indices")
    p.add_argument("file")
    p.add_argument("f")
    p.add_argument("g")
    p.set_defaults(func=_cmd_bracket)

    p = sub.add_parser("gb", help="reduced Groebner basis of the input ideal")
    p.add_argument("file")
    p.set_defaults(func=_cmd_gb)

    p = sub.add_parser("nf", help="normal form of a polynomial modulo the input ideal")
    p.add_argument("file")
    p.add_argument("poly")
    p.set_defaults(func=_cmd_nf)

    p = sub.add_parser("algebra", help="extract and identify the quadric algebra")
    p.add_argument("file")
    p.set_defaults(func=_cmd_algebra)

    p = sub.add_parser("classify", help="rerun the classification scan")
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--max-dim", type=int, default=100)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("catalog", help="list catalog entries or dump one in check format")
    p.add_argument("name", nargs="?")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("curve", help="test the planar-curve differential identity")
    p.add_argument("f1")
    p.add_argument("f2")
    p.add_argument("f3")
    p.set_defaults(func=_cmd_curve)

    p = sub.add_parser("xf", help="build the chart variety of a form and self-check")
    p.add_argument("poly")
    p.add_argument("--implicit-degree", type=int, default=None)
    p.set_defaults(func=_cmd_xf)

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (InputError, PolyParseError, FileNotFoundError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
