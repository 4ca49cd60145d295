"""Command-line front end.

    jacobihom hochschild ALG [--cap N]
    jacobihom cyclic ALG [--cap N]
    jacobihom relative ALG [--idempotent SPEC ...] [--cap N]
    jacobihom lie (ALG | LIE | gl:N) [--cap N]
    jacobihom verify (all | ID ...) [--seed N]
    jacobihom list-checks

Exit status: 0 success, 1 a check failed, 2 usage or input error,
3 the size guard stopped a computation.
"""

import argparse
import sys
from fractions import Fraction

from . import algebra as alg
from .algfile import AlgebraFileError, is_lie_document, parse_algebra, parse_lie
from .complexes import build_hochschild_complex, compute_homology
from .cyclic import build_cyclic_total_complex
from .lie import chevalley_eilenberg_complex
from .linalg import SizeGuardError
from .relative import build_relative_hochschild_complex
from .verifier import UnknownCheck, list_checks, run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    def __init__(self, message, usage=None):
        super().__init__(message)
        self.usage = usage


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message, self.format_usage())


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _cap(args, default):
    cap = default if args.cap is None else args.cap
    if cap < 0:
        raise UsageError("--cap must be non-negative")
    return cap


def _homology_text(report, args):
    if args.format == "records":
        return report.to_records(timings=args.timings)
    return report.to_text(timings=args.timings)


def cmd_hochschild(args):
    a = parse_algebra(_read(args.algebra), source=args.algebra)
    cx = build_hochschild_complex(a, None, _cap(args, 3))
    return EXIT_OK, _homology_text(compute_homology(cx), args)


def cmd_cyclic(args):
    """Degrees ``0..cap``; the total complex is built one degree further so
    that every reported degree is exact."""
    a = parse_algebra(_read(args.algebra), source=args.algebra)
    cap = _cap(args, 4)
    cx = build_cyclic_total_complex(a, cap + 1)
    report = compute_homology(cx, degrees=range(cap + 1))
    return EXIT_OK, _homology_text(report, args)


def _parse_idempotent(spec, a):
    """``lab[=coef],lab[=coef]`` as a sparse vector of ``a``."""
    vec = {}
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        lab, _, coef = part.partition("=")
        if lab not in a.labels:
            raise UsageError(f"--idempotent {spec!r}: unknown label {lab!r}")
        try:
            c = Fraction(coef) if coef else Fraction(1)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--idempotent {spec!r}: bad coefficient {coef!r}") from None
        i = a.index(lab)
        vec[i] = vec.get(i, 0) + c
    if not vec:
        raise UsageError(f"--idempotent {spec!r} is empty")
    return vec


def cmd_relative(args):
    a = parse_algebra(_read(args.algebra), source=args.algebra)
    if args.idempotent:
        w = alg.idempotent_witness(a, [_parse_idempotent(s, a) for s in args.idempotent])
        verdict = alg.verify_separability(w)
        if not verdict:
            raise UsageError(f"the given idempotents do not define a separable subalgebra: "
                             f"{verdict.failure} {verdict.witness or ''}".rstrip())
    else:
        w = alg.trivial_witness(a)
    cx = build_relative_hochschild_complex(a, None, w, _cap(args, 3))
    return EXIT_OK, _homology_text(compute_homology(cx), args)


def _lie_input(spec):
    if spec.startswith("gl:"):
        try:
            n = int(spec[3:])
        except ValueError:
            raise UsageError(f"bad Lie algebra shorthand {spec!r}; expected gl:N") from None
        if n < 1:
            raise UsageError("gl:N needs N >= 1")
        return alg.gl(n)
    text = _read(spec)
    if is_lie_document(text):
        return parse_lie(text, source=spec)
    return alg.commutator_lie(parse_algebra(text, source=spec))


def cmd_lie(args):
    g = _lie_input(args.algebra)
    cx = chevalley_eilenberg_complex(g, _cap(args, g.dim))
    return EXIT_OK, _homology_text(compute_homology(cx), args)


def cmd_verify(args):
    ids = args.ids or ["all"]
    reports = run_checks(None if ids == ["all"] else ids, seed=args.seed)
    if args.format == "records":
        text = "\n".join(r.to_record(timings=args.timings) for r in reports) + "\n"
    else:
        lines = [r.to_text(timings=args.timings) for r in reports]
        failed = [r.id for r in reports if r.verdict == "fail"]
        skipped = [r.id for r in reports if r.verdict.startswith("skipped")]
        lines.append(f"{len(reports)} checks: {len(reports) - len(failed) - len(skipped)} pass, "
                     f"{len(failed)} fail, {len(skipped)} skipped")
        text = "\n".join(lines) + "\n"
    status = EXIT_FAIL if any(r.verdict == "fail" for r in reports) else EXIT_OK
    return status, text


def cmd_list_checks(args):
    import json
    if args.format == "records":
        lines = [json.dumps({"record": "check-descriptor", "id": d.id, "statement": d.statement,
                             "parameters": d.parameters, "expected": d.expected}, sort_keys=True)
                 for d in list_checks()]
    else:
        lines = [f"{d.id:18} {d.statement}" for d in list_checks()]
    return EXIT_OK, "\n".join(lines) + "\n"


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("text", "records"), default="text",
                        help="plain text or line-delimited JSON records")
    common.add_argument("--timings", action="store_true",
                        help="include wall-clock timings (output is then not reproducible)")

    p = _Parser(prog="jacobihom", description="Exact Hochschild, cyclic, relative and "
                "Chevalley-Eilenberg homology, plus a registry of verification checks.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def with_cap(name, help_, default, target, input_help="algebra file (JSON)"):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("algebra", metavar="ALG", help=input_help)
        sp.add_argument("--cap", type=int, default=None,
                        help=f"top chain degree (default {default})")
        sp.set_defaults(func=target)
        return sp

    with_cap("hochschild", "Hochschild homology HH(A) with regular coefficients", 3, cmd_hochschild)
    with_cap("cyclic", "cyclic homology HC(A) from Connes' bicomplex", 4, cmd_cyclic)
    rel = with_cap("relative", "Hochschild homology relative to a separable subalgebra", 3,
                   cmd_relative)
    rel.add_argument("--idempotent", action="append", metavar="SPEC",
                     help="an orthogonal idempotent of the subalgebra, as lab[=coef],... ; "
                          "repeat once per idempotent (default: the scalars)")
    with_cap("lie", "Chevalley-Eilenberg homology with trivial coefficients", "dim g", cmd_lie,
             input_help="Lie algebra file with 'brackets', an associative algebra file "
                        "(commutator bracket), or gl:N")

    ver = sub.add_parser("verify", parents=[common], help="run verification checks")
    ver.add_argument("ids", nargs="*", metavar="ID", help="check ids, or 'all' (default)")
    ver.add_argument("--seed", type=int, default=1)
    ver.set_defaults(func=cmd_verify)

    ls = sub.add_parser("list-checks", parents=[common], help="list the registered checks")
    ls.set_defaults(func=cmd_list_checks)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            raise UsageError("a subcommand is required", parser.format_usage())
        status, text = args.func(args)
    except UsageError as exc:
        print(f"jacobihom: error: {exc}", file=sys.stderr)
        if exc.usage:
            sys.stderr.write(exc.usage)
        return EXIT_USAGE
    except AlgebraFileError as exc:
        print(f"jacobihom: input error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (alg.AlgebraError, ValueError) as exc:
        print(f"jacobihom: input error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownCheck as exc:
        print(f"jacobihom: error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    except SizeGuardError as exc:
        print(f"jacobihom: size guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"jacobihom: error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
