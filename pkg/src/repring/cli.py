"""Command line surface.

Verbs map one-to-one onto library operations; the CLI layer only parses
flags, formats output, and translates exceptions into exit codes:
0 success, 1 user error (diagnostic on stderr), 2 internal failure.
Text output uses the expression grammar, so printed monomials can be fed
back through --expr.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import freebasis, pairing, symreduce
from .errors import InternalError, RepringError
from .fuzz import random_poly
from .lattice import Family, Group
from .laurent import monomial_str, parse


class _CliArgumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _CliArgumentError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="repring", allow_abbrev=False, description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_common(p, need_expr=False, need_basis=False, need_fuzz=False):
        p.add_argument("--group", choices=["su", "so-even"], default="su")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--json", action="store_true")
        if need_expr:
            p.add_argument("--expr", required=True)
        if need_basis:
            p.add_argument("--basis", choices=["standard", "steinberg"], default="standard")
        if need_fuzz:
            p.add_argument("--trials", type=int, default=100)
            p.add_argument("--seed", type=int, default=0)

    add_common(sub.add_parser("basis"), need_basis=True)
    add_common(sub.add_parser("decompose"), need_expr=True)
    add_common(sub.add_parser("steinberg"))
    add_common(sub.add_parser("gram"), need_basis=True)
    add_common(sub.add_parser("verify"), need_fuzz=True)
    return parser


def _group(args) -> Group:
    family = Family.SU if args.group == "su" else Family.SO_EVEN
    return Group(family, args.n)


def _group_obj(group: Group):
    return {"family": group.family.value, "n": group.n}


def _basis_weights(args, group: Group):
    if getattr(args, "basis", "standard") == "steinberg":
        if not group.is_su:
            raise RepringError("the Steinberg basis is generated for SU groups only")
        return tuple(freebasis.steinberg_basis(group.n))
    return freebasis.standard_basis(group).basis


def _emit(args, text_fn, json_obj, out):
    if args.json:
        print(json.dumps(json_obj), file=out)
    else:
        print(text_fn(), file=out)


def run(argv, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        group = _group(args)

        if args.verb in ("basis", "steinberg"):
            if args.verb == "steinberg":
                if not group.is_su:
                    raise RepringError("the Steinberg basis is generated for SU groups only")
                weights = freebasis.steinberg_basis(group.n)
            else:
                weights = _basis_weights(args, group)
            monomials = [monomial_str(w, group) for w in weights]
            _emit(
                args,
                lambda: " ".join(monomials),
                {"group": _group_obj(group), "basis": monomials, "weights": [list(w) for w in weights]},
                out,
            )
            return 0

        if args.verb == "decompose":
            f = parse(args.expr, group)
            ctx = freebasis.standard_basis(group)
            d = freebasis.decompose(f, ctx)
            pairs = d.to_obj()
            _emit(
                args,
                lambda: ", ".join(f"{m}: {c}" for m, c in pairs) if pairs else "0",
                {"group": _group_obj(group), "expr": args.expr, "decomposition": pairs},
                out,
            )
            return 0

        if args.verb == "gram":
            weights = _basis_weights(args, group)
            gm = pairing.gram_matrix(weights, group)
            labels = [monomial_str(w, group) for w in gm.basis]
            cells = []
            for row in gm.entries:
                line = []
                for v in row:
                    c = v.value.constant_value()
                    if c == 0:
                        line.append("0")
                    elif c in (1, -1):
                        line.append("+1" if c == 1 else "-1")
                    else:
                        line.append(str(symreduce.contract(v.value)))
                cells.append(line)

            def text():
                width = max(len(s) for s in labels + [c for row in cells for c in row])
                head = " ".join(s.rjust(width) for s in [""] + labels)
                lines = [head]
                for label, row in zip(labels, cells):
                    lines.append(" ".join(s.rjust(width) for s in [label] + row))
                return "\n".join(lines)

            _emit(args, text, {"group": _group_obj(group), "basis": labels, "entries": cells}, out)
            return 0

        if args.verb == "verify":
            rng = random.Random(args.seed)
            ctx = freebasis.standard_basis(group)
            ok = 0
            for _ in range(args.trials):
                f = random_poly(group, rng)
                if freebasis.recompose(freebasis.decompose(f, ctx)) == f:
                    ok += 1
            _emit(
                args,
                lambda: f"{ok}/{args.trials} round-trips OK",
                {"group": _group_obj(group), "trials": args.trials, "seed": args.seed, "ok": ok},
                out,
            )
            if ok != args.trials:
                print("round-trip mismatch: decomposition is broken", file=err)
                return 2
            return 0

        raise RepringError(f"unknown verb {args.verb!r}")  # pragma: no cover
    except _CliArgumentError as exc:
        print(f"repring: {exc}", file=err)
        return 1
    except RepringError as exc:
        print(f"repring: {exc}", file=err)
        return 1
    except (InternalError, AssertionError) as exc:
        print(f"repring: internal error: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":  # pragma: no cover
    main()
