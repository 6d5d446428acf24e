"""Command-line front end.

Every subcommand writes text, CSV or JSON (``--format``) to stdout.  Failures
exit nonzero with one line ``error: <kind>: <message>`` on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from cauchon import counting
from cauchon.cgl import (
    cgl_stratum_dim,
    complement,
    parse_subset,
    parse_system,
    quantum_matrix_system,
    stratum_matrix,
)
from cauchon.diagram import (
    CauchonDiagram,
    DiagramError,
    count_brute_force,
    count_by_transfer,
    first_violation,
    format_diagram,
    parse_grid,
)
from cauchon.exactla import MatrixError, format_matrix, kernel_dim
from cauchon.strata import (
    DescentError,
    build_chain,
    chain_to_json,
    format_chain,
    skew_adjacency,
    stratum_dim,
    strip_black_columns,
    verify_lemma1,
)
from cauchon.weyl import (
    WeylError,
    beta_roots,
    is_reduced,
    parse_word,
    quantum_matrix_word_check,
    root_system,
    schubert_cgl_matrix,
    zero_stratum_dim,
)

JOBS_ENV = "CAUCHON_JOBS"


class UsageError(ValueError):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load_diagram(path: str) -> CauchonDiagram:
    m, n, rows = parse_grid(_read(path))
    where = first_violation(m, n, rows)
    if where is not None:
        raise DiagramError(f"invalid diagram at {where}")
    return CauchonDiagram(m, n, rows)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(payload) -> str:
    return json.dumps({"schema": 1, **payload}, indent=2) + "\n"


def _matrix_lists(mat):
    return [list(r) for r in mat.entries]


def cmd_validate(args) -> int:
    m, n, rows = parse_grid(_read(args.file))
    where = first_violation(m, n, rows)
    if args.format == "json":
        out = _json({"m": m, "n": n, "valid": where is None, "offending": list(where) if where else None})
    elif args.format == "csv":
        out = _csv(["m", "n", "valid", "row", "col"], [[m, n, int(where is None), *(where or ("", ""))]])
    else:
        out = "valid\n" if where is None else f"invalid at ({where[0]},{where[1]})\n"
    sys.stdout.write(out)
    return 0 if where is None else 1


def cmd_dim(args) -> int:
    c = _load_diagram(args.file)
    e = stratum_dim(c)
    mat = skew_adjacency(c)
    lemma = None
    if args.lemma1:
        if len(c.black_columns()) == c.n:
            lemma = {"passed": True, "failure": None, "entry": None}
        else:
            rep = verify_lemma1(strip_black_columns(c))
            lemma = {"passed": rep.passed, "failure": rep.failure, "entry": list(rep.entry) if rep.entry else None}
    if args.format == "json":
        payload = {"m": c.m, "n": c.n, "white_count": c.white_count, "stratum_dim": e}
        if args.show_matrix:
            payload["matrix"] = _matrix_lists(mat)
        if lemma is not None:
            payload["lemma1"] = lemma
        out = _json(payload)
    elif args.format == "csv":
        header = ["m", "n", "white_count", "stratum_dim"]
        row = [c.m, c.n, c.white_count, e]
        if lemma is not None:
            header.append("lemma1")
            row.append("pass" if lemma["passed"] else "fail")
        out = _csv(header, [row])
    else:
        out = f"size: {c.m} {c.n}\nwhite: {c.white_count}\n"
        if args.show_matrix:
            out += "matrix:\n" + format_matrix(mat)
        if lemma is not None:
            status = "pass" if lemma["passed"] else f"fail ({lemma['failure']} at {lemma['entry']})"
            out += f"lemma1: {status}\n"
        out += f"dim: {e}\n"
    sys.stdout.write(out)
    return 0


def cmd_chain(args) -> int:
    chain = build_chain(_load_diagram(args.file))
    if args.format == "json":
        out = chain_to_json(chain) + "\n"
    elif args.format == "csv":
        rows = [[k, e, format_diagram(d).strip().replace("\n", "/")] for k, (d, e) in enumerate(chain.steps)]
        out = _csv(["step", "dim", "diagram"], rows)
    else:
        out = format_chain(chain)
    sys.stdout.write(out)
    return 0


def cmd_dist(args) -> int:
    dist = counting.dim_distribution(args.m, args.n, cap=args.cap, jobs=args.jobs)
    items = sorted(dist.counts.items())
    if args.format == "json":
        out = _json({"m": dist.m, "n": dist.n, "total": dist.total, "counts": {str(e): c for e, c in items}})
    elif args.format == "csv":
        out = _csv(["m", "n", "dim", "count", "total"], [[dist.m, dist.n, e, c, dist.total] for e, c in items])
    else:
        lines = [f"{'dim':>4} {'count':>12} {'fraction':>12}"]
        for e, c in items:
            lines.append(f"{e:>4} {c:>12} {float(dist.fraction(e)):>12.{args.precision}f}")
        lines.append(f"total {dist.total}")
        out = "\n".join(lines) + "\n"
    sys.stdout.write(out)
    return 0


def cmd_count(args) -> int:
    method = args.method
    if method == "formula":
        value = counting.diagram_count(args.m, args.n)
    elif method == "transfer":
        value = count_by_transfer(args.m, args.n)
    elif method == "enumerate":
        limit = counting.diagram_count(args.m, args.n)
        if limit > args.cap:
            raise counting.CapExceeded(f"{limit} diagrams, above the cap {args.cap}")
        value = sum(counting.dim_distribution(args.m, args.n, cap=args.cap, jobs=args.jobs).counts.values())
    else:
        if args.m * args.n > 24:
            raise UsageError("brute force is limited to m*n <= 24")
        value = count_brute_force(args.m, args.n)
    if args.format == "json":
        out = _json({"m": args.m, "n": args.n, "method": method, "count": value})
    elif args.format == "csv":
        out = _csv(["m", "n", "method", "count"], [[args.m, args.n, method, value]])
    else:
        out = f"{value}\n"
    sys.stdout.write(out)
    return 0


def cmd_conjecture(args) -> int:
    rows = counting.conjecture_table(args.m, args.n_max, cap=args.cap, jobs=args.jobs, n_min=args.n_min)
    if args.format == "json":
        out = counting.table_to_json(rows) + "\n"
    elif args.format == "csv":
        out = counting.table_to_csv(rows)
    else:
        out = counting.table_to_text(rows, args.precision)
    sys.stdout.write(out)
    return 0


def cmd_cgl(args) -> int:
    if args.qm:
        system, _ = quantum_matrix_system(*args.qm)
    elif args.system:
        system = parse_system(_read(args.system))
    else:
        raise UsageError("give a system file or --qm M N")
    w = sorted(set(parse_subset(" ".join(args.subset))))
    mat = stratum_matrix(system, w)
    e = cgl_stratum_dim(system, w)
    rest = complement(system, w)
    if args.format == "json":
        payload = {"N": system.N, "subset": w, "complement": rest, "stratum_dim": e}
        if args.show_matrix:
            payload["matrix"] = _matrix_lists(mat)
        out = _json(payload)
    elif args.format == "csv":
        out = _csv(["N", "subset", "size", "stratum_dim"], [[system.N, " ".join(map(str, w)), len(rest), e]])
    else:
        out = f"N: {system.N}\nsubset: {' '.join(map(str, w))}\nsize: {len(rest)}\n"
        if args.show_matrix:
            out += "matrix:\n" + format_matrix(mat)
        out += f"dim: {e}\n"
    sys.stdout.write(out)
    return 0


def cmd_weyl(args) -> int:
    rs = root_system(args.type)
    word = parse_word(args.word)
    betas = beta_roots(rs, word)
    reduced = is_reduced(rs, word)
    payload = {"type": rs.name, "word": list(word), "reduced": reduced, "betas": [list(b) for b in betas]}
    if reduced:
        mat = schubert_cgl_matrix(rs, word)
        payload["kernel_dim"] = kernel_dim(mat)
        payload["zero_stratum_dim"] = zero_stratum_dim(rs, word)
        if args.show_matrix:
            payload["matrix"] = _matrix_lists(mat)
    if args.qm:
        got, want = quantum_matrix_word_check(args.qm[0], args.qm[1], word)
        payload["qm_check"] = {"zero_stratum_dim": got, "all_white_dim": want, "match": got == want}
    if args.format == "json":
        out = _json(payload)
    elif args.format == "csv":
        out = _csv(
            ["type", "word", "reduced", "kernel_dim", "zero_stratum_dim"],
            [[rs.name, ",".join(map(str, word)), int(reduced), payload.get("kernel_dim", ""), payload.get("zero_stratum_dim", "")]],
        )
    else:
        lines = [f"type: {rs.name}", f"word: {','.join(map(str, word))}", f"reduced: {'yes' if reduced else 'no'}"]
        lines += [f"beta_{k}: {' '.join(map(str, b))}" for k, b in enumerate(betas, start=1)]
        if reduced:
            if args.show_matrix:
                lines.append("matrix:")
                lines.append(format_matrix(mat).rstrip("\n"))
            lines.append(f"kernel dim: {payload['kernel_dim']}")
            lines.append(f"zero-stratum dim: {payload['zero_stratum_dim']}")
        if args.qm:
            qc = payload["qm_check"]
            lines.append(f"quantum matrices {args.qm[0]}x{args.qm[1]}: {'match' if qc['match'] else 'mismatch'} ({qc['zero_stratum_dim']} vs {qc['all_white_dim']})")
        out = "\n".join(lines) + "\n"
    sys.stdout.write(out)
    return 0 if reduced else 1


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "csv", "json"], default="text")
    common.add_argument("--jobs", type=int, default=_default_jobs(), help=f"worker processes (default ${JOBS_ENV} or 1)")
    common.add_argument("--cap", type=int, default=counting.DEFAULT_CAP, help="largest diagram count to enumerate")
    common.add_argument("--show-matrix", action="store_true", help="print the skew-adjacency matrix")
    common.add_argument("--precision", type=int, default=6, help="decimal digits in text tables")

    parser = argparse.ArgumentParser(prog="cauchon", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a diagram file")
    p.add_argument("file", help="diagram file, '-' for stdin")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("dim", parents=[common], help="stratum dimension of a diagram")
    p.add_argument("file")
    p.add_argument("--lemma1", action="store_true", help="also audit the triangular reduction")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("chain", parents=[common], help="dimension-decreasing chain from a diagram")
    p.add_argument("file")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("dist", parents=[common], help="histogram of stratum dimensions")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("count", parents=[common], help="number of m x n diagrams")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=["formula", "enumerate", "transfer", "brute"], default="formula")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("conjecture", parents=[common], help="empirical vs limiting dimension shares")
    p.add_argument("m", type=int)
    p.add_argument("n_max", type=int)
    p.add_argument("--n-min", type=int, default=None)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("cgl", parents=[common], help="stratum dimension for a CGL exponent matrix")
    p.add_argument("system", nargs="?", help="system file, '-' for stdin")
    p.add_argument("subset", nargs="*", help="1-based indices in w")
    p.add_argument("--qm", type=int, nargs=2, metavar=("M", "N"), help="use the quantum-matrix system")
    p.set_defaults(func=cmd_cgl)

    p = sub.add_parser("weyl", parents=[common], help="(0)-stratum of a quantum Schubert cell")
    p.add_argument("type", help="root system, e.g. A3")
    p.add_argument("word", help="comma-separated reflection indices")
    p.add_argument("--qm", type=int, nargs=2, metavar=("M", "N"), help="compare with m x n quantum matrices")
    p.set_defaults(func=cmd_weyl)
    return parser


ERROR_KINDS = [
    (DiagramError, "diagram"),
    (MatrixError, "matrix"),
    (WeylError, "weyl"),
    (DescentError, "descent"),
    (counting.CapExceeded, "cap"),
    (UsageError, "usage"),
    (IndexError, "index"),
    (OSError, "io"),
]


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "cgl" and args.qm and args.system is not None:
        # with --qm the first positional is part of the subset
        args.subset = [args.system, *args.subset]
        args.system = None
    try:
        return args.func(args)
    except tuple(cls for cls, _ in ERROR_KINDS) as exc:
        kind = next(k for cls, k in ERROR_KINDS if isinstance(exc, cls))
        message = " ".join(str(exc).split())
        print(f"error: {kind}: {message}", file=sys.stderr)
        return 2 if kind in ("usage", "io") else 1


if __name__ == "__main__":
    sys.exit(main())
