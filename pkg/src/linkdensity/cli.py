"""Command-line entry point: ``linkdensity <subcommand> ...``.

Exit codes: 0 success, 2 domain error, 3 budget exceeded, 4 consistency failure.
"""

from __future__ import annotations

import argparse
import csv
import datetime as _dt
import sys
from pathlib import Path

from linkdensity import __version__
from linkdensity.adequacy import adequacy_report, certify_crossing_number, certify_nonalternating, state_graph
from linkdensity.densities import (
    VolumeOracle,
    adams_upper_value,
    det_density,
    det_density_value,
    lackenby_upper,
    vol_density_interval,
)
from linkdensity.diagram import (
    LinkDiagram,
    Tangle,
    belt_closure,
    braid_link,
    closure,
    is_alternating,
    is_reduced,
    pretzel_tangle,
    weaving_tangle,
)
from linkdensity.errors import DomainError, LinkDensityError
from linkdensity.invariants import DEFAULT_BRACKET_CAP, determinant, jones_breadth, kauffman_bracket, weaving_determinant
from linkdensity.io import export, read_diagram
from linkdensity.synthesis import DEFAULT_K_MAX, build_vol_link, cycle_family, nonalt_family, synthesize_det


def _header(args, argv) -> list[str]:
    out = [f"# linkdensity {__version__}"]
    out.append("# argv = " + " ".join(argv))
    cfg = {k: v for k, v in sorted(vars(args).items()) if k != "func"}
    out.append("# config = " + ", ".join(f"{k}={v}" for k, v in cfg.items()))
    if not args.no_timestamp:
        out.append("# timestamp = " + _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"))
    return out


def _write(path: str, lines: list[str]) -> None:
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def _load_link(path: str) -> LinkDiagram:
    obj = read_diagram(path)
    if not isinstance(obj, LinkDiagram):
        raise DomainError(f"{path} holds a tangle; close it first (gen ... --closure N|D)")
    return obj


def _close(t: Tangle, kind: str):
    if kind == "none":
        return t
    if kind == "belt":
        return belt_closure(t)
    return closure(t, kind)


def _tangle_from(kind: str, params: list[int]) -> Tangle:
    if kind == "weaving":
        if len(params) != 2:
            raise DomainError("weaving takes M N")
        return weaving_tangle(*params)
    if kind == "pretzel":
        if len(params) != 3:
            raise DomainError("pretzel takes L M N")
        return pretzel_tangle(*params)
    raise DomainError(f"unknown tangle family {kind!r}")


def cmd_gen(args, header) -> int:
    fam, p = args.family, args.params
    if fam in ("weaving", "pretzel"):
        obj = _close(_tangle_from(fam, [int(v) for v in p]), args.closure)
    else:
        if args.closure != "none":
            raise DomainError(f"{fam} already produces a closed link; use --closure none")
        if fam == "braid":
            if len(p) < 2:
                raise DomainError("braid takes STRANDS LETTER...")
            obj = braid_link((int(p[0]), [int(v) for v in p[1:]]))
        elif fam == "nonalt":
            if len(p) != 1:
                raise DomainError("nonalt takes N")
            obj = nonalt_family(int(p[0]))
        elif fam == "cycle":
            if len(p) < 2:
                raise DomainError("cycle takes (weaving|pretzel) PARAMS... COPIES")
            obj = cycle_family(_tangle_from(p[0], [int(v) for v in p[1:-1]]), int(p[-1]))
        elif fam == "volspec":
            if len(p) != 5:
                raise DomainError("volspec takes A B N M K")
            obj, recipe = build_vol_link(*[int(v) for v in p], eps=args.eps)
            header = header + ["# " + line for line in recipe.lines()]
        else:
            raise DomainError(f"unknown family {fam!r}")
    body = export(obj, args.format)
    Path(args.out).write_text("\n".join(header) + "\n" + body, encoding="utf-8", newline="\n")
    return 0


def cmd_inv(args, header) -> int:
    D = _load_link(args.file)
    if args.what == "bracket":
        print(kauffman_bracket(D, cap=args.cap))
    elif args.what == "breadth":
        print(jones_breadth(D, cap=args.cap))
    else:
        print(determinant(D))
    return 0


def cmd_adequacy(args, header) -> int:
    D = _load_link(args.file)
    rep = adequacy_report(D)
    ga, gb = state_graph(D, "A"), state_graph(D, "B")
    cert = certify_crossing_number(D)
    lines = [
        f"a_adequate = {str(rep.a_adequate).lower()}",
        f"b_adequate = {str(rep.b_adequate).lower()}",
        f"adequate = {str(rep.adequate).lower()}",
        f"s_a = {rep.s_a}",
        f"s_b = {rep.s_b}",
        f"a_self_loops = {len(ga.self_loops)}",
        f"b_self_loops = {len(gb.self_loops)}",
    ] + cert.lines()
    print("\n".join(lines))
    return 0


def cmd_certify(args, header) -> int:
    print("\n".join(certify_nonalternating(_load_link(args.file)).lines()))
    return 0


def cmd_density(args, header) -> int:
    print("\n".join(det_density(_load_link(args.file)).lines()))
    return 0


def cmd_bounds(args, header) -> int:
    D = _load_link(args.file)
    oracle = VolumeOracle.from_csv(args.volumes) if args.volumes else None
    c = D.n_crossings
    lines = [f"diagram = {D.name}", f"crossings = {c}"]
    if c >= 5:
        lines.append(f"adams_upper = {adams_upper_value(c)!r}")
    if is_alternating(D) and is_reduced(D):
        try:
            lines.append(f"lackenby_upper = {lackenby_upper(D)!r}")
        except DomainError as exc:
            lines.append(f"lackenby_upper = n/a ({exc})")
    interval = vol_density_interval(D, oracle)
    lines += ["vol_density." + line for line in interval.lines()]
    print("\n".join(lines))
    return 0


def cmd_synth(args, header) -> int:
    K, cert = synthesize_det(args.target, args.eps, args.k_max, exact_fallback=not args.strict_proof)
    Path(args.out).write_text("\n".join(header) + "\n" + export(K, "native"), encoding="utf-8", newline="\n")
    _write(args.cert, header + cert.lines())
    print(f"pass = {str(cert.passed).lower()}")
    return 0


def cmd_scan(args, header) -> int:
    if args.k_min < 3 or args.k_max < args.k_min:
        raise DomainError(f"need 3 <= k-min <= k-max, got {args.k_min}..{args.k_max}")
    with open(args.csv, "w", newline="", encoding="utf-8") as fh:
        for line in header:
            fh.write(line + "\n")
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["k", "crossings", "det_digits", "det", "det_density"])
        for k in range(args.k_min, args.k_max + 1):
            det = weaving_determinant(k, args.closure)
            c = k * (k - 1)
            w.writerow([k, c, len(str(det)), det, repr(det_density_value(det, c))])
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--no-timestamp", action="store_true", help="omit the timestamp header line")
    p = argparse.ArgumentParser(prog="linkdensity", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate a diagram")
    g.add_argument("family", choices=["weaving", "pretzel", "braid", "nonalt", "cycle", "volspec"])
    g.add_argument("params", nargs="*", help="family parameters")
    g.add_argument("--closure", choices=["N", "D", "belt", "none"], default="none")
    g.add_argument("--out", required=True)
    g.add_argument("--format", choices=["native", "pd", "gauss", "dt"], default="native")
    g.add_argument("--eps", type=float, default=None, help="volspec: check the epsilon inequalities")
    g.set_defaults(func=cmd_gen)

    i = sub.add_parser("inv", parents=[common], help="bracket, Jones breadth or determinant")
    i.add_argument("what", choices=["bracket", "breadth", "det"])
    i.add_argument("file")
    i.add_argument("--cap", type=int, default=DEFAULT_BRACKET_CAP, help="max crossings for the state sum")
    i.set_defaults(func=cmd_inv)

    a = sub.add_parser("adequacy", parents=[common], help="state graphs and crossing-number certificate")
    a.add_argument("file")
    a.set_defaults(func=cmd_adequacy)

    n = sub.add_parser("certify-nonalt", parents=[common], help="prime adequate non-alternating check")
    n.add_argument("file")
    n.set_defaults(func=cmd_certify)

    d = sub.add_parser("density", parents=[common], help="determinant density")
    d.add_argument("what", choices=["det"])
    d.add_argument("file")
    d.set_defaults(func=cmd_density)

    b = sub.add_parser("bounds", parents=[common], help="volume upper bounds")
    b.add_argument("file")
    b.add_argument("--volumes", help="CSV with columns id,volume,source")
    b.set_defaults(func=cmd_bounds)

    s = sub.add_parser("synth", parents=[common], help="synthesize a target determinant density")
    s.add_argument("--target", type=float, required=True)
    s.add_argument("--eps", type=float, required=True)
    s.add_argument("--k-max", type=int, default=DEFAULT_K_MAX)
    s.add_argument("--out", required=True)
    s.add_argument("--cert", required=True)
    s.add_argument("--strict-proof", action="store_true", help="disable the exact-scan fallback")
    s.set_defaults(func=cmd_synth)

    sc = sub.add_parser("scan", parents=[common], help="tabulate a family")
    sc.add_argument("family", choices=["weaving"])
    sc.add_argument("--k-min", type=int, required=True)
    sc.add_argument("--k-max", type=int, required=True)
    sc.add_argument("--closure", choices=["N", "D"], default="D")
    sc.add_argument("--csv", required=True)
    sc.set_defaults(func=cmd_scan)
    return p


def run(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, _header(args, argv))
    except LinkDensityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
