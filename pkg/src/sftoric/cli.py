"""Command line interface.

Exit codes: 0 on success, 1 when a verification fails, 2 on input errors.
A FILE argument is a path to a surface file; a bare bundled name (P2, F0,
F1, dP2, dP3, X1..X11) also works.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .errors import ToricError
from .fan import classify_semi_fano
from .laurent import canonical_string, qpoly_string
from .potential import bulk_superpotential, hori_vafa, superpotential
from .quantum import QHElement, quantum_sr_relations
from .surfaces import BUNDLED, BUNDLED_NON_FANO, load_bundled, parse_surface_file
from .verifier import psi_divisor, verify_homomorphism, verify_linear_identity


def _load(path: str):
    if not os.path.exists(path) and path in BUNDLED:
        return load_bundled(path)
    return parse_surface_file(path)


def _qh_string(el: QHElement) -> str:
    chunks = []
    if not el.scalar.is_zero():
        s = qpoly_string(el.scalar)
        chunks.append(f"({s})" if len(el.scalar.terms) >= 2 else s)
    for coord, c in enumerate(el.divisor, start=1):
        if c.is_zero():
            continue
        s = qpoly_string(c)
        chunks.append((f"({s})" if len(c.terms) >= 2 else s) + f"*D{coord}")
    return " + ".join(chunks) if chunks else "0"


def cmd_check(args) -> int:
    fan, spec = _load(args.file)
    print(f"surface {spec.name}: {fan.d} rays, {spec.k} Kahler parameters")
    for i in range(1, fan.d + 1):
        v = fan.ray(i)
        print(f"ray {i}: ({v[0]}, {v[1]})  D{i}^2 = {fan.self_intersection(i)}")
    semi = fan.is_semi_fano()
    print(f"semi-Fano: {'yes' if semi else 'no'}")
    if semi:
        chains = fan.minus_two_chains()
        if chains:
            body = " ".join("[" + " ".join(map(str, c.indices)) + "]" for c in chains)
            print(f"(-2)-chains: {body}")
        else:
            print("(-2)-chains: none")
        print(f"Fano: {'yes' if fan.is_fano() else 'no'}")
    return 0


def cmd_superpotential(args) -> int:
    fan, spec = _load(args.file)
    if args.hori_vafa:
        print(canonical_string(hori_vafa(spec)))
        return 0
    if args.bulk_divisor is not None or args.bulk_constant is not None:
        D = None
        if args.bulk_divisor is not None:
            D = tuple(int(x) for x in args.bulk_divisor.split(","))
        a = Fraction(args.bulk_constant) if args.bulk_constant is not None else 0
        print(bulk_superpotential(spec, a, D).canonical_string())
        return 0
    print(canonical_string(superpotential(spec).w))
    return 0


def cmd_psi(args) -> int:
    fan, spec = _load(args.file)
    for i in range(1, fan.d + 1):
        unit = tuple(1 if a == i - 1 else 0 for a in range(fan.d))
        print(f"psi(D{i}) = {canonical_string(psi_divisor(spec, unit))}")
    return 0


def cmd_qh(args) -> int:
    fan, spec = _load(args.file)
    for (i, j), el in quantum_sr_relations(fan, spec):
        print(f"D{i}*D{j} = {_qh_string(el)}")
    return 0


def cmd_verify(args) -> int:
    fan, spec = _load(args.file)
    if fan.d == 3:
        ok = verify_linear_identity(spec)
        print(f"surface {spec.name}")
        print(f"linear-identity {'PASS' if ok else 'FAIL'}")
        print("quantum relations: P^2 has no two-element primitive collections;")
        print("its quantum cohomology presentation is out of scope here")
        print(f"RESULT {'PASS' if ok else 'FAIL'}")
        return 0 if ok else 1
    qvals = None
    if args.q:
        qvals = [Fraction(v) for v in args.q.split(",")]
    report = verify_homomorphism(spec, qvals)
    print(report.to_text())
    return 0 if report.passed else 1


def cmd_classify(args) -> int:
    fans = classify_semi_fano(args.max_rays)
    n_fano = 0
    for fan in fans:
        rays = " ".join(f"({v[0]},{v[1]})" for v in fan.rays)
        tag = ""
        if fan.is_fano():
            n_fano += 1
            tag = "  [Fano]"
        print(f"{fan.d} rays: {rays}{tag}")
    print(f"{len(fans)} classes, {n_fano} Fano")
    return 0


def cmd_table(args) -> int:
    for name in BUNDLED_NON_FANO:
        _, spec = load_bundled(name)
        print(f"{name}: {canonical_string(superpotential(spec).w)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sftoric",
        description="Open Gromov-Witten invariants, superpotentials and "
        "quantum cohomology of semi-Fano toric surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a surface file and print fan data")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("superpotential", help="print the superpotential W")
    p.add_argument("file")
    p.add_argument("--hori-vafa", action="store_true", help="leading part W0 only")
    p.add_argument("--bulk-divisor", help="comma-separated divisor multiplicities")
    p.add_argument("--bulk-constant", help="constant bulk term a")
    p.set_defaults(func=cmd_superpotential)

    p = sub.add_parser("psi", help="print psi(D_i) for every toric divisor")
    p.add_argument("file")
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("qh", help="print the quantum products of primitive pairs")
    p.add_argument("file")
    p.set_defaults(func=cmd_qh)

    p = sub.add_parser("verify", help="verify QH*(X) = Jac(W) for a surface")
    p.add_argument("file")
    p.add_argument("--q", help="comma-separated rational q values in (0,1)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="classify semi-Fano fans up to isomorphism")
    p.add_argument("--max-rays", type=int, default=9)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table", help="regenerate the bundled superpotential table")
    p.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ToricError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
