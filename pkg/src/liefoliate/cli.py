"""Command-line front end.

Subcommands: rootsys {show|dynkin}, catalog list, parabolic, horospherical,
foliations enumerate, slmodel {iwasawa|killing|check-lie-triple|halfplane},
verify.  Structured output is UTF-8 JSON, one document per invocation; data
goes to stdout and diagnostics to stderr.  Exit status 0 on success, 1 on
domain errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .catalog import catalog_entries, catalog_lookup
from .errors import LieFoliateError
from .foliations import enumerate_foliations
from .parabolic import horospherical, parabolic_data, phi_subset
from .roots import build_root_system, dynkin_diagram, format_root
from .slmodel import (
    halfplane_orbit,
    is_lie_triple,
    iwasawa_group,
    killing_form,
    subspace,
)
from .verify import SUITES, run_suite


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def _parse_phi(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(p) for p in text.replace(" ", "").split(",") if p != "")
    except ValueError:
        raise LieFoliateError(f"cannot parse Phi indices from {text!r}")


def _parse_matrix(text: str) -> np.ndarray:
    try:
        data = json.loads(text)
        return np.array(data, dtype=float)
    except (json.JSONDecodeError, ValueError) as exc:
        raise LieFoliateError(f"cannot parse matrix JSON: {exc}")


def _cmd_rootsys(args) -> int:
    if args.action == "show" and args.format == "dot":
        print("usage error: --format dot is only valid for 'rootsys dynkin'", file=sys.stderr)
        return 2
    rs = build_root_system(args.family, args.rank)
    if args.action == "show":
        if args.format == "json":
            _emit_json(rs.to_dict())
        else:
            print(f"family {rs.family.value}  rank {rs.rank}  ambient dim {rs.ambient_dim}")
            print(f"|Sigma| = {len(rs.roots)}, |Sigma+| = {len(rs.positive)}")
            print("simple roots:")
            for i, alpha in enumerate(rs.simple, start=1):
                print(f"  alpha_{i} = {format_root(alpha)}")
            print("positive roots:")
            for lam in rs.positive:
                print(f"  {format_root(lam)}")
        return 0
    dd = dynkin_diagram(rs)
    if args.format == "dot":
        sys.stdout.write(dd.to_dot(f"{rs.family.value}{rs.rank}"))
    elif args.format == "json":
        _emit_json(dd.to_dict())
    else:
        doubles = [v.index for v in dd.vertices if v.double_circle]
        print(f"Dynkin diagram of {rs.family.value}_{rs.rank}: {dd.rank} vertices")
        for e in dd.edges:
            arrow = f", arrow {e.arrow[0]}->{e.arrow[1]}" if e.arrow else ""
            print(f"  {e.i} -- {e.j}: {e.lines} line(s){arrow}")
        print(f"double circles: {doubles if doubles else 'none'}")
        for note in dd.notes:
            print(f"note: {note}")
    return 0


def _cmd_catalog(args) -> int:
    entries = catalog_entries()
    if args.format == "json":
        _emit_json(
            [
                {
                    "key": e.key,
                    "name": e.ascii_doc,
                    "display": e.display_doc,
                    "family": e.family.value,
                    "rank": e.rank_doc,
                    "multiplicities": e.mult_pattern,
                    "dim_k0": e.dim_k0,
                    "notes": list(e.notes),
                }
                for e in entries
            ]
        )
    else:
        width = max(len(e.ascii_doc) for e in entries)
        for e in entries:
            k0 = "0" if e.dim_k0 == 0 else "-"
            print(
                f"{e.ascii_doc:<{width}}  {e.family.value:>2}  rank {e.rank_doc:<7} "
                f"mults {e.mult_pattern:<22} k0 {k0}  {e.display_doc}"
            )
    return 0


def _cmd_parabolic(args) -> int:
    space = catalog_lookup(args.space)
    phi = phi_subset(space, _parse_phi(args.phi))
    data = parabolic_data(space, phi)
    if args.format == "json":
        _emit_json(data.to_dict())
    else:
        print(f"space {space.name} ({space.display}), Phi = {list(phi.indices)}")
        print(f"|Sigma_Phi| = {len(data.sigma_phi)}, |Sigma_Phi+| = {len(data.sigma_phi_pos)}")
        for label, value in (
            ("dim a_Phi", data.dim_a_phi),
            ("dim n_Phi", data.dim_n_phi),
            ("dim g0", data.dim_g0),
            ("dim l_Phi", data.dim_l_phi),
            ("dim m_Phi", data.dim_m_phi),
            ("dim q_Phi", data.dim_q_phi),
            ("dim p_Phi", data.dim_p_phi),
            ("dim p_Phi^s", data.dim_p_phi_s),
            ("dim k_Phi", data.dim_k_phi),
            ("dim g_Phi", data.dim_g_phi),
            ("dim z_Phi", data.dim_z_phi),
        ):
            print(f"  {label:<12} = {'unavailable' if value is None else value}")
    return 0


def _cmd_horospherical(args) -> int:
    space = catalog_lookup(args.space)
    phi = phi_subset(space, _parse_phi(args.phi))
    data = horospherical(space, phi)
    if args.format == "json":
        _emit_json(data.to_dict())
    else:
        print(f"space {space.name} ({space.display}), Phi = {list(phi.indices)}")
        print(f"  dim F_Phi^s   = {data.dim_Fs}")
        for f in data.factors:
            print(f"    {f.name}: component {list(f.component_indices)}, dim {f.dim}")
        print(f"  dim Euclidean = {data.dim_euclidean}")
        print(f"  dim N_Phi     = {data.dim_N}")
        print(f"  total         = {space.dimension} = dim M")
    return 0


def _cmd_foliations(args) -> int:
    space = catalog_lookup(args.space)
    classes = enumerate_foliations(space, include_trivial=args.include_trivial)
    if args.codim is not None:
        classes = [c for c in classes if c.codim == args.codim]
    if args.format == "json":
        _emit_json([c.to_dict() for c in classes])
    else:
        print(f"{len(classes)} foliation class(es) on {space.name} ({space.display})")
        for c in classes:
            factors = ", ".join(f"{f.algebra}H^{f.n}" for f in c.factors) or "-"
            print(
                f"  Phi {str(list(c.phi)):<12} orbit size {len(c.orbit)}  dim V {c.dim_v}  "
                f"leaf dim {c.leaf_dim:>3}  codim {c.codim:>2}  factors: {factors}"
            )
    return 0


def _cmd_slmodel(args) -> int:
    if args.action == "iwasawa":
        g = _parse_matrix(args.matrix)
        n = args.rank + 1
        if g.shape != (n, n):
            raise LieFoliateError(f"expected a {n}x{n} matrix for rank {args.rank}")
        f = iwasawa_group(g)
        residual = float(np.abs(f.reassemble() - g).max())
        _emit_json(
            {
                "k": f.k.tolist(),
                "a": f.a.tolist(),
                "n": f.n.tolist(),
                "residual": residual,
            }
        )
    elif args.action == "killing":
        x = _parse_matrix(args.x)
        y = _parse_matrix(args.y)
        value = killing_form(x, y)
        n = x.shape[0]
        closed = 2.0 * n * float(np.trace(x @ y))
        _emit_json({"killing": value, "closed_form": closed, "difference": value - closed})
    elif args.action == "check-lie-triple":
        mats = _parse_matrix(args.basis)
        if mats.ndim != 3:
            raise LieFoliateError("basis must be a JSON list of square matrices")
        result = is_lie_triple(subspace(list(mats)))
        _emit_json({"holds": result.holds, "residual": result.residual})
    else:  # halfplane
        base = complex(args.base_re, args.base_im)
        points = halfplane_orbit(args.orbit, args.samples, base)
        if args.format == "csv":
            print("re,im")
            for p in points:
                print(f"{p.real!r},{p.imag!r}")
        else:
            _emit_json([{"re": p.real, "im": p.imag} for p in points])
    return 0


def _cmd_verify(args) -> int:
    checks = run_suite(args.suite)
    failed = 0
    for name, ok, detail in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
        failed += 0 if ok else 1
    if failed:
        print(f"{failed} criterion/criteria failed", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liefoliate",
        description="Restricted root systems, parabolic data, and hyperpolar foliation classes "
        "for symmetric spaces of noncompact type.",
        epilog="Space names: sl(m,R)/SL<m>, sl(m,C), sl(m,H), so(p,q)/SOo(p,q), so(m,C), "
        "so(m,H), sp(r,R), sp(r,C), sp(p,q), su(p,q), e6(6|2|-14|-26|C), e7(7|-5|-25|C), "
        "e8(8|-24|C), f4(4|-20|C), g2(2|C); display names like SL_5(R)/SO_5 also work. "
        "LIEFOLIATE_SEED overrides the sampling seed.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rootsys", help="root systems and Dynkin diagrams")
    p.add_argument("action", choices=("show", "dynkin"))
    p.add_argument("--family", required=True,
                   choices=("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2", "BC"))
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--format", default="table", choices=("table", "json", "dot"))
    p.set_defaults(func=_cmd_rootsys)

    p = sub.add_parser("catalog", help="browse the symmetric-space catalog")
    p.add_argument("action", choices=("list",))
    p.add_argument("--format", default="table", choices=("table", "json"))
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("parabolic", help="parabolic subalgebra dimension data")
    p.add_argument("--space", required=True)
    p.add_argument("--phi", default="", help="comma-separated simple root indices, e.g. 1,3")
    p.add_argument("--format", default="table", choices=("table", "json"))
    p.set_defaults(func=_cmd_parabolic)

    p = sub.add_parser("horospherical", help="horospherical decomposition factors")
    p.add_argument("--space", required=True)
    p.add_argument("--phi", default="")
    p.add_argument("--format", default="table", choices=("table", "json"))
    p.set_defaults(func=_cmd_horospherical)

    p = sub.add_parser("foliations", help="enumerate hyperpolar foliation classes")
    p.add_argument("action", choices=("enumerate",))
    p.add_argument("--space", required=True)
    p.add_argument("--include-trivial", action="store_true")
    p.add_argument("--codim", type=int, default=None)
    p.add_argument("--format", default="table", choices=("table", "json"))
    p.set_defaults(func=_cmd_foliations)

    p = sub.add_parser("slmodel", help="matrix-model computations in sl(n,R)")
    psub = p.add_subparsers(dest="action", required=True)
    q = psub.add_parser("iwasawa", help="factor g = k a n")
    q.add_argument("--rank", required=True, type=int)
    q.add_argument("--matrix", required=True, help="JSON nested list, row-major")
    q.set_defaults(func=_cmd_slmodel, action="iwasawa")
    q = psub.add_parser("killing", help="Killing form of two traceless matrices")
    q.add_argument("--x", required=True)
    q.add_argument("--y", required=True)
    q.set_defaults(func=_cmd_slmodel, action="killing")
    q = psub.add_parser("check-lie-triple", help="test [[S,S],S] in span(S)")
    q.add_argument("--basis", required=True, help="JSON list of symmetric matrices")
    q.set_defaults(func=_cmd_slmodel, action="check-lie-triple")
    q = psub.add_parser("halfplane", help="sample K/A/N orbit points on the upper half plane")
    q.add_argument("--orbit", required=True, choices=("K", "A", "N"))
    q.add_argument("--samples", type=int, default=25)
    q.add_argument("--base-re", type=float, default=0.0)
    q.add_argument("--base-im", type=float, default=1.0)
    q.add_argument("--format", default="json", choices=("json", "csv"))
    q.set_defaults(func=_cmd_slmodel, action="halfplane")

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--suite", default="all", choices=sorted(SUITES))
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LieFoliateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
