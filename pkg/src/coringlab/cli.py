"""Command line driver.

Exit status: 0 when every requested check passes, 1 when any check fails,
2 on malformed input (unknown names, shape mismatches, parse errors).

The session file defaults to the CORINGLAB_SESSION environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import session as session_mod
from .algebra import check_algebra
from .bimodule import check_bimodule
from .coring import check_comodule, check_coring
from .cowreath import (
    adjunction_hat,
    adjunction_tilde,
    check_cowreath,
    cowreath_product,
)
from .entwine import check_entwining, entwined_coring
from .ore import check_ore_wreath, ore_vs_wreath_product, twist_vs_skew_mul
from .rcat import check_r_object
from .reports import InputError, PreconditionFailure, Report, WellDefinednessError
from .wreath import check_l_wreath, check_wreath, twisted_tensor_product, wreath_product


def _add_common(sp):
    sp.add_argument("--session", default=argparse.SUPPRESS,
                    help="session JSON file (default: $CORINGLAB_SESSION)")
    sp.add_argument("--format", choices=("text", "json"),
                    default=argparse.SUPPRESS)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="coringlab",
        description="verify and build coring, cowreath and wreath structures "
                    "from structure-constant session files",
    )
    p.add_argument("--session", default=os.environ.get("CORINGLAB_SESSION"),
                   help="session JSON file (default: $CORINGLAB_SESSION)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    chk = sub.add_parser("check", help="run a checker on a named object")
    chk.add_argument("kind", choices=(
        "algebra", "bimodule", "coring", "comodule", "entwining",
        "r-object", "cowreath", "wreath", "twisting"))
    chk.add_argument("name")
    _add_common(chk)

    bld = sub.add_parser("build", help="run a construction and store it")
    bld.add_argument("kind", choices=(
        "entwined-coring", "cowreath-product", "wreath-product",
        "twisted-product", "lift"))
    bld.add_argument("names", nargs="+",
                     help="input object name(s); lift takes ENTWINING COWREATH")
    bld.add_argument("--out", required=True)
    bld.add_argument("--save", help="write the updated session to this file")
    _add_common(bld)

    ore = sub.add_parser("ore", help="degree-bounded skew polynomial checks")
    ore.add_argument("action", choices=("check", "compare"))
    ore.add_argument("--data", required=True)
    ore.add_argument("--degree", type=int, required=True)
    _add_common(ore)

    adj = sub.add_parser("adjoint", help="adjunction transposes for a cowreath")
    adj.add_argument("direction", choices=("hat", "tilde"))
    adj.add_argument("--cowreath", required=True)
    adj.add_argument("--x", required=True, help="comodule over the base coring")
    adj.add_argument("--y", required=True,
                     help="comodule over the product coring")
    adj.add_argument("--map", required=True, dest="map_name")
    adj.add_argument("--out")
    adj.add_argument("--save")
    _add_common(adj)
    return p


def emit(reports, fmt) -> int:
    if fmt == "json":
        print(json.dumps([r.to_json() for r in reports], indent=1))
    else:
        for r in reports:
            print(r.summary())
    return 0 if all(r.ok for r in reports) else 1


def _load(args) -> session_mod.SessionFile:
    if not args.session:
        raise InputError("no session file: pass --session or set "
                         "CORINGLAB_SESSION")
    return parse_with_location(args.session)


def parse_with_location(path):
    try:
        return session_mod.parse_session(path)
    except FileNotFoundError as exc:
        raise InputError(f"session file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


def run_check(s, kind, name):
    if kind == "algebra":
        return [check_algebra(s.lookup("algebras", name))]
    if kind == "bimodule":
        return [check_bimodule(s.lookup("bimodules", name))]
    if kind == "coring":
        return [check_coring(s.lookup("corings", name))]
    if kind == "comodule":
        return [check_comodule(s.lookup("comodules", name))]
    if kind == "entwining":
        return [check_entwining(s.lookup("entwinings", name))]
    if kind == "r-object":
        return [check_r_object(s.lookup("r_objects", name))]
    if kind == "cowreath":
        return [check_cowreath(s.lookup("cowreaths", name))]
    if kind == "wreath":
        if name in s.wreaths:
            return [check_wreath(s.wreaths[name])]
        if name in s.ttps:
            rext, text, rmap = s.ttps[name]
            try:
                rw, lw, prod_ext, alg_rep, eta_rep = twisted_tensor_product(
                    rext, text, rmap)
            except PreconditionFailure as exc:
                return [exc.report]
            return [check_wreath(rw), check_l_wreath(lw), alg_rep, eta_rep]
        raise InputError(f"unknown wreath {name!r}")
    if kind == "twisting":
        from .wreath import check_left_module_twisting
        return [check_left_module_twisting(s.lookup("twistings", name))]
    raise InputError(f"unknown check kind {kind!r}")


def run_build(s, kind, names, out):
    """Execute a build and serialize the result into the session."""
    store = session_mod.SessionStore(s)
    if kind == "entwined-coring":
        e = s.lookup("entwinings", names[0])
        cor = entwined_coring(e, name=out)
        store.add_coring(out, cor)
        return [Report(f"built entwined coring {out}")]
    if kind == "cowreath-product":
        w = s.lookup("cowreaths", names[0])
        prod, morph = cowreath_product(w, name=out)
        store.add_coring(out, prod)
        return [Report(f"built cowreath product {out}"), morph]
    if kind in ("wreath-product", "twisted-product"):
        if kind == "twisted-product":
            rext, text, rmap = s.lookup("ttps", names[0])
            rw, lw, prod_ext, alg_rep, eta_rep = twisted_tensor_product(
                rext, text, rmap)
        else:
            w = s.lookup("wreaths", names[0])
            prod_ext, alg_rep, eta_rep = wreath_product(w, name=out)
        prod_ext.total.name = out
        store.algebra_name(prod_ext.total)
        return [Report(f"built wreath product {out}"), alg_rep, eta_rep]
    if kind == "lift":
        from .cowreath import entwining_lift_cowreath
        e = s.lookup("entwinings", names[0])
        n = s.lookup("cowreaths", names[1])
        lifted = entwining_lift_cowreath(e, n, name=out)
        store.add_cowreath(out, lifted)
        return [Report(f"built lifted cowreath {out}")]
    raise InputError(f"unknown build kind {kind!r}")


def run_adjoint(s, args):
    w = s.lookup("cowreaths", args.cowreath)
    x = s.lookup("comodules", args.x)
    y = s.lookup("comodules", args.y)
    f = s.lookup("maps", args.map_name)
    if args.direction == "hat":
        out_map = adjunction_hat(w, x, y, f)
    else:
        out_map = adjunction_tilde(w, x, y, f)
    return out_map


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        s = _load(args)
        if args.command == "check":
            return emit(run_check(s, args.kind, args.name), args.format)
        if args.command == "build":
            try:
                reports = run_build(s, args.kind, args.names, args.out)
            except PreconditionFailure as exc:
                return emit([exc.report], args.format)
            if args.save:
                session_mod.write_session(s.raw, args.save)
            return emit(reports, args.format)
        if args.command == "ore":
            d = s.lookup("skewpoly", args.data)
            if args.action == "check":
                reports = [check_ore_wreath(d, args.degree)]
            else:
                reports = [ore_vs_wreath_product(d, args.degree),
                           twist_vs_skew_mul(d, args.degree)]
            return emit(reports, args.format)
        if args.command == "adjoint":
            out_map = run_adjoint(s, args)
            if args.out:
                session_mod.SessionStore(s).map_name(out_map, args.out)
                if args.save:
                    session_mod.write_session(s.raw, args.save)
            payload = {
                "name": out_map.name,
                "matrix": session_mod._fmt_matrix(s.field, out_map.matrix),
            }
            if args.format == "json":
                print(json.dumps(payload, indent=1))
            else:
                print(out_map.name)
                for row in payload["matrix"]:
                    print("  [" + ", ".join(row) + "]")
            return 0
    except (InputError, PreconditionFailure, WellDefinednessError) as exc:
        if isinstance(exc, PreconditionFailure):
            print(exc.report.summary(), file=sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
