"""Command line front end.

Every subcommand prints one JSON document on standard output.  Exit status
is 0 when the computation succeeds and the checked property holds, 1 when a
property fails or a required (co)limit or guard stops the computation, and
2 on usage errors, unknown names or invalid input files.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import dot as dotmod
from .comma import comma_left, comma_right
from .constructions import (
    adjunction_check,
    codensity,
    coyoneda_check,
    density_check,
    limit_as_ran,
    nerve_realization,
    order_extension,
    yoneda_check,
)
from .errors import KanError, NotFound, ValidationError
from .finite import lan_in, ran_in
from .kan import (
    HomFunctor,
    IdentityEndofunctor,
    ProductFunctor,
    hom_bijection_check,
    lan,
    preservation_check,
    ran,
    verify_universal,
)
from .sets import SetFunctor, colimit, limit
from .workspace import WorkspaceError, load


class Failure(Exception):
    """A mathematical verdict that does not hold; carries the result document."""

    def __init__(self, doc):
        super().__init__(doc.get("error", {}).get("message", "property fails"))
        self.doc = doc


class UsageError(Exception):
    pass


def _diag(msg):
    color = sys.stderr.isatty() and "NO_COLOR" not in os.environ
    prefix = "\033[31merror:\033[0m" if color else "error:"
    print(f"{prefix} {msg}", file=sys.stderr)


def setfunctor_doc(X):
    return {"sets": {a: list(X.sets[a]) for a in X.shape.objects},
            "functions": {f: dict(X.fns[f]) for f in X.shape.morphisms if not X.shape.is_identity(f)}}


def transformation_doc(t):
    return {a: (dict(c) if isinstance(c, dict) else c) for a, c in t.components.items()}


def functor_doc(F):
    return {"objects": dict(F.object_map),
            "morphisms": {f: g for f, g in F.morphism_map.items() if not F.source.is_identity(f)}}


def extension_doc(kan):
    ext = kan.ext
    body = setfunctor_doc(ext) if isinstance(ext, SetFunctor) else functor_doc(ext)
    key = "unit" if kan.direction == "left" else "counit"
    return {"direction": kan.direction, "ext": body, key: transformation_doc(kan.mediator)}


def _values(ws, name):
    """A set functor or a functor into a finite category, by name."""
    if name in ws.setfunctors:
        return ws.setfunctors[name]
    if name in ws.functors:
        return ws.functors[name]
    raise NotFound(f"no set functor or functor named {name!r}")


def _object(C, name):
    if name not in C.objects:
        raise NotFound(f"no object {name!r} in {C.name or 'the category'}")
    return name


def _write_dot(args, target, name=None):
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dotmod.export_dot(target, name))


def _verdict(doc, holds, message):
    doc["holds"] = holds
    if not holds:
        doc["status"] = "fails"
        doc["error"] = {"code": "property-fails", "message": message}
        raise Failure(doc)
    return doc


# -- subcommands ------------------------------------------------------------


def cmd_validate(ws, args):
    picked = [n for n in (args.cat, args.functor, args.setfunctor, args.nat) if n]
    if args.cat:
        ws.category(args.cat)
        _write_dot(args, ws.category(args.cat), args.cat)
    if args.functor:
        ws.functor(args.functor)
    if args.setfunctor:
        ws.setfunctor(args.setfunctor)
    if args.nat:
        ws.transformation(args.nat)
    if picked:
        return {}
    return {"names": ws.names()}


def cmd_limit(ws, args):
    D = ws.setfunctor(args.X)
    res = limit(D, cap=args.guard_nathom)
    via_ran = limit_as_ran(D, cap=args.guard_nathom)
    return {"size": len(res.apex), "apex": list(res.apex),
            "projections": {j: dict(res.cert.legs[j]) for j in D.shape.objects},
            "ran_comparison": {"ran_size": via_ran.ran_size, "commutes": via_ran.commutes, "holds": via_ran.holds}}


def cmd_colimit(ws, args):
    D = ws.setfunctor(args.X)
    res = colimit(D)
    return {"size": len(res.apex), "apex": list(res.apex),
            "coprojections": {j: dict(res.cert.legs[j]) for j in D.shape.objects}}


def _extension(ws, args, direction):
    K = ws.functor(args.K)
    X = _values(ws, args.X)
    if isinstance(X, SetFunctor):
        return (lan if direction == "left" else ran)(K, X)
    return (lan_in if direction == "left" else ran_in)(K, X)


def cmd_lan(ws, args):
    kan = _extension(ws, args, "left")
    _write_dot(args, kan, f"Lan_{args.K}({args.X})")
    return extension_doc(kan)


def cmd_ran(ws, args):
    kan = _extension(ws, args, "right")
    _write_dot(args, kan, f"Ran_{args.K}({args.X})")
    return extension_doc(kan)


def cmd_comma(ws, args):
    K = ws.functor(args.K)
    b = _object(K.target, args.b)
    comma = comma_left(K, b) if args.side == "left" else comma_right(b, K)
    _write_dot(args, comma)
    C = comma.cat
    return {"side": args.side, "objects": list(C.objects),
            "witnesses": dict(comma.witnesses),
            "morphisms": [[f, d, c] for f, (d, c) in C.morphisms.items() if not C.is_identity(f)]}


def cmd_universal(ws, args):
    kan = _extension(ws, args, args.direction)
    Lp = _values(ws, args.L)
    med = ws.transformation(args.mediator)
    alpha = verify_universal(kan, Lp, med, cap=args.guard_nathom)
    return {"direction": args.direction, "factorisation": transformation_doc(alpha)}


def cmd_hom_bijection(ws, args):
    kan = _extension(ws, args, args.direction)
    H = ws.setfunctor(args.H)
    rep = hom_bijection_check(kan, H, cap=args.guard_nathom)
    doc = rep.as_dict()
    if rep.witness is not None:
        doc["witness"] = rep.witness
    return _verdict(doc, rep.bijective, "the canonical map between the hom-sets is not a bijection")


def cmd_adjunction(ws, args):
    rep = adjunction_check(ws.functor(args.L), ws.functor(args.R))
    doc = rep.as_dict()
    if not rep.holds:
        failed = "condition (1)" if not rep.condition1 else "condition (2)"
        return _verdict(doc, False, f"{failed} fails: L is not left adjoint to R")
    return _verdict(doc, True, "")


def cmd_codensity(ws, args):
    G = ws.setfunctor(args.G)
    probes = [[f"y{i}" for i in range(n)] for n in args.probe]
    M = codensity(G, probes, cap=args.guard_nathom)
    out = []
    ok = True
    for b in M.probes:
        rep = M.check_laws(b)
        ok = ok and rep.holds
        entry = rep.as_dict()
        entry["unit"] = dict(M.unit[b])
        if args.tables:
            entry["T"] = list(M.T[b])
            if b in M.mult:
                entry["mult"] = dict(M.mult[b])
        out.append(entry)
    return _verdict({"probes": out}, ok, "a monad law fails at some probe")


def cmd_yoneda(ws, args):
    X = ws.setfunctor(args.X)
    rep = yoneda_check(X, _object(X.shape, args.a), cap=args.guard_nathom)
    return _verdict(rep.as_dict(), rep.holds, "Yoneda bijection fails")


def cmd_coyoneda(ws, args):
    X = ws.setfunctor(args.X)
    rep = coyoneda_check(X, _object(X.shape, args.a))
    return _verdict(rep.as_dict(), rep.holds, "coYoneda bijection fails")


def cmd_density(ws, args):
    rep = density_check(ws.setfunctor(args.F))
    return _verdict(rep.as_dict(), rep.holds, "the presheaf is not recovered from its elements")


def cmd_nerve(ws, args):
    F = ws.functor(args.F)
    X = ws.setfunctor(args.X)
    rep = nerve_realization(F, X, _object(F.target, args.e), cap=args.guard_nathom)
    if rep.realization is None:
        doc = rep.as_dict()
        doc["status"] = "fails"
        doc["error"] = {"code": "no-colimit", "message": rep.detail}
        raise Failure(doc)
    return _verdict(rep.as_dict(), rep.holds, "E(|X|, e) and Nat(X, R_e) are not in bijection")


def cmd_order_ext(ws, args):
    Q, R = ws.category(args.Q), ws.category(args.R)
    X = ws.functor(args.X)
    rep = order_extension(Q, R, X)
    doc = rep.as_dict()
    if rep.undefined:
        doc["status"] = "fails"
        where = "; ".join(f"{k}: {v}" for k, v in sorted(rep.undefined.items()))
        doc["error"] = {"code": "extension-undefined", "message": f"empty approximation set ({where})"}
        raise Failure(doc)
    return _verdict(doc, rep.holds, "extension tables disagree with the sup/inf formulas")


def _endofunctor(spec):
    kind, _, size = spec.partition(":")
    if kind == "identity":
        return IdentityEndofunctor()
    try:
        n = int(size)
    except ValueError:
        raise UsageError(f"bad endofunctor {spec!r}; use identity, hom:N or product:N") from None
    c = [str(i) for i in range(n)]
    if kind == "hom":
        return HomFunctor(c)
    if kind == "product":
        return ProductFunctor(c)
    raise UsageError(f"bad endofunctor {spec!r}; use identity, hom:N or product:N")


def cmd_preserve(ws, args):
    kan = _extension(ws, args, args.direction)
    if not isinstance(kan.ext, SetFunctor):
        raise UsageError("preserve needs a set-valued X")
    rep = preservation_check(_endofunctor(args.endo), kan, cap=args.guard_nathom)
    return _verdict(rep.as_dict(), rep.holds, f"{rep.functor} does not preserve the extension")


COMMANDS = {
    "validate": cmd_validate, "limit": cmd_limit, "colimit": cmd_colimit, "lan": cmd_lan, "ran": cmd_ran,
    "comma": cmd_comma, "universal": cmd_universal, "hom-bijection": cmd_hom_bijection,
    "adjunction": cmd_adjunction, "codensity": cmd_codensity, "yoneda": cmd_yoneda,
    "coyoneda": cmd_coyoneda, "density": cmd_density, "nerve": cmd_nerve, "order-ext": cmd_order_ext,
    "preserve": cmd_preserve,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--input", action="append", default=argparse.SUPPRESS, metavar="PATH",
                        help="workspace JSON file (repeatable)")
    common.add_argument("--guard-nathom", type=int, default=argparse.SUPPRESS, metavar="N",
                        help="cap on enumeration search spaces (default 1000000)")
    common.add_argument("--dot", default=argparse.SUPPRESS, metavar="PATH", help="also write a DOT rendering")
    common.add_argument("--json-indent", type=int, default=argparse.SUPPRESS, metavar="N")

    p = _Parser(prog="kanext", description="Kan extensions over finite categories.", parents=[common])
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name, help_text):
        return sub.add_parser(name, help=help_text, parents=[common])

    s = add("validate", "load and validate the workspace")
    s.add_argument("--cat")
    s.add_argument("--functor")
    s.add_argument("--setfunctor")
    s.add_argument("--nat")
    add("limit", "limit of a set-valued diagram").add_argument("--X", required=True)
    add("colimit", "colimit of a set-valued diagram").add_argument("--X", required=True)
    for name in ("lan", "ran"):
        s = add(name, f"{'left' if name == 'lan' else 'right'} Kan extension of X along K")
        s.add_argument("--K", required=True)
        s.add_argument("--X", required=True)
    s = add("comma", "the comma category K↓b (left) or b↓K (right)")
    s.add_argument("--K", required=True)
    s.add_argument("--b", required=True)
    s.add_argument("--side", choices=["left", "right"], default="left")
    s = add("universal", "factor a candidate through the extension")
    for a in ("--K", "--X", "--L", "--mediator"):
        s.add_argument(a, required=True)
    s.add_argument("--direction", choices=["left", "right"], default="left")
    s = add("hom-bijection", "check the hom-set bijection at H")
    for a in ("--K", "--X", "--H"):
        s.add_argument(a, required=True)
    s.add_argument("--direction", choices=["left", "right"], default="left")
    s = add("adjunction", "decide L ⊣ R by the two extension conditions")
    s.add_argument("--L", required=True)
    s.add_argument("--R", required=True)
    s = add("codensity", "codensity monad of G at probe sets")
    s.add_argument("--G", required=True)
    s.add_argument("--probe", type=int, action="append", required=True, metavar="SIZE")
    s.add_argument("--tables", action="store_true", help="include T and μ tables")
    for name in ("yoneda", "coyoneda"):
        s = add(name, f"{name} check at an object")
        s.add_argument("--X", required=True)
        s.add_argument("--a", required=True)
    add("density", "rebuild a presheaf from its elements").add_argument("--F", required=True)
    s = add("nerve", "realization/nerve bijection")
    for a in ("--F", "--X", "--e"):
        s.add_argument(a, required=True)
    s = add("order-ext", "extensions of a monotone map between chains")
    for a in ("--Q", "--R", "--X"):
        s.add_argument(a, required=True)
    s = add("preserve", "does an endofunctor preserve the extension")
    for a in ("--K", "--X"):
        s.add_argument(a, required=True)
    s.add_argument("--endo", default="identity", help="identity, hom:N or product:N")
    s.add_argument("--direction", choices=["left", "right"], default="left")
    return p


def _emit(doc, indent):
    sys.stdout.write(json.dumps(doc, sort_keys=True, ensure_ascii=False, indent=indent) + "\n")
    sys.stdout.flush()


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        _diag(str(exc))
        _emit({"status": "error", "error": {"code": "usage", "message": str(exc)}}, None)
        return 2
    args.input = getattr(args, "input", [])
    args.guard_nathom = getattr(args, "guard_nathom", 10 ** 6)
    args.dot = getattr(args, "dot", None)
    indent = getattr(args, "json_indent", None)
    try:
        ws = load(args.input, nathom_cap=args.guard_nathom)
        doc = {"status": "ok", **COMMANDS[args.command](ws, args)}
    except Failure as exc:
        _emit(exc.doc, indent)
        return 1
    except (WorkspaceError, ValidationError, NotFound, UsageError) as exc:
        err = exc.as_dict() if isinstance(exc, KanError) else {"code": "usage", "message": str(exc)}
        _diag(str(exc))
        _emit({"status": "error", "error": err}, indent)
        return 2
    except KanError as exc:
        _emit({"status": "error", "error": exc.as_dict()}, indent)
        return 1
    _emit(doc, indent)
    return 0


if __name__ == "__main__":
    sys.exit(main())
