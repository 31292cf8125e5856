import argparse
import json
import logging
import sys

EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_VERIFY = 3

MODULE_OPS = ("tensor", "dual", "restrict", "induce", "radical", "socle", "decompose", "strip", "heller", "isiso")
ENDO_OPS = ("check", "rank", "kernel", "degree", "syzygy", "syz3", "duality", "classify")


def _add_common(parser):
    parser.add_argument("--no-verify", action="store_true", help="Skip axiom / module checks when reading files.")
    parser.add_argument("-o", "--output", default="-", help="Where to write the JSON result (default: stdout).")


def _add_field_ext(parser):
    parser.add_argument(
        "--field-ext", type=int, default=1, help="Work over the extension of this degree of the field (default: 1)."
    )


def build_parser():
    parser = argparse.ArgumentParser(prog="rlakit", description="Restricted Lie algebras and their U_0-modules.")
    parser.add_argument("-s", "--seed", type=int, default=42, help="Seed of every randomized step (default: 42).")
    parser.add_argument(
        "--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="(default: WARNING)"
    )
    parser.add_argument(
        "--budget-level", default="balanced", choices=["low", "balanced", "high"], help="(default: balanced)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("algebra", help="Verify or describe an algebra file.")
    p.add_argument("op", choices=["verify", "info"])
    p.add_argument("file", help="Algebra file, or - for stdin.")
    _add_common(p)

    p = sub.add_parser("nullcone", help="Points of V(L).")
    p.add_argument("file")
    p.add_argument("--dump", action="store_true", help="Include the points.")
    _add_field_ext(p)
    _add_common(p)

    p = sub.add_parser("e2", help="Points of E(2, L) and their incidence graph.")
    p.add_argument("file")
    p.add_argument(
        "--through", help="Only planes containing this element, as i:c pairs (2:1) or comma-separated coordinates."
    )
    p.add_argument("--graph", help="Write the incidence graph as DOT to this file.")
    p.add_argument("--predicate", default="pencil", choices=["pencil", "meet"])
    p.add_argument("--components", action="store_true", help="Include the graph report.")
    p.add_argument("--check-extension", action="store_true", help="Recompute over the quadratic extension.")
    _add_field_ext(p)
    _add_common(p)

    p = sub.add_parser("maxp", help="Maximal p-subalgebras with E(2) points and the intersection checks.")
    p.add_argument("file")
    _add_common(p)

    p = sub.add_parser("module", help="Operations on module files.")
    p.add_argument("op", choices=MODULE_OPS)
    p.add_argument("files", nargs="+", help="Module file(s); `induce` takes the module over the subalgebra.")
    p.add_argument("--algebra", help="Algebra file (induce).")
    p.add_argument("--subalgebra", help="Spanning vectors, e.g. '1,0,0;0,1,0' (restrict, induce).")
    p.add_argument("-n", type=int, default=1, help="Heller shift (default: 1).")
    _add_common(p)

    p = sub.add_parser("endo", help="Endotriviality invariants of a module.")
    p.add_argument("op", choices=ENDO_OPS)
    p.add_argument("--module", required=True, help="Module file, or - for stdin.")
    p.add_argument("--plane", help="A single plane, e.g. '1,0,0,0;0,0,0,1'; default: every plane of E(2).")
    p.add_argument("--depth", type=int, help="Longest Heller walk (default: the context's walk depth).")
    p.add_argument("--force", action="store_true", help="Classify over algebras that are not supersolvable.")
    p.add_argument("--check-extension", action="store_true", help="Also compute generic kernels over F_{q^2}.")
    _add_field_ext(p)
    _add_common(p)

    p = sub.add_parser("catalog", help="List or emit catalogue entries.")
    p.add_argument("op", choices=["list", "emit"])
    p.add_argument("name", nargs="?")
    p.add_argument("params", nargs="*", help="key=value parameters, e.g. p=5 r=3.")
    p.add_argument("-o", "--output", default="-")

    p = sub.add_parser("schema", help="Print the JSON schema of a report.")
    p.add_argument("name", nargs="?", help="Report name; omit to list them.")
    p.add_argument("-o", "--output", default="-")

    return parser


def _parse_params(items):
    from rlakit.utils import BadParameters

    params = {}
    for item in items:
        if "=" not in item:
            raise BadParameters(f"expected key=value, got {item!r}")
        key, value = item.split("=", 1)
        try:
            params[key] = int(value)
        except ValueError:
            params[key] = value
    return params


def _parse_vectors(L, text: str):
    from rlakit.linalg.field import coerce
    from rlakit.utils import BadParameters

    try:
        rows = [[int(c) for c in row.split(",")] for row in text.split(";")]
    except ValueError:
        raise BadParameters(f"bad vector list {text!r}")
    if any(len(r) != L.n for r in rows):
        raise BadParameters(f"every vector needs {L.n} coordinates: {text!r}")
    return coerce(L.field, rows)


def _parse_element(L, text: str):
    "`i:c,j:d,...` sets coordinate i to c and j to d; plain comma-separated coordinates are accepted too"
    from rlakit.linalg.field import coerce
    from rlakit.utils import BadParameters

    if ":" not in text:
        (z,) = _parse_vectors(L, text)
        return z
    coords = [0] * L.n
    try:
        for term in text.split(","):
            i, c = (int(x) for x in term.split(":"))
            if i < 0:
                raise IndexError(i)
            coords[i] = c
    except (ValueError, IndexError):
        raise BadParameters(f"bad element {text!r}; expected i:c pairs with 0 <= i < {L.n}")
    return coerce(L.field, coords)


def _field(L, degree: int):
    from rlakit.linalg.field import field_extension

    return field_extension(L.field, degree) if degree > 1 else None


def _plane(L, text: str, F=None):
    from rlakit.linalg.field import field_embedding
    from rlakit.linalg.matrix import row_space
    from rlakit.utils import BadParameters
    from rlakit.variety.points import Plane

    S = row_space(_parse_vectors(L, text))
    if S.dim != 2:
        raise BadParameters(f"{text!r} spans a subspace of dimension {S.dim}, not a plane")
    if F is not None:
        S = row_space(field_embedding(L.field, F)(S.basis))
    return Plane(S)


def _dump(data, path):
    from rlakit.utils import save_json

    if hasattr(data, "model_dump"):
        data = data.model_dump(mode="json", by_alias=True)
    save_json(data, path)


def cmd_algebra(context, args):
    from rlakit.io.codecs import load_algebra
    from rlakit.lie import algebra_info, verify_axioms

    L = load_algebra(args.file, verify=False)
    if args.op == "verify":
        report = verify_axioms(L)
        _dump(report, args.output)
        return 0 if report.passed else EXIT_VERIFY
    if not args.no_verify:
        from rlakit.lie import require_axioms

        require_axioms(L)
    _dump(algebra_info(L), args.output)
    return 0


def cmd_nullcone(context, args):
    from rlakit.io.codecs import load_algebra
    from rlakit.linalg.field import field_label, vector_to_json
    from rlakit.variety import nullcone_points

    L = load_algebra(args.file, not args.no_verify)
    F = _field(L, args.field_ext)
    points = nullcone_points(context, L, F)
    out = {"field": field_label(F or L.field), "count": int(points.shape[0])}
    if args.dump:
        out["points"] = [vector_to_json(type(points), x) for x in points]
    _dump(out, args.output)
    return 0


def cmd_e2(context, args):
    from rlakit.io.codecs import load_algebra
    from rlakit.linalg.field import field_label
    from rlakit.variety import e2_points, e2_through, graph_report, incidence_graph, to_dot
    from rlakit.variety.points import over_field

    L = load_algebra(args.file, not args.no_verify)
    F = _field(L, args.field_ext)
    if args.through:
        z0 = _parse_element(L, args.through)
        planes = e2_through(context, L, z0, F)
    else:
        planes = e2_points(context, L, F)
    LF = over_field(L, F)
    out = {"field": field_label(LF.field), "count": len(planes), "planes": [e.label(LF) for e in planes]}

    if args.components or args.graph:
        G = incidence_graph(context, LF, planes, args.predicate, all_edges=args.graph is not None)
        if args.graph:
            with open(args.graph, "w", encoding="utf-8") as f:
                f.write(to_dot(G))
        if args.components:
            report = graph_report(context, LF, G, check_extension=args.check_extension and not args.through)
            out["graph"] = report.model_dump(mode="json")
    _dump(out, args.output)
    return 0


def cmd_maxp(context, args):
    from rlakit.io.codecs import load_algebra
    from rlakit.variety import maximal_report

    L = load_algebra(args.file, not args.no_verify)
    _dump(maximal_report(context, L), args.output)
    return 0


def cmd_module(context, args):
    from rlakit.io.codecs import load_algebra, load_module, module_to_json
    from rlakit.io.reports import ModuleSummary
    from rlakit.linalg.matrix import row_space
    from rlakit.u0 import (
        decompose,
        dual,
        heller,
        induce,
        is_isomorphic,
        radical,
        restrict,
        socle,
        strip_projectives,
        tensor,
    )
    from rlakit.utils import BadParameters

    verify = not args.no_verify
    wanted = 2 if args.op in ("tensor", "isiso") else 1
    if len(args.files) != wanted:
        raise BadParameters(f"module {args.op} takes {wanted} module file(s), got {len(args.files)}")

    if args.op == "induce":
        if not args.algebra or not args.subalgebra:
            raise BadParameters("module induce needs --algebra and --subalgebra")
        L = load_algebra(args.algebra, verify)
        S = row_space(_parse_vectors(L, args.subalgebra))
        _dump(module_to_json(induce(context, L, S, load_module(args.files[0], verify))), args.output)
        return 0

    modules = [load_module(f, verify) for f in args.files]
    M = modules[0]
    if args.op == "tensor":
        result = tensor(*modules)
    elif args.op == "dual":
        result = dual(M)
    elif args.op == "restrict":
        if not args.subalgebra:
            raise BadParameters("module restrict needs --subalgebra")
        result = restrict(M, row_space(_parse_vectors(M.algebra, args.subalgebra)))
    elif args.op == "heller":
        result = heller(context, M, args.n)
    elif args.op == "strip":
        stripped = strip_projectives(context, M)
        out = module_to_json(stripped.core)
        out["projective_dims"] = stripped.projective_dims
        _dump(out, args.output)
        return 0
    elif args.op in ("radical", "socle"):
        S = radical(context, M) if args.op == "radical" else socle(context, M)
        _dump(ModuleSummary(dimension=M.dim, subspace_dim=S.dim), args.output)
        return 0
    elif args.op == "decompose":
        _dump(ModuleSummary(dimension=M.dim, summands=[S.dim for S in decompose(context, M)]), args.output)
        return 0
    else:
        answer = is_isomorphic(context, *modules)
        _dump(ModuleSummary(dimension=M.dim, isomorphic=answer.value), args.output)
        return 0
    _dump(module_to_json(result), args.output)
    return 0


def cmd_endo(context, args):
    from rlakit import endo
    from rlakit.io.codecs import load_module
    from rlakit.io.reports import ClassificationResult
    from rlakit.linalg.field import vector_to_json
    from rlakit.utils import BadParameters, NotSupersolvable

    M = load_module(args.module, not args.no_verify)
    F = _field(M.algebra, args.field_ext)
    plane = _plane(M.algebra, args.plane, F) if args.plane else None
    passed = True

    if args.op == "check":
        out = {"endotrivial": endo.is_endotrivial(context, endo.rank.over_field(M, F))}
    elif args.op == "rank":
        out = endo.constant_rank(context, M, F)
    elif args.op == "kernel":
        if plane is None:
            raise BadParameters("endo kernel needs --plane")
        K = endo.generic_kernel(context, M, plane, F)
        out = {"kernel_dim": K.dim, "basis": [vector_to_json(K.field, b) for b in K.basis]}
    elif args.op == "degree":
        if plane is not None:
            out = {"degree": endo.degree(context, M, plane, F)}
        else:
            out = endo.degree_report(context, M, F, check_extension=args.check_extension)
    elif args.op == "syzygy":
        if plane is not None:
            out = {"syzygy": endo.syzygy_value(context, M, plane, F, depth=args.depth)}
        else:
            out = endo.syzygy_function(context, M, F)
    elif args.op in ("syz3", "duality"):
        out = endo.check_syz3(context, M, F) if args.op == "syz3" else endo.check_degree_duality(context, M, F)
        passed = out.passed
    else:
        try:
            out = endo.classify_endotrivial(context, M, F, depth=args.depth, force=args.force)
        except NotSupersolvable as e:
            out = ClassificationResult(status="not_supersolvable", reason=str(e))
    _dump(out, args.output)
    return 0 if passed else EXIT_VERIFY


def cmd_catalog(context, args):
    from rlakit import catalog
    from rlakit.io.codecs import algebra_to_json, module_to_json
    from rlakit.utils import BadParameters

    if args.op == "list":
        _dump(catalog.list_entries(), args.output)
        return 0
    if not args.name:
        raise BadParameters("catalog emit needs an entry name")
    entry = catalog.build(context, args.name, **_parse_params(args.params))
    if entry.value is entry.algebra:
        _dump(algebra_to_json(entry.value, args.name), args.output)
    else:
        _dump(module_to_json(entry.value, entry.params.get("algebra", "")), args.output)
    return 0


def cmd_schema(context, args):
    from rlakit.io.codecs import AlgebraFile, ModuleFile
    from rlakit.io.reports import REPORTS
    from rlakit.utils import UnknownEntry

    schemas = dict(REPORTS, **{"algebra-file": AlgebraFile, "module-file": ModuleFile})
    if not args.name:
        _dump(sorted(schemas), args.output)
        return 0
    if args.name not in schemas:
        raise UnknownEntry(f"no schema named {args.name}", known=sorted(schemas))
    _dump(schemas[args.name].model_json_schema(by_alias=True), args.output)
    return 0


COMMANDS = {
    "algebra": cmd_algebra,
    "nullcone": cmd_nullcone,
    "e2": cmd_e2,
    "maxp": cmd_maxp,
    "module": cmd_module,
    "endo": cmd_endo,
    "catalog": cmd_catalog,
    "schema": cmd_schema,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    import rlakit
    from rlakit.utils import RlakitError, log

    log.setLevel(getattr(logging, args.log_level))
    context = rlakit.Context()
    context.seed = args.seed
    context.budget_level = args.budget_level

    try:
        return COMMANDS[args.command](context, args)
    except RlakitError as e:
        sys.stderr.write(json.dumps(e.to_dict(), sort_keys=True, default=str) + "\n")
        return e.exit_code
    except (OSError, ValueError) as e:
        sys.stderr.write(json.dumps({"error": type(e).__name__, "message": str(e), "details": {}}) + "\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
