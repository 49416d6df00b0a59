"""jumploci command line: one subcommand per operation, JSON in and out.

Exit codes: 0 computed, 1 schema error, 2 mathematical validation failure.
"""

import argparse
import sys

from . import documents
from .ce import ce_build, ce_cohomology
from .complexes import JumpIndex, check_complex, jump_ideal
from .dgla import validate_dgla, validate_representation
from .jump import JumpQuery, jump_membership, jump_subscheme, resonance_locus, resonance_scan
from .mc import (
    GaugeElement,
    MCCandidate,
    NotMaurerCartan,
    aomoto,
    gauge,
    h0_pushforward,
    is_maurer_cartan,
    lie_zero,
    mc_defect,
)
from .rings import AlgebraError
from .serialize import (
    SchemaError,
    dump_algebra,
    dump_complex,
    dump_ideal,
    dump_lie,
    dump_vector,
    dumps,
    load_candidate,
    load_complex,
    load_rational,
    loads,
)


class MathError(Exception):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def _violations(vs):
    return [{"law": v.law, "witness": list(v.witness), "detail": v.detail} for v in vs]


def _require_valid(p):
    p.require("dgla")
    bad = validate_dgla(p.dgla)
    if bad:
        raise MathError("dgla fails validation", _violations(bad))
    if p.module is not None:
        bad = validate_representation(p.module, p.param("convention"))
        if bad:
            raise MathError("module fails validation", _violations(bad))


def _index(p):
    try:
        return JumpIndex(p.param("i", required=True), p.param("k", 1))
    except ValueError as exc:
        raise SchemaError("query.k", str(exc)) from exc


def _candidate(p, key="omega", cls=MCCandidate):
    pairs = p.param(key, required=True)
    return load_candidate(p.dgla, p.ring, pairs, f"query.{key}", cls)


def _require_mc(c):
    defect = mc_defect(c)
    if any(any(r) for r in defect):
        raise MathError("ω is not Maurer-Cartan", {"defect": dump_lie(c.dgla, defect)})


def _jump_complex(p):
    """Explicit complex from the query, or H^0-pushforward of the Aomoto complex."""
    if "complex" in p.query:
        p.require("ring")
        C = load_complex(p.ring, p.query["complex"], "query.complex")
        if not check_complex(C):
            raise MathError("query.complex is not a complex: some d∘d is nonzero")
        return C
    _require_valid(p)
    p.require("module", "ring")
    c = _candidate(p)
    _require_mc(c)
    return h0_pushforward(aomoto(p.module, c))


# ---------------------------------------------------------------------------
# Operations


def op_validate(p):
    out = {"dgla": [], "module": [], "ring": []}
    if p.dgla is not None:
        out["dgla"] = _violations(validate_dgla(p.dgla))
    if p.module is not None:
        out["module"] = _violations(validate_representation(p.module, p.param("convention")))
    if p.ring is not None:
        out["ring"] = list(p.ring.violations())
    out["valid"] = not (out["dgla"] or out["module"] or out["ring"])
    if not out["valid"]:
        raise MathError("validation failed", out)
    return out


def op_ce(p):
    _require_valid(p)
    W = p.param("weight", 4)
    C = ce_build(p.dgla, p.module, W)
    H = ce_cohomology(C)
    out = {
        "weight": W,
        "coefficients": "trivial" if p.module is None else (p.module.name or "module"),
        "census": {str(d): n for d, n in C.basis_census().items()},
        "cohomology": {str(d): n for d, n in sorted(H.dims.items())},
        "unreliable": sorted(H.unreliable),
        "d_squared_zero": not C.d_squared_violations(),
    }
    if p.param("matrices", False):
        mats = {}
        for deg in sorted(H.dims):
            M, nr, nc = C.matrix(deg)
            if nr and nc:
                mats[str(deg)] = [dump_vector(row) for row in M]
        out["matrices"] = mats
    return out


def op_mc_check(p):
    _require_valid(p)
    p.require("ring")
    c = _candidate(p)
    defect = mc_defect(c)
    return {"omega": dump_lie(p.dgla, c.omega), "defect": dump_lie(p.dgla, defect), "is_maurer_cartan": is_maurer_cartan(c)}


def op_gauge(p):
    _require_valid(p)
    p.require("ring")
    c = _candidate(p)
    u = _candidate(p, "u", GaugeElement) if p.query.get("u") else GaugeElement(p.dgla, p.ring, lie_zero(p.dgla, p.ring))
    try:
        w = gauge(u, c)
    except NotMaurerCartan as exc:
        raise MathError("ω is not Maurer-Cartan", {"defect": dump_lie(p.dgla, exc.defect)}) from exc
    return {"u": dump_lie(p.dgla, u.u), "omega": dump_lie(p.dgla, c.omega), "result": dump_lie(p.dgla, w.omega), "is_maurer_cartan": is_maurer_cartan(w)}


def op_aomoto(p):
    _require_valid(p)
    p.require("module", "ring")
    c = _candidate(p)
    A = aomoto(p.module, c)
    out = {"squares_to_zero": A.squares_to_zero(), "is_maurer_cartan": is_maurer_cartan(c)}
    if p.ring.is_dg and any(p.ring.degrees):
        out["pushforward"] = dump_complex(h0_pushforward(A))
        out["ring"] = dump_algebra(p.ring)
    else:
        out["complex"] = dump_complex(A.free_complex())
    return out


def op_jump_ideal(p):
    idx = _index(p)
    C = _jump_complex(p)
    J = jump_ideal(C, idx, p.param("method", "blocks"))
    return {"index": {"i": idx.i, "k": idx.k}, **dump_ideal(J)}


def op_jump_membership(p):
    _require_valid(p)
    p.require("module", "ring")
    idx = _index(p)
    c = _candidate(p)
    try:
        m = jump_membership(JumpQuery(p.dgla, p.module, p.ring, c, idx))
    except NotMaurerCartan as exc:
        raise MathError("ω is not Maurer-Cartan", {"defect": dump_lie(p.dgla, exc.defect)}) from exc
    return {"index": {"i": idx.i, "k": idx.k}, "member": m.member, "ideal": dump_ideal(m.ideal)}


def _sample(p, s, n):
    g = p.dgla
    path = f"query.samples[{n}]"
    if s and isinstance(s[0], list):
        vec = [0] * g.dim
        for t, (name, q) in enumerate(s):
            if name not in g.labels:
                raise SchemaError(f"{path}[{t}][0]", f"unknown Lie basis name {name!r}")
            vec[g.labels.index(name)] = load_rational(q, f"{path}[{t}][1]")
        return vec
    if len(s) != g.dim:
        raise SchemaError(path, f"expected {g.dim} coordinates")
    vec = [load_rational(q, f"{path}[{t}]") for t, q in enumerate(s)]
    if any(c and g.degrees[a] != 1 for a, c in enumerate(vec)):
        raise SchemaError(path, "samples must be supported in degree 1")
    return vec


def op_resonance_scan(p):
    _require_valid(p)
    p.require("module")
    samples = [_sample(p, s, n) for n, s in enumerate(p.param("samples", required=True))]
    rows = resonance_scan(p.dgla, p.module, samples)
    out_rows = []
    for r in rows:
        row = {"sample": dump_vector(r.sample)}
        if r.rejected:
            row["rejected"] = True
            row["defect"] = dump_vector(r.defect)
        else:
            row["dims"] = {str(d): n for d, n in sorted(r.dims.items())}
        out_rows.append(row)
    out = {"rows": out_rows}
    if "i" in p.query:
        idx = _index(p)
        out["locus"] = {"i": idx.i, "k": idx.k, "samples": [dump_vector(s) for s in resonance_locus(rows, idx.i, idx.k)]}
    return out


def op_subscheme(p):
    idx = _index(p)
    C = _jump_complex(p)
    I = jump_subscheme(C.ring, C, idx)
    kind = "empty" if I.is_unit() else ("whole" if I.is_zero() else "proper")
    return {"index": {"i": idx.i, "k": idx.k}, "ideal": dump_ideal(I), "subscheme": kind}


OPERATIONS = {
    "validate": op_validate,
    "ce": op_ce,
    "mc-check": op_mc_check,
    "gauge": op_gauge,
    "aomoto": op_aomoto,
    "jump-ideal": op_jump_ideal,
    "jump-membership": op_jump_membership,
    "resonance-scan": op_resonance_scan,
    "subscheme": op_subscheme,
}


def run(op, text):
    """(exit code, JSON-ready payload) for one operation on a document string."""
    try:
        p = loads(text)
        doc_op = p.query.pop("op", op)
        if doc_op != op:
            raise SchemaError("query.op", f"document asks for {doc_op!r} but the command is {op!r}")
        result = OPERATIONS[op](p)
        return 0, {"op": op, "result": result}
    except SchemaError as exc:
        return 1, {"op": op, "error": {"kind": "schema", "path": exc.path, "message": exc.message}}
    except MathError as exc:
        err = {"kind": "math", "message": str(exc)}
        if exc.witness is not None:
            err["witness"] = exc.witness
        return 2, {"op": op, "error": err}
    except (AlgebraError, NotMaurerCartan, ValueError) as exc:
        return 2, {"op": op, "error": {"kind": "math", "message": str(exc)}}


def _text(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {v}")
    else:
        lines.append(f"{pad}{obj}")
    return lines


def render(payload, fmt):
    if fmt == "json":
        return dumps(payload)
    return "\n".join(_text(payload)) + "\n"


def _list_fixtures(args):
    data = documents.listing()
    if args.kind:
        data = {args.kind: data[args.kind]}
    if args.json:
        return dumps(data)
    lines = []
    for kind, items in data.items():
        lines.append(f"{kind}s:")
        for item in items:
            if isinstance(item, dict):
                lines.append(f"  {item['name']:<14} {item['ring']:<18} {item['description']}")
            else:
                lines.append(f"  {item}")
    return "\n".join(lines) + "\n"


def build_parser():
    parser = argparse.ArgumentParser(prog="jumploci", description="Exact jump-locus computations for DGLA pairs.")
    sub = parser.add_subparsers(dest="command", required=True)
    for op in OPERATIONS:
        sp = sub.add_parser(op, help=f"run {op} on a problem document")
        src = sp.add_mutually_exclusive_group(required=True)
        src.add_argument("document", nargs="?", help="path to a JSON document, or - for stdin")
        src.add_argument("--fixture", help="use a shipped fixture with its default query")
        sp.add_argument("--format", choices=["json", "text"], default="json")
    lp = sub.add_parser("list-fixtures", help="list shipped fixtures and test rings")
    lp.add_argument("--json", action="store_true", help="machine-readable output")
    lp.add_argument("--kind", choices=["fixture", "dgla", "module", "ring", "morphism"])
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "list-fixtures":
        sys.stdout.write(_list_fixtures(args))
        return 0
    if args.fixture:
        if args.fixture not in documents.fixture_names():
            sys.stderr.write(f"unknown fixture {args.fixture!r}; try list-fixtures\n")
            return 1
        text = dumps(documents.fixture_document(args.fixture, args.command))
    elif args.document == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.document, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            sys.stderr.write(f"cannot read {args.document}: {exc.strerror}\n")
            return 1
    code, payload = run(args.command, text)
    sys.stdout.write(render(payload, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
