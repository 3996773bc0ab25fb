"""Command-line interface.

All rationals cross the boundary as exact strings ("p/q" or decimal), never
floats.  JSON output is the authoritative machine format; --format text gives
a compact human-readable rendering of the same data.

Exit codes: 0 success, 1 cut found under --fail-on-cut, 2 input error,
3 resource-cap error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .caps import Caps
from .core import Domain, JCircuit, SignPartition, rational
from .enumeration import enumerate_circuits, enumerate_j_circuits, polytope_dimension
from .errors import InputError, ResourceLimitError
from .facets import LinearInequality, certify_facet, check_validity, map_to_arc_model
from .greedy import implied_ordering, undominated_j_circuits
from .separation import QueryPoint, separate_all


def _frac_str(x: Fraction) -> str:
    return str(x)


def _parse_list(text):
    """Comma-separated values, or a JSON array."""
    text = text.strip()
    if text.startswith("["):
        return json.loads(text)
    return [t for t in (s.strip() for s in text.split(",")) if t]


def _parse_indices(text):
    try:
        return [int(t) for t in _parse_list(text)]
    except ValueError:
        raise InputError(f"expected integer indices, got {text!r}") from None


def _load_json_arg(text):
    """Inline JSON object, or @path / plain path to a JSON file."""
    text = text.strip()
    if text.startswith("{"):
        return json.loads(text)
    path = text[1:] if text.startswith("@") else text
    with open(path) as fh:
        return json.load(fh)


def _domain_from_args(args) -> Domain:
    if getattr(args, "domain", None):
        return Domain.parse(_parse_list(args.domain))
    if getattr(args, "n", None):
        return Domain.integers(args.n)
    raise InputError("specify --n or --domain")


def _signs_from_args(args, J) -> SignPartition:
    plus = set(_parse_indices(args.plus)) if args.plus else set()
    minus = set(_parse_indices(args.minus)) if args.minus else set()
    rest = set(J) - plus - minus
    if plus | minus | rest != set(J) or (minus and not minus <= set(J)):
        raise InputError("--plus/--minus must partition J")
    return SignPartition(frozenset(plus | rest), frozenset(minus))


def _ineq_from_args(args, n) -> LinearInequality:
    if args.ineq:
        data = _load_json_arg(args.ineq)
        coeffs = {int(j): rational(a) for j, a in data["coeffs"].items()}
        return LinearInequality.make(n, coeffs, rational(data["rhs"]))
    if args.coeffs:
        coeffs = {}
        for part in _parse_list(args.coeffs):
            j, a = part.split(":")
            coeffs[int(j)] = rational(a)
        if args.rhs is None:
            raise InputError("--coeffs requires --rhs")
        return LinearInequality.make(n, coeffs, rational(args.rhs))
    raise InputError("specify --ineq or --coeffs/--rhs")


def _ineq_json(ineq: LinearInequality) -> dict:
    return {
        "coeffs": {str(j): _frac_str(a) for j, a in ineq.coeffs},
        "rhs": _frac_str(ineq.rhs),
    }


def _jc_json(jc: JCircuit) -> dict:
    return {"J": list(jc.J), "values": [_frac_str(v) for v in jc.values]}


def _emit(args, payload: dict, text_lines) -> None:
    out = sys.stdout if args.output in (None, "-") else open(args.output, "w")
    try:
        if args.format == "json":
            json.dump(payload, out, indent=2)
            out.write("\n")
        else:
            for line in text_lines:
                out.write(line + "\n")
    finally:
        if out is not sys.stdout:
            out.close()


def cmd_separate(args) -> int:
    domain = _domain_from_args(args)
    if args.input:
        data = _load_json_arg(args.input)
        if "domain" in data:
            domain = Domain.parse(data["domain"])
        point = [rational(v) for v in data["point"]]
    elif args.point:
        point = [rational(v) for v in _parse_list(args.point)]
    else:
        raise InputError("specify --point or --input")
    result = separate_all(QueryPoint(domain, tuple(point)))
    cuts = []
    lines = []
    for cut in result.cuts:
        cuts.append(dict(
            _ineq_json(cut.ineq),
            family=[t.tag for t in cut.tags],
            violation=_frac_str(cut.violation),
            theorem_scope_ok=cut.theorem_scope_ok,
        ))
        lines.append(f"{cut.ineq}  [{','.join(t.tag for t in cut.tags)}]"
                     f"  violation={cut.violation}")
    lines.extend(f"note: {n}" for n in result.notes)
    if not result.cuts:
        lines.append("no violated cuts")
    _emit(args, {"cuts": cuts, "notes": list(result.notes)}, lines)
    if args.fail_on_cut and cuts:
        return 1
    return 0


def cmd_verify(args) -> int:
    domain = _domain_from_args(args)
    ineq = _ineq_from_args(args, domain.n)
    res = check_validity(domain, ineq)
    if res.witness is None:
        witness = None
    elif isinstance(res.witness, JCircuit):
        witness = _jc_json(res.witness)
    else:
        witness = {"circuit": [_frac_str(v) for v in res.witness.x]}
    payload = {
        "valid": res.valid,
        "method": res.method,
        "witness": witness,
    }
    lines = [f"{ineq}: {'valid' if res.valid else 'INVALID'} ({res.method})"]
    if res.witness:
        lines.append(f"violating J-circuit: {_jc_json(res.witness)}")
    _emit(args, payload, lines)
    return 0


def cmd_certify(args) -> int:
    domain = _domain_from_args(args)
    ineq = _ineq_from_args(args, domain.n)
    cert = certify_facet(domain, ineq)
    payload = {
        "status": cert.status,
        "theorem_scope_ok": cert.theorem_scope_ok,
        "affine_rank_of_tight": cert.affine_rank_of_tight,
        "tight_points": [_jc_json(p) if isinstance(p, JCircuit)
                         else [_frac_str(v) for v in p.x]
                         for p in cert.tight_points],
        "undominated": [
            {"j_circuit": _jc_json(jc), "lhs": _frac_str(lhs)}
            for jc, lhs in cert.undominated_witnesses
        ],
    }
    lines = [f"{ineq}: {cert.status} "
             f"(tight rank {cert.affine_rank_of_tight}, "
             f"scope_ok={cert.theorem_scope_ok})"]
    _emit(args, payload, lines)
    return 0


def cmd_undominated(args) -> int:
    domain = _domain_from_args(args)
    J = _parse_indices(args.J)
    signs = _signs_from_args(args, J)
    jcs = undominated_j_circuits(domain, J, signs)
    payload = {"J": sorted(J), "j_circuits": [_jc_json(jc) for jc in jcs]}
    lines = [str(_jc_json(jc)["values"]) for jc in jcs]
    _emit(args, payload, lines)
    return 0


def cmd_implied_ordering(args) -> int:
    domain = _domain_from_args(args)
    J = _parse_indices(args.J)
    values = [rational(v) for v in _parse_list(args.values)]
    jc = JCircuit(domain, tuple(sorted(J)), tuple(values))
    signs = _signs_from_args(args, J)
    trace = implied_ordering(jc, signs)
    payload = {
        "ordering": list(trace.ordering),
        "greedy_result": _jc_json(trace.greedy_result),
        "matches": trace.matches,
        "steps": [
            {"ell": s.ell, "r": s.r, "s": s.s, "i_r": s.i_r, "j_s": s.j_s,
             "v_min": _frac_str(s.v_min) if s.v_min is not None else None,
             "v_max": _frac_str(s.v_max) if s.v_max is not None else None,
             "chosen": s.chosen, "assigned": _frac_str(s.assigned)}
            for s in trace.steps
        ],
    }
    lines = [f"ordering: {list(trace.ordering)}", f"matches: {trace.matches}"]
    _emit(args, payload, lines)
    return 0


def cmd_dimension(args) -> int:
    domain = _domain_from_args(args)
    dim = polytope_dimension(domain)
    _emit(args, {"dimension": dim}, [f"dimension: {dim}"])
    return 0


def cmd_enumerate(args) -> int:
    domain = _domain_from_args(args)
    if args.J:
        J = _parse_indices(args.J)
        jcs = enumerate_j_circuits(domain, J)
        payload = {"count": len(jcs), "j_circuits": [_jc_json(jc) for jc in jcs]}
        lines = [str(_jc_json(jc)["values"]) for jc in jcs]
    else:
        cs = enumerate_circuits(domain)
        payload = {"count": len(cs),
                   "circuits": [[_frac_str(v) for v in c.x] for c in cs]}
        lines = [str([_frac_str(v) for v in c.x]) for c in cs]
    _emit(args, payload, lines)
    return 0


def cmd_map_arc(args) -> int:
    domain = _domain_from_args(args)
    ineq = _ineq_from_args(args, domain.n)
    arc = map_to_arc_model(domain, ineq)
    payload = {
        "matrix": [[_frac_str(c) for c in row] for row in arc.coeffs],
        "rhs": _frac_str(arc.rhs),
    }
    lines = [" ".join(_frac_str(c) for c in row) for row in arc.coeffs]
    lines.append(f">= {arc.rhs}")
    _emit(args, payload, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hampoly",
        description="Facets and separation for the hamiltonian circuit polytope.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, ineq=False):
        p.add_argument("--n", type=int, help="use the domain (1..n)")
        p.add_argument("--domain", help="comma-separated domain values")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--output", help="output file (default stdout)")
        if ineq:
            p.add_argument("--ineq", help='inequality as JSON {"coeffs":{"j":"a"},"rhs":"r"} or @file')
            p.add_argument("--coeffs", help="inequality as j:a,j:a pairs")
            p.add_argument("--rhs", help="right-hand side for --coeffs")

    p = sub.add_parser("separate", help="find violated facet cuts for a point")
    common(p)
    p.add_argument("--point", help="comma-separated query point")
    p.add_argument("--input", help='JSON {"domain":[...],"point":[...]} or @file')
    p.add_argument("--fail-on-cut", action="store_true",
                   help="exit 1 when any cut is found")
    p.set_defaults(func=cmd_separate)

    p = sub.add_parser("verify", help="check an inequality for validity")
    common(p, ineq=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("certify", help="certify an inequality as a facet")
    common(p, ineq=True)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("undominated", help="list undominated J-circuits")
    common(p)
    p.add_argument("--J", required=True, help="comma-separated index set")
    p.add_argument("--plus", help="J+ indices (default: all of J)")
    p.add_argument("--minus", help="J- indices")
    p.set_defaults(func=cmd_undominated)

    p = sub.add_parser("implied-ordering", help="implied ordering of a J-circuit")
    common(p)
    p.add_argument("--J", required=True)
    p.add_argument("--values", required=True,
                   help="values on J, sorted by index")
    p.add_argument("--plus", help="J+ indices (default: all of J)")
    p.add_argument("--minus", help="J- indices")
    p.set_defaults(func=cmd_implied_ordering)

    p = sub.add_parser("dimension", help="polytope dimension")
    common(p)
    p.set_defaults(func=cmd_dimension)

    p = sub.add_parser("enumerate", help="list circuits (or J-circuits with --J)")
    common(p)
    p.add_argument("--J", help="enumerate J-circuits on this index set")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("map-arc", help="map an inequality into the 0-1 arc model")
    common(p, ineq=True)
    p.set_defaults(func=cmd_map_arc)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        Caps.from_env()  # fail fast on a malformed caps variable
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except (json.JSONDecodeError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
