"""Command-line front end (``rbalg``).

Exit codes: 0 when every check passes, 1 when a mathematical check fails
(the report lists witnesses), 2 for bad input or unsupported requests.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from dataclasses import dataclass, field

from . import cohomology as coh
from . import jsonio
from .algebra import Algebra, Kind, Law, check_identities, invariant_fingerprint
from .catalog import build, catalog_list
from .decomposition import (
    INSTANCES, classify_components, counterexample, counterexample_data, mutual_ideals_check,
    nilpotent_sum_check, onishchik_instance, random_nilpotent_pair, verify_decomposition,
)
from .errors import AlgebraError, CheckFailed, FieldError
from .field import QQ, PrimeField, parse_field
from .post import (
    axioms_passed, commutator_descent, extract_rb, from_rb_assoc, from_rb_lie, verify_post_assoc, verify_post_lie,
)
from .report import Report, Violation
from .rota_baxter import (
    DEFAULT_BUDGET, RBOperator, induced_algebra, kernel_chain, search_rb_exhaustive, spectrum_check, tower, verify_rb,
)

EXIT = {"Pass": 0, "Fail": 1, "Error": 2}


@dataclass
class RunReport:
    verb: str
    status: str
    payload: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    diagnostic: str | None = None

    def to_json(self) -> dict:
        out = {"verb": self.verb, "status": self.status, "payload": self.payload, "witnesses": self.witnesses}
        if self.diagnostic is not None:
            out["diagnostic"] = self.diagnostic
        return out


def _fmt(x) -> str:
    return str(x)


def witness_json(v: Violation) -> dict:
    return {"check": v.check, "indices": list(v.indices), "residual": [_fmt(x) for x in v.residual]}


def _from_report(verb: str, report: Report, payload: dict | None = None) -> RunReport:
    payload = dict(payload or {})
    payload.setdefault("checks", report.name)
    return RunReport(verb, "Pass" if report.passed else "Fail", payload,
                     [witness_json(v) for v in report.violations])


def _field_option(args):
    return parse_field(args.field) if args.field else None


def _is_file(ref: str) -> bool:
    return ref.endswith(".json") or os.path.isfile(ref)


def load_algebra(ref: str, args, check: bool = True) -> Algebra:
    """A catalog name (built over --field, default Q) or a path to algebra JSON."""
    want = _field_option(args)
    if _is_file(ref):
        a = jsonio.algebra_from_json(jsonio.load_file(ref), check)
        if want is not None and a.field != want:
            raise FieldError(f"{ref} is over {a.field} but --field {want} was given")
        return a
    return build(ref, want or QQ, args.features)


def load_rb(args, a: Algebra) -> RBOperator:
    r = jsonio.rb_from_json(jsonio.load_file(args.rb), a.field)
    if args.weight is not None:
        r = RBOperator(r.matrix, a.field.parse(args.weight))
    return r


def _algebra_arg(p, required=True):
    p.add_argument("--algebra", required=required, help="catalog name (see `rbalg catalog`) or algebra JSON file")


def _rb_args(p):
    _algebra_arg(p)
    p.add_argument("--rb", required=True, help="RB operator JSON file")
    p.add_argument("--weight", help="override the weight stored in the RB file")


def cmd_verify_algebra(args) -> RunReport:
    a = load_algebra(args.algebra, args, check=False)
    payload = {"dim": a.dim, "kind": a.kind.value, "field": str(a.field)}
    if a.kind is Kind.GENERAL:
        return RunReport(args.verb, "Pass", payload)
    law = Law.LIE if a.kind is Kind.LIE else Law.ASSOCIATIVITY
    return _from_report(args.verb, check_identities(a, law), payload)


def cmd_verify_rb(args) -> RunReport:
    a = load_algebra(args.algebra, args)
    r = load_rb(args, a)
    return _from_report(args.verb, verify_rb(a, r), {"dim": a.dim, "weight": a.field.format(r.weight)})


def cmd_induce(args) -> RunReport:
    a = load_algebra(args.algebra, args)
    return RunReport(args.verb, "Pass", {"algebra": jsonio.algebra_to_json(induced_algebra(a, load_rb(args, a)))})


def cmd_tower(args) -> RunReport:
    a = load_algebra(args.algebra, args)
    t = tower(a, load_rb(args, a), args.steps)
    report = Report("kernel-chain")
    for i in range(1, t.steps + 1):
        report = report.merge(kernel_chain(t, i))
    return _from_report(args.verb, report, {
        "steps": t.steps, "levels": [jsonio.algebra_to_json(level) for level in t.levels]})


def cmd_search_rb(args) -> RunReport:
    a = load_algebra(args.algebra, args)
    if not isinstance(a.field, PrimeField):
        raise FieldError("search-rb needs --field Fp:<p>")
    found = search_rb_exhaustive(a, a.field.parse(args.weight), args.budget)
    spectra = [spectrum_check(r) for r in found]
    witnesses = [{"check": "spectrum", "indices": [i], "residual": []} for i, ok in enumerate(spectra) if not ok]
    return RunReport(args.verb, "Fail" if witnesses else "Pass", {
        "count": len(found), "candidates": a.field.p ** (a.dim * a.dim),
        "spectrum_ok": sum(spectra), "operators": [jsonio.rb_to_json(r) for r in found]}, witnesses)


def cmd_verify_post_lie(args) -> RunReport:
    p = jsonio.post_lie_from_json(jsonio.load_file(args.structure))
    return _from_report(args.verb, verify_post_lie(p), {"dim": p.dim})


def cmd_verify_post_assoc(args) -> RunReport:
    p = jsonio.post_assoc_from_json(jsonio.load_file(args.structure))
    report = verify_post_assoc(p)
    return _from_report(args.verb, report, {"dim": p.dim, "axioms_1_to_6": axioms_passed(report),
                                            "postAs7": not report.by_check("postAs7")})


def cmd_from_rb(args) -> RunReport:
    a = load_algebra(args.algebra, args)
    r = load_rb(args, a)
    if a.kind is Kind.LIE:
        return RunReport(args.verb, "Pass", {"post_lie": jsonio.post_lie_to_json(from_rb_lie(a, r))})
    if a.kind is Kind.ASSOCIATIVE:
        return RunReport(args.verb, "Pass", {"post_assoc": jsonio.post_assoc_to_json(from_rb_assoc(a, r))})
    raise AlgebraError("from-rb needs a Lie or associative algebra")


def cmd_extract_rb(args) -> RunReport:
    p = jsonio.post_assoc_from_json(jsonio.load_file(args.structure))
    return RunReport(args.verb, "Pass", {"rb": jsonio.rb_to_json(extract_rb(p))})


def cmd_descend(args) -> RunReport:
    p = jsonio.post_assoc_from_json(jsonio.load_file(args.structure))
    return RunReport(args.verb, "Pass", {"post_lie": jsonio.post_lie_to_json(commutator_descent(p))})


def _module(args):
    if args.module:
        obj = jsonio.load_file(args.module)
        if args.flavor == "lie":
            return jsonio.representation_from_json(obj)
        return jsonio.bimodule_from_json(obj)
    if not args.algebra:
        raise AlgebraError("h1 needs --module FILE or --algebra with --module-kind")
    kind = args.module_kind
    if args.flavor == "lie":
        if kind == "natural":
            family, _, n = args.algebra.partition(":")
            if family not in ("gl", "sl", "so", "sp") or not n.isdigit():
                raise AlgebraError("natural module needs a classical catalog name such as sl:2")
            return coh.natural_representation(family, int(n), _field_option(args) or QQ)
        a = load_algebra(args.algebra, args)
        if kind == "trivial":
            return coh.trivial_representation(a)
        if kind == "adjoint":
            return coh.adjoint_representation(a)
        raise AlgebraError(f"module kind {kind!r} is not available for Lie algebras")
    a = load_algebra(args.algebra, args)
    if kind in ("regular", "adjoint"):
        return coh.regular_bimodule(a)
    if kind == "trivial":
        return coh.zero_bimodule(a)
    raise AlgebraError(f"module kind {kind!r} is not available for associative algebras")


def cmd_h1(args) -> RunReport:
    m = _module(args)
    z1, b1 = coh.z1_b1_lie(m) if args.flavor == "lie" else coh.z1_b1_assoc(m)
    ok = b1.issubset(z1)
    witnesses = [] if ok else [{"check": "b1-in-z1", "indices": [], "residual": []}]
    return RunReport(args.verb, "Pass" if ok else "Fail",
                     {"flavor": args.flavor, "z1_dim": z1.dim, "b1_dim": b1.dim, "h1_dim": z1.dim - b1.dim},
                     witnesses)


def _components_json(d) -> dict:
    out = {}
    for name, info in classify_components(d).items():
        fp = info.fingerprint
        out[name] = {"dim": fp.dim, "center_dim": fp.center_dim, "derived_dim": fp.derived_dim,
                     "semisimple": info.semisimple, "abelian": info.abelian, "nilpotent": info.nilpotent}
    return out


def _decomposition_payload(d) -> dict:
    v = verify_decomposition(d)
    return {"is_sum": v.is_sum, "is_proper": v.is_proper, "is_direct": v.is_direct,
            "intersection_dim": v.intersection_dim, "s1_dim": d.s1.dim, "s2_dim": d.s2.dim,
            "ambient_dim": d.ambient.dim}


def cmd_decompose(args) -> RunReport:
    sub = args.action
    verb = f"decompose {sub}"
    if sub == "verify":
        d = jsonio.decomposition_from_json(jsonio.load_file(args.decomposition))
        payload = _decomposition_payload(d)
        if d.ambient.field.characteristic == 0 and d.ambient.kind is not Kind.GENERAL:
            payload["components"] = _components_json(d)
        if payload["is_direct"]:
            payload["mutual_ideals"] = mutual_ideals_check(d)
        return RunReport(verb, "Pass" if payload["is_sum"] else "Fail", payload,
                         [] if payload["is_sum"] else [{"check": "sum", "indices": [], "residual": []}])
    if sub == "instance":
        d = onishchik_instance(args.name, args.features)
        payload = _decomposition_payload(d)
        payload["name"] = args.name
        payload["components"] = _components_json(d)
        ok = payload["is_sum"] and payload["is_proper"]
        return RunReport(verb, "Pass" if ok else "Fail", payload,
                         [] if ok else [{"check": "proper-sum", "indices": [], "residual": []}])
    if sub == "counterexample":
        _, x, _ = counterexample_data(args.n)
        d = counterexample(args.n)
        payload = _decomposition_payload(d)
        payload["components"] = _components_json(d)
        payload["x"] = [_fmt(c) for c in x]
        comps = payload["components"]
        ok = (payload["is_sum"] and comps["s1"]["semisimple"] and comps["s2"]["semisimple"]
              and not comps["ambient"]["semisimple"] and comps["ambient"]["derived_dim"] == d.ambient.dim)
        return RunReport(verb, "Pass" if ok else "Fail", payload,
                         [] if ok else [{"check": "counterexample", "indices": [], "residual": []}])
    if sub == "nilsum":
        if args.decomposition:
            decs = [jsonio.decomposition_from_json(jsonio.load_file(args.decomposition))]
        else:
            rng = random.Random(args.seed)
            decs = [random_nilpotent_pair(rng, rng.choice((2, 3, 4))) for _ in range(args.random)]
        alarms, infos = [], []
        for k, d in enumerate(decs):
            rep = nilpotent_sum_check(d)
            infos.append(rep.info["indices"])
            if not rep.passed:
                alarms.append({"check": "kegel", "indices": [k], "residual": []})
        return RunReport(verb, "Fail" if alarms else "Pass", {"instances": len(decs), "indices": infos}, alarms)
    raise AlgebraError(f"unknown decompose action {sub!r}")


def cmd_catalog(args) -> RunReport:
    f = _field_option(args) or QQ
    return RunReport(args.verb, "Pass", {"algebras": [{"name": n, "dim": d} for n, d in catalog_list(f)]})


def cmd_fingerprint(args) -> RunReport:
    fp = invariant_fingerprint(load_algebra(args.algebra, args))
    payload = {"dim": fp.dim, "center_dim": fp.center_dim, "derived_dim": fp.derived_dim,
               "semisimple": fp.semisimple, "nilpotent": fp.nilpotent, "perfect": fp.perfect,
               "gram_char_poly": None if fp.gram_char_poly is None else [_fmt(c) for c in fp.gram_char_poly]}
    return RunReport(args.verb, "Pass", payload)


def _features(text: str) -> tuple:
    return tuple(f for f in text.split(",") if f)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the report as JSON")
    common.add_argument("--field", help="Q or Fp:<p> (catalog algebras default to Q)")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search budget in candidates")
    common.add_argument("--features", type=_features, default=(), help="comma-separated feature flags, e.g. d4")

    parser = argparse.ArgumentParser(prog="rbalg", description="Exact checks for Rota-Baxter operators, "
                                     "post-Lie/post-associative structures and algebra decompositions.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="COMMAND")

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    _algebra_arg(add("verify-algebra", cmd_verify_algebra, "check the Lie or associative law"))
    _rb_args(add("verify-rb", cmd_verify_rb, "check the Rota-Baxter identity"))
    _rb_args(add("induce", cmd_induce, "print the algebra induced by an RB operator"))
    p = add("tower", cmd_tower, "iterate the induced product and check kernel ideals")
    _rb_args(p)
    p.add_argument("--steps", type=int, default=3)
    p = add("search-rb", cmd_search_rb, "enumerate all RB operators over F_p")
    _algebra_arg(p)
    p.add_argument("--weight", default="1")
    for name, func, help_ in (("verify-post-lie", cmd_verify_post_lie, "check post-Lie identities"),
                              ("verify-post-assoc", cmd_verify_post_assoc, "check post-associative identities"),
                              ("extract-rb", cmd_extract_rb, "recover R(x) = x > 1 from a post-associative structure"),
                              ("descend", cmd_descend, "commutator post-Lie structure of a post-associative one")):
        add(name, func, help_).add_argument("--structure", required=True, help="structure JSON file")
    _rb_args(add("from-rb", cmd_from_rb, "post-structure induced by a weight-1 RB operator"))
    p = add("h1", cmd_h1, "dimensions of Z^1, B^1 and H^1")
    p.add_argument("--flavor", choices=("lie", "assoc"), default="lie")
    p.add_argument("--module", help="Representation or bimodule JSON file")
    _algebra_arg(p, required=False)
    p.add_argument("--module-kind", choices=("trivial", "adjoint", "natural", "regular"), default="adjoint")
    p = add("decompose", cmd_decompose, "decomposition checks")
    dsub = p.add_subparsers(dest="action", required=True, metavar="ACTION")
    dsub.add_parser("verify", parents=[common]).add_argument("--decomposition", required=True)
    dsub.add_parser("instance", parents=[common]).add_argument("name", choices=INSTANCES)
    dsub.add_parser("counterexample", parents=[common]).add_argument("--n", type=int, default=2)
    nil = dsub.add_parser("nilsum", parents=[common])
    nil.add_argument("--decomposition")
    nil.add_argument("--random", type=int, default=100, help="number of random nilpotent pairs")
    nil.add_argument("--seed", type=int, default=0)
    add("catalog", cmd_catalog, "list catalog algebras")
    _algebra_arg(add("fingerprint", cmd_fingerprint, "basis-independent invariants"))
    return parser


def dispatch(args) -> RunReport:
    verb = args.verb if args.verb != "decompose" else f"decompose {args.action}"
    try:
        return args.func(args)
    except CheckFailed as exc:
        report = exc.report
        witnesses = [witness_json(v) for v in report.violations] if report is not None else []
        if not witnesses:
            witnesses = [{"check": type(exc).__name__, "indices": [], "residual": []}]
        return RunReport(verb, "Fail", {}, witnesses, str(exc))
    except (AlgebraError, ValueError, OSError) as exc:
        return RunReport(verb, "Error", {}, [], f"{type(exc).__name__}: {exc}")


def _summary(rep: RunReport) -> str:
    lines = [f"{rep.verb}: {rep.status}"]
    if rep.diagnostic:
        lines.append(f"  {rep.diagnostic}")
    for k, v in sorted(rep.payload.items()):
        if isinstance(v, (dict, list)):
            if k == "algebras":
                lines.extend(f"  {a['name']:<18} dim {a['dim']}" for a in v)
            elif k == "components":
                for name, info in v.items():
                    lines.append(f"  {name}: " + ", ".join(f"{kk}={vv}" for kk, vv in info.items()))
            continue
        lines.append(f"  {k}: {v}")
    for w in rep.witnesses[:10]:
        lines.append(f"  witness {w['check']} at {tuple(w['indices'])}: {w['residual']}")
    if len(rep.witnesses) > 10:
        lines.append(f"  ... {len(rep.witnesses) - 10} more")
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    rep = dispatch(args)
    print(jsonio.dumps(rep.to_json()) if args.json else _summary(rep))
    return EXIT[rep.status]


if __name__ == "__main__":
    sys.exit(main())
