"""Batch interface: build the example families, verify structures, classify
multiplicity matrices, and round-trip the JSON documents.

One JSON document goes to stdout; human-readable progress goes to stderr.
Exit status: 0 all checks passed, 1 a verification failed, 2 usage or input
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import SCHEMA_VERSION, __version__
from .algebra import Pencil
from .dynkin import catalog, catalog_entries, classify, is_admissible, solve_adm
from .matops import extract_m_tensors, verify_tensor_identities
from .mstructure import (
    MPresentation,
    UElement,
    check_K_central,
    classify_comm_a,
    comm_a_build,
    cyclic_representation,
    example_cyclic,
    validate_representation,
)
from .pencil import check_compatibility, deform_by_R, extend_polynomial
from .pmstructure import (
    PMElement,
    a2k1_build,
    a2k1_representation,
    pm_check_K_central,
    pm_check_consistency,
    pm_validate_representation,
)
from .poisson import check_poisson_pencil
from .rand import DetRNG
from .serialize import (
    DocumentError,
    matrix_from_json,
    mpres_from_json,
    mpres_to_json,
    parse_field_spec,
    pencil_from_json,
    pmpres_from_json,
    pmpres_to_json,
    pmrep_to_json,
    rpres_from_json,
    rpres_to_json,
    sc_from_json,
    sc_to_json,
)


def _say(text):
    print(text, file=sys.stderr)


def _emit(doc):
    json.dump(doc, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _load_json(args):
    if getattr(args, "inline", None):
        text = args.inline
        source = "<inline>"
    elif args.input == "-":
        text = sys.stdin.read()
        source = "<stdin>"
    else:
        try:
            with open(args.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise DocumentError("cannot read %s: %s" % (args.input, exc)) from None
        source = args.input
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("%s: line %d column %d: %s"
                            % (source, exc.lineno, exc.colno, exc.msg)) from None


def _fractions(text):
    return [Fraction(part) for part in text.split(",") if part.strip() != ""]


def _exit_from(report_ok):
    return 0 if report_ok else 1


def _random_m_element(pres, rng, terms=4, kmax=2):
    out = UElement(pres)
    monos = list(pres.basis_monomials())
    for _ in range(terms):
        kind, i, j = monos[rng.randint(0, len(monos) - 1)]
        out.add_term((kind, i, j, rng.randint(0, kmax)), pres.field(rng.fraction(4, 3)))
    return out._tidy()


def _random_pm_element(pres, rng, terms=3, kmax=2):
    out = PMElement(pres)
    monos = list(pres.basis_monomials())
    for _ in range(terms):
        mono = monos[rng.randint(0, len(monos) - 1)]
        out.add_term(mono + (rng.randint(0, kmax),), pres.field(rng.fraction(4, 3)))
    return out._tidy()


def _sample_m_associativity(pres, seed, samples):
    rng = DetRNG(seed)
    bad = 0
    for _ in range(samples):
        x = _random_m_element(pres, rng)
        y = _random_m_element(pres, rng)
        z = _random_m_element(pres, rng)
        lhs = pres.u_multiply(pres.u_multiply(x, y), z)
        rhs = pres.u_multiply(x, pres.u_multiply(y, z))
        if not (lhs - rhs).is_zero():
            bad += 1
    return bad


def _sample_pm_associativity(pres, seed, samples):
    rng = DetRNG(seed)
    bad = 0
    for _ in range(samples):
        x = _random_pm_element(pres, rng)
        y = _random_pm_element(pres, rng)
        z = _random_pm_element(pres, rng)
        lhs = pres.multiply(pres.multiply(x, y), z)
        rhs = pres.multiply(x, pres.multiply(y, z))
        if not (lhs - rhs).is_zero():
            bad += 1
    return bad


# -- subcommands ----------------------------------------------------------


def cmd_verify_pencil(args):
    pencil = pencil_from_json(_load_json(args))
    report = check_compatibility(pencil)
    _emit({"schema": SCHEMA_VERSION, "command": "verify-pencil", **report.to_dict()})
    _say("verify-pencil: %s" % ("ok" if report.ok else
                                "FAILED (%s)" % ", ".join(report.failures())))
    return _exit_from(report.ok)


def cmd_deform(args):
    doc = _load_json(args)
    if not isinstance(doc, dict) or "star" not in doc or "r" not in doc:
        raise DocumentError("deform input needs star and r entries")
    star = sc_from_json(doc["star"], "star")
    op = matrix_from_json(doc["r"], star.field, "r")
    if len(op) != star.dim or any(len(row) != star.dim for row in op):
        raise DocumentError("r: expected a %d x %d matrix" % (star.dim, star.dim))
    circle = deform_by_R(star, op)
    report = check_compatibility(Pencil(star, circle))
    _emit({"schema": SCHEMA_VERSION, "command": "deform",
           "circle": sc_to_json(circle), **report.to_dict()})
    _say("deform: circle emitted; verification %s" % ("ok" if report.ok else "FAILED"))
    return _exit_from(report.ok)


def cmd_extract_tensors(args):
    pres = rpres_from_json(_unwrap(_load_json(args), "representation"))
    tensors, report = extract_m_tensors(pres)
    thm = verify_tensor_identities(tensors)
    mpres = MPresentation(tensors)
    _emit({"schema": SCHEMA_VERSION, "command": "extract-tensors",
           "tensors": mpres_to_json(mpres),
           "closure": report.to_dict(), "identities": thm.to_dict()})
    ok = report.ok and thm.ok
    _say("extract-tensors: %s" % ("ok" if ok else "FAILED"))
    return _exit_from(ok)


def _unwrap(doc, key):
    # builder outputs may be piped straight into the verifiers
    if isinstance(doc, dict) and key in doc and "schema" in doc.get(key, {}):
        return doc[key]
    return doc


def cmd_verify_mstructure(args):
    pres = mpres_from_json(_unwrap(_load_json(args), "presentation"))
    thm = verify_tensor_identities(pres.tensors)
    central = check_K_central(pres)
    bad = _sample_m_associativity(pres, args.seed, args.samples)
    ok = thm.ok and central.ok and bad == 0
    _emit({"schema": SCHEMA_VERSION, "command": "verify-mstructure",
           "identities": thm.to_dict(), "centrality": central.to_dict(),
           "sampled_triples": args.samples, "associativity_failures": bad,
           "ok": ok})
    _say("verify-mstructure: %s" % ("ok" if ok else "FAILED"))
    return _exit_from(ok)


def cmd_build_cyclic(args):
    field = parse_field_spec(args.field) if args.field else None
    pres = example_cyclic(args.p, field)
    rep = cyclic_representation(args.p, Fraction(args.s), pres.field)
    report = validate_representation(pres, rep)
    _emit({"schema": SCHEMA_VERSION, "command": "build-cyclic",
           "presentation": mpres_to_json(pres),
           "representation": rpres_to_json(rep),
           "validation": report.to_dict()})
    _say("build-cyclic: p=%d validation %s" % (args.p, "ok" if report.ok else "FAILED"))
    return _exit_from(report.ok)


def _comm_a_input(args):
    doc = _load_json(args)
    if not isinstance(doc, dict) or not all(k in doc for k in ("u", "v", "q")):
        raise DocumentError("expected an object with u, v, q")
    try:
        u = [Fraction(x) for x in doc["u"]]
        v = [Fraction(x) for x in doc["v"]]
        q = [[Fraction(x) for x in row] for row in doc["q"]]
    except (TypeError, ValueError):
        raise DocumentError("u, v, q must hold rationals") from None
    if len(v) != len(u) or len(q) != len(u) or any(len(row) != len(u) for row in q):
        raise DocumentError("u, v, q sizes disagree")
    return u, v, q


def cmd_build_comma(args):
    field = parse_field_spec(args.field) if args.field else None
    from .scalars import CyclotomicField

    field = field or CyclotomicField(1)
    u, v, q = _comm_a_input(args)
    result = comm_a_build(field, u, v, q)
    thm = verify_tensor_identities(result.presentation.tensors)
    central = check_K_central(result.presentation)
    ok = thm.ok and central.ok
    _emit({"schema": SCHEMA_VERSION, "command": "build-comma",
           "presentation": mpres_to_json(result.presentation),
           "algebra_b": sc_to_json(result.algebra_b),
           "identities": thm.to_dict(), "centrality": central.to_dict()})
    _say("build-comma: %s" % ("ok" if ok else "FAILED"))
    return _exit_from(ok)


def cmd_classify_comma(args):
    from .scalars import CyclotomicField

    u, v, q = _comm_a_input(args)
    got = classify_comm_a(CyclotomicField(1), u, v, q)
    data = {}
    for key, value in got.data.items():
        if key == "tau":
            data[key] = str(value)
        elif key == "clusters":
            data[key] = [[i + 1 for i in cl] for cl in value]
        elif key == "pair_value":
            data[key] = {"%d,%d" % (a + 1, b + 1): str(v2) for (a, b), v2 in value.items()}
        elif key == "classes":
            data[key] = [[i + 1 for i in cl] for cl in value]
        else:
            data[key] = value
    _emit({"schema": SCHEMA_VERSION, "command": "classify-comma",
           "tag": got.tag, "data": data})
    _say("classify-comma: %s" % got.tag)
    return 0


def cmd_build_a2k1(args):
    field = parse_field_spec(args.field) if args.field else None
    lam = _fractions(args.lam)
    t = _fractions(args.t)
    pres = a2k1_build(args.k, args.m, lam, t, field)
    doc = {"schema": SCHEMA_VERSION, "command": "build-a2k1",
           "presentation": pmpres_to_json(pres)}
    ok = True
    if args.s is not None:
        rep = a2k1_representation(args.k, args.m, lam, t, Fraction(args.s), pres.field)
        report = pm_validate_representation(pres, rep)
        doc["representation"] = pmrep_to_json(rep)
        doc["validation"] = report.to_dict()
        ok = report.ok
    _emit(doc)
    _say("build-a2k1: k=%d m=%d %s" % (args.k, args.m, "ok" if ok else "FAILED"))
    return _exit_from(ok)


def cmd_verify_pmstructure(args):
    pres = pmpres_from_json(_unwrap(_load_json(args), "presentation"))
    report = pm_check_consistency(pres)
    central = pm_check_K_central(pres)
    bad = _sample_pm_associativity(pres, args.seed, args.samples)
    ok = report.ok and central.ok and bad == 0
    _emit({"schema": SCHEMA_VERSION, "command": "verify-pmstructure",
           "identities": report.to_dict(), "centrality": central.to_dict(),
           "sampled_triples": args.samples, "associativity_failures": bad,
           "ok": ok})
    _say("verify-pmstructure: %s" % ("ok" if ok else "FAILED"))
    return _exit_from(ok)


def cmd_classify_matrix(args):
    doc = _load_json(args)
    if not isinstance(doc, list):
        raise DocumentError("expected a plain integer matrix [[...], ...]")
    try:
        a = [[int(x) for x in row] for row in doc]
    except (TypeError, ValueError):
        raise DocumentError("matrix entries must be integers") from None
    if not a or any(len(row) != len(a[0]) for row in a):
        raise DocumentError("matrix must be rectangular and nonempty")
    if any(x < 0 for row in a for x in row):
        raise DocumentError("matrix entries must be nonnegative")
    got = classify(a)
    if got is None:
        _emit({"schema": SCHEMA_VERSION, "command": "classify-matrix",
               "admissible": is_admissible(a), "family": None})
        _say("classify-matrix: not admissible" if not is_admissible(a)
             else "classify-matrix: admissible but unrecognized")
        return 1
    mvec, nvec = solve_adm(a)
    _emit({"schema": SCHEMA_VERSION, "command": "classify-matrix",
           "admissible": True, **got.to_dict(), "m": mvec, "n": nvec})
    _say("classify-matrix: %s%s" % (got.family,
                                    " (k=%d)" % got.k if got.k else ""))
    return 0


def cmd_catalog(args):
    if args.family == "list":
        entries = [{"family": f, "k": k} for f, k in catalog_entries(args.max_k)]
        _emit({"schema": SCHEMA_VERSION, "command": "catalog", "entries": entries})
        return 0
    a, mvec, nvec = catalog(args.family, args.k)
    _emit({"schema": SCHEMA_VERSION, "command": "catalog",
           "family": args.family, "k": args.k, "matrix": a,
           "m": mvec, "n": nvec})
    _say("catalog: %s -> %d x %d" % (args.family, len(a), len(a[0])))
    return 0


def cmd_poisson_check(args):
    pencil = pencil_from_json(_load_json(args))
    report = check_poisson_pencil(pencil, args.n)
    _emit({"schema": SCHEMA_VERSION, "command": "poisson-check", "n": args.n,
           **report.to_dict()})
    _say("poisson-check: %s" % ("ok" if report.ok else "FAILED"))
    return _exit_from(report.ok)


def cmd_extend_poly(args):
    pencil = pencil_from_json(_load_json(args))
    qcoeffs = _fractions(args.q)
    ext = extend_polynomial(pencil, qcoeffs)
    associative = ext.is_associative()
    _emit({"schema": SCHEMA_VERSION, "command": "extend-poly",
           "product": sc_to_json(ext), "associative": associative})
    _say("extend-poly: dim %d, %s" % (ext.dim,
                                      "associative" if associative else "NOT associative"))
    return _exit_from(associative)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pencilalg",
        description="exact calculations with pairs of compatible associative products")
    parser.add_argument("--version", action="version",
                        version="pencilalg %s (schema %s)" % (__version__, SCHEMA_VERSION))
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, needs_input=True, **extra):
        p = sub.add_parser(name)
        if needs_input:
            p.add_argument("input", nargs="?", default="-",
                           help="input path or - for stdin")
            p.add_argument("--inline", help="inline JSON instead of a file")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--samples", type=int, default=20)
        p.set_defaults(func=fn)
        return p

    add("verify-pencil", cmd_verify_pencil)
    add("deform", cmd_deform)
    add("extract-tensors", cmd_extract_tensors)
    add("verify-mstructure", cmd_verify_mstructure)

    p = add("build-cyclic", cmd_build_cyclic, needs_input=False)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--s", default="2")
    p.add_argument("--field")

    p = add("build-comma", cmd_build_comma)
    p.add_argument("--field")

    add("classify-comma", cmd_classify_comma)

    p = add("build-a2k1", cmd_build_a2k1, needs_input=False)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--lam", required=True, help="comma-separated rationals")
    p.add_argument("--t", required=True, help="comma-separated rationals")
    p.add_argument("--s", help="build the ladder representation too")
    p.add_argument("--field")

    add("verify-pmstructure", cmd_verify_pmstructure)
    add("classify-matrix", cmd_classify_matrix)

    p = add("catalog", cmd_catalog, needs_input=False)
    p.add_argument("family", help="A1, A2k-1, D4, D2k, D2k-1, E6, E7, E8, or list")
    p.add_argument("--k", type=int)
    p.add_argument("--max-k", type=int, default=6)

    p = add("poisson-check", cmd_poisson_check)
    p.add_argument("--n", type=int, default=2)

    p = add("extend-poly", cmd_extend_poly)
    p.add_argument("--q", required=True, help="ascending coefficients, comma-separated")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        _say("error: %s" % exc)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        _say("error: %s" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
