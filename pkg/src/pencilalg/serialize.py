"""JSON document formats for every exchangeable object.

Every document carries {"schema": SCHEMA_VERSION} plus a field descriptor;
scalars travel as canonical strings, structure constants as sparse 1-based
(k, i, j) triples sorted lexicographically, matrices as row-major string
arrays.
"""

from __future__ import annotations

from . import SCHEMA_VERSION
from .algebra import Pencil, StructureConstants
from .matops import MTensors, RPresentation
from .mstructure import MPresentation
from .pmstructure import PMPresentation, PMRepresentation
from .scalars import CyclotomicField, FloatField, format_scalar, parse_scalar


class DocumentError(ValueError):
    """Malformed document; the message names the offending location."""


def field_to_json(field):
    if isinstance(field, CyclotomicField):
        return {"kind": "cyclotomic", "order": field.order}
    if isinstance(field, FloatField):
        return {"kind": "float", "tol": field.tol}
    raise DocumentError("unknown field backend %r" % (field,))


def field_from_json(doc, where="field"):
    if not isinstance(doc, dict) or "kind" not in doc:
        raise DocumentError("%s: expected a field descriptor" % where)
    if doc["kind"] == "cyclotomic":
        try:
            return CyclotomicField(int(doc["order"]))
        except (KeyError, TypeError, ValueError):
            raise DocumentError("%s: bad cyclotomic order" % where) from None
    if doc["kind"] == "float":
        return FloatField(float(doc.get("tol", 1e-9)))
    raise DocumentError("%s: unknown field kind %r" % (where, doc["kind"]))


def parse_field_spec(text):
    """CLI shorthand: cyclotomic:N, rational, or float:tol."""
    if text in ("rational", "q", "Q"):
        return CyclotomicField(1)
    kind, _, arg = text.partition(":")
    if kind == "cyclotomic":
        return CyclotomicField(int(arg or "1"))
    if kind == "float":
        return FloatField(float(arg or "1e-9"))
    raise DocumentError("unknown field spec %r" % text)


def _scalar(field, text, where):
    try:
        return field(text) if not isinstance(text, str) else parse_scalar(text, field)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError("%s: bad scalar %r (%s)" % (where, text, exc)) from None


def sc_to_json(sc):
    entries = []
    for i in range(sc.dim):
        for j in range(sc.dim):
            for k, v in enumerate(sc.table[i][j]):
                if not v.is_zero():
                    entries.append((k + 1, i + 1, j + 1, format_scalar(v)))
    entries.sort(key=lambda e: (e[0], e[1], e[2]))
    doc = {
        "schema": SCHEMA_VERSION,
        "dim": sc.dim,
        "field": field_to_json(sc.field),
        "c": [list(e) for e in entries],
    }
    if sc.label:
        doc["label"] = sc.label
    return doc


def sc_from_json(doc, where="structure-constants"):
    if not isinstance(doc, dict):
        raise DocumentError("%s: expected an object" % where)
    try:
        dim = int(doc["dim"])
    except (KeyError, TypeError, ValueError):
        raise DocumentError("%s: missing or bad dim" % where) from None
    field = field_from_json(doc.get("field", {}), where + ".field")
    zero = field.zero()
    table = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    for pos, entry in enumerate(doc.get("c", [])):
        try:
            k, i, j, text = entry
            k, i, j = int(k), int(i), int(j)
        except (TypeError, ValueError):
            raise DocumentError("%s.c[%d]: expected [k, i, j, scalar]"
                                % (where, pos)) from None
        if not (1 <= k <= dim and 1 <= i <= dim and 1 <= j <= dim):
            raise DocumentError("%s.c[%d]: index out of range 1..%d"
                                % (where, pos, dim))
        table[i - 1][j - 1][k - 1] = _scalar(field, text, "%s.c[%d]" % (where, pos))
    return StructureConstants(field, table, doc.get("label"))


def pencil_to_json(pencil):
    return {
        "schema": SCHEMA_VERSION,
        "star": sc_to_json(pencil.star),
        "circle": sc_to_json(pencil.circle),
    }


def pencil_from_json(doc, where="pencil"):
    if not isinstance(doc, dict) or "star" not in doc or "circle" not in doc:
        raise DocumentError("%s: expected star and circle entries" % where)
    return Pencil(sc_from_json(doc["star"], where + ".star"),
                  sc_from_json(doc["circle"], where + ".circle"))


def matrix_to_json(mat):
    return [[format_scalar(x) for x in row] for row in mat]


def matrix_from_json(doc, field, where="matrix"):
    if not isinstance(doc, list) or not doc:
        raise DocumentError("%s: expected a nonempty row list" % where)
    out = []
    width = None
    for r, row in enumerate(doc):
        if not isinstance(row, list):
            raise DocumentError("%s[%d]: expected a row list" % (where, r))
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise DocumentError("%s[%d]: ragged row" % (where, r))
        out.append([_scalar(field, x, "%s[%d][%d]" % (where, r, c))
                    for c, x in enumerate(row)])
    return out


def rpres_to_json(pres):
    return {
        "schema": SCHEMA_VERSION,
        "n": pres.n,
        "field": field_to_json(pres.field),
        "a": [matrix_to_json(m) for m in pres.a],
        "b": [matrix_to_json(m) for m in pres.b],
        "c": matrix_to_json(pres.c),
    }


def rpres_from_json(doc, where="presentation"):
    if not isinstance(doc, dict):
        raise DocumentError("%s: expected an object" % where)
    try:
        n = int(doc["n"])
    except (KeyError, TypeError, ValueError):
        raise DocumentError("%s: missing or bad n" % where) from None
    field = field_from_json(doc.get("field", {}), where + ".field")
    a_mats = [matrix_from_json(m, field, "%s.a[%d]" % (where, i))
              for i, m in enumerate(doc.get("a", []))]
    b_mats = [matrix_from_json(m, field, "%s.b[%d]" % (where, i))
              for i, m in enumerate(doc.get("b", []))]
    if "c" not in doc:
        raise DocumentError("%s: missing c matrix" % where)
    c_mat = matrix_from_json(doc["c"], field, where + ".c")
    if len(a_mats) != len(b_mats):
        raise DocumentError("%s: need equally many a and b matrices" % where)
    for tag, mats in (("a", a_mats), ("b", b_mats), ("c", [c_mat])):
        for i, m in enumerate(mats):
            if len(m) != n or any(len(row) != n for row in m):
                raise DocumentError("%s.%s[%d]: expected %d x %d" % (where, tag, i, n, n))
    return RPresentation(n, a_mats, b_mats, c_mat, field)


def _tensor3_entries(t):
    out = []
    for i, plane in enumerate(t):
        for j, row in enumerate(plane):
            for k, v in enumerate(row):
                if not v.is_zero():
                    out.append([i + 1, j + 1, k + 1, format_scalar(v)])
    return out


def _tensor2_entries(t):
    out = []
    for i, row in enumerate(t):
        for j, v in enumerate(row):
            if not v.is_zero():
                out.append([i + 1, j + 1, format_scalar(v)])
    return out


def mpres_to_json(pres):
    t = pres.tensors
    return {
        "schema": SCHEMA_VERSION,
        "p": pres.p,
        "field": field_to_json(pres.field),
        "phi": _tensor3_entries(t.phi),
        "mu": _tensor2_entries(t.mu),
        "psi": _tensor3_entries(t.psi),
        "lambda": _tensor2_entries(t.lam),
        "t": _tensor2_entries(t.t),
    }


def mpres_from_json(doc, where="presentation"):
    if not isinstance(doc, dict):
        raise DocumentError("%s: expected an object" % where)
    try:
        p = int(doc["p"])
    except (KeyError, TypeError, ValueError):
        raise DocumentError("%s: missing or bad p" % where) from None
    field = field_from_json(doc.get("field", {}), where + ".field")
    tensors = MTensors.zeros(field, p)

    def fill3(name, target):
        for pos, entry in enumerate(doc.get(name, [])):
            try:
                i, j, k, text = entry
                i, j, k = int(i), int(j), int(k)
            except (TypeError, ValueError):
                raise DocumentError("%s.%s[%d]: expected [i, j, k, scalar]"
                                    % (where, name, pos)) from None
            if not all(1 <= x <= p for x in (i, j, k)):
                raise DocumentError("%s.%s[%d]: index out of range" % (where, name, pos))
            target[i - 1][j - 1][k - 1] = _scalar(field, text,
                                                  "%s.%s[%d]" % (where, name, pos))

    def fill2(name, target):
        for pos, entry in enumerate(doc.get(name, [])):
            try:
                i, j, text = entry
                i, j = int(i), int(j)
            except (TypeError, ValueError):
                raise DocumentError("%s.%s[%d]: expected [i, j, scalar]"
                                    % (where, name, pos)) from None
            if not (1 <= i <= p and 1 <= j <= p):
                raise DocumentError("%s.%s[%d]: index out of range" % (where, name, pos))
            target[i - 1][j - 1] = _scalar(field, text, "%s.%s[%d]" % (where, name, pos))

    fill3("phi", tensors.phi)
    fill3("psi", tensors.psi)
    fill2("mu", tensors.mu)
    fill2("lambda", tensors.lam)
    fill2("t", tensors.t)
    return MPresentation(tensors, label=doc.get("label"))


def pmpres_to_json(pres):
    tensors = {}

    def put3(name, source):
        entries = []
        for (a, b, g), blk in sorted(source.items()):
            for i, plane in enumerate(blk):
                for j, row in enumerate(plane):
                    for k, v in enumerate(row):
                        if not v.is_zero():
                            entries.append([a + 1, b + 1, g + 1, i + 1, j + 1, k + 1,
                                            format_scalar(v)])
        tensors[name] = entries

    def put2(name, source):
        entries = []
        for (a, b), blk in sorted(source.items()):
            for i, row in enumerate(blk):
                for j, v in enumerate(row):
                    if not v.is_zero():
                        entries.append([a + 1, b + 1, i + 1, j + 1, format_scalar(v)])
        tensors[name] = entries

    put3("phi", pres.phi)
    put3("psi", pres.psi)
    put2("mu", pres.mu)
    put2("lambda", pres.lam)
    put2("t", pres.t)
    return {
        "schema": SCHEMA_VERSION,
        "m": pres.m,
        "field": field_to_json(pres.field),
        "p": [row[:] for row in pres.p],
        "tensors": tensors,
    }


def pmpres_from_json(doc, where="presentation"):
    if not isinstance(doc, dict):
        raise DocumentError("%s: expected an object" % where)
    try:
        m = int(doc["m"])
        p = [[int(x) for x in row] for row in doc["p"]]
    except (KeyError, TypeError, ValueError):
        raise DocumentError("%s: missing or bad m / p" % where) from None
    if len(p) != m or any(len(row) != m for row in p):
        raise DocumentError("%s: p must be %d x %d" % (where, m, m))
    field = field_from_json(doc.get("field", {}), where + ".field")
    zero = field.zero()
    tensors = doc.get("tensors", {})

    def adim(a, b):
        return p[a][b]

    def bdim(a, b):
        return p[b][a]

    def get3(name, dims):
        out = {}
        for pos, entry in enumerate(tensors.get(name, [])):
            try:
                a, b, g, i, j, k, text = entry
                a, b, g, i, j, k = (int(x) - 1 for x in (a, b, g, i, j, k))
            except (TypeError, ValueError):
                raise DocumentError("%s.tensors.%s[%d]: expected 6 indices + scalar"
                                    % (where, name, pos)) from None
            if not (0 <= a < m and 0 <= b < m and 0 <= g < m):
                raise DocumentError("%s.tensors.%s[%d]: block out of range"
                                    % (where, name, pos))
            di, dj, dk = dims(a, b, g)
            if not (0 <= i < di and 0 <= j < dj and 0 <= k < dk):
                raise DocumentError("%s.tensors.%s[%d]: index out of range"
                                    % (where, name, pos))
            blk = out.setdefault((a, b, g),
                                 [[[zero] * dk for _ in range(dj)] for _ in range(di)])
            blk[i][j][k] = _scalar(field, text, "%s.tensors.%s[%d]" % (where, name, pos))
        return out

    def get2(name, dims):
        out = {}
        for pos, entry in enumerate(tensors.get(name, [])):
            try:
                a, b, i, j, text = entry
                a, b, i, j = (int(x) - 1 for x in (a, b, i, j))
            except (TypeError, ValueError):
                raise DocumentError("%s.tensors.%s[%d]: expected 4 indices + scalar"
                                    % (where, name, pos)) from None
            if not (0 <= a < m and 0 <= b < m):
                raise DocumentError("%s.tensors.%s[%d]: block out of range"
                                    % (where, name, pos))
            di, dj = dims(a, b)
            if not (0 <= i < di and 0 <= j < dj):
                raise DocumentError("%s.tensors.%s[%d]: index out of range"
                                    % (where, name, pos))
            blk = out.setdefault((a, b), [[zero] * dj for _ in range(di)])
            blk[i][j] = _scalar(field, text, "%s.tensors.%s[%d]" % (where, name, pos))
        return out

    phi = get3("phi", lambda a, b, g: (adim(a, b), adim(b, g), adim(a, g)))
    psi = get3("psi", lambda a, b, g: (bdim(a, b), bdim(b, g), bdim(a, g)))
    mu = get2("mu", lambda a, b: (adim(a, b), adim(b, a)))
    lam = get2("lambda", lambda a, b: (bdim(a, b), bdim(b, a)))
    t = get2("t", lambda a, b: (bdim(a, b), bdim(a, b)))
    return PMPresentation(field, m, p, phi, mu, psi, lam, t, label=doc.get("label"))


def pmrep_to_json(rep):
    mats = {}
    for (a, b), ms in sorted(rep.amats.items()):
        for i, mat in enumerate(ms):
            mats["a/%d/%d/%d" % (i + 1, a + 1, b + 1)] = matrix_to_json(mat)
    for (a, b), ms in sorted(rep.bmats.items()):
        for i, mat in enumerate(ms):
            mats["b/%d/%d/%d" % (i + 1, a + 1, b + 1)] = matrix_to_json(mat)
    for a, mat in enumerate(rep.cmats):
        mats["c/%d" % (a + 1)] = matrix_to_json(mat)
    return {
        "schema": SCHEMA_VERSION,
        "dims": list(rep.dims),
        "field": field_to_json(rep.field),
        "matrices": mats,
    }


def pmrep_from_json(doc, where="representation"):
    if not isinstance(doc, dict):
        raise DocumentError("%s: expected an object" % where)
    try:
        dims = [int(x) for x in doc["dims"]]
    except (KeyError, TypeError, ValueError):
        raise DocumentError("%s: missing or bad dims" % where) from None
    field = field_from_json(doc.get("field", {}), where + ".field")
    m = len(dims)
    amats = {(a, b): {} for a in range(m) for b in range(m)}
    bmats = {(a, b): {} for a in range(m) for b in range(m)}
    cmats = [None] * m
    for key, mat_doc in doc.get("matrices", {}).items():
        parts = key.split("/")
        mat = None
        if parts[0] in ("a", "b") and len(parts) == 4:
            i, a, b = (int(x) - 1 for x in parts[1:])
            if not (0 <= a < m and 0 <= b < m):
                raise DocumentError("%s.matrices[%s]: block out of range" % (where, key))
            mat = matrix_from_json(mat_doc, field, "%s.matrices[%s]" % (where, key))
            if len(mat) != dims[a] or any(len(row) != dims[b] for row in mat):
                raise DocumentError("%s.matrices[%s]: expected %d x %d"
                                    % (where, key, dims[a], dims[b]))
            (amats if parts[0] == "a" else bmats)[(a, b)][i] = mat
        elif parts[0] == "c" and len(parts) == 2:
            a = int(parts[1]) - 1
            if not 0 <= a < m:
                raise DocumentError("%s.matrices[%s]: block out of range" % (where, key))
            mat = matrix_from_json(mat_doc, field, "%s.matrices[%s]" % (where, key))
            if len(mat) != dims[a] or any(len(row) != dims[a] for row in mat):
                raise DocumentError("%s.matrices[%s]: expected %d x %d"
                                    % (where, key, dims[a], dims[a]))
            cmats[a] = mat
        else:
            raise DocumentError("%s.matrices[%s]: unrecognized key" % (where, key))
    for a in range(m):
        if cmats[a] is None:
            raise DocumentError("%s: missing c/%d" % (where, a + 1))

    def pack(source):
        out = {}
        for (a, b), d in source.items():
            if not d:
                out[(a, b)] = []
                continue
            top = max(d) + 1
            if set(d) != set(range(top)):
                raise DocumentError("%s: generator indices of block (%d,%d) not contiguous"
                                    % (where, a + 1, b + 1))
            out[(a, b)] = [d[i] for i in range(top)]
        return out

    return PMRepresentation(field, dims, pack(amats), pack(bmats), cmats)


def bracket_to_json(bracket):
    entries = []
    for a in range(bracket.dim):
        for b in range(a + 1, bracket.dim):
            for c, v in bracket.table[a][b]:
                if not v.is_zero():
                    entries.append([a + 1, b + 1, c + 1, format_scalar(v)])
    entries.sort(key=lambda e: (e[0], e[1], e[2]))
    return {
        "schema": SCHEMA_VERSION,
        "dim": bracket.dim,
        "field": field_to_json(bracket.field),
        "gamma": entries,
    }
