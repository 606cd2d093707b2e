"""JSON encoding and decoding for every wire type.

Scalars travel as strings ``"p/q"`` (or ``"p"`` when the denominator is 1);
integers are accepted on input.  Matrices are nested row-major arrays.  All
emitted JSON is canonical: sorted keys, fixed separators, trailing newline,
so identical inputs always produce byte-identical files.
"""

import json

from .errors import AxiomError, ParseError
from .fields import QQ
from .hopf import HopfAlgebra, verify_axioms
from .linalg import Mat, SubspaceBasis, TensorShape
from .rep import LeftModule, ModComod, ModuleAlgebra, ModuleCoalgebra, RightComodule
from .cyclic import CyclicObject


def mat_to_lists(m):
    fld = m.field
    return [[fld.format(v) for v in row] for row in m.to_rows()]


def mat_from_lists(rows, shape=None, field=QQ, what="matrix"):
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise ParseError(f"{what} must be a nested array")
    try:
        m = Mat.from_rows(rows, field)
    except (ValueError, ParseError) as exc:
        raise ParseError(f"bad {what}: {exc}") from None
    if shape is not None and (m.rows, m.cols) != shape:
        raise ParseError(
            f"{what} must be {shape[0]}x{shape[1]}, got {m.rows}x{m.cols}"
        )
    return m


def _vector_from_list(values, length, field, what, column=True):
    if not isinstance(values, list):
        raise ParseError(f"{what} must be an array")
    rows = [[v] for v in values] if column else [values]
    shape = (length, 1) if column else (1, length)
    return mat_from_lists(rows, shape, field, what)


def dumps_canonical(payload):
    return json.dumps(payload, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


# -- Hopf algebras -------------------------------------------------------------


def hopf_to_dict(h):
    return {
        "dim": h.dim,
        "basis": list(h.basis_names),
        "mult": mat_to_lists(h.mult),
        "unit": [h.field.format(row[0]) for row in h.unit.to_rows()],
        "comult": mat_to_lists(h.comult),
        "counit": [h.field.format(v) for v in h.counit.to_rows()[0]],
        "antipode": mat_to_lists(h.antipode),
        "antipode_inv": mat_to_lists(h.antipode_inv),
    }


def hopf_from_dict(data, field=QQ, validate=False):
    if not isinstance(data, dict):
        raise ParseError("Hopf algebra payload must be an object")
    try:
        n = int(data["dim"])
    except (KeyError, TypeError, ValueError):
        raise ParseError("missing or bad 'dim'") from None
    if n < 1:
        raise ParseError("'dim' must be positive")
    for key in ("mult", "unit", "comult", "counit", "antipode"):
        if key not in data:
            raise ParseError(f"missing '{key}'")
    names = data.get("basis")
    if names is not None and (
        not isinstance(names, list) or len(names) != n
    ):
        raise ParseError("'basis' must list one name per dimension")
    mult = mat_from_lists(data["mult"], (n, n * n), field, "mult")
    unit = _vector_from_list(data["unit"], n, field, "unit")
    comult = mat_from_lists(data["comult"], (n * n, n), field, "comult")
    counit = _vector_from_list(data["counit"], n, field, "counit", column=False)
    antipode = mat_from_lists(data["antipode"], (n, n), field, "antipode")
    antipode_inv = None
    if data.get("antipode_inv") is not None:
        antipode_inv = mat_from_lists(
            data["antipode_inv"], (n, n), field, "antipode_inv"
        )
    h = HopfAlgebra(
        n, mult, unit, comult, counit, antipode, antipode_inv, names, field
    )
    if validate:
        report = verify_axioms(h)
        if not report.passed:
            raise AxiomError("axioms fail: " + ", ".join(report.failing()))
    return h


# -- coefficients and objects ---------------------------------------------------


def modcomod_to_dict(m):
    return {
        "action": mat_to_lists(m.action),
        "coaction": mat_to_lists(m.coaction),
    }


def modcomod_from_dict(h, data):
    if not isinstance(data, dict) or "action" not in data or "coaction" not in data:
        raise ParseError("coefficient payload needs 'action' and 'coaction'")
    action = mat_from_lists(data["action"], None, h.field, "action")
    d = action.rows
    if action.cols != h.dim * d:
        raise ParseError(f"action must be d x (n*d) with n = {h.dim}")
    coaction = mat_from_lists(data["coaction"], (d * h.dim, d), h.field, "coaction")
    return ModComod(LeftModule(d, action), RightComodule(d, coaction))


def module_algebra_to_dict(a):
    return {
        "action": mat_to_lists(a.module.action),
        "mult": mat_to_lists(a.mult),
        "unit": [a.unit.field.format(row[0]) for row in a.unit.to_rows()],
    }


def module_coalgebra_to_dict(c):
    return {
        "action": mat_to_lists(c.module.action),
        "comult": mat_to_lists(c.comult),
        "counit": [c.counit.field.format(v) for v in c.counit.to_rows()[0]],
    }


def module_algebra_from_dict(h, data):
    if not isinstance(data, dict) or "mult" not in data or "action" not in data:
        raise ParseError("algebra payload needs 'action', 'mult' and 'unit'")
    action = mat_from_lists(data["action"], None, h.field, "action")
    d = action.rows
    if action.cols != h.dim * d:
        raise ParseError(f"action must be d x (n*d) with n = {h.dim}")
    mult = mat_from_lists(data["mult"], (d, d * d), h.field, "mult")
    unit = _vector_from_list(data.get("unit"), d, h.field, "unit")
    return ModuleAlgebra(LeftModule(d, action), mult, unit)


def module_coalgebra_from_dict(h, data):
    if not isinstance(data, dict) or "comult" not in data or "action" not in data:
        raise ParseError("coalgebra payload needs 'action', 'comult' and 'counit'")
    action = mat_from_lists(data["action"], None, h.field, "action")
    d = action.rows
    if action.cols != h.dim * d:
        raise ParseError(f"action must be d x (n*d) with n = {h.dim}")
    comult = mat_from_lists(data["comult"], (d * d, d), h.field, "comult")
    counit = _vector_from_list(data.get("counit"), d, h.field, "counit", column=False)
    return ModuleCoalgebra(LeftModule(d, action), comult, counit)


def object_kind(data):
    if not isinstance(data, dict):
        raise ParseError("object payload must be a JSON object")
    if "mult" in data and "comult" not in data:
        return "algebra"
    if "comult" in data and "mult" not in data:
        return "coalgebra"
    raise ParseError("object payload must carry either 'mult'/'unit' or 'comult'/'counit'")


# -- towers ---------------------------------------------------------------------


def _shape_to_list(shape):
    return [[label, dim] for label, dim in shape.factors]


def _shape_from_list(data):
    try:
        return TensorShape([(str(l), int(d)) for l, d in data])
    except (TypeError, ValueError):
        raise ParseError("bad tensor shape") from None


def cyclic_object_to_dict(co):
    return {
        "variance": co.variance,
        "degree_cap": co.degree_cap,
        "dims": co.dims(),
        "spaces": [
            {
                "factors": _shape_to_list(s.ambient_shape),
                "inclusion": mat_to_lists(s.inclusion),
            }
            for s in co.spaces
        ],
        "faces": [
            [mat_to_lists(m) for m in co.faces[n]] for n in range(1, co.degree_cap + 1)
        ],
        "degens": [
            [mat_to_lists(m) for m in co.degens[n]] for n in range(co.degree_cap)
        ],
        "cyclic_ops": [mat_to_lists(m) for m in co.cyclic_ops],
        "provenance": dict(co.provenance),
    }


def cyclic_object_from_dict(data, field=QQ):
    if not isinstance(data, dict):
        raise ParseError("tower payload must be a JSON object")
    variance = data.get("variance")
    if variance not in ("cyclic", "cocyclic"):
        raise ParseError("variance must be 'cyclic' or 'cocyclic'")
    try:
        cap = int(data["degree_cap"])
    except (KeyError, TypeError, ValueError):
        raise ParseError("missing or bad 'degree_cap'") from None
    spaces = []
    for entry in data.get("spaces", []):
        shape = _shape_from_list(entry.get("factors", []))
        incl = mat_from_lists(entry.get("inclusion"), None, field, "inclusion")
        try:
            spaces.append(SubspaceBasis(shape, incl))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    faces_raw = data.get("faces", [])
    degens_raw = data.get("degens", [])
    taus_raw = data.get("cyclic_ops", [])
    faces = {
        n: [mat_from_lists(m, None, field, "face") for m in mats]
        for n, mats in zip(range(1, cap + 1), faces_raw)
    }
    degens = {
        n: [mat_from_lists(m, None, field, "degeneracy") for m in mats]
        for n, mats in zip(range(cap), degens_raw)
    }
    taus = [mat_from_lists(m, None, field, "cyclic operator") for m in taus_raw]
    co = CyclicObject(
        variance=variance,
        degree_cap=cap,
        spaces=spaces,
        faces=faces,
        degens=degens,
        cyclic_ops=taus,
        provenance=data.get("provenance", {}),
    )
    try:
        co.validate_shape()
    except Exception as exc:
        raise ParseError(f"inconsistent tower: {exc}") from None
    return co


# -- reports ---------------------------------------------------------------------


def _mismatch_to_dict(mm, field):
    if mm is None:
        return None
    i, j, lhs, rhs = mm
    return {"row": i, "col": j, "lhs": field.format(lhs), "rhs": field.format(rhs)}


def axiom_report_to_dict(report, field=QQ):
    return {
        "passed": report.passed,
        "checks": [
            {
                "name": c.name,
                "passed": c.passed,
                "first_mismatch": _mismatch_to_dict(c.first_mismatch, field),
            }
            for c in report.checks
        ],
    }


def relation_report_to_dict(report):
    return {
        "passed": report.passed,
        "checked": report.checked,
        "checked_by_relation": dict(report.checked_by_relation),
        "violations": [
            {"relation": v.relation, "degree": v.degree, "indices": list(v.indices)}
            for v in report.violations
        ],
    }


def complex_report_to_dict(report):
    return {
        "hochschild": list(report.hochschild_dims),
        "cyclic": list(report.cyclic_dims),
        "max_valid_degree": report.max_valid_degree,
    }
