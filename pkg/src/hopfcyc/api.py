"""Payload-level operations shared by the HTTP service and the CLI.

Every handler takes and returns plain JSON-compatible dicts; typed
:class:`~hopfcyc.errors.EngineError` subclasses escape to the caller, which
maps them to HTTP error payloads or process exit codes.
"""

from .cyclic import THEORIES, build_concrete, build_generic, verify_relations
from .errors import ParseError
from .homology import complex_report
from .hopf import verify_axioms
from .linalg import first_difference
from .rep import (
    check_stability,
    check_stability_odd,
    validate_modcomod,
    yd_route1,
    yd_route2,
    _yd_route1_sides,
)
from .serialize import (
    axiom_report_to_dict,
    complex_report_to_dict,
    cyclic_object_from_dict,
    cyclic_object_to_dict,
    hopf_from_dict,
    modcomod_from_dict,
    module_algebra_from_dict,
    module_coalgebra_from_dict,
    object_kind,
    relation_report_to_dict,
    _mismatch_to_dict,
)
from .trace import TraceInstance


def verify_hopf(payload):
    h = hopf_from_dict(_require(payload, "hopf"))
    report = verify_axioms(h)
    return axiom_report_to_dict(report, h.field)


def check_coeff(payload):
    h = hopf_from_dict(_require(payload, "hopf"))
    m = modcomod_from_dict(h, _require(payload, "coeff"))
    i = int(payload.get("i", 0))
    require_stability = bool(payload.get("require_stability", False))
    validate_modcomod(h, m)
    r1 = yd_route1(h, m, i)
    r2 = yd_route2(h, m, i)
    mismatch = None
    if not r1:
        lhs, rhs = _yd_route1_sides(h, m, i)
        mismatch = _mismatch_to_dict(first_difference(lhs, rhs), h.field)
    even = check_stability(h, m, i)
    odd = check_stability_odd(h, m, i)
    ok = r1 and (even or not require_stability)
    return {
        "i": i,
        "yd_route1": r1,
        "yd_route2": r2,
        "yd": r1,
        "yd_first_mismatch": mismatch,
        "stability_even": even,
        "stability_odd": odd,
        "stable": even,
        "requested_ok": ok,
    }


def build(payload):
    theory = payload.get("theory")
    if theory not in THEORIES:
        raise ParseError(
            f"unknown theory {theory!r}; expected one of {sorted(THEORIES)}"
        )
    h = hopf_from_dict(_require(payload, "hopf"))
    m = modcomod_from_dict(h, _require(payload, "coeff"))
    obj_data = _require(payload, "object")
    kind = object_kind(obj_data)
    if kind != THEORIES[theory][1]:
        raise ParseError(f"theory {theory} expects a module {THEORIES[theory][1]}")
    obj = (
        module_algebra_from_dict(h, obj_data)
        if kind == "algebra"
        else module_coalgebra_from_dict(h, obj_data)
    )
    degree = int(payload.get("degree", 2))
    if not 1 <= degree <= 8:
        raise ParseError("degree must be between 1 and 8")
    allow_paracyclic = bool(payload.get("allow_paracyclic", False))
    builder = payload.get("builder", "direct")
    if builder == "direct":
        co = build_concrete(theory, h, m, obj, degree, allow_paracyclic)
    elif builder == "generic":
        t = TraceInstance(h, m, THEORIES[theory][0])
        co = build_generic(t, obj, degree, allow_paracyclic)
    else:
        raise ParseError(f"unknown builder {builder!r}; expected 'direct' or 'generic'")
    return {"object": cyclic_object_to_dict(co)}


def relations(payload):
    co = cyclic_object_from_dict(_require(payload, "object"))
    return relation_report_to_dict(verify_relations(co))


def homology(payload):
    co = cyclic_object_from_dict(_require(payload, "object"))
    return complex_report_to_dict(complex_report(co))


def _require(payload, key):
    if not isinstance(payload, dict) or key not in payload:
        raise ParseError(f"payload is missing '{key}'")
    return payload[key]


HANDLERS = {
    "verify-hopf": verify_hopf,
    "check-coeff": check_coeff,
    "build": build,
    "verify-relations": relations,
    "homology": homology,
}
