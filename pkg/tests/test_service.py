import json

import pytest
from fastapi.testclient import TestClient

from hopfcyc import fixtures
from hopfcyc.service import app

client = TestClient(app)


def load(name):
    return json.loads(fixtures.path(name).read_text())


def test_health():
    resp = client.get("/api/health")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok"}


def test_verify_hopf_endpoint():
    resp = client.post("/api/verify-hopf", json={"hopf": load("hopf_sweedler.json")})
    assert resp.status_code == 200
    body = resp.json()
    assert body["passed"] is True
    assert {c["name"] for c in body["checks"]} >= {"associativity", "antipode-left"}

    resp = client.post(
        "/api/verify-hopf", json={"hopf": load("hopf_sweedler_bad_antipode.json")}
    )
    body = resp.json()
    assert body["passed"] is False
    failing = [c for c in body["checks"] if not c["passed"]]
    assert all(c["name"].startswith("antipode") for c in failing)
    assert failing[0]["first_mismatch"] is not None


def test_check_coeff_endpoint():
    resp = client.post(
        "/api/check-coeff",
        json={
            "hopf": load("hopf_sweedler.json"),
            "coeff": load("coeff_sweedler_sigma.json"),
            "i": 1,
            "require_stability": True,
        },
    )
    assert resp.status_code == 200
    body = resp.json()
    assert body["yd_route1"] and body["yd_route2"]
    assert body["stability_even"] and body["stability_odd"]
    assert body["requested_ok"]

    resp = client.post(
        "/api/check-coeff",
        json={
            "hopf": load("hopf_sweedler.json"),
            "coeff": load("coeff_sweedler_mismatch.json"),
            "i": 0,
        },
    )
    body = resp.json()
    assert not body["yd"]
    assert body["yd_first_mismatch"] is not None


def test_build_verify_homology_chain():
    build_req = {
        "hopf": load("hopf_trivial.json"),
        "coeff": load("coeff_trivial.json"),
        "object": load("obj_trivial_ground_field.json"),
        "theory": "contra-alg",
        "degree": 4,
    }
    resp = client.post("/api/build", json=build_req)
    assert resp.status_code == 200
    tower = resp.json()["object"]
    assert tower["variance"] == "cocyclic"
    assert tower["dims"] == [1, 1, 1, 1, 1]

    resp = client.post("/api/verify-relations", json={"object": tower})
    assert resp.status_code == 200
    assert resp.json()["passed"] is True

    resp = client.post("/api/homology", json={"object": tower})
    assert resp.status_code == 200
    body = resp.json()
    assert body["hochschild"] == [1, 0, 0, 0]
    assert body["cyclic"][:4] == [1, 0, 1, 0]
    assert body["max_valid_degree"] == 3


def test_build_rejects_unstable_without_flag():
    req = {
        "hopf": load("hopf_z3.json"),
        "coeff": load("coeff_z3_crossed_unstable.json"),
        "object": load("obj_z3_permutation_algebra.json"),
        "theory": "contra-alg",
        "degree": 2,
    }
    resp = client.post("/api/build", json=req)
    assert resp.status_code == 400
    assert resp.json()["code"] == "coefficient-mismatch"

    req["allow_paracyclic"] = True
    resp = client.post("/api/build", json=req)
    assert resp.status_code == 200
    tower = resp.json()["object"]
    report = client.post("/api/verify-relations", json={"object": tower}).json()
    assert not report["passed"]
    assert {v["relation"] for v in report["violations"]} == {"tau-power"}


def test_tampered_tower_is_flagged():
    resp = client.post(
        "/api/verify-relations", json={"object": load("tower_tampered.json")}
    )
    assert resp.status_code == 200
    body = resp.json()
    assert body["passed"] is False
    assert body["violations"]


def test_builders_agree_over_the_wire():
    base = {
        "hopf": load("hopf_sweedler.json"),
        "coeff": load("coeff_sweedler_sigma.json"),
        "object": load("obj_sweedler_skew_lines.json"),
        "theory": "cov-alg",
        "degree": 2,
    }
    direct = client.post("/api/build", json=base).json()["object"]
    generic = client.post("/api/build", json={**base, "builder": "generic"}).json()["object"]
    assert direct["faces"] == generic["faces"]
    assert direct["degens"] == generic["degens"]
    assert direct["cyclic_ops"] == generic["cyclic_ops"]


def test_validation_and_error_codes():
    resp = client.post("/api/verify-hopf", json={"hopf": {"dim": 1}})
    assert resp.status_code == 422  # pydantic schema validation
    bad = load("hopf_trivial.json")
    bad["mult"] = [["1", "1"]]
    resp = client.post("/api/verify-hopf", json={"hopf": bad})
    assert resp.status_code == 400
    assert resp.json()["code"] == "parse-error"
