"""HTTP layer: endpoints, error codes, document round-trips."""

import pytest
from fastapi.testclient import TestClient

from nilprim.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json() == {"status": "ok"}


def test_count(client):
    r = client.post("/count", json={"n": 2, "q": 7})
    assert r.status_code == 200
    assert r.json()["counts"] == {"abelian": 4, "nonabelian": 8}


def test_count_rejects_even_q(client):
    r = client.post("/count", json={"n": 2, "q": 4})
    assert r.status_code == 400
    assert r.json()["detail"]["code"] == "invalid_parameters"


def test_count_rejects_non_prime_power(client):
    r = client.post("/count", json={"n": 2, "q": 15})
    assert r.status_code == 400
    assert r.json()["detail"]["code"] == "invalid_parameters"


def test_enumerate(client):
    r = client.post("/enumerate", json={"n": 2, "q": 3})
    assert r.status_code == 200
    doc = r.json()
    assert doc["schema"] == 1
    assert doc["counts"] == {"abelian": 1, "nonabelian": 2}
    orders = sorted(rec["order"] for rec in doc["classes"])
    assert orders == [8, 8, 16]
    for rec in doc["classes"]:
        assert rec["generators"]
        assert "oracle" not in rec


def test_enumerate_certified(client):
    r = client.post("/enumerate", json={"n": 2, "q": 3, "certify": True})
    assert r.status_code == 200
    for rec in r.json()["classes"]:
        assert rec["oracle"]["passed"] is True


def test_construct_and_verify_roundtrip(client):
    r = client.post("/construct", json={"n": 2, "q": 3, "kind": "sd"})
    assert r.status_code == 200
    doc = r.json()
    assert doc["order"] == 16
    assert doc["isotype"]["sylow2_kind"] == "semidihedral"
    v = client.post("/verify", json={"group": doc})
    assert v.status_code == 200
    assert v.json()["passed"] is True


def test_construct_inadmissible(client):
    r = client.post("/construct", json={"n": 2, "q": 3, "kind": "dh", "s": 3})
    assert r.status_code == 400
    assert r.json()["detail"]["code"] == "inadmissible"
    r = client.post("/construct", json={"n": 3, "q": 3, "kind": "q8"})
    assert r.status_code == 400
    assert r.json()["detail"]["code"] == "inadmissible"


def test_construct_unknown_kind(client):
    r = client.post("/construct", json={"n": 2, "q": 3, "kind": "octahedral"})
    assert r.status_code == 400
    assert r.json()["detail"]["code"] == "invalid_parameters"


def test_construct_degree6(client):
    r = client.post("/construct", json={"n": 6, "q": 3, "kind": "q8",
                                        "c_order": 13})
    assert r.status_code == 200
    assert r.json()["order"] == 104


def test_verify_flags_imprimitive(client):
    doc = {"schema": 1, "n": 2, "q": 3, "field": "3^1/0,1",
           "generators": ["0,1;2,0", "1,0;0,2"]}  # monomial D8
    r = client.post("/verify", json={"group": doc})
    assert r.status_code == 200
    body = r.json()
    assert body["passed"] is False
    checks = {c["check"]: c["verdict"] for c in body["checks"]}
    assert checks["decision_procedure"] == "imprimitive"


def test_verify_parse_error(client):
    doc = {"schema": 1, "n": 2, "q": 3, "field": "3^1/0,1",
           "generators": ["0,1;2"]}
    r = client.post("/verify", json={"group": doc})
    assert r.status_code == 400
    assert r.json()["detail"]["code"] == "parse_error"


def test_oracle_endpoints(client):
    doc = client.post("/construct", json={"n": 2, "q": 3, "kind": "q8"}).json()
    r = client.post("/oracle", json={"check": "irreducible", "group": doc})
    assert r.json()["verdict"] is True
    r = client.post("/oracle", json={"check": "centralizer_dimension",
                                     "group": doc})
    assert r.json()["verdict"] == 1
    r = client.post("/oracle", json={"check": "block_systems", "group": doc})
    assert r.json()["verdict"] is False
    r = client.post("/oracle", json={"check": "conjugate", "group": doc,
                                     "other": doc})
    assert r.json()["verdict"] is True
    assert "witness" in r.json()


def test_oracle_conjugate_needs_other(client):
    doc = client.post("/construct", json={"n": 2, "q": 3, "kind": "q8"}).json()
    r = client.post("/oracle", json={"check": "conjugate", "group": doc})
    assert r.status_code == 400
    assert r.json()["detail"]["code"] == "invalid_parameters"
