from fastapi.testclient import TestClient

from algebra import ringfile
from main import app

client = TestClient(app)


def test_health_check():
    response = client.get("/api/health")
    assert response.status_code == 200
    assert response.json() == {"status": "healthy"}


def test_validate_endpoint(named):
    response = client.post("/api/validate", json={"text": ringfile.dumps([named["F4_0/sym3"]])})
    assert response.status_code == 200
    [summary] = response.json()
    assert summary["name"] == "F4_0/sym3"
    assert "bad-prime-2" in summary["tags"]


def test_validate_rejects_malformed_text():
    response = client.post("/api/validate", json={"text": "ring X\nadd 2\nmul 1 -> 1\n"})
    assert response.status_code == 400
    assert "line 3" in response.json()["detail"]


def test_check_endpoint(named):
    text = ringfile.dumps([named["F3xF3/swap"]])
    response = client.post("/api/check", json={"text": text, "theorems": ["RAD_1_4"]})
    assert response.status_code == 200
    body = response.json()
    assert body["counterexamples"] == 0
    assert body["reports"][0]["verdict"] == "verified"


def test_check_endpoint_rejects_bad_theorem(named):
    text = ringfile.dumps([named["F3xF3/swap"]])
    response = client.post("/api/check", json={"text": text, "theorems": ["NOPE"]})
    assert response.status_code == 400


def test_profile_endpoint():
    response = client.post("/api/profile", json={"named": True, "instance": "F3xF3/swap"})
    assert response.status_code == 200
    [profile] = response.json()
    assert profile["udim"]["ring_left"] == 2
    assert profile["udim"]["fixed_left"] == 1
    assert profile["averaging"] is not None
    response = client.post("/api/profile", json={"named": True, "instance": "missing"})
    assert response.status_code == 404
