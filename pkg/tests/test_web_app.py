"""Tests for the JSON API."""

import pytest

from web_app.app import app


@pytest.fixture
def client():
    app.config["TESTING"] = True
    with app.test_client() as client:
        yield client


def test_status(client):
    response = client.get("/api/status")
    assert response.status_code == 200
    body = response.get_json()
    assert body["success"] is True
    assert body["commands"] == ["correlator", "diagrams", "verify", "virasoro"]


def test_diagrams(client):
    response = client.post("/api/diagrams", json={"n": 4})
    assert response.status_code == 200
    body = response.get_json()
    assert body["success"] is True
    assert body["report"]["diagram_count"] == 60


def test_correlator_with_inline_input(client, virasoro_input):
    response = client.post("/api/correlator", json={
        "input": virasoro_input(2), "points": {"z1": "1", "z2": 0}, "r": "2",
    })
    assert response.status_code == 200
    assert response.get_json()["report"]["value"] == "1"


def test_pole_answers_422(client):
    response = client.post("/api/virasoro", json={"n": 2, "points": "z1=0,z2=0"})
    assert response.status_code == 422
    body = response.get_json()
    assert body["exit_code"] == 3
    assert body["report"]["status"] == "ERROR"


def test_bad_input_answers_400(client):
    assert client.post("/api/correlator", json={"input": {"dim": 1}}).status_code == 400
    assert client.post("/api/correlator", json={"input": [1, 2]}).status_code == 400
    assert client.post("/api/correlator", json=[1, 2]).status_code == 400
    assert client.post("/api/diagrams", json={"n": "four"}).status_code == 400


def test_failed_verification_answers_200(client, virasoro_input):
    response = client.post("/api/verify", json={"input": virasoro_input(2), "corrupt": True, "bound": 4})
    assert response.status_code == 200
    body = response.get_json()
    assert body["success"] is False
    assert body["exit_code"] == 1
    assert body["report"]["first_failure"]["check"] == "theorem1_oracle"
