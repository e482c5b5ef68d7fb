"""HTTP service endpoints: frozen responses, validation, and error mapping."""

from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from tsc.service import app

client = TestClient(app)


def test_normalize_endpoint():
    r = client.post("/normalize", json={"formula": "<0^1><1^1>T"})
    assert r.status_code == 200
    assert r.json() == {"normal_form": "<0^(w*2)>T & <1^1>T", "point": "[w*2, 1]"}


def test_normalize_top():
    r = client.post("/normalize", json={"formula": "T"})
    assert r.status_code == 200
    assert r.json() == {"normal_form": "T", "point": "[]"}


def test_decide_endpoint_derivable():
    r = client.post("/decide", json={"sequent": "<1^1>T |- <0^w>T"})
    assert r.status_code == 200
    assert r.json() == {"derivable": True, "countermodel": None}


def test_decide_endpoint_not_derivable():
    r = client.post("/decide", json={"sequent": "<0^w>T |- <1^1>T"})
    assert r.status_code == 200
    assert r.json() == {"derivable": False, "countermodel": "[w]"}


def test_check_endpoint():
    r = client.post("/check", json={"point": "[w*2, 1]", "formula": "<0^(w*2)>T & <1^1>T"})
    assert r.status_code == 200
    assert r.json() == {"holds": True}

    r = client.post("/check", json={"point": "[w]", "formula": "<1^1>T"})
    assert r.json() == {"holds": False}


def test_frame_dot_endpoint():
    r = client.post(
        "/frame-dot",
        json={"max_coordinate": "w + 1", "support": 1, "bases": [0]},
    )
    assert r.status_code == 200
    dot = r.json()["dot"]
    assert dot.startswith("digraph frame {")
    assert dot.rstrip().endswith("}")
    assert '[label="[w]"]' in dot
    assert "style=dashed" in dot


def test_frame_dot_defaults_apply():
    r = client.post("/frame-dot", json={"max_coordinate": "2"})
    assert r.status_code == 200
    assert "digraph frame {" in r.json()["dot"]


@pytest.mark.parametrize(
    ("path", "body"),
    [
        ("/normalize", {"formula": "<0^1"}),
        ("/decide", {"sequent": "<0^w>T |-"}),
        ("/check", {"point": "[w", "formula": "T"}),
        ("/frame-dot", {"max_coordinate": "bogus"}),
    ],
)
def test_parse_errors_are_422_with_position(path, body):
    r = client.post(path, json=body)
    assert r.status_code == 422
    detail = r.json()["detail"]
    assert isinstance(detail["position"], int)
    assert "(at position" in detail["message"]


def test_missing_field_is_422():
    r = client.post("/normalize", json={})
    assert r.status_code == 422


def test_invalid_point_rejected():
    # [1, 1] breaks the logarithm chain: coordinate 1 exceeds ell(1) = 0
    r = client.post("/check", json={"point": "[1, 1]", "formula": "T"})
    assert r.status_code == 422
    detail = r.json()["detail"]
    assert detail["coordinate"] == 0
    assert "exceeds" in detail["message"]
