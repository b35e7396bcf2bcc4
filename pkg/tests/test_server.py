import pytest
from fastapi.testclient import TestClient

from eqbreaks.cli import read_csv_records
from eqbreaks.geo import parse_geojson
from eqbreaks.oracle import brute_force_min
from eqbreaks.series import SortedSeries
from eqbreaks.server import build_state, create_app


@pytest.fixture
def toy_client(toy_csv, toy_geojson):
    records = read_csv_records(toy_csv)
    geoms, _ = parse_geojson(open(toy_geojson, "rb").read())
    state = build_state(records, geoms)
    return TestClient(create_app(state))


@pytest.fixture
def uniform_client(uniform8_csv, uniform8_geojson):
    records = read_csv_records(uniform8_csv)
    geoms, _ = parse_geojson(open(uniform8_geojson, "rb").read())
    state = build_state(records, geoms)
    return TestClient(create_app(state))


def test_meta(toy_client):
    r = toy_client.get("/api/meta")
    assert r.status_code == 200
    body = r.json()
    assert body["regions"] == 6
    assert len(body["methods"]) == 8
    assert body["k_default"] == 5
    assert body["value_stats"]["min"] == 3.5
    assert body["value_stats"]["max"] == 48.0


def test_meta_stable(toy_client):
    assert toy_client.get("/api/meta").content == \
        toy_client.get("/api/meta").content


def test_geometry_within_viewport(toy_client):
    r = toy_client.get("/api/geometry", params={"projection": "winkel3"})
    assert r.status_code == 200
    body = r.json()
    assert len(body["regions"]) == 6
    for region in body["regions"]:
        for ring in region["rings"]:
            for x, y in ring:
                assert 0 <= x <= 960
                assert 0 <= y <= 500


def test_geometry_unknown_projection_400(toy_client):
    r = toy_client.get("/api/geometry", params={"projection": "peters"})
    assert r.status_code == 400
    assert "error" in r.json()


def test_geometry_region_count_matches_meta(toy_client):
    meta = toy_client.get("/api/meta").json()
    geo = toy_client.get("/api/geometry").json()
    assert len(geo["regions"]) == meta["regions"]


def test_classify_w1_equal_lengths(uniform_client):
    r = uniform_client.get("/api/classify", params={
        "method": "dp-weighted", "w": "1", "k": "4"})
    assert r.status_code == 200
    body = r.json()
    counts = [c["count"] for c in body["classes"]]
    assert counts == [2, 2, 2, 2]
    assert len(body["assignments"]) == 8


def test_classify_w0_matches_squared_optimum(uniform_client, uniform8_csv,
                                             uniform8_geojson):
    records = read_csv_records(uniform8_csv)
    geoms, _ = parse_geojson(open(uniform8_geojson, "rb").read())
    state = build_state(records, geoms)
    r = uniform_client.get("/api/classify", params={
        "method": "dp-weighted", "w": "0", "k": "3"})
    body = r.json()
    # rebuild the series the server classified and cross-check the oracle
    ordered = sorted(records, key=lambda rec: (rec.value, rec.id))
    weights = [state.areas["winkel3"][rec.id] for rec in ordered]
    series = SortedSeries.build([rec.value for rec in ordered], weights)
    _, best = brute_force_min(series, 3, "weighted", w=0.0)
    assert body["weighted_objective"] == pytest.approx(best, rel=1e-9)


def test_classify_invalid_params_400(toy_client):
    assert toy_client.get("/api/classify", params={"k": "0"}).status_code == 400
    assert toy_client.get("/api/classify", params={"k": "10"}).status_code == 400
    assert toy_client.get("/api/classify", params={"w": "2"}).status_code == 400
    assert toy_client.get("/api/classify",
                          params={"method": "nope"}).status_code == 400
    body = toy_client.get("/api/classify", params={"k": "0"}).json()
    assert body["params"]["k"] == "0"


def test_classify_deterministic_bytes(toy_client):
    q = {"method": "dp", "k": "4"}
    assert toy_client.get("/api/classify", params=q).content == \
        toy_client.get("/api/classify", params=q).content


def test_classify_same_shape_as_cmd_breaks(toy_client):
    body = toy_client.get("/api/classify", params={"method": "dp", "k": "3"}).json()
    for key in ("method", "k", "break_indices", "thresholds", "error_abs",
                "classes", "assignments"):
        assert key in body
