import json

import numpy as np
import pytest

from geam import (EquiangularMeasurement, GeamError, ParseError,
                  SymmetricMeasurementSet, evaluate_report)
from geam.catalog import entries
from geam.serialize import (dumps, load_measurement, load_state,
                            measurement_from_obj, measurement_to_obj,
                            report_to_obj, save_measurement)


def test_round_trip_all_catalog(tmp_path):
    for entry in entries().values():
        path = tmp_path / f"{entry.id}.json"
        save_measurement(entry.measurement, path)
        text1 = path.read_text()
        m = load_measurement(path)
        assert type(m) is type(entry.measurement)
        text2 = dumps(measurement_to_obj(m))
        assert text1 == text2  # export -> import -> export is a fixed point


def test_round_trip_entrywise(tmp_path, conical):
    path = tmp_path / "c.json"
    save_measurement(conical, path)
    m = load_measurement(path)
    for g1, g2 in zip(conical.groups, m.groups):
        for a, b in zip(g1, g2):
            assert np.max(np.abs(a - b)) == 0.0


def test_gamma_presence_drives_type(mub_design):
    obj = measurement_to_obj(mub_design)
    assert all("gamma" in g for g in obj["groups"])
    m = measurement_from_obj(obj)
    assert isinstance(m, EquiangularMeasurement)

    # stripping gammas reinterprets groups as POVMs; scaled-down groups no
    # longer sum to the identity, so parsing must fail
    for g in obj["groups"]:
        del g["gamma"]
    with pytest.raises(GeamError):
        measurement_from_obj(obj)

    # rescaling each group by 1/gamma makes them genuine POVMs again
    for g in obj["groups"]:
        g["operators"] = [[[[3.0 * re, 3.0 * im] for re, im in row]
                           for row in op] for op in g["operators"]]
    m = measurement_from_obj(obj)
    assert isinstance(m, SymmetricMeasurementSet)


def test_symmetric_file_round_trip(mum_d2):
    obj = measurement_to_obj(mum_d2)
    assert all("gamma" not in g for g in obj["groups"])
    m = measurement_from_obj(obj)
    assert isinstance(m, SymmetricMeasurementSet)


def test_mixed_gamma_flags_rejected(mub_design):
    obj = measurement_to_obj(mub_design)
    del obj["groups"][0]["gamma"]
    with pytest.raises(ParseError):
        measurement_from_obj(obj)


def test_declared_gamma_mismatch(mub_design):
    obj = measurement_to_obj(mub_design)
    obj["groups"][0]["gamma"] = 0.9
    with pytest.raises(ParseError):
        measurement_from_obj(obj)


def test_malformed_measurement_objects():
    with pytest.raises(ParseError):
        measurement_from_obj([1, 2, 3])
    with pytest.raises(ParseError):
        measurement_from_obj({"dimension": 2})
    with pytest.raises(ParseError):
        measurement_from_obj({"dimension": 2, "groups": []})
    with pytest.raises(ParseError):
        measurement_from_obj({"dimension": 2,
                              "groups": [{"operators": [[[1, 0]]]}]})


def test_load_state_bloch_and_matrix(tmp_path):
    p1 = tmp_path / "s1.json"
    p1.write_text(json.dumps({"bloch": [0.0, 0.0, 1.0]}))
    rho = load_state(p1)
    assert np.allclose(rho, np.diag([1.0, 0.0]))

    p2 = tmp_path / "s2.json"
    p2.write_text(json.dumps({"matrix": [[[0.5, 0.0], [0.0, 0.0]],
                                         [[0.0, 0.0], [0.5, 0.0]]]}))
    assert np.allclose(load_state(p2), np.eye(2) / 2)

    p3 = tmp_path / "s3.json"
    p3.write_text(json.dumps({"bloch": [1, 0, 0], "matrix": []}))
    with pytest.raises(ParseError):
        load_state(p3)

    p4 = tmp_path / "s4.json"
    p4.write_text(json.dumps({"matrix": [[[1.0, 0.0], [0.0, 0.0]],
                                         [[0.0, 0.0], [0.5, 0.0]]]}))
    with pytest.raises(GeamError):
        load_state(p4)  # trace 1.5


def test_invalid_json_file(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    with pytest.raises(ParseError):
        load_measurement(p)


def test_report_serialization(conical):
    rho = np.diag([1.0, 0.0]).astype(complex)
    report = evaluate_report(conical, rho, [0.8, 1.0])
    obj = report_to_obj(report)
    text = dumps(obj)  # must be valid JSON without NaN
    parsed = json.loads(text)
    assert parsed["dimension"] == 2
    assert parsed["state"]["bloch"] == [0.0, 0.0, 1.0]
    names = {b["name"] for b in parsed["bounds"]}
    assert {"avg_tsallis", "conical_max_prob"} <= names
    assert dumps(report_to_obj(evaluate_report(conical, rho, [0.8, 1.0]))) == text
