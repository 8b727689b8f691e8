import json

import numpy as np
import pytest

from mcdm import load_problem
from mcdm.errors import ParseError, ValidationError, WeightSumError
from mcdm.loaders import FIXTURES, fixture_path, parse_number, parse_problem_dict, problem_to_dict

from conftest import SAMPLE

CSV = """alternative,C1,C2,C3
direction,max,max,min
weight,0.25,0.33,0.42
A1,0.93,600,8.25
A2,0.51,700,6.33
A3,0.77,500,3.16
A4,0.82,400,2.98
"""


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_csv_matches_fixture(tmp_path, table81):
    pf = load_problem(write(tmp_path, "t.csv", CSV))
    assert pf.problem == table81
    assert load_problem("table8_1").problem == table81


@pytest.mark.parametrize("name", FIXTURES)
def test_every_fixture_loads(name):
    pf = load_problem(name)
    assert pf.problem is not None or pf.anp is not None


def test_json_fixture_carries_ahp_section():
    pf = load_problem("ahp_8_4")
    assert pf.ahp.criteria_matrix.entries[0, 2] == 5
    assert pf.ahp.alternative_matrices is None
    np.testing.assert_array_equal(pf.problem.values, SAMPLE)


def test_fraction_strings():
    assert parse_number("1/3") == pytest.approx(1 / 3)
    assert parse_number(" 2 ") == 2.0
    for bad in ("x", "1/0", True, None):
        with pytest.raises(ParseError):
            parse_number(bad)


def test_non_numeric_cell_names_its_position(tmp_path):
    text = CSV.replace("0.51", "abc")
    with pytest.raises(ParseError) as exc:
        load_problem(write(tmp_path, "t.csv", text))
    msg = str(exc.value)
    assert "line 5" in msg and "A2" in msg and "C1" in msg


def test_bad_direction(tmp_path):
    with pytest.raises(ParseError) as exc:
        load_problem(write(tmp_path, "t.csv", CSV.replace("max,max,min", "max,up,min")))
    assert "C2" in str(exc.value)


def test_ragged_row(tmp_path):
    with pytest.raises(ParseError):
        load_problem(write(tmp_path, "t.csv", CSV.replace("A3,0.77,500,3.16", "A3,0.77,500")))


def test_weights_checked_after_parsing(tmp_path):
    text = CSV.replace("0.42", "0.41")
    with pytest.raises(WeightSumError):
        load_problem(write(tmp_path, "t.csv", text))
    pf = load_problem(write(tmp_path, "t.csv", text), renormalize=True)
    assert pf.problem.weights.sum() == pytest.approx(1.0)


def test_missing_file():
    with pytest.raises(ParseError):
        load_problem("/nonexistent/problem.csv")


def test_malformed_json(tmp_path):
    with pytest.raises(ParseError) as exc:
        load_problem(write(tmp_path, "t.json", '{"alternatives": ['))
    assert "line 1" in str(exc.value)


def test_json_missing_field(tmp_path):
    with pytest.raises(ParseError):
        load_problem(write(tmp_path, "t.json", '{"alternatives": ["A"], "values": [[1]]}'))


def test_format_sniffing(tmp_path):
    assert load_problem(write(tmp_path, "t.txt", CSV)).problem.m == 4
    data = json.dumps(problem_to_dict(load_problem("table8_1").problem))
    assert load_problem(write(tmp_path, "t.dat", data)).problem.m == 4


def test_echo_roundtrip(table81):
    d = problem_to_dict(table81)
    assert parse_problem_dict(json.loads(json.dumps(d))) == table81


def test_explicit_alternative_matrices(tmp_path):
    data = {
        "alternatives": ["A", "B"],
        "criteria": [{"label": "X", "direction": "max", "weight": 0.5},
                     {"label": "Y", "direction": "min", "weight": 0.5}],
        "values": [[1, 2], [2, 1]],
        "ahp": {"criteria_matrix": [["X", "Y", 2]],
                "alternative_matrices": {"X": [["A", "B", "1/3"]], "Y": [["A", "B", 4]]}},
    }
    pf = load_problem(write(tmp_path, "t.json", json.dumps(data)))
    assert pf.ahp.alternative_matrices[0].entries[0, 1] == pytest.approx(1 / 3)
    del data["ahp"]["alternative_matrices"]["Y"]
    with pytest.raises(ParseError):
        load_problem(write(tmp_path, "t.json", json.dumps(data)))


def test_anp_section_errors_name_the_block(tmp_path):
    data = json.loads(fixture_path("anp_8_5").read_text())
    data["anp"]["influence_blocks"]["C1"][1]["comparisons"] = [["A1", "A2", 12]]
    with pytest.raises(ValidationError) as exc:
        load_problem(write(tmp_path, "t.json", json.dumps(data)))
    assert "C1" in str(exc.value)


def test_anp_block_nodes_inferred(tmp_path, anp_file):
    data = json.loads(fixture_path("anp_8_5").read_text())
    for blocks in data["anp"]["influence_blocks"].values():
        for b in blocks:
            del b["nodes"]
    pf = load_problem(write(tmp_path, "t.json", json.dumps(data)))
    from mcdm import build_supermatrix

    np.testing.assert_array_equal(build_supermatrix(pf.anp.network).matrix,
                                  build_supermatrix(anp_file.anp.network).matrix)
