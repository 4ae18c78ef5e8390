import json
import os
from importlib import resources

import jsonschema
import pytest

from spechtkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def schema(name):
    text = resources.files("spechtkit.schemas").joinpath(name).read_text()
    return json.loads(text)


def test_version(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == 0


def test_specht_matrix_text_and_csv(capsys):
    code, out, _ = run(capsys, "specht-matrix", "--lambda", "2")
    assert code == 0
    assert out.splitlines()[0] == "# columns: 12 21"
    assert "11:  1 -1" in out
    code, out, _ = run(capsys, "specht-matrix", "--lambda", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0].strip() == ",12,21"


def test_specht_matrix_json_validates(capsys):
    code, out, _ = run(capsys, "specht-matrix", "--lambda", "2,2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, schema("matrix.schema.json"))
    assert data["partition"] == [2, 2]
    assert data["row_labels"][0] == "1122"


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--w1", "TENNESSEE", "--w2", "SASSAFRAS")
    assert code == 0
    assert "partition 4,2,2,1" in out
    assert "complementary: False" in out
    code, out, _ = run(
        capsys, "classify", "--w1", "112", "--w2", "123", "--format", "json"
    )
    assert code == 0
    assert json.loads(out) == {"rearrangeable": False}


def test_matroid_tutte_and_charpoly(capsys):
    code, out, _ = run(capsys, "matroid", "tutte", "--lambda", "2,1,1,1")
    assert code == 0
    assert out.strip() == "x^4 + x^3 + x^2 + x + y"
    code, out, _ = run(capsys, "matroid", "charpoly", "--lambda", "2,1,1,1")
    assert code == 0
    assert out.strip() == "t^4 - 5*t^3 + 10*t^2 - 10*t + 4"


def test_matroid_from_matrix_file(capsys, x_matrix_file):
    code, out, _ = run(capsys, "matroid", "charpoly", "--matrix", x_matrix_file)
    assert code == 0
    assert out.strip() == "t^3 - 6*t^2 + 12*t - 7"
    code, out, _ = run(
        capsys, "matroid", "tutte", "--matrix", x_matrix_file, "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, schema("polynomial.schema.json"))
    assert data["x^3"] == 1


def test_matroid_bases_and_circuits(capsys):
    code, out, _ = run(capsys, "matroid", "bases", "--lambda", "2,2")
    assert code == 0
    assert out.strip() == "12"
    code, out, _ = run(
        capsys, "matroid", "circuits", "--lambda", "2,2", "--max-size", "2", "--format", "json"
    )
    assert code == 0
    assert json.loads(out) == [
        ["1122", "2211"],
        ["1212", "2121"],
        ["1221", "2112"],
    ]


def test_chow_dims_and_presentation(capsys, x_matrix_file):
    code, out, _ = run(capsys, "chow", "dims", "--matrix", x_matrix_file)
    assert code == 0
    assert out.strip() == "1+11T+T^2"
    code, out, _ = run(
        capsys, "chow", "presentation", "--lambda", "2,2", "--format", "macaulay2-text"
    )
    assert code == 0
    assert out.splitlines()[0].startswith("R = QQ[")
    assert out.splitlines()[2] == "A = R/I;"


def test_polytope_fvector_and_dim(capsys):
    code, out, _ = run(capsys, "polytope", "fvector", "--lambda", "2,1,1")
    assert code == 0
    assert out.strip() == "(1, 4, 6, 4, 1)"
    code, out, _ = run(capsys, "polytope", "dim", "--lambda", "2,2", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"dim": 2}


def test_polytope_root_check(capsys):
    code, out, _ = run(capsys, "polytope", "root-check", "--k", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, schema("report.schema.json"))
    assert data["vertices"] == 12
    assert data["matches_pair_matrix_columns"] is True


def test_coeff_fast_path_and_matrix_emission(capsys, tmp_path):
    code, out, _ = run(
        capsys, "coeff", "lr", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1"
    )
    assert code == 0
    assert out.strip() == "2"
    target = str(tmp_path / "mat.json")
    code, out, _ = run(
        capsys,
        "coeff",
        "kronecker",
        "--lambda",
        "2",
        "--mu",
        "2",
        "--nu",
        "2",
        "--emit-matrix",
        target,
        "--format",
        "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["coefficient"] == 1
    assert payload["shape"] == [1, 8]
    with open(target, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    jsonschema.validate(data, schema("coefficient-matrix.schema.json"))


def test_check_commands(capsys):
    code, out, _ = run(capsys, "check", "conjecture1", "--n", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, schema("report.schema.json"))
    assert data["passed"] is True
    code, out, _ = run(capsys, "check", "conjecture2", "--n", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, schema("report.schema.json"))
    assert data["chow_dims"] == [1, 7, 1]
    code, out, _ = run(
        capsys, "check", "orbits", "--n", "5", "--k", "1", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, schema("report.schema.json"))
    assert data["match"] is True


def test_usage_errors_exit_2(capsys):
    code, _, err = run(capsys, "specht-matrix", "--lambda", "0")
    assert code == 2
    assert err.startswith("error: usage:")
    code, _, err = run(capsys, "matroid", "flats")
    assert code == 2
    code, _, err = run(capsys, "matroid", "charpoly", "--matrix", "/no/such/file.json")
    assert code == 2
    assert err.startswith("error: io:")


def test_resource_errors_exit_3(capsys):
    code, _, err = run(
        capsys,
        "coeff",
        "kronecker",
        "--lambda",
        "3,2,1",
        "--mu",
        "3,2,1",
        "--nu",
        "3,2,1",
    )
    assert code == 3
    assert err.startswith("error: resource:")


def test_limit_flag_overrides(capsys):
    # use a shape no other test builds: the in-process matrix cache is
    # consulted before the guard
    code, _, err = run(
        capsys,
        "specht-matrix",
        "--lambda",
        "4,3",
        "--max-matrix-cells",
        "2",
    )
    assert code == 3
    code, _, err = run(capsys, "specht-matrix", "--lambda", "2,1", "--max-matrix-cells", "-1")
    assert code == 2


def test_limit_env_overrides(capsys, monkeypatch):
    monkeypatch.setenv("SPECHTKIT_MAX_MATRIX_CELLS", "2")
    code, _, err = run(capsys, "specht-matrix", "--lambda", "4,3")
    assert code == 3
    assert err.startswith("error: resource:")


def test_cache_dir_round_trip(capsys, tmp_path):
    cache = str(tmp_path / "cache")
    code, first, _ = run(
        capsys, "specht-matrix", "--lambda", "2,2", "--cache-dir", cache
    )
    assert code == 0
    assert os.listdir(cache)
    code, second, _ = run(
        capsys, "specht-matrix", "--lambda", "2,2", "--cache-dir", cache
    )
    assert code == 0
    assert second == first
