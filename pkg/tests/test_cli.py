import json

import pytest

from spacetime_lattice.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def e_json(tmp_path, capsys):
    code, out, _ = run(capsys, "witness", "--name", "E", "--dim", "2")
    assert code == 0
    path = tmp_path / "e.json"
    path.write_text(out)
    return path


def test_classify_witness(capsys, e_json):
    code, out, _ = run(capsys, "classify", "--in", str(e_json))
    assert code == 0
    obj = json.loads(out)
    assert obj["eucl_sim"] == {"member": True, "a": "1"}
    assert obj["poi_sim"] == {"member": False}
    assert obj["respects"]["S"] is False and obj["respects"]["cong"] is True


def test_classify_identity(capsys, tmp_path):
    path = tmp_path / "id.json"
    path.write_text(json.dumps({"d": 3, "linear": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
                                "translation": ["1/2", "0", "-3"]}))
    code, out, _ = run(capsys, "classify", "--in", str(path))
    obj = json.loads(out)
    assert code == 0
    assert all(obj[g]["member"] for g in ("eucl_sim", "poi_sim", "gal_sim", "triv_gal_sim", "triv_eucl_sim"))
    assert all(obj["respects"].values()) and len(obj["respects"]) == 8


def test_classify_quadratic_field(capsys, tmp_path):
    path = tmp_path / "flip.json"
    path.write_text(json.dumps({"d": 2, "linear": [["1", "1"], ["1", "-1"]]}))
    _, out, _ = run(capsys, "classify", "--in", str(path))
    assert json.loads(out)["decomposition"]["eucl_sim"] == "not_representable"
    _, out, _ = run(capsys, "classify", "--in", str(path), "--field", "quadext:2")
    assert json.loads(out)["decomposition"]["eucl_sim"]["scale"] == "0+1√2"


@pytest.mark.parametrize("payload,code", [
    ({"d": 2, "linear": [["1", "1"], ["1", "1"]]}, 3),
    ({"d": 3, "linear": [["1", "0"], ["0", "1"]]}, 3),
    ({"d": 2, "linear": [["x", "0"], ["0", "1"]]}, 3),
])
def test_classify_bad_input(capsys, tmp_path, payload, code):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(payload))
    assert run(capsys, "classify", "--in", str(path))[0] == code


def test_classify_parse_error(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert run(capsys, "classify", "--in", str(path))[0] == 2
    assert run(capsys, "classify", "--in", str(tmp_path / "missing.json"))[0] == 2


def test_usage_errors(capsys):
    for argv in (["table", "--dim", "1"], ["table", "--dim", "2", "--trials", "0"],
                 ["witness", "--name", "Q", "--dim", "2"], ["hasse", "--dim", "3"],
                 ["classify", "--in", "x", "--field", "quadext:4"], []):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
    capsys.readouterr()
    code, _, _ = run(capsys, "leiras2", "--geometry", "Hyper", "--relation", "S", "--dim", "2")
    assert code == 2


def test_leiras2_inadmissible(capsys):
    code, _, err = run(capsys, "leiras2", "--geometry", "Eucl", "--relation", "cong",
                       "--dim", "3", "--trials", "10", "--seed", "7")
    assert code == 4 and "inadmissible" in err


def test_leiras2_exceptional(capsys):
    code, out, _ = run(capsys, "leiras2", "--geometry", "Rel", "--relation", "cong",
                       "--dim", "2", "--trials", "60", "--seed", "7")
    obj = json.loads(out)
    assert code == 0 and obj["verdict"] == "equiv_exceptional_triple" == obj["expected"]
    assert obj["seed"] == 7


def test_table_outputs(capsys, tmp_path):
    paths = {k: tmp_path / f"t.{k}" for k in ("json", "csv", "png")}
    code, out, _ = run(capsys, "table", "--dim", "3", "--trials", "60", "--seed", "7",
                       "--json", str(paths["json"]), "--csv", str(paths["csv"]),
                       "--figure", str(paths["png"]))
    assert code == 0
    lam = next(line for line in out.splitlines() if line.strip().startswith("λ"))
    assert [c.strip() for c in lam.split("|")][2] == "∈"
    report = json.loads(paths["json"].read_text())
    assert report["seed"] == 7 and len(report["dimensions"][0]["table"]) == 40
    assert len(paths["csv"].read_text().splitlines()) == 41
    assert paths["png"].read_bytes()[:4] == b"\x89PNG"


def test_hasse_outputs(capsys, tmp_path):
    dot, png = tmp_path / "h.dot", tmp_path / "h.png"
    code, _, _ = run(capsys, "hasse", "--dim", "3", "--trials", "60", "--seed", "7",
                     "--out", str(dot), "--figure", str(png))
    text = dot.read_text()
    assert code == 0 and text.count("->") == 7 and "Rel=Mink" in text and "seed=7" in text
    assert png.exists()


def test_same_seed_same_bytes(capsys, tmp_path):
    outs = []
    for i in range(2):
        path = tmp_path / f"r{i}.json"
        _, out, _ = run(capsys, "table", "--dim", "2", "--trials", "40", "--seed", "3", "--json", str(path))
        outs.append((out, path.read_bytes()))
    assert outs[0] == outs[1]


def test_witness_in_extension_field(capsys):
    code, out, _ = run(capsys, "witness", "--name", "swap", "--dim", "2", "--field", "quadext:3")
    assert code == 0 and json.loads(out)["linear"][0] == ["0+0√3", "1+0√3"]
