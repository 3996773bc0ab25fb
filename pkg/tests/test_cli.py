import json

from hampoly.cli import main
from hampoly.core import Domain, rational
from hampoly.facets import LinearInequality


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *args):
    code, out = run(capsys, *args)
    return code, json.loads(out)


def test_separate_worked_point(capsys):
    code, data = run_json(capsys, "separate", "--n", "7",
                          "--point", "7,2.6,1,6.25,7,2.2,1.95")
    assert code == 0
    assert len(data["cuts"]) == 7
    forms = {(tuple(sorted(c["coeffs"].items())), c["rhs"]) for c in data["cuts"]}
    assert ((("3", "1"), ("7", "1")), "3") in forms
    tags = {frozenset(c["family"]) for c in data["cuts"]}
    assert frozenset({"Permutation", "TwoTerm1"}) in tags


def test_separate_fail_on_cut(capsys):
    code, _ = run_json(capsys, "separate", "--n", "7",
                       "--point", "7,2.6,1,6.25,7,2.2,1.95", "--fail-on-cut")
    assert code == 1
    code, data = run_json(capsys, "separate", "--n", "7",
                          "--point", "2,3,4,5,6,7,1", "--fail-on-cut")
    assert code == 0 and data["cuts"] == []


def test_dimension(capsys):
    assert run_json(capsys, "dimension", "--n", "3")[1] == {"dimension": 1}
    assert run_json(capsys, "dimension", "--n", "7")[1] == {"dimension": 6}
    assert run_json(capsys, "dimension", "--domain", "2,4,5")[1] == {"dimension": 1}


def test_undominated(capsys):
    code, data = run_json(capsys, "undominated", "--n", "7", "--J", "1,3,4")
    assert code == 0
    vals = {tuple(jc["values"]) for jc in data["j_circuits"]}
    assert vals == {("2", "1", "3"), ("2", "4", "1"), ("4", "1", "2"), ("3", "2", "1")}
    code, data = run_json(capsys, "undominated", "--n", "7", "--J", "1,3,4",
                          "--minus", "4")
    assert [tuple(jc["values"]) for jc in data["j_circuits"]] == [("2", "1", "7")]


def test_implied_ordering(capsys):
    code, data = run_json(capsys, "implied-ordering", "--n", "7",
                          "--J", "1,3,4,5,6,7", "--values", "2,4,7,6,1,5",
                          "--minus", "4,5")
    assert code == 0
    assert data["ordering"] == [6, 1, 3, 4, 5, 7]
    assert data["matches"] is True
    assert len(data["steps"]) == 6
    assert data["steps"][0]["v_min"] == "1"


def test_verify_and_certify(capsys):
    code, data = run_json(capsys, "verify", "--n", "7",
                          "--coeffs", "3:1,7:1", "--rhs", "3")
    assert code == 0 and data["valid"] is True
    code, data = run_json(capsys, "verify", "--n", "7",
                          "--coeffs", "3:1,7:1", "--rhs", "4")
    assert data["valid"] is False and data["witness"]["values"] == ["1", "2"]
    code, data = run_json(capsys, "certify", "--n", "7",
                          "--ineq", '{"coeffs": {"2": "1", "3": "2"}, "rhs": "5"}')
    assert data["status"] == "facet_by_theorem"
    assert data["affine_rank_of_tight"] == 2


def test_enumerate(capsys):
    code, data = run_json(capsys, "enumerate", "--n", "3")
    assert data["count"] == 2
    code, data = run_json(capsys, "enumerate", "--n", "7", "--J", "1")
    assert data["count"] == 6


def test_map_arc(capsys):
    code, data = run_json(capsys, "map-arc", "--n", "4",
                          "--coeffs", "3:2,4:1", "--rhs", "4")
    assert code == 0
    assert data["matrix"][2] == ["2", "4", "6", "8"]
    assert data["matrix"][3] == ["1", "2", "3", "4"]
    assert data["matrix"][0] == ["0", "0", "0", "0"]
    assert data["rhs"] == "4"


def test_round_trip_inequality(capsys):
    src = LinearInequality.make(7, {2: rational("2/3"), 5: rational("-1/6")},
                                rational("7/3"))
    payload = json.dumps({
        "coeffs": {str(j): str(a) for j, a in src.coeffs},
        "rhs": str(src.rhs),
    })
    code, data = run_json(capsys, "verify", "--n", "7", "--ineq", payload)
    assert code == 0
    # re-parse the echoing via certify to confirm normalization stability
    back = LinearInequality.make(
        7, {int(j): rational(a) for j, a in json.loads(payload)["coeffs"].items()},
        rational(json.loads(payload)["rhs"]))
    assert back == src


def test_error_exit_codes(capsys):
    code, _ = run(capsys, "dimension", "--domain", "3,2,1")
    assert code == 2
    code, _ = run(capsys, "enumerate", "--n", "20")
    assert code == 3
    code, _ = run(capsys, "verify", "--n", "7")
    assert code == 2


def test_text_format(capsys):
    code, out = run(capsys, "separate", "--n", "7",
                    "--point", "7,2.6,1,6.25,7,2.2,1.95", "--format", "text")
    assert code == 0
    assert "1*x3 +1*x7 >= 3" in out


def test_env_caps(capsys, monkeypatch):
    monkeypatch.setenv("CIRCUIT_POLYTOPE_CAPS", "circuits=5")
    code, _ = run(capsys, "enumerate", "--n", "6")
    assert code == 3
    monkeypatch.setenv("CIRCUIT_POLYTOPE_CAPS", "bogus=1")
    code, _ = run(capsys, "dimension", "--n", "4")
    assert code == 2
