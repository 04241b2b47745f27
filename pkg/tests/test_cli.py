import json

import pytest

from supertableaux.cli import main
from supertableaux.extraction import quasistandard, shapes_below
from supertableaux.io import combination_from_json, shape_to_json, tableau_from_json, tableau_to_json
from supertableaux.superspace import straighten, star_product

from conftest import shape, tableau

SL12 = ["--m", "1", "--n", "2"]
M4 = json.dumps({"shape": {"m": 4, "n": 0, "a": [2, 2, 1, 0], "a_prime": []}, "plus": [[1, 1, 2, 2, 3], [2, 3, 4], [4]]})
TRACE_ONE = {
    "m": 2,
    "n": 3,
    "inner": [[1, 1], [2, 1]],
    "entries": [[1, 2, 1], [1, 3, 2], [2, 2, 2], [3, 1, 3], [4, 1, 3], [5, 1, 4], [3, 2, 4], [4, 2, 5]],
}


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_count(capsys):
    assert run(capsys, "count", *SL12, "--shape", '{"a":[2],"a_prime":[1]}') == (0, '{"ss": 8}\n')


def test_push_classical_example(capsys):
    code, out = run(capsys, "push", "--tableau", M4)
    assert code == 0
    assert tableau_from_json(json.loads(out)).plus == ((2, 2, 3), (3, 4), (4,), ())


def test_pretty_push(capsys):
    assert run(capsys, "push", "--tableau", M4, "--pretty")[1] == "2 2 3\n3 4\n4\n"


def test_enumerate_and_roundtrip(capsys):
    code, out = run(capsys, "enumerate", *SL12, "--shape", '{"a":[2],"a_prime":[1]}')
    found = [tableau_from_json(d) for d in json.loads(out)]
    assert code == 0 and len(found) == 8
    assert [tableau_to_json(T) for T in found] == json.loads(out)


def test_quasistandard_and_pull(capsys):
    code, out = run(capsys, "quasistandard", *SL12, "--shape", '{"a":[1],"a_prime":[0]}')
    assert [T.plus for T in map(tableau_from_json, json.loads(out))] == [((2,),), ((3,),)]
    U = json.dumps(json.loads(out)[0])
    code, out = run(capsys, "pull", *SL12, "--tableau", U, "--shape", '{"a":[2],"a_prime":[1]}')
    T = tableau_from_json(json.loads(out))
    assert code == 0 and T.plus == ((1, 2),) and T.minus == ((2,),)


def test_verify_vacuous(capsys):
    code, out = run(capsys, "verify", "all", "--max-boxes", "0")
    results = json.loads(out)
    assert code == 0 and len(results) == 10
    assert [r["criterion"] for r in results] == list(range(1, 11))


def test_verify_single_suite(capsys):
    code, out = run(capsys, "verify", "push-maxjdt", "--max-boxes", "3")
    assert code == 0 and json.loads(out)[0]["pass"]


def test_verify_reports_failure(capsys):
    code, out = run(capsys, "verify", "bijection", "--max-boxes", "2")
    assert code == 1 and not json.loads(out)[0]["pass"]


def test_sjdt_trace(capsys, tmp_path):
    path = tmp_path / "skew.json"
    path.write_text(json.dumps(TRACE_ONE))
    code, out = run(capsys, "sjdt", "--tableau", str(path), "--corner", "[2,1]", "--trace")
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert [line["star"] for line in lines[:-1]] == [[2, 1], [2, 2], [3, 2], [4, 2]]
    assert set(lines[-1]) == {"result"}
    assert lines[-1]["result"]["inner"] == [[1, 1]]


def test_sjdt_to_straight(capsys):
    code, out = run(capsys, "sjdt", "--tableau", json.dumps(TRACE_ONE))
    T = tableau_from_json(json.loads(out))
    assert code == 0 and T.plus == ((1, 2), (2, 4))


def test_sjdt_from_tableau_matches_push(capsys):
    code, out = run(capsys, "sjdt", "--tableau", M4)
    assert tableau_from_json(json.loads(out)).plus == ((2, 2, 3), (3, 4), (4,), ())


def test_straighten_and_star(capsys):
    W = tableau(1, 1, (2,), (), ((2, 1),))
    code, out = run(capsys, "straighten", "--tableau", json.dumps(tableau_to_json(W)))
    assert code == 0 and combination_from_json(json.loads(out)) == straighten(W)
    S, T = tableau(1, 2, (1,), (0,), ((1,),)), tableau(1, 2, (1,), (1,), ((2,),), ((2,),))
    args = ["star", "--tableau", json.dumps(tableau_to_json(S)), "--tableau", json.dumps(tableau_to_json(T))]
    code, out = run(capsys, *args)
    assert code == 0 and combination_from_json(json.loads(out)) == star_product(S, T)


def test_cone_two_one(capsys):
    code, out = run(capsys, "cone", *SL12, "--shape", '{"a":[2],"a_prime":[1]}', "--dot")
    assert code == 0 and out.startswith("digraph cone {")
    assert sum(1 for line in out.splitlines() if "[label=" in line and "->" not in line) == 8
    assert "dashed" not in out


def test_cone_is_stable(capsys):
    first = run(capsys, "cone", *SL12, "--shape", '{"a":[2],"a_prime":[1]}', "--dot")[1]
    assert run(capsys, "cone", *SL12, "--shape", '{"a":[2],"a_prime":[1]}', "--dot")[1] == first


def test_cone_of_zero(capsys):
    code, out = run(capsys, "cone", *SL12, "--shape", '{"a":[0],"a_prime":[0]}', "--dot")
    assert out == 'digraph cone {\n  n0 [label="0"];\n}\n'


def test_cone_nodes_are_the_quasistandard_inventory(capsys):
    lam = shape(2, 1, (0, 1))
    code, out = run(capsys, "cone", "--shape", json.dumps(shape_to_json(lam)))
    nodes = [tableau_from_json(d) for d in json.loads(out)["nodes"]]
    assert nodes == [U for mu in shapes_below(lam) for U in quasistandard(mu)]


def test_cone_marks_unreached_nodes(capsys):
    code, out = run(capsys, "cone", *SL12, "--shape", '{"a":[1],"a_prime":[1]}')
    graph = json.loads(out)
    assert graph["reached"].count(False) == 1


def test_cone_over_budget(capsys):
    code = main(["cone", *SL12, "--shape", '{"a":[2],"a_prime":[1]}', "--max-boxes", "2", "--dot"])
    captured = capsys.readouterr()
    assert code == 0 and "->" not in captured.out and "warning" in captured.err


def test_domain_error(capsys):
    code, out = run(capsys, "count", "--m", "2", "--n", "3", "--shape", '{"a":[1,1],"a_prime":[1,1]}')
    assert code == 1 and json.loads(out)["error"] == "CovarianceViolation"


def test_usage_errors(capsys):
    assert main(["count", "--shape", '{"a":[1]}']) == 2
    assert "--m" in capsys.readouterr().err
    assert main(["count", *SL12, "--shape", '{"a":[1']) == 2
    assert "--shape" in capsys.readouterr().err
    assert main(["star", *SL12, "--tableau", "{}"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
