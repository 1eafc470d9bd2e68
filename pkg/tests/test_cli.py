import json


from quandiff.cli import main
from quandiff.gauss import flip, parse_text, to_text, to_vector
from quandiff.homcount import invariant_report
from quandiff.presentation import presentation_matrix, upper_relations
from quandiff.quandle import builtin, serialize_table

EX = "UA+OB-UC+OD+OA+UB-UD+OC+"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_invariant(capsys):
    code, out, _ = run(capsys, "invariant", "--code", "O1+U2+O3+U1+O2+U3+", "--quandle", "T3")
    assert code == 0
    assert out.strip() == "upper=9 lower=9 qd=0"


def test_invariant_json_matches_library(capsys):
    code, out, _ = run(capsys, "invariant", "--code", EX, "--quandle", "T4", "--json")
    assert code == 0
    assert json.loads(out) == invariant_report(parse_text(EX), builtin("T4")).as_dict()


def test_invariant_quandle_file(tmp_path, capsys):
    f = tmp_path / "t3.txt"
    f.write_text("1 3 2\n3 2 1\n2 1 3\n")
    _, out, _ = run(capsys, "invariant", "--code", EX, "--quandle", str(f))
    assert out.strip() == "upper=3 lower=3 qd=0"


def test_quandle_verify(tmp_path, capsys):
    f = tmp_path / "t4.txt"
    f.write_text(serialize_table(builtin("T4")))
    code, out, _ = run(capsys, "quandle", "verify", str(f))
    assert (code, out.strip()) == (0, "valid, connected")
    f.write_text("1 1 1\n2 2 2\n3 3 3")
    assert run(capsys, "quandle", "verify", str(f))[1].strip() == "valid, not connected"
    f.write_text("2 1\n1 2")
    code, out, err = run(capsys, "quandle", "verify", str(f))
    assert code == 1 and err.startswith("error: invalid: axiom i")
    f.write_text("1 2\n2")
    code, _, err = run(capsys, "quandle", "verify", str(f))
    assert code == 1 and len(err.strip().splitlines()) == 1


def test_quandle_show_and_list(capsys):
    assert run(capsys, "quandle", "show", "T3")[1].strip() == "1 3 2\n3 2 1\n2 1 3"
    _, out, _ = run(capsys, "quandle", "list")
    assert out.split()[0::2] == ["T3", "T4", "T5a", "T5b", "T5c", "T6"]
    assert run(capsys, "quandle", "show", "nope")[0] == 1


def test_code_check(capsys):
    _, out, _ = run(capsys, "code", "check", EX)
    assert out.strip() == "valid; not evenly intersticed; r1:no; r2:no"
    _, out, _ = run(capsys, "code", "check", "O1+U1+")
    assert out.strip() == "valid; evenly intersticed; r1:yes; r2:no"


def test_code_parse_and_flip(capsys):
    c = parse_text(EX)
    _, out, _ = run(capsys, "code", "parse", EX)
    assert out.strip() == f"text={to_text(c)} vector={to_vector(c)}"
    _, out, _ = run(capsys, "code", "flip", EX, "--vector")
    assert out.strip() == to_vector(flip(c))
    _, out, _ = run(capsys, "code", "parse", "[-1,2+I,3+I,-2-I,0,1,-3-I,0]", "--json")
    assert json.loads(out)["components"] == 2


def test_code_from_file(tmp_path, capsys):
    f = tmp_path / "code.txt"
    f.write_text(EX + "\n")
    assert run(capsys, "code", "parse", "@" + str(f))[0] == 0
    assert run(capsys, "code", "parse", "@" + str(tmp_path / "missing"))[0] == 1


def test_presentation(capsys):
    c = parse_text(EX)
    _, out, _ = run(capsys, "code", "presentation", EX, "--side", "lower", "--matrix")
    assert out.strip() == str(presentation_matrix(c, "lower"))
    _, out, _ = run(capsys, "code", "presentation", EX)
    assert out.strip() == str(upper_relations(c))


def test_errors(capsys):
    code, _, err = run(capsys, "code", "check", "O1+U2+")
    assert code == 1 and err.count("\n") == 1
    assert run(capsys, "invariant", "--code", EX, "--quandle", "T9")[0] == 1
    assert run(capsys, "code", "flip", "O1+U2-, O2-U1+")[0] == 1
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "invariant", "--code", EX)[0] == 2
    assert run(capsys, "code", "check", EX, "--bogus")[0] == 2


def test_census_outputs(tmp_path, capsys):
    csv_path, json_path = tmp_path / "c.csv", tmp_path / "c.json"
    code, out, _ = run(capsys, "census", "--crossings", "3", "--csv", str(csv_path),
                       "--json", str(json_path))
    assert code == 0
    assert out.splitlines()[0] == "crossings=3 total=172"
    assert csv_path.read_text().splitlines()[1] == "T3,0,172"
    assert json.loads(json_path.read_text())["nontrivialCodes"] == 16
    assert run(capsys, "census", "--crossings", "9")[0] == 1
