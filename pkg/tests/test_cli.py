import json
import subprocess
import sys

import pytest

from petalknots.cli import main
from petalknots.exactdet import knot_determinant
from stevedore_data import NINE_UNSIGNED


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_det_text(capsys):
    code, out, _ = run(capsys, "det", "1,3,5,2,4")
    assert code == 0
    assert "determinant is 3" in out
    assert "3^(1+1) - 3 = 6 nontrivial 3-colorings" in out


def test_det_json_round_trip(capsys):
    code, out, _ = run(capsys, "det", "--json", "1,3,5,2,8,4,6,9,7")
    assert code == 0
    data = json.loads(out)
    assert data["determinant"] == "9"
    assert data["factorization"] == [[3, 2]]
    assert data["colorings"][0] == {"p": 3, "ord": 2, "total": "27", "nontrivial": "24",
                                    "exact_total": "9"}
    assert str(knot_determinant(data["permutation"])) == data["determinant"]
    _, text, _ = run(capsys, "det", "1,3,5,2,8,4,6,9,7")
    assert f"determinant is {data['determinant']}." in text
    assert "= 24 nontrivial" in text


def test_det_unknot(capsys):
    code, out, _ = run(capsys, "det", "1,2,3")
    assert code == 0
    assert "determinant is 1" in out


def test_gauss(capsys):
    code, out, _ = run(capsys, "gauss", "--unsigned", "9")
    assert code == 0
    assert out.strip() == ",".join(map(str, NINE_UNSIGNED))
    assert out.startswith("1,10,19,20,12,4,")
    _, out, _ = run(capsys, "gauss", "--json", "1,3,5,2,4")
    data = json.loads(out)
    assert data["signed"] and len(data["code"]) == 10


def test_matrix_and_arcs(capsys):
    _, out, _ = run(capsys, "matrix", "1,3,5,2,4")
    rows = [list(map(int, line.split())) for line in out.strip().splitlines()]
    assert len(rows) == 5 and all(sum(r) == 0 for r in rows)
    _, out, _ = run(capsys, "matrix", "--json", "1,3,5,2,4")
    assert json.loads(out)["matrix"] == rows
    _, out, _ = run(capsys, "arcs", "--json", "1,3,5,2,8,4,6,9,7")
    arcs = json.loads(out)["arcs"]
    assert len(arcs) == 27 and (arcs[0][0], arcs[0][-1]) == (-23, -19)


def test_reduce(capsys):
    _, out, _ = run(capsys, "reduce", "1,2,3,4,5,6,7")
    assert out.strip() == "1"
    _, out, _ = run(capsys, "reduce", "--json", "1,4,3,6,2,7,5")
    assert json.loads(out)["petal_number"] == 5


def test_validation_errors(capsys):
    code, _, err = run(capsys, "det", "1,2")
    assert code == 3
    assert "even" in err and "[1, 2]" in err
    code, _, err = run(capsys, "det", "1,3,3,2,4")
    assert code == 3 and "1, 3, 3, 2, 4" in err
    assert run(capsys, "gauss", "--unsigned", "8")[0] == 3


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["det"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["bench", "7", "--mode", "random", "--json"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_bench_and_survey(capsys):
    code, out, _ = run(capsys, "bench", "--json", "7", "--mode", "random", "--runs", "3",
                       "--seed", "4")
    assert code == 0
    data = json.loads(out)
    assert data["runs"] == 3 and data["seed"] == 4
    code, out, err = run(capsys, "bench", "7", "--mode", "random", "--runs", "2")
    assert code == 0 and "# seed" in err
    code, out, _ = run(capsys, "survey", "--json", "1", "5")
    rows = json.loads(out)
    assert rows[1]["prime_counts"]["3"] == 10
    code, out, _ = run(capsys, "survey", "5", "9", "--samples", "20", "--seed", "3",
                       "--primes", "3,5")
    assert out.splitlines()[0] == "n,samples,mode,seed,NC,3,5"


def test_regress_json(capsys):
    code, out, _ = run(capsys, "regress", "--json")
    assert code == 0
    assert json.loads(out)["passed"] == 84


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "petalknots", "det", "1,3,5,2,4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "determinant is 3" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "petalknots", "det", "1,2"],
                          capture_output=True, text=True)
    assert proc.returncode == 3
