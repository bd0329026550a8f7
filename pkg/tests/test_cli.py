import io
import json
import subprocess
import sys

import pytest

from waring import document
from waring.cli import main
from waring.monomial import decompose, specialize


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def write_json(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def test_decompose_symbolic_text():
    code, out, _ = run("decompose", "--monomial", "4,3,2", "--t", "symbolic")
    assert code == 0
    assert "terms: 27" in out
    assert "D = 5040t^7-10080t^5+5040t^3" in out
    assert "  + (t^3)*(X0+X1+X2)^9" in out


def test_decompose_rational_json():
    code, out, _ = run("decompose", "--monomial", "1,1", "--t", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert [(x["coefficient"], x["linear_form"]) for x in doc["terms"]] == [
        ("1/4", ["1", "1"]),
        ("-1/4", ["1", "-1"]),
    ]


def test_decompose_degenerate_parameter():
    code, out, err = run("decompose", "--monomial", "4,3,2", "--t", "1")
    assert code == 2 and out == ""
    assert "degenerate parameter" in err


@pytest.mark.parametrize("argv", [["decompose", "--monomial", "a,b"], ["decompose", "--monomial", "0,0"], ["decompose"], ["count", "--n", "2", "--D", "0"]])
def test_malformed_input(argv, capsys):
    code, _, _ = run(*argv)
    assert code == 1


@pytest.mark.parametrize("mono", ["4,3,2", "5"])
def test_verify_ok(mono):
    code, out, _ = run("verify", "--monomial", mono, "--mode", "both")
    assert code == 0
    assert out.count("OK") == 2


def test_verify_specialized():
    code, out, _ = run("verify", "--monomial", "4,3,2", "--t", "7/2")
    assert code == 0 and out.startswith("OK")


def test_verify_sweep():
    code, out, _ = run("verify", "--sweep", "n=3,amax=4")
    assert code == 0
    assert out == f"OK: {5 + 25 + 125 + 625 - 4} identities checked\n"


def test_verify_sweep_parallel_same_output():
    serial = run("verify", "--sweep", "n=2,amax=3", "--mode", "both")
    parallel = run("verify", "--sweep", "n=2,amax=3", "--mode", "both", "--parallel")
    assert serial == parallel


@pytest.mark.parametrize(
    "n, D, expected",
    [("2", "10", "F=205 K=133\n"), ("5", "100", "F=1669982466 K=502701736\n"), ("1", "2", "F=3 K=4\n")],
)
def test_count(n, D, expected):
    assert run("count", "--n", n, "--D", D) == (0, expected, "")


def test_count_json_uses_strings():
    code, out, _ = run("count", "--n", "5", "--D", "100", "--format", "json")
    assert json.loads(out) == {"n": "5", "D": "100", "F": "1669982466", "K": "502701736"}


def test_table_csv():
    code, out, _ = run("table", "--pairs", "2:10,3:50", "--format", "csv")
    assert out == "n,D,F,K\n2,10,205,133\n3,50,286893,83416\n"


def test_table_default_pairs():
    code, out, _ = run("table")
    assert code == 0 and len(out.splitlines()) == 10


def test_integrate(tmp_path):
    poly = write_json(tmp_path, "p.json", [{"coeff": "1", "exponents": [1, 1]}])
    simplex = write_json(tmp_path, "s.json", [["0", "0"], ["1", "0"], ["0", "1"]])
    code, out, _ = run("integrate", "--poly", poly, "--simplex", simplex)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "1/24" and lines[1].startswith("t = ")


def test_integrate_constant_json(tmp_path):
    poly = write_json(tmp_path, "p.json", [{"coeff": "1", "exponents": [0, 0]}])
    simplex = write_json(tmp_path, "s.json", [["0", "0"], ["2", "0"], ["0", "2"]])
    code, out, _ = run("integrate", "--poly", poly, "--simplex", simplex, "--format", "json")
    assert code == 0 and json.loads(out)["value"] == "2"


def test_integrate_repeated_vertex(tmp_path):
    poly = write_json(tmp_path, "p.json", [{"coeff": "1", "exponents": [1, 1]}])
    simplex = write_json(tmp_path, "s.json", [["0", "0"], ["0", "0"], ["0", "1"]])
    assert run("integrate", "--poly", poly, "--simplex", simplex)[0] == 4


@pytest.mark.parametrize("payload", [{"coeff": "1"}, {"coeff": "x", "exponents": [1, 1]}, "nope"])
def test_integrate_malformed_poly(tmp_path, payload):
    poly = write_json(tmp_path, "p.json", [payload])
    simplex = write_json(tmp_path, "s.json", [["0", "0"], ["1", "0"], ["0", "1"]])
    assert run("integrate", "--poly", poly, "--simplex", simplex)[0] == 1


def test_integrate_missing_file(tmp_path):
    simplex = write_json(tmp_path, "s.json", [["0", "0"], ["1", "0"], ["0", "1"]])
    assert run("integrate", "--poly", str(tmp_path / "absent.json"), "--simplex", simplex)[0] == 1


def test_output_is_deterministic():
    a = run("decompose", "--monomial", "3,2,2,1", "--mode", "full", "--format", "json")
    b = run("decompose", "--monomial", "3,2,2,1", "--mode", "full", "--format", "json")
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "waring", "count", "--n", "2", "--D", "10"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "F=205 K=133\n"


GOLDEN = [(a, r) for a in [(4, 3, 2), (1, 1), (5,), (3, 0, 2), (2, 2)] for r in (True, False)]


@pytest.mark.parametrize("a, reduced", GOLDEN)
def test_document_roundtrip_symbolic(a, reduced):
    dec = decompose(a, reduced)
    doc = document.from_symbolic(dec)
    text = document.emit(doc)
    assert document.parse(text) == doc
    assert document.emit(document.parse(text)) == text
    assert document.to_symbolic(document.parse(text)) == dec


@pytest.mark.parametrize("a, reduced", GOLDEN)
def test_document_roundtrip_rational(a, reduced):
    dec = decompose(a, reduced)
    doc = document.from_rational(specialize(dec, 3), dec)
    text = document.emit(doc)
    assert document.parse(text) == doc
    assert all(isinstance(x, str) for x in json.loads(text)["D"])


@pytest.mark.parametrize(
    "text",
    ["[]", "{}", "not json", '{"schema_version": "9", "exponents": [], "mode": "reduced", "parameter": "t", "D": [], "terms": []}'],
)
def test_document_parse_errors(text):
    with pytest.raises(document.DocumentError):
        document.parse(text)


def test_document_rejects_inconsistent_form():
    doc = json.loads(document.emit(document.from_symbolic(decompose((1, 1)))))
    doc["terms"][0]["linear_form"] = ["1", "2"]
    with pytest.raises(document.DocumentError):
        document.to_symbolic(document.parse(json.dumps(doc)))
