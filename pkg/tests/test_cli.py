"""Command-line front end: parsing, output schemas, exit codes, determinism."""

import io
import json
from contextlib import redirect_stderr, redirect_stdout

import pytest

from wittbreaks.cli import main, parse_problem, print_problem
from wittbreaks.errors import ParseError, ValidationError

VEC_13 = {
    "p": 2,
    "residue_field": {"degree": 1},
    "n": 2,
    "components": [[[-1, "1"]], [[-3, "1"]]],
}

VEC_F4 = {
    "p": 2,
    "residue_field": {"degree": 2, "modulus": [1, 1, 1]},
    "n": 1,
    "components": [[[-1, "g+1"], [0, "g"]]],
}


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, doc, name="f.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


class TestParseProblem:
    def test_example_round_trip(self):
        f = parse_problem(json.dumps(VEC_13))
        assert f.p == 2 and f.n == 2 and f.degree == 1
        assert parse_problem(print_problem(f)) == f

    def test_coefficients_canonicalized(self):
        doc = dict(VEC_F4)
        doc["components"] = [[[-1, "1g^1 + 1"], [0, "g"]]]
        f = parse_problem(json.dumps(doc))
        assert f.components[0][0] == (-1, "g+1")

    def test_zero_coefficients_dropped(self):
        doc = dict(VEC_13)
        doc["components"] = [[[-1, "1"], [0, "0"]], [[-3, "1"]]]
        f = parse_problem(json.dumps(doc))
        assert f.components[0] == ((-1, "1"),)

    def test_not_prime(self):
        with pytest.raises(ValidationError):
            parse_problem(json.dumps({**VEC_13, "p": 4}))

    def test_malformed_json(self):
        with pytest.raises(ParseError) as exc:
            parse_problem('{"p": 2,')
        assert "line" in str(exc.value)

    def test_structural_validation(self):
        with pytest.raises(ValidationError):
            parse_problem(json.dumps({**VEC_13, "extra": 1}))
        with pytest.raises(ValidationError):
            parse_problem(json.dumps({**VEC_13, "n": 3}))
        bad = dict(VEC_13)
        bad["components"] = [[[-1, "1"], [-1, "1"]], [[-3, "1"]]]
        with pytest.raises(ValidationError):
            parse_problem(json.dumps(bad))


class TestBreaksCommand:
    def test_json_schema(self, tmp_path):
        path = write(tmp_path, VEC_13)
        code, out, _ = run(["breaks", path, "--format", "json"])
        assert code == 0
        doc = json.loads(out)
        assert doc["upper"] == [1, 3]
        assert doc["lower"] == [1, 5]
        assert doc["m"] == [1, 3]
        assert doc["residue_degree"] == 1 and doc["ram_index"] == 4
        assert doc["minus_one_break"] is False
        assert doc["phi_breakpoints"] == [[0, 0], [1, 1], [5, 3]]

    def test_text_output(self, tmp_path):
        path = write(tmp_path, VEC_13)
        code, out, _ = run(["breaks", path])
        assert code == 0
        assert "upper breaks: [1, 3]" in out
        assert "lower breaks: [1, 5]" in out


class TestReduceCommand:
    def test_reduce_example(self, tmp_path):
        doc = {
            "p": 2,
            "residue_field": {"degree": 1},
            "n": 2,
            "components": [[[-2, "1"]], []],
        }
        path = write(tmp_path, doc)
        code, out, _ = run(["reduce", path, "--format", "json"])
        assert code == 0
        res = json.loads(out)
        assert res["reduced"] == [[[-1, "1"]], []]
        assert res["verified"] is True
        assert res["extended"] is False

    def test_strong_reduction_extends(self, tmp_path):
        doc = {
            "p": 2,
            "residue_field": {"degree": 1},
            "n": 2,
            "components": [[[-1, "1"]], [[0, "1"]]],
        }
        path = write(tmp_path, doc)
        code, out, _ = run(["reduce", path, "--precision", "6", "--format", "json"])
        assert code == 0
        res = json.loads(out)
        assert res["extended"] is True
        assert res["residue_degree"] == 2
        assert res["precision"] == 6
        assert res["reduced"][1] == []  # unit slot killed over the extension


class TestWittPolysCommand:
    def test_text(self):
        code, out, _ = run(["witt-polys", "--p", "2", "--n", "2"])
        assert code == 0
        assert "S_1 = -X_0*Y_0 + X_1 + Y_1" in out

    def test_json_decimal_strings(self):
        code, out, _ = run(["witt-polys", "--p", "2", "--n", "2", "--format", "json"])
        doc = json.loads(out)
        assert code == 0
        records = doc["S"][1]
        assert {"vars": [1, 0, 1, 0], "coeff": "-1"} in records
        assert all(isinstance(r["coeff"], str) for r in records)


class TestHhCommand:
    def test_table(self, tmp_path):
        path = write(tmp_path, VEC_13)
        code, out, _ = run(["hh", path, "--format", "json"])
        doc = json.loads(out)
        assert code == 0
        assert doc["phi_breakpoints"] == [[0, 0], [1, 1], [5, 3]]
        assert doc["psi_breakpoints"] == [[0, 0], [1, 1], [3, 5]]
        assert doc["phi_final_slope"] == "1/4"
        assert doc["psi_final_slope"] == 4


class TestOracleCompareCommand:
    def test_file_mode(self, tmp_path):
        path = write(tmp_path, VEC_13)
        code, out, _ = run(["oracle-compare", path, "--format", "json"])
        assert code == 0
        doc = json.loads(out)
        assert doc["mismatches"] == 0
        assert doc["cases"][0]["formula_lower"] == [1, 5]
        assert doc["cases"][0]["tower_lower"] == [1, 5]

    def test_random_mode_deterministic(self):
        argv = ["oracle-compare", "--random", "3", "--p", "2", "--q", "4",
                "--n", "2", "--seed", "5", "--format", "json"]
        code1, out1, _ = run(argv)
        code2, out2, _ = run(argv)
        assert code1 == code2 == 0
        assert out1 == out2
        assert json.loads(out1)["count"] == 3

    def test_q_validation(self):
        code, _, err = run(["oracle-compare", "--random", "1", "--p", "2",
                            "--q", "6", "--n", "1"])
        assert code == 2
        assert "power of p" in err

    def test_needs_exactly_one_source(self, tmp_path):
        code, _, _ = run(["oracle-compare"])
        assert code == 2
        path = write(tmp_path, VEC_13)
        code, _, _ = run(["oracle-compare", path, "--random", "2", "--p", "2",
                          "--q", "2", "--n", "1"])
        assert code == 2


class TestVerifyCommand:
    def test_runs_green(self):
        code, out, _ = run(["verify", "--seed", "7"])
        assert code == 0
        assert out.endswith("all suites pass\n")

    def test_deterministic(self):
        _, out1, _ = run(["verify", "--seed", "3"])
        _, out2, _ = run(["verify", "--seed", "3"])
        assert out1 == out2


class TestExitCodes:
    def test_parse_error(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"p": 2,')
        code, _, err = run(["breaks", str(path)])
        assert code == 1 and "ParseError" in err

    def test_validation_error(self, tmp_path):
        path = write(tmp_path, {**VEC_13, "p": 9})
        code, _, err = run(["breaks", path])
        assert code == 2 and "ValidationError" in err

    def test_precondition_error(self, tmp_path):
        doc = {
            "p": 2,
            "residue_field": {"degree": 1},
            "n": 1,
            "components": [[[-2, "1"]]],
        }
        path = write(tmp_path, doc)
        code, _, err = run(["breaks", path])
        assert code == 3 and "NotReduced" in err

    def test_missing_file(self):
        code, _, err = run(["breaks", "/definitely/not/here.json"])
        assert code == 1
