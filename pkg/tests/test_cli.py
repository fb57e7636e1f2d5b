"""Command-line interface: encodings, output formats, exit codes."""

import json

import pytest

from bandbrick.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestWordCommands:
    def test_bw_letters(self, capsys):
        code, out, _ = run(capsys, "bw", "acab")
        assert (code, out) == (0, "cbaa\n")

    def test_bw_digits(self, capsys):
        code, out, _ = run(capsys, "bw", "1312")
        assert (code, out) == (0, "3211\n")

    def test_bw_csv(self, capsys):
        code, out, _ = run(capsys, "bw", "1,3,1,2")
        assert (code, out) == (0, "3,2,1,1\n")

    def test_bw_json(self, capsys):
        code, out, _ = run(capsys, "bw", "acab", "--json")
        assert code == 0
        assert json.loads(out) == [3, 2, 1, 1]

    def test_bw_inverse(self, capsys):
        code, out, _ = run(capsys, "bw-inverse", "ccccbbbaaa")
        assert (code, out) == (0, "acacacbbbc\n")

    def test_pcw_methods_agree(self, capsys):
        for method in ["bw", "factors", "both"]:
            code, out, _ = run(capsys, "pcw", "acacacbbbc", "--method", method)
            assert (code, out) == (0, "true\n")

    def test_phi(self, capsys):
        code, out, _ = run(capsys, "phi", "baacbcab")
        assert (code, out) == (0, "(aaacb) (b) (bc)\n")

    def test_phi_inverse(self, capsys):
        code, out, _ = run(capsys, "phi-inverse", "[[1,1,1,3,2],[2],[2,3]]")
        assert (code, out) == (0, "21132312\n")

    def test_phi_round_trip_json(self, capsys):
        code, out, _ = run(capsys, "phi", "baacbcab", "--json")
        ms = json.loads(out)
        code2, out2, _ = run(capsys, "phi-inverse", json.dumps(ms))
        assert (code, code2) == (0, 0)
        assert out2 == "21132312\n"


class TestGVecCommands:
    def test_check(self, capsys):
        code, out, _ = run(capsys, "gvec", "check", "-3,-1,3,-2,3")
        assert (code, out) == (0, "true\n")

    def test_words_json(self, capsys):
        code, out, _ = run(capsys, "gvec", "words", "-3,-1,3,-2,3", "--json")
        assert code == 0
        assert json.loads(out) == [[1, 3, 1, 5, 4, 5, 4, 5], [1, 3, 2, 3]]

    def test_dyck(self, capsys):
        code, out, _ = run(capsys, "gvec", "dyck", "-1,-1,2")
        assert code == 0
        assert "steps: uudd" in out
        assert "labels: 1,2,3,3" in out

    def test_decompose(self, capsys):
        code, out, _ = run(capsys, "gvec", "decompose", "-3,-1,3,-2,3")
        assert code == 0
        assert out == "-2,0,1,-2,3\n-1,-1,2,0,0\n"


class TestBandCommands:
    def test_walk(self, capsys):
        code, out, _ = run(capsys, "band", "walk", "23223")
        assert code == 0
        assert out == "a1 b1- a1 a2 b2- b1- a1 b1- a1 b1- a1 a2 b2- b1-\n"

    def test_module_json(self, capsys):
        code, out, _ = run(capsys, "band", "module", "2", "--lambda", "5", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["dims"] == [1, 1]
        assert data["arrows"]["a1"] == [["5"]]
        assert data["arrows"]["b1"] == [["1"]]

    def test_brick(self, capsys):
        code, out, _ = run(capsys, "band", "brick", "23223")
        assert (code, out) == (0, "true\n")

    def test_brick_false(self, capsys):
        code, out, _ = run(capsys, "band", "brick", "2233")
        assert (code, out) == (0, "false\n")

    def test_hom_with_walk_specs(self, capsys):
        code, out, _ = run(capsys, "band", "hom", "a1 b1-", "a1 a2 b2- b1-", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["hom_xy"] - data["hom_yx"] == data["euler"]

    def test_hom_same_band_distinct_lambda(self, capsys):
        code, out, _ = run(capsys, "band", "hom", "23", "23", "--json")
        assert code == 0
        data = json.loads(out)
        assert data == {"hom_xy": 0, "hom_yx": 0, "ext1_xy": 0, "ext1_yx": 0, "euler": 0}


class TestFanCommands:
    def test_brick4(self, capsys):
        code, out, _ = run(capsys, "fan", "brick4", "-2,-1,-3,6")
        assert (code, out) == (0, "true\n")

    def test_brick4_false(self, capsys):
        code, out, _ = run(capsys, "fan", "brick4", "-2,0,0,2")
        assert (code, out) == (0, "false\n")

    def test_maxcompat(self, capsys):
        code, out, _ = run(capsys, "fan", "maxcompat", "--n", "3", "--box", "2", "--json")
        assert code == 0
        data = json.loads(out)
        assert data == {"size": 1, "max_clique": [[-2, 1, 1]]}

    def test_euler(self, capsys):
        code, out, _ = run(capsys, "euler", "-2,1,0,1", "-1,0,1,0")
        assert (code, out) == (0, "0\n")


class TestVerify:
    def test_named_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "witness")
        assert code == 0
        assert "criterion 9 (witness): PASS" in out

    def test_numbered_suite_json(self, capsys):
        code, out, _ = run(capsys, "verify", "9", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["ok"] is True
        assert data["results"][0]["name"] == "witness"

    def test_unknown_suite(self, capsys):
        code, _, err = run(capsys, "verify", "nope")
        assert code == 2
        assert "unknown suite" in err


class TestRender:
    def test_stdout(self, capsys):
        code, out, _ = run(capsys, "render", "-1,1")
        assert code == 0
        assert out.startswith("<svg")

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "out.svg"
        code, out, _ = run(capsys, "render", "-1,-1,2", "-o", str(target))
        assert code == 0
        assert target.read_text().startswith("<svg")
        assert out == f"{target}\n"


class TestErrorsAndFormats:
    def test_mixed_encoding_usage_error(self, capsys):
        code, _, err = run(capsys, "bw", "a1b")
        assert code == 2
        assert "usage error" in err

    def test_domain_error(self, capsys):
        code, _, err = run(capsys, "bw-inverse", "cba")
        assert code == 1
        assert "MultipleCycles" in err

    def test_non_primitive_factors_method(self, capsys):
        code, _, err = run(capsys, "pcw", "2323", "--method", "factors")
        assert code == 1
        assert "NonPrimitive" in err

    def test_invalid_gvector(self, capsys):
        code, _, err = run(capsys, "gvec", "words", "1,-1")
        assert code == 1
        assert "InvalidGVector" in err

    def test_zero_letter_rejected(self, capsys):
        code, _, err = run(capsys, "bw", "102")
        assert code == 2
        assert "digits 1-9" in err

    def test_env_var_json(self, capsys, monkeypatch):
        monkeypatch.setenv("BANDBRICK_FORMAT", "json")
        code, out, _ = run(capsys, "bw", "acab")
        assert code == 0
        assert json.loads(out) == [3, 2, 1, 1]

    def test_missing_subcommand(self, capsys):
        code, _, _ = run(capsys)
        assert code == 2

    def test_bad_lambda(self, capsys):
        code, _, err = run(capsys, "band", "module", "2", "--lambda", "x")
        assert code == 2
        assert "usage error" in err

    def test_zero_lambda_domain_error(self, capsys):
        code, _, err = run(capsys, "band", "module", "2", "--lambda", "0")
        assert code == 1
        assert "ZeroLambda" in err
