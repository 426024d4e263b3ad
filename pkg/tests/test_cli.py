"""Command-line interface: documents, subcommands, exit codes, round-trips."""

import json
from fractions import Fraction

import pytest

from fsig.cli import main


def write_doc(path, rank, generators, name=None, version=1):
    doc = {"format_version": version, "ambient_rank": rank, "generators": generators}
    if name is not None:
        doc["name"] = name
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.fixture
def veronese22_file(tmp_path):
    return write_doc(tmp_path / "v22.json", 2, [[2, 0], [1, 1], [0, 2]], name="v22")


class TestSignatureCommand:
    def test_free_semigroup_is_one(self, tmp_path, capsys):
        path = write_doc(tmp_path / "free.json", 2, [[1, 0], [0, 1]])
        assert main(["signature", path]) == 0
        assert "1/1" in capsys.readouterr().out

    def test_veronese(self, veronese22_file, capsys):
        assert main(["signature", veronese22_file]) == 0
        assert "1/2" in capsys.readouterr().out

    def test_json_output_roundtrips(self, veronese22_file, capsys):
        assert main(["signature", veronese22_file, "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        num, den = doc["signature"].split("/")
        value = Fraction(int(num), int(den))
        assert value == Fraction(1, 2)
        assert Fraction(int(num), int(den)).denominator == int(den)  # lowest terms

    def test_approx_column(self, veronese22_file, capsys):
        assert main(["signature", veronese22_file, "--approx"]) == 0
        assert "0.5" in capsys.readouterr().out


class TestFamilyCommand:
    def test_veronese_closed_form(self, capsys):
        assert main(["family", "veronese", "2", "3"]) == 0
        out = capsys.readouterr().out
        assert out.count("1/3") == 2  # closed form and computed agree
        assert "yes" in out

    def test_emit_signature_roundtrip(self, tmp_path, capsys):
        emitted = tmp_path / "segre23.json"
        assert main(["family", "segre", "2", "3", "--emit", str(emitted)]) == 0
        family_out = capsys.readouterr().out
        assert "11/24" in family_out
        assert main(["signature", str(emitted)]) == 0
        assert "11/24" in capsys.readouterr().out

    def test_invalid_parameters_exit_3(self, capsys):
        assert main(["family", "segre", "1", "2"]) == 3


class TestAqCommand:
    def test_segre_table(self, tmp_path, capsys):
        emitted = tmp_path / "s22.json"
        main(["family", "segre", "2", "2", "--emit", str(emitted)])
        capsys.readouterr()
        assert main(["aq", str(emitted), "--q", "2,3"]) == 0
        out = capsys.readouterr().out
        assert "3/4" in out and "19/27" in out

    def test_json_table(self, veronese22_file, capsys):
        assert main(["aq", veronese22_file, "--q", "2,4", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert [row["a_q"] for row in doc["table"]] == [2, 8]
        assert [row["ratio"] for row in doc["table"]] == ["1/2", "1/2"]

    def test_bad_q_list_exit_2(self, veronese22_file, capsys):
        assert main(["aq", veronese22_file, "--q", "3,2"]) == 2


class TestHkCommand:
    def test_identity_reported(self, veronese22_file, capsys):
        assert main(["hk", veronese22_file, "--q", "3", "--t", "1"]) == 0
        out = capsys.readouterr().out
        assert "identity holds" in out and "yes" in out

    def test_json_fields(self, veronese22_file, capsys):
        assert main(["hk", veronese22_file, "--q", "2", "--t", "1", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["difference"] == doc["a_q"]
        assert doc["identity_holds"] is True


class TestCheckNormalCommand:
    def test_normal_input(self, veronese22_file, capsys):
        assert main(["check-normal", veronese22_file, "--bound", "6"]) == 0
        assert "normal up to bound 6" in capsys.readouterr().out

    def test_counterexample_exit_3(self, tmp_path, capsys):
        path = write_doc(tmp_path / "gap.json", 2, [[2, 0], [0, 1], [1, 1]])
        assert main(["check-normal", path, "--bound", "4"]) == 3
        assert "(1, 0)" in capsys.readouterr().out


class TestParseErrors:
    def test_missing_file(self, capsys):
        assert main(["signature", "/nonexistent/nowhere.json"]) == 2

    def test_invalid_json(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        assert main(["signature", str(path)]) == 2

    def test_wrong_format_version(self, tmp_path, capsys):
        path = write_doc(tmp_path / "v9.json", 2, [[1, 0]], version=9)
        assert main(["signature", path]) == 2

    def test_zero_generator(self, tmp_path, capsys):
        path = write_doc(tmp_path / "zero.json", 2, [[0, 0]])
        assert main(["signature", path]) == 2

    def test_duplicate_generator(self, tmp_path, capsys):
        path = write_doc(tmp_path / "dup.json", 2, [[1, 0], [1, 0]])
        assert main(["signature", path]) == 2

    def test_ragged_generator(self, tmp_path, capsys):
        path = write_doc(tmp_path / "ragged.json", 2, [[1, 0, 0]])
        assert main(["signature", path]) == 2


class TestSelftest:
    def test_selftest_passes(self, capsys):
        assert main(["selftest"]) == 0
        out = capsys.readouterr().out
        assert "FAIL" not in out

    def test_selftest_json(self, capsys):
        assert main(["selftest", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["failures"] == 0
