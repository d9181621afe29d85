"""Tests for the command-line front end."""

import json

import pytest

from braidforge.cli import EXIT_OK, EXIT_USAGE, main

Z3_TEXT = "name: Z3\ngens: a b\nrels: a b^-1, a^3\n"


@pytest.fixture
def z3_file(tmp_path):
    path = tmp_path / "z3.pres"
    path.write_text(Z3_TEXT)
    return path


class TestCatalogCommand:
    """Tests for braidforge catalog."""

    def test_text(self, capsys):
        """Test the catalog presentation is printed in the file format."""
        assert main(["catalog", "--family", "wb", "--n", "3"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "name: WB_3" in out
        assert "gens: s1 s2 r1 r2" in out

    def test_structured(self, capsys):
        """Test structured output carries the schema version."""
        assert main(["catalog", "--family", "fvb", "--format", "structured"]) == EXIT_OK
        doc = json.loads(capsys.readouterr().out)
        assert doc["schema_version"] == "1.0"
        assert len(doc["relators"]) == 7

    def test_out_file(self, tmp_path):
        """Test --out writes the output to a file."""
        out = tmp_path / "b3.pres"
        assert main(["catalog", "--family", "braid", "--out", str(out)]) == EXIT_OK
        assert "gens: s1 s2" in out.read_text()

    def test_too_few_strands(self, capsys):
        """Test n below 2 is a usage error."""
        assert main(["catalog", "--family", "wb", "--n", "1"]) == EXIT_USAGE
        assert "error:" in capsys.readouterr().err

    def test_unknown_family(self):
        """Test unknown aliases are usage errors."""
        assert main(["catalog", "--family", "nope"]) == EXIT_USAGE

    def test_missing_argument(self):
        """Test argparse errors exit with status 2."""
        with pytest.raises(SystemExit) as exc_info:
            main(["catalog"])
        assert exc_info.value.code == 2


class TestDeriveCommand:
    """Tests for braidforge derive."""

    def test_flat(self, capsys):
        """Test the derived FVB_3' document lists trivial generators."""
        assert main(["derive", "--family", "fvb"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "name: FVB_3'" in out
        assert "trivial: " in out
        assert "provenance:" in out

    def test_window_required(self):
        """Test wb without a window is a usage error."""
        assert main(["derive", "--family", "wb"]) == EXIT_USAGE

    def test_structured_window(self, capsys):
        """Test structured output records the window and relator slots."""
        assert main(["derive", "--family", "wb", "--window", "1", "--format", "structured"]) == EXIT_OK
        doc = json.loads(capsys.readouterr().out)
        assert doc["window"] == 1
        assert doc["relator_slots"] == 6 * 6


class TestFileCommands:
    """Tests for abelianize and simplify."""

    def test_abelianize(self, z3_file, capsys):
        """Test abelian invariants of a presentation file."""
        assert main(["abelianize", str(z3_file)]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "Z/3"

    def test_abelianize_missing_file(self, tmp_path):
        """Test unreadable files are usage errors."""
        assert main(["abelianize", str(tmp_path / "missing.pres")]) == EXIT_USAGE

    def test_simplify(self, z3_file, tmp_path, capsys):
        """Test greedy simplification writes its moves and summary."""
        moves = tmp_path / "moves.tz"
        assert main(["simplify", str(z3_file), "--script-out", str(moves)]) == EXIT_OK
        captured = capsys.readouterr()
        assert "2 -> 1 generators" in captured.err
        assert moves.read_text().startswith("# simplify\neliminate")

    def test_simplify_missing_script(self, z3_file):
        """Test naming a missing script is a usage error."""
        assert main(["simplify", str(z3_file), "--script", "no-such-script"]) == EXIT_USAGE


class TestVerifyCommand:
    """Tests for braidforge verify."""

    def test_no_match(self, capsys):
        """Test a filter matching nothing passes vacuously."""
        assert main(["verify", "--filter", "nonexistent"]) == EXIT_OK
        assert "0/0 scenarios passed" in capsys.readouterr().out

    def test_structured(self, capsys):
        """Test structured verification output is a list of reports."""
        assert main(["verify", "--filter", "abelianization-wb", "--format", "structured"]) == EXIT_OK
        reports = json.loads(capsys.readouterr().out)
        assert [r["scenario"] for r in reports] == ["abelianization-wb"]
        assert reports[0]["status"] == "passed"
