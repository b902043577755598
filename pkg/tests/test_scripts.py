import runpy
import sys
from pathlib import Path

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def test_run_sweep_small(tmp_path, capsys):
    sys.path.insert(0, str(SCRIPTS))
    try:
        mod = runpy.run_path(str(SCRIPTS / "run_sweep.py"))
    finally:
        sys.path.pop(0)
    out = tmp_path / "r.json"
    assert mod["main"](["--max-vertices", "2", "--count", "10", "--json", str(out)]) == 0
    assert "regular-quotient-L" in capsys.readouterr().out
    assert out.read_text().startswith("{")


def test_truncations_script(monkeypatch, capsys):
    monkeypatch.setattr(sys, "argv", ["truncations.py", "--max-depth", "3"])
    runpy.run_path(str(SCRIPTS / "truncations.py"), run_name="__main__")
    lines = capsys.readouterr().out.splitlines()
    assert lines[3].split("\t")[:7] == ["3", "15", "29", "11", "v_111", "True", "True"]
