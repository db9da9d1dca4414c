import runpy
import sys

import pytest


def test_module_entry_point(monkeypatch, capsys):
    monkeypatch.setattr(sys, "argv", ["normscreen", "--input", "set2"])

    with pytest.raises(SystemExit) as exit_info:
        runpy.run_module("normscreen", run_name="__main__")

    assert exit_info.value.code == 1
    assert "Dataset: set2 (n = 206)" in capsys.readouterr().out
