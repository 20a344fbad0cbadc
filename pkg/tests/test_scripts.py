import importlib.util
import io
from pathlib import Path

from fermatiq.cli import main

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def load(name):
    spec = importlib.util.spec_from_file_location(name, SCRIPTS / f"{name}.py")
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def test_reproduce_table1(capsys):
    mod = load("reproduce_table1")
    assert mod.run(mod.Table1Config())
    assert "6 fields" in capsys.readouterr().out


def test_trace_survey():
    mod = load("trace_survey")
    buf = io.StringIO()
    summary = mod.run(mod.SurveyConfig(d=19, triples=3, max_norm=30), buf)
    assert summary["oracle_disagreements"] == 0
    assert buf.getvalue().startswith("triple,prime_label,norm,kind,a_l")


def test_j_valuation_survey():
    mod = load("j_valuation_survey")
    tally = mod.run(mod.JConfig(samples=24))
    assert tally["8 - 2pv"] == 24 and tally["4 - 2pv"] == 0


def test_synthetic_dataset_drives_sieve(tmp_path, capsys):
    mod = load("make_synthetic_dataset")
    mod.make(mod.DatasetConfig(d=67, count=1, mode="frey"), tmp_path / "frey")
    mod.make(mod.DatasetConfig(d=67, count=1, mode="shifted"), tmp_path / "shifted")
    assert main(["sieve", "--d", "67", "--dataset", str(tmp_path / "frey")]) == 1
    capsys.readouterr()
    assert main(["sieve", "--d", "67", "--dataset", str(tmp_path / "shifted")]) in (0, 1)
    assert "C=0" not in capsys.readouterr().out
