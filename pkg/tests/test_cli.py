import numpy as np
import pytest

from oddfft import dft_direct
from oddfft.cli import main
from oddfft.io import read_bench, read_state, read_table


def test_fft_backends_agree(tmp_path, capsys):
    s = tmp_path / "s.csv"
    assert main(["fft", "--backend", "direct", "--factors", "3,5", "--seed", "4",
                 "--out", str(tmp_path / "ref.csv")]) == 0
    ref = read_state(tmp_path / "ref.csv")
    # the same seed gives the same random input to every backend
    assert main(["fft", "--backend", "pfa", "--factors", "3,5", "--seed", "4",
                 "--out", str(s)]) == 0
    assert np.abs(read_state(s).amplitudes - ref.amplitudes).max() < 1e-12
    assert main(["fft", "--backend", "radix", "--d", "3", "--n", "2", "--in",
                 str(tmp_path / "x9.csv")]) == 3
    assert main(["fft", "--backend", "radix", "--d", "3", "--n", "2", "--seed", "1",
                 "--stats"]) == 0
    out, err = capsys.readouterr()
    assert out.splitlines()[0] == "index,real,imag" and len(out.splitlines()) == 10
    assert "multiplications=" in err


def test_fft_from_file(tmp_path):
    main(["fft", "--backend", "direct", "--d", "5", "--n", "2", "--seed", "2",
          "--out", str(tmp_path / "a.csv")])
    a = read_state(tmp_path / "a.csv")
    assert main(["fft", "--backend", "radix", "--d", "5", "--n", "2", "--in",
                 str(tmp_path / "a.csv"), "--out", str(tmp_path / "b.csv")]) == 0
    assert np.abs(read_state(tmp_path / "b.csv").amplitudes
                  - dft_direct(a).amplitudes).max() < 1e-12


@pytest.mark.parametrize("argv", [
    ["fft", "--backend", "radix", "--d", "4", "--n", "2"],
    ["fft", "--backend", "radix"],
    ["fft", "--backend", "pfa", "--factors", "3,9"],
    ["fft", "--backend", "fast"],
    ["weyl"],
    ["wigner", "--factors", "3,6"],
    ["bench", "--suite", "radix", "--reps", "1"],
    ["nonsense"],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_io_errors(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("index,real,imag\n0,nan,0\n")
    assert main(["fft", "--backend", "direct", "--in", str(bad)]) == 3
    assert main(["weyl", "--factors", "3,5", "--in", str(tmp_path / "missing.csv")]) == 3


def test_phase_space_commands(tmp_path, capsys):
    assert main(["wigner", "--quick", "--out", str(tmp_path / "w.csv"), "--real"]) == 0
    t = read_table(tmp_path / "w.csv", "wigner")
    assert t.D == 105
    assert main(["weyl", "--factors", "3,5", "--seed", "1", "--out", str(tmp_path / "y.csv")]) == 0
    assert abs(read_table(tmp_path / "y.csv", "weyl").value(0, 0) - 1) < 1e-12
    assert "max |diff|" in capsys.readouterr().out


def test_verify_command(capsys):
    assert main(["verify", "--budget", "27"]) == 0
    assert "checks passed" in capsys.readouterr().out


def test_bench_command(tmp_path, monkeypatch):
    monkeypatch.setenv("ODDFFT_OUT_DIR", str(tmp_path / "env"))
    assert main(["bench", "--suite", "pfa", "--quick", "--reps", "3"]) == 0
    rows = read_bench(tmp_path / "env" / "bench_pfa.csv")
    assert len(rows) == 8
    assert main(["bench", "--suite", "weyl", "--quick", "--reps", "3",
                 "--out-dir", str(tmp_path / "o")]) == 0
    assert [r["backend"] for r in read_bench(tmp_path / "o" / "bench_weyl.csv")] == \
        ["weyl-direct", "weyl-fast-15x7", "weyl-fast-3x5x7"]
