import pytest

from f2q import h2_integral_path
from f2q.cli import EXIT_PARSE, EXIT_PRECONDITION, EXIT_VALIDATION, main


@pytest.fixture()
def hbk_file(tmp_path):
    path = tmp_path / "hbk.txt"
    assert main(["hamiltonian", "--integrals", h2_integral_path(),
                 "--encoding", "bk", "--out", str(path)]) == 0
    return path


def test_sets_published_values(capsys):
    assert main(["sets", "--n", "8"]) == 0
    out = capsys.readouterr().out
    rows = {line.split()[0]: line for line in out.splitlines()[1:]}
    assert rows["7"].split()[1:] == ["{3,5,6}", "{}", "{3,5,6}", "{}"]
    assert rows["0"].split()[1:] == ["{}", "{1,3,7}", "{}", "{}"]
    assert rows["4"].split()[1:] == ["{3}", "{5,7}", "{}", "{3}"]


def test_sets_doubling(capsys):
    assert main(["sets", "--n", "16"]) == 0
    out = capsys.readouterr().out
    assert "{1,3,7,15}" in out


def test_sets_single_orbital(capsys):
    assert main(["sets", "--n", "1"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 2


def test_sets_range_check(capsys):
    assert main(["sets", "--n", "0"]) == EXIT_PRECONDITION
    assert main(["sets", "--n", "99999"]) == EXIT_PRECONDITION


def test_hamiltonian_outputs(capsys):
    assert main(["hamiltonian", "--integrals", h2_integral_path(), "--encoding", "bk"]) == 0
    out = capsys.readouterr().out
    lines = out.strip().splitlines()
    assert len(lines) == 15
    constant = next(line for line in lines if line.endswith("IIII"))
    assert float(constant.split()[0]) == pytest.approx(-0.81261, abs=5e-7)
    assert main(["hamiltonian", "--integrals", h2_integral_path(), "--encoding", "jw"]) == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 15


def test_hamiltonian_zero_integrals(tmp_path, capsys):
    path = tmp_path / "zero.int"
    path.write_text("n 2\n")
    assert main(["hamiltonian", "--integrals", str(path)]) == 0
    assert capsys.readouterr().out == ""


def test_hamiltonian_parse_error(tmp_path, capsys):
    path = tmp_path / "bad.int"
    path.write_text("n 2\nh1 0 zero 1.0\n")
    assert main(["hamiltonian", "--integrals", str(path)]) == EXIT_PARSE
    assert "line 2" in capsys.readouterr().err


def test_hamiltonian_validation_error(tmp_path, capsys):
    path = tmp_path / "nonherm.int"
    path.write_text("n 2\nh1 0 1 0.5\n")
    assert main(["hamiltonian", "--integrals", str(path)]) == EXIT_VALIDATION


def test_hamiltonian_missing_file(capsys):
    assert main(["hamiltonian", "--integrals", "/nonexistent.int"]) == EXIT_PARSE


def test_count_totals(hbk_file, capsys):
    assert main(["count", "--hamiltonian", str(hbk_file), "--order", "1", "--steps", "1"]) == 0
    out = capsys.readouterr().out
    assert "sqg 10 cnot 24 total 34" in out
    assert "sqg 20 cnot 20 total 40" in out
    assert "total 74" in out
    assert main(["count", "--hamiltonian", str(hbk_file), "--order", "1", "--steps", "3"]) == 0
    assert "total 222" in capsys.readouterr().out


def test_count_jw_total(tmp_path, capsys):
    path = tmp_path / "hjw.txt"
    main(["hamiltonian", "--integrals", h2_integral_path(), "--encoding", "jw",
          "--out", str(path)])
    capsys.readouterr()
    assert main(["count", "--hamiltonian", str(path)]) == 0
    assert "total 82" in capsys.readouterr().out


def test_count_parse_error(tmp_path, capsys):
    bad = tmp_path / "junk.txt"
    bad.write_text("garbage\n")
    assert main(["count", "--hamiltonian", str(bad)]) == EXIT_PARSE


def test_count_precondition(hbk_file, capsys):
    assert main(["count", "--hamiltonian", str(hbk_file), "--order", "2",
                 "--ordering", "interleaved"]) == EXIT_PRECONDITION


def test_sweep_single_row(capsys):
    assert main(["sweep", "--integrals", h2_integral_path(), "--encodings", "bk",
                 "--orders", "1", "--orderings", "naive", "--max-steps", "1"]) == 0
    out = capsys.readouterr().out
    lines = out.strip().splitlines()
    assert len(lines) == 2  # header + one data row
    assert lines[1].startswith("bravyi-kitaev,1,naive,1,30,44,74,")


def test_sweep_crossings(tmp_path, capsys):
    out_path = tmp_path / "sweep.csv"
    assert main(["sweep", "--integrals", h2_integral_path(), "--orders", "1",
                 "--max-steps", "12", "--out", str(out_path)]) == 0
    captured = capsys.readouterr()
    assert "bravyi-kitaev order 1 naive" in captured.out and "11 steps" in captured.out
    assert "jordan-wigner order 1 interleaved" in captured.out
    header = out_path.read_text().splitlines()[0]
    assert header.startswith("encoding,order,ordering,steps,")


def test_sweep_deterministic(tmp_path):
    args = ["sweep", "--integrals", h2_integral_path(), "--encodings", "bk",
            "--orders", "1,2", "--max-steps", "4"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_sweep_figures(tmp_path, capsys):
    out_path = tmp_path / "sweep.csv"
    assert main(["sweep", "--integrals", h2_integral_path(), "--orders", "1",
                 "--max-steps", "4", "--out", str(out_path), "--figures"]) == 0
    assert (tmp_path / "sweep_error_vs_gates.png").stat().st_size > 0
    assert (tmp_path / "sweep_gate_savings.png").stat().st_size > 0


def test_sweep_figures_require_out(capsys):
    assert main(["sweep", "--integrals", h2_integral_path(), "--orders", "1",
                 "--max-steps", "1", "--figures"]) == EXIT_PRECONDITION


def test_sweep_parity_encoding(capsys):
    assert main(["sweep", "--integrals", h2_integral_path(), "--encodings", "parity",
                 "--orders", "1", "--orderings", "naive", "--max-steps", "2"]) == 0
    out = capsys.readouterr().out
    assert out.count("parity,1,naive") == 2
