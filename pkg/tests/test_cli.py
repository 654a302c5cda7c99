"""End-to-end runs of the bicert command through main()."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import pytest

import bicert.cli as cli
from bicert import Bipartition, CheckOutcome, OddCycle

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def even_file(tmp_path):
    path = tmp_path / "even.txt"
    path.write_text("n 4\n0 1\n1 2\n2 3\n3 0\n")
    return str(path)


@pytest.fixture
def odd_file(tmp_path):
    path = tmp_path / "odd.txt"
    path.write_text("0 1\n1 2\n2 0\n")
    return str(path)


class TestCheckExitCodes:
    def test_bipartite_is_zero(self, even_file, capsys):
        assert cli.main(["check", even_file]) == 0
        assert "verdict=bipartite" in capsys.readouterr().out

    def test_odd_cycle_is_one(self, odd_file, capsys):
        assert cli.main(["check", odd_file]) == 1
        assert "verdict=odd_cycle" in capsys.readouterr().out

    def test_missing_file_is_two(self, tmp_path, capsys):
        assert cli.main(["check", str(tmp_path / "absent.txt")]) == 2
        assert "error:" in capsys.readouterr().err

    def test_parse_error_is_two(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("0 x\n")
        assert cli.main(["check", str(path)]) == 2
        assert "line 1" in capsys.readouterr().err

    def test_unknown_algo_is_two(self, even_file, capsys):
        assert cli.main(["check", even_file, "--algo", "bogus"]) == 2
        capsys.readouterr()

    def test_unknown_subcommand_is_two(self, capsys):
        assert cli.main(["frobnicate"]) == 2
        capsys.readouterr()

    def test_rejected_certificate_is_three(self, odd_file, capsys, monkeypatch):
        def broken(g, algorithm):
            return CheckOutcome(bipartition=Bipartition([0] * g.n)), 0

        monkeypatch.setattr(cli, "run_instrumented", broken)
        assert cli.main(["check", odd_file, "--algo", "growth"]) == 3
        assert "internal error:" in capsys.readouterr().err

    def test_disagreement_is_three(self, even_file, capsys, monkeypatch):
        flip_flop = iter(range(100))

        def fickle(g, algorithm):
            if next(flip_flop) % 2 == 0:
                return CheckOutcome(bipartition=Bipartition([0] * g.n)), 0
            return CheckOutcome(odd_cycle=OddCycle([0], [0])), 0

        monkeypatch.setattr(cli, "run_instrumented", fickle)
        monkeypatch.setattr(cli, "verify_outcome", lambda g, o: True)
        assert cli.main(["check", even_file]) == 3
        assert "disagree" in capsys.readouterr().err


class TestCheckOutput:
    def test_all_runs_every_algorithm(self, even_file, capsys):
        cli.main(["check", even_file])
        out = capsys.readouterr().out
        for name in ("growth", "flip", "dsu", "forest"):
            assert f"algorithm={name}" in out

    def test_single_algorithm(self, even_file, capsys):
        cli.main(["check", even_file, "--algo", "dsu"])
        out = capsys.readouterr().out
        assert out.count("algorithm=") == 1

    def test_bipartite_text_lists_sides(self, even_file, capsys):
        cli.main(["check", even_file, "--algo", "growth"])
        out = capsys.readouterr().out
        assert "side0: 0 2" in out
        assert "side1: 1 3" in out

    def test_cycle_text_lists_vertices(self, odd_file, capsys):
        cli.main(["check", odd_file, "--algo", "dsu"])
        assert "cycle: " in capsys.readouterr().out

    def test_json_shape(self, even_file, capsys):
        cli.main(["check", even_file, "--json"])
        reports = json.loads(capsys.readouterr().out)
        assert [r["algorithm"] for r in reports] == ["growth", "flip", "dsu", "forest"]
        for r in reports:
            assert r["verdict"] == "bipartite"
            assert r["n"] == 4 and r["m"] == 4
            # sides may be swapped between algorithms but always split the cycle
            assert sorted(r["sides"]["side0"] + r["sides"]["side1"]) == [0, 1, 2, 3]
            assert {tuple(sorted(r["sides"]["side0"]))} <= {(0, 2), (1, 3)}
            assert "elapsed_ns" not in r

    def test_json_cycle_field(self, odd_file, capsys):
        cli.main(["check", odd_file, "--json", "--algo", "forest"])
        (report,) = json.loads(capsys.readouterr().out)
        assert report["cycle"] == [1, 0, 2] or len(report["cycle"]) == 3

    def test_timing_is_opt_in(self, even_file, capsys):
        cli.main(["check", even_file])
        assert "elapsed_ns" not in capsys.readouterr().out
        cli.main(["check", even_file, "--timing"])
        assert "elapsed_ns" in capsys.readouterr().out

    def test_dot_file_written(self, even_file, tmp_path, capsys):
        target = tmp_path / "out.dot"
        cli.main(["check", even_file, "--dot", str(target)])
        capsys.readouterr()
        text = target.read_text()
        assert text.startswith("graph certified {")
        assert "fillcolor" in text

    def test_dimacs_format_flag(self, tmp_path, capsys):
        path = tmp_path / "g.col"
        path.write_text("p edge 3 3\ne 1 2\ne 2 3\ne 3 1\n")
        assert cli.main(["check", str(path), "--format", "dimacs"]) == 1
        capsys.readouterr()

    def test_repeated_runs_are_byte_identical(self, odd_file, capsys):
        cli.main(["check", odd_file])
        first = capsys.readouterr().out
        cli.main(["check", odd_file])
        assert capsys.readouterr().out == first


class TestGen:
    def test_golden_bytes(self, capsys):
        assert cli.main(
            ["gen", "--kind", "random", "--n", "12", "--m", "20", "--seed", "7"]
        ) == 0
        expected = (GOLDEN / "random_n12_m20_s7.txt").read_text()
        assert capsys.readouterr().out == expected

    def test_gen_pipes_into_check(self, tmp_path, capsys):
        cli.main(["gen", "--kind", "planted-bipartite", "--left", "4",
                  "--right", "4", "--m", "12", "--seed", "9"])
        path = tmp_path / "g.txt"
        path.write_text(capsys.readouterr().out)
        assert cli.main(["check", str(path)]) == 0
        capsys.readouterr()

    def test_dimacs_output(self, capsys):
        cli.main(["gen", "--kind", "forest", "--n", "4", "--seed", "0",
                  "--format", "dimacs"])
        assert capsys.readouterr().out.startswith("p edge 4 ")

    def test_conflicting_size_flags_rejected(self, capsys):
        assert cli.main(
            ["gen", "--kind", "random", "--n", "5", "--m", "3", "--p", "0.5"]
        ) == 2
        capsys.readouterr()

    def test_forest_rejects_m(self, capsys):
        assert cli.main(["gen", "--kind", "forest", "--n", "5", "--m", "3"]) == 2
        capsys.readouterr()

    def test_same_seed_same_bytes(self, capsys):
        argv = ["gen", "--kind", "random", "--n", "30", "--p", "0.2", "--seed", "5"]
        cli.main(argv)
        first = capsys.readouterr().out
        cli.main(argv)
        assert capsys.readouterr().out == first


class TestBench:
    def run(self, argv, capsys):
        code = cli.main(argv)
        out = capsys.readouterr().out
        return code, list(csv.reader(io.StringIO(out)))

    def test_csv_contract(self, capsys):
        code, rows = self.run(
            ["bench", "--kinds", "random", "forest", "--sizes", "8,12",
             "--seeds", "1", "2", "--repeat", "2"],
            capsys,
        )
        assert code == 0
        assert rows[0] == list(cli.BENCH_CSV_HEADER)
        body = rows[1:]
        # 2 kinds x 1 size x 2 seeds x 2 reps x 4 algorithms
        assert len(body) == 32
        keys = [(r[0], r[1], int(r[2]), int(r[3]), int(r[4]), int(r[5]))
                for r in body]
        assert keys == sorted(keys)
        for r in body:
            assert r[0] in ("growth", "flip", "dsu", "forest")
            assert r[6] in ("bipartite", "odd_cycle")
            assert int(r[7]) >= 0 and int(r[8]) >= 0

    def test_verdicts_agree_within_cell(self, capsys):
        code, rows = self.run(
            ["bench", "--kinds", "random", "--sizes", "6,9", "10,15",
             "--seeds", "0", "1", "2"],
            capsys,
        )
        assert code == 0
        cells: dict[tuple, set] = {}
        for r in rows[1:]:
            cells.setdefault((r[1], r[2], r[3], r[4]), set()).add(r[6])
        for verdicts in cells.values():
            assert len(verdicts) == 1

    def test_planted_kinds_get_expected_verdicts(self, capsys):
        code, rows = self.run(
            ["bench", "--kinds", "planted-bipartite", "planted-odd-cycle",
             "--sizes", "20,30", "--seeds", "3", "--cycle-len", "5"],
            capsys,
        )
        assert code == 0
        verdicts = {r[1]: r[6] for r in rows[1:]}
        assert verdicts["planted_bipartite"] == "bipartite"
        assert verdicts["planted_odd_cycle"] == "odd_cycle"

    def test_malformed_size_is_usage_error(self, capsys):
        assert cli.main(["bench", "--kinds", "random", "--sizes", "8",
                         "--seeds", "1"]) == 2
        capsys.readouterr()

    def test_stable_apart_from_timing(self, capsys):
        argv = ["bench", "--kinds", "forest", "--sizes", "12,0", "--seeds", "4"]
        _, first = self.run(argv, capsys)
        _, second = self.run(argv, capsys)
        strip = lambda rows: [r[:7] + r[8:] for r in rows]
        assert strip(first) == strip(second)
