"""Command-line interface: output formats, exit codes, determinism."""
from __future__ import annotations

import json
from fractions import Fraction

import pytest

from aocount.cli import main, parse_exact_scalar, parse_parts
from aocount.exact import h_s_exact
from aocount.partition_sums import partition_sum
from aocount.tables import canonical_table_id, table_ids


def run_cli(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExactCommands:
    def test_ao(self, capsys):
        code, out, _ = run_cli(capsys, "exact", "ao", "--parts", "3,3")
        assert code == 0
        assert out == "230\n"

    def test_hs_rational_order(self, capsys):
        code, out, _ = run_cli(capsys, "exact", "hs", "--parts", "2,1", "--s", "3/2")
        assert code == 0
        assert out == f"{h_s_exact((2, 1), Fraction(3, 2))}\n"

    def test_chromatic(self, capsys):
        code, out, _ = run_cli(capsys, "exact", "chromatic", "--parts", "2,2",
                               "--q", "3")
        assert code == 0
        assert out == "18\n"

    def test_one_large_part(self, capsys):
        code, out, _ = run_cli(capsys, "closed-form", "one-large-part",
                               "--n", "6", "--large", "3")
        assert code == 0
        assert out == "384\n"


class TestPartitionSumCommand:
    def test_radius_truncation(self, capsys):
        # R = 1.0 at n = 8 truncates parts at floor(sqrt(8)) = 2
        code, out, err = run_cli(capsys, "partition-sum", "--n", "8", "--R", "1.0")
        assert code == 0
        assert out == f"{partition_sum(8, max_part=2)}\n"
        assert "part size 1/2" in err  # progress stays on stderr

    def test_plain_sum(self, capsys):
        code, out, _ = run_cli(capsys, "partition-sum", "--n", "3")
        assert code == 0
        assert out == "11\n"

    def test_distinct_flag(self, capsys):
        code, out, _ = run_cli(capsys, "partition-sum", "--n", "4", "--distinct")
        assert code == 0
        assert out == "9\n"


class TestFloatCommands:
    def test_constants_format(self, capsys):
        code, out, _ = run_cli(capsys, "constants", "--kind", "bose")
        assert code == 0
        assert out == "c 0.764996442280\nC 2.158752005658\n"

    def test_quadratic_model_output(self, capsys):
        code, out, _ = run_cli(capsys, "quadratic-model", "--n", "50")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("log_Z ")
        assert lines[1].startswith("log_Z_per_sqrt_n ")

    def test_far_tail(self, capsys):
        code, out, _ = run_cli(capsys, "asymptotic", "far-tail", "--A", "2.0")
        assert code == 0
        assert out == "0.565099660323728\n"

    def test_asymptotic_ingredient_listing(self, capsys):
        code, out, _ = run_cli(capsys, "asymptotic", "turan", "--N", "30",
                               "--p", "3")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("log_value ")
        keys = [line.split()[0] for line in lines[1:]]
        assert keys == sorted(keys)
        assert "L" in keys

    def test_blowup_command(self, capsys):
        code, out, _ = run_cli(capsys, "asymptotic", "blowup", "--base", "cycle",
                               "--p", "5", "--N", "50")
        assert code == 0
        assert out.startswith("log_value ")
        assert "\ntau " in out

    def test_mc_runs_deterministic_output(self, capsys):
        argv = ("mc", "runs", "--parts", "2,2", "--samples", "200", "--seed", "7")
        code_a, out_a, _ = run_cli(capsys, *argv)
        code_b, out_b, _ = run_cli(capsys, *argv)
        assert code_a == code_b == 0
        assert out_a == out_b
        assert out_a.splitlines()[2] == "samples 200"
        assert out_a.splitlines()[3] == "seed 7"


class TestVerifyCommand:
    def test_single_table_passes(self, capsys):
        code, out, err = run_cli(capsys, "verify", "saddle-constants")
        assert code == 0
        assert "saddle-constants: 20/20 rows pass" in out
        assert out.rstrip().endswith("summary: 20/20 rows pass")
        assert "wall time" in err  # timing never pollutes stdout

    def test_stdout_byte_identical_across_runs(self, capsys):
        code_a, out_a, _ = run_cli(capsys, "verify", "saddle-constants")
        code_b, out_b, _ = run_cli(capsys, "verify", "saddle-constants")
        assert code_a == code_b == 0
        assert out_a == out_b

    def test_table_prefix_accepted(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "table-tutte-ratio")
        assert code == 0
        assert "tutte-ratio: 8/8 rows pass" in out

    def test_json_output(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "bipartite-proportion", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["summary"]["passed"] is True
        assert payload["summary"]["failures"] == 0
        table = payload["tables"][0]
        assert table["table_id"] == "bipartite-proportion"
        assert {"inputs", "got", "expected", "tol", "pass"} <= set(table["rows"][0])

    def test_unknown_table_exits_two(self, capsys):
        code, _, err = run_cli(capsys, "verify", "no-such-table")
        assert code == 2
        assert "unknown table" in err


class TestErrorPaths:
    def test_missing_seed_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["mc", "runs", "--parts", "2,2", "--samples", "100"])
        assert exc.value.code == 2

    def test_malformed_parts_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["exact", "ao", "--parts", "3,x"])
        assert exc.value.code == 2

    def test_nonpositive_parts_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["exact", "ao", "--parts", "0,3"])
        assert exc.value.code == 2

    def test_domain_error_exits_one(self, capsys):
        code, _, err = run_cli(capsys, "asymptotic", "proportion",
                               "--parts", "30,70", "--alphas", "0.2,0.2")
        assert code == 1
        assert "error:" in err

    def test_infeasible_constants_exit_one(self, capsys):
        code, _, err = run_cli(capsys, "constants", "--kind", "fermi", "--R", "1.0")
        assert code == 1
        assert "error:" in err


class TestParsers:
    def test_parse_parts(self):
        assert parse_parts("3,3") == (3, 3)
        assert parse_parts("5") == (5,)
        assert parse_parts("1,2, 3") == (1, 2, 3)

    def test_parse_exact_scalar(self):
        assert parse_exact_scalar("3") == 3 and isinstance(parse_exact_scalar("3"), int)
        assert parse_exact_scalar("3/2") == Fraction(3, 2)
        assert parse_exact_scalar("1.5") == 1.5

    def test_table_name_canonicalization(self):
        assert canonical_table_id("table-fixed-part") == "fixed-part"
        assert canonical_table_id("fixed-part") == "fixed-part"
        assert len(table_ids()) == 10
        with pytest.raises(KeyError):
            canonical_table_id("nope")
