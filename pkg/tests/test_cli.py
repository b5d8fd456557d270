from __future__ import annotations

import json
import subprocess
import sys

import pytest

from graphcert.cli import build_parser, exit_code_for, main
from graphcert.families import cycle, g58, kneser, ramsey_r35
from graphcert.formats import parse_dimacs, parse_graph6, to_graph6
from graphcert.verify import CheckReport, InstanceResult


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def jsonl(out):
    return [json.loads(line) for line in out.strip().splitlines()]


def test_generate_graph6(capsys):
    code, out, _ = run_cli(capsys, "generate", "g58")
    assert code == 0
    assert parse_graph6(out.strip()) == g58()


def test_generate_dimacs(capsys):
    code, out, _ = run_cli(capsys, "generate", "cycle:5", "--format", "dimacs")
    assert code == 0
    assert parse_dimacs(out) == cycle(5)


def test_generate_schrijver_pentagon(capsys):
    code, out, _ = run_cli(capsys, "generate", "schrijver:2,1")
    assert code == 0
    g = parse_graph6(out.strip())
    assert g.n == 5
    assert all(g.degree(v) == 2 for v in range(5))


def test_generate_bad_spec_exits_2(capsys):
    code, _, err = run_cli(capsys, "generate", "mystery:1")
    assert code == 2
    assert "error" in err


def test_generate_to_file(capsys, tmp_path):
    target = tmp_path / "out.g6"
    code, out, _ = run_cli(capsys, "generate", "kneser:2,1", "--out", str(target))
    assert code == 0
    assert out == ""
    assert parse_graph6(target.read_text().strip()) == kneser(2, 1)


def test_invariants_spec(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--spec", "g58")
    assert code == 0
    (record,) = jsonl(out)
    assert record["label"] == "g58"
    assert record["n"] == 15
    assert record["omega"] == 2
    assert record["alpha"] == 5
    assert record["chi"] == 3
    assert record["theta"] == 8
    assert record["nu"] == 7
    assert record["certificates"]["theta"]["kind"] == "clique-cover"
    assert len(record["certificates"]["theta"]["cliques"]) == 8


def test_invariants_input_file(capsys, tmp_path):
    src = tmp_path / "graphs.g6"
    src.write_text(to_graph6(cycle(5)) + "\n" + to_graph6(ramsey_r35()) + "\n")
    code, out, _ = run_cli(capsys, "invariants", "--input", str(src))
    assert code == 0
    records = jsonl(out)
    assert [r["n"] for r in records] == [5, 13]
    assert [r["theta"] for r in records] == [3, 7]


def test_invariants_requires_a_source(capsys):
    code, _, err = run_cli(capsys, "invariants")
    assert code == 2
    assert "need --spec or --input" in err


def test_verify_family_range(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "thm3col", "--family", "extremalC", "--range", "0..15"
    )
    assert code == 0
    lines = jsonl(out)
    assert lines[0]["check"] == "thm3col"
    assert lines[-1]["outcome"] == "all-pass"
    assert lines[-1]["counts"]["pass"] == 16
    labels = [l["label"] for l in lines if l["type"] == "instance"]
    assert labels[0] == "extremalC:0"
    assert labels[-1] == "extremalC:15"


def test_verify_exhaustive(capsys):
    code, out, _ = run_cli(capsys, "verify", "gap912", "--exhaustive-n", "4")
    assert code == 0
    summary = jsonl(out)[-1]
    assert summary["outcome"] == "all-pass"
    assert summary["counts"]["pass"] == 76


def test_verify_schrijver_pairs(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "schrijver-chi", "--pairs", "2,1;2,2;3,1"
    )
    assert code == 0
    lines = jsonl(out)
    assert lines[-1]["counts"]["pass"] == 6
    chi = {l["label"]: l["values"]["chi"] for l in lines if l["type"] == "instance"}
    assert chi["kneser:2,1"] == 3
    assert chi["schrijver:2,2"] == 4


def test_verify_kneser_alpha_pair(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "kneser-alpha", "--pairs", "2,1", "--samples", "20"
    )
    assert code == 0
    lines = jsonl(out)
    assert lines[0]["host"] == "kneser:2,1"
    assert lines[-1]["outcome"] == "all-pass"


def test_verify_input_file_skips_wrong_premise(capsys, tmp_path):
    src = tmp_path / "odd.g6"
    src.write_text(to_graph6(cycle(5)) + "\n")
    code, out, _ = run_cli(capsys, "verify", "konig", "--input", str(src))
    assert code == 0
    lines = jsonl(out)
    inst = [l for l in lines if l["type"] == "instance"][0]
    assert inst["status"] == "skip"
    assert inst["label"].startswith("graph6:")


def test_verify_evc_cover_with_instances(capsys, tmp_path):
    src = tmp_path / "tf.g6"
    src.write_text(to_graph6(cycle(5)) + "\n" + to_graph6(g58()) + "\n")
    code, out, _ = run_cli(
        capsys, "verify", "evc-cover", "--input", str(src), "--c", "2"
    )
    assert code == 0
    lines = jsonl(out)
    assert lines[0]["c"] == 2
    assert "premise_note" in lines[0]
    assert lines[-1]["outcome"] == "all-pass"


def test_verify_default_small_sample(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "gallai-factor", "--samples", "15", "--seed", "1"
    )
    assert code == 0
    assert jsonl(out)[-1]["outcome"] == "all-pass"


def test_verify_report_to_file(capsys, tmp_path):
    target = tmp_path / "report.jsonl"
    code, out, _ = run_cli(
        capsys,
        "verify",
        "gallai-theta",
        "--family",
        "cycle",
        "--range",
        "5..7",
        "--out",
        str(target),
    )
    assert code == 0
    assert out == ""
    lines = [json.loads(l) for l in target.read_text().strip().splitlines()]
    assert lines[0]["check"] == "gallai-theta"
    assert lines[-1]["outcome"] == "all-pass"


def test_verify_rejects_bad_range(capsys):
    code, _, err = run_cli(
        capsys, "verify", "thm3col", "--family", "extremalC", "--range", "0-15"
    )
    assert code == 2
    assert "A..B" in err


def test_verify_rejects_unknown_check():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "not-a-check"])
    assert exc.value.code == 2


def test_explore_runs_small(capsys):
    code, out, _ = run_cli(
        capsys, "explore", "8/5", "--samples", "10", "--max-n", "12"
    )
    assert code == 0
    lines = jsonl(out)
    assert lines[0]["check"] == "8/5"
    insts = {l["label"]: l for l in lines if l["type"] == "instance"}
    assert insts["g58"]["values"]["exceeds_old_bound"] is True
    assert lines[-1]["outcome"] == "all-pass"


def test_explore_alias_name(capsys):
    code, out, _ = run_cli(
        capsys, "explore", "eight-fifths", "--samples", "5", "--max-n", "10"
    )
    assert code == 0
    assert jsonl(out)[0]["check"] == "8/5"


def test_explore_input_file(capsys, tmp_path):
    src = tmp_path / "in.g6"
    src.write_text(to_graph6(cycle(5)) + "\n")
    code, out, _ = run_cli(capsys, "explore", "8/5", "--input", str(src))
    assert code == 0
    assert jsonl(out)[-1]["counts"]["pass"] == 1


def test_budget_flags_flow_through(capsys):
    code, _, err = run_cli(
        capsys,
        "invariants",
        "--spec",
        "gnp:40,0.5,seed=1",
        "--budget-nodes",
        "50",
    )
    assert code == 2
    assert "budget" in err.lower() or "node" in err.lower()


def test_exit_code_for_violation():
    bad = CheckReport(
        "konig", {}, [InstanceResult("x", 2, "fail")], "t"
    )
    good = CheckReport("konig", {}, [InstanceResult("x", 2, "pass")], "t")
    open_q = CheckReport("konig", {}, [InstanceResult("x", 2, "undecided")], "t")
    assert exit_code_for(bad) == 1
    assert exit_code_for(good) == 0
    assert exit_code_for(open_q) == 0


def test_parser_rejects_missing_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "graphcert.cli", "generate", "cycle:5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert parse_graph6(proc.stdout.strip()) == cycle(5)


def test_determinism_across_processes(capsys):
    args = ["verify", "deficiency", "--samples", "20", "--seed", "4"]
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)

    def strip_stamp(text):
        lines = [json.loads(l) for l in text.strip().splitlines()]
        lines[0].pop("generated_at")
        return lines

    assert strip_stamp(first) == strip_stamp(second)
