import json

import pytest
from click.testing import CliRunner

from lanke.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def run(runner, *args):
    return runner.invoke(main, [str(a) for a in args])


def test_dim(runner):
    result = run(runner, "dim", 4, 2)
    assert result.exit_code == 0
    assert result.stdout.strip() == "14"
    assert run(runner, "dim", 1, 5).stdout.strip() == "1"


def test_decompose_json_is_deterministic(runner):
    first = run(runner, "decompose", 3, 3, "--json")
    second = run(runner, "decompose", 3, 3, "--json")
    assert first.exit_code == 0
    assert first.stdout == second.stdout
    doc = json.loads(first.stdout)
    assert doc["command"] == "decompose"
    assert doc["mode"] == "multimodular-verified"
    assert doc["parameters"] == {"n": 3, "k": 3}


def test_decompose_rational_mode(runner):
    doc = json.loads(run(runner, "decompose", 2, 3, "--json", "--mode", "rational").stdout)
    assert doc["mode"] == "rational"
    fast = json.loads(run(runner, "decompose", 2, 3, "--json").stdout)
    assert doc["payload"] == fast["payload"]


def test_decompose_text(runner):
    assert run(runner, "decompose", 2, 1).stdout.strip() == "1^2"


def test_kw(runner):
    result = run(runner, "kw", 3)
    assert result.exit_code == 0
    assert result.stdout.strip() == "2,1\t1"
    assert run(runner, "kw", 5).stdout.count("\n") == 5


def test_kw_rejects_non_coprime(runner):
    result = run(runner, "kw", 4, 2)
    assert result.exit_code == 2
    assert "coprime" in result.stderr


def test_cap_exceeded(runner):
    result = run(runner, "dim", 5, 4)
    assert result.exit_code == 3
    result = run(runner, "dim", 3, 3, "--max-degree", 5)
    assert result.exit_code == 3


def test_usage_error(runner):
    assert run(runner, "dim", 0, 2).exit_code == 2
    assert run(runner, "verify", "nonsense").exit_code == 2


def test_conjecture_scan(runner):
    doc = json.loads(run(runner, "conjecture-scan", 2, 3, "--json").stdout)
    assert doc["payload"]["columns"] == [2]
    doc = json.loads(run(runner, "conjecture-scan", 3, 3, "--json").stdout)
    assert doc["payload"]["columns"] == []


def test_verify_small_suites(runner):
    result = run(runner, "verify", "theorem2_3", "--max-size", 4)
    assert result.exit_code == 0
    assert result.stdout.strip().endswith("22/22 passed")
    result = run(runner, "verify", "table1", "--max-size", 5, "--json")
    doc = json.loads(result.stdout)
    assert doc["payload"]["passed"] == doc["payload"]["total"] > 0


def test_verify_threads_keep_order(runner):
    serial = run(runner, "verify", "lemma2_2", "--max-size", 4)
    threaded = run(runner, "verify", "lemma2_2", "--max-size", 4, "--threads", 2)
    assert serial.exit_code == threaded.exit_code == 0
    assert serial.stdout == threaded.stdout


def test_version(runner):
    assert run(runner, "--version").exit_code == 0
