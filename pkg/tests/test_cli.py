import json
import subprocess
import sys
from pathlib import Path

import pytest

from setclass import cli

ROOT = Path(__file__).resolve().parent.parent
SCRIPTS = sorted((ROOT / "acceptance").glob("*.scl"))


def run(*lines, **kw):
    return cli.run_lines(list(lines), **kw)


def test_closure_transcript_shows_the_gap():
    res = run("universe X 3", "class S = [{1},{1,2},{1,2,3}]", "closure B S", "closure ring S")
    assert res.status == 0
    lines = dict(l.split(" = ", 1) for l in res.transcript.splitlines())
    assert "{1,3}" not in lines["B(S)"]
    assert "{1,3}" in lines["ring(S)"]


def test_empty_script():
    res = run()
    assert res.status == 0 and res.transcript == ""
    res = run("", "# only a comment", "   ")
    assert res.status == 0 and res.transcript == ""


def test_size_cap():
    res = run("universe X 30")
    assert res.status == cli.EXIT_RESOURCE
    assert "size cap" in res.diagnostic and "<script>:1:" in res.diagnostic


def test_exit_codes():
    assert run("universe X 2", "class S = [{1}]", "assert {2} in S").status == cli.EXIT_ASSERT
    assert run("frobnicate").status == cli.EXIT_USAGE
    assert run("universe X 2", "print T").status == cli.EXIT_USAGE
    assert run("universe X 2", "class S = [{7}]").status == cli.EXIT_USAGE
    assert run("universe X 2", "class S = [{1}", ).status == cli.EXIT_USAGE
    assert run("universe X 8", "ramsey 2 2 3 all").status == cli.EXIT_RESOURCE
    # preconditions from the library surface as usage errors
    assert run("universe X 2", "class S = [{1}]", "primes S").status == cli.EXIT_USAGE


def test_first_error_stops_the_run():
    res = run("universe X 2", "class S = [{1}]", "assert {2} in S", "print S")
    assert res.status == 1
    assert res.diagnostic.startswith("<script>:3:")
    assert "ok:" not in res.transcript and "{1}" not in res.transcript.split("\n")[-1]


def test_rebinding_needs_bang_or_overwrite():
    assert run("universe X 2", "class S = [{1}]", "class S = [{2}]").status == cli.EXIT_USAGE
    assert run("universe X 2", "class S = [{1}]", "class! S = [{2}]", "assert {2} in S").status == 0
    assert run("universe X 2", "class S = [{1}]", "class S = [{2}]", overwrite=True).status == 0


@pytest.mark.parametrize("name", sorted(cli.COMMANDS))
def test_help_for_every_command(name):
    res = run(f"help {name}")
    assert res.status == 0 and cli.COMMANDS[name].usage in res.transcript
    assert cli.main(["help", name]) == 0


def test_help_lists_every_command(capsys):
    assert cli.main(["help"]) == 0
    out = capsys.readouterr().out
    assert all(c.usage in out for c in cli.COMMANDS.values())


@pytest.mark.parametrize("path", SCRIPTS, ids=lambda p: p.name)
def test_acceptance_scripts_pass(path):
    res = cli.run_script(path)
    assert res.status == 0, res.diagnostic
    assert res.transcript.count("ok: ") == path.read_text().count("\nassert ")


@pytest.mark.parametrize("path", SCRIPTS, ids=lambda p: p.name)
def test_transcripts_are_deterministic(path):
    assert cli.run_script(path).transcript == cli.run_script(path).transcript


def test_missing_script_file():
    res = cli.run_script("/nonexistent/x.scl")
    assert res.status == cli.EXIT_USAGE


def test_console_script_end_to_end(tmp_path):
    script = tmp_path / "s.scl"
    script.write_text("universe X 2\nclass P = powerset\nstone P as SP\nexport SP json > sp.json\n")
    proc = subprocess.run([sys.executable, "-m", "setclass.cli", "run", str(script)], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    doc = json.loads((tmp_path / "sp.json").read_text())
    assert doc["schema"] == "setclass/1" and doc["kind"] == "stone_space"
    proc = subprocess.run([sys.executable, "-m", "setclass.cli", "eval", "universe X 2", "assert bell(3) == 4"],
                          capture_output=True, text=True)
    assert proc.returncode == 1 and "assertion failed" in proc.stderr
