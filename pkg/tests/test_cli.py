import json
import sys
import pytest
import fastcore.test as fct

from cjm_sign_posets.cli import parse_command, execute, main
from cjm_sign_posets.core.guards import GuardLimits
from cjm_sign_posets.core.poset import Family
from cjm_sign_posets.core.poset_store import InMemoryPosetStore
from .test_exports import R31_DOT


def run(command, *args, **flags):
    return execute(parse_command(command, list(args), **flags))


def test_parse_positionals():
    cfg = parse_command("build", ["3", "1", "P", "dot"])
    fct.test_eq((cfg.n, cfg.l, cfg.family, cfg.fmt), (3, 1, Family.P, "dot"))
    cfg = parse_command("verify", ["el", "5", "1"])
    fct.test_eq((cfg.get("kind"), cfg.n, cfg.l), ("el", 5, 1))
    cfg = parse_command("vectors", ["3", "1", "flagh"])
    fct.test_eq(cfg.get("which"), "flagh")
    cfg = parse_command("sweep", ["8"])
    fct.test_eq((cfg.n, cfg.fmt), (8, "csv"))


def test_flags_override_positionals(monkeypatch):
    cfg = parse_command("build", ["3", "1"], n=4, family="R-hat", fmt="json", jobs=2)
    fct.test_eq((cfg.n, cfg.l, cfg.family, cfg.fmt, cfg.jobs), (4, 1, Family.R_HAT, "json", 2))
    assert not cfg.force
    monkeypatch.setenv(GuardLimits.FORCE_ENV_VAR, "1")
    assert parse_command("sweep", ["3"]).force


def test_parse_errors():
    fct.test_fail(lambda: parse_command("draw", ["3", "1"]), contains="Unknown command 'draw'")
    fct.test_fail(lambda: parse_command("build", ["3", "1", "R", "dot", "x"]), contains="at most 4")
    fct.test_fail(lambda: parse_command("sweep", ["3", "4"]), contains="one positional")
    fct.test_fail(lambda: parse_command("build", ["three", "1"]), contains="n must be an integer")
    fct.test_fail(lambda: parse_command("verify", []), contains="needs a kind")
    fct.test_fail(lambda: parse_command("build", ["3", "1", "R", "svg"]), contains="svg")


def test_build():
    res = run("build", "3", "1", "R", "dot")
    fct.test_eq(res.exit_code, 0)
    fct.test_eq(res.output, R31_DOT)
    fct.test_eq(len(json.loads(run("build", "3", "1", "P", "json").output)["elements"]), 12)
    fct.test_eq(json.loads(run("build", "1", "0", "R", "json").output)["elements"], ["+"])


def test_build_uses_shared_store():
    store = InMemoryPosetStore()
    execute(parse_command("build", ["3", "1", "R-hat", "json"]), store)
    fct.test_eq(len(store), 2)


def test_verify():
    res = run("verify", "lattice", "3", "1")
    fct.test_eq(res.exit_code, 0)
    fct.test_eq(res.output.splitlines()[:2], ["verify lattice R_{3,1}: pass", "lattice: pass"])
    doc = json.loads(run("verify", "el", "3", "1", fmt="json").output)
    fct.test_eq((doc["check"], doc["passed"], doc["report"]["intervals_checked"]), ("el", True, 15))
    res = run("verify", "flow", "3", "1")
    assert "  rank 1: up=1/1 down=3/2" in res.output.splitlines()


def test_verify_all():
    res = run("verify", "all", "3", "1", fmt="json")
    fct.test_eq(res.exit_code, 0)
    doc = json.loads(res.output)
    fct.test_eq([c["check"] for c in doc["checks"]], ["el", "flow", "lattice", "atoms"])
    assert doc["passed"]


def test_vectors():
    res = run("vectors", "3", "1", "h", fmt="csv")
    fct.test_eq(res.exit_code, 0)
    fct.test_eq(res.output, "i,brute,closed,equal\n0,1,1,true\n1,3,3,true\n2,0,0,true\n")
    doc = json.loads(run("vectors", "3", "1", "whitney", fmt="json").output)
    assert doc["passed"]


def test_sweep():
    fct.test_eq(run("sweep", "1").output, "n,l,size,max_antichain,max_W,verdict\n1,0,1,1,1,pass\n")
    res = run("sweep", "3")
    fct.test_eq(res.exit_code, 0)
    fct.test_eq(len(res.output.splitlines()), 7)
    doc = json.loads(run("sweep", "2", fmt="json", lym=True).output)
    fct.test_eq([r["lym"] for r in doc["rows"]], [True, True, True])


def test_chains():
    res = run("chains", "3", "1")
    lines = res.output.splitlines()
    fct.test_eq(len(lines), 4)
    assert "0hat -[{1,2}]-> +-0 -[(beta,2,3)]-> +-- -[(beta,2,4)]-> 1hat  descents={}" in lines
    fct.test_eq(sum(line.endswith("descents={}") for line in lines), 1)
    doc = json.loads(run("chains", "3", "1", fmt="json").output)
    fct.test_eq(sorted(len(c["descents"]) for c in doc), [0, 1, 1, 1])


def test_errors_exit_2():
    res = run("verify", "el", "8", "1")
    fct.test_eq(res.exit_code, 2)
    fct.test_eq(res.output, f"error: n=8 exceeds the limit 7 (use --force or {GuardLimits.FORCE_ENV_VAR}=1)\n")
    fct.test_eq(run("build", "3").exit_code, 2)
    fct.test_eq(run("verify", "shape", "3", "1").exit_code, 2)
    fct.test_eq(run("sweep").output, "error: sweep needs n_max\n")


def test_main_writes_out_file(monkeypatch, tmp_path):
    out = tmp_path/"r31.json"
    monkeypatch.setattr(sys, "argv", ["cjm_sign_posets", "build", "3", "1", "--format", "json", "--out", str(out)])
    with pytest.raises(SystemExit) as exc:
        main()
    fct.test_eq(exc.value.code, 0)
    fct.test_eq(json.loads(out.read_text())["covers"], [[2, 1], [3, 0], [3, 1], [4, 0]])
