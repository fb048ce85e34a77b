import pytest
import fastcore.test as fct

from cjm_sign_posets.core.context import RunConfig
from cjm_sign_posets.core.guards import GuardExceeded
from cjm_sign_posets.core.poset import Family
from cjm_sign_posets.core.poset_store import InMemoryPosetStore
from cjm_sign_posets.analysis.suite import Check, CheckSuite, default_suite


class _Stub:
    def __init__(self, passed): self.passed = passed
    def to_dict(self): return {"passed": self.passed}


def test_navigation():
    suite = default_suite()
    fct.test_eq(suite.check_ids(), ["el", "flow", "lattice", "atoms"])
    fct.test_eq(suite.get_next_check_id("el"), "flow")
    fct.test_eq(suite.get_next_check_id("atoms"), None)
    fct.test_eq(suite.get_previous_check_id("flow"), "el")
    fct.test_eq(suite.get_previous_check_id("el"), None)
    fct.test_eq(suite.get_check("nope"), None)
    fct.test_eq(suite.get_check("lattice").guard, "lattice")


def test_duplicate_ids_rejected():
    run = lambda cfg, store: _Stub(True)
    fct.test_fail(lambda: CheckSuite("dup", [Check("a", "A", run), Check("a", "B", run)]), contains="Duplicate")


def test_run_all_r31():
    store = InMemoryPosetStore()
    seen = []
    suite = default_suite(store)
    suite.on_complete = lambda cfg, report: seen.append(report.passed)
    cfg = RunConfig(command="verify", n=3, l=1)
    report = suite.run_all(cfg)
    assert report.passed
    fct.test_eq([r.check_id for r in report.results], ["el", "flow", "lattice", "atoms"])
    fct.test_eq(seen, [True])
    fct.test_eq(cfg.get("el").report.intervals_checked, 15)
    assert cfg.has("atoms")
    # R_{3,1} and its bounded extension
    fct.test_eq(len(store), 2)
    fct.test_eq(report.to_dict()["checks"][2]["report"]["is_lattice"], True)


def test_flow_check_on_P():
    cfg = RunConfig(command="verify", n=3, l=1, family=Family.P)
    result = default_suite().run_check("flow", cfg)
    assert result.passed
    fct.test_eq(result.report.kind, "P1")


def test_validate_override():
    suite = CheckSuite("custom", [Check("x", "X", lambda cfg, store: _Stub(True), validate=lambda r: False)])
    result = suite.run_check("x", RunConfig(n=2, l=0))
    fct.test_eq(result.passed, False)
    fct.test_eq(result.to_dict(), {"check": "x", "passed": False, "report": {"passed": True}})
    fct.test_eq(suite.run_all(RunConfig(n=2, l=0)).passed, False)


def test_errors():
    suite = default_suite()
    fct.test_fail(lambda: suite.run_check("bogus", RunConfig(n=3, l=1)), contains="Unknown check 'bogus'")
    fct.test_fail(lambda: suite.run_check("el", RunConfig(n=3)), contains="needs --n and --l")
    fct.test_fail(lambda: suite.run_check("el", RunConfig(n=3, l=3)), contains="Need 0 <= l < n")
    with pytest.raises(GuardExceeded, match="n=8 exceeds the limit 7"):
        suite.run_check("el", RunConfig(n=8, l=1))


def test_debug_line(capsys):
    suite = CheckSuite("s", [Check("x", "X", lambda cfg, store: _Stub(True))], debug=True)
    suite.run_check("x", RunConfig(n=2, l=1))
    fct.test_eq(capsys.readouterr().err, "DEBUG suite: s/x n=2 l=1 passed=True\n")
