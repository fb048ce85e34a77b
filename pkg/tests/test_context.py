import fastcore.test as fct

from cjm_sign_posets.core.context import RunConfig
from cjm_sign_posets.core.poset import Family
from cjm_sign_posets.core.poset_store import PosetStore, InMemoryPosetStore, get_or_build


def test_run_config_store():
    cfg = RunConfig(command="verify", n=3, l=1)
    fct.test_eq(cfg.get("kind", "el"), "el")
    assert not cfg.has("kind")
    cfg.set("kind", "flow")
    cfg.update({"which": "h", "lym": True})
    fct.test_eq(cfg.get("kind"), "flow")
    fct.test_eq(cfg.data, {"kind": "flow", "which": "h", "lym": True})
    fct.test_eq(cfg.family, Family.R)


def test_require_params():
    fct.test_fail(lambda: RunConfig(command="build").require_params(), contains="needs --n and --l")
    fct.test_fail(lambda: RunConfig(n=3, l=3).require_params(), contains="0 <= l < n")
    RunConfig(n=3, l=2).require_params()


def test_guard_uses_force(capsys):
    fct.test_fail(lambda: RunConfig(n=8, l=1).guard("n", 8, 7), contains="exceeds")
    RunConfig(n=8, l=1, force=True).guard("n", 8, 7)
    assert capsys.readouterr().err.startswith("WARNING guards:")


def test_store_builds_once(capsys):
    store = InMemoryPosetStore()
    assert isinstance(store, PosetStore)
    p = get_or_build(store, 3, 1, Family.R)
    fct.test_is(get_or_build(store, 3, 1, "R", debug=True), p)
    fct.test_eq(capsys.readouterr().err, "DEBUG poset_store: hit R:3:1\n")
    fct.test_eq(len(store), 1)


def test_store_bounded_reuses_base():
    store = InMemoryPosetStore()
    q = get_or_build(store, 3, 1, Family.R_HAT)
    fct.test_eq(len(store), 2)
    fct.test_eq(len(q), 7)
    fct.test_eq(store.get(Family.R_HAT, 3, 1).family, Family.R_HAT)
    store.clear()
    fct.test_eq(len(store), 0)
    fct.test_is(store.get(Family.R, 3, 1), None)


def test_no_store_builds_fresh():
    a, b = get_or_build(None, 3, 1), get_or_build(None, 3, 1)
    assert a is not b
    fct.test_eq(a.elements, b.elements)
