import fastcore.test as fct

from cjm_sign_posets.core.guards import GuardExceeded, GuardLimits, check_guard


def test_within_limit_is_silent(capsys):
    check_guard("n", 7, GuardLimits.EL_MAX_N)
    fct.test_eq(capsys.readouterr().err, "")


def test_exceeding_raises():
    fct.test_fail(lambda: check_guard("n", 8, GuardLimits.EL_MAX_N), contains="exceeds the limit 7")
    try:
        check_guard("n", 8, 7)
    except GuardExceeded as e:
        assert isinstance(e, ValueError)


def test_force_warns(capsys):
    check_guard("n", 8, 7, force=True)
    fct.test_eq(capsys.readouterr().err, "WARNING guards: n=8 exceeds limit 7; running anyway\n")


def test_env_override(monkeypatch, capsys):
    monkeypatch.setenv(GuardLimits.FORCE_ENV_VAR, "yes")
    assert GuardLimits.env_force()
    check_guard("n", 10, 9)
    assert "WARNING" in capsys.readouterr().err
    monkeypatch.setenv(GuardLimits.FORCE_ENV_VAR, "0")
    assert not GuardLimits.env_force()


def test_debug_line(capsys):
    check_guard("d", 3, 20, debug=True)
    fct.test_eq(capsys.readouterr().err, "DEBUG guards: d=3 limit=20 force=False\n")


def test_limit_for():
    fct.test_eq(GuardLimits.limit_for("el"), 7)
    fct.test_eq(GuardLimits.limit_for("sweep"), 9)
    fct.test_eq(GuardLimits.limit_for("vectors"), 12)
    fct.test_is(GuardLimits.limit_for("unknown"), None)
