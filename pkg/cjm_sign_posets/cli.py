"""Command-line surface: build, verify, vectors, sweep and chains"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../nbs/cli.ipynb.

# %% auto #0
__all__ = ['COMMANDS', 'CommandResult', 'parse_command', 'execute', 'main']

# %% ../nbs/cli.ipynb #5b1e0c7a
import sys
from typing import Any, Callable, Dict, List, Optional
from dataclasses import dataclass
from fastcore.script import call_parse, Param, store_true

from .core.context import RunConfig
from .core.exports import OutputFormat, render_poset, rows_to_csv, rows_to_text, to_json
from .core.guards import GuardLimits
from .core.poset import Family, element_label
from .core.poset_store import InMemoryPosetStore, PosetStore, get_or_build
from .analysis.shelling import labeled_maximal_chains
from .analysis.enumeration import vector_table
from .analysis.sperner import sperner_sweep
from .analysis.suite import default_suite

# %% ../nbs/cli.ipynb #0c6f3e92
COMMANDS = ("build", "verify", "vectors", "sweep", "chains")
VERIFY_KINDS = ("el", "flow", "lattice", "atoms", "all")

@dataclass
class CommandResult:
    """Exit code and rendered output of one command."""

    exit_code: int  # 0 pass, 1 mathematical violation, 2 usage or guard error
    output: str = ""  # Text written to stdout or --out

# %% ../nbs/cli.ipynb #a7d8c215
def _int(value: Any, name: str) -> int:
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ValueError(f"{name} must be an integer, got {value!r}") from None

def parse_command(command: str,  # One of COMMANDS
                  args: Optional[List[str]] = None,  # Positional arguments after the command
                  **flags  # n, l, family, fmt, out, jobs, force, debug (None means unset)
                 ) -> RunConfig:  # Configuration with positionals merged under explicit flags
    """Map `build 3 1 R dot`, `verify el 5 1`, `vectors 3 1 h`, `sweep 8` and `chains 3 1` onto a RunConfig."""
    if command not in COMMANDS:
        raise ValueError(f"Unknown command {command!r}; expected one of {', '.join(COMMANDS)}")
    args = list(args or [])
    cfg = RunConfig(command=command, args=args)
    pos: Dict[str, Any] = {}
    if command == "verify":
        if not args:
            raise ValueError(f"verify needs a kind: {', '.join(VERIFY_KINDS)}")
        pos["kind"], rest = args[0], args[1:]
    elif command == "sweep":
        rest = []
        if args:
            pos["n"] = args[0]
        if len(args) > 1:
            raise ValueError(f"sweep takes one positional argument, got {len(args)}")
    else:
        rest = args
    if command != "sweep":
        names = {"build": ["n", "l", "family", "fmt"], "vectors": ["n", "l", "which"]}.get(command, ["n", "l"])
        if len(rest) > len(names):
            raise ValueError(f"{command} takes at most {len(names)} positional arguments after the command")
        pos.update(zip(names, rest))
    for key in ("n", "l", "family", "fmt", "out", "jobs"):
        value = flags.get(key)
        if value is not None:
            pos[key] = value
    if "n" in pos:
        cfg.n = _int(pos["n"], "n")
    if "l" in pos:
        cfg.l = _int(pos["l"], "l")
    if "family" in pos:
        cfg.family = Family(pos["family"])
    if "fmt" in pos:
        cfg.fmt = OutputFormat(pos["fmt"]).value
    elif command == "sweep":
        cfg.fmt = OutputFormat.CSV.value
    cfg.out = pos.get("out")
    cfg.jobs = _int(pos.get("jobs", 1), "jobs")
    cfg.force = bool(flags.get("force")) or GuardLimits.env_force()
    cfg.debug = bool(flags.get("debug"))
    for key in ("kind", "which"):
        if key in pos:
            cfg.set(key, pos[key])
    cfg.set("lym", bool(flags.get("lym")))
    return cfg

# %% ../nbs/cli.ipynb #d41c8e07
def _cmd_build(cfg: RunConfig, store: PosetStore) -> CommandResult:
    cfg.require_params()
    cfg.guard("n", cfg.n, GuardLimits.limit_for("build"))
    p = get_or_build(store, cfg.n, cfg.l, cfg.family, debug=cfg.debug)
    return CommandResult(0, render_poset(p, OutputFormat(cfg.fmt)))

def _report_text(result) -> List[str]:
    d = result.report.to_dict()
    lines = [f"{result.check_id}: {'pass' if result.passed else 'FAIL'}"]
    for key, value in d.items():
        if key in ("passed", "ranks", "violations", "witnesses", "failures"):
            continue
        lines.append(f"  {key}: {value}")
    for entry in d.get("ranks", []):
        lines.append(f"  rank {entry['rank']}: up={entry['up']} down={entry['down']}")
    for key in ("witnesses", "violations", "failures"):
        if d.get(key):
            lines.append(f"  {key}: {d[key]}")
    return lines

def _cmd_verify(cfg: RunConfig, store: PosetStore) -> CommandResult:
    kind = cfg.get("kind")
    if kind not in VERIFY_KINDS:
        raise ValueError(f"Unknown verify kind {kind!r}; expected one of {', '.join(VERIFY_KINDS)}")
    suite = default_suite(store, debug=cfg.debug)
    if kind == "all":
        results = suite.run_all(cfg).results
    else:
        results = [suite.run_check(kind, cfg)]
    passed = all(r.passed for r in results)
    if cfg.fmt == OutputFormat.JSON.value:
        body = to_json(results[0].to_dict() if kind != "all" else {"passed": passed, "checks": [r.to_dict() for r in results]})
    else:
        lines = [f"verify {kind} {cfg.family.value}_{{{cfg.n},{cfg.l}}}: {'pass' if passed else 'FAIL'}"]
        for r in results:
            lines.extend(_report_text(r))
        body = "\n".join(lines) + "\n"
    return CommandResult(0 if passed else 1, body)

def _cmd_vectors(cfg: RunConfig, store: PosetStore) -> CommandResult:
    cfg.require_params()
    table = vector_table(cfg.n, cfg.l, cfg.get("which", "h"), force=cfg.force, debug=cfg.debug)
    if cfg.fmt == OutputFormat.JSON.value:
        body = to_json(table.to_dict())
    elif cfg.fmt == OutputFormat.CSV.value:
        body = rows_to_csv(table.header, table.rows)
    else:
        body = rows_to_text(table.header, table.rows)
    return CommandResult(0 if table.passed else 1, body)

def _cmd_sweep(cfg: RunConfig, store: PosetStore) -> CommandResult:
    if cfg.n is None:
        raise ValueError("sweep needs n_max")
    report = sperner_sweep(cfg.n, jobs=cfg.jobs, include_lym=cfg.get("lym", False), store=store,
                           force=cfg.force, debug=cfg.debug)
    if cfg.fmt == OutputFormat.JSON.value:
        body = to_json(report.to_dict())
    elif cfg.fmt == OutputFormat.TEXT.value:
        body = rows_to_text(report.header, [[r[k] for k in report.header] for r in report.rows])
    else:
        body = report.to_csv()
    return CommandResult(0 if report.passed else 1, body)

def _cmd_chains(cfg: RunConfig, store: PosetStore) -> CommandResult:
    cfg.require_params()
    cfg.guard("n", cfg.n, GuardLimits.limit_for("chains"))
    chains = list(labeled_maximal_chains(cfg.n, cfg.l, force=True))
    if cfg.fmt == OutputFormat.JSON.value:
        body = to_json([{"elements": [element_label(x) for x in c.elements],
                         "labels": [str(lab) for lab in c.labels],
                         "descents": list(c.descents)} for c in chains])
    else:
        lines = [f"{c}  descents={{{','.join(map(str, c.descents))}}}" for c in chains]
        body = "\n".join(lines) + "\n"
    return CommandResult(0, body)

_HANDLERS: Dict[str, Callable[[RunConfig, PosetStore], CommandResult]] = {
    "build": _cmd_build,
    "verify": _cmd_verify,
    "vectors": _cmd_vectors,
    "sweep": _cmd_sweep,
    "chains": _cmd_chains,
}

# %% ../nbs/cli.ipynb #8e2b4f61
def execute(cfg: RunConfig,  # Parsed configuration
            store: Optional[PosetStore] = None  # Shared poset store (a fresh one per run by default)
           ) -> CommandResult:  # Exit code and output; errors become exit 2 with the message as output
    """Run one command without touching stdout, stderr or the filesystem."""
    store = store if store is not None else InMemoryPosetStore()
    try:
        return _HANDLERS[cfg.command](cfg, store)
    except ValueError as e:
        return CommandResult(2, f"error: {e}\n")

# %% ../nbs/cli.ipynb #f3a90d2c
@call_parse
def main(command: Param("build, verify, vectors, sweep or chains", str),
         args: Param("Positional arguments, e.g. `3 1 R dot` or `el 5 1`", str, nargs="*", opt=False) = None,
         n: Param("Sign-vector length (n_max for sweep)", int) = None,
         l: Param("Sign-change parameter", int) = None,
         family: Param("Poset family: R, P, R-hat or P-hat", str) = None,
         format: Param("Output format: json, csv, dot or text", str) = None,
         out: Param("Write output to this file instead of stdout", str) = None,
         jobs: Param("Parallel workers", int) = None,
         lym: Param("Add the normalized-matching column to sweep", store_true) = False,
         force: Param(f"Lift the exhaustive-scale guards (or set {GuardLimits.FORCE_ENV_VAR}=1)", store_true) = False,
         debug: Param("Print debug information to stderr", store_true) = False):
    "Sign-vector posets: build, verify, tabulate and sweep."
    try:
        cfg = parse_command(command, args, n=n, l=l, family=family, fmt=format, out=out, jobs=jobs,
                            lym=lym, force=force, debug=debug)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        sys.exit(2)
    result = execute(cfg)
    if result.exit_code == 2:
        sys.stderr.write(result.output)
    elif cfg.out:
        with open(cfg.out, "w") as f:
            f.write(result.output)
    else:
        sys.stdout.write(result.output)
    sys.exit(result.exit_code)
