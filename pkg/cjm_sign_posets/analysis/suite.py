"""Ordered verification suite behind the `verify` command, with navigation and completion hooks"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/analysis/suite.ipynb.

# %% auto #0
__all__ = ['Check', 'CheckResult', 'SuiteReport', 'CheckSuite', 'default_suite']

# %% ../../nbs/analysis/suite.ipynb #e2cd8b07
import sys
from typing import Dict, Any, Optional, Callable, List
from dataclasses import dataclass, field
from fastcore.basics import patch

from ..core.context import RunConfig
from ..core.guards import GuardLimits
from ..core.poset import Family
from ..core.poset_store import PosetStore, InMemoryPosetStore, get_or_build
from ..core.lattice import lattice_report
from .shelling import verify_el, atom_order_report
from .flows import flow_R, flow_P, verify_flow

# %% ../../nbs/analysis/suite.ipynb #1bc6e294
@dataclass
class Check:
    """Definition of a single verification in the suite."""

    id: str  # Unique check identifier (the `verify` kind)
    title: str  # Human-readable title
    run: Callable[[RunConfig, PosetStore], Any]  # Produces a report from the run configuration
    validate: Optional[Callable[[Any], bool]] = None  # Pass/fail decision (defaults to report.passed)
    guard: Optional[str] = None  # GuardLimits.limit_for key applied to n before running

    def is_valid(self, report: Any  # Report returned by run
                ) -> bool:  # True if the check passed
        """Decide whether a report is a pass."""
        if self.validate:
            return self.validate(report)
        return bool(getattr(report, "passed", False))

@dataclass
class CheckResult:
    """Outcome of one check."""

    check_id: str  # Check that produced it
    passed: bool  # Verdict
    report: Any  # Report object (exposes to_dict)

    def to_dict(self) -> Dict[str, Any]:
        return {"check": self.check_id, "passed": self.passed, "report": self.report.to_dict()}

@dataclass
class SuiteReport:
    """Results of a run over several checks, in suite order."""

    results: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:  # True if every check passed
        return all(r.passed for r in self.results)

    def to_dict(self) -> Dict[str, Any]:
        return {"passed": self.passed, "checks": [r.to_dict() for r in self.results]}

# %% ../../nbs/analysis/suite.ipynb #a392b062
class CheckSuite:
    """Run named verifications in a fixed order over a shared poset store."""

    def __init__(
        self,
        suite_id: str,  # Identifier used in debug output
        checks: List[Check],  # Checks in run order
        store: Optional[PosetStore] = None,  # Poset storage (defaults to InMemoryPosetStore)
        on_complete: Optional[Callable[[RunConfig, SuiteReport], Any]] = None,  # Called after run_all
        debug: bool = False  # Whether to print debug information
    ):
        """Initialize the suite."""
        self.suite_id = suite_id
        self.checks = checks
        self.store = store if store is not None else InMemoryPosetStore()
        self.on_complete = on_complete
        self.debug = debug
        self.check_index = {check.id: idx for idx, check in enumerate(checks)}
        if len(self.check_index) != len(checks):
            raise ValueError(f"Duplicate check ids in suite {suite_id!r}")

# %% ../../nbs/analysis/suite.ipynb #mcpqh5ap7qd
@patch
def get_check(self:CheckSuite,
              check_id: str  # Check identifier
             ) -> Optional[Check]:  # Check or None
    """Get check by ID."""
    idx = self.check_index.get(check_id)
    return self.checks[idx] if idx is not None else None

@patch
def check_ids(self:CheckSuite) -> List[str]:  # Ids in run order
    return [c.id for c in self.checks]

# %% ../../nbs/analysis/suite.ipynb #cvwkl3467y
@patch
def get_next_check_id(self:CheckSuite,
                      current_id: str  # Current check ID
                     ) -> Optional[str]:  # Next check ID or None if last
    """Get the ID of the check after `current_id`."""
    idx = self.check_index.get(current_id)
    if idx is not None and idx < len(self.checks) - 1:
        return self.checks[idx + 1].id
    return None

@patch
def get_previous_check_id(self:CheckSuite,
                          current_id: str  # Current check ID
                         ) -> Optional[str]:  # Previous check ID or None if first
    """Get the ID of the check before `current_id`."""
    idx = self.check_index.get(current_id)
    if idx is not None and idx > 0:
        return self.checks[idx - 1].id
    return None

# %% ../../nbs/analysis/suite.ipynb #4zrv33knvml
@patch
def run_check(self:CheckSuite,
              check_id: str,  # Check to run
              cfg: RunConfig  # Run configuration (n, l, family, jobs, force, debug)
             ) -> CheckResult:  # Verdict and report
    """Apply the check's guard, run it and store the result in `cfg.data` under the check id."""
    check = self.get_check(check_id)
    if check is None:
        raise ValueError(f"Unknown check {check_id!r}; expected one of {', '.join(self.check_ids())}")
    cfg.require_params()
    limit = GuardLimits.limit_for(check.guard) if check.guard else None
    if limit is not None:
        cfg.guard("n", cfg.n, limit)
    report = check.run(cfg, self.store)
    result = CheckResult(check.id, check.is_valid(report), report)
    cfg.set(check.id, result)
    if self.debug or cfg.debug:
        print(f"DEBUG suite: {self.suite_id}/{check.id} n={cfg.n} l={cfg.l} passed={result.passed}", file=sys.stderr)
    return result

@patch
def run_all(self:CheckSuite,
            cfg: RunConfig  # Run configuration
           ) -> SuiteReport:  # One result per check, in order
    """Run every check in order; the suite fails if any check fails."""
    report = SuiteReport()
    current = self.checks[0].id if self.checks else None
    while current is not None:
        report.results.append(self.run_check(current, cfg))
        current = self.get_next_check_id(current)
    if self.on_complete:
        self.on_complete(cfg, report)
    return report

# %% ../../nbs/analysis/suite.ipynb #7d2a9c40
def _run_el(cfg: RunConfig, store: PosetStore):
    return verify_el(cfg.n, cfg.l, jobs=cfg.jobs, force=True, debug=cfg.debug)

def _run_flow(cfg: RunConfig, store: PosetStore):
    p = get_or_build(store, cfg.n, cfg.l, cfg.family, debug=cfg.debug)
    flow = flow_P(cfg.n, cfg.l, p) if cfg.family == Family.P else flow_R(cfg.n, cfg.l, p)
    return verify_flow(flow, debug=cfg.debug)

def _run_lattice(cfg: RunConfig, store: PosetStore):
    hat = Family.P_HAT if cfg.family == Family.P else Family.R_HAT
    return lattice_report(get_or_build(store, cfg.n, cfg.l, hat, debug=cfg.debug), debug=cfg.debug)

def _run_atoms(cfg: RunConfig, store: PosetStore):
    return atom_order_report(cfg.n, cfg.l, force=True, debug=cfg.debug)

def default_suite(store: Optional[PosetStore] = None,  # Shared poset store
                  debug: bool = False  # Whether to print debug information
                 ) -> CheckSuite:  # el, flow, lattice and atoms, in that order
    """The checks reachable through `verify`."""
    return CheckSuite("verify", [
        Check("el", "EL-labeling of the bounded R_{n,l}", _run_el, guard="el"),
        Check("flow", "Normalized flow", _run_flow, guard="flow"),
        Check("lattice", "Lattice and distributivity", _run_lattice, guard="lattice"),
        Check("atoms", "Atom order of upper covers", _run_atoms, guard="atoms"),
    ], store=store, debug=debug)
