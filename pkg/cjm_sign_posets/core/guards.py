"""Centralized exhaustive-scale limits and their override switch"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/guards.ipynb.

# %% auto #0
__all__ = ['GuardExceeded', 'GuardLimits', 'check_guard']

# %% ../../nbs/core/guards.ipynb #46a3b04c
import os
import sys
from typing import Optional

# %% ../../nbs/core/guards.ipynb #0f3d51aa
class GuardExceeded(ValueError):
    """Raised when a computation is asked to run beyond its exhaustive-scale limit."""

# %% ../../nbs/core/guards.ipynb #11ee23b5
class GuardLimits:
    """Exhaustive-scale limits for every guarded computation.

    All limits are inclusive. Setting the environment variable named by
    `FORCE_ENV_VAR` (or passing `force=True`) lifts them with a warning.
    """

    # Shelling
    EL_MAX_N = 7  # verify_el, atom_order_is_lex, chains dump
    LATTICE_MAX_N = 7  # lattice_report on bounded extensions

    # Enumeration
    BRUTE_MAX_N = 8  # Brute-force flag vectors and descent counts
    TABLE_MAX_N = 12  # Closed-form vector tables
    FLAG_MAX_D = 20  # Dense flag vectors over 2^d subsets

    # Sperner / flows
    SWEEP_MAX_N = 9  # sperner_sweep and flow verification
    GK_BRUTE_MAX = 15  # Brute-force Greene-Kleitman oracle, |P|

    FORCE_ENV_VAR = "CJM_SIGN_POSETS_FORCE"

    @staticmethod
    def env_force() -> bool:  # True if the environment overrides all guards
        """Check the guard-override environment variable."""
        return os.environ.get(GuardLimits.FORCE_ENV_VAR, "").strip().lower() in {"1", "true", "yes"}

    @staticmethod
    def limit_for(command: str  # Guarded command or verify kind
                 ) -> Optional[int]:  # Inclusive n limit, or None if unguarded
        """Look up the n limit used by a CLI command."""
        return {
            "el": GuardLimits.EL_MAX_N,
            "atoms": GuardLimits.EL_MAX_N,
            "chains": GuardLimits.EL_MAX_N,
            "lattice": GuardLimits.LATTICE_MAX_N,
            "flow": GuardLimits.SWEEP_MAX_N,
            "build": GuardLimits.SWEEP_MAX_N,
            "sweep": GuardLimits.SWEEP_MAX_N,
            "vectors": GuardLimits.TABLE_MAX_N,
        }.get(command)

# %% ../../nbs/core/guards.ipynb #b7c90e12
def check_guard(name: str,  # What is being guarded (used in messages)
                value: int,  # Requested size
                limit: int,  # Inclusive limit
                force: bool = False,  # Whether the caller asked to lift the guard
                debug: bool = False  # Whether to print debug information
               ) -> None:
    """Refuse `value > limit` unless forced; forced overrides print a warning."""
    if debug:
        print(f"DEBUG guards: {name}={value} limit={limit} force={force}", file=sys.stderr)
    if value <= limit:
        return
    if force or GuardLimits.env_force():
        print(f"WARNING guards: {name}={value} exceeds limit {limit}; running anyway", file=sys.stderr)
        return
    raise GuardExceeded(f"{name}={value} exceeds the limit {limit} (use --force or {GuardLimits.FORCE_ENV_VAR}=1)")
