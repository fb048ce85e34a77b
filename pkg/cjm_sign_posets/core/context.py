"""Run configuration handed to every command and verification check"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/context.ipynb.

# %% auto #0
__all__ = ['RunConfig']

# %% ../../nbs/core/context.ipynb #439fd8b1
from typing import Dict, Any, List, Optional
from dataclasses import dataclass, field

from .guards import check_guard
from .poset import Family

# %% ../../nbs/core/context.ipynb #698309c0
@dataclass
class RunConfig:
    """Parameters of one run plus a scratch store for intermediate results."""

    command: str = "build"  # build, verify, vectors, sweep or chains
    args: List[str] = field(default_factory=list)  # Positional arguments after the command
    n: Optional[int] = None  # Sign-vector length
    l: Optional[int] = None  # Sign-change parameter
    family: Family = Family.R  # Poset family
    fmt: str = "text"  # Output format: json, csv, dot or text
    out: Optional[str] = None  # Output path (stdout when None)
    jobs: int = 1  # Parallel workers
    force: bool = False  # Lift the exhaustive-scale guards
    debug: bool = False  # Print debug information to stderr
    data: Dict[str, Any] = field(default_factory=dict)  # Results shared between checks
    metadata: Dict[str, Any] = field(default_factory=dict)  # Additional metadata

    def get(self,
            key: str,  # Key to retrieve from data
            default: Any = None  # Default value if key not found
           ) -> Any:  # Value from data or default
        """Get a stored intermediate result."""
        return self.data.get(key, default)

    def has(self,
            key: str  # Key to check in data
           ) -> bool:  # True if key exists in data
        """Check if an intermediate result is stored."""
        return key in self.data

    def set(self,
            key: str,  # Key to set in data
            value: Any  # Value to store
           ) -> None:
        """Store an intermediate result."""
        self.data[key] = value

    def update(self,
               updates: Dict[str, Any]  # Results to store
              ) -> None:
        """Store several intermediate results at once."""
        self.data.update(updates)

    def require_params(self) -> None:
        """Raise if n or l is missing or out of range."""
        if self.n is None or self.l is None:
            raise ValueError(f"Command {self.command!r} needs --n and --l")
        if not 0 <= self.l < self.n:
            raise ValueError(f"Need 0 <= l < n, got n={self.n}, l={self.l}")

    def guard(self,
              name: str,  # What is being guarded
              value: int,  # Requested size
              limit: int  # Inclusive limit
             ) -> None:
        """Apply a guard with this run's override and debug settings."""
        check_guard(name, value, limit, force=self.force, debug=self.debug)
