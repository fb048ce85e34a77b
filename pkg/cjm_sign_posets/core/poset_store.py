"""Per-run storage of built posets so each (family, n, l) is constructed once"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/poset_store.ipynb.

# %% auto #0
__all__ = ['PosetStore', 'InMemoryPosetStore', 'get_or_build']

# %% ../../nbs/core/poset_store.ipynb #39c6ba48
import sys
from typing import Dict, Optional, Protocol, runtime_checkable

from .poset import Family, GradedPoset, build_poset, bounded_extension

# %% ../../nbs/core/poset_store.ipynb #gmzimbimjeu
@runtime_checkable
class PosetStore(Protocol):
    """Protocol for poset storage backends."""

    def get(self,
            family: Family,  # Poset family
            n: int,  # Sign-vector length
            l: int  # Sign-change parameter
           ) -> Optional[GradedPoset]:  # Stored poset or None
        """Get a stored poset."""
        ...

    def put(self,
            poset: GradedPoset  # Poset to store under its own family, n and l
           ) -> None:
        """Store a poset."""
        ...

    def clear(self) -> None:
        """Drop every stored poset."""
        ...

# %% ../../nbs/core/poset_store.ipynb #inmemory_class
class InMemoryPosetStore:
    """In-memory poset storage for one CLI run or test session."""

    def __init__(self):
        """Initialize empty storage."""
        self._posets: Dict[str, GradedPoset] = {}  # {family:n:l -> poset}

    def _make_key(self,
                  family: Family,  # Poset family
                  n: int,  # Sign-vector length
                  l: int  # Sign-change parameter
                 ) -> str:  # Composite key for storage
        """Create composite key from family and parameters."""
        return f"{Family(family).value}:{n}:{l}"

    def get(self, family: Family, n: int, l: int) -> Optional[GradedPoset]:
        """Get a stored poset."""
        return self._posets.get(self._make_key(family, n, l))

    def put(self, poset: GradedPoset) -> None:
        """Store a poset."""
        self._posets[self._make_key(poset.family, poset.n, poset.l)] = poset

    def clear(self) -> None:
        """Drop every stored poset."""
        self._posets.clear()

    def __len__(self) -> int:
        return len(self._posets)

# %% ../../nbs/core/poset_store.ipynb #a3f9e021
def get_or_build(store: Optional[PosetStore],  # Store to consult (None builds without caching)
                 n: int,  # Sign-vector length
                 l: int,  # Sign-change parameter
                 family: Family = Family.R,  # R, P, R-hat or P-hat
                 debug: bool = False  # Whether to print debug information
                ) -> GradedPoset:  # Stored or freshly built poset
    """Fetch a poset from the store, building (and storing) it on a miss."""
    family = Family(family)
    if store is not None:
        found = store.get(family, n, l)
        if found is not None:
            if debug:
                print(f"DEBUG poset_store: hit {family.value}:{n}:{l}", file=sys.stderr)
            return found
    if family in (Family.R_HAT, Family.P_HAT):
        base = Family.R if family == Family.R_HAT else Family.P
        poset = bounded_extension(get_or_build(store, n, l, base, debug), debug=debug)
    else:
        poset = build_poset(n, l, family, debug=debug)
    if store is not None:
        store.put(poset)
    return poset
