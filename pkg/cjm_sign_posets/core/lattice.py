"""Meets, joins and lattice/distributivity checks on bounded posets"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/lattice.ipynb.

# %% auto #0
__all__ = ['join', 'meet', 'LatticeReport', 'lattice_report']

# %% ../../nbs/core/lattice.ipynb #5d1f0a77
import sys
from typing import Any, Dict, List, Optional
from dataclasses import dataclass, field

from .poset import GradedPoset, iter_bits

# %% ../../nbs/core/lattice.ipynb #c8e2b4d0
def _extremal(p: GradedPoset, mask: int, lowest: bool, masks) -> Optional[int]:
    # The unique bound must lie at the extreme rank of the common bounds and generate all of them
    if not mask:
        return None
    members = list(iter_bits(mask))
    pick = min if lowest else max
    target = pick(p.ranks[i] for i in members)
    candidates = [i for i in members if p.ranks[i] == target]
    if len(candidates) == 1 and masks[candidates[0]] == mask:
        return candidates[0]
    return None

def join(p: GradedPoset,  # Any finite poset
         i: int,  # Index of x
         j: int  # Index of y
        ) -> Optional[int]:  # Index of the least upper bound, or None
    """Least upper bound of two elements, if it exists."""
    return _extremal(p, p.upsets[i] & p.upsets[j], True, p.upsets)

def meet(p: GradedPoset,  # Any finite poset
         i: int,  # Index of x
         j: int  # Index of y
        ) -> Optional[int]:  # Index of the greatest lower bound, or None
    """Greatest lower bound of two elements, if it exists."""
    return _extremal(p, p.downsets[i] & p.downsets[j], False, p.downsets)

# %% ../../nbs/core/lattice.ipynb #e9a4c3b1
@dataclass
class LatticeReport:
    """Outcome of the lattice and distributivity checks on a bounded poset."""

    is_lattice: bool  # Every pair has a meet and a join
    is_distributive: bool  # x ^ (y v z) == (x ^ y) v (x ^ z) for all triples
    pairs_checked: int = 0  # Unordered pairs examined
    triples_checked: int = 0  # Triples examined before stopping
    witnesses: Dict[str, List[str]] = field(default_factory=dict)  # Counterexamples by kind, as element labels

    @property
    def passed(self) -> bool:  # True if the poset is a lattice
        return self.is_lattice

    def to_dict(self) -> Dict[str, Any]:  # JSON-ready summary
        """Serialize the report."""
        return {"is_lattice": self.is_lattice, "is_distributive": self.is_distributive,
                "pairs_checked": self.pairs_checked, "triples_checked": self.triples_checked,
                "witnesses": {k: list(v) for k, v in sorted(self.witnesses.items())}}

# %% ../../nbs/core/lattice.ipynb #71b5f3aa
def lattice_report(p: GradedPoset,  # Bounded poset (0-hat and 1-hat adjoined)
                   debug: bool = False  # Whether to print debug information
                  ) -> LatticeReport:  # Lattice and distributivity verdicts with witnesses
    """Check that every pair has a unique meet and join, then test distributivity on all triples."""
    if p.bottom is None or p.top is None:
        raise ValueError("lattice_report needs a bounded poset; call bounded_extension first")
    size = len(p)
    joins = [[None] * size for _ in range(size)]
    meets = [[None] * size for _ in range(size)]
    witnesses: Dict[str, List[str]] = {}
    pairs = 0
    for a in range(size):
        for b in range(a, size):
            pairs += 1
            j, m = join(p, a, b), meet(p, a, b)
            joins[a][b] = joins[b][a] = j
            meets[a][b] = meets[b][a] = m
            if j is None and "no_join" not in witnesses:
                witnesses["no_join"] = [p.label(a), p.label(b)]
            if m is None and "no_meet" not in witnesses:
                witnesses["no_meet"] = [p.label(a), p.label(b)]
    is_lattice = not witnesses
    if debug:
        print(f"DEBUG lattice: {pairs} pairs, lattice={is_lattice}", file=sys.stderr)
    if not is_lattice:
        return LatticeReport(False, False, pairs, 0, witnesses)

    triples = 0
    for x in range(size):
        mx = meets[x]
        for y in range(size):
            jy, mxy = joins[y], mx[y]
            for z in range(y + 1, size):
                triples += 1
                if mx[jy[z]] != joins[mxy][mx[z]]:
                    witnesses["not_distributive"] = [p.label(x), p.label(y), p.label(z)]
                    if debug:
                        print(f"DEBUG lattice: distributivity fails at {witnesses['not_distributive']}", file=sys.stderr)
                    return LatticeReport(True, False, pairs, triples, witnesses)
    return LatticeReport(True, True, pairs, triples, witnesses)
