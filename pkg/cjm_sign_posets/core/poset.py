"""Graded posets R_{n,l} and P_{n,l}, their bounded extensions and cover relations"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/poset.ipynb.

# %% auto #0
__all__ = ['Family', 'Bound', 'CoverType', 'CoverInfo', 'iter_bits', 'element_label', 'covers_R', 'covers_P', 'GradedPoset',
           'build_poset', 'bounded_extension', 'leq']

# %% ../../nbs/core/poset.ipynb #8c41d2e7
import sys
from enum import Enum
from functools import cached_property
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple
from dataclasses import dataclass, field
from fastcore.basics import patch

from .sign_vectors import SignVector, BlockTuple, canonical_sign_vectors, to_block_tuple, from_block_tuple, normalize

# %% ../../nbs/core/poset.ipynb #b6d9c161
class Family(Enum):
    """Which poset a GradedPoset was built as."""
    R = "R"  # Exactly l sign changes
    P = "P"  # At most l sign changes
    R_HAT = "R-hat"  # R with 0-hat and 1-hat adjoined
    P_HAT = "P-hat"  # P with 0-hat and 1-hat adjoined
    CUSTOM = "custom"  # Any graded poset given by its covers

class Bound(Enum):
    """Adjoined minimum and maximum of a bounded extension."""
    ZERO = "0hat"
    ONE = "1hat"

class CoverType(Enum):
    """Type of an interior cover of R_{n,l}: inserted below or above the block maximum."""
    ALPHA = "alpha"
    BETA = "beta"

# %% ../../nbs/core/poset.ipynb #4e0f9b13
@dataclass(frozen=True)
class CoverInfo:
    """How y covers x in R_{n,l}: which element went into which block."""

    block: int  # 1-based index i of the receiving block
    element: int  # Inserted element a
    cover_type: CoverType  # alpha iff a < max(A_i) before insertion

# %% ../../nbs/core/poset.ipynb #f1c0d9a8
def iter_bits(mask: int  # Bitset of element indices
             ) -> Iterator[int]:  # Set bit positions, ascending
    """Iterate over the indices stored in a bitset."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low

def element_label(x: Any  # BlockTuple, SignVector, Bound or other payload
                 ) -> str:  # Sign string such as "++0+0-0-+", or "0hat"/"1hat"
    """Serialize a poset element the way every export does."""
    if isinstance(x, BlockTuple):
        return str(from_block_tuple(x))
    if isinstance(x, Bound):
        return x.value
    return str(x)

# %% ../../nbs/core/poset.ipynb #2a7d61e5
def covers_R(x: BlockTuple  # Element of R_{n,l}
            ) -> List[Tuple[BlockTuple, CoverInfo]]:  # Every y covering x, tagged alpha/beta
    """List the covers of x: insert a into A_i whenever max(A_{i-1}) < a < min(A_{i+1}) and a is not in A_i."""
    found = []
    blocks = x.blocks
    for i, block in enumerate(blocks):
        low = blocks[i - 1][-1] if i > 0 else 0
        high = blocks[i + 1][0] if i + 1 < len(blocks) else x.n + 1
        top = block[-1]
        for a in range(low + 1, high):
            if a in block:
                continue
            kind = CoverType.ALPHA if a < top else CoverType.BETA
            found.append((x.with_element(i + 1, a), CoverInfo(i + 1, a, kind)))
    return found

def covers_P(v: SignVector,  # Element of P_{n,l}
             l: int  # Maximum number of sign changes
            ) -> List[SignVector]:  # Every w covering v, sorted by sign string
    """List the covers of v in P_{n,l}: set one zero entry to + or - and keep at most l sign changes."""
    found = set()
    for i, e in enumerate(v.entries):
        if e != 0:
            continue
        for s in (1, -1):
            w = normalize(v.entries[:i] + (s,) + v.entries[i + 1:])
            if w.sign_changes <= l:
                found.add(w)
    return sorted(found, key=str)

# %% ../../nbs/core/poset.ipynb #698309c0
@dataclass(frozen=True, eq=False)
class GradedPoset:
    """Explicit finite graded poset: indexed elements, ranks and upward covers."""

    family: Family  # What the poset was built as
    n: int  # Sign-vector length (0 for custom posets)
    l: int  # Sign-change parameter (0 for custom posets)
    elements: Tuple[Any, ...]  # Element payloads, in export order
    ranks: Tuple[int, ...]  # Rank of each element
    covers: Tuple[Tuple[int, ...], ...]  # covers[i]: indices of the elements covering i, sorted
    cover_info: Dict[Tuple[int, int], CoverInfo] = field(default_factory=dict)  # alpha/beta tags (family R only)
    bottom: Optional[int] = None  # Index of 0-hat, if adjoined
    top: Optional[int] = None  # Index of 1-hat, if adjoined

    def __post_init__(self):
        if not (len(self.elements) == len(self.ranks) == len(self.covers)):
            raise ValueError("elements, ranks and covers must have the same length")
        for i, ups in enumerate(self.covers):
            for j in ups:
                if self.ranks[j] != self.ranks[i] + 1:
                    raise ValueError(f"Cover {i} -> {j} does not connect consecutive ranks")

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def index(self) -> Dict[Any, int]:  # Payload -> element index
        return {x: i for i, x in enumerate(self.elements)}

    @cached_property
    def down(self) -> Tuple[Tuple[int, ...], ...]:  # down[j]: indices of the elements covered by j
        below = [[] for _ in self.elements]
        for i, ups in enumerate(self.covers):
            for j in ups:
                below[j].append(i)
        return tuple(tuple(b) for b in below)

    @cached_property
    def upsets(self) -> Tuple[int, ...]:  # Bitset of {y : y >= x} for each x
        masks = [0] * len(self)
        for i in sorted(range(len(self)), key=lambda k: -self.ranks[k]):
            m = 1 << i
            for j in self.covers[i]:
                m |= masks[j]
            masks[i] = m
        return tuple(masks)

    @cached_property
    def downsets(self) -> Tuple[int, ...]:  # Bitset of {y : y <= x} for each x
        masks = [0] * len(self)
        for i in sorted(range(len(self)), key=lambda k: self.ranks[k]):
            m = 1 << i
            for j in self.down[i]:
                m |= masks[j]
            masks[i] = m
        return tuple(masks)

# %% ../../nbs/core/poset.ipynb #mcpqh5ap7qd
@patch(cls_method=True)
def from_covers(cls: GradedPoset,
                elements: Sequence[Any],  # Element payloads
                ranks: Sequence[int],  # Rank of each element
                cover_pairs: Iterable[Tuple[int, int]],  # (i, j) pairs meaning element i is covered by element j
                family: Family = Family.CUSTOM,  # Family tag
                n: int = 0,  # Sign-vector length, if meaningful
                l: int = 0  # Sign-change parameter, if meaningful
               ) -> GradedPoset:  # Validated graded poset
    """Build an arbitrary graded poset from its Hasse diagram."""
    ups = [set() for _ in elements]
    for i, j in cover_pairs:
        ups[i].add(j)
    return cls(family, n, l, tuple(elements), tuple(ranks), tuple(tuple(sorted(u)) for u in ups))

# %% ../../nbs/core/poset.ipynb #wu1op3hocw
@patch
def label(self: GradedPoset,
          i: int  # Element index
         ) -> str:  # Export label of the element
    """Label of element i as used by the exports."""
    return element_label(self.elements[i])

@patch
def is_leq(self: GradedPoset,
           i: int,  # Index of x
           j: int  # Index of y
          ) -> bool:  # True if x <= y
    """Order relation by element index."""
    return bool((self.upsets[i] >> j) & 1)

@patch
def edges(self: GradedPoset) -> List[Tuple[int, int]]:  # Hasse edges (i, j), sorted
    """All cover relations as index pairs."""
    return [(i, j) for i, ups in enumerate(self.covers) for j in ups]

@patch
def rank_values(self: GradedPoset) -> List[int]:  # Distinct ranks, ascending
    """The ranks that occur in the poset."""
    return sorted(set(self.ranks))

@patch
def elements_of_rank(self: GradedPoset,
                     r: int  # Rank
                    ) -> List[int]:  # Indices of the elements of rank r
    """Indices of the elements at one rank."""
    return [i for i, k in enumerate(self.ranks) if k == r]

@patch
def rank_sizes(self: GradedPoset) -> List[int]:  # Whitney numbers W_r in rank order
    """Number of elements at each rank, lowest rank first."""
    return [self.ranks.count(r) for r in self.rank_values()]

# %% ../../nbs/core/poset.ipynb #57j1ze4k6vq
@patch
def maximal_chains(self: GradedPoset,
                   start: Optional[int] = None,  # First element (default: every minimal element)
                   end: Optional[int] = None  # Last element (default: any maximal element)
                  ) -> Iterator[Tuple[int, ...]]:  # Saturated chains as index tuples
    """Enumerate the maximal chains of the poset, or of the interval [start, end]."""
    if start is None:
        starts = [i for i in range(len(self)) if not self.down[i]]
    else:
        starts = [start]
    allowed = self.downsets[end] if end is not None else (1 << len(self)) - 1

    def _extend(chain):
        ups = [j for j in self.covers[chain[-1]] if (allowed >> j) & 1]
        if not ups:
            if end is None or chain[-1] == end:
                yield tuple(chain)
            return
        for j in ups:
            chain.append(j)
            yield from _extend(chain)
            chain.pop()

    for s in starts:
        if (allowed >> s) & 1:
            yield from _extend([s])

# %% ../../nbs/core/poset.ipynb #cvwkl3467y
def _check_params(n: int, l: int) -> None:
    if not (isinstance(n, int) and isinstance(l, int)) or not (0 <= l < n):
        raise ValueError(f"Need integers 0 <= l < n, got n={n!r}, l={l!r}")

def build_poset(n: int,  # Sign-vector length
                l: int,  # Sign-change parameter, 0 <= l < n
                family: Family = Family.R,  # Family.R (exactly l) or Family.P (at most l)
                debug: bool = False  # Whether to print debug information
               ) -> GradedPoset:  # Immutable poset, elements ordered by sign string
    """Construct R_{n,l} or P_{n,l} with all of its cover relations."""
    _check_params(n, l)
    family = Family(family)
    if family == Family.R:
        vectors = [v for v in canonical_sign_vectors(n) if v.sign_changes == l]
        elements = tuple(to_block_tuple(v) for v in vectors)
        ranks = tuple(t.rank for t in elements)
        index = {x: i for i, x in enumerate(elements)}
        covers, info = [], {}
        for i, x in enumerate(elements):
            ups = []
            for y, ci in covers_R(x):
                j = index[y]
                ups.append(j)
                info[(i, j)] = ci
            covers.append(tuple(sorted(ups)))
    elif family == Family.P:
        elements = tuple(v for v in canonical_sign_vectors(n) if v.sign_changes <= l)
        ranks = tuple(v.rank for v in elements)
        index = {x: i for i, x in enumerate(elements)}
        covers = [tuple(sorted(index[w] for w in covers_P(v, l))) for v in elements]
        info = {}
    else:
        raise ValueError(f"build_poset builds families R and P, not {family.value}")
    p = GradedPoset(family, n, l, elements, ranks, tuple(covers), info)
    if debug:
        print(f"DEBUG build_poset: {family.value}_{{{n},{l}}} has {len(p)} elements, "
              f"{len(p.edges())} cover edges, rank sizes {p.rank_sizes()}", file=sys.stderr)
    return p

# %% ../../nbs/core/poset.ipynb #0r8qy6y75gyb
def bounded_extension(p: GradedPoset,  # Poset without 0-hat and 1-hat
                      debug: bool = False  # Whether to print debug information
                     ) -> GradedPoset:  # p with 0-hat first and 1-hat last
    """Adjoin a new minimum 0-hat below every minimal element and a new maximum 1-hat above every maximal one."""
    if p.bottom is not None or p.top is not None:
        raise ValueError("Poset is already bounded")
    size = len(p)
    low = min(p.ranks, default=1)
    high = max(p.ranks, default=0)
    elements = (Bound.ZERO,) + p.elements + (Bound.ONE,)
    ranks = (low - 1,) + p.ranks + (high + 1,)
    minimal = tuple(i + 1 for i in range(size) if not p.down[i])
    covers = [minimal or (size + 1,)]
    for i, ups in enumerate(p.covers):
        covers.append(tuple(j + 1 for j in ups) if ups else (size + 1,))
    covers.append(())
    info = {(i + 1, j + 1): ci for (i, j), ci in p.cover_info.items()}
    family = {Family.R: Family.R_HAT, Family.P: Family.P_HAT}.get(p.family, p.family)
    if size == 0:
        ranks = (0, 1)
        elements, covers = (Bound.ZERO, Bound.ONE), [(1,), ()]
        q = GradedPoset(family, p.n, p.l, elements, ranks, tuple(covers), {}, 0, 1)
    else:
        q = GradedPoset(family, p.n, p.l, elements, ranks, tuple(covers), info, 0, size + 1)
    if debug:
        print(f"DEBUG bounded_extension: {len(q)} elements, {len(q.edges())} cover edges", file=sys.stderr)
    return q

# %% ../../nbs/core/poset.ipynb #55e68c01
def leq(x: Any,  # BlockTuple, SignVector or Bound
        y: Any  # Element of the same poset
       ) -> bool:  # True if x <= y
    """Order relation on payloads: componentwise containment of blocks, or v_i in {0, w_i} up to sign."""
    if x == y:
        return True
    if x == Bound.ZERO or y == Bound.ONE:
        return True
    if x == Bound.ONE or y == Bound.ZERO:
        return False
    if isinstance(x, BlockTuple) and isinstance(y, BlockTuple):
        if (x.n, x.l) != (y.n, y.l):
            raise ValueError(f"Cannot compare elements of R_{{{x.n},{x.l}}} and R_{{{y.n},{y.l}}}")
        return all(a & ~b == 0 for a, b in zip(x.masks, y.masks))
    if isinstance(x, SignVector) and isinstance(y, SignVector):
        if x.n != y.n:
            raise ValueError(f"Cannot compare sign vectors of lengths {x.n} and {y.n}")
        pairs = list(zip(x.entries, y.entries))
        return all(v in (0, w) for v, w in pairs) or all(v in (0, -w) for v, w in pairs)
    raise TypeError(f"Cannot compare {type(x).__name__} with {type(y).__name__}")
