"""Projective sign vectors and their block-tuple encoding"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/sign_vectors.ipynb.

# %% auto #0
__all__ = ['SIGN_SYMBOLS', 'sign_changes', 'SignVector', 'BlockTuple', 'normalize', 'to_block_tuple', 'from_block_tuple',
           'canonical_sign_vectors']

# %% ../../nbs/core/sign_vectors.ipynb #5b0e7c31
from typing import Iterable, Iterator, Sequence, Tuple, Union
from dataclasses import dataclass
from itertools import product

# %% ../../nbs/core/sign_vectors.ipynb #a84d19f2
SIGN_SYMBOLS = {"+": 1, "-": -1, "−": -1, "0": 0, 1: 1, -1: -1, 0: 0}  # Accepted input symbols -> entry
_SIGN_CHARS = {1: "+", -1: "-", 0: "0"}

def _parse_entry(symbol: Union[str, int]  # One of +, -, −, 0 or the ints 1, -1, 0
                ) -> int:  # Entry in {1, -1, 0}
    """Parse a single sign symbol."""
    try:
        return SIGN_SYMBOLS[symbol]
    except (KeyError, TypeError):
        raise ValueError(f"Invalid sign symbol {symbol!r}") from None

def sign_changes(entries: Sequence[int]  # Entries in {1, -1, 0}
                ) -> int:  # Adjacent opposite-sign pairs in the nonzero subsequence
    """Count the sign changes of a sign vector."""
    nonzero = [e for e in entries if e != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)

# %% ../../nbs/core/sign_vectors.ipynb #0c6f42de
@dataclass(frozen=True)
class SignVector:
    """Projective sign vector in canonical form (first nonzero entry is +)."""

    entries: Tuple[int, ...]  # Entries in {1, -1, 0}

    def __post_init__(self):
        bad = [e for e in self.entries if e not in (1, -1, 0)]
        if bad:
            raise ValueError(f"Sign vector entries must be 1, -1 or 0, got {bad[0]!r} in {self.entries}")
        first = next((e for e in self.entries if e != 0), 0)
        if first == 0:
            raise ValueError(f"The zero vector {self.entries} is not a projective sign vector")
        if first != 1:
            raise ValueError(f"{self.entries} is not canonical: the first nonzero entry must be +; use normalize")

    @property
    def n(self) -> int:  # Length of the vector
        return len(self.entries)

    @property
    def sign_changes(self) -> int:  # Number of sign changes
        return sign_changes(self.entries)

    @property
    def support(self) -> Tuple[int, ...]:  # 1-based positions of the nonzero entries
        return tuple(i + 1 for i, e in enumerate(self.entries) if e != 0)

    @property
    def rank(self) -> int:  # Rank in P_{n,l}: number of nonzero entries
        return len(self.support)

    def __str__(self) -> str:
        return "".join(_SIGN_CHARS[e] for e in self.entries)

# %% ../../nbs/core/sign_vectors.ipynb #e61b7a04
@dataclass(frozen=True)
class BlockTuple:
    """Element (A_1, ..., A_{l+1}) of R_{n,l}: disjoint increasing blocks of [n]."""

    n: int  # Length of the underlying sign vectors
    blocks: Tuple[Tuple[int, ...], ...]  # Sorted blocks, max(A_i) < min(A_{i+1})

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if not self.blocks:
            raise ValueError("A block tuple needs at least one block")
        previous = 0
        for block in self.blocks:
            if not block:
                raise ValueError(f"Empty block in {self.blocks}")
            if list(block) != sorted(set(block)):
                raise ValueError(f"Block {block} is not strictly increasing")
            if block[0] <= previous or block[-1] > self.n:
                raise ValueError(f"Blocks {self.blocks} are not ordered disjoint subsets of [{self.n}]")
            previous = block[-1]

    @classmethod
    def of(cls,
           n: int,  # Length of the underlying sign vectors
           *blocks: Iterable[int]  # Blocks in any order of their elements
          ) -> "BlockTuple":  # Validated block tuple
        """Build a block tuple from loose iterables, e.g. `BlockTuple.of(9, {2,4}, {6}, {8})`."""
        return cls(n, tuple(tuple(sorted(b)) for b in blocks))

    @property
    def l(self) -> int:  # Number of sign changes
        return len(self.blocks) - 1

    @property
    def support(self) -> Tuple[int, ...]:  # Union of all blocks, sorted
        return tuple(a for block in self.blocks for a in block)

    @property
    def rank(self) -> int:  # Rank in R_{n,l}, between 1 and n-l
        return len(self.support) - self.l

    @property
    def masks(self) -> Tuple[int, ...]:  # Blocks as bitsets (bit a-1 for element a)
        return tuple(sum(1 << (a - 1) for a in block) for block in self.blocks)

    def with_element(self,
                     block: int,  # 1-based index of the receiving block
                     a: int  # Element to insert
                    ) -> "BlockTuple":  # Tuple with `a` added to block `block`
        """Insert `a` into a block, validating the result."""
        blocks = list(self.blocks)
        blocks[block - 1] = tuple(sorted(blocks[block - 1] + (a,)))
        return BlockTuple(self.n, tuple(blocks))

    def __str__(self) -> str:
        return "(" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + ")"

# %% ../../nbs/core/sign_vectors.ipynb #7d2fe9a5
def normalize(raw: Union[str, Sequence[Union[str, int]]]  # Symbols from {+, -, 0} (string or sequence)
             ) -> SignVector:  # Canonical projective representative
    """Normalize a raw sign vector so that its first nonzero entry is +."""
    entries = tuple(_parse_entry(s) for s in raw)
    if not entries:
        raise ValueError("A sign vector needs at least one entry")
    first = next((e for e in entries if e != 0), 0)
    if first == 0:
        raise ValueError(f"The zero vector {raw!r} is not a projective sign vector")
    return SignVector(tuple(first * e for e in entries))

# %% ../../nbs/core/sign_vectors.ipynb #c2b8a6e0
def to_block_tuple(v: SignVector  # Canonical sign vector
                  ) -> BlockTuple:  # Runs of equal signs, as blocks of positions
    """Encode a sign vector as the block tuple of its consecutive sign runs."""
    blocks, current, sign = [], [], None
    for i, e in enumerate(v.entries, start=1):
        if e == 0:
            continue
        if sign is not None and e != sign:
            blocks.append(tuple(current))
            current = []
        current.append(i)
        sign = e
    blocks.append(tuple(current))
    return BlockTuple(v.n, tuple(blocks))

def from_block_tuple(t: BlockTuple  # Block tuple of R_{n,l}
                    ) -> SignVector:  # Sign vector with v_i = (-1)^(j-1) for i in A_j
    """Decode a block tuple into its sign vector."""
    entries = [0] * t.n
    for j, block in enumerate(t.blocks):
        for i in block:
            entries[i - 1] = -1 if j % 2 else 1
    return SignVector(tuple(entries))

# %% ../../nbs/core/sign_vectors.ipynb #19aa0d73
def canonical_sign_vectors(n: int  # Length of the vectors
                          ) -> Iterator[SignVector]:  # Canonical vectors, lexicographic on sign strings
    """Enumerate every projective sign vector of length n once."""
    found = []
    for first in range(n):
        for rest in product((1, -1, 0), repeat=n - first - 1):
            found.append(SignVector((0,) * first + (1,) + rest))
    yield from sorted(found, key=str)
