"""Flag f- and h-vectors, f- and h-vectors, maximal-chain keys and Eulerian numbers, by brute force and closed form"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/analysis/enumeration.ipynb.

# %% auto #0
__all__ = ['FlagVector', 'IntPolynomial', 'MaximalChainKey', 'flag_f_brute', 'flag_f_closed', 'flag_f_closed_vector',
           'flag_h', 'flag_f_from_h', 'moebius_invariant', 'flag_h_descents', 'bounded_flag_f', 'bounded_flag_h', 'fh_from_flag',
           'max_chain_count', 'chain_from_key', 'all_chain_keys', 'eulerian', 'eulerian_witnesses',
           'eulerian_bijection_check', 'surjection_identity', 'chains_by_interval', 'f_d_closed', 'f_vector_closed',
           'h_series_closed', 'h1_closed', 'VectorTable', 'vector_table']

# %% ../../nbs/analysis/enumeration.ipynb #41c7d0e2
import sys
from math import comb, factorial
from itertools import combinations, permutations
from typing import Any, Dict, Iterable, Iterator, List, Sequence, Tuple
from dataclasses import dataclass, field

from ..core.sign_vectors import BlockTuple
from ..core.poset import Bound, Family, GradedPoset, build_poset, iter_bits
from ..core.guards import GuardLimits, check_guard
from .shelling import label_chain, labeled_maximal_chains
from .flows import whitney

# %% ../../nbs/analysis/enumeration.ipynb #8d2e51a0
@dataclass(frozen=True)
class FlagVector:
    """Values indexed by the subsets S of the rank set, stored densely by bitmask."""

    ranks: Tuple[int, ...]  # Rank values; bit k of a mask stands for ranks[k]
    values: Tuple[int, ...]  # values[mask] for every mask in [0, 2^d)

    def __post_init__(self):
        if len(self.values) != 1 << len(self.ranks):
            raise ValueError(f"Expected {1 << len(self.ranks)} values for {len(self.ranks)} ranks, got {len(self.values)}")

    @property
    def d(self) -> int:  # Number of ranks
        return len(self.ranks)

    def mask(self,
             S: Iterable[int]  # Subset of the rank values
            ) -> int:  # Bitmask of S
        """Encode a rank subset."""
        pos = {r: k for k, r in enumerate(self.ranks)}
        m = 0
        for r in S:
            if r not in pos:
                raise ValueError(f"Rank {r} is not one of {self.ranks}")
            m |= 1 << pos[r]
        return m

    def subset(self, mask: int) -> Tuple[int, ...]:
        """Decode a bitmask into its sorted rank subset."""
        return tuple(self.ranks[k] for k in iter_bits(mask))

    def __getitem__(self, S: Iterable[int]) -> int:
        return self.values[self.mask(S)]

    def items(self) -> List[Tuple[Tuple[int, ...], int]]:  # (S, value) sorted by size, then lexicographically
        """Every entry in table order."""
        pairs = [(self.subset(m), v) for m, v in enumerate(self.values)]
        return sorted(pairs, key=lambda kv: (len(kv[0]), kv[0]))

# %% ../../nbs/analysis/enumeration.ipynb #0b9f6e13
def _trim(coefficients: Sequence[int]) -> Tuple[int, ...]:
    c = list(coefficients)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)

def _poly_mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out

def _one_minus_t_power(k: int) -> List[int]:
    return [(-1) ** i * comb(k, i) for i in range(k + 1)]

@dataclass(frozen=True, eq=False)
class IntPolynomial:
    """Integer polynomial; index = degree. Equality ignores trailing zeros."""

    coefficients: Tuple[int, ...]  # c_0, c_1, ...

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return _trim(self.coefficients) == _trim(other.coefficients)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(_trim(self.coefficients))

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def __call__(self, t: Any) -> Any:
        return sum(c * t ** i for i, c in enumerate(self.coefficients))

    @property
    def degree(self) -> int:  # -1 for the zero polynomial
        return len(_trim(self.coefficients)) - 1

    def __str__(self) -> str:
        terms = [f"{c}" if i == 0 else f"{c}t" if i == 1 else f"{c}t^{i}" for i, c in enumerate(self.coefficients)]
        return " + ".join(terms) if terms else "0"

# %% ../../nbs/analysis/enumeration.ipynb #c61a2f84
@dataclass(frozen=True)
class MaximalChainKey:
    """Index of a maximal chain of R_{n,l}: a (2l+1)-subset of [n+l] and a permutation of [n-l-1]."""

    A: Tuple[int, ...]  # Sorted c_1 < ... < c_{2l+1}
    pi: Tuple[int, ...]  # Permutation of 1..n-l-1 in one-line notation

    def starts(self) -> Tuple[int, ...]:  # a_i = c_{2i-1} - i + 1
        """Singleton blocks of the chain's bottom element."""
        return tuple(self.A[2 * i] - i for i in range(len(self.A) // 2 + 1))

    def splits(self) -> Tuple[int, ...]:  # b_i = c_{2i} - i
        """Block maxima of the chain's top element, except the last."""
        return tuple(self.A[2 * i + 1] - (i + 1) for i in range(len(self.A) // 2))

# %% ../../nbs/analysis/enumeration.ipynb #73e5c1d9
def flag_f_brute(p: GradedPoset,  # Finite graded poset
                 force: bool = False  # Lift the flag-vector size guard
                ) -> FlagVector:  # alpha_S: chains supported exactly at the ranks in S
    """Count chains by rank support, extending each chain one rank upward at a time."""
    ranks = tuple(p.rank_values())
    d = len(ranks)
    check_guard("d", d, GuardLimits.FLAG_MAX_D, force=force)
    by_rank = [p.elements_of_rank(r) for r in ranks]
    rank_masks = [sum(1 << i for i in members) for members in by_rank]
    values = [0] * (1 << d)
    values[0] = 1
    tops: Dict[int, Dict[int, int]] = {}  # mask -> {top element -> chains ending there}
    for mask in range(1, 1 << d):
        top = mask.bit_length() - 1
        rest = mask ^ (1 << top)
        if rest == 0:
            counts = {x: 1 for x in by_rank[top]}
        else:
            prev, q = tops[rest], rest.bit_length() - 1
            counts = {}
            for x in by_rank[top]:
                c = sum(prev.get(y, 0) for y in iter_bits(p.downsets[x] & rank_masks[q]))
                if c:
                    counts[x] = c
        tops[mask] = counts
        values[mask] = sum(counts.values())
    return FlagVector(ranks, tuple(values))

# %% ../../nbs/analysis/enumeration.ipynb #9e4b2d67
def flag_f_closed(n: int,  # Sign-vector length
                  l: int,  # Sign-change parameter
                  S: Iterable[int]  # Rank subset of [n-l]
                 ) -> int:  # alpha_S of R_{n,l}
    """Product formula for the flag f-vector of R_{n,l}."""
    rs = sorted(set(S))
    if any(r < 1 or r > n - l for r in rs):
        raise ValueError(f"S={rs} is not a subset of [1, {n - l}]")
    if not rs:
        return 1
    r1, rd = rs[0], rs[-1]
    multinomial = factorial(rd - r1)
    for a, b in zip(rs, rs[1:]):
        multinomial //= factorial(b - a)
    return comb(l + r1 - 1, l) * comb(n, l + rd) * comb(2 * l + rd, rd - r1) * multinomial

def flag_f_closed_vector(n: int, l: int) -> FlagVector:
    """Closed-form flag f-vector of R_{n,l} over all subsets of [n-l]."""
    ranks = tuple(range(1, n - l + 1))
    fv = FlagVector(ranks, (0,) * (1 << len(ranks)))
    return FlagVector(ranks, tuple(flag_f_closed(n, l, fv.subset(m)) for m in range(1 << len(ranks))))

# %% ../../nbs/analysis/enumeration.ipynb #5a0c8b3e
def flag_h(fv: FlagVector  # Flag f-vector
          ) -> FlagVector:  # beta_S = sum over T in S of (-1)^{|S-T|} alpha_T
    """Moebius inversion over the subset lattice."""
    v = list(fv.values)
    for k in range(fv.d):
        bit = 1 << k
        for m in range(len(v)):
            if m & bit:
                v[m] -= v[m ^ bit]
    return FlagVector(fv.ranks, tuple(v))

def flag_f_from_h(hv: FlagVector  # Flag h-vector
                 ) -> FlagVector:  # alpha_S = sum over T in S of beta_T
    """Zeta transform, the inverse of flag_h."""
    v = list(hv.values)
    for k in range(hv.d):
        bit = 1 << k
        for m in range(len(v)):
            if m & bit:
                v[m] += v[m ^ bit]
    return FlagVector(hv.ranks, tuple(v))

def moebius_invariant(p: GradedPoset,  # Finite graded poset
                      S: Iterable[int]  # Subset of the rank values of p
                     ) -> int:  # mu(0-hat, 1-hat) of the rank-selected subposet with new bounds
    """Moebius function across the rank selection of p to S, equal to (-1)^(|S|+1) beta_S."""
    ranks = set(p.rank_values())
    selected = set(S)
    if not selected <= ranks:
        raise ValueError(f"S={sorted(selected)} is not a subset of the ranks {sorted(ranks)}")
    members = [i for i in sorted(range(len(p)), key=lambda i: p.ranks[i]) if p.ranks[i] in selected]
    member_mask = sum(1 << i for i in members)
    mu: Dict[int, int] = {}
    for x in members:
        # mu(0-hat, x) = -(1 + sum of mu(0-hat, y) over selected y < x)
        below = p.downsets[x] & member_mask & ~(1 << x)
        mu[x] = -1 - sum(mu[y] for y in iter_bits(below))
    return -1 - sum(mu.values())

# %% ../../nbs/analysis/enumeration.ipynb #e0f1d2a5
def flag_h_descents(n: int,  # Sign-vector length
                    l: int,  # Sign-change parameter
                    force: bool = False  # Lift the brute-force guard
                   ) -> FlagVector:  # beta_S: maximal chains of the bounded R_{n,l} with descent set S
    """Flag h-vector by counting descent sets of labeled maximal chains."""
    check_guard("n", n, GuardLimits.BRUTE_MAX_N, force=force)
    ranks = tuple(range(1, n - l + 1))
    counts = [0] * (1 << len(ranks))
    for chain in labeled_maximal_chains(n, l, force=True):
        counts[sum(1 << (i - 1) for i in chain.descents)] += 1
    return FlagVector(ranks, tuple(counts))

def bounded_flag_f(fv: FlagVector  # Flag f-vector of P with ranks 1..d
                  ) -> FlagVector:  # Flag f-vector of P with 0-hat and 1-hat, ranks 0..d+1
    """Chains of the bounded extension: 0-hat and 1-hat extend every chain uniquely."""
    ranks = (fv.ranks[0] - 1,) + fv.ranks + (fv.ranks[-1] + 1,)
    inner = (1 << fv.d) - 1
    return FlagVector(ranks, tuple(fv.values[(m >> 1) & inner] for m in range(1 << (fv.d + 2))))

def bounded_flag_h(hv: FlagVector  # Flag h-vector of P with ranks 1..d
                  ) -> FlagVector:  # Flag h-vector of the bounded extension, ranks 0..d+1
    """Same values on interior subsets, zero on any subset containing 0-hat's or 1-hat's rank."""
    ranks = (hv.ranks[0] - 1,) + hv.ranks + (hv.ranks[-1] + 1,)
    ends = 1 | (1 << (hv.d + 1))
    return FlagVector(ranks, tuple(0 if m & ends else hv.values[m >> 1] for m in range(1 << (hv.d + 2))))

# %% ../../nbs/analysis/enumeration.ipynb #1f27a6b8
def fh_from_flag(fv: FlagVector  # Flag f-vector of a poset with d ranks
                ) -> Tuple[IntPolynomial, IntPolynomial]:  # (F, H)
    """f-vector by rank-size sums, h-vector by beta sums, checked against H(t) = (1-t)^d F(t/(1-t))."""
    d = fv.d
    f = [0] * (d + 1)
    h_beta = [0] * (d + 1)
    hv = flag_h(fv)
    for m in range(1 << d):
        k = bin(m).count("1")
        f[k] += fv.values[m]
        h_beta[k] += hv.values[m]
    h_sub = [0] * (d + 1)
    for i, fi in enumerate(f):
        for j, c in enumerate(_poly_mul([0] * i + [fi], _one_minus_t_power(d - i))):
            h_sub[j] += c
    if h_sub != h_beta:
        raise ValueError(f"h-vector mismatch: substitution gives {h_sub}, flag h sums give {h_beta}")
    return IntPolynomial(tuple(f)), IntPolynomial(tuple(h_beta))

# %% ../../nbs/analysis/enumeration.ipynb #4c8d3f70
def max_chain_count(n: int,  # Sign-vector length
                    l: int  # Sign-change parameter
                   ) -> int:  # Number of maximal chains of R_{n,l}
    """binom(n+l, 2l+1) * (n-l-1)!"""
    if not 0 <= l < n:
        raise ValueError(f"Need 0 <= l < n, got n={n}, l={l}")
    return comb(n + l, 2 * l + 1) * factorial(n - l - 1)

def chain_from_key(k: MaximalChainKey,  # Key (A, pi)
                   n: int,  # Sign-vector length
                   l: int  # Sign-change parameter
                  ) -> Tuple[BlockTuple, ...]:  # Maximal chain of R_{n,l}, bottom first
    """Build the maximal chain indexed by a key: start at singletons, insert the rest in pi-order."""
    A, pi = tuple(k.A), tuple(k.pi)
    if len(A) != 2 * l + 1 or list(A) != sorted(set(A)) or A[0] < 1 or A[-1] > n + l:
        raise ValueError(f"A={A} is not a {2 * l + 1}-subset of [1, {n + l}]")
    if sorted(pi) != list(range(1, n - l)):
        raise ValueError(f"pi={pi} is not a permutation of [1, {n - l - 1}]")
    starts, splits = k.starts(), k.splits()
    bounds = (0,) + splits + (n,)
    x = BlockTuple(n, tuple((a,) for a in starts))
    rest = sorted(set(range(1, n + 1)) - set(starts))
    chain = [x]
    for p in pi:
        a = rest[p - 1]
        block = next(i for i in range(l + 1) if bounds[i] < a <= bounds[i + 1])
        chain.append(chain[-1].with_element(block + 1, a))
    return tuple(chain)

def all_chain_keys(n: int, l: int) -> Iterator[MaximalChainKey]:
    """Every key (A, pi) for R_{n,l}."""
    for A in combinations(range(1, n + l + 1), 2 * l + 1):
        for pi in permutations(range(1, n - l)):
            yield MaximalChainKey(A, pi)

# %% ../../nbs/analysis/enumeration.ipynb #b8a9e3c1
def _descents(perm: Sequence[int]) -> Tuple[int, ...]:
    return tuple(i for i in range(1, len(perm)) if perm[i - 1] > perm[i])

def eulerian_witnesses(n: int,  # Permutation length
                       d: int  # Number of descents
                      ) -> List[Tuple[int, ...]]:  # Permutations of [n] with d descents, lexicographic
    """Permutations of [n] with exactly d descents."""
    return [p for p in permutations(range(1, n + 1)) if len(_descents(p)) == d]

def eulerian(n: int,  # Permutation length
             d: int  # Number of descents, 0 <= d <= n
            ) -> int:  # Eulerian number <n, d>
    """Count the permutations of [n] with d descents."""
    if not 0 <= d <= max(n, 0):
        raise ValueError(f"Need 0 <= d <= n, got n={n}, d={d}")
    return sum(1 for p in permutations(range(1, n + 1)) if len(_descents(p)) == d)

def eulerian_bijection_check(n: int  # Permutation length
                            ) -> bool:  # True if every permutation keeps its descent set
    """Map pi to the chain 0hat < ({pi(1)}) < ({pi(1), pi(2)}) < ... < 1hat of the bounded R_{n,0} and compare descents."""
    for p in permutations(range(1, n + 1)):
        chain = [Bound.ZERO] + [BlockTuple(n, (tuple(sorted(p[:k])),)) for k in range(1, n + 1)] + [Bound.ONE]
        if label_chain(chain).descents != _descents(p):
            return False
    return True

# %% ../../nbs/analysis/enumeration.ipynb #6d0e4f92
def surjection_identity(s: int,  # Set size, s >= 0
                        d: int  # Number of parts, d >= 1
                       ) -> Tuple[int, int]:  # (sum of multinomials over positive compositions, inclusion-exclusion sum)
    """Both sides of the surjection-count identity."""
    if s < 0 or d < 1:
        raise ValueError(f"Need s >= 0 and d >= 1, got s={s}, d={d}")
    lhs = 0
    for cuts in combinations(range(1, s), d - 1):
        parts = [b - a for a, b in zip((0,) + cuts, cuts + (s,))]
        term = factorial(s)
        for part in parts:
            term //= factorial(part)
        lhs += term
    if s == 0:
        lhs = 0
    rhs = sum((-1) ** i * comb(d, i) * (d - i) ** s for i in range(d + 1))
    return lhs, rhs

# %% ../../nbs/analysis/enumeration.ipynb #f3a7b150
def chains_by_interval(n: int,  # Sign-vector length
                       l: int,  # Sign-change parameter
                       r: int,  # Bottom rank, r >= 1
                       s: int,  # Rank span, the chain ends at rank r+s
                       d: int  # Chain length (d+1 elements)
                      ) -> int:  # Number of such chains in R_{n,l}
    """Chains of length d from rank r to rank r+s, by inclusion-exclusion over the set compositions."""
    return sum((-1) ** i * comb(d, i) * comb(l + r - 1, l) * comb(n, l + r + s) * comb(2 * l + r + s, s) * (d - i) ** s
               for i in range(d + 1))

def f_d_closed(n: int,  # Sign-vector length
               l: int,  # Sign-change parameter
               d: int  # Chain length, 0 <= d <= n-l-1
              ) -> int:  # f_d: chains of R_{n,l} with d+1 elements
    """Sum chains_by_interval over bottom ranks r and spans s >= d."""
    if not 0 <= d <= n - l - 1:
        raise ValueError(f"Need 0 <= d <= {n - l - 1}, got d={d}")
    return sum(chains_by_interval(n, l, r, s, d) for r in range(1, n - l + 1) for s in range(d, n - l - r + 1))

def f_vector_closed(n: int, l: int) -> IntPolynomial:
    """F(t) = 1 + f_0 t + ... + f_{n-l-1} t^{n-l} from the closed chain counts."""
    return IntPolynomial((1,) + tuple(f_d_closed(n, l, d) for d in range(n - l)))

def h_series_closed(n: int,  # Sign-vector length
                    l: int  # Sign-change parameter
                   ) -> IntPolynomial:  # H(t), coefficients h_0..h_{n-l}
    """Truncated generating-function formula for the h-vector of R_{n,l}."""
    if not 0 <= l < n:
        raise ValueError(f"Need 0 <= l < n, got n={n}, l={l}")
    top = n - l
    g = [0] * (top + 1)
    g[0] = 1
    for j in range(top):
        for r in range(n - l):
            for s in range(n - l - r):
                g[j + 1] += comb(l + r, l) * comb(n, l + r + s + 1) * comb(2 * l + r + s + 1, s) * j ** s
    return IntPolynomial(tuple(_poly_mul(_one_minus_t_power(top), g)[:top + 1]))

def h1_closed(n: int, l: int) -> int:
    """h_1 = l - n + (-1)^(l+1) + sum_i (-1)^(l-i) binom(n, i) 2^(n-i)"""
    return l - n + (-1) ** (l + 1) + sum((-1) ** (l - i) * comb(n, i) * 2 ** (n - i) for i in range(l + 1))

# %% ../../nbs/analysis/enumeration.ipynb #2c9b7ad4
@dataclass
class VectorTable:
    """Brute-force and closed-form columns of one vector, with a per-row equality flag."""

    which: str  # f, h, flagf, flagh or whitney
    n: int  # Sign-vector length
    l: int  # Sign-change parameter
    header: List[str]  # Column names
    rows: List[List[Any]] = field(default_factory=list)  # Table rows

    @property
    def passed(self) -> bool:  # True if every row that has an equality flag is equal
        if "equal" not in self.header:
            return True
        k = self.header.index("equal")
        return all(row[k] for row in self.rows)

    def to_dict(self) -> Dict[str, Any]:  # JSON-ready table
        """Serialize the table; subsets become sorted lists."""
        return {"which": self.which, "n": self.n, "l": self.l, "passed": self.passed,
                "rows": [dict(zip(self.header, [list(v) if isinstance(v, tuple) else v for v in row]))
                         for row in self.rows]}

def vector_table(n: int,  # Sign-vector length
                 l: int,  # Sign-change parameter
                 which: str = "h",  # f, h, flagf, flagh or whitney
                 force: bool = False,  # Lift the guards
                 debug: bool = False  # Whether to print debug information
                ) -> VectorTable:  # Table with brute columns when n is within the brute-force limit
    """Tabulate a vector of R_{n,l} both ways."""
    if not 0 <= l < n:
        raise ValueError(f"Need 0 <= l < n, got n={n}, l={l}")
    check_guard("n", n, GuardLimits.TABLE_MAX_N, force=force, debug=debug)
    brute = n <= GuardLimits.BRUTE_MAX_N
    p = build_poset(n, l, Family.R, debug=debug) if brute else None
    fv = flag_f_brute(p) if brute and which != "whitney" else None

    def _rows(keys, closed, brute_vals):
        if brute_vals is None:
            return [[k, c] for k, c in zip(keys, closed)]
        return [[k, b, c, b == c] for k, b, c in zip(keys, brute_vals, closed)]

    cols = ["brute", "closed", "equal"] if brute else ["closed"]
    if which == "f":
        F = f_vector_closed(n, l)
        keys = list(range(-1, n - l))
        table = VectorTable(which, n, l, ["i"] + cols,
                            _rows(keys, list(F.coefficients), list(fh_from_flag(fv)[0].coefficients) if brute else None))
    elif which == "h":
        H = h_series_closed(n, l)
        keys = list(range(n - l + 1))
        table = VectorTable(which, n, l, ["i"] + cols,
                            _rows(keys, list(H.coefficients), list(fh_from_flag(fv)[1].coefficients) if brute else None))
        if l == 0 and brute:
            table.header.append("eulerian")
            for row in table.rows:
                row.append(eulerian(n, row[0]))
    elif which == "flagf":
        closed = flag_f_closed_vector(n, l)
        keys = [S for S, _ in closed.items()]
        table = VectorTable(which, n, l, ["S"] + cols,
                            _rows(keys, [v for _, v in closed.items()], [fv[S] for S in keys] if brute else None))
    elif which == "flagh":
        closed = flag_h(flag_f_closed_vector(n, l))
        keys = [S for S, _ in closed.items()]
        table = VectorTable(which, n, l, ["S"] + cols,
                            _rows(keys, [v for _, v in closed.items()], [flag_h(fv)[S] for S in keys] if brute else None))
        if brute:
            descents = flag_h_descents(n, l, force=force)
            table.header.append("descents")
            for row in table.rows:
                row.append(descents[row[0]])
                row[3] = row[3] and row[-1] == row[2]
    elif which == "whitney":
        closed = whitney(n, l, Family.R)
        keys = list(range(1, n - l + 1))
        table = VectorTable(which, n, l, ["r"] + cols, _rows(keys, closed, p.rank_sizes() if brute else None))
    else:
        raise ValueError(f"Unknown vector {which!r}; expected f, h, flagf, flagh or whitney")
    if debug:
        print(f"DEBUG enumeration: {which} table for R_{{{n},{l}}} has {len(table.rows)} rows, passed={table.passed}",
              file=sys.stderr)
    return table
