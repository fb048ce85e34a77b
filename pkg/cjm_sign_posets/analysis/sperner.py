"""Maximum antichains, Greene-Kleitman numbers, Sperner decisions, LYM checks and the P_{n,l} sweep"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/analysis/sperner.ipynb.

# %% auto #0
__all__ = ['AntichainCertificate', 'comparabilities', 'max_antichain', 'max_union_antichains',
           'greene_kleitman_certificate', 'max_union_antichains_brute', 'SpernerReport', 'is_sperner',
           'is_strongly_sperner', 'lym_rank_pair_check', 'lym_check', 'lym_sum', 'SweepReport', 'sperner_sweep']

# %% ../../nbs/analysis/sperner.ipynb #0e1f2a3b
import sys
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Tuple
from dataclasses import dataclass, field
import networkx as nx
from fastcore.parallel import parallel

from ..core.poset import Family, GradedPoset, iter_bits
from ..core.poset_store import PosetStore, get_or_build
from ..core.guards import GuardLimits, check_guard
from ..core.exports import rows_to_csv

# %% ../../nbs/analysis/sperner.ipynb #4c5d6e7f
@dataclass
class AntichainCertificate:
    """A union of j antichains together with a chain partition bounding it from above."""

    j: int  # Number of antichains
    size: int  # Maximum size of a union of j antichains
    antichain: Tuple[int, ...]  # Element indices of a union of j antichains (a single antichain when j = 1)
    chain_cover: List[Tuple[int, ...]]  # Chain partition with sum of min(|C|, j) equal to size

    @property
    def tight(self) -> bool:  # True if the lower and upper witnesses meet
        return len(self.antichain) == self.size == sum(min(len(c), self.j) for c in self.chain_cover)

def comparabilities(p: GradedPoset) -> List[Tuple[int, int]]:
    """Every strict comparability x < y as an index pair."""
    return [(i, j) for i in range(len(p)) for j in iter_bits(p.upsets[i] & ~(1 << i))]

# %% ../../nbs/analysis/sperner.ipynb #8a9b0c1d
def max_antichain(p: GradedPoset  # Finite poset
                 ) -> AntichainCertificate:  # Maximum antichain with a chain cover of the same size
    """Dilworth via bipartite matching: the unmatched structure gives the chains, Koenig's cover the antichain."""
    G = nx.Graph()
    left = [("L", i) for i in range(len(p))]
    G.add_nodes_from(left)
    G.add_nodes_from(("R", i) for i in range(len(p)))
    G.add_edges_from((("L", i), ("R", j)) for i, j in comparabilities(p))
    matching = nx.bipartite.hopcroft_karp_matching(G, top_nodes=left)
    cover = nx.bipartite.to_vertex_cover(G, matching, top_nodes=left)
    antichain = tuple(i for i in range(len(p)) if ("L", i) not in cover and ("R", i) not in cover)
    nxt = {i: matching[("L", i)][1] for i in range(len(p)) if ("L", i) in matching}
    has_prev = set(nxt.values())
    chains = []
    for start in range(len(p)):
        if start in has_prev:
            continue
        chain = [start]
        while chain[-1] in nxt:
            chain.append(nxt[chain[-1]])
        chains.append(tuple(chain))
    return AntichainCertificate(1, len(antichain), antichain, chains)

# %% ../../nbs/analysis/sperner.ipynb #2e3f4a5b
def _gk_network(p: GradedPoset, j: int) -> nx.DiGraph:
    # Each unit of flow is a chain: j to open it, -1 per element it takes
    size = len(p)
    G = nx.DiGraph()
    G.add_node("s", demand=-size)
    G.add_node("t", demand=size)
    G.add_edge("s", "t", capacity=size, weight=0)
    for v in range(size):
        G.add_edge("s", ("in", v), capacity=1, weight=j)
        G.add_edge(("in", v), ("out", v), capacity=1, weight=-1)
        G.add_edge(("out", v), "t", capacity=1, weight=0)
    for v, w in comparabilities(p):
        G.add_edge(("out", v), ("in", w), capacity=1, weight=0)
    return G

def _gk_solve(p: GradedPoset, j: int) -> Tuple[int, List[Tuple[int, ...]]]:
    if j < 1:
        raise ValueError(f"j must be at least 1, got {j}")
    if len(p) == 0:
        return 0, []
    cost, flow = nx.network_simplex(_gk_network(p, j))
    chains, used = [], set()
    for v in range(len(p)):
        if flow["s"].get(("in", v), 0) != 1:
            continue
        chain = [v]
        while True:
            nxt = [node[1] for node, f in flow[("out", chain[-1])].items() if node != "t" and f == 1]
            if not nxt:
                break
            chain.append(nxt[0])
        chains.append(tuple(chain))
        used.update(chain)
    chains.extend((v,) for v in range(len(p)) if v not in used)
    return len(p) + cost, chains

def max_union_antichains(p: GradedPoset,  # Finite poset
                         j: int  # Number of antichains, j >= 1
                        ) -> int:  # Maximum size of a union of j antichains
    """Greene-Kleitman number by min-cost flow: min over chain partitions of the sum of min(|C|, j)."""
    return _gk_solve(p, j)[0]

def greene_kleitman_certificate(p: GradedPoset,  # Finite poset
                                j: int  # Number of antichains
                               ) -> AntichainCertificate:  # Optimal chain partition plus the best union of j ranks
    """Max union of j antichains with its dual chain partition; the lower witness is the union of the j largest ranks."""
    value, chains = _gk_solve(p, j)
    by_size = sorted(p.rank_values(), key=lambda r: (-len(p.elements_of_rank(r)), r))[:j]
    union = tuple(sorted(i for r in by_size for i in p.elements_of_rank(r)))
    return AntichainCertificate(j, value, union, chains)

# %% ../../nbs/analysis/sperner.ipynb #6c7d8e9f
def max_union_antichains_brute(p: GradedPoset,  # Poset with at most GK_BRUTE_MAX elements
                               j: int,  # Number of antichains
                               force: bool = False  # Lift the size guard
                              ) -> int:  # Largest subset whose longest chain has at most j elements
    """Exhaustive oracle: a set is a union of j antichains exactly when it contains no chain of j+1 elements."""
    check_guard("|P|", len(p), GuardLimits.GK_BRUTE_MAX, force=force)
    order = sorted(range(len(p)), key=lambda i: p.ranks[i])
    strict_down = [p.downsets[i] & ~(1 << i) for i in range(len(p))]
    best = 0
    for mask in range(1 << len(p)):
        size = bin(mask).count("1")
        if size <= best:
            continue
        height, ok = {}, True
        for v in order:
            if not (mask >> v) & 1:
                continue
            h = 1 + max((height[u] for u in iter_bits(strict_down[v] & mask)), default=0)
            if h > j:
                ok = False
                break
            height[v] = h
        if ok:
            best = size
    return best

# %% ../../nbs/analysis/sperner.ipynb #0a1b2c3d
@dataclass
class SpernerReport:
    """Maximum unions of j antichains against the j largest Whitney numbers."""

    rows: List[Dict[str, Any]] = field(default_factory=list)  # {"j", "max_union", "largest_ranks"}
    certificates: List[AntichainCertificate] = field(default_factory=list)  # One per j

    @property
    def passed(self) -> bool:  # True if every j is realized by the largest ranks
        return all(r["max_union"] == r["largest_ranks"] for r in self.rows)

def _largest_ranks(p: GradedPoset, j: int) -> int:
    return sum(sorted(p.rank_sizes(), reverse=True)[:j])

def is_sperner(p: GradedPoset) -> SpernerReport:
    """Compare the maximum antichain with the largest rank."""
    cert = max_antichain(p)
    return SpernerReport([{"j": 1, "max_union": cert.size, "largest_ranks": _largest_ranks(p, 1)}], [cert])

def is_strongly_sperner(p: GradedPoset) -> SpernerReport:
    """Compare every Greene-Kleitman number with the sum of the j largest ranks, j up to the number of ranks."""
    report = SpernerReport()
    for j in range(1, len(p.rank_values()) + 1):
        cert = greene_kleitman_certificate(p, j)
        report.rows.append({"j": j, "max_union": cert.size, "largest_ranks": _largest_ranks(p, j)})
        report.certificates.append(cert)
    return report

# %% ../../nbs/analysis/sperner.ipynb #4e5f6a7b
def lym_rank_pair_check(p: GradedPoset,  # Graded poset
                        r: int  # 1-based position of the lower rank among the poset's ranks
                       ) -> bool:  # True if ranks r and r+1 admit a normalized matching
    """Feasibility of a flow that saturates supplies W_{r+1} on rank r and demands W_r on rank r+1."""
    ranks = p.rank_values()
    if not 1 <= r < len(ranks):
        raise ValueError(f"r must lie in [1, {len(ranks) - 1}], got {r}")
    lower, upper = p.elements_of_rank(ranks[r - 1]), p.elements_of_rank(ranks[r])
    w_low, w_up = len(lower), len(upper)
    G = nx.DiGraph()
    G.add_node("s")
    G.add_node("t")
    for x in lower:
        G.add_edge("s", ("x", x), capacity=w_up)
        for y in p.covers[x]:
            G.add_edge(("x", x), ("y", y))
    for y in upper:
        G.add_edge(("y", y), "t", capacity=w_low)
    return nx.maximum_flow_value(G, "s", "t") == w_low * w_up

def lym_check(p: GradedPoset) -> bool:
    """Normalized matching between every pair of consecutive ranks, which yields the LYM inequality."""
    return all(lym_rank_pair_check(p, r) for r in range(1, len(p.rank_values())))

def lym_sum(p: GradedPoset,  # Graded poset
            antichain: Iterable[int]  # Element indices
           ) -> Fraction:  # Sum of 1/W_rank(x)
    """Left side of the LYM inequality for a set of elements."""
    sizes = dict(zip(p.rank_values(), p.rank_sizes()))
    return sum((Fraction(1, sizes[p.ranks[i]]) for i in antichain), Fraction(0))

# %% ../../nbs/analysis/sperner.ipynb #8c9d0e1f
@dataclass
class SweepReport:
    """One row per P_{n,l}: maximum antichain against the largest Whitney number."""

    n_max: int  # Largest n swept
    include_lym: bool = False  # Whether the lym column is present
    rows: List[Dict[str, Any]] = field(default_factory=list)  # {"n", "l", "size", "max_antichain", "max_W", "verdict"[, "lym"]}

    @property
    def passed(self) -> bool:  # True if every row is Sperner
        return all(r["verdict"] == "pass" for r in self.rows)

    @property
    def header(self) -> List[str]:  # CSV columns
        return ["n", "l", "size", "max_antichain", "max_W", "verdict"] + (["lym"] if self.include_lym else [])

    def to_csv(self) -> str:
        """Sweep table as CSV."""
        return rows_to_csv(self.header, [[r[k] for k in self.header] for r in self.rows])

    def to_dict(self) -> Dict[str, Any]:  # JSON-ready summary
        """Serialize the sweep."""
        return {"n_max": self.n_max, "passed": self.passed, "rows": self.rows}

def _sweep_row(nl: Tuple[int, int],  # (n, l)
               include_lym: bool = False,  # Add the normalized-matching column
               store: Optional[PosetStore] = None  # Shared poset store (serial runs only)
              ) -> Dict[str, Any]:  # One table row
    """Sperner data for one P_{n,l}."""
    n, l = nl
    p = get_or_build(store, n, l, Family.P)
    size = max_antichain(p).size
    max_w = max(p.rank_sizes())
    row = {"n": n, "l": l, "size": len(p), "max_antichain": size, "max_W": max_w,
           "verdict": "pass" if size == max_w else "fail"}
    if include_lym:
        row["lym"] = lym_check(p)
    return row

def sperner_sweep(n_max: int,  # Largest n, 1 <= n_max
                  jobs: int = 1,  # Parallel workers (<= 1 runs serially)
                  include_lym: bool = False,  # Add a normalized-matching data column
                  store: Optional[PosetStore] = None,  # Poset store shared with the caller (serial runs)
                  force: bool = False,  # Lift the sweep guard
                  debug: bool = False  # Whether to print debug information
                 ) -> SweepReport:  # Rows ordered by n, then l
    """Check the Sperner property of P_{n,l} for every 0 <= l < n <= n_max."""
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    check_guard("n_max", n_max, GuardLimits.SWEEP_MAX_N, force=force, debug=debug)
    items = [(n, l) for n in range(1, n_max + 1) for l in range(n)]
    if jobs > 1:
        rows = list(parallel(_sweep_row, items, include_lym=include_lym, n_workers=jobs, progress=False))
    else:
        rows = [_sweep_row(item, include_lym=include_lym, store=store) for item in items]
    report = SweepReport(n_max, include_lym, rows)
    if debug:
        failed = [f"P_{{{r['n']},{r['l']}}}" for r in rows if r["verdict"] != "pass"]
        print(f"DEBUG sperner: swept {len(rows)} posets, failures: {failed or 'none'}", file=sys.stderr)
    return report
