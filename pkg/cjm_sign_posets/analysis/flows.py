"""Whitney numbers, log-concavity and exact normalized flows on R_{n,l} and P_{n,l}"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/analysis/flows.ipynb.

# %% auto #0
__all__ = ['whitney', 'is_log_concave', 'is_unimodal', 'partial_binomial_sums', 'RationalFlow', 'flow_R', 'flow_P',
           'constant_flow', 'FlowReport', 'verify_flow']

# %% ../../nbs/analysis/flows.ipynb #d1e2a3b4
import sys
from fractions import Fraction
from math import comb
from typing import Any, Dict, List, Optional, Sequence, Tuple
from dataclasses import dataclass, field

from ..core.sign_vectors import BlockTuple, to_block_tuple
from ..core.poset import Family, GradedPoset, build_poset
from ..core.exports import fraction_str

# %% ../../nbs/analysis/flows.ipynb #5c6d7e8f
def whitney(n: int,  # Sign-vector length
            l: int,  # Sign-change parameter
            family: Family = Family.R  # Family.R or Family.P
           ) -> List[int]:  # W_1, ..., W_{n-l} for R; W_1, ..., W_n for P
    """Closed-form Whitney numbers of the second kind."""
    if not 0 <= l < n:
        raise ValueError(f"Need 0 <= l < n, got n={n}, l={l}")
    family = Family(family)
    if family == Family.R:
        return [comb(l + r - 1, l) * comb(n, l + r) for r in range(1, n - l + 1)]
    if family == Family.P:
        return [comb(n, r) * sum(comb(r - 1, i) for i in range(l + 1)) for r in range(1, n + 1)]
    raise ValueError(f"Whitney numbers are defined here for R and P, not {family.value}")

def is_log_concave(s: Sequence[int]  # Nonnegative integers
                  ) -> bool:  # s_{i-1} s_{i+1} <= s_i^2 for every interior i
    """Log-concavity by integer cross-multiplication."""
    return all(s[i - 1] * s[i + 1] <= s[i] * s[i] for i in range(1, len(s) - 1))

def is_unimodal(s: Sequence[int]) -> bool:
    """Weakly increasing up to some peak, weakly decreasing after it."""
    i = 0
    while i + 1 < len(s) and s[i] <= s[i + 1]:
        i += 1
    return all(s[k] >= s[k + 1] for k in range(i, len(s) - 1))

def partial_binomial_sums(l: int,  # Upper summation index
                          r_max: int  # Number of terms
                         ) -> List[int]:  # s_r = sum_{i=0}^{l} binom(r-1, i) for r = 1..r_max
    """The partial binomial sums whose product with binom(n, r) gives the Whitney numbers of P_{n,l}."""
    return [sum(comb(r - 1, i) for i in range(l + 1)) for r in range(1, r_max + 1)]

# %% ../../nbs/analysis/flows.ipynb #9a0b1c2d
@dataclass
class RationalFlow:
    """Exact nonnegative weights on the Hasse edges of a poset."""

    poset: GradedPoset  # Poset the edges belong to
    values: Dict[Tuple[int, int], Fraction]  # (i, j) -> weight of the cover i < j
    kind: str = "custom"  # R, P1, constant or custom; selects the expected rank sums

    def __getitem__(self, edge: Tuple[int, int]) -> Fraction:
        return self.values[edge]

    def up_sum(self, i: int) -> Fraction:
        """Total weight leaving element i upward."""
        return sum((self.values[(i, j)] for j in self.poset.covers[i]), Fraction(0))

    def down_sum(self, j: int) -> Fraction:
        """Total weight entering element j from below."""
        return sum((self.values[(i, j)] for i in self.poset.down[j]), Fraction(0))

    def to_dict(self) -> Dict[str, Any]:  # JSON edge list with "num/den" weights
        """Serialize the flow."""
        p = self.poset
        return {"family": p.family.value, "n": p.n, "l": p.l, "kind": self.kind,
                "edges": [{"from": p.label(i), "to": p.label(j), "value": fraction_str(self.values[(i, j)])}
                          for i, j in p.edges()]}

# %% ../../nbs/analysis/flows.ipynb #3e4f5a6b
def _flow_weight(x: BlockTuple, block: int, a: int) -> Fraction:
    # a between blocks i and i+1 can go to either; the two weights are the prefix and suffix shares
    total = len(x.support)
    for gap in range(x.l):
        if x.blocks[gap][-1] < a < x.blocks[gap + 1][0]:
            prefix = sum(len(b) for b in x.blocks[:gap + 1])
            return Fraction(prefix, total) if block == gap + 1 else Fraction(total - prefix, total)
    return Fraction(1)

def flow_R(n: int,  # Sign-vector length
           l: int,  # Sign-change parameter
           p: Optional[GradedPoset] = None  # Prebuilt R_{n,l} (built when omitted)
          ) -> RationalFlow:  # Weight on every cover of R_{n,l}
    """Normalized flow on R_{n,l}: weight 1 for a forced insertion, prefix/suffix shares when two blocks can take a."""
    p = p if p is not None else build_poset(n, l, Family.R)
    if p.family != Family.R:
        raise ValueError(f"flow_R needs R_{{{n},{l}}}, got family {p.family.value}")
    values = {}
    for (i, j), info in p.cover_info.items():
        values[(i, j)] = _flow_weight(p.elements[i], info.block, info.element)
    return RationalFlow(p, values, "R")

def _changed_position(x, y) -> int:
    return next(k for k, (a, b) in enumerate(zip(x.entries, y.entries)) if a == 0 and b != 0)

def flow_P(n: int,  # Sign-vector length
           l: int,  # Sign-change parameter, one of 0, 1, n-1
           p: Optional[GradedPoset] = None  # Prebuilt P_{n,l} (built when omitted)
          ) -> RationalFlow:  # Weight on every cover of P_{n,l}
    """Normalized flow on P_{n,l} for l = 0 (the R_{n,0} flow), l = 1 (1/2 split, also for n = 2) and l = n-1 (constant 1)."""
    p = p if p is not None else build_poset(n, l, Family.P)
    if p.family != Family.P:
        raise ValueError(f"flow_P needs P_{{{n},{l}}}, got family {p.family.value}")
    if l == 0:
        r_flow = flow_R(n, 0)
        r_index = r_flow.poset.index
        moved = {}
        for i, j in p.edges():
            a, b = r_index[to_block_tuple(p.elements[i])], r_index[to_block_tuple(p.elements[j])]
            moved[(i, j)] = r_flow[(a, b)]
        return RationalFlow(p, moved, "R")
    if l == 1:
        values = {}
        for i, ups in enumerate(p.covers):
            by_position: Dict[int, List[int]] = {}
            for j in ups:
                by_position.setdefault(_changed_position(p.elements[i], p.elements[j]), []).append(j)
            for targets in by_position.values():
                for j in targets:
                    values[(i, j)] = Fraction(1, len(targets))
        return RationalFlow(p, values, "P1")
    if l == n - 1:
        return constant_flow(p)
    raise ValueError(f"No normalized flow is constructed for P_{{{n},{l}}}; l must be 0, 1 or n-1")

def constant_flow(p: GradedPoset) -> RationalFlow:
    """Weight 1 on every edge; a normalized flow exactly when the poset is biregular."""
    return RationalFlow(p, {e: Fraction(1) for e in p.edges()}, "constant")

# %% ../../nbs/analysis/flows.ipynb #7c8d9e0f
@dataclass
class FlowReport:
    """Per-rank up-sums and down-sums of a flow, with every failed condition."""

    family: str  # Poset family
    n: int  # Sign-vector length
    l: int  # Sign-change parameter
    kind: str  # Flow kind
    ranks: List[Dict[str, Any]] = field(default_factory=list)  # {"rank", "up", "down"} per lower rank r
    violations: List[Dict[str, Any]] = field(default_factory=list)  # {"rank", "condition", ...}

    @property
    def passed(self) -> bool:  # True if both flow conditions (and expected sums) hold
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:  # JSON-ready report, sums as "num/den"
        """Serialize the report."""
        return {"family": self.family, "n": self.n, "l": self.l, "kind": self.kind, "passed": self.passed,
                "ranks": [{"rank": e["rank"],
                           "up": fraction_str(e["up"]) if e["up"] is not None else None,
                           "down": fraction_str(e["down"]) if e["down"] is not None else None} for e in self.ranks],
                "violations": self.violations}

def _expected_sums(flow: RationalFlow, r: int) -> Optional[Tuple[Fraction, Fraction]]:
    p = flow.poset
    if flow.kind == "R" and p.family == Family.R:
        return Fraction(p.n - p.l - r), Fraction(r * (p.l + r + 1), p.l + r)
    if flow.kind == "R":
        # P_{n,0}, same elements and ranks as R_{n,0}
        return Fraction(p.n - r), Fraction(r + 1)
    if flow.kind == "P1":
        return Fraction(p.n - r), Fraction(r)
    return None

def _common(values: Dict[int, Fraction]) -> Optional[Fraction]:
    distinct = set(values.values())
    return distinct.pop() if len(distinct) == 1 else None

def verify_flow(flow: RationalFlow,  # Flow to check
                debug: bool = False  # Whether to print debug information
               ) -> FlowReport:  # Rank sums or the offending elements
    """Check that up-sums are constant and positive on each rank, and likewise the down-sums one rank higher."""
    p = flow.poset
    report = FlowReport(p.family.value, p.n, p.l, flow.kind)
    ranks = p.rank_values()
    for r, r_next in zip(ranks, ranks[1:]):
        ups = {i: flow.up_sum(i) for i in p.elements_of_rank(r)}
        downs = {j: flow.down_sum(j) for j in p.elements_of_rank(r_next)}
        up, down = _common(ups), _common(downs)
        report.ranks.append({"rank": r, "up": up, "down": down})
        for condition, common, sums in (("NF1", up, ups), ("NF2", down, downs)):
            if common is None or common <= 0:
                low = min(sums, key=lambda k: (sums[k], k))
                high = max(sums, key=lambda k: (sums[k], -k))
                report.violations.append({"rank": r, "condition": condition,
                                          "elements": [p.label(low), p.label(high)],
                                          "values": [fraction_str(sums[low]), fraction_str(sums[high])]})
        expected = _expected_sums(flow, r)
        if expected is not None and (up, down) != expected:
            report.violations.append({"rank": r, "condition": "expected",
                                      "values": [fraction_str(expected[0]), fraction_str(expected[1])]})
    if debug:
        print(f"DEBUG flows: {flow.kind} flow on {p.family.value}_{{{p.n},{p.l}}}: "
              f"{len(report.ranks)} rank pairs, {len(report.violations)} violations", file=sys.stderr)
    return report
