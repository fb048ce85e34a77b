"""Edge labeling of the bounded posets, unique increasing chains, descents and EL verification"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/analysis/shelling.ipynb.

# %% auto #0
__all__ = ['LabelKind', 'EdgeLabel', 'label_compare', 'label_edge', 'LabeledChain', 'descent_set', 'label_chain',
           'bounded_R', 'edge_labels', 'increasing_chain', 'labeled_maximal_chains', 'ELReport', 'verify_el',
           'AtomOrderReport', 'atom_order_report', 'atom_order_is_lex']

# %% ../../nbs/analysis/shelling.ipynb #3b7c9e10
import sys
from enum import Enum
from functools import lru_cache, total_ordering
from typing import Any, Dict, Iterator, List, Sequence, Tuple
from dataclasses import dataclass, field
from fastcore.parallel import parallel

from ..core.sign_vectors import BlockTuple
from ..core.poset import Bound, GradedPoset, build_poset, bounded_extension, element_label, iter_bits, leq
from ..core.guards import GuardLimits, check_guard

# %% ../../nbs/analysis/shelling.ipynb #5e02a8d4
class LabelKind(Enum):
    """The three classes of labels, in increasing order."""
    ALPHA = "alpha"  # Insertion below the block maximum
    SET = "set"  # Edge from 0-hat to an atom
    BETA = "beta"  # Insertion above the block maximum (or the edge into 1-hat)

# %% ../../nbs/analysis/shelling.ipynb #9a61f0be
@total_ordering
@dataclass(frozen=True)
class EdgeLabel:
    """Label of a Hasse edge: a triple (kind, block, element) or an (l+1)-subset of [n]."""

    kind: LabelKind  # ALPHA, SET or BETA
    block: int = 0  # 1-based block index (triples only)
    element: int = 0  # Inserted element a, n+1 for edges into 1-hat (triples only)
    subset: Tuple[int, ...] = ()  # Sorted atom support (SET only)

    @classmethod
    def alpha(cls, block: int, element: int) -> "EdgeLabel":
        return cls(LabelKind.ALPHA, block, element)

    @classmethod
    def beta(cls, block: int, element: int) -> "EdgeLabel":
        return cls(LabelKind.BETA, block, element)

    @classmethod
    def of_set(cls, *subset: int) -> "EdgeLabel":
        return cls(LabelKind.SET, subset=tuple(sorted(subset)))

    @property
    def sort_key(self) -> Tuple:  # Key realizing alpha < sets < beta
        if self.kind == LabelKind.ALPHA:
            return (0, self.block, self.element, ())
        if self.kind == LabelKind.SET:
            return (1, 0, 0, self.subset)
        return (2, -self.block, self.element, ())

    def __lt__(self, other: "EdgeLabel") -> bool:
        if not isinstance(other, EdgeLabel):
            return NotImplemented
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        if self.kind == LabelKind.SET:
            return "{" + ",".join(map(str, self.subset)) + "}"
        return f"({self.kind.value},{self.block},{self.element})"

def label_compare(a: EdgeLabel,  # First label
                  b: EdgeLabel  # Second label
                 ) -> int:  # -1 if a precedes b, 0 if equal, 1 if a follows b
    """Three-way comparison in the label order."""
    ka, kb = a.sort_key, b.sort_key
    return (ka > kb) - (ka < kb)

# %% ../../nbs/analysis/shelling.ipynb #c2d37f01
def label_edge(x: Any,  # Lower element: BlockTuple or Bound.ZERO
               y: Any  # Upper element: BlockTuple or Bound.ONE
              ) -> EdgeLabel:  # Label of the cover x < y
    """Label a cover relation of a bounded R_{n,l}."""
    if x == Bound.ZERO and isinstance(y, BlockTuple):
        if y.rank != 1:
            raise ValueError(f"0hat is not covered by {y}")
        return EdgeLabel.of_set(*y.support)
    if isinstance(x, BlockTuple) and y == Bound.ONE:
        if x.rank != x.n - x.l:
            raise ValueError(f"{x} is not covered by 1hat")
        return EdgeLabel.beta(x.l + 1, x.n + 1)
    if isinstance(x, BlockTuple) and isinstance(y, BlockTuple) and (x.n, x.l) == (y.n, y.l):
        diff = [i for i, (a, b) in enumerate(zip(x.blocks, y.blocks)) if a != b]
        if len(diff) == 1:
            i = diff[0]
            added = set(y.blocks[i]) - set(x.blocks[i])
            if len(added) == 1 and set(x.blocks[i]) < set(y.blocks[i]):
                a = added.pop()
                if a < x.blocks[i][-1]:
                    return EdgeLabel.alpha(i + 1, a)
                return EdgeLabel.beta(i + 1, a)
    raise ValueError(f"{element_label(x)} < {element_label(y)} is not a cover relation")

# %% ../../nbs/analysis/shelling.ipynb #e4a0b1c2
@dataclass(frozen=True)
class LabeledChain:
    """Saturated chain x_0 < x_1 < ... < x_r with its edge labels."""

    elements: Tuple[Any, ...]  # Payloads x_0, ..., x_r
    labels: Tuple[EdgeLabel, ...]  # labels[j] labels the edge x_j < x_{j+1}

    @property
    def descents(self) -> Tuple[int, ...]:  # 1-based positions i with labels[i-1] > labels[i]
        return tuple(i for i in range(1, len(self.labels)) if self.labels[i - 1] > self.labels[i])

    @property
    def is_increasing(self) -> bool:  # Strictly increasing labels
        return all(a < b for a, b in zip(self.labels, self.labels[1:]))

    def __str__(self) -> str:
        parts = [element_label(self.elements[0])]
        for lab, el in zip(self.labels, self.elements[1:]):
            parts.append(f"-[{lab}]-> {element_label(el)}")
        return " ".join(parts)

def descent_set(c: LabeledChain  # Labeled saturated chain
               ) -> Tuple[int, ...]:  # Sorted descent positions
    """Positions where consecutive labels decrease."""
    return c.descents

def label_chain(elements: Sequence[Any]  # Saturated chain of payloads, bottom first
               ) -> LabeledChain:  # Chain with every edge labeled
    """Label each edge of a saturated chain."""
    elements = tuple(elements)
    return LabeledChain(elements, tuple(label_edge(a, b) for a, b in zip(elements, elements[1:])))

# %% ../../nbs/analysis/shelling.ipynb #0d6e7a55
@lru_cache(maxsize=16)
def bounded_R(n: int,  # Sign-vector length
              l: int  # Sign-change parameter
             ) -> GradedPoset:  # R_{n,l} with 0-hat and 1-hat, cached per process
    """Bounded R_{n,l}, built once per (n, l)."""
    return bounded_extension(build_poset(n, l))

def edge_labels(p: GradedPoset  # Bounded R_{n,l}
               ) -> Dict[Tuple[int, int], EdgeLabel]:  # (i, j) -> label of the cover i < j
    """Label every Hasse edge of a bounded R_{n,l}."""
    return {(i, j): label_edge(p.elements[i], p.elements[j]) for i, j in p.edges()}

# %% ../../nbs/analysis/shelling.ipynb #a77f3c19
def _insertion_chain(x: BlockTuple, y: BlockTuple) -> List[BlockTuple]:
    # alpha insertions by block then element, then beta insertions by descending block
    alphas, betas = [], []
    for i, (a_block, b_block) in enumerate(zip(x.blocks, y.blocks)):
        top = a_block[-1]
        for a in b_block:
            if a in a_block:
                continue
            (alphas if a < top else betas).append((i + 1, a))
    betas.sort(key=lambda t: (-t[0], t[1]))
    chain, current = [x], x
    for block, a in alphas + betas:
        current = current.with_element(block, a)
        chain.append(current)
    return chain

def _complete_tuple(x: BlockTuple) -> BlockTuple:
    # The top-rank element above x reachable with alpha insertions and beta insertions into the last block
    bounds = [0] + [b[-1] for b in x.blocks[:-1]] + [x.n]
    return BlockTuple(x.n, tuple(tuple(range(lo + 1, hi + 1)) for lo, hi in zip(bounds, bounds[1:])))

def increasing_chain(x: Any,  # Lower end: BlockTuple or Bound.ZERO
                     y: Any,  # Upper end: BlockTuple or Bound.ONE
                     n: int,  # Sign-vector length
                     l: int  # Sign-change parameter
                    ) -> LabeledChain:  # The unique maximal chain of [x, y] with increasing labels
    """Construct the increasing maximal chain of an interval of the bounded R_{n,l}."""
    if not leq(x, y):
        raise ValueError(f"{element_label(x)} and {element_label(y)} do not form an interval")
    if x == y:
        return LabeledChain((x,), ())
    if x == Bound.ZERO and y == Bound.ONE:
        atom = BlockTuple(n, tuple((i,) for i in range(1, l + 2)))
        elements = [x] + _insertion_chain(atom, _complete_tuple(atom)) + [y]
    elif x == Bound.ZERO:
        atom = BlockTuple(y.n, tuple((b[0],) for b in y.blocks))
        elements = [x] + _insertion_chain(atom, y)
    elif y == Bound.ONE:
        elements = _insertion_chain(x, _complete_tuple(x)) + [y]
    else:
        elements = _insertion_chain(x, y)
    return label_chain(elements)

# %% ../../nbs/analysis/shelling.ipynb #14b8e0c6
def labeled_maximal_chains(n: int,  # Sign-vector length
                           l: int,  # Sign-change parameter
                           force: bool = False  # Lift the exhaustive-scale guard
                          ) -> Iterator[LabeledChain]:  # Every maximal chain of the bounded R_{n,l}
    """Enumerate the maximal chains of the bounded R_{n,l} with labels and descents."""
    check_guard("n", n, GuardLimits.EL_MAX_N, force=force)
    p = bounded_R(n, l)
    for chain in p.maximal_chains():
        yield label_chain(p.elements[i] for i in chain)

# %% ../../nbs/analysis/shelling.ipynb #5f6c9d21
@dataclass
class ELReport:
    """Result of checking both EL axioms on every interval of the bounded R_{n,l}."""

    n: int  # Sign-vector length
    l: int  # Sign-change parameter
    intervals_checked: int = 0  # Intervals [x, y] with x < y
    cases: Dict[int, int] = field(default_factory=lambda: {1: 0, 2: 0, 3: 0, 4: 0})  # Intervals per construction case
    violations: List[Dict[str, Any]] = field(default_factory=list)  # {"interval": [x, y], "reason": ...}

    @property
    def passed(self) -> bool:  # True if no interval violates EL1 or EL2
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:  # JSON-ready summary
        """Serialize the report."""
        return {"n": self.n, "l": self.l, "passed": self.passed, "intervals_checked": self.intervals_checked,
                "cases": {str(k): v for k, v in sorted(self.cases.items())}, "violations": self.violations}

def _case(x: Any, y: Any) -> int:
    return 1 + (x == Bound.ZERO) + 2 * (y == Bound.ONE)

def _increasing_chains(p: GradedPoset, labels, x: int, y: int) -> List[Tuple[int, ...]]:
    # DFS that only follows edges with increasing labels, so it finds every increasing chain of [x, y]
    allowed = p.upsets[x] & p.downsets[y]
    found = []

    def _extend(chain, last):
        v = chain[-1]
        if v == y:
            found.append(tuple(chain))
            return
        for w in p.covers[v]:
            if not (allowed >> w) & 1:
                continue
            lab = labels[(v, w)]
            if last is None or last < lab:
                chain.append(w)
                _extend(chain, lab)
                chain.pop()

    _extend([x], None)
    return found

def _check_source(x: int,  # Index of the interval's lower end
                  n: int,  # Sign-vector length
                  l: int  # Sign-change parameter
                 ) -> Tuple[int, Dict[int, int], List[Dict[str, Any]]]:  # (intervals, case tallies, violations)
    """Check every interval [x, y] with x fixed."""
    p = bounded_R(n, l)
    labels = _edge_labels_cached(n, l)
    cases = {1: 0, 2: 0, 3: 0, 4: 0}
    violations, count = [], 0
    for y in iter_bits(p.upsets[x] & ~(1 << x)):
        count += 1
        ex, ey = p.elements[x], p.elements[y]
        cases[_case(ex, ey)] += 1
        interval = [p.label(x), p.label(y)]
        chains = _increasing_chains(p, labels, x, y)
        if len(chains) != 1:
            violations.append({"interval": interval, "reason": f"{len(chains)} increasing maximal chains"})
            continue
        expected = increasing_chain(ex, ey, n, l).elements
        if tuple(p.elements[i] for i in chains[0]) != expected:
            violations.append({"interval": interval, "reason": "increasing chain differs from the constructed chain"})
            continue
        first = labels[(x, chains[0][1])]
        inside = p.downsets[y]
        for z in p.covers[x]:
            if z != chains[0][1] and (inside >> z) & 1 and not first < labels[(x, z)]:
                violations.append({"interval": interval, "reason": f"first label {first} is not below {labels[(x, z)]}"})
                break
    return count, cases, violations

@lru_cache(maxsize=16)
def _edge_labels_cached(n: int, l: int) -> Dict[Tuple[int, int], EdgeLabel]:
    return edge_labels(bounded_R(n, l))

def verify_el(n: int,  # Sign-vector length
              l: int,  # Sign-change parameter
              jobs: int = 1,  # Parallel workers (<= 1 runs serially)
              force: bool = False,  # Lift the exhaustive-scale guard
              debug: bool = False  # Whether to print debug information
             ) -> ELReport:  # Interval counts, per-case tallies and violations
    """Check both EL axioms on every closed interval of the bounded R_{n,l}."""
    check_guard("n", n, GuardLimits.EL_MAX_N, force=force, debug=debug)
    p = bounded_R(n, l)
    sources = list(range(len(p)))
    results = parallel(_check_source, sources, n=n, l=l, n_workers=jobs if jobs > 1 else 0, progress=False)
    report = ELReport(n, l)
    for count, cases, violations in results:
        report.intervals_checked += count
        for k, v in cases.items():
            report.cases[k] += v
        report.violations.extend(violations)
    if debug:
        print(f"DEBUG shelling: verify_el({n},{l}) checked {report.intervals_checked} intervals, "
              f"{len(report.violations)} violations", file=sys.stderr)
    return report

# %% ../../nbs/analysis/shelling.ipynb #b3e8d6f0
@dataclass
class AtomOrderReport:
    """Whether label order of the upper covers agrees with lexicographic tuple order."""

    n: int  # Sign-vector length
    l: int  # Sign-change parameter
    elements_checked: int = 0  # Elements with two or more upper covers
    failures: List[str] = field(default_factory=list)  # Labels of elements where the orders differ

    @property
    def passed(self) -> bool:  # True if every element agrees
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:  # JSON-ready summary
        """Serialize the report."""
        return {"n": self.n, "l": self.l, "passed": self.passed,
                "elements_checked": self.elements_checked, "failures": self.failures}

def _lex_key(x: Any) -> Tuple:
    return x.blocks if isinstance(x, BlockTuple) else ()

def atom_order_report(n: int,  # Sign-vector length
                      l: int,  # Sign-change parameter
                      force: bool = False,  # Lift the exhaustive-scale guard
                      debug: bool = False  # Whether to print debug information
                     ) -> AtomOrderReport:  # Elements checked and any disagreements
    """Compare, below 1-hat, the label order of each element's covers with the lexicographic order of the covering tuples."""
    check_guard("n", n, GuardLimits.EL_MAX_N, force=force, debug=debug)
    p = bounded_R(n, l)
    report = AtomOrderReport(n, l)
    for x in range(len(p)):
        ups = p.covers[x]
        if len(ups) < 2 or p.top in ups:
            continue
        report.elements_checked += 1
        by_label = sorted(ups, key=lambda y: label_edge(p.elements[x], p.elements[y]))
        by_lex = sorted(ups, key=lambda y: _lex_key(p.elements[y]))
        if by_label != by_lex:
            report.failures.append(p.label(x))
    if debug:
        print(f"DEBUG shelling: atom order checked {report.elements_checked} elements", file=sys.stderr)
    return report

def atom_order_is_lex(n: int, l: int, force: bool = False) -> bool:
    """True if every cover list of the bounded R_{n,l} is label-ordered lexicographically."""
    return atom_order_report(n, l, force=force).passed
