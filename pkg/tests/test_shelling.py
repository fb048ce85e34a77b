import pytest
import fastcore.test as fct
from hypothesis import given, strategies as st

from cjm_sign_posets.core.sign_vectors import BlockTuple
from cjm_sign_posets.core.poset import Bound
from cjm_sign_posets.core.guards import GuardExceeded
from cjm_sign_posets.analysis.shelling import (EdgeLabel, LabelKind, label_compare, label_edge, label_chain, descent_set,
                                               bounded_R, edge_labels, increasing_chain, labeled_maximal_chains,
                                               verify_el, atom_order_report, atom_order_is_lex)

B = BlockTuple.of


def test_label_order():
    labels = [EdgeLabel.beta(3, 10), EdgeLabel.of_set(1, 2), EdgeLabel.alpha(2, 5), EdgeLabel.beta(1, 2),
              EdgeLabel.alpha(1, 7), EdgeLabel.of_set(1, 3), EdgeLabel.beta(1, 1)]
    fct.test_eq(sorted(labels), [EdgeLabel.alpha(1, 7), EdgeLabel.alpha(2, 5), EdgeLabel.of_set(1, 2),
                                 EdgeLabel.of_set(1, 3), EdgeLabel.beta(3, 10), EdgeLabel.beta(1, 1),
                                 EdgeLabel.beta(1, 2)])
    fct.test_eq(label_compare(EdgeLabel.alpha(1, 2), EdgeLabel.alpha(1, 2)), 0)
    fct.test_eq(label_compare(EdgeLabel.beta(2, 1), EdgeLabel.beta(1, 1)), -1)
    fct.test_eq(label_compare(EdgeLabel.of_set(2, 3), EdgeLabel.alpha(9, 9)), 1)


labels_st = st.one_of(
    st.builds(EdgeLabel.alpha, st.integers(1, 4), st.integers(1, 9)),
    st.builds(EdgeLabel.beta, st.integers(1, 4), st.integers(1, 10)),
    st.lists(st.integers(1, 9), min_size=1, max_size=4, unique=True).map(lambda s: EdgeLabel.of_set(*s)))


@given(labels_st, labels_st)
def test_label_compare_is_antisymmetric(a, b):
    fct.test_eq(label_compare(a, b), -label_compare(b, a))
    fct.test_eq(label_compare(a, b) == 0, a == b)


def test_label_edge():
    fct.test_eq(label_edge(Bound.ZERO, B(3, {1}, {3})), EdgeLabel.of_set(1, 3))
    fct.test_eq(label_edge(B(3, {1}, {3}), B(3, {1, 2}, {3})), EdgeLabel.beta(1, 2))
    fct.test_eq(label_edge(B(3, {1}, {3}), B(3, {1}, {2, 3})), EdgeLabel.alpha(2, 2))
    fct.test_eq(label_edge(B(3, {1, 2}, {3}), Bound.ONE), EdgeLabel.beta(2, 4))
    fct.test_eq(str(EdgeLabel.alpha(2, 2)), "(alpha,2,2)")
    fct.test_eq(str(EdgeLabel.of_set(1, 3)), "{1,3}")


def test_label_edge_rejects_non_covers():
    fct.test_fail(lambda: label_edge(B(3, {1}, {2}), B(3, {1}, {3})), contains="not a cover relation")
    fct.test_fail(lambda: label_edge(Bound.ZERO, B(3, {1, 2}, {3})), contains="0hat is not covered")
    fct.test_fail(lambda: label_edge(B(3, {1}, {3}), Bound.ONE), contains="not covered by 1hat")


def test_r31_chains_and_descents():
    chains = list(labeled_maximal_chains(3, 1))
    fct.test_eq(len(chains), 4)
    by_descents = sorted(c.descents for c in chains)
    fct.test_eq(by_descents, [(), (1,), (1,), (2,)])
    inc = [c for c in chains if c.is_increasing]
    fct.test_eq(len(inc), 1)
    fct.test_eq(str(inc[0]), "0hat -[{1,2}]-> +-0 -[(beta,2,3)]-> +-- -[(beta,2,4)]-> 1hat")


@pytest.mark.parametrize("n,l", [pytest.param(n, l, marks=pytest.mark.slow) if n == 6 else (n, l)
                                 for n in range(1, 7) for l in range(n)])
def test_labels_never_repeat_along_a_maximal_chain(n, l):
    for chain in labeled_maximal_chains(n, l):
        fct.test_eq(len(set(chain.labels)), len(chain.labels))
        fct.test_eq(len(chain.labels), n - l + 1)


def test_descent_set():
    c = label_chain([Bound.ZERO, B(3, {1}, {3}), B(3, {1, 2}, {3}), Bound.ONE])
    fct.test_eq(c.labels, (EdgeLabel.of_set(1, 3), EdgeLabel.beta(1, 2), EdgeLabel.beta(2, 4)))
    fct.test_eq(descent_set(c), (2,))


def test_increasing_chain_cases():
    fct.test_eq(increasing_chain(Bound.ZERO, Bound.ONE, 3, 1).elements,
                (Bound.ZERO, B(3, {1}, {2}), B(3, {1}, {2, 3}), Bound.ONE))
    fct.test_eq(increasing_chain(Bound.ZERO, B(3, {1, 2}, {3}), 3, 1).elements,
                (Bound.ZERO, B(3, {1}, {3}), B(3, {1, 2}, {3})))
    fct.test_eq(increasing_chain(B(3, {2}, {3}), Bound.ONE, 3, 1).elements,
                (B(3, {2}, {3}), B(3, {1, 2}, {3}), Bound.ONE))
    c = increasing_chain(B(5, {2}, {4}), B(5, {1, 2, 3}, {4, 5}), 5, 1)
    assert c.is_increasing
    fct.test_eq(c.elements[0], B(5, {2}, {4}))
    fct.test_eq(c.elements[-1], B(5, {1, 2, 3}, {4, 5}))
    fct.test_eq(len(c.elements), 4)


def test_increasing_chain_matches_exhaustive_scan():
    p = bounded_R(5, 1)
    x, y = p.index[B(5, {2}, {4})], p.index[B(5, {1, 2, 3}, {4, 5})]
    labels = edge_labels(p)
    increasing = [ch for ch in p.maximal_chains(start=x, end=y)
                  if all(labels[(a, b)] < labels[(b, c)] for a, b, c in zip(ch, ch[1:], ch[2:]))]
    fct.test_eq(len(increasing), 1)
    fct.test_eq(tuple(p.elements[i] for i in increasing[0]),
                increasing_chain(p.elements[x], p.elements[y], 5, 1).elements)


def test_increasing_chain_rejects_incomparable():
    fct.test_fail(lambda: increasing_chain(B(3, {1}, {2}), B(3, {1, 2}, {3}), 3, 1), contains="do not form an interval")


def test_verify_el_r31():
    report = verify_el(3, 1)
    assert report.passed
    fct.test_eq(report.intervals_checked, 15)
    fct.test_eq(report.cases, {1: 4, 2: 5, 3: 5, 4: 1})
    fct.test_eq(report.to_dict()["cases"], {"1": 4, "2": 5, "3": 5, "4": 1})


def test_verify_el_small_parallel_matches_serial():
    fct.test_eq(verify_el(4, 1, jobs=2).to_dict(), verify_el(4, 1).to_dict())


@pytest.mark.parametrize("n,l", [(n, l) for n in range(1, 6) for l in range(n)])
def test_verify_el_passes(n, l):
    assert verify_el(n, l).passed


@pytest.mark.slow
@pytest.mark.parametrize("l", range(6))
def test_verify_el_n6(l):
    assert verify_el(6, l).passed


def test_verify_el_guard():
    fct.test_fail(lambda: verify_el(8, 1), contains="exceeds the limit 7")
    try:
        verify_el(8, 1)
    except GuardExceeded:
        pass


def test_atom_order():
    report = atom_order_report(3, 1)
    assert report.passed
    fct.test_eq(report.elements_checked, 2)
    assert atom_order_is_lex(4, 1)


def test_top_cover_label_is_the_largest():
    p = bounded_R(4, 2)
    labels = edge_labels(p)
    tops = [lab for (i, j), lab in labels.items() if j == p.top]
    fct.test_eq({lab.kind for lab in tops}, {LabelKind.BETA})
    fct.test_eq({(lab.block, lab.element) for lab in tops}, {(3, 5)})
