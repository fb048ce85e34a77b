import pytest
import fastcore.test as fct

from cjm_sign_posets.core.poset import Family, GradedPoset, build_poset, bounded_extension
from cjm_sign_posets.core.lattice import join, meet, lattice_report


def test_join_meet(r31_hat):
    fct.test_eq(join(r31_hat, 3, 5), 6)
    fct.test_eq(meet(r31_hat, 1, 2), 4)
    fct.test_eq(join(r31_hat, 4, 4), 4)
    fct.test_eq(meet(r31_hat, 3, 5), 0)


def test_r31_is_a_lattice_but_not_distributive(r31_hat):
    report = lattice_report(r31_hat)
    assert report.is_lattice and report.passed
    assert not report.is_distributive
    fct.test_eq(len(report.witnesses["not_distributive"]), 3)
    fct.test_eq(report.pairs_checked, 28)
    d = report.to_dict()
    fct.test_eq(d["is_lattice"], True)
    fct.test_eq(list(d["witnesses"]), ["not_distributive"])


def test_needs_bounds(r31):
    fct.test_fail(lambda: lattice_report(r31), contains="bounded poset")


def test_non_lattice_witness():
    # a and b have two minimal upper bounds
    p = GradedPoset.from_covers(["0", "a", "b", "c", "d", "1"], [0, 1, 1, 2, 2, 3],
                                [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)])
    p = GradedPoset(p.family, 0, 0, p.elements, p.ranks, p.covers, {}, 0, 5)
    report = lattice_report(p)
    assert not report.passed
    fct.test_eq(report.witnesses["no_join"], ["a", "b"])


def test_chain_is_distributive():
    p = bounded_extension(build_poset(2, 1))
    report = lattice_report(p)
    assert report.is_lattice and report.is_distributive


@pytest.mark.slow
@pytest.mark.parametrize("n", range(2, 7))
def test_bounded_R_are_lattices(n):
    for l in range(n):
        report = lattice_report(bounded_extension(build_poset(n, l, Family.R)))
        assert report.is_lattice
        fct.test_eq(report.is_distributive, l in (0, n - 1))


@pytest.mark.parametrize("n", range(1, 5))
def test_boolean_algebras_are_distributive(n):
    report = lattice_report(bounded_extension(build_poset(n, 0)))
    assert report.is_lattice and report.is_distributive
