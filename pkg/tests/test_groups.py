import numpy as np
import pytest

import powergenus.groups as gr
from powergenus.errors import (ClosureCapExceeded, InvalidParameter,
                               NotAnAutomorphism, OrderCapExceeded, ParseError)


def test_cyclic_orders():
    g = gr.cyclic(12)
    assert g.order == 12
    assert sorted(set(gr.order_spectrum(g).orders)) == [1, 2, 3, 4, 6, 12]


def test_cyclic_element_order_counts():
    g = gr.cyclic(12)
    mult = gr.order_spectrum(g).multiplicities
    # phi(d) elements of order d for each divisor d
    assert mult == {1: 1, 2: 1, 3: 2, 4: 2, 6: 2, 12: 4}


def test_dihedral():
    g = gr.dihedral(12)
    assert g.order == 12
    assert gr.count_involutions(g) == 7
    assert sorted(gr.order_spectrum(g).as_set) == [1, 2, 3, 6]


def test_dicyclic_unique_involution():
    for n in (2, 3, 4):
        g = gr.dicyclic(n)
        assert g.order == 4 * n
        assert gr.count_involutions(g) == 1


def test_semidihedral_spectrum():
    g = gr.semidihedral(16)
    assert g.order == 16
    assert sorted(gr.order_spectrum(g).as_set) == [1, 2, 4, 8]


def test_symmetric_alternating():
    assert gr.symmetric(4).order == 24
    assert gr.alternating(4).order == 12
    assert sorted(gr.order_spectrum(gr.symmetric(4)).as_set) == [1, 2, 3, 4]
    assert sorted(gr.order_spectrum(gr.alternating(4)).as_set) == [1, 2, 3]


def test_from_generators_s3():
    a = gr.parse_cycles("(0 1)", 3)
    b = gr.parse_cycles("(0 1 2)", 3)
    g = gr.from_generators(3, [a, b])
    assert g.order == 6
    assert gr.is_isomorphic(g, gr.symmetric(3))


def test_from_generators_cap():
    big = gr.parse_cycles("(0 1 2 3 4 5 6)", 7)
    swap = gr.parse_cycles("(0 1)", 7)
    with pytest.raises(ClosureCapExceeded):
        gr.from_generators(7, [big, swap], cap=100)  # S7 has order 5040


def test_direct_product():
    g = gr.direct_product(gr.cyclic(2), gr.cyclic(6))
    assert g.order == 12
    assert sorted(gr.order_spectrum(g).as_set) == [1, 2, 3, 6]


def test_semidirect_rejects_non_automorphism():
    c5 = gr.cyclic(5)
    c2 = gr.cyclic(2)
    bad = {0: tuple(range(5)), 1: (0, 2, 1, 3, 4)}  # not a homomorphic image
    with pytest.raises(NotAnAutomorphism):
        gr.semidirect_product(c5, c2, bad)


def test_semidirect_dihedral():
    c5 = gr.cyclic(5)
    c2 = gr.cyclic(2)
    inv = tuple(c5.inv(x) for x in range(5))
    act = gr.cyclic_action(c5, c2, inv)
    g = gr.semidirect_product(c5, c2, act)
    assert gr.is_isomorphic(g, gr.dihedral(10))


def test_named_families():
    assert gr.named("cyclic", 6).order == 6
    assert gr.named("dicyclic", 4).order == 16
    with pytest.raises(InvalidParameter):
        gr.named("sporadic", 1)


def test_parse_cycles_errors():
    assert gr.parse_cycles("(0 1)(2 3)", 4) == (1, 0, 3, 2)
    with pytest.raises(ParseError):
        gr.parse_cycles("(0 9)", 4)


def test_inverse_and_power():
    g = gr.cyclic(10)
    for x in range(10):
        assert g.mul(x, g.inv(x)) == 0
        assert g.power(x, 10) == 0


def test_six_profile_z2xz6():
    g = gr.direct_product(gr.cyclic(2), gr.cyclic(6))
    prof = gr.six_profile(g)
    assert prof.count == 3
    assert prof.pairwise_intersections == (3, 3, 3)
    assert prof.all_pairwise_three()


def test_involution_parity():
    # even-order groups have an odd number of involutions
    for g in (gr.cyclic(8), gr.dihedral(12), gr.dicyclic(3), gr.symmetric(4)):
        assert gr.count_involutions(g) % 2 == 1
    assert gr.count_involutions(gr.cyclic(9)) == 0


def test_prime_subgroup_congruence():
    g = gr.symmetric(4)
    assert gr.count_subgroups_of_prime_order(g, 2) % 2 == 1
    assert gr.count_subgroups_of_prime_order(g, 3) % 3 == 1


def test_center_and_centralizer():
    q8 = gr.dicyclic(2)
    assert len(gr.center(q8)) == 2
    s3 = gr.symmetric(3)
    assert len(gr.center(s3)) == 1


def test_is_isomorphic():
    assert gr.is_isomorphic(gr.cyclic(6),
                            gr.direct_product(gr.cyclic(2), gr.cyclic(3)))
    assert not gr.is_isomorphic(gr.cyclic(8), gr.dihedral(8))
    assert not gr.is_isomorphic(gr.dihedral(8), gr.dicyclic(2))


def test_is_isomorphic_cap():
    with pytest.raises(OrderCapExceeded):
        gr.is_isomorphic(gr.cyclic(150), gr.cyclic(150))


def test_table_validation():
    bad = np.zeros((3, 3), dtype=np.int64)  # constant rows: not a Cayley table
    with pytest.raises(Exception):
        gr.FiniteGroup(bad)
