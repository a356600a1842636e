"""The "Invariants & Properties" sections of the spec, asserted over the corpus."""

from math import gcd, lcm, prod

import numpy as np
import pytest

from ringprops.annprop import (all_two_sided_ideals, check_module_property,
                               check_ring_property, is_centrally_s_unital, is_left_s_unital,
                               is_right_s_unital, left_annihilator, ring_left_annihilator,
                               right_annihilator_in_module)
from ringprops.finmod import direct_sum, regular_module, z_module
from ringprops.homcalc import end_ring, image, kernel
from ringprops.lattice import (all_submodules, fully_invariant_submodules, is_direct_summand,
                               is_fully_invariant, uniform_dimension)


def _modules(corpus, max_order=64):
    return [e.module for e in corpus if e.module.order <= max_order]


def test_regular_action_is_multiplication(corpus):
    for r in corpus.rings():
        m = regular_module(r)
        allx = np.arange(r.order)
        assert np.array_equal(m.act_arrays(allx[:, None], allx[None, :]), r.mul_table)


def test_z_module_faithfulness():
    for orders in ([2], [4], [2, 3], [2, 4]):
        e = lcm(*orders)
        for exp in (e, 2 * e):
            m = z_module(orders, exponent=exp)
            faithful = all(any(m.act(x, r) for x in m.elements) for r in range(1, exp))
            assert faithful == (exp == e)


def test_end_of_z_module_order(corpus):
    for e in corpus:
        if e.family == "z_module":
            d = e.module.group.orders
            assert end_ring(e.module).order == prod(gcd(a, b) for a in d for b in d)


def test_end_of_regular_module_is_left_multiplication(corpus):
    for r in corpus.rings():
        m = regular_module(r)
        s = end_ring(m)
        assert s.order == r.order
        lefts = {tuple(r.mul_table[a].tolist()) for a in r.elements}
        assert {tuple(row) for row in s.apply_table.tolist()} == lefts
        # f.g = f o g, so a -> (x -> a x) is a ring isomorphism R -> End(R_R)
        idx = {tuple(r.mul_table[a].tolist()): a for a in r.elements}
        phi = np.array([idx[tuple(row)] for row in s.apply_table.tolist()])
        assert np.array_equal(phi[s.ring.mul_table], r.mul_table[phi[:, None], phi[None, :]])


def test_kernels_and_images_are_submodules(corpus):
    for m in _modules(corpus, 36):
        subs = {n.elements for n in all_submodules(m)}
        for f in end_ring(m).homs():
            assert kernel(f).elements in subs and image(f).elements in subs


def test_fully_invariant_consistency(corpus):
    for m in _modules(corpus):
        s = end_ring(m)
        subs = {n.elements for n in all_submodules(m)}
        for h in fully_invariant_submodules(m, s):
            assert h.elements in subs and is_fully_invariant(m, s, h.underlying)


def test_direct_summand_complements(corpus):
    for m in _modules(corpus, 36):
        for n in all_submodules(m):
            k = is_direct_summand(m, n)
            if k is not None:
                assert len(n) * len(k) == m.order and len(n.elements & k.elements) == 1


@pytest.mark.parametrize("a,b", [([2], [2]), ([4], [2]), ([6], [3]), ([2, 4], [4])])
def test_uniform_dimension_is_additive(a, b):
    e = lcm(*a, *b)
    ma, mb = z_module(a, exponent=e), z_module(b, exponent=e)
    assert uniform_dimension(direct_sum(ma, mb)) == uniform_dimension(ma) + uniform_dimension(mb)


def test_central_s_unital_implies_both_sides(corpus):
    for r in corpus.rings():
        for ideal in all_two_sided_ideals(r):
            ann = ring_left_annihilator(r, ideal.elements)
            if is_centrally_s_unital(r, ann).holds:
                assert is_right_s_unital(r, ann).holds and is_left_s_unital(r, ann).holds


def test_annihilator_galois_connection(corpus):
    for m in _modules(corpus):
        s = end_ring(m)
        for h in fully_invariant_submodules(m, s):
            ann = left_annihilator(s, h.underlying)
            assert ann.side == "two_sided"
            assert h.elements <= right_annihilator_in_module(s, ann).elements
        if s.order <= 256:
            for ideal in all_two_sided_ideals(s.ring):
                back = left_annihilator(s, right_annihilator_in_module(s, ideal))
                assert ideal.elements <= back.elements


def test_baer_hierarchies(corpus):
    for r in corpus.rings():
        v = {p: check_ring_property(r, p).holds for p in ("baer", "quasi_baer", "pq_baer")}
        assert not v["baer"] or v["quasi_baer"]
        assert not v["quasi_baer"] or v["pq_baer"]
    for m in _modules(corpus):
        if check_module_property(m, "quasi_baer").holds:
            assert check_module_property(m, "endo_aip").holds
