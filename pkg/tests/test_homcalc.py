import numpy as np
import pytest

from helpers import find_ring_isomorphism
from ringprops.errors import RingMismatch
from ringprops.finmod import direct_sum, regular_module, z_module, zero_module
from ringprops.finring import make_cyclic_ring, matrix_ring
from ringprops.homcalc import (ModuleHom, apply, end_ring, hom_group, hom_group_bruteforce,
                               identity_hom, image, injection, is_monomorphism, kernel,
                               projection, zero_hom)


def test_hom_z2_z4():
    a, b = z_module([2], exponent=4), z_module([4])
    homs = hom_group(a, b)
    assert len(homs) == 2
    assert sorted(h.images().tolist() for h in homs) == [[0, 0], [0, 2]]


def test_hom_from_zero_module(Z):
    n = regular_module(Z[4])
    assert len(hom_group(zero_module(Z[4]), n)) == 1


def test_hom_z2_z3():
    a, b = z_module([2], exponent=6), z_module([3], exponent=6)
    assert len(hom_group(a, b)) == 1


def test_hom_ring_mismatch():
    with pytest.raises(RingMismatch):
        hom_group(z_module([2]), z_module([4]))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 8, 12])
def test_end_of_cyclic_is_cyclic(n):
    e = end_ring(z_module([n]))
    assert e.order == n
    assert find_ring_isomorphism(e.ring, make_cyclic_ring(n)) is not None


def test_end_z2_z2_is_m2_f2():
    e = end_ring(z_module([2, 2]))
    assert e.order == 16
    assert find_ring_isomorphism(e.ring, matrix_ring(make_cyclic_ring(2), 2)) is not None


def test_end_z2_z4_order():
    assert end_ring(z_module([2, 4])).order == 32


def test_end_ring_multiplication_is_composition():
    m = z_module([2, 4])
    s = end_ring(m)
    T = s.apply_table
    for f in range(s.order):
        for g in range(s.order):
            fg = s.ring.mul(f, g)
            assert np.array_equal(T[fg], T[f][T[g]])


def test_apply_identity_zero_and_scalar():
    m = z_module([4])
    assert all(apply(identity_hom(m), x) == x for x in m.elements)
    assert all(apply(zero_hom(m, m), x) == 0 for x in m.elements)
    two = ModuleHom(m, m, [[2]])
    assert apply(two, 3) == 2


def test_kernels_and_monos():
    m = z_module([4])
    two = ModuleHom(m, m, [[2]])
    assert kernel(identity_hom(m)).elements == {0}
    assert kernel(zero_hom(m, m)).elements == set(m.elements)
    assert kernel(two).elements == {0, 2}
    assert image(two).elements == {0, 2}
    assert is_monomorphism(identity_hom(m))
    assert not is_monomorphism(zero_hom(m, m))
    assert not is_monomorphism(two)


def test_injection_projection():
    a, b = z_module([2], exponent=4), z_module([4])
    s = direct_sum(a, b)
    for i in (0, 1):
        assert is_monomorphism(injection(s, i))
        assert projection(s, i).compose(injection(s, i)) == identity_hom((a, b)[i])


@pytest.mark.parametrize("build", [
    lambda Z: (z_module([2, 4]), z_module([4, 4])),
    lambda Z: (regular_module(Z[6]), regular_module(Z[6])),
    lambda Z: (z_module([2, 6]), z_module([3, 6])),
])
def test_congruence_hom_matches_bruteforce(Z, build):
    a, b = build(Z)
    if a.ring != b.ring:
        pytest.skip("different rings")
    fast = {h.matrix.tobytes() for h in hom_group(a, b)}
    slow = {h.matrix.tobytes() for h in hom_group_bruteforce(a, b)}
    assert fast == slow


def test_congruence_hom_matches_bruteforce_noncommutative(T2Z2):
    m = regular_module(T2Z2)
    fast = hom_group(m, m)
    slow = hom_group_bruteforce(m, m)
    assert {h.matrix.tobytes() for h in fast} == {h.matrix.tobytes() for h in slow}
    assert len(fast) == 8
    assert all(h.is_linear() for h in fast)
