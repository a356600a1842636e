"""Shared test helpers: brute-force table isomorphism between small rings."""

from itertools import permutations

import numpy as np


def ring_tables(r):
    allx = np.arange(r.order)
    add = np.array([[r.add(int(a), int(b)) for b in allx] for a in allx])
    return add, r.mul_table


def find_ring_isomorphism(a, b):
    """A bijection (tuple, index -> index) preserving + and *, found by search over
    images of additive generators; None when the rings are not isomorphic."""
    if a.order != b.order:
        return None
    if a.order == 1:
        return (0,)
    gens = a.generators
    ga = a.group
    addb, mulb = ring_tables(b)
    orders = [ga.orders[i] for i in range(a.rank) if ga.orders[i] > 1]
    coords = [a.coords(x) for x in range(a.order)]
    nz = [i for i in range(a.rank) if ga.orders[i] > 1]
    for images in permutations(range(b.order), len(gens)):
        # additive extension
        phi = []
        ok = True
        for c in coords:
            y = 0
            for slot, img in zip(nz, images):
                for _ in range(c[slot]):
                    y = int(addb[y, img])
            phi.append(y)
        if len(set(phi)) != b.order:
            continue
        for o, img in zip(orders, images):
            y = 0
            for _ in range(o):
                y = int(addb[y, img])
            if y != 0:
                ok = False
        if not ok:
            continue
        phi = np.array(phi)
        if np.array_equal(phi[a.mul_table], mulb[phi[:, None], phi[None, :]]) and \
                phi[a.one] == b.one:
            return tuple(phi.tolist())
    return None
