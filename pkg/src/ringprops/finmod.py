"""Finite right modules over finite rings.

The action is stored on generators, ``g_i . b_s = sum_l A[i, s, l] g_l``,
and extended biadditively; ``b_s`` runs over the additive generators of the
ring (including trivial ones, so that ring coordinates can be used directly).
"""

from functools import cached_property
from itertools import product as iproduct
from math import lcm

import numpy as np

from .errors import DEFAULT_SIZE_CAP, InvalidStructure, RingMismatch, check_cap
from .finring import make_cyclic_ring
from .groups import AbelianGroup
from .smith import subgroup_presentation

# full action tables are materialized only up to this many entries
ACTION_TABLE_LIMIT = 1 << 16


class FiniteModule:
    def __init__(self, orders, ring, action, name=None, cap=DEFAULT_SIZE_CAP,
                 description=None):
        self.group = AbelianGroup(orders)
        self.ring = ring
        check_cap(name or "module", self.group.order, cap)
        k, kr = self.group.rank, ring.rank
        A = np.zeros((k, kr, k), dtype=np.int64)
        if k and kr:
            A[...] = np.asarray(action, dtype=np.int64).reshape(k, kr, k)
            A %= self.group._d
        self.action = A
        self.name = name or f"Module{self.group.orders}"
        self.description = description
        self._validate()

    def __repr__(self):
        return f"<FiniteModule {self.name} of order {self.order} over {self.ring.name}>"

    @property
    def order(self):
        return self.group.order

    @property
    def rank(self):
        return self.group.rank

    @property
    def zero(self):
        return 0

    @property
    def elements(self):
        return range(self.order)

    def __len__(self):
        return self.order

    @cached_property
    def generators(self):
        return [self.group.generator(i) for i in range(self.rank) if self.group.orders[i] > 1]

    def coords(self, m):
        return self.group.coords(m)

    def element(self, coords):
        return self.group.index(coords)

    def act_coords(self, cm, cr):
        out = np.einsum("...i,...s,isl->...l", cm, cr, self.action)
        return out % self.group._d

    def act(self, m, r):
        """``m . r``"""
        if self.rank == 0:
            return 0
        return int(self.group.index_array(self.act_coords(
            self.group.coords_array(m), self.ring.group.coords_array(r))))

    def act_arrays(self, M, R):
        if self.rank == 0:
            return np.zeros(np.broadcast(np.asarray(M), np.asarray(R)).shape, dtype=np.int64)
        if self.order * self.ring.order <= ACTION_TABLE_LIMIT:
            return self.act_table[np.asarray(M), np.asarray(R)]
        return self.group.index_array(self.act_coords(
            self.group.coords_array(M), self.ring.group.coords_array(R)))

    @cached_property
    def act_table(self):
        if self.order * self.ring.order > ACTION_TABLE_LIMIT:
            raise MemoryError(f"{self.name}: action table too large")
        TM = self.group.table
        TR = self.ring.group.table
        return self.group.index_array(self.act_coords(TM[:, None, :], TR[None, :, :]))

    @cached_property
    def action_matrices(self):
        """``A_s`` with ``coords(m . b_s) = coords(m) @ A_s`` for each ring generator slot."""
        return [self.action[:, s, :] for s in range(self.ring.rank)]

    def _validate(self):
        d = self.group._d
        k, kr = self.rank, self.ring.rank
        A = self.action
        rd = self.ring.group.orders
        for i, s in iproduct(range(k), range(kr)):
            if np.any((d[i] * A[i, s]) % d) or np.any((rd[s] * A[i, s]) % d):
                raise InvalidStructure(f"{self.name}: action of ring generator {s} on "
                                       f"generator {i} is incompatible with the orders")
        if not k:
            return
        eye = np.eye(k, dtype=np.int64)
        one = np.array(self.ring.coords(self.ring.one), dtype=np.int64)
        if not np.array_equal(self.act_coords(eye, one[None, :]), eye % d):
            raise InvalidStructure(f"{self.name}: the ring identity does not act trivially")
        reye = np.eye(kr, dtype=np.int64)
        lhs = self.act_coords(self.act_coords(eye[:, None, None], reye[None, :, None]),
                              reye[None, None, :])
        rr = self.ring.mul_coords(reye[:, None, :], reye[None, :, :])
        rhs = self.act_coords(eye[:, None, None], rr[None, :, :, :])
        if not np.array_equal(lhs, rhs):
            raise InvalidStructure(f"{self.name}: (m.r).s != m.(rs)")


def scalar_act(module, m, r):
    return module.act(m, r)


def regular_module(r, cap=DEFAULT_SIZE_CAP):
    return FiniteModule(r.group.orders, r, r.constants, name=f"{r.name}_R", cap=cap,
                        description={"kind": "regular", "ring": r.description})


def z_module(orders, exponent=None, cap=DEFAULT_SIZE_CAP):
    """``Z_{d_1} + ... + Z_{d_k}`` as a module over ``Z_e``.

    ``e`` defaults to ``lcm(d_i)``; a larger multiple may be passed so that
    several finite Z-modules share one coefficient ring.
    """
    orders = [int(d) for d in orders]
    if not orders:
        raise ValueError("orders must be nonempty")
    e = lcm(*orders)
    if exponent is not None:
        if exponent % e:
            raise ValueError(f"exponent {exponent} is not a multiple of {e}")
        e = exponent
    ring = make_cyclic_ring(e, cap=cap)
    k = len(orders)
    A = np.zeros((k, 1, k), dtype=np.int64)
    for i in range(k):
        A[i, 0, i] = 1
    name = "Z(" + ",".join(map(str, orders)) + ")"
    if exponent is not None:
        name += f"/Z{e}"
    desc = {"kind": "z_module", "orders": orders, "ring": ring.description}
    if exponent is not None:
        desc["exponent"] = exponent
    return FiniteModule(orders, ring, A, name=name, cap=cap, description=desc)


def zero_module(ring):
    return FiniteModule((), ring, np.zeros((0, ring.rank, 0)), name=f"0_{ring.name}",
                        description={"kind": "zero", "ring": ring.description})


def direct_sum(a, b, cap=DEFAULT_SIZE_CAP):
    if a.ring != b.ring:
        raise RingMismatch(f"{a.name} is over {a.ring.name}, {b.name} over {b.ring.name}")
    name = f"{a.name}+{b.name}"
    check_cap(name, a.order * b.order, cap)
    ka, kb = a.rank, b.rank
    kr = a.ring.rank
    A = np.zeros((ka + kb, kr, ka + kb), dtype=np.int64)
    A[:ka, :, :ka] = a.action
    A[ka:, :, ka:] = b.action
    out = FiniteModule(a.group.orders + b.group.orders, a.ring, A, name=name, cap=cap,
                       description={"kind": "direct_sum",
                                    "summands": [a.description, b.description]})
    out.summands = (a, b)
    return out


def free_module(r, n, cap=DEFAULT_SIZE_CAP):
    if n < 1:
        raise ValueError("rank must be positive")
    check_cap(f"{r.name}^{n}", r.order ** n, cap)
    base = regular_module(r, cap=cap)
    out = base
    for _ in range(n - 1):
        out = direct_sum(out, base, cap=cap)
    out.name = f"{r.name}^{n}"
    out.description = {"kind": "free", "ring": r.description, "n": n}
    return out


def sum_element(module, x, y):
    """Element ``(x, y)`` of ``direct_sum(a, b)``."""
    a, b = module.summands
    return module.element(a.coords(x) + b.coords(y))


def _small_generating_set(group, elements):
    gens = []
    span = frozenset([0])
    for x in sorted(elements):
        if x not in span:
            gens.append(x)
            span = group.span([x], start=span)
    return gens


def submodule_as_module(parent, elements, name=None, cap=DEFAULT_SIZE_CAP):
    """Present a submodule of ``parent`` as a module in its own right.

    Returns ``(module, embedding)`` where ``embedding[i]`` is the element of
    ``parent`` represented by element ``i`` of the new module.
    """
    G = parent.group
    gens = [G.coords(x) for x in _small_generating_set(G, elements)]
    orders, basis = subgroup_presentation(gens, G.orders)
    new = AbelianGroup(orders)
    embedding = []
    lookup = {}
    for idx in range(new.order):
        c = new.coords(idx)
        vec = [0] * G.rank
        for ci, b in zip(c, basis):
            for j in range(G.rank):
                vec[j] += ci * b[j]
        x = G.index(vec)
        embedding.append(x)
        lookup[x] = idx
    if set(lookup) != set(elements):
        raise InvalidStructure("element set is not an additive subgroup")
    k, kr = len(orders), parent.ring.rank
    A = np.zeros((k, kr, k), dtype=np.int64)
    for i in range(k):
        src = G.index(basis[i])
        for s in range(kr):
            img = parent.act(src, parent.ring.group.generator(s))
            if img not in lookup:
                raise InvalidStructure("element set is not closed under the ring action")
            A[i, s] = new.coords(lookup[img])
    module = FiniteModule(orders, parent.ring, A, name=name or f"sub({parent.name},{len(elements)})",
                          cap=cap, description={"kind": "submodule", "parent": parent.description,
                                                "elements": [list(G.coords(x)) for x in sorted(elements)]})
    return module, embedding
