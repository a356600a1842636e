"""Finite rings given by structure constants over a product of cyclic groups.

A ring is an additive group ``Z_{d_1} x ... x Z_{d_k}`` plus the products of
its cyclic generators, ``b_i * b_j = sum_l C[i, j, l] b_l``, extended
bilinearly. Ring elements are the integer indices of the additive group.
"""

import enum
from functools import cached_property
from itertools import product as iproduct

import numpy as np

from .errors import DEFAULT_SIZE_CAP, InvalidStructure, NotAnIdeal, check_cap
from .groups import AbelianGroup
from .smith import quotient_presentation

# full multiplication tables are materialized up to this many entries
TABLE_LIMIT = 1 << 22


class Semicentral(enum.Enum):
    NOT_IDEMPOTENT = "not_idempotent"
    LEFT = "left"
    RIGHT = "right"
    CENTRAL = "central"
    NEITHER = "neither"


class FiniteRing:
    """Associative unital ring with a structure-constant presentation.

    ``constants`` has shape ``(k, k, k)``; ``one`` is given in coordinates.
    The presentation is checked on generators at construction, which by
    trilinearity settles associativity and unitality for all elements.
    """

    def __init__(self, orders, constants, one, name=None, cap=DEFAULT_SIZE_CAP,
                 description=None):
        self.group = AbelianGroup(orders)
        check_cap(name or "ring", self.group.order, cap)
        k = self.group.rank
        C = np.zeros((k, k, k), dtype=np.int64)
        if k:
            C[...] = np.asarray(constants, dtype=np.int64).reshape(k, k, k)
            C %= self.group._d
        self.constants = C
        self.one = self.group.index(one)
        self.name = name or f"Ring{self.group.orders}"
        self.description = description
        self._cache = {}
        self._validate()

    def __repr__(self):
        return f"<FiniteRing {self.name} of order {self.order}>"

    @property
    def order(self):
        return self.group.order

    @property
    def zero(self):
        return 0

    @property
    def rank(self):
        return self.group.rank

    def __len__(self):
        return self.order

    def __eq__(self, other):
        # presentation equality
        return (isinstance(other, FiniteRing) and self.group == other.group
                and self.one == other.one and np.array_equal(self.constants, other.constants))

    def __hash__(self):
        return hash((self.group.orders, self.one, self.constants.tobytes()))

    @property
    def elements(self):
        return range(self.order)

    @cached_property
    def generators(self):
        """Indices of the nontrivial additive generators."""
        return [self.group.generator(i) for i in range(self.rank) if self.group.orders[i] > 1]

    def coords(self, x):
        return self.group.coords(x)

    def element(self, coords):
        return self.group.index(coords)

    def add(self, a, b):
        return self.group.add(a, b)

    def sub(self, a, b):
        return self.group.sub(a, b)

    def neg(self, a):
        return self.group.neg(a)

    def mul_coords(self, ca, cb):
        """Vectorized product on coordinate arrays (broadcasting over leading axes)."""
        out = np.einsum("...i,...j,ijl->...l", ca, cb, self.constants)
        return out % self.group._d

    def mul(self, a, b):
        return int(self.group.index_array(self.mul_coords(
            self.group.coords_array(a), self.group.coords_array(b))))

    def mul_arrays(self, A, B):
        """Elementwise (broadcast) products of index arrays."""
        if self.order * self.order <= TABLE_LIMIT:
            return self.mul_table[np.asarray(A), np.asarray(B)]
        return self.group.index_array(self.mul_coords(
            self.group.coords_array(A), self.group.coords_array(B)))

    @cached_property
    def mul_table(self):
        if self.order * self.order > TABLE_LIMIT:
            raise MemoryError(f"{self.name}: multiplication table too large")
        T = self.group.table
        return self.group.index_array(self.mul_coords(T[:, None, :], T[None, :, :]))

    def _validate(self):
        G = self.group
        k = self.rank
        d = G._d
        C = self.constants
        for i, j in iproduct(range(k), repeat=2):
            if np.any((d[i] * C[i, j]) % d) or np.any((d[j] * C[i, j]) % d):
                raise InvalidStructure(f"{self.name}: product of generators {i},{j} "
                                       "is incompatible with their orders")
        eye = np.eye(k, dtype=np.int64)
        left = self.mul_coords(self.mul_coords(eye[:, None, None], eye[None, :, None]),
                               eye[None, None, :])
        right = self.mul_coords(eye[:, None, None],
                                self.mul_coords(eye[None, :, None], eye[None, None, :]))
        if not np.array_equal(left, right):
            raise InvalidStructure(f"{self.name}: multiplication is not associative")
        one = np.array(self.coords(self.one), dtype=np.int64)
        if k and not (np.array_equal(self.mul_coords(one[None, :], eye), eye % d)
                      and np.array_equal(self.mul_coords(eye, one[None, :]), eye % d)):
            raise InvalidStructure(f"{self.name}: the given one is not a two-sided identity")

    # element-level predicates

    @property
    def is_zero_ring(self):
        return self.order == 1

    def is_idempotent(self, e):
        return self.mul(e, e) == e

    def is_central(self, z):
        return all(self.mul(z, g) == self.mul(g, z) for g in self.generators)

    @cached_property
    def is_commutative(self):
        gens = self.generators
        return all(self.mul(a, b) == self.mul(b, a) for a in gens for b in gens)

    def semicentral_class(self, e):
        if not self.is_idempotent(e):
            return Semicentral.NOT_IDEMPOTENT
        left = right = True
        for x in self.generators:
            exe = self.mul(self.mul(e, x), e)
            left = left and exe == self.mul(x, e)
            right = right and exe == self.mul(e, x)
        if left and right:
            return Semicentral.CENTRAL
        if left:
            return Semicentral.LEFT
        if right:
            return Semicentral.RIGHT
        return Semicentral.NEITHER

    @cached_property
    def central_elements(self):
        allx = np.arange(self.order, dtype=np.int64)
        mask = np.ones(self.order, dtype=bool)
        for g in self.generators:
            mask &= self.mul_arrays(allx, g) == self.mul_arrays(g, allx)
        return frozenset(np.nonzero(mask)[0].tolist())

    @cached_property
    def idempotents(self):
        allx = np.arange(self.order, dtype=np.int64)
        return sorted(np.nonzero(self.mul_arrays(allx, allx) == allx)[0].tolist())

    @cached_property
    def units(self):
        allx = np.arange(self.order, dtype=np.int64)
        out = set()
        for x in self.elements:
            if np.any(self.mul_arrays(x, allx) == self.one):
                out.add(x)
        return frozenset(out)


def is_idempotent(r, e):
    return r.is_idempotent(e)


def is_central(r, z):
    return r.is_central(z)


def semicentral_class(r, e):
    return r.semicentral_class(e)


def central_elements(r):
    return r.central_elements


# constructors


def make_cyclic_ring(n, cap=DEFAULT_SIZE_CAP):
    if n < 1:
        raise ValueError("n must be positive")
    return FiniteRing((n,), [[[1 % n]]], (1 % n,), name=f"Z{n}", cap=cap,
                      description={"kind": "cyclic", "n": n})


def _block_ring(base, k, positions, name, description, cap):
    check_cap(name, base.order ** len(positions), cap)
    r = base.rank
    pos_index = {p: i for i, p in enumerate(positions)}
    n = len(positions) * r
    C = np.zeros((n, n, n), dtype=np.int64)
    for (p, q), a in pos_index.items():
        for (q2, s), b in pos_index.items():
            if q != q2:
                continue
            c = pos_index[(p, s)]
            C[a * r:(a + 1) * r, b * r:(b + 1) * r, c * r:(c + 1) * r] = base.constants
    one = [0] * n
    base_one = base.coords(base.one)
    for p in range(k):
        a = pos_index[(p, p)]
        one[a * r:(a + 1) * r] = base_one
    ring = FiniteRing(base.group.orders * len(positions), C, one, name=name, cap=cap,
                      description=description)
    ring.base = base
    ring.positions = tuple(positions)
    return ring


def matrix_ring(base, k, cap=DEFAULT_SIZE_CAP):
    """Full ``k x k`` matrices over ``base``."""
    positions = [(p, q) for p in range(k) for q in range(k)]
    return _block_ring(base, k, positions, f"M{k}({base.name})",
                       {"kind": "matrix", "base": base.description, "k": k}, cap)


def triangular_ring(base, k, cap=DEFAULT_SIZE_CAP):
    """Upper triangular ``k x k`` matrices over ``base``."""
    positions = [(p, q) for p in range(k) for q in range(k) if p <= q]
    return _block_ring(base, k, positions, f"T{k}({base.name})",
                       {"kind": "triangular", "base": base.description, "k": k}, cap)


def matrix_element(ring, entries):
    """Element of a matrix/triangular ring from ``{(row, col): base element}`` (0-based)."""
    base = ring.base
    coords = []
    for p in ring.positions:
        coords.extend(base.coords(entries.get(p, 0)))
    unknown = set(entries) - set(ring.positions)
    if any(entries[p] for p in unknown):
        raise ValueError(f"positions {sorted(unknown)} are not available in {ring.name}")
    return ring.element(coords)


def matrix_unit(ring, i, j):
    """``E_ij`` (1-based, as in the usual notation)."""
    return matrix_element(ring, {(i - 1, j - 1): ring.base.one})


def direct_product(a, b, cap=DEFAULT_SIZE_CAP):
    name = f"{a.name}x{b.name}"
    check_cap(name, a.order * b.order, cap)
    ka, kb = a.rank, b.rank
    n = ka + kb
    C = np.zeros((n, n, n), dtype=np.int64)
    C[:ka, :ka, :ka] = a.constants
    C[ka:, ka:, ka:] = b.constants
    one = a.coords(a.one) + b.coords(b.one)
    desc = {"kind": "product", "factors": [a.description, b.description]}
    ring = FiniteRing(a.group.orders + b.group.orders, C, one, name=name, cap=cap,
                      description=desc)
    ring.factors = (a, b)
    return ring


def pair_element(ring, x, y):
    """Element ``(x, y)`` of ``direct_product(a, b)``."""
    a, b = ring.factors
    return ring.element(a.coords(x) + b.coords(y))


def _elements_of(ideal):
    return frozenset(getattr(ideal, "elements", ideal))


def quotient_ring(r, ideal, cap=DEFAULT_SIZE_CAP):
    """``r / ideal`` with the induced operations; raises NotAnIdeal."""
    elems = _elements_of(ideal)
    G = r.group
    if not G.is_subgroup(elems):
        raise NotAnIdeal(f"{sorted(elems)} is not an additive subgroup of {r.name}")
    arr = np.fromiter(elems, dtype=np.int64)
    for g in r.generators:
        if not (set(r.mul_arrays(arr, g).tolist()) <= elems
                and set(r.mul_arrays(g, arr).tolist()) <= elems):
            raise NotAnIdeal(f"subset is not a two-sided ideal of {r.name}")
    k = r.rank
    relations = [list(G.coords(x)) for x in sorted(elems) if x]
    relations += [[d if i == j else 0 for j in range(k)] for i, d in enumerate(G.orders)]
    pres = quotient_presentation(relations, k)
    lifts = [pres.lift([int(i == j) for j in range(len(pres.orders))])
             for i in range(len(pres.orders))]
    m = len(lifts)
    C = np.zeros((m, m, m), dtype=np.int64)
    for i, j in iproduct(range(m), repeat=2):
        prod_ij = r.mul(r.element(lifts[i]), r.element(lifts[j]))
        C[i, j] = pres.coords(r.coords(prod_ij))
    gens_desc = [list(G.coords(x)) for x in sorted(elems)]
    name = f"{r.name}/I{len(elems)}"
    q = FiniteRing(pres.orders, C, pres.coords(r.coords(r.one)), name=name, cap=cap,
                   description={"kind": "quotient", "base": r.description,
                                "ideal_generators": gens_desc})
    q.projection = lambda x: q.element(pres.coords(r.coords(x)))
    q.parent = r
    return q
