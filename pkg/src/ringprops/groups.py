"""Finite abelian groups presented as products of cyclic groups.

Elements are addressed by a mixed-radix integer index (last coordinate
varies fastest), so sets of elements are plain sets of ints and most bulk
arithmetic is vectorized through numpy.
"""

from functools import cached_property
from math import gcd, prod

import numpy as np

from .errors import InvalidStructure

_INDEX_LIMIT = 1 << 62


class AbelianGroup:
    """``Z_{d_1} x ... x Z_{d_k}``.

    >>> G = AbelianGroup((2, 4))
    >>> G.order
    8
    >>> G.coords(G.add(G.index((1, 3)), G.index((1, 2))))
    (0, 1)
    """

    def __init__(self, orders):
        orders = tuple(int(d) for d in orders)
        if any(d < 1 for d in orders):
            raise InvalidStructure(f"cyclic orders must be positive, got {orders}")
        self.orders = orders
        self.rank = len(orders)
        self.order = prod(orders)
        if self.order >= _INDEX_LIMIT:
            raise InvalidStructure("group too large to index")
        w = []
        acc = 1
        for d in reversed(orders):
            w.append(acc)
            acc *= d
        self.weights = tuple(reversed(w))
        self._d = np.array(orders, dtype=np.int64)
        self._w = np.array(self.weights, dtype=np.int64)

    def __repr__(self):
        return f"AbelianGroup({self.orders})"

    def __eq__(self, other):
        return isinstance(other, AbelianGroup) and self.orders == other.orders

    def __hash__(self):
        return hash(self.orders)

    def __len__(self):
        return self.order

    @property
    def zero(self):
        return 0

    def index(self, coords):
        if len(coords) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(coords)}")
        return sum((int(c) % d) * w for c, d, w in zip(coords, self.orders, self.weights))

    def coords(self, idx):
        return tuple((int(idx) // w) % d for w, d in zip(self.weights, self.orders))

    def contains_coords(self, coords):
        return len(coords) == self.rank and all(0 <= c < d for c, d in zip(coords, self.orders))

    def generator(self, i):
        """Index of the i-th cyclic generator."""
        return self.weights[i] if self.orders[i] > 1 else 0

    @cached_property
    def table(self):
        """All coordinate rows, row ``i`` being element ``i``."""
        return self.coords_array(np.arange(self.order, dtype=np.int64))

    def coords_array(self, idx):
        idx = np.asarray(idx, dtype=np.int64)
        return (idx[..., None] // self._w) % self._d

    def index_array(self, coords):
        coords = np.asarray(coords, dtype=np.int64) % self._d
        return coords @ self._w if self.rank else np.zeros(coords.shape[:-1], dtype=np.int64)

    def reduce(self, coords):
        return tuple(int(c) % d for c, d in zip(coords, self.orders))

    # arithmetic on indices

    def add(self, a, b):
        return self.index([x + y for x, y in zip(self.coords(a), self.coords(b))])

    def neg(self, a):
        return self.index([-x for x in self.coords(a)])

    def sub(self, a, b):
        return self.index([x - y for x, y in zip(self.coords(a), self.coords(b))])

    def scale(self, n, a):
        return self.index([n * x for x in self.coords(a)])

    def add_arrays(self, a, b):
        return self.index_array(self.coords_array(a) + self.coords_array(b))

    def element_order(self, a):
        out = 1
        for c, d in zip(self.coords(a), self.orders):
            k = d // gcd(c, d)
            out = out * k // gcd(out, k)
        return out

    def multiples(self, a):
        n = self.element_order(a)
        c = np.array(self.coords(a), dtype=np.int64)
        return self.index_array(np.arange(n, dtype=np.int64)[:, None] * c)

    def span(self, gens, start=None):
        """Subgroup generated by ``gens`` (and the subgroup ``start``), as a frozenset."""
        members = np.array(sorted(start) if start else [0], dtype=np.int64)
        known = set(members.tolist())
        for g in gens:
            g = int(g)
            if g in known:
                continue
            mults = self.multiples(g)
            members = np.unique(self.add_arrays(members[:, None], mults[None, :]))
            known = set(members.tolist())
        return frozenset(known)

    def is_subgroup(self, elements):
        elements = set(elements)
        if 0 not in elements:
            return False
        arr = np.fromiter(elements, dtype=np.int64)
        return set(self.add_arrays(arr[:, None], arr[None, :]).ravel().tolist()) <= elements


def span_vectors(gens, moduli):
    """Subgroup of ``prod Z_{moduli}`` spanned by coordinate vectors, as sorted tuples."""
    group = AbelianGroup(moduli)
    idx = group.span(group.index(g) for g in gens)
    return [group.coords(i) for i in sorted(idx)]
