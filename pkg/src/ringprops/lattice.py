"""Submodule lattices: cyclic, fully invariant, direct summands, essentiality, u.dim."""

from dataclasses import dataclass, field

import numpy as np

from .errors import DEFAULT_SIZE_CAP, check_cap


@dataclass(frozen=True, eq=False)
class SubmoduleHandle:
    """A submodule of ``parent`` given by its full element set."""

    parent: object
    elements: frozenset
    gens: tuple = field(default=(), compare=False)

    def __eq__(self, other):
        return (isinstance(other, SubmoduleHandle) and self.parent is other.parent
                and self.elements == other.elements)

    def __hash__(self):
        return hash((id(self.parent), self.elements))

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __le__(self, other):
        return self.elements <= other.elements

    def __lt__(self, other):
        return self.elements < other.elements

    @property
    def order(self):
        return len(self.elements)

    @property
    def is_zero(self):
        return len(self.elements) == 1

    def sorted_elements(self):
        return sorted(self.elements)

    def as_coords(self):
        return [list(self.parent.coords(x)) for x in sorted(self.elements)]

    def __repr__(self):
        return f"<Submodule of {self.parent.name} with {len(self.elements)} elements>"


@dataclass(frozen=True, eq=False)
class FullyInvariantHandle:
    underlying: SubmoduleHandle
    verified_against: int

    @property
    def elements(self):
        return self.underlying.elements

    def __eq__(self, other):
        return isinstance(other, FullyInvariantHandle) and self.underlying == other.underlying

    def __hash__(self):
        return hash(self.underlying)

    def __len__(self):
        return len(self.underlying)


def _memo(m, key, compute):
    cache = m.__dict__.setdefault("_lattice_cache", {})
    if key not in cache:
        cache[key] = compute()
    return cache[key]


def _canonical_order(handles):
    return sorted(handles, key=lambda h: (len(h.elements), sorted(h.elements)))


def submodule(m, elements):
    """Wrap an element set as a handle after checking it is a submodule."""
    elements = frozenset(int(x) for x in elements)
    if not is_submodule(m, elements):
        raise ValueError(f"not a submodule of {m.name}")
    return SubmoduleHandle(m, elements)


def is_submodule(m, elements):
    if not m.group.is_subgroup(elements):
        return False
    arr = np.fromiter(elements, dtype=np.int64)
    for s in range(m.ring.rank):
        img = m.act_arrays(arr, m.ring.group.generator(s))
        if not set(img.tolist()) <= elements:
            return False
    return True


def zero_submodule(m):
    return SubmoduleHandle(m, frozenset([0]))


def whole_module(m):
    return SubmoduleHandle(m, frozenset(range(m.order)), tuple(m.generators))


def span_submodule(m, gens, start=None):
    """Submodule generated by ``gens`` (joined with the submodule ``start``)."""
    ring_gens = [m.ring.group.generator(s) for s in range(m.ring.rank)
                 if m.ring.group.orders[s] > 1]
    elements = set(start.elements) if start is not None else {0}
    gens_out = list(start.gens) if start is not None else []
    for x in gens:
        x = int(x)
        if x in elements:
            continue
        gens_out.append(x)
        products = [int(v) for v in m.act_arrays(np.int64(x), np.array(ring_gens, dtype=np.int64))]
        # N + xR is the additive span of N, x and the x.b_s
        elements = m.group.span([x] + products, start=elements)
    return SubmoduleHandle(m, frozenset(elements), tuple(gens_out))


def join(a, b):
    if a.elements >= b.elements:
        return a
    if b.elements >= a.elements:
        return b
    gens = b.gens or tuple(sorted(b.elements))
    return span_submodule(a.parent, gens, start=a)


def meet(a, b):
    return SubmoduleHandle(a.parent, a.elements & b.elements)


def cyclic_submodule(m, x):
    """``xR``; the additive span of ``x . b_s`` over the ring generators."""
    x = int(x)
    if x == 0:
        return zero_submodule(m)
    ring_gens = np.array([m.ring.group.generator(s) for s in range(m.ring.rank)], dtype=np.int64)
    products = m.act_arrays(np.int64(x), ring_gens).tolist()
    return SubmoduleHandle(m, m.group.span([x] + products), (x,))


def cyclic_submodules(m, cap=DEFAULT_SIZE_CAP):
    """Distinct cyclic submodules, in canonical order (zero first)."""
    check_cap(m.name, m.order, cap)

    def compute():
        seen = {}
        for x in m.elements:
            c = cyclic_submodule(m, x)
            seen.setdefault(c.elements, c)
        return _canonical_order(seen.values())

    return _memo(m, "cyclic", compute)


def _join_closure(atoms, bottom):
    found = {bottom.elements: bottom}
    queue = [bottom]
    while queue:
        current = queue.pop()
        for atom in atoms:
            if atom.elements <= current.elements:
                continue
            j = join(current, atom)
            if j.elements not in found:
                found[j.elements] = j
                queue.append(j)
    return _canonical_order(found.values())


def all_submodules(m, cap=DEFAULT_SIZE_CAP):
    """Every submodule, as the join-closure of the cyclic submodules."""
    cyclics = [c for c in cyclic_submodules(m, cap) if not c.is_zero]
    return _memo(m, "all", lambda: _join_closure(cyclics, zero_submodule(m)))


def fully_invariant_closure(m, s, x):
    """Smallest fully invariant submodule containing ``x``: the span of ``S(x) R``."""
    orbit = set(s.apply_table[:, int(x)].tolist())
    return span_submodule(m, sorted(orbit))


def fully_invariant_submodules(m, s, cap=DEFAULT_SIZE_CAP):
    """All fully invariant submodules, by joining fully invariant closures of elements."""
    check_cap(m.name, m.order, cap)
    atoms = {}
    for x in m.elements:
        if x:
            c = fully_invariant_closure(m, s, x)
            atoms.setdefault(c.elements, c)
    subs = _join_closure(list(atoms.values()), zero_submodule(m))
    return [FullyInvariantHandle(n, id(s)) for n in subs]


def is_fully_invariant(m, s, n):
    """``f(N) <= N`` for every endomorphism ``f`` (checked against all of S)."""
    elements = n.elements if hasattr(n, "elements") else frozenset(n)
    cols = np.fromiter(elements, dtype=np.int64)
    images = s.apply_table[:, cols]
    return set(np.unique(images).tolist()) <= elements


def is_direct_summand(m, n, cap=DEFAULT_SIZE_CAP):
    """A complement ``K`` with ``N + K = M`` and ``N & K = 0``, or ``None``."""
    target = m.order
    if len(n.elements) == target:
        return zero_submodule(m)
    if target % len(n.elements):
        return None
    want = target // len(n.elements)
    for k in all_submodules(m, cap):
        if len(k.elements) == want and len(k.elements & n.elements) == 1:
            return k
    return None


def minimal_submodules(m, cap=DEFAULT_SIZE_CAP):
    """The minimal nonzero submodules (every one is cyclic)."""
    check_cap(m.name, m.order, cap)

    def compute():
        by_element = {}
        for x in m.elements:
            if x:
                by_element[x] = cyclic_submodule(m, x)
        out = {}
        for c in by_element.values():
            if c.elements in out:
                continue
            if all(len(by_element[y].elements) == len(c.elements) for y in c.elements if y):
                out[c.elements] = c
        return _canonical_order(out.values())

    return _memo(m, "minimal", compute)


def is_essential(m, n, cap=DEFAULT_SIZE_CAP):
    """Every nonzero submodule meets ``N``; enough to test the minimal ones."""
    return all(len(a.elements & n.elements) > 1 for a in minimal_submodules(m, cap))


def uniform_dimension(m, cap=DEFAULT_SIZE_CAP):
    """Size of a maximal independent family of minimal submodules.

    Greedy selection is exact here: each atom either lies in the running sum
    or meets it trivially, and the running sum ends as the socle.
    """
    total = zero_submodule(m)
    count = 0
    for atom in minimal_submodules(m, cap):
        if len(atom.elements & total.elements) == 1:
            total = join(total, atom)
            count += 1
    return count


def ring_right_uniform_dimension(r, cap=DEFAULT_SIZE_CAP):
    from .finmod import regular_module

    return uniform_dimension(regular_module(r, cap=cap), cap)
