"""Hom groups, endomorphism rings, kernels and images.

A hom ``f: M -> N`` is an integer matrix ``F`` with ``f(g_i) = sum_j F[i, j] h_j``
on the additive generators, so ``coords(f(m)) = coords(m) @ F`` (mod the
orders of ``N``). Composition ``f o g`` therefore has matrix ``G @ F``.
"""

from functools import cached_property
from itertools import product as iproduct
from math import gcd, prod

import numpy as np

from .errors import DEFAULT_SIZE_CAP, RingMismatch, check_cap
from .finring import FiniteRing
from .groups import AbelianGroup
from .lattice import SubmoduleHandle
from .smith import solve_congruences, subgroup_presentation


class ModuleHom:
    """An R-linear map given by its canonical generator-image matrix."""

    __slots__ = ("source", "target", "matrix", "_key")

    def __init__(self, source, target, matrix):
        F = np.asarray(matrix, dtype=np.int64).reshape(source.rank, target.rank)
        self.source = source
        self.target = target
        self.matrix = F % target.group._d if target.rank else F
        self._key = self.matrix.tobytes()

    def __eq__(self, other):
        return (isinstance(other, ModuleHom) and self.source is other.source
                and self.target is other.target and self._key == other._key)

    def __hash__(self):
        return hash((id(self.source), id(self.target), self._key))

    def __repr__(self):
        return f"ModuleHom({self.source.name} -> {self.target.name}, {self.matrix.tolist()})"

    def __call__(self, m):
        return apply(self, m)

    def images(self, elements=None):
        """Images of an index array (default: every element of the source)."""
        if elements is None:
            elements = np.arange(self.source.order, dtype=np.int64)
        coords = self.source.group.coords_array(elements)
        return self.target.group.index_array(coords @ self.matrix)

    def compose(self, g):
        """``self o g``"""
        return ModuleHom(g.source, self.target, g.matrix @ self.matrix)

    def is_zero(self):
        return not self.matrix.any()

    def is_linear(self):
        """Exhaustive check of ``f(m.r) = f(m).r``."""
        M, N = self.source, self.target
        img = self.images()
        allm = np.arange(M.order, dtype=np.int64)
        allr = np.arange(M.ring.order, dtype=np.int64)
        lhs = img[M.act_arrays(allm[:, None], allr[None, :])]
        rhs = N.act_arrays(img[:, None], allr[None, :])
        return bool(np.array_equal(lhs, rhs))


def apply(f, m):
    coords = np.array(f.source.coords(m), dtype=np.int64)
    return int(f.target.group.index_array(coords @ f.matrix))


def identity_hom(m):
    return ModuleHom(m, m, np.eye(m.rank, dtype=np.int64))


def zero_hom(m, n):
    return ModuleHom(m, n, np.zeros((m.rank, n.rank), dtype=np.int64))


def _check_rings(m, n):
    if m.ring != n.ring:
        raise RingMismatch(f"{m.name} and {n.name} are over different rings")


def _hom_lattice_generators(m, n):
    """Generators (as matrices) of the group of R-linear maps M -> N."""
    d = m.group.orders
    e = n.group.orders
    km, kn = m.rank, n.rank
    # F[i, j] = scale[i, j] * t[i, j], t free mod gcd(d_i, e_j)
    variables = [(i, j) for i, j in iproduct(range(km), range(kn)) if gcd(d[i], e[j]) > 1]
    var_index = {v: c for c, v in enumerate(variables)}
    scale = {(i, j): e[j] // gcd(d[i], e[j]) for i, j in variables}
    rows, moduli = [], []
    for s in range(m.ring.rank):
        A = m.action[:, s, :]
        B = n.action[:, s, :]
        # (A F)[i, c] - (F B)[i, c] = 0 mod e_c
        for i, c in iproduct(range(km), range(kn)):
            row = [0] * len(variables)
            for l in range(km):
                if A[i, l] and (l, c) in var_index:
                    row[var_index[(l, c)]] += int(A[i, l]) * scale[(l, c)]
            for j in range(kn):
                if B[j, c] and (i, j) in var_index:
                    row[var_index[(i, j)]] -= int(B[j, c]) * scale[(i, j)]
            row = [x % e[c] for x in row]
            if any(row):
                rows.append(row)
                moduli.append(e[c])
    out = []
    for t in solve_congruences(rows, moduli, len(variables)):
        F = np.zeros((km, kn), dtype=np.int64)
        for (i, j), c in var_index.items():
            F[i, j] = (t[c] * scale[(i, j)]) % e[j]
        if F.any():
            out.append(F)
    return out


class _HomSpace:
    """The hom group as a presented subgroup of the matrix-entry group."""

    def __init__(self, m, n):
        self.m, self.n = m, n
        self.moduli = tuple(e for _ in range(m.rank) for e in n.group.orders)
        gens = [tuple(int(x) for x in F.ravel()) for F in _hom_lattice_generators(m, n)]
        self.orders, self.basis = subgroup_presentation(gens, self.moduli)
        self.order = prod(self.orders)

    def all_matrices(self):
        """Every hom matrix, in the index order of the presentation."""
        coords = AbelianGroup(self.orders).table
        if not self.basis:
            return np.zeros((1, self.m.rank, self.n.rank), dtype=np.int64)
        B = np.array(self.basis, dtype=np.int64)
        flat = (coords @ B) % np.array(self.moduli, dtype=np.int64)
        return flat.reshape(-1, self.m.rank, self.n.rank)


def hom_group(m, n, cap=DEFAULT_SIZE_CAP):
    """All R-linear maps ``m -> n`` via linear congruences on the generator images."""
    _check_rings(m, n)
    space = _HomSpace(m, n)
    check_cap(f"Hom({m.name}, {n.name})", space.order, cap)
    mats = space.all_matrices()
    order = np.lexsort(mats.reshape(len(mats), -1).T[::-1]) if mats.size else range(len(mats))
    return [ModuleHom(m, n, mats[i]) for i in order]


def hom_group_bruteforce(m, n, cap=DEFAULT_SIZE_CAP):
    """Filter every additive map ``m -> n`` for R-linearity (checked on all of M x R)."""
    _check_rings(m, n)
    d, e = m.group.orders, n.group.orders
    choices = [[t * (e[j] // gcd(d[i], e[j])) for t in range(gcd(d[i], e[j]))]
               for i in range(m.rank) for j in range(n.rank)]
    total = prod(len(c) for c in choices)
    check_cap(f"additive Hom({m.name}, {n.name})", total, 1 << 22)
    allm = np.arange(m.order, dtype=np.int64)
    allr = np.arange(m.ring.order, dtype=np.int64)
    mr = m.act_arrays(allm[:, None], allr[None, :])
    cm = m.group.coords_array(allm)
    out = []
    batch = []

    def flush():
        Fs = np.array(batch, dtype=np.int64).reshape(len(batch), m.rank, n.rank)
        img = n.group.index_array(np.einsum("mi,bij->bmj", cm, Fs))
        lhs = np.take_along_axis(img, mr.reshape(1, -1).repeat(len(batch), 0), axis=1)
        rhs = n.act_arrays(img[:, :, None], allr[None, None, :]).reshape(len(batch), -1)
        ok = np.all(lhs == rhs, axis=1)
        out.extend(ModuleHom(m, n, Fs[b]) for b in np.nonzero(ok)[0])
        batch.clear()

    for entries in iproduct(*choices):
        batch.append(entries)
        if len(batch) >= 2048:
            flush()
    if batch:
        flush()
    check_cap(f"Hom({m.name}, {n.name})", len(out), cap)
    out.sort(key=lambda f: f.matrix.ravel().tolist())
    return out


class EndoRing:
    """``End_R(M)`` as a FiniteRing with composition as multiplication.

    Element ``i`` of ``ring`` is the endomorphism with matrix ``matrices[i]``.
    """

    def __init__(self, module, cap=DEFAULT_SIZE_CAP):
        self.module = module
        space = _HomSpace(module, module)
        check_cap(f"End({module.name})", space.order, cap)
        self.matrices = space.all_matrices()
        self._lookup = {F.tobytes(): i for i, F in enumerate(self.matrices)}
        r = len(space.orders)
        basis = [np.array(b, dtype=np.int64).reshape(module.rank, module.rank)
                 for b in space.basis]
        C = np.zeros((r, r, r), dtype=np.int64)
        egroup = AbelianGroup(space.orders)
        for i, j in iproduct(range(r), repeat=2):
            # b_i * b_j = b_i o b_j has matrix B_j @ B_i
            C[i, j] = egroup.coords(self.index_of_matrix(basis[j] @ basis[i]))
        one = egroup.coords(self.index_of_matrix(np.eye(module.rank, dtype=np.int64)))
        self.ring = FiniteRing(space.orders, C, one, name=f"End({module.name})", cap=cap,
                               description={"kind": "endomorphism_ring",
                                            "module": module.description})
        self.ring.endo = self

    def __repr__(self):
        return f"<EndoRing of {self.module.name}, order {self.order}>"

    @property
    def order(self):
        return self.ring.order

    def __len__(self):
        return self.ring.order

    def index_of_matrix(self, F):
        F = np.asarray(F, dtype=np.int64) % self.module.group._d if self.module.rank else F
        return self._lookup[np.ascontiguousarray(F, dtype=np.int64).tobytes()]

    def index_of(self, f):
        return self.index_of_matrix(f.matrix)

    def hom(self, i):
        return ModuleHom(self.module, self.module, self.matrices[int(i)])

    def homs(self):
        return [self.hom(i) for i in range(self.order)]

    @cached_property
    def apply_table(self):
        """``apply_table[f, m] = f(m)`` for every endomorphism and element."""
        M = self.module
        cm = M.group.table
        return M.group.index_array(np.einsum("mi,fij->fmj", cm, self.matrices))

    def images(self, f):
        return frozenset(self.apply_table[f].tolist())

    def kernel_elements(self, f):
        return frozenset(np.nonzero(self.apply_table[f] == 0)[0].tolist())


def end_ring(m, cap=DEFAULT_SIZE_CAP):
    cache = m.__dict__.setdefault("_end_cache", {})
    if cap not in cache:
        cache[cap] = EndoRing(m, cap)
    return cache[cap]


def kernel(f):
    img = f.images()
    return SubmoduleHandle(f.source, frozenset(np.nonzero(img == 0)[0].tolist()))


def image(f):
    return SubmoduleHandle(f.target, frozenset(f.images().tolist()))


def is_monomorphism(f):
    return len(kernel(f).elements) == 1


def injection(module, i):
    """Canonical injection of summand ``i`` into ``direct_sum(a, b)``."""
    a, b = module.summands
    src = (a, b)[i]
    F = np.zeros((src.rank, module.rank), dtype=np.int64)
    off = 0 if i == 0 else a.rank
    F[:, off:off + src.rank] = np.eye(src.rank, dtype=np.int64)
    return ModuleHom(src, module, F)


def projection(module, i):
    a, b = module.summands
    dst = (a, b)[i]
    F = np.zeros((module.rank, dst.rank), dtype=np.int64)
    off = 0 if i == 0 else a.rank
    F[off:off + dst.rank, :] = np.eye(dst.rank, dtype=np.int64)
    return ModuleHom(module, dst, F)
