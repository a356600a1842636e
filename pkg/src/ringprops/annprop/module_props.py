"""Module-level property checkers; every verdict carries a witness.

Conventions (see the decision ledger): S = End(M) acts on the left with
``f * g = f o g``; annihilators of submodules are taken on the left in S and
s-unitality is tested on the right (``a x = a``).
"""

import numpy as np

from ..errors import DEFAULT_SIZE_CAP
from ..homcalc import end_ring
from ..lattice import (all_submodules, cyclic_submodules, fully_invariant_submodules,
                       minimal_submodules)
from .ideals import (TWO_SIDED, _common_unit, all_two_sided_ideals, left_annihilator,
                     principal_ideals, right_annihilator_in_module)
from .verdict import ModuleWitness

MODULE_PROPERTIES = (
    "rickart", "baer", "quasi_baer", "pq_baer", "abelian", "reduced", "rigid", "symmetric",
    "semicommutative", "ifp", "retractable", "endo_aip", "endo_app", "centrally_endo_aip",
    "locally_pq_retractable", "semi_projective", "semisimple", "prime_module",
    "semiprime_module",
)


class ModuleContext:
    """Lazily computed data shared by the checkers for one module."""

    def __init__(self, m, cap=DEFAULT_SIZE_CAP):
        self.m = m
        self.cap = cap
        self.s = end_ring(m, cap)
        self.S = self.s.ring
        self.T = self.s.apply_table
        self.w = ModuleWitness(m, self.s)
        self._cache = {}

    def _get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def kernel_masks(self):
        return self._get("ker", lambda: self.T == 0)

    @property
    def image_masks(self):
        def compute():
            out = np.zeros((self.S.order, self.m.order), dtype=bool)
            out[np.arange(self.S.order)[:, None], self.T] = True
            return out
        return self._get("img", compute)

    @property
    def orbit_masks(self):
        """``orbit[x, y]`` iff ``y = f(x)`` for some f, i.e. ``y`` in ``Sx``."""
        def compute():
            n = self.m.order
            out = np.zeros((n, n), dtype=bool)
            out[np.broadcast_to(np.arange(n)[None, :], self.T.shape), self.T] = True
            return out
        return self._get("orbit", compute)

    @property
    def summands(self):
        """Direct summands of M: exactly the images of idempotent endomorphisms."""
        def compute():
            return {frozenset(self.T[e].tolist()): e for e in self.S.idempotents}
        return self._get("summands", compute)

    @property
    def fully_invariant(self):
        return self._get("fi", lambda: [h.underlying for h in
                                        fully_invariant_submodules(self.m, self.s, self.cap)])

    @property
    def submodules(self):
        return all_submodules(self.m, self.cap)

    @property
    def cyclic(self):
        return cyclic_submodules(self.m, self.cap)

    def annihilator(self, n):
        key = ("ann", n.elements)
        return self._get(key, lambda: left_annihilator(self.s, n))

    @property
    def prime_submodules(self):
        return self._get("primes", lambda: [n for n in self.fully_invariant
                                            if _prime_failure(self, n) is None])


def module_context(m, cap=DEFAULT_SIZE_CAP):
    cache = m.__dict__.setdefault("_prop_ctx", {})
    if cap not in cache:
        cache[cap] = ModuleContext(m, cap)
    return cache[cap]


def check_module_property(m, p, cap=DEFAULT_SIZE_CAP):
    """Decide property ``p`` of ``m`` (one of ``MODULE_PROPERTIES``)."""
    if p not in _CHECKERS:
        raise ValueError(f"unknown module property {p!r}")
    return _CHECKERS[p](module_context(m, cap))


# Baer family: l_S(N) = Se for an idempotent e


def _summand_idempotent(ctx, ideal):
    """An idempotent ``e`` in the left ideal with ``f e = f`` for all its ``f``."""
    arr = np.fromiter(sorted(ideal.elements), dtype=np.int64)
    for e in ctx.S.idempotents:
        if e in ideal.elements and np.array_equal(ctx.S.mul_arrays(arr, e), arr):
            return e
    return None


def _baer_over(ctx, prop, subs):
    units = {}
    for n in subs:
        ann = ctx.annihilator(n)
        e = _summand_idempotent(ctx, ann)
        if e is None:
            return ctx.w.failure(prop, submodule=n.elements,
                                 annihilator=[ctx.w.hom(f) for f in sorted(ann.elements)],
                                 candidates=[ctx.w.hom(f) for f in ctx.S.idempotents
                                             if f in ann.elements])
        units[len(units)] = {"submodule": ctx.w.sub(n.elements), "idempotent": ctx.w.hom(e)}
    return ctx.w.certificate(prop, units={str(k): v for k, v in units.items()})


def _baer(ctx):
    return _baer_over(ctx, "baer", ctx.submodules)


def _quasi_baer(ctx):
    return _baer_over(ctx, "quasi_baer", ctx.fully_invariant)


def _pq_baer(ctx):
    return _baer_over(ctx, "pq_baer", ctx.cyclic)


def _rickart(ctx):
    summands = ctx.summands
    seen = {}
    for f in range(ctx.S.order):
        ker = frozenset(np.nonzero(ctx.kernel_masks[f])[0].tolist())
        if ker in seen:
            continue
        if ker not in summands:
            return ctx.w.failure("rickart", submodule=ker, endomorphism=f,
                                 detail="kernel is not the image of any idempotent")
        seen[ker] = summands[ker]
    return ctx.w.certificate("rickart", units={
        str(i): {"kernel": ctx.w.sub(k), "idempotent": ctx.w.hom(e)}
        for i, (k, e) in enumerate(sorted(seen.items(), key=lambda kv: sorted(kv[0])))})


def _semisimple(ctx):
    summands = ctx.summands
    for n in ctx.submodules:
        if n.elements not in summands:
            return ctx.w.failure("semisimple", submodule=n.elements,
                                 detail="submodule is not a direct summand")
    return ctx.w.certificate("semisimple")


# abelian family


def _abelian(ctx):
    central = ctx.S.central_elements
    for e in ctx.S.idempotents:
        if e not in central:
            x = next(g for g in ctx.S.generators if ctx.S.mul(e, g) != ctx.S.mul(g, e))
            return ctx.w.failure("abelian", endomorphism=e, other=ctx.w.hom(x),
                                 detail="idempotent does not commute with other")
    return ctx.w.certificate("abelian", units={
        "idempotents": [ctx.w.hom(e) for e in ctx.S.idempotents]})


def _reduced(ctx):
    img = ctx.image_masks
    orbit = ctx.orbit_masks
    for f in range(ctx.S.order):
        zeros = np.nonzero(ctx.kernel_masks[f])[0]
        meets = orbit[zeros] & img[f]
        meets[:, 0] = False
        hit = np.argwhere(meets)
        if len(hit):
            x, y = (int(v) for v in hit[0])
            g = int(np.nonzero(ctx.T[:, zeros[x]] == y)[0][0])
            return ctx.w.failure("reduced", endomorphism=f, element=ctx.w.elem(zeros[x]),
                                 other=ctx.w.hom(g), image_element=ctx.w.elem(y),
                                 detail="f(m) = 0 but g(m) is a nonzero element of Im f")
    return ctx.w.certificate("reduced")


def _rigid(ctx):
    T = ctx.T
    sq = T[np.arange(ctx.S.order)[:, None], T]
    bad = np.argwhere((sq == 0) & (T != 0))
    if len(bad):
        f, x = (int(v) for v in bad[0])
        return ctx.w.failure("rigid", endomorphism=f, element=ctx.w.elem(x),
                             detail="f(f(m)) = 0 but f(m) != 0")
    return ctx.w.certificate("rigid")


def _symmetric(ctx):
    T, mt = ctx.T, ctx.S.mul_table
    for f in range(ctx.S.order):
        fg = T[mt[f, :]] == 0    # (f o g)(m) = 0, rows indexed by g
        gf = T[mt[:, f]] == 0    # (g o f)(m) = 0
        bad = np.argwhere(fg & ~gf)
        if len(bad):
            g, x = (int(v) for v in bad[0])
            return ctx.w.failure("symmetric", endomorphism=f, other=ctx.w.hom(g),
                                 element=ctx.w.elem(x),
                                 detail="f(g(m)) = 0 but g(f(m)) != 0")
    return ctx.w.certificate("symmetric")


def _semicommutative(ctx):
    orbit = ctx.orbit_masks
    for f in range(ctx.S.order):
        ker = ctx.kernel_masks[f]
        zeros = np.nonzero(ker)[0]
        bad = np.argwhere(orbit[zeros] & ~ker)
        if len(bad):
            x, y = int(zeros[bad[0][0]]), int(bad[0][1])
            g = int(np.nonzero(ctx.T[:, x] == y)[0][0])
            return ctx.w.failure("semicommutative", endomorphism=f, other=ctx.w.hom(g),
                                 element=ctx.w.elem(x),
                                 detail="f(m) = 0 but f(g(m)) != 0")
    return ctx.w.certificate("semicommutative")


def _ifp(ctx):
    gens = ctx.S.generators
    for f in range(ctx.S.order):
        ker = ctx.kernel_masks[f]
        for g in gens:
            moved = np.nonzero(ker & ~ker[ctx.T[g]])[0]
            if len(moved):
                return ctx.w.failure("ifp", endomorphism=f,
                                     submodule=np.nonzero(ker)[0].tolist(),
                                     other=ctx.w.hom(g), element=ctx.w.elem(moved[0]),
                                     detail="r_M(f) is not fully invariant: g moves m out of it")
    return ctx.w.certificate("ifp")


# retractability and projectivity


def _retractable(ctx):
    img = ctx.image_masks
    nonzero = np.arange(1, ctx.S.order) if ctx.S.order > 1 else np.arange(0)
    units = {}
    # Hom(M, N) != 0 is inherited upward, so the minimal submodules decide it
    for a in minimal_submodules(ctx.m, ctx.cap):
        mask = np.zeros(ctx.m.order, dtype=bool)
        mask[list(a.elements)] = True
        inside = nonzero[~(img[nonzero] & ~mask).any(axis=1)] if len(nonzero) else nonzero
        if not len(inside):
            return ctx.w.failure("retractable", submodule=a.elements,
                                 detail="no nonzero endomorphism has image inside N")
        units[str(len(units))] = {"submodule": ctx.w.sub(a.elements),
                                  "endomorphism": ctx.w.hom(inside[0])}
    return ctx.w.certificate("retractable", units=units)


def _locally_pq_retractable(ctx):
    images = {}
    for f in range(1, ctx.S.order):
        images.setdefault(frozenset(ctx.T[f].tolist()), f)
    for ideal in principal_ideals(ctx.S, ctx.cap):
        r = right_annihilator_in_module(ctx.s, ideal)
        if r.is_zero:
            continue
        if r.elements not in images:
            gen = min(ideal.elements - {0}) if len(ideal) > 1 else 0
            return ctx.w.failure("locally_pq_retractable", submodule=r.elements,
                                 generator=ctx.w.hom(gen),
                                 detail="r_M(SfS) is nonzero and not the image of any "
                                        "nonzero endomorphism")
    return ctx.w.certificate("locally_pq_retractable")


def _semi_projective(ctx):
    img = ctx.image_masks
    mt = ctx.S.mul_table
    by_image = {}
    for f in range(ctx.S.order):
        key = img[f].tobytes()
        if key not in by_image:
            by_image[key] = np.nonzero(~(img & ~img[f]).any(axis=1))[0]
        inside = by_image[key]
        fs = set(mt[f].tolist())
        if len(inside) != len(fs):
            g = next(int(g) for g in inside if int(g) not in fs)
            return ctx.w.failure("semi_projective", endomorphism=f, other=ctx.w.hom(g),
                                 detail="Im g is inside f(M) but g is not in fS")
    return ctx.w.certificate("semi_projective")


# annihilator-ideal properties


def _s_unital_over(ctx, prop, subs, central):
    units = {}
    cz = ctx.S.central_elements
    for n in subs:
        ann = ctx.annihilator(n)
        cands = ann.elements & cz if central else ann.elements
        u, bad = _common_unit(ctx.S, ann.elements, cands, "right")
        if bad is not None:
            return ctx.w.failure(prop, submodule=n.elements, endomorphism=bad,
                                 annihilator=[ctx.w.hom(f) for f in sorted(ann.elements)],
                                 candidates=[ctx.w.hom(f) for f in sorted(cands)],
                                 detail="no unit for the endomorphism among the candidates")
        if central:
            arr = np.fromiter(sorted(ann.elements), dtype=np.int64)
            # Def. 2.1 asks for phi psi = phi = psi phi; centrality gives both
            assert np.array_equal(ctx.S.mul_arrays(arr, u), arr)
            assert np.array_equal(ctx.S.mul_arrays(u, arr), arr)
        units[str(len(units))] = {"submodule": ctx.w.sub(n.elements), "unit": ctx.w.hom(u)}
    return ctx.w.certificate(prop, units=units)


def _endo_aip(ctx):
    return _s_unital_over(ctx, "endo_aip", ctx.fully_invariant, central=False)


def _endo_app(ctx):
    return _s_unital_over(ctx, "endo_app", ctx.cyclic, central=False)


def _centrally_endo_aip(ctx):
    return _s_unital_over(ctx, "centrally_endo_aip", ctx.fully_invariant, central=True)


# primeness


def _apply_ideal(ctx, ideal, n):
    """Element set of the images ``t(x)``; contained in ``N`` iff ``T(N) <= N``."""
    rows = np.fromiter(sorted(ideal.elements), dtype=np.int64)
    cols = np.fromiter(sorted(n.elements), dtype=np.int64)
    return set(np.unique(ctx.T[rows][:, cols]).tolist())


def _prime_failure(ctx, n):
    """``(T, N')`` with ``T(N') <= N`` but ``T(M) not <= N`` and ``N' not <= N``; or None.

    Prime submodules are proper by convention, so ``N = M`` yields ``(None, None)``.
    """
    if len(n.elements) == ctx.m.order:
        return (None, None)
    full = ctx.fully_invariant[-1]
    for ideal in all_two_sided_ideals(ctx.S, ctx.cap):
        if _apply_ideal(ctx, ideal, full) <= n.elements:
            continue
        for n2 in ctx.fully_invariant:
            if not n2.elements <= n.elements and _apply_ideal(ctx, ideal, n2) <= n.elements:
                return (ideal, n2)
    return None


def _prime_module(ctx):
    zero = ctx.fully_invariant[0]
    fail = _prime_failure(ctx, zero)
    if fail is None:
        return ctx.w.certificate("prime_module")
    ideal, n2 = fail
    if ideal is None:
        return ctx.w.failure("prime_module", detail="zero module: {0} is not proper")
    return ctx.w.failure("prime_module", submodule=n2.elements,
                         ideal_generators=[ctx.w.hom(g) for g in ideal.generating_set()],
                         detail="T(N') = 0 while T(M) != 0 and N' != 0")


def _semiprime_module(ctx):
    primes = ctx.prime_submodules
    meet = frozenset(range(ctx.m.order))
    for p in primes:
        meet &= p.elements
    if len(meet) == 1:
        return ctx.w.certificate("semiprime_module",
                                 units={"prime_submodules": [ctx.w.sub(p.elements)
                                                             for p in primes]})
    x = min(meet - {0})
    return ctx.w.failure("semiprime_module", element=ctx.w.elem(x),
                         prime_submodules=[ctx.w.sub(p.elements) for p in primes],
                         detail="nonzero element lies in every prime submodule")


_CHECKERS = {
    "rickart": _rickart, "baer": _baer, "quasi_baer": _quasi_baer, "pq_baer": _pq_baer,
    "abelian": _abelian, "reduced": _reduced, "rigid": _rigid, "symmetric": _symmetric,
    "semicommutative": _semicommutative, "ifp": _ifp, "retractable": _retractable,
    "endo_aip": _endo_aip, "endo_app": _endo_app, "centrally_endo_aip": _centrally_endo_aip,
    "locally_pq_retractable": _locally_pq_retractable, "semi_projective": _semi_projective,
    "semisimple": _semisimple, "prime_module": _prime_module,
    "semiprime_module": _semiprime_module,
}
assert set(_CHECKERS) == set(MODULE_PROPERTIES)
