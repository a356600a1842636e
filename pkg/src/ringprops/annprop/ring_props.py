"""Ring-level property checkers.

``orientation="right"`` (the default, used by the theorem suite) means:
Baer-type conditions on right annihilators ``r(X) = eR``, and AIP-type
conditions on left annihilators of ideals that must be right s-unital
(``a x = a``), matching Def. 2.1 through the regular module. ``"left"``
swaps every side.
"""

import numpy as np

from ..errors import DEFAULT_SIZE_CAP, check_cap
from .ideals import (LEFT, RIGHT, IdealHandle, _common_unit, all_two_sided_ideals,
                     principal_ideal, ring_left_annihilator, ring_right_annihilator)
from .verdict import Verdict, ring_coords

RING_PROPERTIES = ("baer", "quasi_baer", "pq_baer", "rickart_pp", "aip", "app",
                   "centrally_aip", "abelian", "reduced", "semiprime", "prime", "local",
                   "domain")


def check_ring_property(r, p, orientation="right", cap=DEFAULT_SIZE_CAP):
    if p not in _CHECKERS:
        raise ValueError(f"unknown ring property {p!r}")
    if orientation not in ("right", "left"):
        raise ValueError("orientation must be 'right' or 'left'")
    check_cap(r.name, r.order, cap)
    v = _CHECKERS[p](_RingCtx(r, orientation, cap))
    v.witness.setdefault("orientation", orientation)
    return v


class _RingCtx:
    def __init__(self, r, orientation, cap):
        self.r = r
        self.orientation = orientation
        self.cap = cap

    def c(self, x):
        return ring_coords(self.r, x)

    def cs(self, xs):
        return [self.c(x) for x in sorted(xs)]

    def failure(self, prop, **extra):
        w = {"kind": "failure", "submodule": [], "endomorphism": None, "units": {}}
        w.update({k: v for k, v in extra.items() if v is not None})
        return Verdict(prop, False, w, self.r.name)

    def certificate(self, prop, units=None, **extra):
        w = {"kind": "certificate", "submodule": [], "endomorphism": None,
             "units": units or {}}
        w.update(extra)
        return Verdict(prop, True, w, self.r.name)

    # the Baer side: annihilators of subsets, generated by idempotents

    def baer_annihilator(self, xs):
        if self.orientation == "right":
            return ring_right_annihilator(self.r, xs)
        return ring_left_annihilator(self.r, xs)

    def generating_idempotent(self, ann):
        """``e`` with ``ann = eR`` (``Re`` for "left"), or None."""
        arr = np.fromiter(sorted(ann.elements), dtype=np.int64)
        for e in self.r.idempotents:
            if e not in ann.elements:
                continue
            prod = (self.r.mul_arrays(e, arr) if self.orientation == "right"
                    else self.r.mul_arrays(arr, e))
            if np.array_equal(prod, arr):
                return e
        return None

    # the AIP side: annihilators of ideals, s-unital on the opposite side

    def aip_annihilator(self, ideal):
        if self.orientation == "right":
            return ring_left_annihilator(self.r, ideal.generating_set() or [0])
        return ring_right_annihilator(self.r, ideal.generating_set() or [0])

    def common_unit(self, ann, central):
        cands = ann.elements & self.r.central_elements if central else ann.elements
        u, bad = _common_unit(self.r, ann.elements, cands, self.orientation)
        return u, bad, cands


def _baer_over(ctx, prop, subsets):
    units = {}
    for label, xs in subsets:
        ann = ctx.baer_annihilator(xs)
        e = ctx.generating_idempotent(ann)
        if e is None:
            return ctx.failure(prop, subset=ctx.cs(xs), annihilator=ctx.cs(ann.elements),
                               detail="annihilator is not generated by an idempotent")
        units[label] = ctx.c(e)
    return ctx.certificate(prop, units=units)


def _baer(ctx):
    # annihilators of subsets are the intersections of element annihilators
    r = ctx.r
    base = {}
    for x in r.elements:
        base.setdefault(ctx.baer_annihilator([x]).elements, x)
    found = {frozenset(r.elements): ()}
    queue = [frozenset(r.elements)]
    while queue:
        cur = queue.pop()
        for ann, x in base.items():
            new = cur & ann
            if new not in found:
                found[new] = found[cur] + (x,)
                queue.append(new)
    subsets = [(str(i), list(found[a])) for i, a in
               enumerate(sorted(found, key=lambda a: (len(a), sorted(a))))]
    return _baer_over(ctx, "baer", subsets)


def _quasi_baer(ctx):
    ideals = all_two_sided_ideals(ctx.r, ctx.cap)
    return _baer_over(ctx, "quasi_baer",
                      [(str(i), sorted(I.elements)) for i, I in enumerate(ideals)])


def _principal_by_generator(r):
    seen = {}
    for a in r.elements:
        seen.setdefault(principal_ideal(r, a).elements, a)
    return sorted(seen.items(), key=lambda kv: kv[1])


def _pq_baer(ctx):
    return _baer_over(ctx, "pq_baer", [(str(a), sorted(I)) for I, a in
                                       _principal_by_generator(ctx.r)])


def _rickart_pp(ctx):
    return _baer_over(ctx, "rickart_pp", [(str(a), [a]) for a in ctx.r.elements])


def _aip_over(ctx, prop, ideals, central):
    units = {}
    for label, ideal, gen in ideals:
        ann = ctx.aip_annihilator(ideal)
        u, bad, cands = ctx.common_unit(ann, central)
        if bad is not None:
            return ctx.failure(prop, ideal=ctx.cs(ideal.elements),
                               annihilator=ctx.cs(ann.elements), element=ctx.c(bad),
                               candidates=ctx.cs(cands), generator=gen,
                               detail="annihilator element without a unit among the candidates")
        units[label] = ctx.c(u)
    return ctx.certificate(prop, units=units)


def _aip(ctx):
    ideals = all_two_sided_ideals(ctx.r, ctx.cap)
    return _aip_over(ctx, "aip", [(str(i), I, None) for i, I in enumerate(ideals)], False)


def _app(ctx):
    items = [(str(a), IdealHandle(ctx.r, I), ctx.c(a))
             for I, a in _principal_by_generator(ctx.r)]
    return _aip_over(ctx, "app", items, False)


def _centrally_aip(ctx):
    ideals = all_two_sided_ideals(ctx.r, ctx.cap)
    return _aip_over(ctx, "centrally_aip",
                     [(str(i), I, None) for i, I in enumerate(ideals)], True)


def _abelian(ctx):
    r = ctx.r
    central = r.central_elements
    for e in r.idempotents:
        if e not in central:
            x = next(g for g in r.elements if r.mul(e, g) != r.mul(g, e))
            return ctx.failure("abelian", element=ctx.c(e), other=ctx.c(x),
                               detail="idempotent does not commute with other")
    return ctx.certificate("abelian", units={"idempotents": ctx.cs(r.idempotents)})


def _reduced(ctx):
    r = ctx.r
    allx = np.arange(r.order, dtype=np.int64)
    bad = np.nonzero((r.mul_arrays(allx, allx) == 0) & (allx != 0))[0]
    if len(bad):
        return ctx.failure("reduced", element=ctx.c(bad[0]), detail="nonzero a with a*a = 0")
    return ctx.certificate("reduced")


def _ideal_product_zero(r, a, b):
    ga = np.asarray(a.generating_set() or [0], dtype=np.int64)
    gb = np.asarray(b.generating_set() or [0], dtype=np.int64)
    # IJ is spanned by products of additive generators, as both are ideals
    return not r.mul_arrays(ga[:, None], gb[None, :]).any()


def _semiprime(ctx):
    for I in all_two_sided_ideals(ctx.r, ctx.cap):
        if not I.is_zero and _ideal_product_zero(ctx.r, I, I):
            return ctx.failure("semiprime", ideal=ctx.cs(I.elements),
                               detail="nonzero ideal with I*I = 0")
    return ctx.certificate("semiprime")


def _prime(ctx):
    r = ctx.r
    if r.is_zero_ring:
        return ctx.failure("prime", detail="zero ring is not prime by convention")
    ideals = [I for I in all_two_sided_ideals(r, ctx.cap) if not I.is_zero]
    for I in ideals:
        for J in ideals:
            if _ideal_product_zero(r, I, J):
                return ctx.failure("prime", ideal=ctx.cs(I.elements),
                                   other_ideal=ctx.cs(J.elements),
                                   detail="nonzero ideals with I*J = 0")
    return ctx.certificate("prime")


def _local(ctx):
    r = ctx.r
    if r.is_zero_ring:
        return ctx.failure("local", detail="zero ring has no maximal ideal")
    units = r.units
    nonunits = [x for x in r.elements if x not in units]
    nu = set(nonunits)
    for a in nonunits:
        for b in nonunits:
            if r.add(a, b) not in nu:
                return ctx.failure("local", element=ctx.c(a), other=ctx.c(b),
                                   detail="two non-units with a unit sum")
    for a in nonunits:
        for g in r.generators:
            for p in (r.mul(a, g), r.mul(g, a)):
                if p not in nu:
                    return ctx.failure("local", element=ctx.c(a), other=ctx.c(g),
                                       detail="non-unit times an element is a unit")
    return ctx.certificate("local", units={"nonunits": ctx.cs(nonunits)})


def _domain(ctx):
    r = ctx.r
    if r.is_zero_ring:
        return ctx.failure("domain", detail="zero ring is not a domain by convention")
    T = r.mul_table if r.order * r.order <= 1 << 22 else None
    for a in range(1, r.order):
        row = T[a] if T is not None else r.mul_arrays(a, np.arange(r.order))
        z = np.nonzero(row[1:] == 0)[0]
        if len(z):
            return ctx.failure("domain", element=ctx.c(a), other=ctx.c(int(z[0]) + 1),
                               detail="zero divisors a*b = 0")
    return ctx.certificate("domain")


_CHECKERS = {
    "baer": _baer, "quasi_baer": _quasi_baer, "pq_baer": _pq_baer,
    "rickart_pp": _rickart_pp, "aip": _aip, "app": _app, "centrally_aip": _centrally_aip,
    "abelian": _abelian, "reduced": _reduced, "semiprime": _semiprime, "prime": _prime,
    "local": _local, "domain": _domain,
}
assert set(_CHECKERS) == set(RING_PROPERTIES)
