"""Independent replay of failure witnesses.

The replay path never touches EndoRing indexing, the lattice enumerations or
the common-unit search. It rebuilds End(M) by brute force (filtering every
additive map, when there are at most ``BRUTE_FORCE_LIMIT`` of them; otherwise
by re-checking every congruence-path hom exhaustively for linearity),
represents endomorphisms by their image vectors, and checks the violated
clause of each definition directly.
"""

from math import gcd, prod

import numpy as np

from ..homcalc import ModuleHom, hom_group, hom_group_bruteforce
from .verdict import Verdict

BRUTE_FORCE_LIMIT = 1 << 20


class ReplayError(Exception):
    """A witness does not reproduce the violation it claims."""


def _require(cond, msg):
    if not cond:
        raise ReplayError(msg)


# naive modules


class _NaiveModule:
    def __init__(self, m):
        self.m = m
        d = m.group.orders
        additive = prod(gcd(a, b) for a in d for b in d)
        if additive <= BRUTE_FORCE_LIMIT:
            homs = hom_group_bruteforce(m, m, cap=None)
        else:
            homs = hom_group(m, m, cap=None)
            _require(all(f.is_linear() for f in homs), "non-linear endomorphism")
        self.images = np.array([f.images() for f in homs], dtype=np.int64).reshape(
            len(homs), m.order)
        self.lookup = {row.tobytes(): i for i, row in enumerate(self.images)}
        allm = np.arange(m.order, dtype=np.int64)
        allr = np.arange(m.ring.order, dtype=np.int64)
        self.action = m.act_arrays(allm[:, None], allr[None, :])

    def elem(self, coords):
        return self.m.element(coords)

    def elems(self, coords_list):
        return frozenset(self.elem(c) for c in coords_list)

    def hom(self, matrix):
        img = ModuleHom(self.m, self.m, matrix).images()
        key = np.ascontiguousarray(img, dtype=np.int64).tobytes()
        _require(key in self.lookup, "witness map is not an endomorphism")
        return self.lookup[key]

    def compose(self, f, g):
        """Image vector of ``f o g``."""
        return self.images[f][self.images[g]]

    def is_submodule(self, n):
        G = self.m.group
        for a in n:
            for b in n:
                if G.add(a, b) not in n:
                    return False
        return all(set(self.action[x].tolist()) <= n for x in n)

    def is_fully_invariant(self, n):
        cols = np.fromiter(n, dtype=np.int64)
        return set(np.unique(self.images[:, cols]).tolist()) <= n

    def cyclic(self, x):
        """``xR`` by exhaustion over the ring."""
        return frozenset(self.action[x].tolist())

    def annihilator(self, n):
        cols = np.fromiter(n, dtype=np.int64)
        return [f for f in range(len(self.images)) if not self.images[f][cols].any()]

    def center(self):
        imgs = self.images
        return [z for z in range(len(imgs))
                if np.array_equal(imgs[z][imgs], imgs[:, imgs[z]])]

    def idempotents(self):
        return [e for e in range(len(self.images))
                if np.array_equal(self.compose(e, e), self.images[e])]

    def fi_closure(self, x):
        """Additive span of ``f(x) r`` over all endomorphisms f and ring elements r."""
        gens = set()
        for y in set(self.images[:, x].tolist()):
            gens |= set(self.action[y].tolist())
        return self._additive_closure(gens)

    def _additive_closure(self, gens):
        G = self.m.group
        gens = [g for g in gens if g]
        out = {0}
        frontier = [0]
        while frontier:
            a = frontier.pop()
            for g in gens:
                b = G.add(a, g)
                if b not in out:
                    out.add(b)
                    frontier.append(b)
        return frozenset(out)

    def fully_invariant_submodules(self):
        atoms = {self.fi_closure(x) for x in range(1, self.m.order)}
        found = {frozenset([0])}
        frontier = [frozenset([0])]
        while frontier:
            cur = frontier.pop()
            for a in atoms:
                j = self._additive_closure(cur | a)
                if j not in found:
                    found.add(j)
                    frontier.append(j)
        return found

    def is_prime_submodule(self, n, fis):
        if len(n) == self.m.order:
            return False
        # T(N') <= N for T = SgS iff g(N') <= N, since N and N' are fully invariant
        for g in range(len(self.images)):
            img_g = set(self.images[g].tolist())
            if img_g <= n:
                continue
            for n2 in fis:
                if not n2 <= n and set(self.images[g][list(n2)].tolist()) <= n:
                    return False
        return True


def _hom_image(nm, f):
    return frozenset(nm.images[f].tolist())


def _naive_module(m):
    # the brute-force End(M) is the expensive part; build it once per module
    if "_naive_replay" not in m.__dict__:
        m.__dict__["_naive_replay"] = _NaiveModule(m)
    return m.__dict__["_naive_replay"]


def _replay_module(m, prop, w):
    nm = _naive_module(m)
    n = nm.elems(w["submodule"]) if w.get("submodule") else None
    f = nm.hom(w["endomorphism"]) if w.get("endomorphism") is not None else None
    other = nm.hom(w["other"]) if w.get("other") is not None else None
    x = nm.elem(w["element"]) if w.get("element") is not None else None

    def check_family(n):
        _require(nm.is_submodule(n), "witness is not a submodule")
        if prop in ("endo_aip", "centrally_endo_aip", "quasi_baer"):
            _require(nm.is_fully_invariant(n), "witness is not fully invariant")
        if prop in ("endo_app", "pq_baer"):
            _require(any(nm.cyclic(y) == n for y in n), "witness is not cyclic")

    if prop in ("endo_aip", "endo_app", "centrally_endo_aip"):
        check_family(n)
        ann = nm.annihilator(n)
        _require(f in ann, "witness element is not in l_S(N)")
        cands = ann
        if prop == "centrally_endo_aip":
            center = set(nm.center())
            cands = [z for z in ann if z in center]
        for u in cands:
            _require(not np.array_equal(nm.compose(f, u), nm.images[f]),
                     "witness element has a unit")
        return True
    if prop in ("baer", "quasi_baer", "pq_baer"):
        check_family(n)
        ann = nm.annihilator(n)
        for e in nm.idempotents():
            if e in ann:
                _require(any(not np.array_equal(nm.compose(g, e), nm.images[g]) for g in ann),
                         "l_S(N) = Se for an idempotent e")
        return True
    if prop == "rickart":
        ker = frozenset(np.nonzero(nm.images[f] == 0)[0].tolist())
        _require(all(_hom_image(nm, e) != ker for e in nm.idempotents()),
                 "kernel is a direct summand")
        return True
    if prop == "semisimple":
        _require(nm.is_submodule(n), "witness is not a submodule")
        _require(all(_hom_image(nm, e) != n for e in nm.idempotents()),
                 "submodule is a direct summand")
        return True
    if prop == "abelian":
        _require(np.array_equal(nm.compose(f, f), nm.images[f]), "not idempotent")
        _require(not np.array_equal(nm.compose(f, other), nm.compose(other, f)),
                 "idempotent commutes")
        return True
    if prop == "reduced":
        y = nm.elem(w["image_element"])
        _require(nm.images[f][x] == 0 and y != 0, "bad reduced witness")
        _require(nm.images[other][x] == y and y in _hom_image(nm, f), "bad reduced witness")
        return True
    if prop == "rigid":
        fx = nm.images[f][x]
        _require(fx != 0 and nm.images[f][fx] == 0, "bad rigid witness")
        return True
    if prop == "symmetric":
        _require(nm.compose(f, other)[x] == 0 and nm.compose(other, f)[x] != 0,
                 "bad symmetric witness")
        return True
    if prop == "semicommutative":
        _require(nm.images[f][x] == 0 and nm.compose(f, other)[x] != 0,
                 "bad semicommutative witness")
        return True
    if prop == "ifp":
        _require(nm.images[f][x] == 0 and nm.compose(f, other)[x] != 0,
                 "kernel is not moved by the witness")
        return True
    if prop == "retractable":
        _require(nm.is_submodule(n) and len(n) > 1, "not a nonzero submodule")
        _require(all(not _hom_image(nm, g) <= n for g in range(len(nm.images))
                     if nm.images[g].any()), "a nonzero hom lands in N")
        return True
    if prop == "locally_pq_retractable":
        g = nm.hom(w["generator"])
        # r_M(SgS) = {m : g(t(m)) = 0 for all t}
        ann = frozenset(y for y in range(m.order)
                        if not nm.images[g][nm.images[:, y]].any())
        _require(ann == n and len(n) > 1, "r_M(SgS) differs from the witness")
        _require(all(_hom_image(nm, h) != n for h in range(len(nm.images))
                     if nm.images[h].any()), "r_M(SgS) is an image")
        return True
    if prop == "semi_projective":
        _require(_hom_image(nm, other) <= _hom_image(nm, f), "Im g not inside Im f")
        fs = {nm.compose(f, s).tobytes() for s in range(len(nm.images))}
        _require(nm.images[other].tobytes() not in fs, "g lies in fS")
        return True
    if prop == "prime_module":
        if m.order == 1:
            return True
        _require(nm.is_submodule(n) and nm.is_fully_invariant(n) and len(n) > 1,
                 "N' is not a nonzero fully invariant submodule")
        gens = [nm.hom(g) for g in w["ideal_generators"]]
        cols = list(n)
        _require(all(not nm.images[g][cols].any() for g in gens), "T(N') != 0")
        _require(any(nm.images[g].any() for g in gens), "T(M) = 0")
        return True
    if prop == "semiprime_module":
        _require(x != 0, "zero element")
        fis = nm.fully_invariant_submodules()
        for p in fis:
            if nm.is_prime_submodule(p, fis):
                _require(x in p, "element escapes a prime submodule")
        return True
    raise ReplayError(f"no replay rule for module property {prop!r}")


# naive rings


class _NaiveRing:
    def __init__(self, r):
        self.r = r
        allx = np.arange(r.order, dtype=np.int64)
        self.table = r.mul_arrays(allx[:, None], allx[None, :])

    def el(self, c):
        return self.r.element(c)

    def els(self, cs):
        return frozenset(self.el(c) for c in cs)

    def is_ideal(self, xs):
        G = self.r.group
        return (all(G.add(a, b) in xs for a in xs for b in xs)
                and all(set(self.table[a].tolist()) <= xs and set(self.table[:, a].tolist()) <= xs
                        for a in xs))

    def principal(self, a):
        """``RaR``: additive closure of every product ``x a y``."""
        gens = set(self.table[self.table[:, a]].ravel().tolist()) - {0}
        G = self.r.group
        out, frontier = {0}, [0]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = G.add(x, g)
                if y not in out:
                    out.add(y)
                    frontier.append(y)
        return frozenset(out)

    def left_ann(self, xs):
        return frozenset(y for y in range(self.r.order) if all(self.table[y, x] == 0 for x in xs))

    def right_ann(self, xs):
        return frozenset(y for y in range(self.r.order) if all(self.table[x, y] == 0 for x in xs))

    def idempotents(self):
        return [e for e in range(self.r.order) if self.table[e, e] == e]

    def center(self):
        return frozenset(z for z in range(self.r.order)
                         if np.array_equal(self.table[z], self.table[:, z]))

    def units(self):
        return frozenset(x for x in range(self.r.order) if (self.table[x] == self.r.one).any())


def _replay_ring(r, prop, w):
    nr = _NaiveRing(r)
    right = w.get("orientation", "right") == "right"
    a = nr.el(w["element"]) if w.get("element") is not None else None
    b = nr.el(w["other"]) if w.get("other") is not None else None

    if prop in ("baer", "quasi_baer", "pq_baer", "rickart_pp"):
        xs = nr.els(w["subset"])
        if prop == "quasi_baer":
            _require(nr.is_ideal(xs), "subset is not an ideal")
        if prop == "pq_baer":
            _require(any(nr.principal(y) == xs for y in xs), "subset is not principal")
        if prop == "rickart_pp":
            _require(len(xs) == 1, "subset is not a single element")
        ann = nr.right_ann(xs) if right else nr.left_ann(xs)
        _require(nr.els(w["annihilator"]) == ann, "annihilator mismatch")
        for e in nr.idempotents():
            if e in ann:
                gen = {nr.table[e, y] if right else nr.table[y, e] for y in ann}
                _require(gen != set(ann), "annihilator is generated by an idempotent")
        return True
    if prop in ("aip", "app", "centrally_aip"):
        ideal = nr.els(w["ideal"])
        _require(nr.is_ideal(ideal), "not an ideal")
        if prop == "app":
            _require(nr.principal(nr.el(w["generator"])) == ideal, "not the principal ideal")
        ann = nr.left_ann(ideal) if right else nr.right_ann(ideal)
        _require(a in ann, "element is not in the annihilator")
        cands = ann & nr.center() if prop == "centrally_aip" else ann
        for x in cands:
            _require((nr.table[a, x] if right else nr.table[x, a]) != a, "element has a unit")
        return True
    if prop == "abelian":
        _require(nr.table[a, a] == a and nr.table[a, b] != nr.table[b, a], "bad abelian witness")
        return True
    if prop == "reduced":
        _require(a != 0 and nr.table[a, a] == 0, "bad reduced witness")
        return True
    if prop == "semiprime":
        ideal = nr.els(w["ideal"])
        _require(nr.is_ideal(ideal) and len(ideal) > 1, "not a nonzero ideal")
        _require(all(nr.table[x, y] == 0 for x in ideal for y in ideal), "I*I != 0")
        return True
    if prop in ("prime", "local", "domain") and r.order == 1:
        return True
    if prop == "prime":
        I, J = nr.els(w["ideal"]), nr.els(w["other_ideal"])
        _require(nr.is_ideal(I) and nr.is_ideal(J) and len(I) > 1 and len(J) > 1, "bad ideals")
        _require(all(nr.table[x, y] == 0 for x in I for y in J), "I*J != 0")
        return True
    if prop == "local":
        units = nr.units()
        _require(a not in units, "element is a unit")
        if w["detail"].startswith("two"):
            _require(b not in units and r.add(a, b) in units, "bad local witness")
        else:
            _require(nr.table[a, b] in units or nr.table[b, a] in units, "bad local witness")
        return True
    if prop == "domain":
        _require(a != 0 and b != 0 and nr.table[a, b] == 0, "bad domain witness")
        return True
    raise ReplayError(f"no replay rule for ring property {prop!r}")


def replay(structure, verdict):
    """Re-validate a failure verdict against ``structure`` (a ring or module).

    Returns True when the violation reproduces; raises ReplayError otherwise.
    Certificates (holding verdicts) are not replayed and return True.
    """
    if not isinstance(verdict, Verdict):
        verdict = Verdict.from_json(verdict)
    if verdict.holds:
        return True
    w = verdict.witness
    _require(w.get("kind") == "failure", "witness kind mismatch")
    if hasattr(structure, "action"):
        return _replay_module(structure, verdict.property, w)
    return _replay_ring(structure, verdict.property, w)


def replays(structure, verdict):
    """Boolean form of :func:`replay`."""
    try:
        return replay(structure, verdict)
    except ReplayError:
        return False
