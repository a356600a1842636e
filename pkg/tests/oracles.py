"""Naive exhaustive-definition oracles, deliberately independent of the optimized paths.

Everything here works on explicit Python sets of element indices and on full
tables; only the module/ring arithmetic (``add``, ``act``, ``mul``) is shared.
"""

from ringprops.homcalc import hom_group_bruteforce


def _closure(m, start, new):
    """Smallest submodule containing ``start | {new}``: close under + and the action."""
    out = set(start) | {new}
    frontier = [new]
    ring = range(m.ring.order)
    while frontier:
        x = frontier.pop()
        cands = [m.act(x, r) for r in ring] + [m.group.add(x, y) for y in list(out)]
        for y in cands:
            if y not in out:
                out.add(y)
                frontier.append(y)
    return frozenset(out)


def naive_submodules(m):
    found = {frozenset([0])}
    queue = [frozenset([0])]
    while queue:
        n = queue.pop()
        for x in range(m.order):
            if x not in n:
                k = _closure(m, n, x)
                if k not in found:
                    found.add(k)
                    queue.append(k)
    return found


def naive_endomorphisms(m):
    """Image vectors of every R-linear map, found by filtering all additive maps."""
    return [tuple(f.images().tolist()) for f in hom_group_bruteforce(m, m, cap=None)]


def naive_fully_invariant(m, subs=None, endos=None):
    subs = naive_submodules(m) if subs is None else subs
    endos = naive_endomorphisms(m) if endos is None else endos
    return {n for n in subs if all(f[x] in n for f in endos for x in n)}


def _independent(m, family):
    size = 1
    total = frozenset([0])
    for n in family:
        size *= len(n)
        for x in n:
            total = _closure(m, total, x) if x not in total else total
    return len(total) == size


def naive_uniform_dimension(m, subs=None):
    """Largest family of nonzero submodules whose sum is direct."""
    subs = sorted(naive_submodules(m) if subs is None else subs, key=sorted)
    nonzero = [n for n in subs if len(n) > 1]
    best = 0

    def search(start, chosen):
        nonlocal best
        best = max(best, len(chosen))
        for i in range(start, len(nonzero)):
            fam = chosen + [nonzero[i]]
            if _independent(m, fam):
                search(i + 1, fam)

    search(0, [])
    return best


def naive_compose(f, g):
    """``f o g`` on image vectors."""
    return tuple(f[g[x]] for x in range(len(g)))


def naive_endo_aip(m, central=False):
    """Def.: for every fully invariant N, each f in l_S(N) has a (central) g in l_S(N)
    with f g = f (and g f = f when central)."""
    endos = naive_endomorphisms(m)
    center = [z for z in endos if all(naive_compose(z, f) == naive_compose(f, z) for f in endos)]
    for n in naive_fully_invariant(m, endos=endos):
        ann = [f for f in endos if all(f[x] == 0 for x in n)]
        cands = [z for z in ann if z in center] if central else ann
        for f in ann:
            if not any(naive_compose(f, g) == f for g in cands):
                return False
    return True


def naive_ring_centrally_aip(r):
    n = r.order
    mul = [[r.mul(a, b) for b in range(n)] for a in range(n)]
    center = [z for z in range(n) if all(mul[z][x] == mul[x][z] for x in range(n))]
    ideals = set()
    for a in range(n):
        # RaR, closed additively
        gens = {mul[mul[x][a]][y] for x in range(n) for y in range(n)}
        span = {0}
        frontier = list(gens)
        while frontier:
            x = frontier.pop()
            if x in span:
                continue
            span |= {r.add(x, y) for y in list(span)}
            frontier.extend(span)
        ideals.add(frozenset(span))
    # all ideals are sums of principal ones
    changed = True
    while changed:
        changed = False
        for a in list(ideals):
            for b in list(ideals):
                s = frozenset(r.add(x, y) for x in a for y in b)
                if s not in ideals:
                    ideals.add(s)
                    changed = True
    ideals.add(frozenset([0]))
    for ideal in ideals:
        ann = [y for y in range(n) if all(mul[y][x] == 0 for x in ideal)]
        cands = [z for z in ann if z in center]
        for a in ann:
            if not any(mul[a][z] == a for z in cands):
                return False
    return True
