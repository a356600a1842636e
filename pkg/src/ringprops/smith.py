"""Integer Smith normal form and the lattice computations built on it.

Everything here works on plain Python integers (lists of lists), so entry
growth during elimination never overflows.
"""

from dataclasses import dataclass


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(A, ncols=None):
    """Compute ``(D, P, Q, Qinv)`` with ``P @ A @ Q == D``.

    ``P`` and ``Q`` are unimodular and ``Qinv`` is the inverse of ``Q``.
    ``D`` is diagonal with nonnegative entries, each dividing the next.
    ``ncols`` is only needed when ``A`` has no rows.
    """
    D = [[int(x) for x in row] for row in A]
    m = len(D)
    n = len(D[0]) if m else (ncols or 0)
    P = _identity(m)
    Q = _identity(n)
    Qi = _identity(n)

    def swap_rows(i, k):
        D[i], D[k] = D[k], D[i]
        P[i], P[k] = P[k], P[i]

    def add_row(i, k, c):
        # row_i += c * row_k
        Di, Dk = D[i], D[k]
        for j in range(n):
            Di[j] += c * Dk[j]
        Pi, Pk = P[i], P[k]
        for j in range(m):
            Pi[j] += c * Pk[j]

    def swap_cols(j, k):
        for row in D:
            row[j], row[k] = row[k], row[j]
        for row in Q:
            row[j], row[k] = row[k], row[j]
        Qi[j], Qi[k] = Qi[k], Qi[j]

    def add_col(j, k, c):
        # col_j += c * col_k
        for row in D:
            row[j] += c * row[k]
        for row in Q:
            row[j] += c * row[k]
        Qj, Qk = Qi[j], Qi[k]
        for l in range(n):
            Qk[l] -= c * Qj[l]

    for t in range(min(m, n)):
        pivot = None
        best = 0
        for i in range(t, m):
            for j in range(t, n):
                v = abs(D[i][j])
                if v and (pivot is None or v < best):
                    pivot, best = (i, j), v
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            changed = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // D[t][t]))
                    if D[i][t]:
                        swap_rows(t, i)
                        changed = True
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // D[t][t]))
                    if D[t][j]:
                        swap_cols(t, j)
                        changed = True
            if changed:
                continue
            p = D[t][t]
            bad = next((i for i in range(t + 1, m)
                        if any(D[i][j] % p for j in range(t + 1, n))), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            P[t] = [-x for x in P[t]]
    return D, P, Q, Qi


def integer_kernel(B, ncols):
    """Basis (list of vectors) of ``{x in Z^ncols : B x = 0}``."""
    D, _, Q, _ = smith_normal_form(B, ncols)
    rank = sum(1 for i in range(min(len(D), ncols)) if D[i][i])
    return [[Q[r][c] for r in range(ncols)] for c in range(rank, ncols)]


def solve_congruences(C, moduli, nvars):
    """Generators of the lattice ``{t in Z^nvars : C t = 0 (mod moduli)}``.

    Row ``r`` of ``C`` is read modulo ``moduli[r]``.
    """
    if not C:
        return [[int(i == j) for j in range(nvars)] for i in range(nvars)]
    nrows = len(C)
    B = [list(C[r]) + [int(r == s) * moduli[r] for s in range(nrows)]
         for r in range(nrows)]
    return [v[:nvars] for v in integer_kernel(B, nvars + nrows)]


@dataclass
class Presentation:
    """``Z^n / L`` for a full-rank lattice ``L``, as a product of cyclic groups.

    ``orders`` lists the nontrivial invariant factors; ``coords`` maps an
    integer vector to its coordinates and ``lift`` maps coordinates back to a
    representative vector.
    """

    n: int
    orders: tuple
    slots: tuple
    Q: list
    Qinv: list

    def coords(self, x):
        out = []
        for slot, d in zip(self.slots, self.orders):
            out.append(sum(x[r] * self.Q[r][slot] for r in range(self.n)) % d)
        return tuple(out)

    def lift(self, y):
        vec = [0] * self.n
        for c, slot in zip(y, self.slots):
            if c:
                row = self.Qinv[slot]
                for j in range(self.n):
                    vec[j] += c * row[j]
        return vec


def quotient_presentation(relations, n):
    """Present ``Z^n`` modulo the row span of ``relations`` (which must have rank ``n``)."""
    D, _, Q, Qi = smith_normal_form(relations, n)
    diag = [D[i][i] if i < len(D) else 0 for i in range(n)]
    if any(d == 0 for d in diag):
        raise ValueError("relation lattice does not have full rank")
    slots = tuple(i for i, d in enumerate(diag) if d != 1)
    return Presentation(n, tuple(diag[i] for i in slots), slots, Q, Qi)


def subgroup_presentation(gens, moduli):
    """Present the subgroup of ``prod Z_{moduli}`` spanned by ``gens``.

    Returns ``(orders, basis)`` where ``basis[i]`` is a vector of the ambient
    group of order ``orders[i]`` and the subgroup is their internal direct sum.
    """
    k = len(moduli)
    r = len(gens)
    if r == 0:
        return (), []
    # (c, y) with sum c_i g_i + sum y_j d_j e_j = 0, one equation per ambient slot
    B = [[gens[i][j] for i in range(r)] + [int(j == l) * moduli[j] for l in range(k)]
         for j in range(k)]
    relations = [v[:r] for v in integer_kernel(B, r + k)]
    pres = quotient_presentation(relations, r)
    basis = []
    for slot in pres.slots:
        coeffs = pres.Qinv[slot]
        basis.append(tuple(sum(coeffs[i] * gens[i][j] for i in range(r)) % moduli[j]
                           for j in range(k)))
    return pres.orders, basis
