"""The theorem registry: each paper result as an executable check over the corpus.

A check maps one corpus entry (or one derived structure) to an ``Outcome``:
the hypothesis was not met, it was met and the conclusion held, it was met
and the conclusion failed (a violation), or the structure was cap-skipped.
"""

import time
from math import lcm
from dataclasses import dataclass, field

from ..annprop.module_props import check_module_property
from ..annprop.ring_props import check_ring_property
from ..errors import DEFAULT_SIZE_CAP, RingMismatch, SizeCapExceeded, check_cap
from ..finmod import direct_sum, free_module, regular_module, submodule_as_module, z_module
from ..finring import matrix_ring
from ..homcalc import end_ring, hom_group, is_monomorphism
from ..lattice import ring_right_uniform_dimension

SEVERITY = "implementation-suspect"


@dataclass
class Outcome:
    structure: str
    status: str                 # "not_met" | "held" | "violation" | "skipped"
    detail: str = ""
    witnesses: dict = field(default_factory=dict)

    def with_witnesses(self, witnesses):
        if self.status == "violation":
            self.witnesses.update(witnesses)
        return self


class Evaluator:
    """Memoized property verdicts, keyed by structure identity."""

    def __init__(self, end_cap=DEFAULT_SIZE_CAP):
        self.end_cap = end_cap
        self._cache = {}
        self.log = []   # (structure, verdict) in evaluation order; keeps structures alive

    def _memo(self, key, obj, fn):
        if key not in self._cache:
            self._cache[key] = fn()
            self.log.append((obj, self._cache[key]))
        return self._cache[key]

    def failures(self):
        """Every failing verdict computed so far, with the structure it refers to."""
        return [(obj, v) for obj, v in self.log if not v.holds]

    def module(self, m, p):
        return self._memo((id(m), "m", p), m, lambda: check_module_property(m, p, self.end_cap))

    def ring(self, r, p):
        return self._memo((id(r), "r", p), r, lambda: check_ring_property(r, p, cap=self.end_cap))

    def end(self, m):
        return end_ring(m, self.end_cap).ring

    def holds(self, m, p):
        return self.module(m, p).holds

    def witnesses(self, m, props, ring=False):
        out = {}
        for p in props:
            v = self.ring(m, p) if ring else self.module(m, p)
            out[p] = v.to_json()
        return out


def _implication(ev, name, hyp, concl, m, props):
    if not hyp:
        return Outcome(name, "not_met")
    if concl:
        return Outcome(name, "held")
    return Outcome(name, "violation", "hypothesis holds but conclusion fails",
                   ev.witnesses(m, props))


def _equivalence(ev, name, hyp, m, props):
    if not hyp:
        return Outcome(name, "not_met")
    values = {p: ev.holds(m, p) for p in props}
    if len(set(values.values())) == 1:
        return Outcome(name, "held")
    return Outcome(name, "violation", f"properties disagree: {values}", ev.witnesses(m, props))


# per-module checks


def hier(ev, e):
    m = e.module
    a = ev.holds(m, "abelian") and ev.holds(m, "rickart")
    b = ev.holds(m, "centrally_endo_aip")
    c = ev.holds(m, "endo_aip")
    if not (a or b):
        return [Outcome(e.name, "not_met")]
    ok = (not a or b) and (not b or c)
    return [_implication(ev, e.name, True, ok, m,
                         ["abelian", "rickart", "centrally_endo_aip", "endo_aip"])]


def rce(ev, e):
    m = e.module
    side = [p for p in ("reduced", "rigid", "abelian", "semicommutative", "symmetric")
            if ev.holds(m, p)]
    hyp = ev.holds(m, "rickart") and bool(side)
    return [_implication(ev, e.name, hyp, ev.holds(m, "centrally_endo_aip"), m,
                         ["rickart", "centrally_endo_aip"] + side)]


def rl(ev, e):
    return [_equivalence(ev, e.name, ev.holds(e.module, "rickart"), e.module,
                         ["abelian", "reduced", "rigid", "semicommutative", "symmetric"])]


def ifp_eq(ev, e):
    return [_equivalence(ev, e.name, ev.holds(e.module, "ifp"), e.module,
                         ["centrally_endo_aip", "endo_aip", "endo_app"])]


def dsum(ev, e):
    m = e.module
    if not ev.holds(m, "centrally_endo_aip"):
        return [Outcome(e.name, "not_met")]
    s = end_ring(m, ev.end_cap)
    out = []
    seen = set()
    for idem in s.ring.idempotents:
        image = frozenset(s.apply_table[idem].tolist())
        if image in seen or len(image) in (1, m.order):
            continue
        seen.add(image)
        name = f"{e.name} summand {sorted(image)}"
        try:
            n, _ = submodule_as_module(m, image, name=f"eM<{e.name}>", cap=ev.end_cap)
            ok = ev.holds(n, "centrally_endo_aip")
        except SizeCapExceeded as exc:
            out.append(Outcome(name, "skipped", str(exc)))
            continue
        out.append(_implication(ev, name, True, ok, n, ["centrally_endo_aip"]))
    return out or [Outcome(e.name, "not_met", "no nonzero proper direct summands")]


def fgz(ev, e):
    if e.family != "z_module":
        return []
    m = e.module
    return [_implication(ev, e.name, ev.holds(m, "centrally_endo_aip"),
                         ev.holds(m, "semisimple"), m, ["centrally_endo_aip", "semisimple"])]


def fgz_converse(ev, e):
    """Exploratory: semisimple z_module => centrally endo-AIP (not asserted by the paper)."""
    if e.family != "z_module":
        return None
    m = e.module
    if ev.holds(m, "semisimple") and not ev.holds(m, "centrally_endo_aip"):
        return {"claim": "FGZ converse", "structure": e.name, "holds": False}
    return None


def copies(ev, e):
    m = e.module
    if not ev.holds(m, "centrally_endo_aip"):
        return [Outcome(e.name, "not_met")]
    s_order = end_ring(m, ev.end_cap).order
    out = []
    for n in (2, 3):
        name = f"{e.name}^{n}"
        try:
            check_cap(f"End({name})", s_order ** (n * n), ev.end_cap)
            check_cap(name, m.order ** n, ev.end_cap)
            big = m
            for _ in range(n - 1):
                big = direct_sum(big, m, cap=ev.end_cap)
            ok = ev.holds(big, "centrally_endo_aip")
        except SizeCapExceeded as exc:
            out.append(Outcome(name, "skipped", str(exc)))
            continue
        out.append(_implication(ev, name, True, ok, big, ["centrally_endo_aip"]))
    return out


def spe_q(ev, e):
    return [_equivalence(ev, e.name, ev.holds(e.module, "semiprime_module"), e.module,
                         ["quasi_baer", "endo_aip", "centrally_endo_aip"])]


def endca(ev, e):
    m = e.module
    hyp = ev.holds(m, "centrally_endo_aip")
    if not hyp:
        return [Outcome(e.name, "not_met")]
    S = ev.end(m)
    return [_implication(ev, e.name, True, ev.ring(S, "centrally_aip").holds, S,
                         []).with_witnesses(ev.witnesses(S, ["centrally_aip"], ring=True))]


def endsp(ev, e):
    m = e.module
    if not ev.holds(m, "centrally_endo_aip"):
        return [Outcome(e.name, "not_met")]
    S = ev.end(m)
    o = _implication(ev, e.name, True, ev.ring(S, "semiprime").holds, S, [])
    return [o.with_witnesses(ev.witnesses(S, ["semiprime"], ring=True))]


def lpqr(ev, e):
    m = e.module
    hyp = ev.holds(m, "locally_pq_retractable")
    if hyp:
        hyp = ev.ring(ev.end(m), "centrally_aip").holds
    return [_implication(ev, e.name, hyp, ev.holds(m, "centrally_endo_aip"), m,
                         ["locally_pq_retractable", "centrally_endo_aip"])]


def udqb(ev, e):
    m = e.module
    if not ev.holds(m, "centrally_endo_aip"):
        return [Outcome(e.name, "not_met")]
    S = ev.end(m)
    o = _implication(ev, e.name, True, ev.ring(S, "quasi_baer").holds, S, [])
    return [o.with_witnesses(ev.witnesses(S, ["quasi_baer"], ring=True))]


def ud1p(ev, e):
    m = e.module
    if not ev.holds(m, "centrally_endo_aip"):
        return [Outcome(e.name, "not_met")]
    S = ev.end(m)
    if ring_right_uniform_dimension(S, ev.end_cap) != 1:
        return [Outcome(e.name, "not_met", "u.dim(S_S) != 1")]
    o = _implication(ev, e.name, True, ev.ring(S, "prime").holds, S, [])
    return [o.with_witnesses(ev.witnesses(S, ["prime"], ring=True))]


def locp(ev, e):
    m = e.module
    if not ev.holds(m, "endo_aip"):
        return [Outcome(e.name, "not_met")]
    S = ev.end(m)
    if not ev.ring(S, "local").holds:
        return [Outcome(e.name, "not_met", "S is not local")]
    o = _implication(ev, e.name, True, ev.ring(S, "prime").holds, S, [])
    return [o.with_witnesses(ev.witnesses(S, ["local", "prime"], ring=True))]


# checks over derived families


def _cross_hom_monos(a, b, cap):
    """``(nonzero_mono, has_mono)`` over Hom(a, b) and Hom(b, a): whether every nonzero
    cross hom is a monomorphism, and whether both directions contain a monomorphism."""
    nonzero_mono, has_mono = True, True
    for x, y in ((a, b), (b, a)):
        homs = hom_group(x, y, cap)
        monos = [is_monomorphism(f) for f in homs]
        nonzero_mono &= all(mono for f, mono in zip(homs, monos) if not f.is_zero())
        has_mono &= any(monos)
    return nonzero_mono, has_mono


def dsum2_pairs(corpus, cap):
    """Pairs (M1, M2) over one ring: cyclic Z-modules over a shared exponent ring, and
    pairs of nonzero direct summands eR of each corpus ring R."""
    pairs = []
    cyclic = sorted({e.module.group.orders[0] for e in corpus
                     if e.family == "z_module" and e.module.rank == 1 and e.module.order > 1})
    for i, d1 in enumerate(cyclic):
        for d2 in cyclic[i:]:
            ex = lcm(d1, d2)
            try:
                check_cap(f"Z{ex}", ex, cap)
                pairs.append((f"Z({d1})+Z({d2}) over Z{ex}",
                              z_module([d1], exponent=ex, cap=cap),
                              z_module([d2], exponent=ex, cap=cap)))
            except SizeCapExceeded:
                continue
    for r in corpus.rings():
        rr = regular_module(r, cap=cap)
        images = {}
        for idem in r.idempotents:
            if idem not in (0, r.one):
                img = frozenset(r.mul_arrays(idem, range(r.order)).tolist())
                images.setdefault(img, idem)
        summands = []
        for img, idem in sorted(images.items(), key=lambda kv: kv[1]):
            label = ",".join(map(str, r.coords(idem)))   # eR, e named by its coordinates
            summands.append(submodule_as_module(rr, img, name=f"e({label}){r.name}", cap=cap)[0])
        for i, a in enumerate(summands):
            for b in summands[i:]:
                pairs.append((f"{a.name}+{b.name}", a, b))
    return pairs


def dsum2(ev, corpus, observations):
    """Prop. P2.17. Read literally, "every phi in Hom(M_i, M_j) is a monomorphism" includes
    the zero map and is never met by nonzero summands. The proof applies the assumption
    to a cross hom beta and cancels it, so the suite reads it as: every nonzero cross hom
    is a monomorphism and each direction has one. Pairs meeting only the weaker reading
    (no existence requirement) are reported as observations."""
    out = []
    weak = []
    for name, a, b in dsum2_pairs(corpus, ev.end_cap):
        try:
            both = ev.holds(a, "centrally_endo_aip") and ev.holds(b, "centrally_endo_aip")
            nonzero_mono, has_mono = _cross_hom_monos(a, b, ev.end_cap) if both else (False,
                                                                                      False)
            if not (both and nonzero_mono):
                out.append(Outcome(name, "not_met"))
                continue
            m = direct_sum(a, b, cap=ev.end_cap)
            ok = ev.holds(m, "centrally_endo_aip")
            if has_mono:
                out.append(_implication(ev, name, True, ok, m, ["centrally_endo_aip"]))
            else:
                out.append(Outcome(name, "not_met", "a cross-hom group has no monomorphism"))
                weak.append({"structure": name, "sum_centrally_endo_aip": ok,
                             "witness": None if ok else
                             ev.module(m, "centrally_endo_aip").to_json()})
        except (SizeCapExceeded, RingMismatch) as exc:
            out.append(Outcome(name, "skipped", str(exc)))
    observations.append({
        "claim": "DSUM2 under the weak reading 'every nonzero cross hom is a monomorphism' "
                 "(no monomorphism required to exist)",
        "tested": len(weak),
        "counterexamples": [w for w in weak if not w["sum_centrally_endo_aip"]],
    })
    return out


def free(ev, corpus):
    out = []
    for r in corpus.rings():
        name = f"{r.name}^2"
        try:
            check_cap(f"End({name})", r.order ** 4, ev.end_cap)
            m = free_module(r, 2, cap=ev.end_cap)
            a = ev.ring(r, "centrally_aip").holds
            b = ev.holds(m, "centrally_endo_aip")
        except SizeCapExceeded as exc:
            out.append(Outcome(name, "skipped", str(exc)))
            continue
        if a == b:
            out.append(Outcome(name, "held"))
        else:
            w = ev.witnesses(m, ["centrally_endo_aip"])
            w.update(ev.witnesses(r, ["centrally_aip"], ring=True))
            out.append(Outcome(name, "violation", f"centrally_aip(R)={a} but "
                               f"centrally_endo_aip(R^2)={b}", w))
    return out


def matrx(ev, corpus):
    out = []
    for r in corpus.rings():
        if r.order > 4:
            continue
        name = f"M2({r.name})"
        if not ev.ring(r, "centrally_aip").holds:
            out.append(Outcome(name, "not_met"))
            continue
        try:
            mr = matrix_ring(r, 2, cap=ev.end_cap)
            ok = ev.ring(mr, "centrally_aip").holds
        except SizeCapExceeded as exc:
            out.append(Outcome(name, "skipped", str(exc)))
            continue
        o = _implication(ev, name, True, ok, mr, [])
        out.append(o.with_witnesses(ev.witnesses(mr, ["centrally_aip"], ring=True)))
    return out


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    paper_ref: str
    shape: str                 # "implication" | "equivalence"
    statement: str
    per_entry: object = None   # fn(evaluator, entry) -> list[Outcome]
    global_fn: object = None   # fn(evaluator, corpus, observations) -> list[Outcome]


REGISTRY = (
    TheoremCheck("HIER", 'Prop. "CEE1.1"', "implication",
                 "(abelian and rickart) => centrally_endo_aip => endo_aip", per_entry=hier),
    TheoremCheck("RCE", 'Cor. "RCE1.1"', "implication",
                 "rickart and one of reduced/rigid/abelian/semicommutative/symmetric => "
                 "centrally_endo_aip", per_entry=rce),
    TheoremCheck("RL", 'Lemma "RL1.1"', "equivalence",
                 "on Rickart modules: abelian <=> reduced <=> rigid <=> semicommutative <=> "
                 "symmetric", per_entry=rl),
    TheoremCheck("IFP-EQ", 'Prop. "IFP1.1"', "equivalence",
                 "on IFP modules: centrally_endo_aip <=> endo_aip <=> endo_app",
                 per_entry=ifp_eq),
    TheoremCheck("DSUM", 'Prop. "DS1.1"', "implication",
                 "every direct summand of a centrally endo-AIP module is centrally endo-AIP",
                 per_entry=dsum),
    TheoremCheck("FGZ", 'Prop. "P2.8"', "implication",
                 "centrally endo-AIP finite Z-module => semisimple", per_entry=fgz),
    TheoremCheck("DSUM2", 'Prop. "P2.17"', "implication",
                 "M1, M2 centrally endo-AIP and every nonzero cross hom mono => M1+M2 "
                 "centrally endo-AIP", global_fn=dsum2),
    TheoremCheck("COPIES", 'Thm. "T2.18"', "implication",
                 "M centrally endo-AIP => M^n centrally endo-AIP (n = 2, 3)", per_entry=copies),
    TheoremCheck("FREE", 'Thm. "Free1.1"', "equivalence",
                 "R centrally AIP <=> R^2 centrally endo-AIP",
                 global_fn=lambda ev, c, obs: free(ev, c)),
    TheoremCheck("MATRX", '§2 Remark after Thm. "Free1.1"', "implication",
                 "R centrally AIP => M_2(R) centrally AIP (|R| <= 4)",
                 global_fn=lambda ev, c, obs: matrx(ev, c)),
    TheoremCheck("ENDCA", 'Prop. "P3.1"', "implication",
                 "M centrally endo-AIP => End(M) centrally AIP", per_entry=endca),
    TheoremCheck("ENDSP", 'Cor. "SP1.1"', "implication",
                 "M centrally endo-AIP => End(M) semiprime", per_entry=endsp),
    TheoremCheck("LPQR", 'Prop. "LPQ1.1"', "implication",
                 "locally_pq_retractable and End(M) centrally AIP => M centrally endo-AIP",
                 per_entry=lpqr),
    TheoremCheck("UDQB", 'Prop. "UD1.1"', "implication",
                 "M centrally endo-AIP => End(M) quasi-Baer", per_entry=udqb),
    TheoremCheck("UD1P", 'Cor. "CP1.1"', "implication",
                 "M centrally endo-AIP and u.dim(S_S) = 1 => S prime", per_entry=ud1p),
    TheoremCheck("LOCP", "local => prime Prop. (§3)", "implication",
                 "M endo-AIP and S local => S prime", per_entry=locp),
    TheoremCheck("SPEQ", "final Prop. (§3)", "equivalence",
                 "on semiprime modules: quasi_baer <=> endo_aip <=> centrally_endo_aip",
                 per_entry=spe_q),
)
THEOREM_IDS = tuple(t.id for t in REGISTRY)
assert len(THEOREM_IDS) == 17


def _tally(check, outcomes, elapsed):
    tested = [o for o in outcomes if o.status != "skipped"]
    return {
        "id": check.id,
        "paper_ref": check.paper_ref,
        "statement": check.statement,
        "tested": len(tested),
        "hypothesis_met": sum(o.status in ("held", "violation") for o in tested),
        "violations": [{"structure": o.structure, "detail": o.detail, "severity": SEVERITY,
                        "witnesses": o.witnesses} for o in outcomes if o.status == "violation"],
        "skipped": [{"structure": o.structure, "reason": o.detail}
                    for o in outcomes if o.status == "skipped"],
    }, elapsed


def run_theorem_suite(corpus, ids=None, end_cap=DEFAULT_SIZE_CAP, evaluator=None):
    """Run the selected checks (default: all 17) and assemble the report.

    Pass an ``Evaluator`` to inspect (e.g. replay) every verdict the run computed.
    """
    ids = list(THEOREM_IDS) if ids is None else list(ids)
    unknown = set(ids) - set(THEOREM_IDS)
    if unknown:
        raise ValueError(f"unknown theorem ids {sorted(unknown)}")
    ev = evaluator or Evaluator(end_cap)
    observations = []
    theorems, timing = [], {}
    start = time.perf_counter()
    for check in REGISTRY:
        if check.id not in ids:
            continue
        t0 = time.perf_counter()
        outcomes = []
        if check.per_entry is not None:
            for e in corpus:
                try:
                    outcomes.extend(check.per_entry(ev, e))
                except SizeCapExceeded as exc:
                    outcomes.append(Outcome(e.name, "skipped", str(exc)))
        else:
            outcomes = check.global_fn(ev, corpus, observations)
        entry, elapsed = _tally(check, outcomes, time.perf_counter() - t0)
        theorems.append(entry)
        timing[check.id] = round(elapsed, 3)
    if "FGZ" in ids:
        found = [o for o in (fgz_converse(ev, e) for e in corpus) if o]
        observations.append({"claim": "FGZ converse: semisimple finite Z-module => centrally "
                                      "endo-AIP (exploratory, not asserted by the paper)",
                             "counterexamples": [o["structure"] for o in found],
                             "tested": sum(e.family == "z_module" for e in corpus)})
    timing["total"] = round(time.perf_counter() - start, 3)
    return {
        "theorems": theorems,
        "observations": observations,
        "corpus": {"size": len(corpus), "entries": [e.name for e in corpus],
                   "skipped": list(getattr(corpus, "skipped", []))},
        "timing": timing,
    }


def report_violations(report):
    return sum(len(t["violations"]) for t in report["theorems"])
