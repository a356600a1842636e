"""Deterministic corpus of finite rings and modules."""

from dataclasses import asdict, dataclass, field, fields

from ..errors import DEFAULT_SIZE_CAP, SizeCapExceeded, check_cap
from ..finmod import free_module, regular_module, z_module
from ..finring import direct_product, make_cyclic_ring, matrix_ring, quotient_ring, triangular_ring
from ..homcalc import end_ring

NAMED_RINGS = ("T2(Z2)", "T2(Z3)", "M2(Z2)", "Z2xZ2", "Z2xZ4")


@dataclass
class CorpusSpec:
    """Which families to generate, and the caps applied to every entry.

    ``z_cyclic_max``: z_module(d) for 1 <= d <= max; ``z_pair_max``: z_module(d1, d2)
    for 2 <= d1 <= d2 <= max; ``regular_cyclic_max``: regular modules of Z_n;
    ``named_rings``: regular modules of the rings in NAMED_RINGS; ``quotients``:
    regular modules of their proper nonzero quotients; ``free_ring_max``: R^2
    for corpus rings with |R| <= max. A zero value disables a family.
    """

    z_cyclic_max: int = 12
    z_pair_max: int = 6
    regular_cyclic_max: int = 12
    named_rings: tuple = NAMED_RINGS
    quotients: bool = True
    free_ring_max: int = 4
    max_ring_order: int = DEFAULT_SIZE_CAP
    max_module_order: int = DEFAULT_SIZE_CAP
    max_end_order: int = DEFAULT_SIZE_CAP
    seed: int = 0   # no family is sampled at random; kept for reproducible extensions

    @classmethod
    def empty(cls):
        return cls(z_cyclic_max=0, z_pair_max=0, regular_cyclic_max=0, named_rings=(),
                   quotients=False, free_ring_max=0)

    @classmethod
    def with_cap(cls, cap):
        return cls(max_ring_order=cap, max_module_order=cap, max_end_order=cap)

    @classmethod
    def from_json(cls, data):
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown corpus spec fields {sorted(unknown)}")
        data = dict(data)
        if "named_rings" in data:
            data["named_rings"] = tuple(data["named_rings"])
        return cls(**data)

    def to_json(self):
        d = asdict(self)
        d["named_rings"] = list(self.named_rings)
        return d


@dataclass
class CorpusEntry:
    name: str
    family: str
    module: object
    ring: object = None

    def __post_init__(self):
        if self.ring is None:
            self.ring = self.module.ring

    def __iter__(self):
        """Unpacks as ``(ring, module)``."""
        return iter((self.ring, self.module))

    @property
    def description(self):
        return self.module.description


@dataclass
class Corpus:
    entries: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    spec: CorpusSpec = None

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def by_name(self, name):
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def rings(self):
        """Distinct rings carried by regular-module entries, in corpus order."""
        return [e.ring for e in self.entries if e.family in ("regular", "named", "quotient")]


def named_ring(name, cap=DEFAULT_SIZE_CAP):
    Z = {n: make_cyclic_ring(n, cap=cap) for n in (2, 3, 4)}
    builders = {
        "T2(Z2)": lambda: triangular_ring(Z[2], 2, cap=cap),
        "T2(Z3)": lambda: triangular_ring(Z[3], 2, cap=cap),
        "M2(Z2)": lambda: matrix_ring(Z[2], 2, cap=cap),
        "Z2xZ2": lambda: direct_product(Z[2], Z[2], cap=cap),
        "Z2xZ4": lambda: direct_product(Z[2], Z[4], cap=cap),
    }
    if name not in builders:
        raise KeyError(f"unknown named ring {name!r}")
    return builders[name]()


def proper_quotients(r, cap=DEFAULT_SIZE_CAP):
    from ..annprop.ideals import all_two_sided_ideals

    out = []
    sizes = {}
    for ideal in all_two_sided_ideals(r, cap):
        if 1 < len(ideal) < r.order:
            q = quotient_ring(r, ideal, cap=cap)
            k = sizes[len(ideal)] = sizes.get(len(ideal), 0) + 1
            # distinct names for distinct ideals of the same order
            q.name = f"{r.name}/I{len(ideal)}{'abcdefghijklmnopqrstuvwxyz'[k - 1]}"
            out.append(q)
    return out


class _Builder:
    def __init__(self, spec):
        self.spec = spec
        self.corpus = Corpus(spec=spec)

    def add(self, name, family, build):
        s = self.spec
        try:
            m = build()
            check_cap(f"ring of {name}", m.ring.order, s.max_ring_order)
            check_cap(name, m.order, s.max_module_order)
            end_ring(m, cap=s.max_end_order)
        except SizeCapExceeded as e:
            self.corpus.skipped.append({"name": name, "family": family, "reason": str(e)})
            return None
        entry = CorpusEntry(name, family, m)
        self.corpus.entries.append(entry)
        return entry


def generate_corpus(spec=None):
    """The corpus for ``spec`` (default: ``CorpusSpec()``); cap-skips are recorded."""
    spec = spec or CorpusSpec()
    b = _Builder(spec)
    cap = max(spec.max_ring_order, spec.max_module_order)
    for d in range(1, spec.z_cyclic_max + 1):
        b.add(f"Z({d})", "z_module", lambda d=d: z_module([d], cap=cap))
    for d1 in range(2, spec.z_pair_max + 1):
        for d2 in range(d1, spec.z_pair_max + 1):
            b.add(f"Z({d1},{d2})", "z_module", lambda d1=d1, d2=d2: z_module([d1, d2], cap=cap))
    rings = []
    for n in range(1, spec.regular_cyclic_max + 1):
        e = b.add(f"Z{n}_R", "regular", lambda n=n: regular_module(make_cyclic_ring(n, cap=cap),
                                                                   cap=cap))
        if e:
            rings.append(e.ring)
    named = []
    for name in spec.named_rings:
        e = b.add(f"{name}_R", "named", lambda name=name: regular_module(named_ring(name, cap),
                                                                         cap=cap))
        if e:
            named.append(e.ring)
            rings.append(e.ring)
    if spec.quotients:
        for r in named:
            try:
                qs = proper_quotients(r, cap)
            except SizeCapExceeded as exc:
                b.corpus.skipped.append({"name": f"quotients of {r.name}", "family": "quotient",
                                         "reason": str(exc)})
                continue
            for q in qs:
                e = b.add(f"{q.name}_R", "quotient", lambda q=q: regular_module(q, cap=cap))
                if e:
                    rings.append(e.ring)
    if spec.free_ring_max:
        for r in rings:
            if 1 < r.order <= spec.free_ring_max:
                b.add(f"{r.name}^2", "free", lambda r=r: free_module(r, 2, cap=cap))
    return b.corpus


def corpus_from_descriptions(descriptions, cap=DEFAULT_SIZE_CAP):
    """A corpus from JSON structure descriptions; rings enter as their regular modules."""
    from ..finring import FiniteRing
    from ..io import structure_from_description

    c = Corpus(spec=None)
    for i, d in enumerate(descriptions):
        try:
            s = structure_from_description(d, cap)
            if isinstance(s, FiniteRing):
                m, family = regular_module(s, cap=cap), "regular"
            else:
                m = s
                family = {"regular": "regular", "z_module": "z_module"}.get(d["kind"], "module")
            end_ring(m, cap=cap)
        except SizeCapExceeded as e:
            c.skipped.append({"name": f"#{i}", "family": d.get("kind"), "reason": str(e)})
            continue
        name = m.name if m.name not in {e.name for e in c.entries} else f"{m.name}#{i}"
        c.entries.append(CorpusEntry(name, family, m))
    return c
