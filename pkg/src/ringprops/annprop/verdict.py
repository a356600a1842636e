"""Verdicts and their JSON-ready witnesses.

Witnesses only hold plain data (coordinate lists, hom matrices), so that a
serialized verdict can be replayed against a freshly built structure.
"""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Verdict:
    property: str
    holds: bool
    witness: dict = field(default_factory=dict)
    subject: str = ""

    def __bool__(self):
        return self.holds

    def to_json(self):
        return {"property": self.property, "holds": self.holds, "witness": self.witness,
                "subject": self.subject}

    @classmethod
    def from_json(cls, data):
        return cls(data["property"], bool(data["holds"]), data["witness"], data.get("subject", ""))


def _witness(kind, **extra):
    w = {"kind": kind, "submodule": [], "endomorphism": None, "units": {}}
    w.update({k: v for k, v in extra.items() if v is not None})
    return w


def ring_coords(r, x):
    return list(r.coords(int(x)))


def ring_failure(prop, r, ideal=None, element=None, candidates=None, **extra):
    w = _witness("failure", **extra)
    if ideal is not None:
        w["ideal"] = [ring_coords(r, x) for x in sorted(ideal.elements)]
    if element is not None:
        w["element"] = ring_coords(r, element)
    if candidates is not None:
        w["candidates"] = [ring_coords(r, x) for x in candidates]
    return Verdict(prop, False, w, r.name)


def ring_certificate(prop, r, ideal=None, units=None, **extra):
    w = _witness("certificate", **extra)
    if ideal is not None:
        w["ideal"] = [ring_coords(r, x) for x in sorted(ideal.elements)]
    if units:
        w["units"] = {k: ring_coords(r, v) for k, v in units.items()}
    return Verdict(prop, True, w, r.name)


class ModuleWitness:
    """Encodes module elements, submodules and endomorphisms for a verdict."""

    def __init__(self, m, s):
        self.m = m
        self.s = s

    def elem(self, x):
        return list(self.m.coords(int(x)))

    def sub(self, elements):
        return [self.elem(x) for x in sorted(elements)]

    def hom(self, f):
        return self.s.matrices[int(f)].tolist()

    def failure(self, prop, submodule=None, endomorphism=None, **extra):
        w = _witness("failure", **extra)
        if submodule is not None:
            w["submodule"] = self.sub(submodule)
        if endomorphism is not None:
            w["endomorphism"] = self.hom(endomorphism)
        return Verdict(prop, False, w, self.m.name)

    def certificate(self, prop, units=None, **extra):
        w = _witness("certificate", **extra)
        if units:
            w["units"] = units
        return Verdict(prop, True, w, self.m.name)
