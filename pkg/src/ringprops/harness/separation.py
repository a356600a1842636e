"""Counterexample search: a corpus structure with property ``a`` but not ``b``."""

from dataclasses import dataclass

from ..annprop.module_props import MODULE_PROPERTIES, check_module_property
from ..annprop.replay import replays
from ..annprop.ring_props import RING_PROPERTIES, check_ring_property
from ..errors import DEFAULT_SIZE_CAP, SizeCapExceeded


@dataclass
class Separation:
    entry: object          # the CorpusEntry
    level: str             # "module" | "ring"
    holds: object          # Verdict for a (holds)
    fails: object          # Verdict for b (fails, with a replayable witness)

    @property
    def structure(self):
        return self.entry.module if self.level == "module" else self.entry.ring

    def replay(self):
        """Re-validate the failure witness for ``b`` through the independent path."""
        return replays(self.structure, self.fails)

    def to_json(self):
        return {"structure": self.entry.name, "level": self.level,
                "description": self.structure.description,
                "holds": self.holds.to_json(), "fails": self.fails.to_json()}


def _parse(prop):
    """``ring:<id>`` / ``module:<id>`` force a level; bare ids are resolved by the caller."""
    if ":" in prop:
        level, name = prop.split(":", 1)
        if level not in ("ring", "module"):
            raise ValueError(f"unknown level in {prop!r}")
        return level, name
    return None, prop


def resolve_level(a, b):
    (la, a), (lb, b) = _parse(a), _parse(b)
    forced = {x for x in (la, lb) if x}
    if len(forced) > 1:
        raise ValueError("both properties must live at the same level")
    if forced:
        level = forced.pop()
    elif a in MODULE_PROPERTIES and b in MODULE_PROPERTIES:
        level = "module"
    else:
        level = "ring"
    known = MODULE_PROPERTIES if level == "module" else RING_PROPERTIES
    for p in (a, b):
        if p not in known:
            raise ValueError(f"{p!r} is not a {level} property")
    return level, a, b


def find_separation(a, b, corpus, cap=DEFAULT_SIZE_CAP):
    """First corpus structure (in corpus order) satisfying ``a`` but not ``b``, or None.

    Module-level when both ids are module properties, otherwise ring-level over the
    rings of the regular-module entries (where ``centrally_aip`` of R is the
    regular-module reading of Def. 2.1). Absence means no finite witness in this
    corpus, not a theorem.
    """
    level, a, b = resolve_level(a, b)
    seen = set()
    for e in corpus:
        if level == "ring":
            if e.family not in ("regular", "named", "quotient") or id(e.ring) in seen:
                continue
            seen.add(id(e.ring))
            check = lambda p: check_ring_property(e.ring, p, cap=cap)  # noqa: E731
        else:
            check = lambda p: check_module_property(e.module, p, cap)  # noqa: E731
        try:
            va = check(a)
            if not va.holds:
                continue
            vb = check(b)
        except SizeCapExceeded:
            continue
        if not vb.holds:
            return Separation(e, level, va, vb)
    return None
