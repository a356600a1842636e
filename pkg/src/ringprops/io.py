"""JSON ring and module descriptions.

Ring descriptions are recursive objects with ``kind`` one of ``cyclic`` (``n``),
``matrix`` / ``triangular`` (``base``, ``k``), ``product`` (``factors``, two or
more) and ``quotient`` (``base``, ``ideal_generators``: coordinate lists that
generate a two-sided ideal). Module descriptions carry ``ring`` plus ``kind``
one of ``regular``, ``free`` (``n``), ``z_module`` (``orders``, optional
``exponent``; ``ring`` may be omitted) and ``direct_sum`` (``summands``).
"""

import json
from math import lcm

from .errors import DEFAULT_SIZE_CAP, MalformedDescription
from .finmod import direct_sum, free_module, regular_module, z_module
from .finring import (direct_product, make_cyclic_ring, matrix_ring, quotient_ring,
                      triangular_ring)

RING_KINDS = ("cyclic", "matrix", "triangular", "product", "quotient")
MODULE_KINDS = ("regular", "free", "z_module", "direct_sum")


def _field(d, key, kind=None):
    if key not in d:
        raise MalformedDescription(f"description of kind {d.get('kind')!r} lacks {key!r}")
    value = d[key]
    if kind is int and (not isinstance(value, int) or isinstance(value, bool) or value < 1):
        raise MalformedDescription(f"{key!r} must be a positive integer, got {value!r}")
    if kind is list and not isinstance(value, list):
        raise MalformedDescription(f"{key!r} must be a list")
    return value


def ring_from_description(d, cap=DEFAULT_SIZE_CAP):
    if not isinstance(d, dict):
        raise MalformedDescription("ring description must be an object")
    kind = d.get("kind")
    if kind == "cyclic":
        return make_cyclic_ring(_field(d, "n", int), cap=cap)
    if kind in ("matrix", "triangular"):
        base = ring_from_description(_field(d, "base"), cap)
        build = matrix_ring if kind == "matrix" else triangular_ring
        return build(base, _field(d, "k", int), cap=cap)
    if kind == "product":
        factors = _field(d, "factors", list)
        if len(factors) < 2:
            raise MalformedDescription("a product needs at least two factors")
        out = ring_from_description(factors[0], cap)
        for f in factors[1:]:
            out = direct_product(out, ring_from_description(f, cap), cap=cap)
        return out
    if kind == "quotient":
        from .annprop.ideals import ideal_generated

        base = ring_from_description(_field(d, "base"), cap)
        gens = []
        for c in _field(d, "ideal_generators", list):
            if not isinstance(c, list) or len(c) != base.rank:
                raise MalformedDescription(f"bad ideal generator {c!r} for {base.name}")
            gens.append(base.element(c))
        return quotient_ring(base, ideal_generated(base, gens, cap=cap), cap=cap)
    raise MalformedDescription(f"unknown ring kind {kind!r}")


def module_from_description(d, cap=DEFAULT_SIZE_CAP):
    if not isinstance(d, dict):
        raise MalformedDescription("module description must be an object")
    kind = d.get("kind")
    if kind == "z_module":
        orders = _field(d, "orders", list)
        if not orders or not all(isinstance(x, int) and x >= 1 for x in orders):
            raise MalformedDescription("orders must be a nonempty list of positive integers")
        exponent = d.get("exponent")
        if exponent is None and "ring" in d:
            ring = ring_from_description(d["ring"], cap)
            if ring.description.get("kind") != "cyclic":
                raise MalformedDescription("a z_module ring must be cyclic")
            exponent = ring.order if ring.order != lcm(*orders) else None
        try:
            return z_module(orders, exponent=exponent, cap=cap)
        except ValueError as e:
            raise MalformedDescription(str(e)) from None
    if kind == "direct_sum":
        summands = _field(d, "summands", list)
        if len(summands) < 2:
            raise MalformedDescription("a direct sum needs at least two summands")
        out = module_from_description(summands[0], cap)
        for s in summands[1:]:
            out = direct_sum(out, module_from_description(s, cap), cap=cap)
        return out
    if kind in ("regular", "free"):
        ring = ring_from_description(_field(d, "ring"), cap)
        if kind == "regular":
            return regular_module(ring, cap=cap)
        return free_module(ring, _field(d, "n", int), cap=cap)
    raise MalformedDescription(f"unknown module kind {kind!r}")


def structure_from_description(d, cap=DEFAULT_SIZE_CAP):
    """A ring (for ring kinds) or a module (for module kinds)."""
    if not isinstance(d, dict) or "kind" not in d:
        raise MalformedDescription("a structure description is an object with a 'kind'")
    if d["kind"] in RING_KINDS:
        return ring_from_description(d, cap)
    if d["kind"] in MODULE_KINDS:
        return module_from_description(d, cap)
    raise MalformedDescription(f"unknown structure kind {d['kind']!r}")


def load_structure(path, cap=DEFAULT_SIZE_CAP):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as e:
        raise MalformedDescription(f"{path}: invalid JSON ({e})") from None
    except OSError as e:
        raise MalformedDescription(f"{path}: {e.strerror}") from None
    return structure_from_description(data, cap)


def is_module(structure):
    return hasattr(structure, "action")
