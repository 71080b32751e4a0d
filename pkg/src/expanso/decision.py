"""Verdicts with certificates.

A :class:`Decision` is truthy iff its verdict is *yes*.  The certificate
types below are plain records; the checkers that re-verify them live next to
the procedures that emit them (:mod:`expanso.dynamics`, :mod:`expanso.sft`).
"""
from dataclasses import dataclass
from typing import Any, Optional


@dataclass(frozen=True)
class WitnessPair:
    """Distinct points ``x``, ``y`` whose pair orbit (of length ``period``)
    stays inside a single cover element at every time."""
    x: int
    y: int
    period: int


@dataclass(frozen=True)
class UniformRadius:
    """Window radius at which every window refines the target."""
    radius: int


@dataclass(frozen=True)
class FamilyCycle:
    """Window families ``states[i] = (N mod order, family)`` from ``N = 0`` up
    to the first repeated state; ``states[-1] == states[start]``.  No family
    in the list refines the target."""
    states: tuple
    start: int


@dataclass(frozen=True)
class SmallnessWitness:
    """``points[s] = p`` asserts ``s`` lies inside the minimal neighbourhood
    of ``p``."""
    points: tuple  # of (set mask, point) pairs

    def as_dict(self):
        return dict(self.points)


@dataclass(frozen=True)
class CoverWitness:
    """An open cover of a subspace (ambient masks restricted to the carrier)
    that admits no extension to the ambient space."""
    elements: tuple


@dataclass(frozen=True)
class SequenceWitness:
    """A periodic index sequence (one period) found by an oracle."""
    indices: tuple
    note: str = ""


@dataclass(frozen=True)
class ShiftWitness:
    """A bi-infinite path ``left^inf . middle . right^inf`` in a symbol or
    pair graph.  Nodes are symbols or ``(a, b)`` pairs."""
    left: tuple
    middle: tuple
    right: tuple

    @property
    def periodic(self):
        return not self.middle and self.left == self.right

    def nodes(self):
        return self.left + self.middle + self.right


@dataclass(frozen=True)
class Decision:
    verdict: bool
    certificate: Optional[Any] = None

    def __bool__(self):
        return self.verdict

    @property
    def radius(self):
        if isinstance(self.certificate, UniformRadius):
            return self.certificate.radius
        return None


@dataclass(frozen=True)
class CopyPairWitness:
    """A shift point ``x`` (given as a symbol path) that is never separated
    from the added copy of the fixed point."""
    point: ShiftWitness


def _node(v):
    return list(v) if isinstance(v, tuple) else v


def certificate_doc(cert):
    """JSON-ready form of a certificate (point sets as sorted lists)."""
    from .pointset import members

    if cert is None:
        return None
    if isinstance(cert, WitnessPair):
        return {"kind": "witness_pair", "x": cert.x, "y": cert.y, "period": cert.period}
    if isinstance(cert, UniformRadius):
        return {"kind": "uniform_radius", "radius": cert.radius}
    if isinstance(cert, FamilyCycle):
        return {"kind": "family_cycle", "start": cert.start,
                "states": [{"phase": ph, "family": [members(s) for s in fam]}
                           for ph, fam in cert.states]}
    if isinstance(cert, SmallnessWitness):
        return {"kind": "smallness", "points": [
            {"set": members(s), "point": p} for s, p in cert.points]}
    if isinstance(cert, CoverWitness):
        return {"kind": "cover", "elements": [members(s) for s in cert.elements]}
    if isinstance(cert, SequenceWitness):
        return {"kind": "sequence", "indices": list(cert.indices), "note": cert.note}
    if isinstance(cert, ShiftWitness):
        return {"kind": "shift_path", "left": [_node(v) for v in cert.left],
                "middle": [_node(v) for v in cert.middle],
                "right": [_node(v) for v in cert.right], "periodic": cert.periodic}
    if isinstance(cert, CopyPairWitness):
        doc = certificate_doc(cert.point)
        doc["kind"] = "copy_pair"
        return doc
    raise TypeError(f"unknown certificate {cert!r}")


def decision_doc(d):
    return {"verdict": "yes" if d.verdict else "no",
            "certificate": certificate_doc(d.certificate)}
