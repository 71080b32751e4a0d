"""Finite topological spaces.

Every finite topology is Alexandrov: each point ``p`` has a smallest open
neighbourhood ``M_p``.  A :class:`FiniteSpace` stores exactly these sets
(equivalently, the specialization preorder) and derives everything else from
them.  A set ``W`` is open iff ``M_p`` is inside ``W`` for every ``p`` in
``W``.
"""
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import NamedTuple

from .decision import CoverWitness, Decision
from .errors import EmptySpace, NotATopology
from .pointset import fmt, full, mask, members, subset

# materialize open families only below this size
MAX_OPEN_ENUMERATION = 20


@dataclass(frozen=True)
class FiniteSpace:
    min_nbhd: tuple

    def __post_init__(self):
        m = tuple(int(s) for s in self.min_nbhd)
        object.__setattr__(self, "min_nbhd", m)
        n = len(m)
        if n == 0:
            raise EmptySpace("a space needs at least one point")
        for p, mp in enumerate(m):
            if mp >> n:
                raise NotATopology(f"M_{p} = {fmt(mp)} leaves the point range")
            if not mp >> p & 1:
                raise NotATopology(f"point {p} is not in its own neighbourhood")
            for q in members(mp):
                if not subset(m[q], mp):
                    raise NotATopology(
                        f"{q} in M_{p} but M_{q} = {fmt(m[q])} not inside "
                        f"M_{p} = {fmt(mp)}", pair=(p, q))

    @classmethod
    def from_neighbourhoods(cls, sets):
        return cls(tuple(mask(s) for s in sets))

    @property
    def n(self):
        return len(self.min_nbhd)

    @property
    def points(self):
        return range(len(self.min_nbhd))

    @property
    def full(self):
        return full(len(self.min_nbhd))

    @cached_property
    def opens(self):
        """All open sets, ascending by mask value (includes 0 and X)."""
        if self.n > MAX_OPEN_ENUMERATION:
            raise ValueError(f"refusing to list opens of a {self.n}-point space")
        return tuple(w for w in range(1 << self.n) if is_open(self, w))

    @cached_property
    def nonempty_opens(self):
        return self.opens[1:]

    @property
    def is_discrete(self):
        return all(mp == 1 << p for p, mp in enumerate(self.min_nbhd))

    def __repr__(self):
        body = ", ".join(fmt(m) for m in self.min_nbhd)
        return f"FiniteSpace([{body}])"


def discrete(n):
    return FiniteSpace(tuple(1 << p for p in range(n)))


def indiscrete(n):
    return FiniteSpace((full(n),) * n)


def is_open(space, s):
    m = space.min_nbhd
    for p in members(s):
        if m[p] & ~s:
            return False
    return True


def space_from_open_family(n, family):
    """Build a space from an explicit list of open sets.

    The family must already contain the empty set and the whole space and be
    closed under pairwise union and intersection.
    """
    if n <= 0:
        raise EmptySpace("a space needs at least one point")
    fam = {mask(s) if not isinstance(s, int) else s for s in family}
    whole = full(n)
    for s in fam:
        if s >> n:
            raise NotATopology(f"{fmt(s)} leaves the point range")
    if 0 not in fam:
        raise NotATopology("empty set missing")
    if whole not in fam:
        raise NotATopology("whole space missing")
    ordered = sorted(fam)
    for a, b in combinations(ordered, 2):
        if a | b not in fam:
            raise NotATopology(f"union of {fmt(a)} and {fmt(b)} missing", pair=(a, b))
        if a & b not in fam:
            raise NotATopology(
                f"intersection of {fmt(a)} and {fmt(b)} missing", pair=(a, b))
    nbhd = []
    for p in range(n):
        m = whole
        for s in ordered:
            if s >> p & 1:
                m &= s
        nbhd.append(m)
    return FiniteSpace(tuple(nbhd))


def close_family(family):
    """Close a family of masks under pairwise union and intersection."""
    fam = set(family)
    frontier = list(fam)
    while frontier:
        new = []
        for a in frontier:
            for b in list(fam):
                for c in (a | b, a & b):
                    if c not in fam:
                        fam.add(c)
                        new.append(c)
        frontier = new
    return fam


class SeparationAxioms(NamedTuple):
    t0: bool
    t1: bool
    hausdorff: bool


def separation_axioms(space):
    m = space.min_nbhd
    n = space.n
    t0 = len(set(m)) == n
    t1 = all(mp == 1 << p for p, mp in enumerate(m))
    # minimal neighbourhoods are the best candidates for separating opens
    hausdorff = all(m[p] & m[q] == 0 for p in range(n) for q in range(p + 1, n))
    assert hausdorff == t1, "finite Hausdorff and T1 must coincide"
    return SeparationAxioms(t0, t1, hausdorff)


def closure(space, s):
    return mask(p for p, mp in enumerate(space.min_nbhd) if mp & s)


def is_closed(space, s):
    return closure(space, s) == s


def complement(space, s):
    return space.full & ~s


def subspace(space, carrier):
    """Trace topology on ``carrier``, re-indexed densely in increasing point
    order (see :attr:`SubspacePair.index`)."""
    return SubspacePair(space, carrier).space


@dataclass(frozen=True)
class SubspacePair:
    ambient: FiniteSpace
    carrier: int

    def __post_init__(self):
        if self.carrier == 0:
            raise EmptySpace("empty subspace")
        if self.carrier >> self.ambient.n:
            raise ValueError(f"carrier {fmt(self.carrier)} leaves the point range")

    @cached_property
    def index(self):
        """``index[i]`` is the ambient point behind subspace point ``i``."""
        return tuple(members(self.carrier))

    @cached_property
    def position(self):
        return {p: i for i, p in enumerate(self.index)}

    @cached_property
    def space(self):
        return FiniteSpace(tuple(
            self.to_sub(self.ambient.min_nbhd[p]) for p in self.index))

    def to_sub(self, s):
        """Ambient mask -> subspace mask (points outside the carrier dropped)."""
        pos = self.position
        return mask(pos[p] for p in members(s & self.carrier))

    def to_ambient(self, s):
        return mask(self.index[i] for i in members(s))


def largest_extension(sub, u):
    """Largest open set of the ambient space whose trace on the carrier is
    ``u`` (a subspace mask)."""
    target = sub.to_ambient(u)
    return mask(p for p, mp in enumerate(sub.ambient.min_nbhd)
                if subset(mp & sub.carrier, target))


def irredundant_covers(space, max_size=None):
    """Open covers of ``space`` from which no element can be removed.

    Every element of such a cover owns a point no other element contains, so
    the size never exceeds the point count.
    """
    opens = space.nonempty_opens
    whole = space.full
    limit = space.n if max_size is None else min(max_size, space.n)

    def dfs(start, chosen, union):
        if union == whole:
            if _irredundant(chosen):
                yield tuple(chosen)
            return
        if len(chosen) == limit:
            return
        for i in range(start, len(opens)):
            w = opens[i]
            if subset(w, union):
                continue
            chosen.append(w)
            yield from dfs(i + 1, chosen, union | w)
            chosen.pop()

    yield from dfs(0, [], 0)


def _irredundant(sets):
    for i in range(len(sets)):
        rest = 0
        for j, s in enumerate(sets):
            if j != i:
                rest |= s
        if subset(sets[i], rest):
            return False
    return True


def is_extension_closed(sub, all_covers=False):
    """Decide whether every open cover of the subspace extends, index by
    index, to an open cover of the ambient space.

    For each cover it suffices to extend every element maximally; the cover
    extends iff those maximal extensions cover the ambient space.  Only
    irredundant covers are examined unless ``all_covers`` is set (dropping a
    redundant element and extending it by its largest extension afterwards
    never hurts).  A *no* carries the offending cover as ambient masks.
    """
    ysp = sub.space
    if all_covers:
        covers = (c for k in range(1, len(ysp.nonempty_opens) + 1)
                  for c in combinations(ysp.nonempty_opens, k)
                  if _union(c) == ysp.full)
    else:
        covers = irredundant_covers(ysp)
    whole = sub.ambient.full
    for cover in covers:
        if _union(largest_extension(sub, u) for u in cover) != whole:
            return Decision(False, CoverWitness(tuple(sub.to_ambient(u) for u in cover)))
    return Decision(True)


def extension_exists(sub, cover):
    """Brute-force search for an extension of one subspace cover: try every
    combination of candidate ambient opens with the required traces."""
    amb = sub.ambient
    candidates = [[v for v in amb.opens if sub.to_sub(v) == u] for u in cover]

    def search(i, union):
        if i == len(candidates):
            return union == amb.full
        return any(search(i + 1, union | v) for v in candidates[i])

    return search(0, 0)


def _union(sets):
    u = 0
    for s in sets:
        u |= s
    return u


@dataclass(frozen=True)
class Quotient:
    space: FiniteSpace
    homeo: object
    projection: tuple  # point -> class index

    def __iter__(self):
        return iter((self.space, self.homeo))

    def image(self, s):
        return mask(self.projection[p] for p in members(s))


def t0_quotient(space, f=None):
    """Identify topologically indistinguishable points.

    Classes are the fibres of ``p -> M_p``, numbered by their least point.
    Returns a :class:`Quotient`; unpacking it gives ``(space, homeo)``.
    """
    from .dynamics import Homeo, identity

    if f is None:
        f = identity(space)
    reps = {}
    projection = []
    for p, mp in enumerate(space.min_nbhd):
        projection.append(reps.setdefault(mp, len(reps)))
    projection = tuple(projection)
    nbhd = [0] * len(reps)
    for mp, c in reps.items():
        nbhd[c] = mask(projection[q] for q in members(mp))
    qspace = FiniteSpace(tuple(nbhd))
    rep_point = {}
    for p, c in enumerate(projection):
        rep_point.setdefault(c, p)
    perm = tuple(projection[f.perm[rep_point[c]]] for c in range(len(reps)))
    return Quotient(qspace, Homeo(qspace, perm), projection)
