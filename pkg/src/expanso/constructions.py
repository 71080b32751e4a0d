"""Example systems, the duplication construction, and exhaustive generators."""
from dataclasses import dataclass
from itertools import combinations, permutations

from .dynamics import Cover, Homeo, identity
from .errors import NotClosed, NotInvariant, ScaleCap
from .pointset import fmt, full, mask, members, subset
from .topology import FiniteSpace, close_family, is_closed, space_from_open_family

MAX_ENUMERATION_POINTS = 5


def chain_space(m):
    """Upper-set topology on the chain ``0 < 1 < ... < m-1`` with the identity
    map: ``M_p = {p, ..., m-1}``."""
    if m < 1:
        raise ValueError("m must be at least 1")
    space = FiniteSpace(tuple(full(m) & ~full(p) for p in range(m)))
    return space, identity(space)


def indiscrete_example(m, perm=None):
    if m < 1:
        raise ValueError("m must be at least 1")
    space = FiniteSpace((full(m),) * m)
    return space, Homeo(space, tuple(range(m)) if perm is None else tuple(perm))


def discrete_example(m, perm=None):
    space = FiniteSpace(tuple(1 << p for p in range(m)))
    return space, Homeo(space, tuple(range(m)) if perm is None else tuple(perm))


@dataclass(frozen=True)
class Duplication:
    base_space: FiniteSpace
    base_map: Homeo
    k_set: int
    space: FiniteSpace
    homeo: Homeo
    copy_map: tuple  # ((k, copy of k), ...) in increasing k

    def copy(self, s):
        """Copies of the points of ``s & K``."""
        d = dict(self.copy_map)
        return mask(d[k] for k in members(s & self.k_set))


def duplicate(space, f, k_set):
    """Add a copy of the closed invariant set ``K``.

    The new opens are the old ones, ``W | copy(W & K)`` and
    ``(W - K) | copy(W & K)`` for every old open ``W``; the family is closed
    under union and intersection and then validated as a topology.  The new
    map acts on copies as ``f`` acts on the originals.
    """
    if f.space != space:
        raise ValueError("map belongs to a different space")
    if not is_closed(space, k_set):
        raise NotClosed(f"{fmt(k_set)} is not closed")
    if f.image(k_set) != k_set:
        raise NotInvariant(f"{fmt(k_set)} is not invariant")
    n = space.n
    ks = members(k_set)
    copy_of = {k: n + i for i, k in enumerate(ks)}

    def cp(s):
        return mask(copy_of[k] for k in members(s & k_set))

    family = set()
    for w in space.opens:
        family.add(w)
        family.add(w | cp(w))
        family.add((w & ~k_set) | cp(w))
    family = close_family(family)
    new_space = space_from_open_family(n + len(ks), family)
    perm = list(f.perm) + [0] * len(ks)
    for k in ks:
        perm[copy_of[k]] = copy_of[f.perm[k]]
    return Duplication(space, f, k_set, new_space, Homeo(new_space, tuple(perm)),
                       tuple(copy_of.items()))


def duplicated_cover(dup, cover):
    """The old elements plus ``(U - K) | copy(U & K)`` for each element,
    duplicates removed, order kept."""
    sets = []
    for u in list(cover) + [(u & ~dup.k_set) | dup.copy(u) for u in cover]:
        if u not in sets:
            sets.append(u)
    return Cover(dup.space, tuple(sets))


def closed_invariant_sets(f):
    """All closed invariant sets, the empty set included."""
    space = f.space
    cycles = [mask(c) for c in f.cycles]
    out = []
    for k in range(len(cycles) + 1):
        for combo in combinations(cycles, k):
            s = 0
            for c in combo:
                s |= c
            if is_closed(space, s):
                out.append(s)
    return out


def enumerate_spaces(n):
    """All labeled topologies on exactly ``n`` points, as preorders.

    Backtracks over the minimal neighbourhoods point by point, keeping
    ``q in M_p => M_q <= M_p`` among the points assigned so far.
    """
    if n > MAX_ENUMERATION_POINTS:
        raise ScaleCap(f"enumeration capped at {MAX_ENUMERATION_POINTS} points")
    if n < 1:
        return
    others = [[s for s in range(1 << n) if s >> p & 1] for p in range(n)]
    nbhd = [0] * n

    def consistent(p):
        mp = nbhd[p]
        for q in range(p):
            mq = nbhd[q]
            if mp >> q & 1 and not subset(mq, mp):
                return False
            if mq >> p & 1 and not subset(mp, mq):
                return False
        return True

    def rec(p):
        if p == n:
            yield FiniteSpace(tuple(nbhd))
            return
        for s in others[p]:
            nbhd[p] = s
            if consistent(p):
                yield from rec(p + 1)

    yield from rec(0)


def enumerate_spaces_upto(max_points):
    for n in range(1, max_points + 1):
        yield from enumerate_spaces(n)


def enumerate_homeos(space):
    for perm in permutations(range(space.n)):
        m = space.min_nbhd
        if all(_image(perm, m[p]) == m[perm[p]] for p in range(space.n)):
            yield Homeo(space, perm)


def _image(perm, s):
    return mask(perm[p] for p in members(s))


def enumerate_covers(space, max_size=3):
    """Open covers made of at most ``max_size`` distinct nonempty opens."""
    opens = space.nonempty_opens
    whole = space.full
    for k in range(1, max_size + 1):
        for c in combinations(opens, k):
            u = 0
            for s in c:
                u |= s
            if u == whole:
                yield Cover(space, c)
