"""Exhaustive property checks over small finite systems and shifts.

Every labeled topology up to ``max_points`` points is visited together with
all of its self-homeomorphisms and its open covers of at most three
elements (a seeded sample of covers on five points).  Each property is a
predicate that returns ``True`` when it holds.  Failures are shrunk greedily
(dropping cover elements, then whole orbits of points) and reported as
instance documents.
"""
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product

import networkx as nx

from . import dynamics as dy
from . import sft as sh
from .constructions import (closed_invariant_sets, duplicate, duplicated_cover,
                            enumerate_covers, enumerate_homeos, enumerate_spaces,
                            MAX_ENUMERATION_POINTS)
from .errors import InvalidCover, ScaleCap
from .instance import finite_doc
from .pointset import members, subset
from .topology import (FiniteSpace, SubspacePair, closure, complement,
                       extension_exists, is_closed, is_extension_closed, is_open,
                       separation_axioms, space_from_open_family, t0_quotient)

SAMPLED_COVERS = 12
RADII_CHECKED = 6


@dataclass
class Failure:
    prop: str
    detail: str
    reproducer: dict

    def as_dict(self):
        return {"property": self.prop, "detail": self.detail,
                "reproducer": self.reproducer}


@dataclass
class SuiteReport:
    max_points: int
    seed: int
    checked: Counter = field(default_factory=Counter)
    failed: Counter = field(default_factory=Counter)
    failures: list = field(default_factory=list)
    findings: list = field(default_factory=list)
    spaces: Counter = field(default_factory=Counter)

    @property
    def ok(self):
        return not self.failures

    def merge(self, other):
        self.checked.update(other.checked)
        self.failed.update(other.failed)
        self.failures.extend(other.failures)
        self.findings.extend(other.findings)
        self.spaces.update(other.spaces)

    def record(self, prop, holds, detail="", reproducer=None, finding=False):
        self.checked[prop] += 1
        if holds:
            return
        entry = Failure(prop, detail, reproducer or {})
        if finding:
            self.findings.append(entry)
        else:
            self.failed[prop] += 1
            self.failures.append(entry)

    def as_dict(self):
        props = sorted(set(self.checked) | set(self.failed))
        return {
            "command": "suite",
            "max_points": self.max_points,
            "seed": self.seed,
            "spaces": {str(k): v for k, v in sorted(self.spaces.items())},
            "properties": {p: {"checked": self.checked[p], "failures": self.failed[p]}
                           for p in props},
            "failures": sorted((f.as_dict() for f in self.failures),
                               key=lambda d: (d["property"], repr(d["reproducer"]))),
            "findings": sorted((f.as_dict() for f in self.findings),
                               key=lambda d: (d["property"], repr(d["reproducer"]))),
            "ok": self.ok,
        }


# --------------------------------------------------------------- shrinking

def _orbit_removals(f):
    for cyc in f.cycles:
        rest = f.space.full
        for p in cyc:
            rest &= ~(1 << p)
        if rest:
            yield rest


def shrink(f, cover, fails):
    """Greedy minimization: drop cover elements or whole orbits while
    ``fails(f, cover)`` stays true."""
    progress = True
    while progress:
        progress = False
        if cover is not None and len(cover) > 1:
            for i in range(len(cover)):
                try:
                    smaller = dy.Cover(f.space, cover.elements[:i] + cover.elements[i + 1:])
                except InvalidCover:
                    continue
                if _still_fails(fails, f, smaller):
                    cover, progress = smaller, True
                    break
        if progress:
            continue
        for carrier in _orbit_removals(f):
            r = dy.restrict(f, carrier)
            c = r.cover(cover) if cover is not None else None
            if _still_fails(fails, r.homeo, c):
                f, cover, progress = r.homeo, c, True
                break
    return f, cover


def _still_fails(fails, f, cover):
    try:
        return fails(f, cover)
    except Exception:
        return False


def reproducer(f, cover=None):
    covers = {"U": cover} if cover is not None else {}
    return finite_doc(f.space, f, covers)


# -------------------------------------------------------- space properties

def _space_props(space, rep):
    n = space.n
    doc = finite_doc(space)
    rep.record("roundtrip", space_from_open_family(n, space.opens) == space,
               reproducer=doc)
    ax = separation_axioms(space)
    rep.record("separation", ax.hausdorff == ax.t1 == space.is_discrete, reproducer=doc)
    if n <= 4:
        ok = True
        subsets = range(1 << n)
        for s in subsets:
            c = closure(space, s)
            ok &= subset(s, c) and closure(space, c) == c
            ok &= is_closed(space, complement(space, s)) == is_open(space, s)
        for a, b in product(subsets, repeat=2):
            if subset(a, b):
                ok &= subset(closure(space, a), closure(space, b))
        rep.record("closure_laws", ok, reproducer=doc)
    q = t0_quotient(space)
    ok = separation_axioms(q.space).t0
    if ax.t0:
        ok &= q.space == space and q.projection == tuple(range(n))
    rep.record("t0_quotient", ok, reproducer=doc)
    if n <= 4:
        for y in range(1, 1 << n):
            sub = SubspacePair(space, y)
            dec = None
            if is_closed(space, y):
                dec = is_extension_closed(sub)
                rep.record("closed_extension_closed", dec.verdict,
                           detail=f"carrier {members(y)}", reproducer=doc)
            if n <= 3:
                dec = dec or is_extension_closed(sub)
                full = is_extension_closed(sub, all_covers=True)
                ok = dec.verdict == full.verdict
                if not dec.verdict:
                    cov = tuple(sub.to_sub(u) for u in dec.certificate.elements)
                    ok &= not extension_exists(sub, cov)
                rep.record("extension_irredundant", ok,
                           detail=f"carrier {members(y)}", reproducer=doc)


# -------------------------------------------------------- homeo properties

def _homeo_props(f, covers, rep):
    space = f.space
    n = space.n
    t1 = separation_axioms(space).t1
    o = dy.decide_orbit_expansive(f)
    r = dy.decide_refinement_expansive(f)
    doc = reproducer(f)
    rep.record("finite_discrete", bool(o) == space.is_discrete, reproducer=doc)
    rep.record("t1_implication", (not o) or t1, reproducer=doc)
    rep.record("refinement_always", r.verdict, reproducer=doc)
    _cert(rep, f, dy.canonical_cover(space), o)
    _cert(rep, f, dy.canonical_cover(space), r)
    if n <= 4:
        for k in (-1, 2, 3):
            rep.record("power_equivalence", dy.check_power_equivalence(f, k),
                       detail=f"r={k}", reproducer=doc)
        q = t0_quotient(space, f)
        rep.record("quotient_existence",
                   bool(dy.decide_refinement_expansive(q.homeo)) == bool(r),
                   reproducer=doc)
    if n <= 3:
        all_covers = [dy.Cover(space, c) for c in dy.open_covers(space)]
        rep.record("canonical_completeness",
                   bool(o) == any(dy.is_o_expansive_cover(f, c) for c in all_covers)
                   and bool(r) == any(dy.is_r_expansive_cover(f, c) for c in all_covers),
                   reproducer=doc)
        size = dy.min_o_expansive_cover_size(f, 3)
        small = [len(c) for c in all_covers if len(c) <= 3 and dy.is_o_expansive_cover(f, c)]
        rep.record("min_cover_size", size == (min(small) if small else None),
                   detail=f"search {size}, brute {small and min(small)}", reproducer=doc)
        oexp = {c: bool(dy.is_o_expansive_cover(f, c)) for c in covers}
        rexp = {c: bool(dy.is_r_expansive_cover(f, c)) for c in covers}
        for c, d in product(covers, repeat=2):
            if dy.refines(d, c):
                ok = (not oexp[c] or oexp[d]) and (not rexp[c] or rexp[d])
                rep.record("monotonicity", ok, detail=f"{d!r} refines {c!r}",
                           reproducer=reproducer(f, c))


def _cert(rep, f, cover, dec, target=None):
    rep.record("certificates", dy.verify(dec, f, cover, target),
               detail=repr(dec), reproducer=reproducer(f, cover))


# -------------------------------------------------------- cover properties

def _fails(check):
    return lambda f, c: not check(f, c)


def _cover_props(f, cover, rep, ext_cache):
    space = f.space
    n = space.n
    t1 = separation_axioms(space).t1

    def record(prop, check, detail="", finding=False, shrinkable=True):
        try:
            holds = check(f, cover)
        except Exception as e:  # surfaced as a failure, never swallowed
            holds, detail = False, f"{type(e).__name__}: {e}"
        if holds:
            rep.record(prop, True)
            return
        g, c = (f, cover)
        if shrinkable and not finding:
            g, c = shrink(f, cover, _fails(check))
        rep.record(prop, False, detail, reproducer(g, c), finding=finding)

    o = dy.is_o_expansive_cover(f, cover)
    r = dy.is_r_expansive_cover(f, cover)
    _cert(rep, f, cover, o)
    _cert(rep, f, cover, r)
    _cert(rep, f, cover, dy.uniform_refinement_N(f, cover, dy.canonical_cover(space)),
          dy.canonical_cover(space))

    if n <= 3:
        record("oracle_o", lambda g, c: bool(dy.is_o_expansive_cover(g, c))
               == bool(dy.o_expansive_oracle(g, c)))
        record("oracle_r", lambda g, c: bool(dy.is_r_expansive_cover(g, c))
               == bool(dy.r_expansive_oracle(g, c)))
        record("uniformization", _uniformization)

    record("r_t1_theorem", lambda g, c: not (dy.is_r_expansive_cover(g, c)
                                             and separation_axioms(g.space).t1)
           or bool(dy.decide_orbit_expansive(g)))
    if t1 and r:
        record("basis", _basis)
    record("windows_shrink", _windows_shrink)
    if o:
        record("periodic_bound", lambda g, c: all(
            dy.check_periodic_bound(g, c, k) for k in range(1, g.order + 2)))
    record("diagonal", _diagonal)

    if n <= 4:
        record("quotient_preservation", _quotient_preservation)
        if o:
            record("power_cover", lambda g, c: all(
                dy.is_o_expansive_cover(g.power(k), dy.power_cover(g, c, k))
                for k in (-1, 2, 3)))
        record("restriction", lambda g, c: _restriction(g, c, ext_cache))

    if n <= 3 and r:
        for k in closed_invariant_sets(f):
            detail = f"K={members(k)}"
            if t1:
                record("duplication", _duplication_check(k), detail, shrinkable=False)
                record("duplication_t1", lambda g, c, k=k: separation_axioms(
                    duplicate(g.space, g, k).space).t1, detail, shrinkable=False)
            else:
                # the construction is only claimed for T1 bases
                record("duplication_non_t1", _duplication_check(k), detail,
                       finding=True)


def _uniformization(f, cover):
    d = dy.is_r_expansive_cover(f, cover)
    if not d:
        return True
    N = d.radius
    covers = list(dy.open_covers(f.space))
    fam = dy.window_cover(f, cover, N)
    if not all(dy.refines(fam, V) for V in covers):
        return False
    if N > 0:
        prev = dy.window_cover(f, cover, N - 1)
        return any(not dy.refines(prev, V) for V in covers)
    return True


def _basis(f, cover):
    d = dy.is_r_expansive_cover(f, cover)
    members_ = set()
    for N in range(d.radius + 1):
        members_.update(dy.window_cover(f, cover, N))
    for w in f.space.opens:
        u = 0
        for b in members_:
            if subset(b, w):
                u |= b
        if u != w:
            return False
    return True


def _windows_shrink(f, cover):
    prev = None
    for N, fam in dy.window_families(f, cover):
        if prev is not None and not dy.refines(fam, prev):
            return False
        if N >= RADII_CHECKED:
            return True
        prev = fam


def _diagonal(f, cover):
    D = dy.diagonal_from_cover(cover)
    ok = bool(dy.is_expansive_diagonal(f, D)) == bool(dy.is_o_expansive_cover(f, cover))
    if dy.is_expansive_diagonal(f, D):
        ok &= bool(dy.is_o_expansive_cover(f, dy.cover_from_diagonal(f.space, D)))
    return ok


def _quotient_preservation(f, cover):
    q = t0_quotient(f.space, f)
    qc = dy.Cover(q.space, tuple(q.image(u) for u in cover))
    return bool(dy.is_r_expansive_cover(f, cover)) == bool(dy.is_r_expansive_cover(q.homeo, qc))


def _restriction(f, cover, ext_cache):
    o = bool(dy.is_o_expansive_cover(f, cover))
    r = bool(dy.is_r_expansive_cover(f, cover))
    for y in dy.invariant_sets(f):
        res = dy.restrict(f, y)
        c = res.cover(cover)
        if o and not dy.is_o_expansive_cover(res.homeo, c):
            return False
        if r:
            key = (f.space.min_nbhd, y)
            if key not in ext_cache:
                ext_cache[key] = bool(is_extension_closed(SubspacePair(f.space, y)))
            if ext_cache[key] and not dy.is_r_expansive_cover(res.homeo, c):
                return False
    return True


def _duplication_check(k):
    def check(f, cover):
        if not dy.is_r_expansive_cover(f, cover):
            return True
        if not is_closed(f.space, k) or f.image(k) != k:
            return True
        dup = duplicate(f.space, f, k)
        z = duplicated_cover(dup, cover)
        d = dy.is_r_expansive_cover(dup.homeo, z)
        return d.verdict and bool(dy.r_expansive_oracle(dup.homeo, z)) and \
            dy.verify(d, dup.homeo, z)
    return check


# ------------------------------------------------------------ driver

def _covers_for(space, rng):
    if space.n <= 4:
        return list(enumerate_covers(space, 3))
    opens = space.nonempty_opens
    out = {dy.canonical_cover(space).elements}
    tries = 0
    while len(out) < SAMPLED_COVERS and tries < 20 * SAMPLED_COVERS:
        tries += 1
        k = rng.randint(1, 3)
        pick = tuple(sorted(rng.sample(opens, min(k, len(opens)))))
        u = 0
        for s in pick:
            u |= s
        if u == space.full:
            out.add(pick)
    return [dy.Cover(space, c) for c in sorted(out)]


def check_space(min_nbhd, max_points, seed):
    space = FiniteSpace(min_nbhd)
    rep = SuiteReport(max_points, seed)
    rep.spaces[space.n] += 1
    rng = random.Random(f"{seed}:{min_nbhd}")
    _space_props(space, rep)
    ext_cache = {}
    covers = _covers_for(space, rng)
    for f in enumerate_homeos(space):
        _homeo_props(f, covers, rep)
        for c in covers:
            _cover_props(f, c, rep, ext_cache)
    return rep


def _check_batch(args):
    batch, max_points, seed = args
    rep = SuiteReport(max_points, seed)
    for m in batch:
        rep.merge(check_space(m, max_points, seed))
    return rep


def run_suite(max_points=3, seed=0, jobs=1, include_sft=True):
    if max_points > MAX_ENUMERATION_POINTS:
        raise ScaleCap(f"suite capped at {MAX_ENUMERATION_POINTS} points")
    spaces = [s.min_nbhd for n in range(1, max_points + 1) for s in enumerate_spaces(n)]
    report = SuiteReport(max_points, seed)
    batches = [spaces[i::max(jobs, 1) * 8] for i in range(max(jobs, 1) * 8)]
    batches = [(b, max_points, seed) for b in batches if b]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            for part in ex.map(_check_batch, batches):
                report.merge(part)
    else:
        for b in batches:
            report.merge(_check_batch(b))
    if include_sft:
        report.merge(check_shifts(max_alphabet=min(3, max(max_points, 1)), seed=seed))
    return report


# ------------------------------------------------------------ shifts

def _symbol_covers(a, max_size=2):
    sets = [frozenset(c) for k in range(1, a + 1) for c in combinations(range(a), k)]
    for k in range(1, max_size + 1):
        for combo in combinations(sets, k):
            if frozenset().union(*combo) == frozenset(range(a)):
                yield combo


def on_bi_infinite_path(nodes, succ):
    """Reference answer for trimming: a node of a finite graph lies on a
    bi-infinite path iff some cycle reaches it and it reaches some cycle."""
    g = nx.DiGraph()
    g.add_nodes_from(nodes)
    g.add_edges_from((v, w) for v in nodes for w in succ[v])
    on_cycle = {v for comp in nx.strongly_connected_components(g) for v in comp
                if len(comp) > 1 or g.has_edge(v, v)}
    out = set()
    for v in nodes:
        back = nx.ancestors(g, v) | {v}
        fwd = nx.descendants(g, v) | {v}
        if back & on_cycle and fwd & on_cycle:
            out.add(v)
    return out


def periodic_pair_nodes(nodes, succ, max_period=6):
    """Nodes on some closed walk of length at most ``max_period`` (a node on
    such a walk returns to itself within that many steps)."""
    out = set()
    for v in nodes:
        reach = set(succ[v])
        for _ in range(max_period):
            if v in reach:
                out.add(v)
                break
            reach = {w for u in reach for w in succ[u]}
    return out


def check_shifts(max_alphabet=3, seed=0, sampled=24):
    rep = SuiteReport(max_alphabet, seed)
    rng = random.Random(f"shift:{seed}")
    matrices = []
    for a in range(1, max_alphabet + 1):
        for bits in product((0, 1), repeat=a * a):
            matrices.append([list(bits[i * a:(i + 1) * a]) for i in range(a)])
    for rows in matrices:
        try:
            s = sh.sft_new(rows)
        except Exception:
            continue
        doc = {"kind": "sft", "alphabet": len(rows), "matrix": rows}
        a = len(rows)
        for sets in _symbol_covers(a):
            cover = sh.symbol_cover(s, sets)
            nodes, succ = sh.pair_graph(s, cover)
            core = sh.bi_essential_core(nodes, succ)
            rep.record("trimming", core == on_bi_infinite_path(nodes, succ),
                       reproducer=doc)
            rep.record("trimming_periodic", periodic_pair_nodes(nodes, succ) <= core,
                       reproducer=doc)
            d = sh.is_o_expansive_symbol_cover(s, cover)
            if not d:
                rep.record("shift_witness", sh.check_pair_witness(s, cover, d.certificate),
                           reproducer=doc)
            else:
                rep.record("shift_periodic_bound", all(
                    sh.check_periodic_bound(s, cover, k) for k in range(1, 7)),
                    reproducer=doc)
    sample = rng.sample(matrices, min(sampled, len(matrices)))
    for rows in sample:
        try:
            s = sh.sft_new(rows)
        except Exception:
            continue
        for sets in _symbol_covers(len(rows)):
            cover = sh.symbol_cover(s, sets)
            base = bool(sh.is_o_expansive_symbol_cover(s, cover))
            for L in (2, 3):
                hb, words = sh.higher_block(s, L)
                rep.record("recoding_invariance",
                           bool(sh.is_o_expansive_symbol_cover(hb, sh.recode_cover(cover, words)))
                           == base, reproducer={"kind": "sft", "alphabet": len(rows),
                                                "matrix": rows})
    f2 = sh.full_shift(2)
    c2 = sh.symbol_cover(f2, [[0], [1]])
    rep.record("full_shift_equality", all(
        sh.periodic_count(f2, k) == len(c2) ** k for k in range(1, 11)))
    return rep
