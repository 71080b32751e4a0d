"""Subshifts of finite type.

Points are bi-infinite paths in the transition graph and are never
materialized.  A :class:`SymbolCover` names sets of symbols; element ``k``
stands for the clopen set of points whose zeroth symbol lies in ``A_k``.

Two points ``x != y`` are never separated by such a cover iff the sequence of
pairs ``(x_j, y_j)`` is a bi-infinite path in the pair graph whose nodes are
the jointly covered symbol pairs.  Trimming the pair graph to its
bi-essential core (every node keeps a predecessor and a successor) leaves
exactly the nodes on such paths, so the cover is orbit expansive iff the core
is diagonal.
"""
from dataclasses import dataclass
from functools import cached_property
from itertools import product

import networkx as nx
import numpy as np

from .decision import CopyPairWitness, Decision, ShiftWitness
from .errors import CoverNotExpansive, EmptyShift, FixedSymbolMissing, InvalidCover


def bi_essential_core(nodes, succ):
    """Nodes that survive repeated removal of nodes lacking an in- or
    out-edge inside the current set."""
    alive = set(nodes)
    pred = {v: set() for v in alive}
    for v in alive:
        for w in succ[v]:
            if w in pred:
                pred[w].add(v)
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if not (succ[v] & alive) or not (pred[v] & alive):
                alive.discard(v)
                changed = True
    return alive


@dataclass(frozen=True)
class Sft:
    """Trimmed shift.  ``allowed`` keeps the original alphabet indices; rows
    and columns of removed symbols are zero."""
    allowed: tuple
    alive: tuple
    removed: tuple

    @property
    def alphabet_size(self):
        return len(self.allowed)

    @cached_property
    def matrix(self):
        return np.array(self.allowed, dtype=bool)

    def successors(self, a):
        return {b for b, ok in enumerate(self.allowed[a]) if ok}

    def graph(self, symbols=None):
        """Transition graph on ``symbols`` (default: all live symbols)."""
        nodes = self.alive if symbols is None else sorted(symbols)
        g = nx.DiGraph()
        g.add_nodes_from(nodes)
        keep = set(nodes)
        for a in nodes:
            g.add_edges_from((a, b) for b in self.successors(a) if b in keep)
        return g


def sft_new(matrix):
    rows = [[int(bool(x)) for x in row] for row in np.asarray(matrix).tolist()]
    a = len(rows)
    if a == 0 or any(len(r) != a for r in rows):
        raise ValueError("transition matrix must be square and nonempty")
    succ = {i: {j for j in range(a) if rows[i][j]} for i in range(a)}
    core = bi_essential_core(range(a), succ)
    if not core:
        raise EmptyShift("no bi-infinite path")
    allowed = tuple(tuple(int(rows[i][j] and i in core and j in core) for j in range(a))
                    for i in range(a))
    return Sft(allowed, tuple(sorted(core)),
               tuple(i for i in range(a) if i not in core))


def full_shift(a):
    return sft_new(np.ones((a, a), dtype=int))


def golden_mean():
    return sft_new([[1, 1], [1, 0]])


@dataclass(frozen=True)
class SymbolCover:
    elements: tuple

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def symbol_cover(sft, sets):
    elems = tuple(frozenset(int(x) for x in s) for s in sets)
    union = set()
    for e in elems:
        if not e:
            raise InvalidCover("empty cover element")
        if any(not 0 <= x < sft.alphabet_size for x in e):
            raise InvalidCover(f"symbols {sorted(e)} out of range")
        union |= e
    missing = set(sft.alive) - union
    if missing:
        raise InvalidCover(f"symbols {sorted(missing)} not covered")
    return SymbolCover(elems)


def higher_block(sft, L):
    """Recode as the shift on allowed words of length ``L``.

    Word ``u`` may be followed by ``v`` iff ``v`` is ``u`` shifted by one
    symbol.  Returns the new shift and the tuple of words (new symbol ``i``
    is ``words[i]``).
    """
    if L < 1:
        raise ValueError("block length must be at least 1")
    words = [(a,) for a in sft.alive]
    for _ in range(L - 1):
        words = [w + (b,) for w in words for b in sorted(sft.successors(w[-1]))]
    words = sorted(words)
    index = {w: i for i, w in enumerate(words)}
    mat = np.zeros((len(words), len(words)), dtype=int)
    for w in words:
        for b in sft.successors(w[-1]):
            v = w[1:] + (b,)
            if v in index:
                mat[index[w], index[v]] = 1
    return sft_new(mat), tuple(words)


def recode_cover(cover, words):
    """Cover of the higher-block shift equal to ``cover`` on zeroth symbols."""
    return SymbolCover(tuple(frozenset(i for i, w in enumerate(words) if w[0] in e)
                             for e in cover))


def pair_graph(sft, cover):
    """Jointly covered live symbol pairs and their componentwise transitions."""
    nodes = set()
    for e in cover:
        live = [a for a in sorted(e) if a in set(sft.alive)]
        nodes.update(product(live, live))
    succ = {}
    for a, b in nodes:
        succ[(a, b)] = {(c, d) for c in sft.successors(a) for d in sft.successors(b)
                        if (c, d) in nodes}
    return nodes, succ


def _cyclic_nodes(g):
    out = set()
    for comp in nx.strongly_connected_components(g):
        if len(comp) > 1:
            out |= comp
        else:
            v = next(iter(comp))
            if g.has_edge(v, v):
                out.add(v)
    return out


def _cycle_through(g, v):
    if g.has_edge(v, v):
        return (v,)
    best = None
    for s in sorted(g.successors(v)):
        try:
            path = nx.shortest_path(g, s, v)
        except nx.NetworkXNoPath:
            continue
        if best is None or len(path) < len(best):
            best = path
    return (v,) + tuple(best[:-1])


def path_through(g, v):
    """A bi-infinite path through ``v`` in a bi-essential graph, as
    ``left^inf . middle . right^inf`` (periodic when ``v`` is on a cycle)."""
    cyclic = _cyclic_nodes(g)
    if v in cyclic:
        cyc = _cycle_through(g, v)
        return ShiftWitness(cyc, (), cyc)
    fwd = nx.single_source_shortest_path(g, v)
    c_r = min((c for c in fwd if c in cyclic), key=lambda c: (len(fwd[c]), c))
    bwd = nx.single_source_shortest_path(g.reverse(copy=False), v)
    c_l = min((c for c in bwd if c in cyclic), key=lambda c: (len(bwd[c]), c))
    to_v = tuple(reversed(bwd[c_l]))          # c_l ... v
    from_v = tuple(fwd[c_r])                  # v ... c_r
    left_cyc = _cycle_through(g, c_l)         # c_l x1 ... xk
    left = left_cyc[1:] + left_cyc[:1]        # x1 ... xk c_l
    middle = to_v[1:] + from_v[1:-1]
    return ShiftWitness(left, middle, _cycle_through(g, c_r))


def _walk_ok(w, step_ok):
    seq = w.left + w.middle + w.right
    if not w.left or not w.right:
        return False
    if not step_ok(w.left[-1], w.left[0]) or not step_ok(w.right[-1], w.right[0]):
        return False
    return all(step_ok(a, b) for a, b in zip(seq, seq[1:]))


def is_o_expansive_symbol_cover(sft, cover):
    """*yes* iff the trimmed pair graph is diagonal.  A *no* carries a path of
    off-diagonal-somewhere pairs: periodic when an off-diagonal pair lies on
    a cycle, otherwise a pair of points asymptotic in both directions."""
    nodes, succ = pair_graph(sft, cover)
    core = bi_essential_core(nodes, succ)
    off = sorted(v for v in core if v[0] != v[1])
    if not off:
        return Decision(True)
    g = nx.DiGraph()
    g.add_nodes_from(core)
    g.add_edges_from((v, w) for v in core for w in succ[v] if w in core)
    cyclic = _cyclic_nodes(g)
    on_cycle = [v for v in off if v in cyclic]
    return Decision(False, path_through(g, on_cycle[0] if on_cycle else off[0]))


def check_pair_witness(sft, cover, w):
    """Both coordinate paths are admissible, every pair is jointly covered,
    and the two points differ somewhere."""
    nodes, _ = pair_graph(sft, cover)
    seq = w.left + w.middle + w.right
    if any(v not in nodes for v in seq):
        return False
    if all(a == b for a, b in seq):
        return False
    m = sft.allowed
    return _walk_ok(w, lambda u, v: bool(m[u[0]][v[0]] and m[u[1]][v[1]]))


def periodic_count(sft, n):
    """Number of points of period dividing ``n``: the trace of the ``n``-th
    power of the transition matrix, in exact integers."""
    if n < 1:
        raise ValueError("n must be at least 1")
    a = np.array(sft.allowed, dtype=object)
    return int(np.trace(np.linalg.matrix_power(a, n)))


def check_periodic_bound(sft, cover, n):
    if not is_o_expansive_symbol_cover(sft, cover):
        raise CoverNotExpansive("symbol cover is not orbit expansive")
    return periodic_count(sft, n) <= len(cover) ** n


def check_duplicated_shift_cover(sft, fixed_symbol, cover, element=None):
    """Orbit expansivity of the augmented cover after doubling the fixed
    point ``a^inf``.

    The copy ``x1`` lies only in the added element, which meets the shift in
    ``U_n`` minus ``a^inf``.  So ``(x, x1)`` is never separated iff every
    symbol of ``x`` lies in ``A_n`` and ``x != a^inf``: that happens iff the
    shift induced on ``A_n`` has a point other than ``a^inf``.  Pairs of shift
    points are covered exactly as before, and ``(a^inf, x1)`` is separated at
    once.  ``element`` selects ``U_n`` (default: the last element holding
    ``a``).
    """
    a = fixed_symbol
    if a not in sft.alive or not sft.allowed[a][a]:
        raise FixedSymbolMissing(f"{a}^inf is not a point of the shift")
    elems = list(cover)
    if element is None:
        holding = [i for i, e in enumerate(elems) if a in e]
        if not holding:
            raise FixedSymbolMissing(f"no cover element contains {a}")
        element = holding[-1]
    if a not in elems[element]:
        raise FixedSymbolMissing(f"cover element {element} does not contain {a}")
    sym = [b for b in sft.alive if b in elems[element]]
    succ = {b: sft.successors(b) & set(sym) for b in sym}
    core = bi_essential_core(sym, succ)
    if core != {a}:
        g = sft.graph(core)
        b = min(core - {a})
        return Decision(False, CopyPairWitness(path_through(g, b)))
    return is_o_expansive_symbol_cover(sft, cover)


def check_copy_pair_witness(sft, fixed_symbol, cover, element, w):
    elems = list(cover)
    if element is None:
        element = [i for i, e in enumerate(elems) if fixed_symbol in e][-1]
    seq = w.point.left + w.point.middle + w.point.right
    if any(b not in elems[element] or b not in sft.alive for b in seq):
        return False
    if all(b == fixed_symbol for b in seq):
        return False
    m = sft.allowed
    return _walk_ok(w.point, lambda u, v: bool(m[u][v]))
