"""Exact Schubert calculus on G/P via iterated divisor multiplication.

Weyl group elements are keyed by the image of the Weyl vector, which is
regular, so the key is faithful; minimal coset representatives are grown
by length with a breadth-first search.
"""
from __future__ import annotations

from math import factorial
from typing import NamedTuple

from .errors import BudgetExceeded
from .polynomials import IntPoly, multinomial
from .rootsys import _dot2

DEFAULT_BUDGET = 10**6


class WeylElement(NamedTuple):
    canonical_key: tuple          # doubled coordinates of w(rho)
    length: int
    simple_images: tuple          # doubled coordinates of each w(alpha_i)


class SchubertCycle(NamedTuple):
    coefficients: dict            # canonical key -> integer
    parabolic: object
    codimension: int


def _weyl_order(series, rank):
    if series == "A":
        return factorial(rank + 1)
    if series == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return {6: 51840, 7: 2903040, 8: 696729600}[rank]


def _component_order(nodes, adj):
    """|W| of the subsystem on a connected set of Dynkin nodes."""
    k = len(nodes)
    degrees = {v: len(adj[v] & nodes) for v in nodes}
    branch = [v for v in nodes if degrees[v] == 3]
    if not branch:
        return factorial(k + 1)  # a path: type A_k
    arms = []
    for start in adj[branch[0]] & nodes:
        length, prev, cur = 1, branch[0], start
        while True:
            nxt = (adj[cur] & nodes) - {prev}
            if not nxt:
                break
            prev, cur = cur, next(iter(nxt))
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == arms[1] == 1:
        return 2 ** (k - 1) * factorial(k)  # type D_k
    return {2: 51840, 3: 2903040, 4: 696729600}[arms[2]]  # E6/E7/E8


def coset_count(p):
    """|W / W_P| from the Weyl group orders, without enumeration."""
    system = p.system
    total = _weyl_order(system.series, system.rank)
    nodes = set(i - 1 for i in p.levi_simple_indices)
    adj = {
        i: {j for j in range(system.rank) if j != i and system.cartan_matrix[i][j] == -1}
        for i in range(system.rank)
    }
    levi = 1
    remaining = set(nodes)
    while remaining:
        start = min(remaining)
        comp = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for v in adj[u] & remaining:
                if v not in comp:
                    comp.add(v)
                    stack.append(v)
        remaining -= comp
        levi *= _component_order(comp, adj)
    return total // levi


class _CosetTable:
    """All minimal coset representatives, indexed by canonical key."""

    def __init__(self, p, budget):
        system = p.system
        if coset_count(p) > budget:
            raise BudgetExceeded(
                f"|W/W_P| = {coset_count(p)} exceeds the budget {budget}"
            )
        self.parabolic = p
        simples = [a.coords2 for a in system.simple_roots]
        posroots = set(r.coords2 for r in system.positive_roots)
        levi = [i - 1 for i in p.levi_simple_indices]

        def reflect(i, coords):
            q = _dot2(coords, simples[i]) // 4
            return tuple(c - q * s for c, s in zip(coords, simples[i]))

        identity = WeylElement(system.rho.coords2, 0, tuple(simples))
        self.elements = {identity.canonical_key: identity}
        self.by_length = [[identity]]
        frontier = [identity]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(system.rank):
                    # s_i w is longer exactly when w^{-1}(alpha_i) > 0
                    if _dot2(simples[i], w.canonical_key) <= 0:
                        continue
                    key = reflect(i, w.canonical_key)
                    if key in self.elements:
                        continue
                    images = tuple(reflect(i, im) for im in w.simple_images)
                    if any(images[j] not in posroots for j in levi):
                        continue
                    elem = WeylElement(key, w.length + 1, images)
                    self.elements[key] = elem
                    nxt.append(elem)
            if nxt:
                self.by_length.append(sorted(nxt, key=lambda e: e.canonical_key))
            frontier = nxt
        self._intersection_cache = {}

    @property
    def top_key(self):
        top = self.by_length[-1]
        if len(top) != 1:
            raise RuntimeError("expected a unique element of maximal length")
        return top[0].canonical_key


_TABLE_CACHE = {}


def _coset_table(p, budget=DEFAULT_BUDGET):
    key = (p.system.series, p.system.rank, p.sigma, budget)
    if key not in _TABLE_CACHE:
        _TABLE_CACHE[key] = _CosetTable(p, budget)
    return _TABLE_CACHE[key]


def minimal_coset_reps(p, up_to_length, budget=DEFAULT_BUDGET):
    """Minimal representatives of W/W_P of length at most the bound."""
    if up_to_length > p.dim:
        raise ValueError("up_to_length cannot exceed dim G/P")
    table = _coset_table(p, budget)
    out = []
    for level in table.by_length[: up_to_length + 1]:
        out.extend(level)
    return out


def unit_cycle(p, budget=DEFAULT_BUDGET):
    """The fundamental class: the identity coset with coefficient one."""
    table = _coset_table(p, budget)
    return SchubertCycle({p.system.rho.coords2: 1}, p, 0)


def chevalley_multiply(cycle, i, budget=DEFAULT_BUDGET):
    """Multiply a cycle by the divisor class attached to marked index i.

    Implements the divisor product rule: each support element w picks up
    the representatives w s_alpha one step longer, weighted by the
    coefficient of alpha_i in alpha, over non-Levi positive roots alpha.
    """
    p = cycle.parabolic
    if i not in p.sigma:
        raise ValueError(f"index {i} is not a marked simple root")
    system = p.system
    table = _coset_table(p, budget)
    nonlevi = [
        (r.coords2, system.expansion(r), system.height(r))
        for r in p.nilradical_weights
    ]
    out = {}
    for key, coeff in cycle.coefficients.items():
        w = table.elements[key]
        for coords, exp, height in nonlevi:
            mult = exp[i - 1]
            if mult == 0:
                continue
            # w s_alpha (rho) = w(rho) - <rho, alpha^vee> w(alpha)
            walpha = [0] * system.ambient_dim
            for c, image in zip(exp, w.simple_images):
                if c:
                    for k, x in enumerate(image):
                        walpha[k] += c * x
            new_key = tuple(
                a - height * b for a, b in zip(key, walpha)
            )
            target = table.elements.get(new_key)
            if target is not None and target.length == w.length + 1:
                out[new_key] = out.get(new_key, 0) + mult * coeff
    return SchubertCycle({k: v for k, v in out.items() if v}, p, cycle.codimension + 1)


def multiply_by_divisors(p, divisor_sequence, budget=DEFAULT_BUDGET):
    """Iterated divisor product starting from the fundamental class."""
    cycle = unit_cycle(p, budget)
    for i in divisor_sequence:
        cycle = chevalley_multiply(cycle, i, budget)
    return cycle


def intersection_number(p, exponents, budget=DEFAULT_BUDGET):
    """Top intersection number of a divisor monomial.

    ``exponents`` gives one multiplicity per marked index (in increasing
    index order) and must sum to dim G/P.
    """
    exponents = tuple(int(e) for e in exponents)
    if len(exponents) != len(p.sigma) or any(e < 0 for e in exponents):
        raise ValueError("need one nonnegative exponent per marked index")
    if sum(exponents) != p.dim:
        raise ValueError("exponents must sum to dim G/P")
    table = _coset_table(p, budget)
    cached = table._intersection_cache.get(exponents)
    if cached is not None:
        return cached
    sequence = []
    for i, e in zip(p.sigma, exponents):
        sequence.extend([i] * e)
    cycle = multiply_by_divisors(p, sequence, budget)
    value = cycle.coefficients.get(table.top_key, 0)
    table._intersection_cache[exponents] = value
    return value


def intersection_polynomial(p, degree, budget=DEFAULT_BUDGET):
    """For each marked index i, the polynomial H_i . (sum_j a_j H_j)^degree.

    Exponent tuples follow the marked indices in increasing order; the
    degree must be dim G/P - 1 so each entry is a top intersection.
    """
    if degree != p.dim - 1:
        raise ValueError("degree must be dim G/P - 1")
    k = len(p.sigma)
    polys = {}
    for pos in range(k):
        terms = {}
        for exps in _compositions(degree, k):
            total = list(exps)
            total[pos] += 1
            value = intersection_number(p, total, budget)
            if value:
                terms[tuple(exps)] = multinomial(degree, exps) * value
        polys[pos] = IntPoly(k, terms)
    return polys


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
