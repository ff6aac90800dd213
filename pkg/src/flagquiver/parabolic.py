"""Parabolic subgroups: Levi/nilradical split and tangent-bundle weights."""
from __future__ import annotations

from fractions import Fraction

from .errors import ComponentVerificationFailed, EmptySigma
from .rootsys import _dot2, coroot_pairing


class ParabolicData:
    """A parabolic choice: a nonempty set of marked simple-root indices.

    The Levi subsystem is spanned by the unmarked simple roots; the weights
    of the tangent bundle of G/P are the negatives of the nilradical
    weights.
    """

    def __init__(self, system, sigma):
        sigma = tuple(sorted(set(int(i) for i in sigma)))
        if not sigma:
            raise EmptySigma("sigma must be a nonempty set of simple-root indices")
        if sigma[0] < 1 or sigma[-1] > system.rank:
            raise ValueError(f"sigma indices must lie in 1..{system.rank}")
        self.system = system
        self.sigma = sigma
        self.levi_simple_indices = tuple(
            i for i in range(1, system.rank + 1) if i not in sigma
        )
        levi_pos, nilrad = [], []
        for r in system.positive_roots:
            exp = system.expansion(r)
            if all(exp[i - 1] == 0 for i in sigma):
                levi_pos.append(r)
            else:
                nilrad.append(r)
        self.levi_positive = tuple(levi_pos)
        self.nilradical_weights = tuple(nilrad)
        self.tangent_weights = tuple(-r for r in nilrad)
        self.picard_rank = len(sigma)

    @property
    def dim(self):
        """Dimension of G/P."""
        return len(self.tangent_weights)

    @property
    def is_borel(self):
        return len(self.sigma) == self.system.rank

    def sigma_degree(self, root):
        """Total coefficient of a root over the marked simple roots."""
        exp = self.system.expansion(root)
        return sum(exp[i - 1] for i in self.sigma)

    @property
    def generator_weights(self):
        """Nilradical weights in marked degree one (weights of n/[n,n])."""
        return tuple(r for r in self.nilradical_weights if self.sigma_degree(r) == 1)

    def __repr__(self):
        return f"ParabolicData({self.system.series}{self.system.rank}, sigma={self.sigma})"


class LeviComponent:
    """One Levi-irreducible summand of the tangent bundle."""

    __slots__ = ("weights", "highest_weight", "rank")

    def __init__(self, weights, highest_weight):
        self.weights = tuple(weights)
        self.highest_weight = highest_weight
        self.rank = len(self.weights)

    def __repr__(self):
        return f"LeviComponent(rank={self.rank}, top={self.highest_weight})"


def build_parabolic(system, sigma):
    """Parabolic data for a nonempty subset of simple-root indices."""
    return ParabolicData(system, sigma)


def borel(system):
    """The Borel case: every simple root marked."""
    return ParabolicData(system, range(1, system.rank + 1))


def is_levi_dominant(lam, p):
    """Dominance against the unmarked simple coroots only."""
    return all(
        coroot_pairing(lam, p.system.simple_root(i)) >= 0
        for i in p.levi_simple_indices
    )


def _levi_weyl_dimension(p, highest):
    """Weyl dimension of a Levi highest-weight module, exactly."""
    s2l = [0] * p.system.ambient_dim
    for g in p.levi_positive:
        for k, c in enumerate(g.coords2):
            s2l[k] += c
    num2 = tuple(2 * a + b for a, b in zip(highest.coords2, s2l))
    dim = Fraction(1)
    for g in p.levi_positive:
        dim *= Fraction(_dot2(num2, g.coords2), _dot2(s2l, g.coords2))
    if dim.denominator != 1 or dim <= 0:
        raise ComponentVerificationFailed(
            f"Levi Weyl dimension of {highest} is not a positive integer"
        )
    return int(dim)


def levi_components(p):
    """Partition of the tangent weights into Levi-irreducible components.

    Weights are grouped by connectivity under addition of Levi roots; each
    group is then verified to have a unique Levi-maximal weight whose Levi
    Weyl dimension matches the group size.  Fails loudly otherwise.
    """
    weights = p.tangent_weights
    index = {w: i for i, w in enumerate(weights)}
    parent = list(range(len(weights)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, w in enumerate(weights):
        for g in p.levi_positive:
            for v in (w + g, w - g):
                j = index.get(v)
                if j is not None:
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[rj] = ri

    groups = {}
    for i in range(len(weights)):
        groups.setdefault(find(i), []).append(i)

    components = []
    for root_idx in sorted(groups, key=lambda r: min(groups[r])):
        member_idx = sorted(groups[root_idx])
        members = [weights[i] for i in member_idx]
        member_set = set(members)
        maximal = [
            w
            for w in members
            if all((w + g) not in member_set for g in p.levi_positive)
        ]
        if len(maximal) != 1:
            raise ComponentVerificationFailed(
                f"component {members} has {len(maximal)} Levi-maximal weights"
            )
        top = maximal[0]
        if _levi_weyl_dimension(p, top) != len(members):
            raise ComponentVerificationFailed(
                f"component of {top} has size {len(members)} but Weyl dimension "
                f"{_levi_weyl_dimension(p, top)}"
            )
        components.append(LeviComponent(members, top))
    return tuple(components)
