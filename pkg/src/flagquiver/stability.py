"""Slope stability cones, closed-form boundaries, and character stability.

Everything is exact: cone inequalities are integer polynomials in the
polarization coefficients, boundary slopes are quadratic surds, and the
character-based verdicts use the same integer data.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import NamedTuple

from .errors import (
    NotAmple,
    NotLeviTrivialDeterminant,
    NotQuadratic,
    NotTwoParameter,
)
from .parabolic import levi_components
from .polynomials import IntPoly
from .rootsys import coroot_pairing
from .schubert import DEFAULT_BUDGET, intersection_polynomial
from .tangentrep import closed_subsets, tangent_rep

STABLE = "STABLE"
UNSTABLE = "UNSTABLE"
BOUNDARY = "STRICTLY_SEMISTABLE_BOUNDARY"


class ConeInequality(NamedTuple):
    """Normalized integer polynomial that must be positive for stability."""

    subbundle: tuple      # component indices of the Levi-level rep
    polynomial: IntPoly
    strict: bool


class SigmaCharacter(NamedTuple):
    values: tuple         # one integer per Levi-level vertex
    polarization: tuple


def c1_picard(weights, p):
    """First Chern class of the bundle with the given weight multiset.

    Coordinates are taken against the marked fundamental classes, in
    increasing index order.  The weight sum must pair to zero with every
    Levi coroot (a Levi-trivial determinant), otherwise the multiset does
    not describe a line bundle pulled from G/P.
    """
    weights = list(weights)
    if not weights:
        raise ValueError("empty weight multiset")
    total = weights[0]
    for w in weights[1:]:
        total = total + w
    for j in p.levi_simple_indices:
        if coroot_pairing(total, p.system.simple_root(j)) != 0:
            raise NotLeviTrivialDeterminant(
                f"weight sum pairs nonzero with unmarked coroot {j}"
            )
    return tuple(-coroot_pairing(total, p.system.simple_root(i)) for i in p.sigma)


def stability_cone(p, budget=DEFAULT_BUDGET):
    """One positivity constraint per reduced invariant subbundle.

    The tangent bundle is H-stable exactly when every returned polynomial
    is positive at H.  Polynomials are normalized (common monomial and
    content divided out), which preserves signs on the ample cone.
    """
    trep = tangent_rep(p)
    comps = trep.components
    qpolys = intersection_polynomial(p, p.dim - 1, budget)
    c1_total = c1_picard(p.tangent_weights, p)
    rk_total = p.dim
    inequalities = []
    for subset in closed_subsets(trep.levi_rep, reduce=True):
        rk = sum(comps[ci].rank for ci in subset)
        sub_weights = [w for ci in subset for w in comps[ci].weights]
        c1 = c1_picard(sub_weights, p)
        poly = IntPoly.zero(len(p.sigma))
        for pos in range(len(p.sigma)):
            poly = poly + qpolys[pos].scaled(rk * c1_total[pos] - rk_total * c1[pos])
        inequalities.append(ConeInequality(subset, poly.normalized(), True))
    return inequalities


def cone_membership(inequalities, polarization):
    """STABLE / UNSTABLE / boundary verdict for an ample integer tuple."""
    h = tuple(int(x) for x in polarization)
    if any(x <= 0 for x in h):
        raise NotAmple(f"polarization {h} has a non-positive entry")
    on_boundary = False
    for ineq in inequalities:
        value = ineq.polynomial.evaluate(h)
        if value < 0:
            return UNSTABLE
        if value == 0:
            on_boundary = True
    return BOUNDARY if on_boundary else STABLE


class Surd:
    """Exact real number of the form (p + q*sqrt(r)) / s."""

    __slots__ = ("p", "q", "r", "s")

    def __init__(self, p, q, r, s):
        if s == 0:
            raise ZeroDivisionError("surd denominator is zero")
        if r < 0:
            raise ValueError("negative radicand")
        if s < 0:
            p, q, s = -p, -q, -s
        # pull square factors out of the radicand
        d = 2
        while d * d <= r:
            while r % (d * d) == 0:
                r //= d * d
                q *= d
            d += 1
        if r == 1:
            p, q, r = p + q, 0, 0
        if q == 0:
            r = 0
        g = gcd(gcd(abs(p), abs(q)), s)
        if g > 1:
            p, q, s = p // g, q // g, s // g
        self.p, self.q, self.r, self.s = p, q, r, s

    @property
    def is_rational(self):
        return self.q == 0

    def as_fraction(self):
        if not self.is_rational:
            raise ValueError("irrational surd")
        return Fraction(self.p, self.s)

    def approx(self, digits=30):
        scale = 10**digits
        root = Fraction(isqrt(self.r * scale * scale), scale)
        return Fraction(self.p, self.s) + Fraction(self.q, self.s) * root

    def __float__(self):
        return float(self.approx())

    def __eq__(self, other):
        if not isinstance(other, Surd):
            return NotImplemented
        return (self.p, self.q, self.r, self.s) == (other.p, other.q, other.r, other.s)

    def __hash__(self):
        return hash((self.p, self.q, self.r, self.s))

    def __lt__(self, other):
        # sign of self - other = A + B sqrt(r1) + C sqrt(r2), exactly
        a = Fraction(self.p, self.s) - Fraction(other.p, other.s)
        b = Fraction(self.q, self.s)
        c = Fraction(-other.q, other.s)
        return _sign_two_surds(a, b, self.r, c, other.r) < 0

    def __le__(self, other):
        return self == other or self < other

    def __repr__(self):
        if self.is_rational:
            return f"Surd({Fraction(self.p, self.s)})"
        return f"Surd(({self.p}+{self.q}*sqrt({self.r}))/{self.s})"


def _sign_linear(a, b, r):
    """Exact sign of a + b*sqrt(r) for rationals a, b and integer r >= 0."""
    if b == 0 or r == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return (b > 0) - (b < 0)
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    lhs, rhs = a * a, b * b * r
    if lhs == rhs:
        return 0
    return (1 if a > 0 else -1) if lhs > rhs else (1 if b > 0 else -1)


def _sign_two_surds(a, b, r1, c, r2):
    """Exact sign of a + b*sqrt(r1) + c*sqrt(r2)."""
    if c == 0 or r2 == 0:
        return _sign_linear(a, b, r1)
    if b == 0 or r1 == 0:
        return _sign_linear(a, c, r2)
    left = _sign_linear(a, b, r1)
    right = -((c > 0) - (c < 0))  # sign of -c*sqrt(r2)
    if left != right:
        return 1 if left > right else -1
    if left == 0:
        return 0
    # both sides share a sign; compare squares: (a + b sqrt(r1))^2 vs c^2 r2
    cmp = _sign_linear(a * a + b * b * r1 - c * c * r2, 2 * a * b, r1)
    return left * cmp


class Boundary2D(NamedTuple):
    lower: Surd
    upper: Surd

    @property
    def has_rational_endpoint(self):
        return self.lower.is_rational or self.upper.is_rational


def boundary_2d(inequalities):
    """Extreme slopes b/a of a two-parameter stability cone, exactly.

    Each inequality must reduce to a quadratic (or lower degree) in the
    slope; the cone is the intersection of their positivity regions over
    positive slopes.
    """
    if not inequalities:
        raise ValueError("no inequalities")
    for ineq in inequalities:
        if ineq.polynomial.nvars != 2:
            raise NotTwoParameter("boundary_2d needs exactly two parameters")
        if ineq.polynomial.degree > 2:
            raise NotQuadratic(
                f"inequality for {ineq.subbundle} has degree {ineq.polynomial.degree}"
            )
    lower = Surd(0, 0, 0, 1)
    upper = None
    for ineq in inequalities:
        c = [0, 0, 0]
        for (ea, eb), coeff in ineq.polynomial.terms.items():
            c[eb] += coeff
        c0, c1, c2 = c
        if c2 == 0:
            if c1 == 0:
                if c0 <= 0:
                    raise ValueError("inequality is never satisfied")
                continue
            root = Surd(-c0, 0, 0, c1)
            if c1 > 0:
                lower = max(lower, root)
            else:
                upper = root if upper is None else min(upper, root)
            continue
        disc = c1 * c1 - 4 * c2 * c0
        if disc < 0:
            if c2 < 0:
                raise ValueError("inequality is never satisfied")
            continue
        lo = Surd(-c1, -1, disc, 2 * c2)
        hi = Surd(-c1, 1, disc, 2 * c2)
        if c2 > 0:
            # positive outside the roots; on slopes > 0 the binding bound
            # is the larger root when it is positive
            zero = Surd(0, 0, 0, 1)
            if zero < lo:
                raise ValueError("positivity region is disconnected over t > 0")
            if zero < hi:
                lower = max(lower, hi)
        else:
            lo, hi = hi, lo
            lower = max(lower, lo)
            upper = hi if upper is None else min(upper, hi)
    if upper is None:
        raise ValueError("cone is unbounded above; no closed-form boundary")
    return Boundary2D(lower, upper)


def sigma_from_polarization(rep, p, polarization, budget=DEFAULT_BUDGET):
    """Integer character induced by an ample class on the Levi-level rep."""
    h = tuple(int(x) for x in polarization)
    if any(x <= 0 for x in h):
        raise NotAmple(f"polarization {h} has a non-positive entry")
    comps = levi_components(p)
    by_top = {c.highest_weight: c for c in comps}
    ordered = []
    for w in rep.quiver.vertices:
        comp = by_top.get(w)
        if comp is None:
            raise ValueError("rep vertices do not match the Levi components")
        ordered.append(comp)
    qpolys = intersection_polynomial(p, p.dim - 1, budget)
    qvals = [qpolys[pos].evaluate(h) for pos in range(len(p.sigma))]
    rk_total = p.dim
    c1_total = c1_picard(p.tangent_weights, p)
    deg_total = sum(c * v for c, v in zip(c1_total, qvals))
    values = []
    for comp in ordered:
        c1 = c1_picard(comp.weights, p)
        deg = sum(c * v for c, v in zip(c1, qvals))
        values.append(rk_total * deg - deg_total * comp.rank)
    if sum(v * d for v, d in zip(values, rep.dims)) != 0:
        raise RuntimeError("character does not annihilate the dimension vector")
    return SigmaCharacter(tuple(values), h)


class KingVerdict(NamedTuple):
    semistable: bool
    stable: bool
    witness: tuple | None


def is_sigma_semistable(rep, sigma):
    """King (semi)stability of a multiplicity-free representation.

    Subrepresentations are exactly the closed vertex subsets, so the
    verdict is an exhaustive check; the witness is the first violating
    (or slope-zero) proper subset in canonical order.
    """
    values = sigma.values
    total = sum(v * d for v, d in zip(values, rep.dims))
    subsets = closed_subsets(rep, reduce=False)
    if total != 0:
        return KingVerdict(False, False, None)
    for s in subsets:
        if sum(values[v] * rep.dims[v] for v in s) > 0:
            return KingVerdict(False, False, s)
    for s in subsets:
        if sum(values[v] * rep.dims[v] for v in s) == 0:
            return KingVerdict(True, False, s)
    return KingVerdict(True, True, None)


class EquivalenceReport(NamedTuple):
    entries: tuple        # (H, king_semistable, king_stable, cone_verdict)
    disagreements: tuple


def equivalence_check(p, polarization_grid, budget=DEFAULT_BUDGET):
    """Cross-check character verdicts against slope-cone verdicts.

    For every grid point the King verdict must match the cone verdict:
    semistable iff not UNSTABLE, stable iff STABLE.  The report lists any
    disagreement; agreement everywhere is the expected outcome.
    """
    inequalities = stability_cone(p, budget)
    trep = tangent_rep(p)
    entries = []
    disagreements = []
    for h in polarization_grid:
        h = tuple(int(x) for x in h)
        sigma = sigma_from_polarization(trep.levi_rep, p, h, budget)
        king = is_sigma_semistable(trep.levi_rep, sigma)
        verdict = cone_membership(inequalities, h)
        entries.append((h, king.semistable, king.stable, verdict))
        if king.semistable != (verdict != UNSTABLE) or king.stable != (
            verdict == STABLE
        ):
            disagreements.append(entries[-1])
    return EquivalenceReport(tuple(entries), tuple(disagreements))
