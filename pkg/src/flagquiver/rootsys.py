"""ADE root systems with exact integer arithmetic.

All weights are stored in doubled epsilon-coordinates (twice the usual
coordinates), so the half-integer entries of the E series stay integral
and every computation is exact.  Root systems are immutable once built
and cached per (series, rank).
"""
from __future__ import annotations

from fractions import Fraction

from .errors import MismatchedSystem, OppositeRoots, UnsupportedType

SERIES_A = "A"
SERIES_D = "D"
SERIES_E = "E"

_POSITIVE_ROOT_COUNTS = {
    SERIES_A: lambda n: (n + 1) * n // 2,
    SERIES_D: lambda n: n * (n - 1),
    SERIES_E: lambda n: {6: 36, 7: 63, 8: 120}[n],
}


def _dot2(u, v):
    return sum(a * b for a, b in zip(u, v))


class Weight:
    """Lattice weight in doubled coordinates, tied to its root system."""

    __slots__ = ("coords2", "system")

    def __init__(self, coords2, system):
        self.coords2 = tuple(coords2)
        self.system = system
        if len(self.coords2) != system.ambient_dim:
            raise ValueError(
                f"expected {system.ambient_dim} coordinates, got {len(self.coords2)}"
            )

    def _check(self, other):
        if not isinstance(other, Weight):
            raise TypeError("expected a Weight")
        if self.system is not other.system:
            raise MismatchedSystem("weights belong to different root systems")

    def __add__(self, other):
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.coords2, other.coords2)), self.system)

    def __sub__(self, other):
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.coords2, other.coords2)), self.system)

    def __neg__(self):
        return Weight(tuple(-a for a in self.coords2), self.system)

    def __eq__(self, other):
        return (
            isinstance(other, Weight)
            and self.coords2 == other.coords2
            and self.system is other.system
        )

    def __hash__(self):
        return hash(self.coords2)

    def __repr__(self):
        return f"Weight{self.coords2}"

    @property
    def is_zero(self):
        return all(c == 0 for c in self.coords2)

    @property
    def is_root(self):
        return self.coords2 in self.system._expansions

    @property
    def fundamental(self):
        """Pairings against all simple coroots, in index order."""
        return tuple(coroot_pairing(self, a) for a in self.system.simple_roots)


class RootSystemData:
    """Immutable root system of type A, D or E.

    Attributes mirror the standard combinatorial data: ``simple_roots``,
    ``positive_roots`` (sorted by height then coordinates), the Cartan
    matrix and a sign table for the Chevalley structure constants.
    """

    def __init__(self, series, rank):
        series = str(series).upper()
        if series == SERIES_A:
            if rank < 1:
                raise UnsupportedType(f"A requires rank >= 1, got {rank}")
            ambient = rank + 1
        elif series == SERIES_D:
            if rank < 4:
                raise UnsupportedType(f"D requires rank >= 4, got {rank}")
            ambient = rank
        elif series == SERIES_E:
            if rank not in (6, 7, 8):
                raise UnsupportedType(f"E requires rank 6, 7 or 8, got {rank}")
            ambient = 8
        else:
            raise UnsupportedType(f"series {series!r} is not simply laced (ADE only)")

        self.series = series
        self.rank = rank
        self.ambient_dim = ambient
        self.simple_roots = tuple(
            Weight(c, self) for c in _simple_coords(series, rank, ambient)
        )
        self._enumerate_positive_roots()
        self.negative_roots = tuple(-r for r in self.positive_roots)
        self.roots = self.positive_roots + self.negative_roots
        for r, exp in list(self._expansions.items()):
            self._expansions[tuple(-c for c in r)] = tuple(-e for e in exp)
        self.cartan_matrix = tuple(
            tuple(coroot_pairing(b, a) for b in self.simple_roots)
            for a in self.simple_roots
        )
        # Bimultiplicative sign function: -1 on the diagonal and on Dynkin
        # edges (i, j) with i > j, +1 elsewhere, encoded as bitmasks.
        self._eps_masks = []
        for i in range(rank):
            mask = 1 << i
            for j in range(rank):
                if i > j and self.cartan_matrix[i][j] == -1:
                    mask |= 1 << j
            self._eps_masks.append(mask)
        two_rho = [0] * ambient
        for r in self.positive_roots:
            for k, c in enumerate(r.coords2):
                two_rho[k] += c
        self.rho = Weight(tuple(c // 2 for c in two_rho), self)
        self._chevalley_table = None

    def _enumerate_positive_roots(self):
        simples = [w.coords2 for w in self.simple_roots]
        expansions = {}
        for i, c in enumerate(simples):
            e = [0] * self.rank
            e[i] = 1
            expansions[c] = tuple(e)
        frontier = list(simples)
        while frontier:
            nxt = []
            for rc in frontier:
                for i, sc in enumerate(simples):
                    cand = tuple(a + b for a, b in zip(rc, sc))
                    if cand in expansions:
                        continue
                    below = tuple(a - b for a, b in zip(rc, sc))
                    p = 1 if below in expansions else 0
                    if p - _dot2(rc, sc) // 4 >= 1:
                        e = list(expansions[rc])
                        e[i] += 1
                        expansions[cand] = tuple(e)
                        nxt.append(cand)
            frontier = nxt
        ordered = sorted(expansions, key=lambda c: (sum(expansions[c]), c))
        self.positive_roots = tuple(Weight(c, self) for c in ordered)
        self._expansions = expansions

    def weight(self, coords2):
        """Build a weight of this system from doubled coordinates."""
        return Weight(tuple(int(c) for c in coords2), self)

    def simple_root(self, i):
        """Simple root by 1-based index."""
        return self.simple_roots[i - 1]

    def expansion(self, root):
        """Coefficients of a root over the simple roots."""
        exp = self._expansions.get(root.coords2)
        if exp is None:
            raise ValueError(f"{root} is not a root")
        return exp

    def height(self, root):
        return sum(self.expansion(root))

    @property
    def chevalley_sign(self):
        """Full sign table over ordered root pairs (built on first use)."""
        if self._chevalley_table is None:
            table = {}
            for a in self.roots:
                for b in self.roots:
                    if (a + b).coords2 == (0,) * self.ambient_dim:
                        continue
                    table[(a.coords2, b.coords2)] = chevalley_constant(a, b)
            self._chevalley_table = table
        return self._chevalley_table

    def __repr__(self):
        return f"RootSystemData({self.series}{self.rank})"


def _simple_coords(series, rank, ambient):
    coords = []
    if series == SERIES_A:
        for i in range(rank):
            c = [0] * ambient
            c[i], c[i + 1] = 2, -2
            coords.append(tuple(c))
    elif series == SERIES_D:
        for i in range(rank - 1):
            c = [0] * ambient
            c[i], c[i + 1] = 2, -2
            coords.append(tuple(c))
        c = [0] * ambient
        c[rank - 2] = c[rank - 1] = 2
        coords.append(tuple(c))
    else:
        coords.append((1, -1, -1, -1, -1, -1, -1, 1))
        coords.append((2, 2, 0, 0, 0, 0, 0, 0))
        for i in range(rank - 2):
            c = [0] * ambient
            c[i], c[i + 1] = -2, 2
            coords.append(tuple(c))
    return coords


_SYSTEM_CACHE = {}


def build_root_system(series, rank):
    """Construct (and cache) the root system for a valid ADE pair."""
    key = (str(series).upper(), int(rank))
    if key not in _SYSTEM_CACHE:
        _SYSTEM_CACHE[key] = RootSystemData(*key)
    return _SYSTEM_CACHE[key]


def coroot_pairing(lam, alpha):
    """Integer pairing <lam, alpha^vee> of a weight with a coroot.

    In the simply-laced normalization (roots of squared length 2) this is
    the inner product (lam, alpha).
    """
    if lam.system is not alpha.system:
        raise MismatchedSystem("weight and root belong to different systems")
    if not alpha.is_root:
        raise ValueError(f"{alpha} is not a root")
    q, r = divmod(_dot2(lam.coords2, alpha.coords2), 4)
    if r:
        raise ValueError(f"{lam} is not in the weight lattice")
    return q


def is_dominant(lam):
    """Whether a weight pairs nonnegatively with every simple coroot."""
    return all(coroot_pairing(lam, a) >= 0 for a in lam.system.simple_roots)


def chevalley_constant(alpha, beta):
    """Structure constant N in [e_alpha, e_beta] = N e_{alpha+beta}.

    Nonzero (and equal to +-1) exactly when alpha + beta is a root.  Signs
    come from a bimultiplicative function on the root lattice fixed by an
    orientation of the Dynkin diagram; in type A this reproduces the
    matrix-unit brackets [e_ih, e_hk] = e_ik.
    """
    if alpha.system is not beta.system:
        raise MismatchedSystem("roots belong to different systems")
    system = alpha.system
    ea = system._expansions.get(alpha.coords2)
    eb = system._expansions.get(beta.coords2)
    if ea is None or eb is None:
        raise ValueError("chevalley_constant expects roots")
    s = tuple(a + b for a, b in zip(alpha.coords2, beta.coords2))
    if all(c == 0 for c in s):
        raise OppositeRoots(f"{alpha} and {beta} are opposite roots")
    if s not in system._expansions:
        return 0
    bmask = 0
    for j, c in enumerate(eb):
        if c & 1:
            bmask |= 1 << j
    parity = 0
    for i, c in enumerate(ea):
        if c & 1:
            parity ^= (bmask & system._eps_masks[i]).bit_count() & 1
    return -1 if parity else 1


def h0_dimension(lam):
    """Dimension of the space of sections of the line/vector bundle E_lam.

    Zero for non-dominant weights, otherwise the Weyl dimension formula
    evaluated exactly.
    """
    if not is_dominant(lam):
        return 0
    system = lam.system
    rho2 = system.rho.coords2
    num2 = tuple(a + b for a, b in zip(lam.coords2, rho2))
    dim = Fraction(1)
    for alpha in system.positive_roots:
        dim *= Fraction(_dot2(num2, alpha.coords2), _dot2(rho2, alpha.coords2))
    if dim.denominator != 1:
        raise ValueError("Weyl dimension did not come out integral")
    return int(dim)
