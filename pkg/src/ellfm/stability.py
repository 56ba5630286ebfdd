"""Slope and Gieseker numerics for torsion sheaves on the threefold.

Conventions for a two-dimensional sheaf with ch1 = p^*C:

    ch2 = sigma_*(alpha) + (k2/2) f      (k2 doubled so arithmetic stays in ZZ)
    ch3 = -n * [point]

and for a one-dimensional sheaf on the dual:

    ch2 = sigma_*(C) + m f,   chi as recorded.

Slopes are computed twice wherever a closed form exists: once through the
intersection ring and once through the closed form, with exact agreement
enforced.  For omega = t*Theta - s*p^*K_B and effective nonzero C this is

    mu = [2(t-s) K_B.alpha + t k2] / [t (2s-t) |K_B.C|]
    nu = 2 chi / [t (2s-t) |K_B.C|]

The destabilizer bookkeeping (sets S and S', the function f_s, and the
threshold s1) and the K3-pencil quantities (discriminant delta, Bogomolov
Delta, wall bounds, Gamma compositions, t2, wall functions eta) follow the
same exact-rational discipline.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .base_geometry import (
    BaseClass,
    BaseSurface,
    enumerate_subeffective,
    is_effective_base,
    pair_base,
)
from .errors import InvariantViolation
from .weierstrass import CurveX, mult_div_div, pair_div_curve, polarization, pullback

Rat = int | Fraction


@dataclass(frozen=True)
class Dim2Chern:
    """Numerical invariants (C, alpha, k2, n) of a two-dimensional sheaf."""

    C: BaseClass
    alpha: BaseClass
    k2: int
    n: int

    def vertical(self) -> bool:
        return self.alpha.is_zero()

    def validate(self, B: BaseSurface) -> None:
        if len(self.C) != B.rank or len(self.alpha) != B.rank:
            raise ValueError("class length does not match base rank")
        if not (self.C.is_integral() and self.alpha.is_integral()):
            raise ValueError("Chern data must be integral")
        if self.vertical() and (self.k2 - pair_base(B, B.canonical, self.C)) % 2 != 0:
            raise ValueError("parity violated: k2 must be congruent to K_B.C mod 2 "
                             "for a vertical class")


@dataclass(frozen=True)
class Dim1Chern:
    """Numerical invariants (C, m, chi) of a one-dimensional sheaf."""

    C: BaseClass
    m: int
    chi: int


@dataclass(frozen=True)
class KahlerParams:
    """Polarization omega = t*Theta - s*p^*K_B; valid for s > t > 0."""

    t: Fraction
    s: Fraction

    def __init__(self, t, s):
        t, s = Fraction(t), Fraction(s)
        if not s > t > 0:
            raise ValueError(f"polarization needs s > t > 0, got t={t}, s={s}")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "s", s)

    @property
    def main_regime(self) -> bool:
        """Whether s > 1, the regime of the transform comparison results."""
        return self.s > 1


@dataclass(frozen=True)
class SElement:
    Cprime: BaseClass
    l: int
    m: int


@dataclass(frozen=True)
class K3Invariants:
    """Invariants (r, m, l, n) of a sheaf on a union of K3 fibers:
    ch1 = r D, ch2 = m Xi + l f, ch3 = -n [point]."""

    r: int
    m: int
    l: int
    n: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("K3 invariants need r >= 1")


class Ordering(enum.Enum):
    BELOW = "below"
    EQUAL_BELOW = "equal_below"
    EQUAL_EQUAL = "equal_equal"
    ABOVE = "above"


# ---------------------------------------------------------------------------
# slopes


def _abs_kc(B: BaseSurface, C: BaseClass) -> int:
    """|K_B.C| for effective nonzero C (where K_B.C < 0 on a Fano base)."""
    kc = pair_base(B, B.canonical, C)
    return -kc if kc < 0 else kc


def _require_effective_nonzero(B: BaseSurface, C: BaseClass) -> None:
    if C.is_zero():
        raise ValueError("support class C must be nonzero")
    if not is_effective_base(B, C):
        raise ValueError(f"support class {C.coords} is not effective on {B.name}")


def _half_area(B: BaseSurface, gamma: Dim2Chern, omega: KahlerParams) -> Fraction:
    """(omega^2 . ch1) / 2 through the intersection ring."""
    w = polarization(B, omega.t, omega.s)
    return Fraction(pair_div_curve(pullback(B, gamma.C), mult_div_div(w, w)), 2)


def slope_dim2(B: BaseSurface, gamma: Dim2Chern, omega: KahlerParams) -> Fraction:
    """mu = (omega . ch2) / (omega^2 . ch1 / 2), exact.

    Evaluated through the ring and through the closed form; the two must
    agree.
    """
    gamma.validate(B)
    _require_effective_nonzero(B, gamma.C)
    w = polarization(B, omega.t, omega.s)
    ch2 = CurveX(Fraction(gamma.k2, 2), gamma.alpha, B)
    ring = Fraction(pair_div_curve(w, ch2)) / _half_area(B, gamma, omega)

    t, s = omega.t, omega.s
    ka = pair_base(B, B.canonical, gamma.alpha)
    closed = Fraction(2 * (t - s) * ka + t * gamma.k2,
                      t * (2 * s - t) * _abs_kc(B, gamma.C))
    if ring != closed:
        raise InvariantViolation(f"slope mismatch: ring {ring} vs closed form {closed}")
    return ring


def nu_dim2(B: BaseSurface, gamma: Dim2Chern, omega: KahlerParams,
            chi: Rat | None = None) -> Fraction:
    """nu = chi / (omega^2 . ch1 / 2); chi defaults to chi_dim2."""
    gamma.validate(B)
    _require_effective_nonzero(B, gamma.C)
    if chi is None:
        chi = chi_dim2(B, gamma)
    return Fraction(chi) / _half_area(B, gamma, omega)


def chi_dim2(B: BaseSurface, gamma: Dim2Chern) -> int:
    """Euler characteristic -n + c1(B).C.

    Derived convention: Riemann-Roch with the standard Weierstrass second
    Chern class, for which c2(X).p^*C = 12 c1(B).C.  Comparison results that
    take chi as input are independent of this choice.
    """
    return -gamma.n - pair_base(B, B.canonical, gamma.C)


def slope_dim1(B: BaseSurface, gammahat: Dim1Chern, omega: KahlerParams) -> Fraction:
    """chi / (omega . ch2) for a one-dimensional sheaf, with t = 1."""
    if omega.t != 1:
        raise ValueError("dimension-one slopes use the polarization Theta - s p^*K_B (t = 1)")
    w = polarization(B, 1, omega.s)
    denom = pair_div_curve(w, CurveX(gammahat.m, gammahat.C, B))
    if denom == 0:
        raise ValueError("omega . ch2 vanishes; slope undefined")
    return Fraction(gammahat.chi, denom)


def restriction_chi(B: BaseSurface, gamma: Dim2Chern, H: BaseClass):
    """chi of the restriction to the vertical divisor over H: equal to
    H . alpha, hence 0 for vertical invariants."""
    return pair_base(B, H, gamma.alpha)


def section_restriction(B: BaseSurface, gamma: Dim2Chern):
    """Invariants of the restriction to the canonical section:
    (ch1, ch2-coefficient, chi) = (C, c + K_B.alpha, c + K_B.alpha + |K_B.C|/2)
    with c = k2/2."""
    _require_effective_nonzero(B, gamma.C)
    c = Fraction(gamma.k2, 2)
    ka = pair_base(B, B.canonical, gamma.alpha)
    ch2 = c + ka
    chi = ch2 + Fraction(_abs_kc(B, gamma.C), 2)
    return gamma.C, ch2, chi


# ---------------------------------------------------------------------------
# destabilizer sets and the threshold s1


def _context_chi(B: BaseSurface, C: BaseClass, k2: int) -> Fraction:
    return Fraction(k2 - pair_base(B, B.canonical, C), 2)


def enumerate_S(B: BaseSurface, C: BaseClass, k2: int, n: int) -> list[SElement]:
    """The finite set S(C, k, n) of candidate destabilizer invariants.

    Elements (C', l, m) with C' and C - C' effective, l >= 0,
    |K_B.C| l - |K_B.C'| chi <= 0 and 0 <= m <= n, where
    chi = k - K_B.C/2 >= 1.
    """
    _require_effective_nonzero(B, C)
    chi = _context_chi(B, C, k2)
    if chi < 1:
        raise ValueError(f"context requires chi >= 1, got chi = {chi}")
    if n < 0:
        raise ValueError("context requires n >= 0")
    kc = _abs_kc(B, C)
    out = []
    for Cp in enumerate_subeffective(B, C):
        kcp = _abs_kc(B, Cp)
        # kc * l <= kcp * chi caps l; kc >= 1 on a Fano base
        lmax = int(Fraction(kcp) * chi / kc)
        for l in range(lmax + 1):
            if kc * l - kcp * chi > 0:
                continue
            for m in range(n + 1):
                out.append(SElement(Cp, l, m))
    return out


def enumerate_Sprime(B: BaseSurface, C: BaseClass, k2: int, n: int) -> list[SElement]:
    """The subset of S(C, k, n) with |K_B.C| l - |K_B.C'| chi <= -1."""
    chi = _context_chi(B, C, k2)
    kc = _abs_kc(B, C)
    return [e for e in enumerate_S(B, C, k2, n)
            if kc * e.l - _abs_kc(B, e.Cprime) * chi <= -1]


def f_s_value(B: BaseSurface, s: Rat, e: SElement, C: BaseClass, k2: int, n: int) -> Fraction:
    """f_s(C', l, m) = (s-1)(|K_B.C| l - |K_B.C'| chi) + (n l - m chi)."""
    chi = _context_chi(B, C, k2)
    kc = _abs_kc(B, C)
    d1 = kc * e.l - _abs_kc(B, e.Cprime) * chi
    if d1 > -1 or e not in enumerate_S(B, C, k2, n):
        raise ValueError(f"element {e} is not in S'(C, k, n)")
    return (Fraction(s) - 1) * d1 + (n * e.l - e.m * chi)


def compute_s1(B: BaseSurface, C: BaseClass, k2: int, n: int) -> Fraction:
    """Threshold s1 >= 1 with f_s < 0 on all of S' for every s > s1.

    Returned as an exact infimum; callers must take s strictly larger.
    Equals 1 when S' is empty or every element has n l - m chi <= 0.
    """
    chi = _context_chi(B, C, k2)
    kc = _abs_kc(B, C)
    best = Fraction(1)
    for e in enumerate_Sprime(B, C, k2, n):
        d1 = kc * e.l - _abs_kc(B, e.Cprime) * chi
        d2 = n * e.l - e.m * chi
        best = max(best, 1 + Fraction(d2) / (-d1))
    return best


# ---------------------------------------------------------------------------
# K3-pencil discriminants, walls, thresholds


def delta_discriminant(v: K3Invariants) -> Fraction:
    """delta = n - m(m - l)/r."""
    return Fraction(v.n) - Fraction(v.m * (v.m - v.l), v.r)


def delta_nonnegative(v: K3Invariants) -> bool:
    """Validity check for semistable sheaves on reduced K3 fibers."""
    return delta_discriminant(v) >= 0


def bogomolov_Delta(r: int, ch1_sq: Rat, n: int) -> Fraction:
    """Delta = n + ch1^2 / (2r)."""
    if r < 1:
        raise ValueError("rank must be >= 1")
    return Fraction(n) + Fraction(ch1_sq) / (2 * r)


def wall_bound_ts(r: int, delta: Rat) -> Fraction:
    """Lower bound 2 / (1 + r^3 delta) on t/s at a wall for rank r and
    discriminant delta."""
    if r < 1:
        raise ValueError("rank must be >= 1")
    delta = Fraction(delta)
    if delta < 0:
        raise ValueError("wall bound needs delta >= 0")
    return Fraction(2) / (1 + r ** 3 * delta)


def enumerate_Gamma(n: int, r: int) -> list[tuple[tuple[int, int], ...]]:
    """Ordered decompositions ((n_1, r_1), ..., (n_j, r_j)) with r_i >= 1,
    n_i >= 0, sum r_i = r, sum n_i = n, 1 <= j <= r."""
    if r < 1 or n < 0:
        raise ValueError("need r >= 1 and n >= 0")
    out = []
    for j in range(1, r + 1):
        rs = [c for c in itertools.product(range(1, r + 1), repeat=j) if sum(c) == r]
        ns = [c for c in itertools.product(range(n + 1), repeat=j) if sum(c) == n]
        for rtuple in rs:
            for ntuple in ns:
                out.append(tuple(zip(ntuple, rtuple)))
    return out


def compute_t2(r: int, n: int, s: Rat) -> Fraction:
    """Largest t with t/s < 2/(1 + r_i^3 n_i) for every part of every
    element of Gamma(n, r).

    Computed by enumeration and checked against the closed form
    2s/(1 + r^3 n); the minimizing part is (n, r) itself.
    """
    s = Fraction(s)
    if s <= 0:
        raise ValueError("need s > 0")
    bound = min(Fraction(2, 1 + ri ** 3 * ni)
                for element in enumerate_Gamma(n, r)
                for (ni, ri) in element)
    t2 = s * bound
    closed = Fraction(2) * s / (1 + r ** 3 * n)
    if t2 != closed:
        raise InvariantViolation(f"t2 enumeration {t2} disagrees with closed form {closed}")
    return t2


@dataclass(frozen=True)
class EtaWall:
    """The linear wall function eta(t'') = intercept + coeff * t'' attached
    to candidate invariants gamma'."""

    coeff: Fraction
    intercept: Fraction

    @property
    def identically_zero(self) -> bool:
        return self.coeff == 0 and self.intercept == 0

    @property
    def root(self) -> Fraction | None:
        if self.coeff == 0:
            return None
        return -self.intercept / self.coeff


def eta_wall(gamma_prime: K3Invariants, gamma: K3Invariants, s: Rat) -> EtaWall:
    """eta(t'') = (2m'/r') s - ((2m'-l')/r' + l/r) t''.

    Its root is the polarization parameter where the slopes of gamma' and
    gamma cross.
    """
    s = Fraction(s)
    intercept = Fraction(2 * gamma_prime.m, gamma_prime.r) * s
    coeff = -(Fraction(2 * gamma_prime.m - gamma_prime.l, gamma_prime.r)
              + Fraction(gamma.l, gamma.r))
    return EtaWall(coeff=coeff, intercept=intercept)


def jh_constraints(gamma: K3Invariants, parts: list[K3Invariants]) -> bool:
    """Consequences of an irrational t/s for Jordan-Holder factors: each part
    has m_i = 0 and l_i/r_i = l/r, and the parts add up to gamma."""
    if not parts:
        raise ValueError("need at least one factor")
    if sum(p.r for p in parts) != gamma.r:
        return False
    if sum(p.n for p in parts) != gamma.n:
        return False
    if sum(p.l for p in parts) != gamma.l:
        return False
    return all(p.m == 0 and p.l * gamma.r == gamma.l * p.r for p in parts)


def delta_additivity_deficit(g1: K3Invariants, g2: K3Invariants) -> Fraction:
    """delta(E) - delta(E_1) - delta(E_2) for an extension with the given
    invariants; computed both from the discriminants and from the closed
    form (r1 m2 - r2 m1)[(r1 m2 - r2 m1) - (r1 l2 - r2 l1)] / (r1 r2 (r1+r2))."""
    total = K3Invariants(g1.r + g2.r, g1.m + g2.m, g1.l + g2.l, g1.n + g2.n)
    direct = (delta_discriminant(total) - delta_discriminant(g1)
              - delta_discriminant(g2))
    a = g1.r * g2.m - g2.r * g1.m
    b = g1.r * g2.l - g2.r * g1.l
    closed = Fraction(a * (a - b), g1.r * g2.r * (g1.r + g2.r))
    if direct != closed:
        raise InvariantViolation(f"additivity deficit mismatch: {direct} vs {closed}")
    return direct


def check_destabilizer(B: BaseSurface, sub: Dim2Chern, chi_sub: Rat,
                       whole: Dim2Chern, chi_whole: Rat,
                       omega: KahlerParams) -> Ordering:
    """Lexicographic Gieseker comparison of (mu, nu) for sub against whole."""
    mu_s = slope_dim2(B, sub, omega)
    mu_w = slope_dim2(B, whole, omega)
    if mu_s < mu_w:
        return Ordering.BELOW
    if mu_s > mu_w:
        return Ordering.ABOVE
    nu_s = nu_dim2(B, sub, omega, chi=chi_sub)
    nu_w = nu_dim2(B, whole, omega, chi=chi_whole)
    if nu_s < nu_w:
        return Ordering.EQUAL_BELOW
    if nu_s > nu_w:
        return Ordering.ABOVE
    return Ordering.EQUAL_EQUAL
