"""Picard lattices of Fano base surfaces.

A base surface is described by an integral intersection form on its Picard
lattice, the coordinates of the canonical class, and the extremal generators
of the effective cone.  Curve and divisor classes share one coordinate type:
the intersection form is unimodular, so the two lattices are identified.

Built-in presets cover the bases used for elliptic K3 pencils:

* ``P2`` - the projective plane, basis (h), K = -3h;
* ``F0`` - the quadric P1 x P1, basis (C0, Xi) the two rulings, K = -2C0 - 2Xi;
* ``F1`` - the Hirzebruch surface, basis (C0, Xi) with C0^2 = -1 the section
  and Xi the ruling fiber, K = -2C0 - 3Xi.

Effective cones are required to be simplicial: the generators must be
linearly independent, and effectivity means membership in the monoid of
non-negative integer combinations of the generators.  All preset cones are
of this form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantViolation

Rat = int | Fraction


def _as_rat(x) -> Rat:
    if isinstance(x, (int, Fraction)):
        return x
    raise TypeError(f"expected integer or Fraction coordinate, got {type(x).__name__}")


@dataclass(frozen=True)
class BaseClass:
    """A divisor/curve class on the base in the chosen lattice basis."""

    coords: tuple[Rat, ...]

    def __init__(self, coords):
        object.__setattr__(self, "coords", tuple(_as_rat(c) for c in coords))

    def __len__(self):
        return len(self.coords)

    def __add__(self, other: "BaseClass") -> "BaseClass":
        return BaseClass(tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))

    def __sub__(self, other: "BaseClass") -> "BaseClass":
        return BaseClass(tuple(a - b for a, b in zip(self.coords, other.coords, strict=True)))

    def __neg__(self) -> "BaseClass":
        return BaseClass(tuple(-a for a in self.coords))

    def __rmul__(self, c: Rat) -> "BaseClass":
        return BaseClass(tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.coords)


def zero_class(rank: int) -> BaseClass:
    return BaseClass((0,) * rank)


@dataclass(frozen=True)
class BaseSurface:
    """Fano base lattice: intersection form, canonical class, effective cone."""

    name: str
    rank: int
    gram: tuple[tuple[int, ...], ...]
    canonical: BaseClass
    effective_generators: tuple[BaseClass, ...]

    def __repr__(self):
        return f"BaseSurface({self.name!r}, rank={self.rank})"

    @property
    def minus_canonical(self) -> BaseClass:
        return -self.canonical

    def k_squared(self) -> Rat:
        return pair_base(self, self.canonical, self.canonical)


def _det(rows: list[list[Fraction]]) -> Fraction:
    """Determinant by fraction-free Gaussian elimination (matrices are tiny)."""
    n = len(rows)
    m = [list(map(Fraction, r)) for r in rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor:
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def _solve(columns: list[BaseClass], target: BaseClass) -> tuple[Fraction, ...] | None:
    """Solve sum_i x_i columns[i] = target exactly; None if inconsistent.

    The columns are required to be linearly independent, so a solution is
    unique when it exists.
    """
    rank = len(target)
    ncols = len(columns)
    aug = [[Fraction(col.coords[r]) for col in columns] + [Fraction(target.coords[r])]
           for r in range(rank)]
    row = 0
    pivots = []
    for col in range(ncols):
        piv = next((r for r in range(row, rank) if aug[r][col] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [v * inv for v in aug[row]]
        for r in range(rank):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    if len(pivots) < ncols:
        raise ValueError("effective generators are linearly dependent (non-simplicial cone)")
    # rows past the pivot block must be zero for consistency
    for r in range(row, rank):
        if aug[r][ncols] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        sol[col] = aug[i][ncols]
    return tuple(sol)


_PRESETS: dict[str, dict] = {
    "P2": {
        "gram": ((1,),),
        "canonical": (-3,),
        "effective": ((1,),),
    },
    "F0": {
        "gram": ((0, 1), (1, 0)),
        "canonical": (-2, -2),
        "effective": ((1, 0), (0, 1)),
    },
    "F1": {
        "gram": ((-1, 1), (1, 0)),
        "canonical": (-2, -3),
        "effective": ((1, 0), (0, 1)),
    },
}


def preset_names() -> tuple[str, ...]:
    return tuple(_PRESETS)


def make_base(preset_or_gram, canonical=None, effective_generators=None,
              name: str = "custom") -> BaseSurface:
    """Build and validate a base surface.

    Either pass a preset name ("P2", "F0", "F1"), or a gram matrix together
    with ``canonical`` and ``effective_generators``.  Validation enforces:
    symmetric unimodular gram, -K pairing strictly positively with every
    effective generator, and linearly independent (simplicial) generators.
    """
    if isinstance(preset_or_gram, str):
        key = preset_or_gram.strip().upper()
        if key not in _PRESETS:
            raise ValueError(f"unknown base preset {preset_or_gram!r}; "
                             f"choose from {sorted(_PRESETS)}")
        data = _PRESETS[key]
        return make_base(data["gram"], data["canonical"], data["effective"], name=key)

    gram = tuple(tuple(int(v) for v in row) for row in preset_or_gram)
    rank = len(gram)
    if rank < 1:
        raise ValueError("base needs Picard rank >= 1")
    if any(len(row) != rank for row in gram):
        raise ValueError("gram matrix must be square")
    if any(gram[i][j] != gram[j][i] for i in range(rank) for j in range(rank)):
        raise ValueError("gram matrix must be symmetric")
    if abs(_det([list(r) for r in gram])) != 1:
        raise ValueError("gram matrix must be unimodular (|det| = 1)")
    if canonical is None or effective_generators is None:
        raise ValueError("custom base needs canonical class and effective generators")
    K = canonical if isinstance(canonical, BaseClass) else BaseClass(canonical)
    if len(K) != rank:
        raise ValueError("canonical class has wrong length")
    gens = tuple(g if isinstance(g, BaseClass) else BaseClass(g) for g in effective_generators)
    for g in gens:
        if len(g) != rank:
            raise ValueError("effective generator has wrong length")
        if not g.is_integral():
            raise ValueError("effective generators must be integral")
    if len(gens) > rank:
        raise ValueError("more effective generators than rank (non-simplicial cone)")
    surface = BaseSurface(name=name, rank=rank, gram=gram, canonical=K,
                          effective_generators=gens)
    for g in gens:
        if pair_base(surface, surface.minus_canonical, g) <= 0:
            raise ValueError("base is not Fano: -K does not pair positively with "
                             f"effective generator {g.coords}")
    # force the independence check now rather than on first membership query
    _solve(list(gens), zero_class(rank))
    return surface


def pair_base(B: BaseSurface, a: BaseClass, b: BaseClass) -> Rat:
    """Intersection pairing a . b on the base."""
    if len(a) != B.rank or len(b) != B.rank:
        raise ValueError("class length does not match base rank")
    total = 0
    for i, ai in enumerate(a.coords):
        if ai == 0:
            continue
        row = B.gram[i]
        total += ai * sum(row[j] * bj for j, bj in enumerate(b.coords) if bj != 0)
    return total


def effective_coefficients(B: BaseSurface, C: BaseClass) -> tuple[int, ...] | None:
    """Coefficients of C over the effective generators, or None if C is not
    a non-negative integer combination of them."""
    if len(C) != B.rank:
        raise ValueError("class length does not match base rank")
    sol = _solve(list(B.effective_generators), C)
    if sol is None:
        return None
    if any(x < 0 or x.denominator != 1 for x in sol):
        return None
    return tuple(int(x) for x in sol)


def is_effective_base(B: BaseSurface, C: BaseClass) -> bool:
    """Cone membership; the zero class counts as effective."""
    return effective_coefficients(B, C) is not None


def enumerate_subeffective(B: BaseSurface, C: BaseClass) -> list[BaseClass]:
    """All classes C' with C' and C - C' both effective, in lexicographic
    coordinate order.  Always contains 0 and C."""
    coeffs = effective_coefficients(B, C)
    if coeffs is None:
        raise ValueError(f"class {C.coords} is not effective on {B.name}")
    gens = B.effective_generators
    out = []
    for combo in itertools.product(*(range(a + 1) for a in coeffs)):
        cls = zero_class(B.rank)
        for c, g in zip(combo, gens):
            cls = cls + c * g
        out.append(cls)
    out.sort(key=lambda cls: cls.coords)
    return out


def is_ample_base(B: BaseSurface, eta: BaseClass) -> bool:
    """Nakai test on the effective cone: eta.g > 0 on every generator and
    eta^2 > 0."""
    if any(pair_base(B, eta, g) <= 0 for g in B.effective_generators):
        return False
    return pair_base(B, eta, eta) > 0


def base_to_json(B: BaseSurface) -> dict:
    return {
        "name": B.name,
        "gram": [list(row) for row in B.gram],
        "canonical": list(B.canonical.coords),
        "effective": [list(g.coords) for g in B.effective_generators],
    }


def base_from_json(data: dict) -> BaseSurface:
    return make_base(data["gram"], data["canonical"], data["effective"],
                     name=data.get("name", "custom"))


def assert_unimodular(B: BaseSurface) -> None:
    d = _det([list(r) for r in B.gram])
    if abs(d) != 1:
        raise InvariantViolation(f"|det| = {abs(d)} != 1 for base {B.name}")
