"""Bundled domain structures and the twisted module-action primitives.

All records are frozen dataclasses: pure data, safe to share, compared
fieldwise. Nothing is validated mathematically at construction time; the
checkers in :mod:`bihom.axioms` do that and report violations as data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, NonCommutingMaps, NonMultiplicativeMap
from .exactcore import (
    Comul, Covec, Elem2, Elem3, Endo, Mul, Q, Vec, ZERO, mul_apply,
)


@dataclass(frozen=True)
class Algebra:
    """A BiHom-associative algebra (A, mul, alpha, beta) with optional unit."""

    dim: int
    mul: Mul
    alpha: Endo
    beta: Endo
    unit: Vec | None = None

    def __post_init__(self):
        for part in (self.mul, self.alpha, self.beta):
            if part.dim != self.dim:
                raise DimensionMismatch("algebra parts disagree on dim")
        if self.unit is not None and self.unit.dim != self.dim:
            raise DimensionMismatch("unit vector has wrong dim")

    def product(self, a: Vec, b: Vec) -> Vec:
        return mul_apply(self.mul, a, b)


@dataclass(frozen=True)
class Coalgebra:
    """A BiHom-coassociative coalgebra (C, comul, psi, omega), optional counit."""

    dim: int
    comul: Comul
    psi: Endo
    omega: Endo
    counit: Covec | None = None

    def __post_init__(self):
        for part in (self.comul, self.psi, self.omega):
            if part.dim != self.dim:
                raise DimensionMismatch("coalgebra parts disagree on dim")
        if self.counit is not None and self.counit.dim != self.dim:
            raise DimensionMismatch("counit has wrong dim")


@dataclass(frozen=True)
class Bialgebra:
    """An algebra and a coalgebra on one space, coupled at weight lambda."""

    algebra: Algebra
    coalgebra: Coalgebra
    weight: Q

    def __post_init__(self):
        object.__setattr__(self, "weight", Q(self.weight))
        if self.algebra.dim != self.coalgebra.dim:
            raise DimensionMismatch("bialgebra substructures live on different spaces")

    @property
    def dim(self) -> int:
        return self.algebra.dim


def _check_rank3(tensor, dims: tuple[int, int, int], what: str):
    a, b, c = dims
    if len(tensor) != a or any(len(p) != b for p in tensor) or any(
            len(row) != c for p in tensor for row in p):
        raise DimensionMismatch(f"{what} tensor has wrong shape")


def _freeze3(tensor):
    return tuple(tuple(tuple(Q(x) for x in row) for row in plane) for plane in tensor)


@dataclass(frozen=True)
class LeftModule:
    """Left action of an algebra: e_i |> f_p = sum_q action[i][p][q] f_q."""

    over: Algebra
    dim: int
    action: tuple
    alpha_m: Endo
    beta_m: Endo

    def __post_init__(self):
        object.__setattr__(self, "action", _freeze3(self.action))
        _check_rank3(self.action, (self.over.dim, self.dim, self.dim), "left action")
        if self.alpha_m.dim != self.dim or self.beta_m.dim != self.dim:
            raise DimensionMismatch("module maps have wrong dim")

    def act(self, a: Vec, m: Vec) -> Vec:
        out = [ZERO] * self.dim
        for i in range(self.over.dim):
            if a.coeffs[i] == 0:
                continue
            for p in range(self.dim):
                s = a.coeffs[i] * m.coeffs[p]
                if s == 0:
                    continue
                for q in range(self.dim):
                    out[q] += s * self.action[i][p][q]
        return Vec(self.dim, tuple(out))


@dataclass(frozen=True)
class RightModule:
    """Right action of an algebra: f_p <| e_i = sum_q action[p][i][q] f_q."""

    over: Algebra
    dim: int
    action: tuple
    alpha_m: Endo
    beta_m: Endo

    def __post_init__(self):
        object.__setattr__(self, "action", _freeze3(self.action))
        _check_rank3(self.action, (self.dim, self.over.dim, self.dim), "right action")
        if self.alpha_m.dim != self.dim or self.beta_m.dim != self.dim:
            raise DimensionMismatch("module maps have wrong dim")

    def act(self, m: Vec, a: Vec) -> Vec:
        out = [ZERO] * self.dim
        for p in range(self.dim):
            if m.coeffs[p] == 0:
                continue
            for i in range(self.over.dim):
                s = m.coeffs[p] * a.coeffs[i]
                if s == 0:
                    continue
                for q in range(self.dim):
                    out[q] += s * self.action[p][i][q]
        return Vec(self.dim, tuple(out))


@dataclass(frozen=True)
class Bimodule:
    """Simultaneous left and right actions on one carrier."""

    over: Algebra
    dim: int
    action: tuple
    raction: tuple
    alpha_m: Endo
    beta_m: Endo

    def __post_init__(self):
        object.__setattr__(self, "action", _freeze3(self.action))
        object.__setattr__(self, "raction", _freeze3(self.raction))
        _check_rank3(self.action, (self.over.dim, self.dim, self.dim), "left action")
        _check_rank3(self.raction, (self.dim, self.over.dim, self.dim), "right action")

    @property
    def left(self) -> LeftModule:
        return LeftModule(self.over, self.dim, self.action, self.alpha_m, self.beta_m)

    @property
    def right(self) -> RightModule:
        return RightModule(self.over, self.dim, self.raction, self.alpha_m, self.beta_m)


@dataclass(frozen=True)
class LeftComodule:
    """Left coaction: rho(f_p) = sum h[p][i][q] e_i (x) f_q."""

    over: Coalgebra
    dim: int
    coaction: tuple
    psi_m: Endo
    omega_m: Endo

    def __post_init__(self):
        object.__setattr__(self, "coaction", _freeze3(self.coaction))
        _check_rank3(self.coaction, (self.dim, self.over.dim, self.dim), "left coaction")
        if self.psi_m.dim != self.dim or self.omega_m.dim != self.dim:
            raise DimensionMismatch("comodule maps have wrong dim")


@dataclass(frozen=True)
class RightComodule:
    """Right coaction: phi(f_p) = sum h[p][q][i] f_q (x) e_i."""

    over: Coalgebra
    dim: int
    coaction: tuple
    psi_m: Endo
    omega_m: Endo

    def __post_init__(self):
        object.__setattr__(self, "coaction", _freeze3(self.coaction))
        _check_rank3(self.coaction, (self.dim, self.dim, self.over.dim), "right coaction")


@dataclass(frozen=True)
class HopfModule:
    """A module and comodule on one carrier, coupled by the weighted law."""

    over: Bialgebra
    module: LeftModule
    comodule: LeftComodule

    def __post_init__(self):
        if self.module.dim != self.comodule.dim:
            raise DimensionMismatch("module and comodule carriers differ")


@dataclass(frozen=True)
class HopfBimodule:
    """Left/right actions and coactions on one carrier (five-part axioms)."""

    over: Bialgebra
    dim: int
    action: tuple
    raction: tuple
    coaction: tuple
    rcoaction: tuple
    alpha_m: Endo
    beta_m: Endo
    psi_m: Endo
    omega_m: Endo

    def __post_init__(self):
        object.__setattr__(self, "action", _freeze3(self.action))
        object.__setattr__(self, "raction", _freeze3(self.raction))
        object.__setattr__(self, "coaction", _freeze3(self.coaction))
        object.__setattr__(self, "rcoaction", _freeze3(self.rcoaction))
        n, m = self.over.dim, self.dim
        _check_rank3(self.action, (n, m, m), "left action")
        _check_rank3(self.raction, (m, n, m), "right action")
        _check_rank3(self.coaction, (m, n, m), "left coaction")
        _check_rank3(self.rcoaction, (m, m, n), "right coaction")


@dataclass(frozen=True)
class RotaBaxter:
    """An algebra with a weight-lambda Rota-Baxter operator."""

    algebra: Algebra
    op: Endo
    weight: Q

    def __post_init__(self):
        object.__setattr__(self, "weight", Q(self.weight))
        if self.op.dim != self.algebra.dim:
            raise DimensionMismatch("operator has wrong dim")


@dataclass(frozen=True)
class Dendriform:
    """A product split into two halves whose sum is BiHom-associative."""

    dim: int
    prec: Mul
    succ: Mul
    alpha: Endo
    beta: Endo

    def __post_init__(self):
        for part in (self.prec, self.succ, self.alpha, self.beta):
            if part.dim != self.dim:
                raise DimensionMismatch("dendriform parts disagree on dim")

    @property
    def total(self) -> Mul:
        return self.prec + self.succ


@dataclass(frozen=True)
class PreLie:
    """A product whose twisted associator is symmetric in the first two slots."""

    dim: int
    star: Mul
    alpha: Endo
    beta: Endo

    def __post_init__(self):
        for part in (self.star, self.alpha, self.beta):
            if part.dim != self.dim:
                raise DimensionMismatch("pre-Lie parts disagree on dim")


@dataclass(frozen=True)
class PreLieCoalgebra:
    """The coproduct dual of a pre-Lie product, with its two twists."""

    dim: int
    delta: Comul
    psi: Endo
    omega: Endo

    def __post_init__(self):
        for part in (self.delta, self.psi, self.omega):
            if part.dim != self.dim:
                raise DimensionMismatch("pre-Lie coalgebra parts disagree on dim")


@dataclass(frozen=True)
class Augmented:
    """An algebra with a weight-lambda multiplicative-up-to-sign functional."""

    algebra: Algebra
    chi: Covec
    weight: Q

    def __post_init__(self):
        object.__setattr__(self, "weight", Q(self.weight))
        if self.chi.dim != self.algebra.dim:
            raise DimensionMismatch("augmentation has wrong dim")


@dataclass(frozen=True)
class Coaugmented:
    """A coalgebra with a grouplike-up-to-sign element of weight lambda."""

    coalgebra: Coalgebra
    zeta: Vec
    weight: Q

    def __post_init__(self):
        object.__setattr__(self, "weight", Q(self.weight))
        if self.zeta.dim != self.coalgebra.dim:
            raise DimensionMismatch("coaugmentation has wrong dim")


# ---------------------------------------------------------------------------
# twisted actions of an algebra on its own tensor squares and cubes


def act_pair_left(a_alg: Algebra, omega: Endo, a: Vec, xy: Elem2) -> Elem2:
    """a |> (x (x) y) = omega(a)x (x) beta(y), extended bilinearly."""
    n = a_alg.dim
    if a.dim != n or xy.dim != n or omega.dim != n:
        raise DimensionMismatch("left pair action operands disagree on dim")
    wa = omega(a)
    out = [[ZERO] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            s = xy.m[x][y]
            if s == 0:
                continue
            left = mul_apply(a_alg.mul, wa, Vec.basis(n, x))
            by = a_alg.beta(Vec.basis(n, y))
            for u in range(n):
                if left.coeffs[u] == 0:
                    continue
                for v in range(n):
                    out[u][v] += s * left.coeffs[u] * by.coeffs[v]
    return Elem2(n, tuple(tuple(row) for row in out))


def act_pair_right(a_alg: Algebra, psi: Endo, xy: Elem2, a: Vec) -> Elem2:
    """(x (x) y) <| a = alpha(x) (x) y.psi(a), extended bilinearly."""
    n = a_alg.dim
    if a.dim != n or xy.dim != n or psi.dim != n:
        raise DimensionMismatch("right pair action operands disagree on dim")
    pa = psi(a)
    out = [[ZERO] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            s = xy.m[x][y]
            if s == 0:
                continue
            ax = a_alg.alpha(Vec.basis(n, x))
            right = mul_apply(a_alg.mul, Vec.basis(n, y), pa)
            for u in range(n):
                if ax.coeffs[u] == 0:
                    continue
                for v in range(n):
                    out[u][v] += s * ax.coeffs[u] * right.coeffs[v]
    return Elem2(n, tuple(tuple(row) for row in out))


def act_triple(a_alg: Algebra, psi: Endo, omega: Endo, side: str, a: Vec, t: Elem3) -> Elem3:
    """The twisted actions on triple tensors.

    side='left':  a |> (x (x) y (x) z) = omega(a)x (x) beta(y) (x) beta(z)
    side='right': (x (x) y (x) z) <| a = alpha(x) (x) alpha(y) (x) z.psi(a)
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    n = a_alg.dim
    if a.dim != n or t.dim != n:
        raise DimensionMismatch("triple action operands disagree on dim")
    out = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    wa = omega(a)
    pa = psi(a)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                s = t.t[x][y][z]
                if s == 0:
                    continue
                if side == "left":
                    first = mul_apply(a_alg.mul, wa, Vec.basis(n, x))
                    second = a_alg.beta(Vec.basis(n, y))
                    third = a_alg.beta(Vec.basis(n, z))
                else:
                    first = a_alg.alpha(Vec.basis(n, x))
                    second = a_alg.alpha(Vec.basis(n, y))
                    third = mul_apply(a_alg.mul, Vec.basis(n, z), pa)
                for u in range(n):
                    cu = first.coeffs[u]
                    if cu == 0:
                        continue
                    for v in range(n):
                        cv = cu * second.coeffs[v]
                        if cv == 0:
                            continue
                        for w in range(n):
                            out[u][v][w] += s * cv * third.coeffs[w]
    return Elem3(n, tuple(tuple(tuple(row) for row in plane) for plane in out))


def bimodule_triple(a_alg: Algebra, psi_a: Endo, omega_a: Endo,
                    m: Bimodule, n_mod: Bimodule, v: Bimodule) -> Bimodule:
    """The bimodule structure on M (x) N (x) V.

        a |> (m (x) n (x) v) = omega(a) |> m (x) beta_N(n) (x) beta_V(v)
        (m (x) n (x) v) <| a = alpha_M(m) (x) alpha_N(n) (x) v <| psi(a)

    Requires psi, omega multiplicative and the four algebra maps pairwise
    commuting; both are checked eagerly.
    """
    dim_a = a_alg.dim
    for f, name in ((psi_a, "psi"), (omega_a, "omega")):
        for i in range(dim_a):
            for j in range(dim_a):
                lhs = f(mul_apply(a_alg.mul, Vec.basis(dim_a, i), Vec.basis(dim_a, j)))
                rhs = mul_apply(a_alg.mul, f(Vec.basis(dim_a, i)), f(Vec.basis(dim_a, j)))
                if lhs != rhs:
                    raise NonMultiplicativeMap(f"{name} is not multiplicative at basis pair ({i}, {j})")
    maps = {"alpha": a_alg.alpha, "beta": a_alg.beta, "psi": psi_a, "omega": omega_a}
    names = list(maps)
    for i, x in enumerate(names):
        for y in names[i + 1:]:
            if not maps[x].commutes_with(maps[y]):
                raise NonCommutingMaps(f"{x} and {y} do not commute")

    dm, dn, dv = m.dim, n_mod.dim, v.dim
    dim = dm * dn * dv

    def flat(p, q, s):
        return (p * dn + q) * dv + s

    action = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim_a)]
    raction = [[[ZERO] * dim for _ in range(dim_a)] for _ in range(dim)]
    # dense but tiny: carrier dims stay single-digit at desk scale
    for i in range(dim_a):
        wa = omega_a(Vec.basis(dim_a, i))
        pa = psi_a(Vec.basis(dim_a, i))
        for p in range(dm):
            lm = [ZERO] * dm
            for j in range(dim_a):
                if wa.coeffs[j] == 0:

                    continue
                for q2 in range(dm):
                    lm[q2] += wa.coeffs[j] * m.action[j][p][q2]
            for q in range(dn):
                bn = n_mod.beta_m(Vec.basis(dn, q))
                for s in range(dv):
                    bv = v.beta_m(Vec.basis(dv, s))
                    src = flat(p, q, s)
                    for p2 in range(dm):
                        if lm[p2] == 0:
                            continue
                        for q2 in range(dn):
                            if bn.coeffs[q2] == 0:
                                continue
                            for s2 in range(dv):
                                if bv.coeffs[s2] != 0:
                                    action[i][src][flat(p2, q2, s2)] += lm[p2] * bn.coeffs[q2] * bv.coeffs[s2]
        for p in range(dm):
            am = m.alpha_m(Vec.basis(dm, p))
            for q in range(dn):
                an = n_mod.alpha_m(Vec.basis(dn, q))
                for s in range(dv):
                    rv = [ZERO] * dv
                    for j in range(dim_a):
                        if pa.coeffs[j] == 0:
                            continue
                        for s2 in range(dv):
                            rv[s2] += pa.coeffs[j] * v.raction[s][j][s2]
                    src = flat(p, q, s)
                    for p2 in range(dm):
                        if am.coeffs[p2] == 0:
                            continue
                        for q2 in range(dn):
                            if an.coeffs[q2] == 0:
                                continue
                            for s2 in range(dv):
                                if rv[s2] != 0:
                                    raction[src][i][flat(p2, q2, s2)] += am.coeffs[p2] * an.coeffs[q2] * rv[s2]

    def kron3(x: Endo, y: Endo, z: Endo) -> Endo:
        entries = [[ZERO] * dim for _ in range(dim)]
        for p in range(dm):
            for q in range(dn):
                for s in range(dv):
                    for p2 in range(dm):
                        for q2 in range(dn):
                            for s2 in range(dv):
                                entries[flat(p2, q2, s2)][flat(p, q, s)] = (
                                    x.entries[p2][p] * y.entries[q2][q] * z.entries[s2][s])
        return Endo(dim, tuple(tuple(r) for r in entries))

    return Bimodule(
        over=a_alg,
        dim=dim,
        action=tuple(tuple(tuple(row) for row in plane) for plane in action),
        raction=tuple(tuple(tuple(row) for row in plane) for plane in raction),
        alpha_m=kron3(m.alpha_m, n_mod.alpha_m, v.alpha_m),
        beta_m=kron3(m.beta_m, n_mod.beta_m, v.beta_m),
    )


def regular_bimodule(a_alg: Algebra) -> Bimodule:
    """A acting on itself on both sides by its own multiplication."""
    n = a_alg.dim
    action = a_alg.mul.c
    raction = tuple(tuple(tuple(a_alg.mul.c[p][i][q] for q in range(n))
                          for i in range(n)) for p in range(n))
    return Bimodule(a_alg, n, action, raction, a_alg.alpha, a_alg.beta)


def regular_left_module(a_alg: Algebra) -> LeftModule:
    return LeftModule(a_alg, a_alg.dim, a_alg.mul.c, a_alg.alpha, a_alg.beta)


def regular_left_comodule(c_coalg: Coalgebra) -> LeftComodule:
    """C coacting on itself by its own comultiplication."""
    n = c_coalg.dim
    h = tuple(tuple(tuple(c_coalg.comul.d[p][i][q] for q in range(n))
                    for i in range(n)) for p in range(n))
    return LeftComodule(c_coalg, n, h, c_coalg.psi, c_coalg.omega)
