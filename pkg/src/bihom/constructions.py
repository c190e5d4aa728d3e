"""Constructive theorems as total functions from validated inputs.

Constructors validate their preconditions eagerly and raise named errors;
they never emit unchecked structures. The one deliberate exception:
coproducts induced by an element r (and products induced by a bilinear
form) are emitted even when r fails the Yang-Baxter residual, because the
derivation property holds regardless and coassociativity is the caller's
obligation via :mod:`bihom.ybe`.
"""

from __future__ import annotations

import itertools

from . import axioms
from .errors import (
    MissingCounit, MissingUnit, NonCommutingMaps, NotBialgebra,
    NotCoquasitriangular, NotInvariant, NotMorphism, NotQuasitriangular,
    NotYBESolution, PreconditionFailed, WeightMismatch,
)
from .exactcore import (
    BiForm, Comul, Covec, Elem2, Endo, LinMap, Mul, Q, Vec, ZERO,
    biform_invariant_under, comul_apply, comul_map, counit_map,
    elem2_invariant_under, endo_inverse, endo_map, mul_apply, mul_map,
    tensor_vv,
)
from .structures import (
    Algebra, Augmented, Bialgebra, Coalgebra, Coaugmented, Dendriform,
    HopfModule, LeftComodule, LeftModule, PreLie, PreLieCoalgebra, RotaBaxter,
    act_pair_left, act_pair_right,
)


def _endo_multiplicative(f: Endo, m: Mul) -> bool:
    n = m.dim
    for i in range(n):
        for j in range(n):
            if f(mul_apply(m, Vec.basis(n, i), Vec.basis(n, j))) != \
                    mul_apply(m, f(Vec.basis(n, i)), f(Vec.basis(n, j))):
                return False
    return True


def _endo_comultiplicative(f: Endo, d: Comul) -> bool:
    fm = endo_map(f)
    dm = comul_map(d)
    return fm.tensor(fm) @ dm == dm @ fm


def _require_square_maps(dim: int, *endos: Endo):
    for f in endos:
        if f.dim != dim:
            raise PreconditionFailed("twist map has wrong dimension")


def _check_unital_twist_compat(a: Algebra, psi: Endo, omega: Endo):
    """The shared hypotheses for coproducts on a unital algebra:
    the four-map commutations, psi/omega multiplicative, both fixing 1."""
    _require_square_maps(a.dim, psi, omega)
    for f, g, tag in ((a.alpha, psi, "(12.1)"), (a.alpha, omega, "(12.1)"),
                      (a.beta, psi, "(12.1)"), (a.beta, omega, "(12.1)")):
        if not f.commutes_with(g):
            raise PreconditionFailed(tag)
    for f in (psi, omega):
        if not _endo_multiplicative(f, a.mul):
            raise PreconditionFailed("(12.3)")
    if a.unit is None:
        raise MissingUnit("a unital algebra is required")
    for f in (psi, omega):
        if f(a.unit) != a.unit:
            raise PreconditionFailed("(12.30)")


def _check_counital_twist_compat(c: Coalgebra, alpha: Endo, beta: Endo):
    """Dual hypotheses on a counital coalgebra."""
    _require_square_maps(c.dim, alpha, beta)
    for f, g in ((alpha, c.psi), (alpha, c.omega), (beta, c.psi), (beta, c.omega)):
        if not f.commutes_with(g):
            raise PreconditionFailed("(12.1)")
    for f in (alpha, beta):
        if not _endo_comultiplicative(f, c.comul):
            raise PreconditionFailed("(12.2)")
    if c.counit is None:
        raise MissingCounit("a counital coalgebra is required")
    eps = counit_map(c.counit)
    for f in (alpha, beta):
        if eps @ endo_map(f) != eps:
            raise PreconditionFailed("(12.31)")


# ---------------------------------------------------------------------------
# twisting and the two trivial structures


def yau_twist(b: Bialgebra, alpha: Endo, beta: Endo, psi: Endo, omega: Endo) -> Bialgebra:
    """Deform an untwisted bialgebra by four commuting (co)algebra morphisms.

    The input must carry identity structure maps; the output multiplies by
    mul o (alpha (x) beta) and comultiplies by (omega (x) psi) o comul.
    """
    n = b.dim
    a_, c_ = b.algebra, b.coalgebra
    for f in (a_.alpha, a_.beta, c_.psi, c_.omega):
        if not f.is_identity():
            raise PreconditionFailed("input structure maps must all be the identity")
    maps = (alpha, beta, psi, omega)
    _require_square_maps(n, *maps)
    for f in maps:
        if not _endo_multiplicative(f, a_.mul):
            raise NotMorphism("a twist map is not an algebra morphism")
        if not _endo_comultiplicative(f, c_.comul):
            raise NotMorphism("a twist map is not a coalgebra morphism")
        if a_.unit is not None and f(a_.unit) != a_.unit:
            raise NotMorphism("a twist map does not fix the unit")
        if c_.counit is not None and counit_map(c_.counit) @ endo_map(f) != counit_map(c_.counit):
            raise NotMorphism("a twist map does not preserve the counit")
    for f, g in itertools.combinations(maps, 2):
        if not f.commutes_with(g):
            raise NonCommutingMaps("twist maps must pairwise commute")

    twisted_mul = Mul(n, tuple(tuple(tuple(
        sum((alpha.entries[u][i] * beta.entries[v][j] * a_.mul.c[u][v][k]
             for u in range(n) for v in range(n)), ZERO)
        for k in range(n)) for j in range(n)) for i in range(n)))
    twisted_comul = Comul(n, tuple(tuple(tuple(
        sum((c_.comul.d[i][u][v] * omega.entries[j][u] * psi.entries[k][v]
             for u in range(n) for v in range(n)), ZERO)
        for k in range(n)) for j in range(n)) for i in range(n)))
    return Bialgebra(
        Algebra(n, twisted_mul, alpha, beta, a_.unit),
        Coalgebra(n, twisted_comul, psi, omega, c_.counit),
        b.weight)


def trivial_coproduct(a: Algebra, psi: Endo, omega: Endo, weight, side: str = "left") -> Bialgebra:
    """Equip a unital algebra with D(a) = -weight * (omega(a) (x) 1)
    (side='left') or -weight * (1 (x) psi(a)) (side='right')."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    weight = Q(weight)
    _check_unital_twist_compat(a, psi, omega)
    n = a.dim
    unit = a.unit
    d = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        if side == "left":
            img = omega(Vec.basis(n, i))
            for j in range(n):
                for k in range(n):
                    d[i][j][k] = -weight * img.coeffs[j] * unit.coeffs[k]
        else:
            img = psi(Vec.basis(n, i))
            for j in range(n):
                for k in range(n):
                    d[i][j][k] = -weight * unit.coeffs[j] * img.coeffs[k]
    comul = Comul(n, tuple(tuple(tuple(row) for row in plane) for plane in d))
    return Bialgebra(a, Coalgebra(n, comul, psi, omega, counit=None), weight)


def trivial_product(c: Coalgebra, alpha: Endo, beta: Endo, weight, side: str = "left") -> Bialgebra:
    """Equip a counital coalgebra with a.b = -weight * alpha(a) eps(b)
    (side='left') or -weight * eps(a) beta(b) (side='right')."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    weight = Q(weight)
    _check_counital_twist_compat(c, alpha, beta)
    n = c.dim
    eps = c.counit
    m = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if side == "left":
                img = alpha(Vec.basis(n, i))
                s = eps(Vec.basis(n, j))
            else:
                img = beta(Vec.basis(n, j))
                s = eps(Vec.basis(n, i))
            for k in range(n):
                m[i][j][k] = -weight * s * img.coeffs[k]
    mul = Mul(n, tuple(tuple(tuple(row) for row in plane) for plane in m))
    return Bialgebra(Algebra(n, mul, alpha, beta, unit=None), c, weight)


# ---------------------------------------------------------------------------
# duality


def dualize(b: Bialgebra) -> Bialgebra:
    """The dual bialgebra on the dual basis (an involution)."""
    n = b.dim
    a_, c_ = b.algebra, b.coalgebra
    mul = Mul(n, tuple(tuple(tuple(c_.comul.d[k][i][j] for k in range(n))
                             for j in range(n)) for i in range(n)))
    comul = Comul(n, tuple(tuple(tuple(a_.mul.c[j][k][i] for k in range(n))
                                 for j in range(n)) for i in range(n)))
    unit = Vec(n, c_.counit.coeffs) if c_.counit is not None else None
    counit = Covec(n, a_.unit.coeffs) if a_.unit is not None else None
    return Bialgebra(
        Algebra(n, mul, c_.omega.transpose(), c_.psi.transpose(), unit),
        Coalgebra(n, comul, a_.beta.transpose(), a_.alpha.transpose(), counit),
        b.weight)


def dual_coalgebra(a: Algebra) -> Coalgebra:
    """The coalgebra on the dual basis of an algebra (with its evaluation counit)."""
    n = a.dim
    comul = Comul(n, tuple(tuple(tuple(a.mul.c[j][k][i] for k in range(n))
                                 for j in range(n)) for i in range(n)))
    counit = Covec(n, a.unit.coeffs) if a.unit is not None else None
    return Coalgebra(n, comul, a.beta.transpose(), a.alpha.transpose(), counit)


# ---------------------------------------------------------------------------
# tensor products of (co)augmented structures


def aug_tensor_product(x: Augmented, y: Augmented) -> tuple[Algebra, Augmented]:
    """The weighted tensor-product algebra of two augmented algebras.

    (a (x) b) . (a' (x) b') = chi_B(b) aa' (x) beta_B(b')
                            + chi_A(a') alpha_A(a) (x) bb'
                            + weight chi_A(a') chi_B(b) alpha_A(a) (x) beta_B(b')
    """
    if x.weight != y.weight:
        raise WeightMismatch(f"weights {x.weight} and {y.weight} differ")
    a_alg, b_alg = x.algebra, y.algebra
    na, nb = a_alg.dim, b_alg.dim
    dim = na * nb
    w = x.weight

    def flat(i, j):
        return i * nb + j

    m = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(na):
        for j in range(nb):
            for k in range(na):
                for l in range(nb):
                    src1, src2 = flat(i, j), flat(k, l)
                    aa = mul_apply(a_alg.mul, Vec.basis(na, i), Vec.basis(na, k))
                    bb = mul_apply(b_alg.mul, Vec.basis(nb, j), Vec.basis(nb, l))
                    bb_beta = b_alg.beta(Vec.basis(nb, l))
                    a_alpha = a_alg.alpha(Vec.basis(na, i))
                    chi_b = y.chi(Vec.basis(nb, j))
                    chi_a = x.chi(Vec.basis(na, k))
                    for u in range(na):
                        for v in range(nb):
                            m[src1][src2][flat(u, v)] += (
                                chi_b * aa.coeffs[u] * bb_beta.coeffs[v]
                                + chi_a * a_alpha.coeffs[u] * bb.coeffs[v]
                                + w * chi_a * chi_b * a_alpha.coeffs[u] * bb_beta.coeffs[v])
    mul = Mul(dim, tuple(tuple(tuple(row) for row in plane) for plane in m))
    alpha = _kron_endo(a_alg.alpha, b_alg.alpha)
    beta = _kron_endo(a_alg.beta, b_alg.beta)
    chi = Covec(dim, tuple(x.chi.coeffs[i] * y.chi.coeffs[j]
                           for i in range(na) for j in range(nb)))
    algebra = Algebra(dim, mul, alpha, beta, unit=None)
    return algebra, Augmented(algebra, chi, w)


def coaug_tensor_product(x: Coaugmented, y: Coaugmented) -> tuple[Coalgebra, Coaugmented]:
    """The weighted tensor-product coalgebra of two coaugmented coalgebras."""
    if x.weight != y.weight:
        raise WeightMismatch(f"weights {x.weight} and {y.weight} differ")
    c_co, d_co = x.coalgebra, y.coalgebra
    nc, nd = c_co.dim, d_co.dim
    dim = nc * nd
    w = x.weight
    ic, id_ = x.zeta, y.zeta

    def flat(i, j):
        return i * nd + j

    d = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(nc):
        for j in range(nd):
            src = flat(i, j)
            dc = comul_apply(c_co.comul, Vec.basis(nc, i))
            dd = comul_apply(d_co.comul, Vec.basis(nd, j))
            psi_d = d_co.psi(Vec.basis(nd, j))
            om_c = c_co.omega(Vec.basis(nc, i))
            for u in range(nc):
                for v in range(nc):
                    if dc.m[u][v] == 0:
                        continue
                    for s in range(nd):
                        for t in range(nd):
                            d[src][flat(u, s)][flat(v, t)] += (
                                dc.m[u][v] * id_.coeffs[s] * psi_d.coeffs[t])
            for s in range(nd):
                for t in range(nd):
                    if dd.m[s][t] == 0:
                        continue
                    for u in range(nc):
                        for v in range(nc):
                            d[src][flat(u, s)][flat(v, t)] += (
                                dd.m[s][t] * om_c.coeffs[u] * ic.coeffs[v])
            for u in range(nc):
                for s in range(nd):
                    for v in range(nc):
                        for t in range(nd):
                            d[src][flat(u, s)][flat(v, t)] += (
                                w * om_c.coeffs[u] * id_.coeffs[s]
                                * ic.coeffs[v] * psi_d.coeffs[t])
    comul = Comul(dim, tuple(tuple(tuple(row) for row in plane) for plane in d))
    psi = _kron_endo(c_co.psi, d_co.psi)
    omega = _kron_endo(c_co.omega, d_co.omega)
    zeta = Vec(dim, tuple(ic.coeffs[i] * id_.coeffs[j]
                          for i in range(nc) for j in range(nd)))
    coalgebra = Coalgebra(dim, comul, psi, omega, counit=None)
    return coalgebra, Coaugmented(coalgebra, zeta, w)


def _kron_endo(f: Endo, g: Endo) -> Endo:
    nf, ng = f.dim, g.dim
    dim = nf * ng
    entries = [[ZERO] * dim for _ in range(dim)]
    for i in range(nf):
        for k in range(nf):
            if f.entries[i][k] == 0:
                continue
            for j in range(ng):
                for l in range(ng):
                    entries[i * ng + j][k * ng + l] = f.entries[i][k] * g.entries[j][l]
    return Endo(dim, tuple(tuple(r) for r in entries))


def check_delta_morphism(b: Bialgebra) -> axioms.Report:
    """Is the coproduct multiplicative into the weighted tensor square?

    Needs a counit; the target algebra is the augmented tensor product of
    two copies of the input with its counit as augmentation.
    """
    if b.coalgebra.counit is None:
        raise MissingCounit("the morphism target needs the counit as augmentation")
    n = b.dim
    aug = Augmented(b.algebra, b.coalgebra.counit, b.weight)
    square, _ = aug_tensor_product(aug, aug)
    de = comul_map(b.coalgebra.comul)
    lhs = de @ mul_map(b.algebra.mul)
    rhs = mul_map(square.mul) @ de.tensor(de)
    return axioms._report(axioms.compare_maps(
        "(T2.21a)", lhs, rhs, (n, n), (n, n), ("e", "e")))


def check_mu_comorphism(b: Bialgebra) -> axioms.Report:
    """Is the product comultiplicative from the weighted tensor square?"""
    if b.algebra.unit is None:
        raise MissingUnit("the comorphism source needs the unit as coaugmentation")
    n = b.dim
    coaug = Coaugmented(b.coalgebra, b.algebra.unit, b.weight)
    square, _ = coaug_tensor_product(coaug, coaug)
    mu = mul_map(b.algebra.mul)
    lhs = comul_map(b.coalgebra.comul) @ mu
    rhs = mu.tensor(mu) @ comul_map(square.comul)
    return axioms._report(axioms.compare_maps(
        "(T2.21b)", lhs, rhs, (n, n), (n, n), ("e", "e")))


# ---------------------------------------------------------------------------
# coproducts from an element r, products from a bilinear form


def _check_r_preconditions(a: Algebra, psi: Endo, omega: Endo, r: Elem2):
    _check_unital_twist_compat(a, psi, omega)
    for f, name in ((a.alpha, "alpha"), (a.beta, "beta"), (psi, "psi"), (omega, "omega")):
        if not elem2_invariant_under(f, r):
            raise NotInvariant(f"r is not {name}-invariant")


def delta_r(a: Algebra, psi: Endo, omega: Endo, r: Elem2, weight,
            anti: bool = False) -> Bialgebra:
    """The coproduct induced by r on a unital algebra with invertible twists.

    D_r(x) = alphainv(x) |> r - r <| betainv(x) - weight * (omega(x) (x) 1);
    with anti=True the last term is weight * (1 (x) psi(x)) instead. The
    derivation law holds unconditionally; coassociativity is not checked
    here and is the caller's obligation through the Yang-Baxter residual.
    """
    weight = Q(weight)
    _check_r_preconditions(a, psi, omega, r)
    comul = _delta_r_comul(a, psi, omega, r, weight, anti)
    return Bialgebra(a, Coalgebra(a.dim, comul, psi, omega, counit=None), weight)


def _delta_r_comul(a: Algebra, psi: Endo, omega: Endo, r: Elem2, weight: Q,
                   anti: bool) -> Comul:
    """The induced coproduct tensor, preconditions assumed already verified."""
    alpha_inv = endo_inverse(a.alpha)
    beta_inv = endo_inverse(a.beta)
    n = a.dim
    d = []
    for i in range(n):
        e = Vec.basis(n, i)
        pair = act_pair_left(a, omega, alpha_inv(e), r) - act_pair_right(a, psi, r, beta_inv(e))
        if anti:
            pair = pair - tensor_vv(a.unit, psi(e)).scale(weight)
        else:
            pair = pair - tensor_vv(omega(e), a.unit).scale(weight)
        d.append(pair.m)
    return Comul(n, tuple(d))


def mu_sigma(c: Coalgebra, alpha: Endo, beta: Endo, sigma: BiForm, weight,
             anti: bool = False) -> Bialgebra:
    """The product induced by a bilinear form on a counital coalgebra.

    x.y = alpha omegainv(x_1) sigma(x_2, psi(y))
        - sigma(omega(x), y_1) beta psiinv(y_2)
        - weight * alpha(x) eps(y)          (anti: weight * eps(x) beta(y))
    """
    weight = Q(weight)
    _check_counital_twist_compat(c, alpha, beta)
    for f, name in ((alpha, "alpha"), (beta, "beta"), (c.psi, "psi"), (c.omega, "omega")):
        if not biform_invariant_under(f, sigma):
            raise NotInvariant(f"sigma is not {name}-invariant")
    mul = _mu_sigma_mul(c, alpha, beta, sigma, weight, anti)
    return Bialgebra(Algebra(c.dim, mul, alpha, beta, unit=None), c, weight)


def _mu_sigma_mul(c: Coalgebra, alpha: Endo, beta: Endo, sigma: BiForm,
                  weight: Q, anti: bool) -> Mul:
    """The induced product tensor, preconditions assumed already verified."""
    omega_inv = endo_inverse(c.omega)
    psi_inv = endo_inverse(c.psi)
    n = c.dim
    eps = c.counit
    m = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        di = comul_apply(c.comul, Vec.basis(n, i))
        for j in range(n):
            ej = Vec.basis(n, j)
            dj = comul_apply(c.comul, ej)
            out = Vec.zero(n)
            psi_j = c.psi(ej)
            for u in range(n):
                for v in range(n):
                    if di.m[u][v] == 0:
                        continue
                    coeff = di.m[u][v] * sigma(Vec.basis(n, v), psi_j)
                    if coeff != 0:
                        out = out + (alpha @ omega_inv)(Vec.basis(n, u)).scale(coeff)
            om_i = c.omega(Vec.basis(n, i))
            for u in range(n):
                for v in range(n):
                    if dj.m[u][v] == 0:
                        continue
                    coeff = dj.m[u][v] * sigma(om_i, Vec.basis(n, u))
                    if coeff != 0:
                        out = out - (beta @ psi_inv)(Vec.basis(n, v)).scale(coeff)
            if anti:
                out = out - beta(ej).scale(weight * eps(Vec.basis(n, i)))
            else:
                out = out - alpha(Vec.basis(n, i)).scale(weight * eps(ej))
            m[i][j] = list(out.coeffs)
    return Mul(n, tuple(tuple(tuple(row) for row in plane) for plane in m))


# ---------------------------------------------------------------------------
# Hopf-module builders


def _pairwise_commuting(maps: dict[str, Endo]):
    names = list(maps)
    for i, x in enumerate(names):
        for y in names[i + 1:]:
            if not maps[x].commutes_with(maps[y]):
                raise PreconditionFailed(f"{x} and {y} must commute")


def _require_valid_bialgebra(b: Bialgebra):
    if not axioms.check_infbh_bialgebra(b).passed:
        raise NotBialgebra("input fails the bialgebra axioms")


def hopf_module_free(b: Bialgebra, v_dim: int, alpha_v: Endo, beta_v: Endo,
                     psi_v: Endo, omega_v: Endo, variant: str = "plain",
                     extra: LeftModule | LeftComodule | None = None) -> HopfModule:
    """The Hopf-module structures on A (x) V (or A (x) N).

    variant='plain':    act by mul (x) beta_V, coact by comul (x) psi_V;
    variant='unital':   plain action, coaction gains weight * omega(a)(x)1(x)psi_V(v);
    variant='counital': plain coaction, action gains weight * eps(b) alpha(a)(x)beta_V(v);
    variant='comodule_w0' (weight 0, alpha invertible): V is a left comodule N,
        coaction gains omega alphainv(a) n_-1 (x) 1 (x) n_0;
    variant='module_w0' (weight 0, omega invertible, counit): V is a left
        module N, action gains eps(b) alpha omegainv(a_1) (x) (a_2 |> n).
    """
    if variant not in ("plain", "unital", "counital", "comodule_w0", "module_w0"):
        raise ValueError(f"unknown variant {variant!r}")
    _require_valid_bialgebra(b)
    a_, c_ = b.algebra, b.coalgebra
    na = b.dim
    _pairwise_commuting({"alpha_v": alpha_v, "beta_v": beta_v,
                         "psi_v": psi_v, "omega_v": omega_v})

    if variant == "unital" and a_.unit is None:
        raise PreconditionFailed("variant 'unital' needs a unit")
    if variant == "counital" and c_.counit is None:
        raise PreconditionFailed("variant 'counital' needs a counit")
    if variant in ("comodule_w0", "module_w0") and b.weight != 0:
        raise PreconditionFailed(f"variant {variant!r} needs weight 0")
    if variant == "comodule_w0":
        if a_.unit is None:
            raise PreconditionFailed("variant 'comodule_w0' needs a unit")
        if not isinstance(extra, LeftComodule) or extra.dim != v_dim:
            raise PreconditionFailed("variant 'comodule_w0' needs comodule data for V")
        if extra.psi_m != psi_v or extra.omega_m != omega_v:
            raise PreconditionFailed("comodule maps must match the supplied V maps")
        if not axioms.check_left_comodule(extra).passed:
            raise PreconditionFailed("V comodule data fails its axioms")
    if variant == "module_w0":
        if c_.counit is None:
            raise PreconditionFailed("variant 'module_w0' needs a counit")
        if not isinstance(extra, LeftModule) or extra.dim != v_dim:
            raise PreconditionFailed("variant 'module_w0' needs module data for V")
        if extra.alpha_m != alpha_v or extra.beta_m != beta_v:
            raise PreconditionFailed("module maps must match the supplied V maps")
        if not axioms.check_left_module(extra).passed:
            raise PreconditionFailed("V module data fails its axioms")

    nv = v_dim
    dim = na * nv

    def flat(i, p):
        return i * nv + p

    # left action on A (x) V
    act = [[[ZERO] * dim for _ in range(dim)] for _ in range(na)]
    for i in range(na):
        ei = Vec.basis(na, i)
        di = comul_apply(c_.comul, ei)
        for j in range(na):
            prod = a_.product(ei, Vec.basis(na, j))
            for p in range(nv):
                bv = beta_v(Vec.basis(nv, p))
                src = flat(j, p)
                for u in range(na):
                    if prod.coeffs[u] == 0:
                        continue
                    for q in range(nv):
                        if bv.coeffs[q] != 0:
                            act[i][src][flat(u, q)] += prod.coeffs[u] * bv.coeffs[q]
                if variant == "counital":
                    epsb = c_.counit(Vec.basis(na, j))
                    if epsb != 0:
                        aa = a_.alpha(ei)
                        for u in range(na):
                            if aa.coeffs[u] == 0:
                                continue
                            for q in range(nv):
                                if bv.coeffs[q] != 0:
                                    act[i][src][flat(u, q)] += (
                                        b.weight * epsb * aa.coeffs[u] * bv.coeffs[q])
                if variant == "module_w0":
                    epsb = c_.counit(Vec.basis(na, j))
                    if epsb != 0:
                        am = (a_.alpha @ endo_inverse(c_.omega))
                        for u in range(na):
                            for v in range(na):
                                if di.m[u][v] == 0:
                                    continue
                                target = am(Vec.basis(na, u))
                                acted = extra.act(Vec.basis(na, v), Vec.basis(nv, p))
                                for w in range(na):
                                    if target.coeffs[w] == 0:
                                        continue
                                    for q in range(nv):
                                        if acted.coeffs[q] != 0:
                                            act[i][src][flat(w, q)] += (
                                                epsb * di.m[u][v]
                                                * target.coeffs[w] * acted.coeffs[q])

    # left coaction on A (x) V
    coact = [[[ZERO] * dim for _ in range(na)] for _ in range(dim)]
    for j in range(na):
        ej = Vec.basis(na, j)
        dj = comul_apply(c_.comul, ej)
        for p in range(nv):
            pv = psi_v(Vec.basis(nv, p))
            src = flat(j, p)
            for u in range(na):
                for v in range(na):
                    if dj.m[u][v] == 0:
                        continue
                    for q in range(nv):
                        if pv.coeffs[q] != 0:
                            coact[src][u][flat(v, q)] += dj.m[u][v] * pv.coeffs[q]
            if variant == "unital":
                wa = c_.omega(ej)
                for u in range(na):
                    if wa.coeffs[u] == 0:
                        continue
                    for w in range(na):
                        if a_.unit.coeffs[w] == 0:
                            continue
                        for q in range(nv):
                            if pv.coeffs[q] != 0:
                                coact[src][u][flat(w, q)] += (
                                    b.weight * wa.coeffs[u]
                                    * a_.unit.coeffs[w] * pv.coeffs[q])
            if variant == "comodule_w0":
                lead = (c_.omega @ endo_inverse(a_.alpha))(ej)
                for u in range(na):
                    if lead.coeffs[u] == 0:
                        continue
                    for k in range(na):
                        for q in range(nv):
                            if extra.coaction[p][k][q] == 0:
                                continue
                            prod = a_.product(Vec.basis(na, u), Vec.basis(na, k))
                            for w in range(na):
                                if prod.coeffs[w] == 0:
                                    continue
                                for w2 in range(na):
                                    if a_.unit.coeffs[w2] != 0:
                                        coact[src][w][flat(w2, q)] += (
                                            lead.coeffs[u] * extra.coaction[p][k][q]
                                            * prod.coeffs[w] * a_.unit.coeffs[w2])

    module = LeftModule(a_, dim, tuple(tuple(tuple(r) for r in pl) for pl in act),
                        _kron_endo(a_.alpha, alpha_v), _kron_endo(a_.beta, beta_v))
    comodule = LeftComodule(c_, dim, tuple(tuple(tuple(r) for r in pl) for pl in coact),
                            _kron_endo(c_.psi, psi_v), _kron_endo(c_.omega, omega_v))
    return HopfModule(b, module, comodule)


def hopf_module_from_qt(b: Bialgebra, r: Elem2, module: LeftModule,
                        psi_m: Endo, omega_m: Endo, anti: bool = False) -> HopfModule:
    """Turn a module over an r-induced bialgebra into a Hopf module.

    rho(m) = -alpha(r1) (x) r2 |> psi_m betainv_m(m), plus (anti case)
    -weight * 1 (x) psi_m(m). Requires the matching Yang-Baxter
    characterization for r and full map compatibility of the module data.
    """
    from . import ybe as ybe_mod

    a_ = b.algebra
    n = b.dim
    if module.over != a_:
        raise PreconditionFailed("module is not over the bialgebra's algebra")
    expected = delta_r(a_, b.coalgebra.psi, b.coalgebra.omega, r, b.weight, anti=anti)
    if expected.coalgebra.comul != b.coalgebra.comul:
        raise PreconditionFailed("bialgebra coproduct is not the one induced by r")
    report = ybe_mod.abhybe_residual(a_, b.coalgebra.psi, b.coalgebra.omega,
                                     r, b.weight, anti=anti)
    if not report.is_solution:
        kind = "anti-quasitriangular" if anti else "quasitriangular"
        raise NotQuasitriangular(f"r does not solve the {kind} Yang-Baxter residual")
    if not axioms.check_left_module(module).passed:
        raise PreconditionFailed("module data fails its axioms")
    beta_m_inv = endo_inverse(module.beta_m)
    nm = module.dim
    _pairwise_commuting({"alpha_m": module.alpha_m, "beta_m": module.beta_m,
                         "psi_m": psi_m, "omega_m": omega_m})
    for f_m, f_a, name in ((psi_m, b.coalgebra.psi, "psi"), (omega_m, b.coalgebra.omega, "omega")):
        for i in range(n):
            for p in range(nm):
                if f_m(module.act(Vec.basis(n, i), Vec.basis(nm, p))) != \
                        module.act(f_a(Vec.basis(n, i)), f_m(Vec.basis(nm, p))):
                    raise PreconditionFailed(f"{name} maps do not intertwine the action")

    coact = [[[ZERO] * nm for _ in range(n)] for _ in range(nm)]
    for p in range(nm):
        lead = (psi_m @ beta_m_inv)(Vec.basis(nm, p))
        for i in range(n):
            for j in range(n):
                if r.m[i][j] == 0:
                    continue
                first = a_.alpha(Vec.basis(n, i))
                second = module.act(Vec.basis(n, j), lead)
                for u in range(n):
                    if first.coeffs[u] == 0:
                        continue
                    for q in range(nm):
                        if second.coeffs[q] != 0:
                            coact[p][u][q] -= r.m[i][j] * first.coeffs[u] * second.coeffs[q]
        if anti:
            pm = psi_m(Vec.basis(nm, p))
            for u in range(n):
                if a_.unit.coeffs[u] == 0:
                    continue
                for q in range(nm):
                    if pm.coeffs[q] != 0:
                        coact[p][u][q] -= b.weight * a_.unit.coeffs[u] * pm.coeffs[q]
    comodule = LeftComodule(b.coalgebra, nm,
                            tuple(tuple(tuple(row) for row in plane) for plane in coact),
                            psi_m, omega_m)
    return HopfModule(b, module, comodule)


def hopf_module_from_coqt(b: Bialgebra, sigma: BiForm, comodule: LeftComodule,
                          alpha_m: Endo, beta_m: Endo, anti: bool = False) -> HopfModule:
    """Turn a comodule over a sigma-induced bialgebra into a Hopf module.

    c |> m = -sigma(omega(c), m_-1) beta_m psiinv_m(m_0), plus (anti case)
    -weight * eps(c) beta_m(m).
    """
    from . import ybe as ybe_mod

    c_ = b.coalgebra
    n = b.dim
    if comodule.over != c_:
        raise PreconditionFailed("comodule is not over the bialgebra's coalgebra")
    expected = mu_sigma(c_, b.algebra.alpha, b.algebra.beta, sigma, b.weight, anti=anti)
    if expected.algebra.mul != b.algebra.mul:
        raise PreconditionFailed("bialgebra product is not the one induced by sigma")
    report = ybe_mod.coabhybe_residual(c_, b.algebra.alpha, b.algebra.beta,
                                       sigma, b.weight, anti=anti)
    if not report.is_solution:
        kind = "anti-coquasitriangular" if anti else "coquasitriangular"
        raise NotCoquasitriangular(f"sigma does not solve the {kind} residual")
    if not axioms.check_left_comodule(comodule).passed:
        raise PreconditionFailed("comodule data fails its axioms")
    psi_m_inv = endo_inverse(comodule.psi_m)
    nm = comodule.dim
    _pairwise_commuting({"alpha_m": alpha_m, "beta_m": beta_m,
                         "psi_m": comodule.psi_m, "omega_m": comodule.omega_m})
    rho = coaction_map_of(comodule)
    for f_m, f_a, name in ((alpha_m, b.algebra.alpha, "alpha"), (beta_m, b.algebra.beta, "beta")):
        fm, fa = endo_map(f_m), endo_map(f_a)
        if rho @ fm != fa.tensor(fm) @ rho:
            raise PreconditionFailed(f"{name} maps do not intertwine the coaction")

    act = [[[ZERO] * nm for _ in range(nm)] for _ in range(n)]
    for i in range(n):
        om_i = c_.omega(Vec.basis(n, i))
        for p in range(nm):
            for k in range(n):
                for q in range(nm):
                    h = comodule.coaction[p][k][q]
                    if h == 0:
                        continue
                    s = sigma(om_i, Vec.basis(n, k))
                    if s == 0:
                        continue
                    target = (beta_m @ psi_m_inv)(Vec.basis(nm, q))
                    for u in range(nm):
                        if target.coeffs[u] != 0:
                            act[i][p][u] -= h * s * target.coeffs[u]
            if anti:
                epsc = c_.counit(Vec.basis(n, i))
                if epsc != 0:
                    bm = beta_m(Vec.basis(nm, p))
                    for u in range(nm):
                        if bm.coeffs[u] != 0:
                            act[i][p][u] -= b.weight * epsc * bm.coeffs[u]
    module = LeftModule(b.algebra, nm,
                        tuple(tuple(tuple(row) for row in plane) for plane in act),
                        alpha_m, beta_m)
    return HopfModule(b, module, comodule)


def coaction_map_of(com: LeftComodule) -> LinMap:
    from .exactcore import coaction_map
    return coaction_map(com.coaction, com.dim, com.over.dim)


# ---------------------------------------------------------------------------
# Rota-Baxter, dendriform, pre-Lie chains


def rota_baxter_from_r(a: Algebra, psi: Endo, omega: Endo, r: Elem2, weight,
                       sign: str = "+") -> RotaBaxter:
    """The Rota-Baxter operator induced by a Yang-Baxter solution.

    R(x) = -/+ beta^2 psi(r1) . (alphainv betainv(x) . alpha omega(r2)),
    the minus branch for sign '+' (r solving the +weight residual) and the
    plus branch for sign '-' (r solving the -weight residual).
    """
    from . import ybe as ybe_mod

    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    weight = Q(weight)
    _check_r_preconditions(a, psi, omega, r)
    for f in (psi, omega):
        endo_inverse(f)  # bijectivity required; raises SingularMap
    report = ybe_mod.abhybe_residual(a, psi, omega, r, weight, anti=(sign == "-"))
    if not report.is_solution:
        raise NotYBESolution(f"r does not solve the ({sign}weight) residual")
    n = a.dim
    lead_map = (a.beta @ a.beta) @ psi
    inner_map = (endo_inverse(a.alpha) @ endo_inverse(a.beta))
    tail_map = a.alpha @ omega
    cols = []
    for x in range(n):
        out = Vec.zero(n)
        mid = inner_map(Vec.basis(n, x))
        for i in range(n):
            for j in range(n):
                if r.m[i][j] == 0:
                    continue
                inner = mul_apply(a.mul, mid, tail_map(Vec.basis(n, j)))
                term = mul_apply(a.mul, lead_map(Vec.basis(n, i)), inner)
                out = out + term.scale(r.m[i][j])
        cols.append(out if sign == "-" else -out)
    entries = tuple(tuple(cols[x].coeffs[u] for x in range(n)) for u in range(n))
    return RotaBaxter(a, Endo(n, entries), weight)


def dendriform_from_rb(rb: RotaBaxter, variant: str = "prec") -> Dendriform:
    """Split the product along a Rota-Baxter operator.

    variant='prec': x < y = x R(y) + weight x y,  x > y = R(x) y
    variant='succ': x < y = x R(y),               x > y = R(x) y + weight x y
    """
    if variant not in ("prec", "succ"):
        raise ValueError(f"variant must be 'prec' or 'succ', got {variant!r}")
    a = rb.algebra
    n = a.dim
    prec = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    succ = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        ei = Vec.basis(n, i)
        for j in range(n):
            ej = Vec.basis(n, j)
            x_ry = mul_apply(a.mul, ei, rb.op(ej))
            rx_y = mul_apply(a.mul, rb.op(ei), ej)
            xy = mul_apply(a.mul, ei, ej)
            p = x_ry + xy.scale(rb.weight) if variant == "prec" else x_ry
            s = rx_y if variant == "prec" else rx_y + xy.scale(rb.weight)
            prec[i][j] = list(p.coeffs)
            succ[i][j] = list(s.coeffs)
    return Dendriform(n,
                      Mul(n, tuple(tuple(tuple(row) for row in plane) for plane in prec)),
                      Mul(n, tuple(tuple(tuple(row) for row in plane) for plane in succ)),
                      a.alpha, a.beta)


def dendriform_from_qt(a: Algebra, psi: Endo, omega: Endo, r: Elem2, weight,
                       variant: str = "prec") -> Dendriform:
    """Compose the Rota-Baxter and dendriform constructions for a solution r."""
    return dendriform_from_rb(rota_baxter_from_r(a, psi, omega, r, weight, sign="+"),
                              variant=variant)


def prelie_from_bialgebra(b: Bialgebra) -> PreLie:
    """x * y = (alpha^-2 beta omegainv(y_1) . betainv(x)) . psiinv(y_2),
    on a valid bialgebra with all four maps invertible."""
    _require_valid_bialgebra(b)
    a_, c_ = b.algebra, b.coalgebra
    n = b.dim
    alpha_inv = endo_inverse(a_.alpha)
    lead_map = (alpha_inv @ alpha_inv) @ a_.beta @ endo_inverse(c_.omega)
    beta_inv = endo_inverse(a_.beta)
    psi_inv = endo_inverse(c_.psi)
    star = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        bx = beta_inv(Vec.basis(n, i))
        for j in range(n):
            dj = comul_apply(c_.comul, Vec.basis(n, j))
            out = Vec.zero(n)
            for u in range(n):
                for v in range(n):
                    if dj.m[u][v] == 0:
                        continue
                    first = mul_apply(a_.mul, lead_map(Vec.basis(n, u)), bx)
                    term = mul_apply(a_.mul, first, psi_inv(Vec.basis(n, v)))
                    out = out + term.scale(dj.m[u][v])
            star[i][j] = list(out.coeffs)
    return PreLie(n, Mul(n, tuple(tuple(tuple(row) for row in plane) for plane in star)),
                  a_.alpha, a_.beta)


def prelie_noninv(b: Bialgebra) -> PreLie:
    """x * y = (beta^2 psi(y_1) . alpha(x)) . alpha^2 beta omega(y_2), with
    composite twists alpha^2 beta and alpha^2 beta^2 psi omega; no
    invertibility needed."""
    _require_valid_bialgebra(b)
    a_, c_ = b.algebra, b.coalgebra
    n = b.dim
    lead_map = (a_.beta @ a_.beta) @ c_.psi
    tail_map = (a_.alpha @ a_.alpha) @ a_.beta @ c_.omega
    star = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        ax = a_.alpha(Vec.basis(n, i))
        for j in range(n):
            dj = comul_apply(c_.comul, Vec.basis(n, j))
            out = Vec.zero(n)
            for u in range(n):
                for v in range(n):
                    if dj.m[u][v] == 0:
                        continue
                    first = mul_apply(a_.mul, lead_map(Vec.basis(n, u)), ax)
                    term = mul_apply(a_.mul, first, tail_map(Vec.basis(n, v)))
                    out = out + term.scale(dj.m[u][v])
            star[i][j] = list(out.coeffs)
    alpha2beta = (a_.alpha @ a_.alpha) @ a_.beta
    tail_twist = alpha2beta @ a_.beta @ c_.psi @ c_.omega
    return PreLie(n, Mul(n, tuple(tuple(tuple(row) for row in plane) for plane in star)),
                  alpha2beta, tail_twist)


def prelie_coalgebra(b: Bialgebra, noninv: bool = False) -> PreLieCoalgebra:
    """The two coproduct-side analogues of the pre-Lie constructions.

    noninv=False: D*(c) = psiinv(c_12) (x) alphainv psi omega^-2(c_11) . betainv(c_2)
                  with twists (psi, omega); all four maps must be invertible.
    noninv=True:  D*(c) = omega(c_12) (x) beta psi^2(c_11) . alpha psi omega^2(c_2)
                  with twists (psi omega^2, alpha beta psi^2 omega^2).
    """
    _require_valid_bialgebra(b)
    a_, c_ = b.algebra, b.coalgebra
    n = b.dim
    if noninv:
        first_map = c_.omega
        lead_map = (a_.beta @ c_.psi) @ c_.psi
        tail_map = (a_.alpha @ c_.psi) @ c_.omega @ c_.omega
        psi_out = c_.psi @ c_.omega @ c_.omega
        omega_out = (a_.alpha @ a_.beta @ c_.psi) @ c_.psi @ c_.omega @ c_.omega
    else:
        for f in (a_.alpha, a_.beta, c_.psi, c_.omega):
            endo_inverse(f)
        omega_inv = endo_inverse(c_.omega)
        first_map = endo_inverse(c_.psi)
        lead_map = (endo_inverse(a_.alpha) @ c_.psi) @ omega_inv @ omega_inv
        tail_map = endo_inverse(a_.beta)
        psi_out = c_.psi
        omega_out = c_.omega
    d = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        di = comul_apply(c_.comul, Vec.basis(n, i))
        for u in range(n):
            for v in range(n):
                if di.m[u][v] == 0:
                    continue
                du = comul_apply(c_.comul, Vec.basis(n, u))
                for s in range(n):
                    for t in range(n):
                        if du.m[s][t] == 0:
                            continue
                        coeff = di.m[u][v] * du.m[s][t]
                        left = first_map(Vec.basis(n, t))
                        right = mul_apply(a_.mul, lead_map(Vec.basis(n, s)),
                                          tail_map(Vec.basis(n, v)))
                        for x in range(n):
                            if left.coeffs[x] == 0:
                                continue
                            for y in range(n):
                                if right.coeffs[y] != 0:
                                    d[i][x][y] += coeff * left.coeffs[x] * right.coeffs[y]
    return PreLieCoalgebra(n, Comul(n, tuple(tuple(tuple(row) for row in plane) for plane in d)),
                           psi_out, omega_out)
