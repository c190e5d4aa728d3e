"""Exhaustive exact verifiers.

Every checker evaluates its displayed identities on the whole basis (no
sampling) and returns a :class:`Report`; mathematical failure is data,
never an exception. Identities are compared as dense linear maps between
tensor powers, so a violation pinpoints the source-basis tuple together
with both sides of the failed identity.

Equation labels used in reports ("(1.3)", "(12.4)", ...) are stable
internal identifiers; the table in the README spells out which identity
each label denotes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactcore import (
    LinMap, Q, action_map, coaction_map, comul_map, counit_map, endo_map,
    mul_map, raction_map, rcoaction_map, render_flat, unit_map,
)
from .structures import (
    Algebra, Augmented, Bialgebra, Bimodule, Coalgebra, Coaugmented,
    Dendriform, HopfBimodule, HopfModule, LeftComodule, LeftModule, PreLie,
    PreLieCoalgebra, RightComodule, RightModule, RotaBaxter,
)


@dataclass(frozen=True)
class Violation:
    equation_id: str
    indices: tuple[int, ...]
    lhs: str
    rhs: str

    def as_dict(self) -> dict:
        return {"equation_id": self.equation_id, "indices": list(self.indices),
                "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class Report:
    violations: tuple[Violation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {"passed": self.passed, "violations": [v.as_dict() for v in self.violations]}

    def by_equation(self, equation_id: str) -> tuple[Violation, ...]:
        return tuple(v for v in self.violations if v.equation_id == equation_id)


def _report(violations: list[Violation]) -> Report:
    return Report(tuple(sorted(violations, key=lambda v: (v.equation_id, v.indices, v.lhs, v.rhs))))


def _unflatten(flat: int, dims: tuple[int, ...]) -> tuple[int, ...]:
    idx = []
    for d in reversed(dims):
        flat, part = divmod(flat, d)
        idx.append(part)
    return tuple(reversed(idx))


def compare_maps(eq_id: str, lhs: LinMap, rhs: LinMap,
                 in_dims: tuple[int, ...], out_dims: tuple[int, ...],
                 out_legs: tuple[str, ...]) -> list[Violation]:
    """Columnwise comparison; one violation per differing source-basis tuple."""
    if (lhs.rows, lhs.cols) != (rhs.rows, rhs.cols):
        raise ValueError("comparing maps of different shape")
    out = []
    for col in range(lhs.cols):
        lcol, rcol = lhs.column(col), rhs.column(col)
        if lcol != rcol:
            out.append(Violation(
                eq_id, _unflatten(col, in_dims),
                render_flat(lcol, out_dims, out_legs),
                render_flat(rcol, out_dims, out_legs)))
    return out


# ---------------------------------------------------------------------------
# algebra / coalgebra / bialgebra


def check_bihom_algebra(a: Algebra) -> Report:
    n = a.dim
    al, be, mu = endo_map(a.alpha), endo_map(a.beta), mul_map(a.mul)
    i1 = LinMap.identity(n)
    v: list[Violation] = []
    v += compare_maps("(1.2)", al @ be, be @ al, (n,), (n,), ("e",))
    v += compare_maps("(1.2)", al @ mu, mu @ al.tensor(al), (n, n), (n,), ("e",))
    v += compare_maps("(1.2)", be @ mu, mu @ be.tensor(be), (n, n), (n,), ("e",))
    v += compare_maps("(1.3)", mu @ al.tensor(mu), mu @ mu.tensor(be), (n, n, n), (n,), ("e",))
    if a.unit is not None:
        eta = unit_map(a.unit)
        v += compare_maps("(1.5)", al @ eta, eta, (), (n,), ("e",))
        v += compare_maps("(1.5)", be @ eta, eta, (), (n,), ("e",))
        v += compare_maps("(1.5)", mu @ i1.tensor(eta), al, (n,), (n,), ("e",))
        v += compare_maps("(1.5)", mu @ eta.tensor(i1), be, (n,), (n,), ("e",))
    return _report(v)


def check_bihom_coalgebra(c: Coalgebra) -> Report:
    n = c.dim
    ps, om, de = endo_map(c.psi), endo_map(c.omega), comul_map(c.comul)
    i1 = LinMap.identity(n)
    v: list[Violation] = []
    v += compare_maps("(1.7)", ps @ om, om @ ps, (n,), (n,), ("e",))
    v += compare_maps("(1.7)", ps.tensor(ps) @ de, de @ ps, (n,), (n, n), ("e", "e"))
    v += compare_maps("(1.7)", om.tensor(om) @ de, de @ om, (n,), (n, n), ("e", "e"))
    v += compare_maps("(1.9)", de.tensor(ps) @ de, om.tensor(de) @ de,
                      (n,), (n, n, n), ("e", "e", "e"))
    if c.counit is not None:
        eps = counit_map(c.counit)
        v += compare_maps("(1.11)", eps @ ps, eps, (n,), (), ())
        v += compare_maps("(1.11)", eps @ om, eps, (n,), (), ())
        v += compare_maps("(1.11)", i1.tensor(eps) @ de, om, (n,), (n,), ("e",))
        v += compare_maps("(1.11)", eps.tensor(i1) @ de, ps, (n,), (n,), ("e",))
    return _report(v)


def _compat_sides(b: Bialgebra) -> tuple[LinMap, LinMap]:
    """Both sides of the weighted derivation law as maps A(x)A -> A(x)A."""
    n = b.dim
    a_, c_ = b.algebra, b.coalgebra
    mu, de = mul_map(a_.mul), comul_map(c_.comul)
    al, be = endo_map(a_.alpha), endo_map(a_.beta)
    ps, om = endo_map(c_.psi), endo_map(c_.omega)
    lhs = de @ mu
    rhs = (mu.tensor(be) @ om.tensor(de)
           + al.tensor(mu) @ de.tensor(ps)
           + (al @ om).tensor(be @ ps).scale(b.weight))
    return lhs, rhs


def check_compatibility(b: Bialgebra) -> Report:
    """Only the weighted derivation law, on all basis pairs."""
    n = b.dim
    lhs, rhs = _compat_sides(b)
    return _report(compare_maps("(12.4)", lhs, rhs, (n, n), (n, n), ("e", "e")))


def compatibility_holds(b: Bialgebra) -> bool:
    lhs, rhs = _compat_sides(b)
    return lhs == rhs


def check_infbh_bialgebra(b: Bialgebra) -> Report:
    n = b.dim
    a_, c_ = b.algebra, b.coalgebra
    mu, de = mul_map(a_.mul), comul_map(c_.comul)
    al, be = endo_map(a_.alpha), endo_map(a_.beta)
    ps, om = endo_map(c_.psi), endo_map(c_.omega)
    v = list(check_bihom_algebra(a_).violations)
    v += list(check_bihom_coalgebra(c_).violations)
    for f, g in ((al, ps), (al, om), (be, ps), (be, om)):
        v += compare_maps("(12.1)", f @ g, g @ f, (n,), (n,), ("e",))
    v += compare_maps("(12.2)", al.tensor(al) @ de, de @ al, (n,), (n, n), ("e", "e"))
    v += compare_maps("(12.2)", be.tensor(be) @ de, de @ be, (n,), (n, n), ("e", "e"))
    v += compare_maps("(12.3)", ps @ mu, mu @ ps.tensor(ps), (n, n), (n,), ("e",))
    v += compare_maps("(12.3)", om @ mu, mu @ om.tensor(om), (n, n), (n,), ("e",))
    v += list(check_compatibility(b).violations)
    if a_.unit is not None:
        eta = unit_map(a_.unit)
        v += compare_maps("(12.30)", ps @ eta, eta, (), (n,), ("e",))
        v += compare_maps("(12.30)", om @ eta, eta, (), (n,), ("e",))
        # derived diagnostic: the coproduct of the unit is -weight * 1 (x) 1
        v += compare_maps("(L2.11a)", de @ eta, (eta.tensor(eta)).scale(-b.weight),
                          (), (n, n), ("e", "e"))
    if c_.counit is not None:
        eps = counit_map(c_.counit)
        v += compare_maps("(12.31)", eps @ al, eps, (n,), (), ())
        v += compare_maps("(12.31)", eps @ be, eps, (n,), (), ())
        # derived diagnostic: the counit is multiplicative up to -weight
        v += compare_maps("(L2.11b)", eps @ mu, (eps.tensor(eps)).scale(-b.weight),
                          (n, n), (), ())
    return _report(v)


def check_derivation(b: Bialgebra) -> Report:
    """The coproduct as a weighted twisted derivation of the product."""
    n = b.dim
    a_, c_ = b.algebra, b.coalgebra
    de = comul_map(c_.comul)
    al, be = endo_map(a_.alpha), endo_map(a_.beta)
    ps, om = endo_map(c_.psi), endo_map(c_.omega)
    v: list[Violation] = []
    for eqid, f in (("(12.9)", al), ("(12.9)", be), ("(12.9)", ps), ("(12.9)", om)):
        v += compare_maps(eqid, f.tensor(f) @ de, de @ f, (n,), (n, n), ("e", "e"))
    lhs, rhs = _compat_sides(b)
    v += compare_maps("(12.10)", lhs, rhs, (n, n), (n, n), ("e", "e"))
    return _report(v)


def check_coderivation(b: Bialgebra) -> Report:
    """The product as a weighted twisted coderivation of the coproduct."""
    n = b.dim
    a_, c_ = b.algebra, b.coalgebra
    mu = mul_map(a_.mul)
    al, be = endo_map(a_.alpha), endo_map(a_.beta)
    ps, om = endo_map(c_.psi), endo_map(c_.omega)
    v: list[Violation] = []
    for f in (om, ps, al, be):
        v += compare_maps("(12.11)", mu @ f.tensor(f), f @ mu, (n, n), (n,), ("e",))
    lhs, rhs = _compat_sides(b)
    v += compare_maps("(12.12)", lhs, rhs, (n, n), (n, n), ("e", "e"))
    return _report(v)


# ---------------------------------------------------------------------------
# modules, comodules, Hopf modules


def check_left_module(m: LeftModule) -> Report:
    a_ = m.over
    na, nm = a_.dim, m.dim
    gam = action_map(m.action, na, nm)
    al_a, be_a = endo_map(a_.alpha), endo_map(a_.beta)
    al_m, be_m = endo_map(m.alpha_m), endo_map(m.beta_m)
    mu = mul_map(a_.mul)
    v: list[Violation] = []
    v += compare_maps("(1.13)", al_m @ be_m, be_m @ al_m, (nm,), (nm,), ("m",))
    v += compare_maps("(1.13)", al_m @ gam, gam @ al_a.tensor(al_m), (na, nm), (nm,), ("m",))
    v += compare_maps("(1.13)", be_m @ gam, gam @ be_a.tensor(be_m), (na, nm), (nm,), ("m",))
    v += compare_maps("(1.15)", gam @ al_a.tensor(gam), gam @ mu.tensor(be_m),
                      (na, na, nm), (nm,), ("m",))
    return _report(v)


def check_right_module(m: RightModule) -> Report:
    a_ = m.over
    na, nm = a_.dim, m.dim
    nu = raction_map(m.action, nm, na)
    al_a, be_a = endo_map(a_.alpha), endo_map(a_.beta)
    al_m, be_m = endo_map(m.alpha_m), endo_map(m.beta_m)
    mu = mul_map(a_.mul)
    v: list[Violation] = []
    v += compare_maps("(1.13R)", al_m @ be_m, be_m @ al_m, (nm,), (nm,), ("m",))
    v += compare_maps("(1.13R)", al_m @ nu, nu @ al_m.tensor(al_a), (nm, na), (nm,), ("m",))
    v += compare_maps("(1.13R)", be_m @ nu, nu @ be_m.tensor(be_a), (nm, na), (nm,), ("m",))
    v += compare_maps("(1.15R)", nu @ nu.tensor(be_a), nu @ al_m.tensor(mu),
                      (nm, na, na), (nm,), ("m",))
    return _report(v)


def check_bimodule(b: Bimodule) -> Report:
    a_ = b.over
    na, nm = a_.dim, b.dim
    gam = action_map(b.action, na, nm)
    nu = raction_map(b.raction, nm, na)
    al_a, be_a = endo_map(a_.alpha), endo_map(a_.beta)
    v = list(check_left_module(b.left).violations)
    v += list(check_right_module(b.right).violations)
    v += compare_maps("(1.16)", gam @ al_a.tensor(nu), nu @ gam.tensor(be_a),
                      (na, nm, na), (nm,), ("m",))
    return _report(v)


def check_left_comodule(m: LeftComodule) -> Report:
    c_ = m.over
    na, nm = c_.dim, m.dim
    rho = coaction_map(m.coaction, nm, na)
    ps_a, om_a = endo_map(c_.psi), endo_map(c_.omega)
    ps_m, om_m = endo_map(m.psi_m), endo_map(m.omega_m)
    de = comul_map(c_.comul)
    v: list[Violation] = []
    v += compare_maps("(1.13C)", ps_m @ om_m, om_m @ ps_m, (nm,), (nm,), ("m",))
    v += compare_maps("(1.13C)", ps_a.tensor(ps_m) @ rho, rho @ ps_m, (nm,), (na, nm), ("e", "m"))
    v += compare_maps("(1.13C)", om_a.tensor(om_m) @ rho, rho @ om_m, (nm,), (na, nm), ("e", "m"))
    v += compare_maps("(1.15C)", de.tensor(ps_m) @ rho, om_a.tensor(rho) @ rho,
                      (nm,), (na, na, nm), ("e", "e", "m"))
    return _report(v)


def check_right_comodule(m: RightComodule) -> Report:
    c_ = m.over
    na, nm = c_.dim, m.dim
    phi = rcoaction_map(m.coaction, nm, na)
    ps_a, om_a = endo_map(c_.psi), endo_map(c_.omega)
    ps_m, om_m = endo_map(m.psi_m), endo_map(m.omega_m)
    de = comul_map(c_.comul)
    v: list[Violation] = []
    v += compare_maps("(1.13CR)", ps_m @ om_m, om_m @ ps_m, (nm,), (nm,), ("m",))
    v += compare_maps("(1.13CR)", ps_m.tensor(ps_a) @ phi, phi @ ps_m, (nm,), (nm, na), ("m", "e"))
    v += compare_maps("(1.13CR)", om_m.tensor(om_a) @ phi, phi @ om_m, (nm,), (nm, na), ("m", "e"))
    v += compare_maps("(1.15CR)", phi.tensor(ps_a) @ phi, om_m.tensor(de) @ phi,
                      (nm,), (nm, na, na), ("m", "e", "e"))
    return _report(v)


def _hopf_compat(b: Bialgebra, gam: LinMap, rho: LinMap,
                 be_m: LinMap, ps_m: LinMap) -> tuple[LinMap, LinMap]:
    """Both sides of the left Hopf-module coupling as maps A(x)M -> A(x)M."""
    a_, c_ = b.algebra, b.coalgebra
    mu, de = mul_map(a_.mul), comul_map(c_.comul)
    al, om = endo_map(a_.alpha), endo_map(c_.omega)
    lhs = rho @ gam
    rhs = (mu.tensor(be_m) @ om.tensor(rho)
           + al.tensor(gam) @ de.tensor(ps_m)
           + (al @ om).tensor(be_m @ ps_m).scale(b.weight))
    return lhs, rhs


def check_hopf_module(h: HopfModule) -> Report:
    b = h.over
    na, nm = b.dim, h.module.dim
    v = list(check_left_module(h.module).violations)
    v += list(check_left_comodule(h.comodule).violations)
    maps = {"alpha_m": h.module.alpha_m, "beta_m": h.module.beta_m,
            "psi_m": h.comodule.psi_m, "omega_m": h.comodule.omega_m}
    names = list(maps)
    for i, x in enumerate(names):
        for y in names[i + 1:]:
            v += compare_maps("(HM.comm)", endo_map(maps[x]) @ endo_map(maps[y]),
                              endo_map(maps[y]) @ endo_map(maps[x]), (nm,), (nm,), ("m",))
    gam = action_map(h.module.action, na, nm)
    rho = coaction_map(h.comodule.coaction, nm, na)
    lhs, rhs = _hopf_compat(b, gam, rho, endo_map(h.module.beta_m), endo_map(h.comodule.psi_m))
    v += compare_maps("(12.13)", lhs, rhs, (na, nm), (na, nm), ("e", "m"))
    return _report(v)


def check_hopf_bimodule(h: HopfBimodule) -> Report:
    """The five-part axiom set for simultaneous left/right Hopf structure."""
    b = h.over
    a_, c_ = b.algebra, b.coalgebra
    na, nm = b.dim, h.dim
    left_mod = LeftModule(a_, nm, h.action, h.alpha_m, h.beta_m)
    right_mod = RightModule(a_, nm, h.raction, h.alpha_m, h.beta_m)
    left_com = LeftComodule(c_, nm, h.coaction, h.psi_m, h.omega_m)
    right_com = RightComodule(c_, nm, h.rcoaction, h.psi_m, h.omega_m)

    # (1) left Hopf module
    v = list(check_hopf_module(HopfModule(b, left_mod, left_com)).violations)

    # (2) right Hopf module: mirrored coupling phi o nu
    mu, de = mul_map(a_.mul), comul_map(c_.comul)
    al_a, be_a = endo_map(a_.alpha), endo_map(a_.beta)
    ps_a, om_a = endo_map(c_.psi), endo_map(c_.omega)
    al_m, be_m = endo_map(h.alpha_m), endo_map(h.beta_m)
    ps_m, om_m = endo_map(h.psi_m), endo_map(h.omega_m)
    nu = raction_map(h.raction, nm, na)
    phi = rcoaction_map(h.rcoaction, nm, na)
    v += list(check_right_module(right_mod).violations)
    v += list(check_right_comodule(right_com).violations)
    rhs = (nu.tensor(be_a) @ om_m.tensor(de)
           + al_m.tensor(mu) @ phi.tensor(ps_a)
           + (al_m @ om_m).tensor(be_a @ ps_a).scale(b.weight))
    v += compare_maps("(12.13R)", phi @ nu, rhs, (nm, na), (nm, na), ("m", "e"))

    # (3) bimodule and (4) bicomodule
    gam = action_map(h.action, na, nm)
    rho = coaction_map(h.coaction, nm, na)
    v += compare_maps("(1.16)", gam @ al_a.tensor(nu), nu @ gam.tensor(be_a),
                      (na, nm, na), (nm,), ("m",))
    v += compare_maps("(1.16C)", om_a.tensor(phi) @ rho, rho.tensor(ps_a) @ phi,
                      (nm,), (na, nm, na), ("e", "m", "e"))

    # (5) the two cross couplings
    v += compare_maps("(20.01)", phi @ gam, gam.tensor(be_a) @ om_a.tensor(phi),
                      (na, nm), (nm, na), ("m", "e"))
    v += compare_maps("(20.02)", rho @ nu, al_a.tensor(nu) @ rho.tensor(ps_a),
                      (nm, na), (na, nm), ("e", "m"))
    return _report(v)


# ---------------------------------------------------------------------------
# augmentations


def check_augmented(a: Augmented) -> Report:
    alg = a.algebra
    n = alg.dim
    chi = counit_map(a.chi)
    mu = mul_map(alg.mul)
    v: list[Violation] = []
    v += compare_maps("(12.5m)", chi @ endo_map(alg.alpha), chi, (n,), (), ())
    v += compare_maps("(12.5m)", chi @ endo_map(alg.beta), chi, (n,), (), ())
    v += compare_maps("(12.5)", chi @ mu, chi.tensor(chi).scale(-a.weight), (n, n), (), ())
    return _report(v)


def check_coaugmented(c: Coaugmented) -> Report:
    co = c.coalgebra
    n = co.dim
    zeta = unit_map(c.zeta)
    de = comul_map(co.comul)
    v: list[Violation] = []
    v += compare_maps("(12.42m)", endo_map(co.omega) @ zeta, zeta, (), (n,), ("e",))
    v += compare_maps("(12.42m)", endo_map(co.psi) @ zeta, zeta, (), (n,), ("e",))
    v += compare_maps("(12.42)", de @ zeta, zeta.tensor(zeta).scale(-c.weight),
                      (), (n, n), ("e", "e"))
    return _report(v)


# ---------------------------------------------------------------------------
# Rota-Baxter / dendriform / pre-Lie


def check_rota_baxter(rb: RotaBaxter) -> Report:
    alg = rb.algebra
    n = alg.dim
    mu = mul_map(alg.mul)
    r_ = endo_map(rb.op)
    i1 = LinMap.identity(n)
    v: list[Violation] = []
    v += compare_maps("(RB.alpha)", endo_map(alg.alpha) @ r_, r_ @ endo_map(alg.alpha),
                      (n,), (n,), ("e",))
    v += compare_maps("(RB.beta)", endo_map(alg.beta) @ r_, r_ @ endo_map(alg.beta),
                      (n,), (n,), ("e",))
    lhs = mu @ r_.tensor(r_)
    rhs = r_ @ (mu @ r_.tensor(i1) + mu @ i1.tensor(r_) + mu.scale(rb.weight))
    v += compare_maps("(RB)", lhs, rhs, (n, n), (n,), ("e",))
    return _report(v)


def check_dendriform(d: Dendriform, full_axioms: bool = False) -> Report:
    """Primary check: the total product is BiHom-associative.

    The three split relations are literature-sourced and only verified
    behind the opt-in flag.
    """
    n = d.dim
    total = Algebra(n, d.total, d.alpha, d.beta, unit=None)
    v = list(check_bihom_algebra(total).violations)
    if full_axioms:
        al, be = endo_map(d.alpha), endo_map(d.beta)
        pr, su = mul_map(d.prec), mul_map(d.succ)
        both = pr + su
        for f in (al, be):
            v += compare_maps("(D.maps)", f @ pr, pr @ f.tensor(f), (n, n), (n,), ("e",))
            v += compare_maps("(D.maps)", f @ su, su @ f.tensor(f), (n, n), (n,), ("e",))
        v += compare_maps("(D.1)", pr @ pr.tensor(be), pr @ al.tensor(both),
                          (n, n, n), (n,), ("e",))
        v += compare_maps("(D.2)", pr @ su.tensor(be), su @ al.tensor(pr),
                          (n, n, n), (n,), ("e",))
        v += compare_maps("(D.3)", su @ al.tensor(su), su @ both.tensor(be),
                          (n, n, n), (n,), ("e",))
    return _report(v)


def check_prelie(p: PreLie) -> Report:
    n = p.dim
    st = mul_map(p.star)
    al, be = endo_map(p.alpha), endo_map(p.beta)
    v: list[Violation] = []
    v += compare_maps("(13.1m)", al @ be, be @ al, (n,), (n,), ("e",))
    v += compare_maps("(13.1m)", al @ st, st @ al.tensor(al), (n, n), (n,), ("e",))
    v += compare_maps("(13.1m)", be @ st, st @ be.tensor(be), (n, n), (n,), ("e",))
    # twisted associator, then symmetry in the first two arguments
    assoc = st @ (al @ be).tensor(st @ al.tensor(LinMap.identity(n))) \
        - st @ (st @ be.tensor(al)).tensor(be)
    flipped = _swap12(assoc, n)
    v += compare_maps("(13.1)", assoc, flipped, (n, n, n), (n,), ("e",))
    return _report(v)


def _swap12(m: LinMap, n: int) -> LinMap:
    """Precompose a map on A(x)A(x)A with the flip of the first two legs."""
    cols = n * n * n
    rows = m.rows
    out = [[Q(0)] * cols for _ in range(rows)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                src = (b * n + a) * n + c
                dst = (a * n + b) * n + c
                for r in range(rows):
                    out[r][dst] = m.a[r][src]
    return LinMap(rows, cols, tuple(tuple(r) for r in out))


def check_prelie_coalgebra(p: PreLieCoalgebra) -> Report:
    n = p.dim
    de = comul_map(p.delta)
    ps, om = endo_map(p.psi), endo_map(p.omega)
    i1 = LinMap.identity(n)
    v: list[Violation] = []
    v += compare_maps("(co13.1m)", ps @ om, om @ ps, (n,), (n,), ("e",))
    v += compare_maps("(co13.1m)", ps.tensor(ps) @ de, de @ ps, (n,), (n, n), ("e", "e"))
    v += compare_maps("(co13.1m)", om.tensor(om) @ de, de @ om, (n,), (n, n), ("e", "e"))
    bar = ((om @ ps).tensor(om).tensor(i1) @ i1.tensor(de) @ de
           - ps.tensor(om).tensor(ps) @ de.tensor(i1) @ de)
    flipped = _postswap12(bar, n)
    v += compare_maps("(co13.1)", bar - flipped, LinMap.zero(n * n * n, n),
                      (n,), (n, n, n), ("e", "e", "e"))
    return _report(v)


def _postswap12(m: LinMap, n: int) -> LinMap:
    """Compose a map into A(x)A(x)A with the flip of the first two legs."""
    rows = n * n * n
    out = [[Q(0)] * m.cols for _ in range(rows)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                src = (a * n + b) * n + c
                dst = (b * n + a) * n + c
                for col in range(m.cols):
                    out[dst][col] = m.a[src][col]
    return LinMap(rows, m.cols, tuple(tuple(r) for r in out))
