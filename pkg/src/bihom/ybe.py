"""Nonhomogeneous (co)associative Yang-Baxter residuals and searches.

The residual of r at weight w is the exact tensor

    r13r12 - r12r23 + r23r13 - w*r13        (quasitriangular convention)

and the anti flag flips the sign of the last term, i.e. asks whether r
solves the equation at weight -w while the ambient structure keeps its own
weight. Reports carry the full residual so tests can assert coefficient
patterns of near-solutions, plus the four characterization booleans
evaluated through the induced (co)products.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction

from . import axioms, constructions
from .errors import BihomError, MissingCounit, MissingUnit, SearchSpaceTooLarge
from .exactcore import (
    ELEM3_KINDS as ELEM3_ALL, BiForm, Elem2, Elem3, Endo, Q, Vec, ZERO,
    comul_apply, comul_map, elem2_invariant_under, elem3_build, endo_inverse,
    endo_is_invertible, endo_map, flat_elem3, mul_apply,
)
from .structures import Algebra, Coalgebra, act_triple


@dataclass(frozen=True)
class YbeReport:
    residual: Elem3
    is_solution: bool
    characterization: dict[str, bool]

    def as_dict(self) -> dict:
        from .exactcore import render_elem3
        return {"is_solution": self.is_solution,
                "residual": render_elem3(self.residual),
                "characterization": dict(sorted(self.characterization.items()))}


_RESIDUAL_KINDS = ("r13r12", "r12r23", "r23r13", "r13")


def _build_parts(a: Algebra, psi: Endo, omega: Endo, r: Elem2, kinds) -> dict[str, Elem3]:
    if a.unit is None:
        raise MissingUnit("the residual needs the unit element")
    return {kind: elem3_build(kind, a.mul, a.alpha, a.beta, psi, omega, a.unit, r)
            for kind in kinds}


def _residual_from_parts(parts: dict[str, Elem3], weight: Q, anti: bool) -> Elem3:
    sign = -weight if anti else weight
    return parts["r13r12"] - parts["r12r23"] + parts["r23r13"] - parts["r13"].scale(sign)


def _residual_elem3(a: Algebra, psi: Endo, omega: Endo, r: Elem2, weight: Q,
                    anti: bool) -> Elem3:
    return _residual_from_parts(_build_parts(a, psi, omega, r, _RESIDUAL_KINDS),
                                weight, anti)


def abhybe_residual(a: Algebra, psi: Endo, omega: Endo, r: Elem2, weight,
                    anti: bool = False) -> YbeReport:
    """Residual and characterizations of r on a unital algebra.

    The raw residual is computed for arbitrary r; the characterization
    entries additionally need invertible alpha, beta and an invariant r
    (they evaluate both sides through the induced coproducts) and are
    omitted when those hypotheses fail.
    """
    weight = Q(weight)
    invariant = all(elem2_invariant_under(f, r) for f in (a.alpha, a.beta, psi, omega))
    characterizable = (invariant and endo_is_invertible(a.alpha)
                       and endo_is_invertible(a.beta))
    kinds = ELEM3_ALL if characterizable else _RESIDUAL_KINDS
    parts = _build_parts(a, psi, omega, r, kinds)
    residual = _residual_from_parts(parts, weight, anti)
    characterization: dict[str, bool] = {}
    if characterizable:
        try:
            for anti_flag, key_left, key_right in ((False, "(14.8)", "(14.9)"),
                                                   (True, "(14.28)", "(14.29)")):
                comul = constructions._delta_r_comul(a, psi, omega, r, weight, anti_flag)
                dmap = comul_map(comul)
                lhs_left = flat_elem3(dmap.tensor(endo_map(psi)).apply_flat(_flat2(r)), a.dim)
                lhs_right = flat_elem3(endo_map(omega).tensor(dmap).apply_flat(_flat2(r)), a.dim)
                if anti_flag:
                    rhs_left = (-parts["r23r13"]) - (parts["r23"] + parts["r13"]).scale(weight)
                    rhs_right = parts["r13r12"]
                else:
                    rhs_left = -parts["r23r13"]
                    rhs_right = parts["r13r12"] - (parts["r13"] + parts["r12"]).scale(weight)
                characterization[key_left] = lhs_left == rhs_left
                characterization[key_right] = lhs_right == rhs_right
        except BihomError:
            characterization = {}
    return YbeReport(residual, residual.is_zero(), characterization)


def _flat2(r: Elem2):
    return tuple(r.m[i][j] for i in range(r.dim) for j in range(r.dim))


def coboundary_check(a: Algebra, psi: Endo, omega: Endo, r: Elem2, weight,
                     anti: bool = False) -> axioms.Report:
    """The invariance condition equivalent to coassociativity of the
    r-induced coproduct: for every basis x,

        omega alphainv(x) |> residual = residual <| psi betainv(x).
    """
    weight = Q(weight)
    alpha_inv = endo_inverse(a.alpha)
    beta_inv = endo_inverse(a.beta)
    residual = _residual_elem3(a, psi, omega, r, weight, anti)
    eq_id = "(coboundary1)" if anti else "(coboundary)"
    violations = []
    n = a.dim
    for i in range(n):
        x = Vec.basis(n, i)
        lhs = act_triple(a, psi, omega, "left", (omega @ alpha_inv)(x), residual)
        rhs = act_triple(a, psi, omega, "right", (psi @ beta_inv)(x), residual)
        if lhs != rhs:
            from .exactcore import render_elem3
            violations.append(axioms.Violation(eq_id, (i,), render_elem3(lhs), render_elem3(rhs)))
    return axioms._report(violations)


def _pair_table(sigma: BiForm, f: Endo, g: Endo):
    """table[i][j] = sigma(f(e_i), g(e_j))."""
    n = sigma.dim
    return [[sum((sigma.s[u][v] * f.entries[u][i] * g.entries[v][j]
                  for u in range(n) for v in range(n)
                  if f.entries[u][i] != 0 and g.entries[v][j] != 0), ZERO)
             for j in range(n)] for i in range(n)]


def coabhybe_residual(c: Coalgebra, alpha: Endo, beta: Endo, sigma: BiForm, weight,
                      anti: bool = False) -> YbeReport:
    """Residual of a bilinear form on a counital coalgebra, as the rank-3
    value tensor of the defining identity's LHS minus RHS on basis triples."""
    weight = Q(weight)
    if c.counit is None:
        raise MissingCounit("the co-residual needs the counit")
    n = c.dim
    eps = c.counit
    sign = -weight if anti else weight
    ident = Endo.identity(n)

    deltas = [comul_apply(c.comul, Vec.basis(n, i)) for i in range(n)]
    s_a_bo = _pair_table(sigma, alpha, beta @ c.omega)      # sigma(alpha(u), beta omega(k))
    s_id_psi = _pair_table(sigma, ident, c.psi)             # sigma(v, psi(j))
    s_om_id = _pair_table(sigma, c.omega, ident)            # sigma(omega(i), u)
    s_apsi_b = _pair_table(sigma, alpha @ c.psi, beta)      # sigma(alpha psi(i), beta(v))
    s_a_b = _pair_table(sigma, alpha, beta)                 # sigma(alpha(i), beta(k))

    tensor = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                term1 = sum((deltas[i].m[u][v] * s_a_bo[u][k] * s_id_psi[v][j]
                             for u in range(n) for v in range(n)
                             if deltas[i].m[u][v] != 0), ZERO)
                term2 = sum((deltas[j].m[u][v] * s_om_id[i][u] * s_id_psi[v][k]
                             for u in range(n) for v in range(n)
                             if deltas[j].m[u][v] != 0), ZERO)
                term3 = sum((deltas[k].m[u][v] * s_om_id[j][u] * s_apsi_b[i][v]
                             for u in range(n) for v in range(n)
                             if deltas[k].m[u][v] != 0), ZERO)
                rhs = sign * s_a_b[i][k] * eps.coeffs[j]
                tensor[i][j][k] = term1 - term2 + term3 - rhs
    residual = Elem3(n, tuple(tuple(tuple(row) for row in plane) for plane in tensor))

    characterization: dict[str, bool] = {}
    invariant = all(
        _pair_table(sigma, f, f) == [list(row) for row in sigma.s]
        for f in (alpha, beta, c.psi, c.omega))
    if invariant and endo_is_invertible(c.psi) and endo_is_invertible(c.omega):
        try:
            characterization.update(_coqt_characterization(
                c, alpha, beta, sigma, weight, deltas,
                dict(s_a_bo=s_a_bo, s_id_psi=s_id_psi, s_om_id=s_om_id,
                     s_apsi_b=s_apsi_b, s_a_b=s_a_b)))
        except BihomError:
            characterization = {}
    return YbeReport(residual, residual.is_zero(), characterization)


def _coqt_characterization(c: Coalgebra, alpha: Endo, beta: Endo, sigma: BiForm,
                           weight: Q, deltas, tables) -> dict[str, bool]:
    n = c.dim
    eps = c.counit
    ident = Endo.identity(n)
    s_id_b = _pair_table(sigma, ident, beta)    # sigma(u, beta(k))
    s_a_id = _pair_table(sigma, alpha, ident)   # sigma(alpha(i), u)
    s_plain = [list(row) for row in sigma.s]

    characterization: dict[str, bool] = {}
    for anti_flag, key_prod, key_dual in ((False, "(01.06)", "(01.07)"),
                                          (True, "(01.10)", "(01.11)")):
        mul = constructions._mu_sigma_mul(c, alpha, beta, sigma, weight, anti_flag)
        ok_prod = True
        ok_dual = True
        for i in range(n):
            for j in range(n):
                prod_ij = mul.c[i][j]
                for k in range(n):
                    lhs = sum((prod_ij[u] * s_id_b[u][k] for u in range(n)
                               if prod_ij[u] != 0), ZERO)
                    rhs = -sum((deltas[k].m[u][v] * tables["s_om_id"][j][u]
                                * tables["s_apsi_b"][i][v]
                                for u in range(n) for v in range(n)
                                if deltas[k].m[u][v] != 0), ZERO)
                    if anti_flag:
                        rhs -= weight * tables["s_a_b"][i][k] * eps.coeffs[j]
                        rhs -= weight * s_plain[j][k] * eps.coeffs[i]
                    if lhs != rhs:
                        ok_prod = False
                    prod_jk = mul.c[j][k]
                    lhs2 = sum((prod_jk[u] * s_a_id[i][u] for u in range(n)
                                if prod_jk[u] != 0), ZERO)
                    rhs2 = sum((deltas[i].m[u][v] * tables["s_a_bo"][u][k]
                                * tables["s_id_psi"][v][j]
                                for u in range(n) for v in range(n)
                                if deltas[i].m[u][v] != 0), ZERO)
                    if not anti_flag:
                        rhs2 -= weight * tables["s_a_b"][i][k] * eps.coeffs[j]
                        rhs2 -= weight * s_plain[i][j] * eps.coeffs[k]
                    if lhs2 != rhs2:
                        ok_dual = False
        characterization[key_prod] = ok_prod
        characterization[key_dual] = ok_dual
    return characterization


def worker_count() -> int:
    """Worker cap from the optional BIHOM_THREADS variable (default 1)."""
    raw = os.environ.get("BIHOM_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _solves(args) -> bool:
    a, psi, omega, weight, r, require_invariant = args
    if require_invariant and not all(
            elem2_invariant_under(f, r) for f in (a.alpha, a.beta, psi, omega)):
        return False
    return _residual_elem3(a, psi, omega, r, weight, anti=False).is_zero()


def grid_search_r(a: Algebra, psi: Endo, omega: Endo, weight,
                  coeff_set, require_invariant: bool = True,
                  guard: int = 10_000_000) -> list[Elem2]:
    """All r with entries from coeff_set and zero residual, in lexicographic
    order of their row-major coefficient tuples.

    The candidate space is split across BIHOM_THREADS worker processes when
    that cap exceeds one; verdicts are merged back in grid order, so the
    result is identical either way.
    """
    weight = Q(weight)
    coeffs = sorted({Q(x) for x in coeff_set})
    n = a.dim
    slots = n * n
    total = len(coeffs) ** slots
    if total > guard:
        raise SearchSpaceTooLarge(f"{total} candidates exceed the guard of {guard}")
    candidates = [Elem2(n, tuple(tuple(combo[i * n + j] for j in range(n))
                                 for i in range(n)))
                  for combo in itertools.product(coeffs, repeat=slots)]
    jobs = [(a, psi, omega, weight, r, require_invariant) for r in candidates]
    workers = min(worker_count(), len(jobs)) if jobs else 1
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as pool:
            verdicts = list(pool.map(_solves, jobs, chunksize=max(1, len(jobs) // workers)))
    else:
        verdicts = [_solves(job) for job in jobs]
    return [r for r, ok in zip(candidates, verdicts) if ok]


def grid_candidates(a: Algebra, psi: Endo, omega: Endo, coeff_set,
                    require_invariant: bool = True,
                    guard: int = 10_000_000) -> list[Elem2]:
    """Every grid candidate (solutions and non-solutions alike), for the
    equivalence sweeps that quantify over the whole grid."""
    coeffs = sorted({Q(x) for x in coeff_set})
    n = a.dim
    slots = n * n
    total = len(coeffs) ** slots
    if total > guard:
        raise SearchSpaceTooLarge(f"{total} candidates exceed the guard of {guard}")
    out = []
    for combo in itertools.product(coeffs, repeat=slots):
        r = Elem2(n, tuple(tuple(combo[i * n + j] for j in range(n)) for i in range(n)))
        if require_invariant and not all(
                elem2_invariant_under(f, r) for f in (a.alpha, a.beta, psi, omega)):
            continue
        out.append(r)
    return out
