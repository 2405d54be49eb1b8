"""Formula-versus-oracle checks for one genus, streamed one result at a time."""

from dataclasses import dataclass

from . import combinatorics as comb
from . import eigen
from .bounds import BoundParams, find_crossover, leading_coeff_check
from .hall import generate_hall, verify_hall_spans
from .oracle import DEFAULT_BUDGET, check_witt, relation_piece
from .quotients import (
    check_lower_bound,
    degree_two_f0_image,
    minus_dims_exact,
    verify_h1_independence,
)


@dataclass(frozen=True)
class Check:
    name: str
    params: str
    ok: bool
    detail: str = ""

    def as_dict(self):
        return {"check": self.name, "params": self.params,
                "status": "pass" if self.ok else "FAIL", "detail": self.detail}


def run_verification(g, max_n, budget=None):
    """Yield ``Check`` results; oracle checks raise ``BudgetExceeded`` lazily."""
    budget = budget or DEFAULT_BUDGET
    k = 2 * g

    # closed forms only
    ok = all(comb.zn_nprime_formula(g, n)
             == comb.zn_n_lower_bound(g, n) + comb.relation_image_upper_bound(g, n)
             for n in range(2, 41))
    yield Check("formula_split", f"g={g} n=2..40", ok)
    ok = all(eigen.sym_eigen_dims(g, m).total == comb.binomial(m + 2 * g - 1, 2 * g - 1)
             and (m % 2 == 0 or eigen.sym_eigen_dims(g, m).plus == eigen.sym_eigen_dims(g, m).minus)
             for m in range(22))
    yield Check("sym_eigen_identities", f"g={g} m=0..21", ok)
    ok = all(eigen.sym_eigen_dims(g, m) == eigen.sym_eigen_dims_enumerated(g, m)
             for m in range(11))
    yield Check("sym_eigen_enumeration", f"g={g} m=0..10", ok)
    ok = all(eigen.f0_count(g, n) <= eigen.f0_upper_bound(g, n) for n in range(2, 31))
    yield Check("f0_count_le_bound", f"g={g} n=2..30", ok)
    if g >= 2:
        yield Check("leading_coefficient", f"g={g}", leading_coeff_check(g))
        report = find_crossover(BoundParams(g=g, horizon=200 + 100 * (g - 2)))
        yield Check("crossover", f"g={g} B=0 c0=0 horizon={report.params.horizon}",
                    report.n0 is not None, f"n0={report.n0}")

    # oracle
    for n in range(1, max_n + 1):
        budget.check(k, n)
        yield Check("lyndon_rank_eq_witt", f"k={k} n={n}", check_witt(k, n),
                    f"witt={comb.witt_dimension(k, n)}")
    table = generate_hall(k, max_n)
    for n in range(1, max_n + 1):
        rep = verify_hall_spans(k, n, table=table, budget=budget)
        yield Check("hall_spans", f"k={k} n={n}", rep.ok,
                    f"ranks={rep.rank_all},{rep.rank_upper_levels} "
                    f"expected={rep.witt},{rep.rank_derived3}")
    for n in range(2, max_n + 1):
        rec = check_lower_bound(g, n, budget=budget)
        yield Check("metabelian_formula", f"g={g} n={n}",
                    rec.dim_Znprime == rec.formula_Znprime,
                    f"exact={rec.dim_Znprime} formula={rec.formula_Znprime}")
        yield Check("surface_lower_bound", f"g={g} n={n}", not rec.violations,
                    f"dim={rec.dim_Zn} bound={rec.lower_bound_Zn} "
                    f"relation_image={rec.relation_image_exact}/{rec.relation_image_bound}")
        yield Check("h1_independence", f"g={g} n={n}", verify_h1_independence(g, n, budget=budget))
    if max_n >= 2:
        signed = minus_dims_exact(g, 2, budget=budget)
        yield Check("degree_two_minus", f"g={g}",
                    g + signed.n_minus == eigen.degree_two_minus_dim(g),
                    f"oracle={g + signed.n_minus} formula={eigen.degree_two_minus_dim(g)}")
        z2 = (comb.binomial(k, 2) - relation_piece(g, 2, pairing="split", budget=budget).rank)
        wdr2 = g + z2 - degree_two_f0_image(g, budget=budget)
        yield Check("wdr2_dim", f"g={g}", wdr2 == eigen.wdr2_dim(g),
                    f"oracle={wdr2} formula={eigen.wdr2_dim(g)}")
    for n in range(3, max_n + 1):
        signed = minus_dims_exact(g, n, budget=budget)
        bound = eigen.sn_minus_dim(g, n) + comb.kn_upper_bound(g, n)
        yield Check("minus_majorant", f"g={g} n={n}", signed.n_minus <= bound,
                    f"exact={signed.n_minus} bound={bound}")
