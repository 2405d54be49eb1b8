"""Global comparison: Selmer-side upper bound against the De Rham lower bound.

The upper side sums, from level 3, the minus-eigenspace majorant
``S_i^- + K_i`` plus the per-degree H^2 bound, with levels 1 and 2 folded
into the constant ``c0``.  The lower side is ``wdr_lower_bound``.  The
constants B, c0 (or the split m, A, A') are free parameters.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .combinatorics import kn_upper_bound, zn_n_lower_bound
from .eigen import f0_upper_bound, sn_minus_dim, wdr2_dim, wdr_lower_bound
from .zeros import h2_bound_per_degree


@dataclass(frozen=True)
class BoundParams:
    g: int = 2
    B: Fraction = Fraction(0)
    c0: int = 0
    horizon: int = 200
    m: int = None
    A: Fraction = None
    A_prime: Fraction = Fraction(0)

    def __post_init__(self):
        if self.g < 2:
            raise ValueError("the crossover needs g >= 2")
        if self.horizon < 3:
            raise ValueError("horizon must be >= 3")
        if self.c0 < 0:
            raise ValueError("c0 must be nonnegative")
        object.__setattr__(self, "B", Fraction(self.B))
        if self.B < 0:
            raise ValueError("B must be nonnegative")

    @property
    def split(self):
        return self.m is not None

    def h2(self, n):
        if self.split:
            return h2_bound_per_degree(self.g, n, m=self.m, A=self.A, A_prime=self.A_prime)
        return h2_bound_per_degree(self.g, n, B=self.B)

    def as_dict(self):
        d = {"g": self.g, "c0": self.c0, "horizon": self.horizon}
        if self.split:
            d.update(m=self.m, A=str(Fraction(self.A)), A_prime=str(Fraction(self.A_prime)))
        else:
            d["B"] = str(self.B)
        return d


def _minus_term(g, i):
    return sn_minus_dim(g, i) + kn_upper_bound(g, i)


def _lower_term(g, i):
    return max(0, zn_n_lower_bound(g, i) - f0_upper_bound(g, i))


def selmer_upper(params, n):
    if n < 3:
        raise ValueError("selmer_upper starts at n = 3")
    g = params.g
    return params.c0 + sum(_minus_term(g, i) for i in range(3, n + 1)) + params.h2(n)


def local_lower(g, n):
    if g < 2:
        raise ValueError("local_lower needs g >= 2")
    return wdr_lower_bound(g, n)


def leading_coeff_check(g):
    """Is (2g-1)/2 < 2g-2?  Compares the n^(2g)/(2g)! coefficients of the two sides."""
    if g < 1:
        raise ValueError("g must be >= 1")
    return Fraction(2 * g - 1, 2) < 2 * g - 2


@dataclass
class CrossoverReport:
    params: BoundParams
    n0: int = None
    trace: list = field(default_factory=list)  # (n, upper, lower)
    leading_ok: bool = False
    diagnostic: str = ""

    def as_dict(self):
        return {
            "params": self.params.as_dict(),
            "n0": self.n0,
            "leading_ok": self.leading_ok,
            "diagnostic": self.diagnostic,
            "trace": [{"n": n, "upper": u, "lower": lo, "holds": u < lo}
                      for n, u, lo in self.trace],
        }


def find_crossover(params, upper=None, lower=None):
    """Least n0 <= horizon with upper(n) < lower(n) for every n in [n0, horizon].

    ``upper`` and ``lower`` replace the two sides when given (callables of
    n); by default the running sums are accumulated directly.
    """
    g = params.g
    trace = []
    up_sum = lo_sum = 0
    for n in range(3, params.horizon + 1):
        up_sum += _minus_term(g, n)
        lo_sum += _lower_term(g, n)
        u = upper(n) if upper else params.c0 + up_sum + params.h2(n)
        lo = lower(n) if lower else wdr2_dim(g) + lo_sum
        trace.append((n, u, lo))

    n0 = None
    for n, u, lo in reversed(trace):
        if u < lo:
            n0 = n
        else:
            break
    if n0 is None:
        diagnostic = (f"horizon exceeded: upper >= lower at n={params.horizon} "
                      f"({trace[-1][1]} >= {trace[-1][2]})")
    else:
        diagnostic = f"upper < lower for every n in [{n0}, {params.horizon}]"
    return CrossoverReport(params, n0, trace, leading_coeff_check(g), diagnostic)
