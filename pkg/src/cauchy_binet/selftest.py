"""Seeded property suite behind ``cbdet selftest``.

Each property draws ``trials`` random instances. An instance whose
minor-pattern count exceeds the budget is skipped rather than run, so a
budget of 0 skips everything.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import generators as gen
from .charpoly import char_poly, pseudo_det, spectral_count
from .exact import (
    Matrix,
    block_diag,
    det,
    inverse,
    is_normal,
    pseudo_inverse,
    rank,
    rank_factorization,
)
from .graphs import (
    betti_numbers,
    brute_force_rooted_forest_count,
    brute_force_tree_count,
    clique_complex,
    complete_graph,
    cycle_graph,
    dirac_operator,
    euler_characteristic_check,
    hodge_kernel_dim,
    rooted_forest_count,
    scalar_laplacian,
    spanning_tree_count,
)
from .minors import (
    append_combination,
    diag_minor_trace,
    exterior_power,
    minor_pair_sum,
    pattern_count,
)
from .numeric import numeric_spectral_count, pseudo_pfaffian_abs

PASS, FAIL, SKIP = "pass", "fail", "skipped-budget"


@dataclass
class Outcome:
    name: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    first_failure: dict | None = None

    @property
    def verdict(self) -> str:
        if self.failed:
            return FAIL
        if self.passed:
            return PASS
        return SKIP

    def record(self, ok: bool, **sides) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.first_failure is None:
                self.first_failure = {k: str(v) for k, v in sides.items()}


@dataclass
class Suite:
    seed: int
    trials: int
    budget: int
    outcomes: list[Outcome] = field(default_factory=list)

    def run(self, name: str, body: Callable[[random.Random, Outcome], int | None]) -> None:
        out = Outcome(name)
        # one stream per property so adding properties never shifts the others
        rng = random.Random(f"{self.seed}:{name}")
        for _ in range(self.trials):
            body(rng, out)
        self.outcomes.append(out)

    def affordable(self, out: Outcome, cost: int) -> bool:
        if max(cost, 1) > self.budget:
            out.skipped += 1
            return False
        return True


def _sym(rng, n):
    b = gen.int_matrix(rng, n, rng.randint(0, n), -3, 3)
    if rng.random() < 0.5:
        return b @ b.T
    return b @ Matrix.diag([rng.choice([-2, -1, 1, 2]) for _ in range(b.cols)]) @ b.T


def run_selftest(seed: int = 0, trials: int = 10, budget: int = 2_000_000) -> Suite:
    s = Suite(seed, trials, budget)

    def transpose_product(rng, out):
        n, k, m = (rng.randint(0, 6) for _ in range(3))
        if s.affordable(out, n * k * m):
            a, b = gen.int_matrix(rng, n, k), gen.int_matrix(rng, k, m)
            out.record((a @ b).T == b.T @ a.T)

    def penrose(rng, out):
        n, m = rng.randint(1, 6), rng.randint(1, 6)
        if s.affordable(out, n * m):
            a = gen.low_rank(rng, n, m, rng.randint(0, min(n, m)))
            x = pseudo_inverse(a)
            ok = a @ x @ a == a and x @ a @ x == x and (a @ x).T == a @ x and (x @ a).T == x @ a
            fac = rank_factorization(a)
            ok = ok and fac.left @ fac.right == a and fac.rank == rank(a) == rank(a.T)
            out.record(ok, a=a)

    def det_invertible(rng, out):
        n = rng.randint(1, 7)
        if s.affordable(out, n):
            a = gen.invertible(rng, n)
            out.record(pseudo_det(a) == det(a), a=a, pdet=pseudo_det(a), det=det(a))

    def invariants(rng, out):
        n = rng.randint(1, 6)
        if not s.affordable(out, n):
            return
        a, b = gen.square(rng, n), gen.square(rng, n)
        sim = gen.invertible(rng, n, -2, 2)
        d = pseudo_det(a)
        checks = {
            "never_zero": d != 0,
            "transpose": pseudo_det(a.T) == d,
            "power": all(pseudo_det(a**m) == d**m for m in (1, 2, 3)),
            "AtB_ABt": pseudo_det(a.T @ b) == pseudo_det(a @ b.T),
            "block": pseudo_det(block_diag(a, b)) == d * pseudo_det(b),
            "similar": pseudo_det(sim @ a @ inverse(sim)) == d,
        }
        out.record(all(checks.values()), a=a, b=b, failed=[k for k, v in checks.items() if not v])

    def pinv_normal(rng, out):
        n = rng.randint(1, 6)
        if s.affordable(out, n):
            a = gen.normal(rng, n)
            assert is_normal(a)
            out.record(pseudo_det(pseudo_inverse(a)) == 1 / pseudo_det(a), a=a)

    def coefficient_sums(rng, out):
        n, m = rng.randint(1, 6), rng.randint(1, 8)
        cost = sum(pattern_count(n, m, k) for k in range(min(n, m) + 1))
        if s.affordable(out, cost):
            f, g = gen.int_matrix(rng, n, m), gen.int_matrix(rng, n, m)
            p = char_poly(f.T @ g)
            lhs = [p.signed(k) for k in range(m + 1)]
            rhs = [minor_pair_sum(f, g, k) for k in range(m + 1)]
            out.record(lhs == rhs, F=f, G=g, charpoly=lhs, minors=rhs)

    def multiplication(rng, out):
        n, l, m = rng.randint(1, 5), rng.randint(1, 5), rng.randint(1, 5)
        k = rng.randint(0, 3)
        if s.affordable(out, pattern_count(n, l, k) + pattern_count(l, m, k)):
            f, g = gen.int_matrix(rng, n, l), gen.int_matrix(rng, l, m)
            out.record(
                exterior_power(f @ g, k) == exterior_power(f, k) @ exterior_power(g, k), F=f, G=g, k=k
            )

    def det_one_plus(rng, out):
        n, m = rng.randint(1, 5), rng.randint(1, 6)
        cost = sum(pattern_count(n, m, k) for k in range(min(n, m) + 1))
        if s.affordable(out, cost):
            f = gen.int_matrix(rng, n, m)
            lhs = det(Matrix.identity(m) + f.T @ f)
            rhs = sum((minor_pair_sum(f, f, k) for k in range(m + 1)), Fraction(0))
            out.record(lhs == rhs and lhs >= 1, F=f, lhs=lhs, rhs=rhs)

    def trace_compound(rng, out):
        n = rng.randint(1, 6)
        if s.affordable(out, 2**n):
            a = gen.square(rng, n)
            p = char_poly(a)
            out.record(all(diag_minor_trace(a, k) == p.signed(k) for k in range(n + 1)), a=a)

    def append_rows(rng, out):
        m = rng.randint(1, 4)
        n = rng.randint(m, 6)
        if not s.affordable(out, pattern_count(n, m + 1, m + 1)):
            return
        while True:
            f, g = gen.int_matrix(rng, n, m), gen.int_matrix(rng, n, m)
            if det(f.T @ g) != 0 and rank(f @ g.T) == m:
                break
        l = rng.randint(1, m)
        rows = rng.sample(range(m), l)
        while True:
            lams = {j: rng.randint(-3, 3) for j in rows}
            mus = {j: rng.randint(-3, 3) for j in rows}
            factor = 1 + sum(lams[j] * mus[j] for j in rows)
            # a zero factor makes the enlarged product singular
            if factor:
                break
        at, bt = append_combination(f.T, g.T, lams, mus)
        lhs = pseudo_det(at @ bt.T)
        out.record(lhs == factor * det(f.T @ g), F=f, G=g, lhs=lhs, factor=factor)

    def kirchhoff_forest(rng, out):
        g = gen.connected_graph(rng)
        if s.affordable(out, 2 ** len(g.edges)):
            ok = spanning_tree_count(g) == brute_force_tree_count(g)
            ok = ok and rooted_forest_count(g) == brute_force_rooted_forest_count(g)
            out.record(ok, graph=g)

    def hodge(rng, out):
        g = gen.connected_graph(rng, max_vertices=7)
        c = clique_complex(g)
        if s.affordable(out, c.size**2):
            b = betti_numbers(c)
            chi_b, chi_v = euler_characteristic_check(c)
            d = pseudo_det(dirac_operator(c))
            ok = sum(b) == hodge_kernel_dim(c) and chi_b == chi_v and (d / g.n).denominator == 1
            out.record(ok, graph=g, betti=b)

    def closed_forms(rng, out):
        n = rng.randint(4, 7)
        if s.affordable(out, (2 * n) ** 2):
            cyc = clique_complex(cycle_graph(n))
            D = dirac_operator(cyc)
            ok = pseudo_det(scalar_laplacian(cycle_graph(n))) == n * n
            ok = ok and pseudo_det(D) == n * n * (-1) ** (n - 1) and pseudo_det(D @ D) == n**4
            k = rng.randint(2, 4)
            ok = ok and pseudo_det(dirac_operator(clique_complex(complete_graph(k)))) == -(k ** (2 ** (k - 1) - 1))
            out.record(ok, n=n)

    def pfaffian(rng, out):
        n = rng.randint(1, 8)
        if s.affordable(out, n):
            a = gen.skew(rng, n)
            d = float(pseudo_det(a))
            pf = pseudo_pfaffian_abs(a)
            out.record(abs(pf * pf - d) <= 1e-8 * d, a=a, pf2=pf * pf, det=d)

    def spectral(rng, out):
        n = rng.randint(1, 8)
        if s.affordable(out, n):
            a = _sym(rng, n)
            out.record(numeric_spectral_count(a) == spectral_count(a), a=a)

    for name, body in [
        ("exact.transpose_product", transpose_product),
        ("exact.penrose_and_rank_factorization", penrose),
        ("pseudodet.invertible_equals_det", det_invertible),
        ("pseudodet.invariants", invariants),
        ("pseudodet.pinv_normal", pinv_normal),
        ("minors.generalized_cauchy_binet", coefficient_sums),
        ("minors.multiplication_lemma", multiplication),
        ("minors.det_one_plus_FtF", det_one_plus),
        ("minors.trace_of_compound", trace_compound),
        ("minors.append_rows", append_rows),
        ("graphs.kirchhoff_and_forests", kirchhoff_forest),
        ("graphs.hodge_euler_divisibility", hodge),
        ("graphs.closed_forms", closed_forms),
        ("numeric.pfaffian_squared", pfaffian),
        ("numeric.spectral_count", spectral),
    ]:
        s.run(name, body)
    return s

