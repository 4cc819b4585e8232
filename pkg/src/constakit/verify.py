"""Exhaustive cross-checking of spectral methods against the oracle.

run_grid_verification enumerates every constacyclic code on a small
grid (all lam, all monic divisors of x^n - lam) and checks each claim
the library makes by two independent routes: sumset vs gcd vs oracle
for products, gcd-based vs exhaustive pattern extraction, reciprocal
vs nullspace duals, factored vs direct power generators, and the
bound predicates.  The report carries counts, the failure total, and
the first counterexample in full detail.
"""

from __future__ import annotations

import math
from typing import Iterable

from . import codes as cd
from . import oracle as oc
from .cdft import CodeParams
from .field import FieldCtx, build_field
from .numbertheory import divisors, factorint
from .poly import Poly
from .zn import ZnSet, smallest_coset, sumset


def field_for_cardinality(q: int) -> FieldCtx:
    """The canonical field with q elements; q must be a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    fac = factorint(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, k), = fac.items()
    return build_field(p, [] if k == 1 else [k])


class _Recorder:
    """Counts attempts and failures per check, keeping the first failure."""

    def __init__(self):
        self.checks: dict[str, int] = {}
        self.failed: dict[str, int] = {}
        self.failures = 0
        self.first = None

    def record(self, name: str, ok: bool, context: dict):
        self.checks[name] = self.checks.get(name, 0) + 1
        if not ok:
            self.failures += 1
            self.failed[name] = self.failed.get(name, 0) + 1
            if self.first is None:
                self.first = {"check": name, **context}


def _divisor_codes(basis) -> list[cd.ConstaCode]:
    """Every code for this (params, basis): one per subset of orbits."""
    params = basis.params
    orbits = basis.orbits()
    factors = basis.irreducible_factors()
    out = []
    for mask in range(1 << len(orbits)):
        g = Poly.one(params.field)
        zeros = []
        for i, f in enumerate(factors):
            if mask >> i & 1:
                g = g * f
                zeros.extend(orbits[i])
        gen_set = ZnSet(params.n, set(range(params.n)) - set(zeros))
        code = cd.code_from_generator(params, g, basis)
        if code.gen_set != gen_set:
            raise AssertionError("support disagrees with chosen orbits")
        out.append(code)
    return out


def _check_single_code(c: cd.ConstaCode, rec: _Recorder, ctxinfo: dict) -> None:
    params = c.params
    n, q = params.n, params.q
    info = {**ctxinfo, "g": list(c.generator.indices())}

    # block structure: G a union of cosets of <n/v> iff g uses only
    # exponents divisible by v, for every proper divisor v of n
    for v in divisors(n):
        if v == 1 or v == n:
            continue
        step = n // v
        left = all((a + step) % n in c.gen_set for a in c.gen_set)
        right = all(e % v == 0 for e, rep in enumerate(c.generator.coeffs) if rep != params.field.zero_rep)
        rec.record("block_structure", left == right, {**info, "v": v})

    # dual: reciprocal construction vs nullspace
    dset, dual = cd.dual_generating_set(c)
    rec.record("dual_set_matches_code", dset == dual.gen_set, info)
    null_dim, null_rows = oc.oracle_dual(c)
    rec.record("dual_dim", null_dim == dual.dim, info)
    dual_rows, _ = oc.rref(params.field, oc.generator_rows(dual)) if not dual.is_zero else ([], [])
    rec.record("dual_space", dual_rows == null_rows, info)

    if c.is_zero:
        return

    pat = cd.pattern_polynomial(c)
    rec.record("pattern_methods_agree", oc.oracle_pattern(c) == pat, info)

    # the pattern's spectral support is the smallest coset containing G
    offset, subgroup = smallest_coset(c.gen_set)
    coset = subgroup.translate(offset)
    psupp = c.basis.forward_poly(pat.polynomial()).support()
    rec.record("pattern_support_coset", psupp == coset, info)

    dims, r = cd.dimension_sequence(c)
    rec.record("fills_iff_nondegenerate", (dims[-1] == n) == pat.is_trivial, info)

    report = cd.bounds_report(c)
    rec.record("square_fills", report["square_fills"]["holds"], info)
    rec.record("regularity_bound", report["regularity_bound"]["holds"], info)
    # bias bound is evaluated for its guards only; nothing to assert
    rec.record("bias_bound_guarded", isinstance(report["bias_bound"], dict), info)

    if not pat.is_trivial:
        core = cd.core_code(c)
        rec.record("core_dimension", core.dim == c.dim, info)
        rec.record("core_nondegenerate", cd.pattern_polynomial(core).is_trivial, info)
        for i in range(1, r + 2):
            direct = cd.schur_power(c, i)
            rec.record(
                "factored_power",
                cd.factored_power_generator(c, i) == direct.generator,
                {**info, "i": i},
            )


def _check_pair(
    c1: cd.ConstaCode,
    c2: cd.ConstaCode,
    oracle_cache: dict,
    rec: _Recorder,
    ctxinfo: dict,
    corrupt_this: bool,
) -> None:
    info = {**ctxinfo, "g1": list(c1.generator.indices()), "g2": list(c2.generator.indices())}
    by_sum = cd.schur_product_sumset(c1, c2)
    by_gcd = cd.schur_product_gcd(c1, c2)

    key = frozenset({(c1.params.lam, c1.generator), (c2.params.lam, c2.generator)})
    if key not in oracle_cache:
        oracle_cache[key] = oc.oracle_schur_product(c1, c2)
    oracle_dim, oracle_gen = oracle_cache[key]

    sum_gen = by_sum.generator
    if corrupt_this:
        sum_gen = sum_gen + Poly.one(c1.params.field)

    rec.record("product_methods_agree", sum_gen == by_gcd.generator == oracle_gen, info)
    rec.record("product_dim", by_sum.dim == by_gcd.dim == oracle_dim, info)
    rec.record("product_sets_agree", by_sum.gen_set == by_gcd.gen_set, info)

    if not c1.is_zero and not c2.is_zero:
        rec.record(
            "product_pattern",
            cd.pattern_of_product(c1, c2) == cd.pattern_polynomial(by_sum),
            info,
        )


def run_grid_verification(
    qs: Iterable[int] = (2, 3, 5),
    n_max: int = 10,
    corrupt: bool = False,
) -> dict:
    """Enumerate the grid and cross-check everything; see module docstring.

    corrupt=True deliberately damages the first product comparison so
    the negative path (failure counting, exit codes) can be exercised.
    """
    qs = sorted(set(int(q) for q in qs))
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rec = _Recorder()
    points = 0
    codes_checked = 0
    pairs_checked = 0
    for q in qs:
        field = field_for_cardinality(q)
        for n in range(1, n_max + 1):
            if math.gcd(n, q) != 1:
                continue
            fam = cd.basis_family(field, n)
            for lam_idx in range(1, q):
                lam = field.elem(lam_idx)
                points += 1
                basis = fam.basis_for_lambda(lam)
                ctxinfo = {"q": q, "n": n, "lam": lam_idx}

                product = Poly.one(field)
                for f in basis.irreducible_factors():
                    product = product * f
                xn = Poly.monomial(field, n) - Poly.from_elements([lam])
                rec.record("factorization_product", product == xn, ctxinfo)

                all_codes = _divisor_codes(basis)
                codes_checked += len(all_codes)
                for c in all_codes:
                    _check_single_code(c, rec, ctxinfo)

                oracle_cache: dict = {}
                for c1 in all_codes:
                    for c2 in all_codes:
                        corrupt_this = corrupt and pairs_checked == 0
                        _check_pair(c1, c2, oracle_cache, rec, ctxinfo, corrupt_this)
                        pairs_checked += 1

    return {
        "grid": {"q": qs, "n_max": n_max},
        "points": points,
        "codes_checked": codes_checked,
        "pairs_checked": pairs_checked,
        "checks": dict(sorted(rec.checks.items())),
        "failures": rec.failures,
        "failed_by_check": dict(sorted(rec.failed.items())),
        "first_counterexample": rec.first,
    }
