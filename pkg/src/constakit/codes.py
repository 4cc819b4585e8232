"""Constacyclic codes and their componentwise (Schur) structure.

A lam-constacyclic code of length n over F_q is an ideal of
F_q[x]/(x^n - lam), generated by a unique monic divisor g of x^n - lam.
The code is represented spectrally by its generating set
G = {j : g(xi^j * beta) != 0}; dim C = |G| = n - deg g.

Componentwise products of codes move to sumsets of generating sets,
which is why every code built here carries a basis drawn from one
BasisFamily per (field, n): all such bases share xi, so generating sets
of different codes live on a common index line and can be added.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cdft import BasisFamily, CodeParams, RootBasis
from .field import FieldCtx, FieldElem
from .numbertheory import is_prime
from .poly import Poly, _schur_reps, poly_gcd, reciprocal
from .zn import ZnSet, fourier_bias, iterated_sumset, sumset

_FAMILIES: dict[tuple[int, tuple[int, ...], int], BasisFamily] = {}


def basis_family(field: FieldCtx, n: int) -> BasisFamily:
    """The memoized delta-family for (field, n); one per process."""
    key = (field.p, field.degrees, n)
    fam = _FAMILIES.get(key)
    if fam is None:
        fam = BasisFamily(field, n)
        _FAMILIES[key] = fam
    return fam


def _xn_minus_lam(params: CodeParams) -> Poly:
    return Poly.monomial(params.field, params.n) - Poly.from_elements([params.lam])


class ConstaCode:
    """An immutable constacyclic code, identified by (params, generator)."""

    __slots__ = ("params", "generator", "basis", "gen_set")

    def __init__(self, params: CodeParams, generator: Poly, basis: RootBasis, gen_set: ZnSet):
        self.params = params
        self.generator = generator
        self.basis = basis
        self.gen_set = gen_set

    @property
    def dim(self) -> int:
        return self.params.n - self.generator.degree

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    @property
    def is_full(self) -> bool:
        return self.dim == self.params.n

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ConstaCode)
            and other.params == self.params
            and other.generator == self.generator
        )

    def __hash__(self) -> int:
        return hash((self.params, self.generator))

    def __repr__(self) -> str:
        p = self.params
        return f"ConstaCode(q={p.q}, n={p.n}, lam={p.lam!r}, g={self.generator!r})"


def code_from_generator(
    params: CodeParams, g: Poly, basis: RootBasis | None = None
) -> ConstaCode:
    """The code generated by a monic divisor g of x^n - lam."""
    if g.ctx is not params.field:
        raise ValueError("generator is over the wrong field")
    if not g.is_monic:
        raise ValueError("generator must be monic")
    if not g.divides(_xn_minus_lam(params)):
        lam = params.field.rep_to_str(params.lam.rep)
        raise ValueError(f"{g!r} does not divide x^{params.n} - ({lam})")
    if basis is None:
        basis = basis_family(params.field, params.n).basis_for_lambda(params.lam)
    elif basis.params != params:
        raise ValueError("basis was built for different parameters")
    if g.degree == params.n:
        gen_set = ZnSet(params.n)
    else:
        gen_set = basis.forward_poly(g).support()
    if len(gen_set) != params.n - g.degree:
        raise AssertionError("support size disagrees with degree; basis is broken")
    return ConstaCode(params, g, basis, gen_set)


def code_from_generating_set(
    params: CodeParams, basis: RootBasis | None, gen_set
) -> ConstaCode:
    """The code whose spectrum is supported exactly on gen_set.

    The complement must be closed under j -> q*j + t; otherwise no code
    over F_q has this generating set and the offending index is named.
    """
    if basis is None:
        basis = basis_family(params.field, params.n).basis_for_lambda(params.lam)
    elif basis.params != params:
        raise ValueError("basis was built for different parameters")
    n, q, t = params.n, params.q, basis.frobenius_shift
    if not isinstance(gen_set, ZnSet):
        gen_set = ZnSet(n, gen_set)
    elif gen_set.n != n:
        raise ValueError(f"generating set lives in Z_{gen_set.n}, expected Z_{n}")
    zeros = gen_set.complement()
    for j in zeros:
        image = (q * j + t) % n
        if image not in zeros:
            raise ValueError(
                f"no such code: complement element {j} maps to {image}, "
                "which is back in the generating set"
            )
    g = basis.poly_to_base(basis.linear_factor_product(zeros.elements))
    return ConstaCode(params, g, basis, gen_set)


# -- duality ------------------------------------------------------------


def _reciprocal_basis(basis: RootBasis) -> RootBasis:
    """The (xi, beta^{-1}) basis, for codes over lam^{-1}."""
    params = basis.params
    dual_params = CodeParams(params.field, params.n, params.lam.inverse())
    return RootBasis(
        dual_params,
        basis.splitting,
        basis.delta,
        basis.delta_order,
        basis.xi_exp,
        -basis.beta_exp,
    )


def dual_generating_set(c: ConstaCode) -> tuple[ZnSet, ConstaCode]:
    """Generating set of the Euclidean dual, with the dual code itself.

    The dual of a lam-constacyclic code is lam^{-1}-constacyclic; with
    respect to (xi, beta^{-1}) its generating set is -(Z_n \\ G) and its
    generator is the monic reciprocal of (x^n - lam)/g.
    """
    n = c.params.n
    dset = c.gen_set.complement().negate()
    h = _xn_minus_lam(c.params) // c.generator
    hstar = reciprocal(h).monic()
    dual = code_from_generator(
        CodeParams(c.params.field, n, c.params.lam.inverse()),
        hstar,
        _reciprocal_basis(c.basis),
    )
    return dset, dual


# -- pattern polynomials and cores ---------------------------------------


@dataclass(frozen=True)
class PatternPoly:
    """p(x) = sum_{i < n/v} alpha^i x^{iv}; trivial (p = 1) when v = n."""

    n: int
    v: int
    alpha: FieldElem

    def __post_init__(self):
        if self.v < 1 or self.n % self.v:
            raise ValueError(f"{self.v} does not divide the length {self.n}")
        if self.alpha.is_zero:
            raise ValueError("alpha must be nonzero")
        if self.v == self.n and self.alpha != self.alpha.ctx.one():
            raise ValueError("the trivial pattern is normalized to alpha = 1")

    @property
    def is_trivial(self) -> bool:
        return self.v == self.n

    def polynomial(self) -> Poly:
        ctx = self.alpha.ctx
        coeffs = [ctx.zero()] * (self.n - self.v + 1)
        power = ctx.one()
        for i in range(self.n // self.v):
            coeffs[i * self.v] = power
            power = power * self.alpha
        return Poly.from_elements(coeffs)

    def __repr__(self) -> str:
        return f"PatternPoly(n={self.n}, v={self.v}, alpha={self.alpha!r})"


def pattern_polynomial(c: ConstaCode) -> PatternPoly:
    """Pattern of a nonzero code, read off its generating set.

    d = gcd of the differences within G (and n); d = 1 means the support
    spreads over all of Z_n and the pattern is trivial.  Otherwise
    v = n/d and alpha is the ratio g_v / g_0, which is well defined
    because the core factor of g has degree below v.
    """
    if c.is_zero:
        raise ValueError("the zero code has no pattern polynomial")
    ctx = c.params.field
    n = c.params.n
    elems = c.gen_set.elements
    d = n
    for a in elems[1:]:
        d = math.gcd(d, a - elems[0])
    if d == 1:
        return PatternPoly(n, n, ctx.one())
    v = n // d
    g = c.generator
    alpha = g[v] / g[0]
    if alpha.is_zero:
        raise AssertionError("degenerate generator lost its x^v coefficient")
    return PatternPoly(n, v, alpha)


def core_code(c: ConstaCode) -> ConstaCode:
    """The length-v code whose generator is g/p, for degenerate c.

    p divides x^n - lam exactly when lam = alpha^(-n/v), and peeling p
    off leaves a divisor of x^v - alpha^(-1); both facts are validated
    rather than assumed, so a bad pattern is a hard fault here.
    """
    pat = pattern_polynomial(c)
    if pat.is_trivial:
        raise ValueError("only degenerate codes have a core")
    p = pat.polynomial()
    gbar, rem = divmod(c.generator, p)
    if not rem.is_zero:
        raise RuntimeError("pattern does not divide the generator")
    gbar = gbar.monic()
    lam_core = pat.alpha.inverse()
    params = CodeParams(c.params.field, pat.v, lam_core)
    if not gbar.divides(_xn_minus_lam(params)):
        raise RuntimeError("core generator does not divide x^v - 1/alpha")
    return code_from_generator(params, gbar)


# -- componentwise products ----------------------------------------------


def _family_exponent(c: ConstaCode) -> tuple[BasisFamily, int]:
    """The code's basis as (family, exponent), or an error if it is foreign."""
    params = c.params
    fam = basis_family(params.field, params.n)
    b = c.basis
    if (
        b.delta_order != fam.delta_order
        or b.delta != fam.delta
        or b.xi_exp != (params.q - 1) % fam.delta_order
    ):
        raise ValueError(
            "code was built on a basis outside the (field, n) family; "
            "rebuild it with the default basis to take products"
        )
    return fam, b.beta_exp


def _product_setup(c1: ConstaCode, c2: ConstaCode):
    if c1.params.field is not c2.params.field or c1.params.n != c2.params.n:
        raise ValueError("codes must share field and length")
    fam, s1 = _family_exponent(c1)
    _, s2 = _family_exponent(c2)
    basis = fam.basis_for_exponent(s1 + s2)
    return fam, basis


def schur_product_sumset(c1: ConstaCode, c2: ConstaCode) -> ConstaCode:
    """Componentwise product code, computed as G1 + G2 w.r.t. beta1*beta2."""
    _, basis = _product_setup(c1, c2)
    g3 = sumset(c1.gen_set, c2.gen_set)
    return code_from_generating_set(basis.params, basis, g3)


def schur_product_gcd(
    c1: ConstaCode, c2: ConstaCode, s: Poly | None = None
) -> ConstaCode:
    """Componentwise product code, computed as a time-domain gcd.

    The generator is gcd({g o (x^j g2) : 0 <= j < n - deg g2}, x^n - lam1*lam2)
    with g = g1*s mod (x^n - lam1) for any s coprime to (x^n - lam1)/g1.
    """
    _, basis = _product_setup(c1, c2)
    params3 = basis.params
    n = params3.n
    ctx = params3.field
    xn1 = _xn_minus_lam(c1.params)
    h1 = xn1 // c1.generator
    if s is None:
        s = Poly.one(ctx)
    elif s.ctx is not ctx:
        raise ValueError("s is over the wrong field")
    if poly_gcd(s, h1).degree != 0:
        raise ValueError("s shares a factor with (x^n - lam1)/g1")
    g = (c1.generator * s) % xn1
    g_padded = g.padded(n)
    acc = _xn_minus_lam(params3)
    g2 = c2.generator
    for j in range(n - g2.degree):
        row = g2.shift(j).padded(n)
        prod = Poly(ctx, list(_schur_reps(ctx, g_padded, row)))
        if not prod.is_zero:
            acc = poly_gcd(acc, prod)
    return code_from_generator(params3, acc, basis)


def schur_power(c: ConstaCode, i: int) -> ConstaCode:
    """The i-fold componentwise power, as an iterated sumset w.r.t. beta^i."""
    if i < 1:
        raise ValueError("power must be >= 1")
    if i == 1:
        return c
    fam, s = _family_exponent(c)
    basis = fam.basis_for_exponent(s * i)
    gi = iterated_sumset(c.gen_set, i)
    return code_from_generating_set(basis.params, basis, gi)


def power_pattern(pat: PatternPoly, i: int) -> PatternPoly:
    """Pattern of the i-th componentwise power: alpha -> alpha^i, same v."""
    if i < 1:
        raise ValueError("power must be >= 1")
    if pat.is_trivial:
        return pat
    return PatternPoly(pat.n, pat.v, pat.alpha**i)


def factored_power_generator(c: ConstaCode, i: int) -> Poly:
    """Generator of c^(o i) assembled from the core: gbar_i * (p with alpha^i).

    Only defined for degenerate codes; the direct computation and this
    factored form must agree exactly.  The raw product is only monic up
    to the pattern's leading coefficient, so it is normalized here.
    """
    core = core_code(c)
    pat = pattern_polynomial(c)
    core_i = schur_power(core, i)
    return (core_i.generator * power_pattern(pat, i).polynomial()).monic()


def dimension_sequence(c: ConstaCode) -> tuple[tuple[int, ...], int]:
    """Dimensions of the powers c, c^(o 2), ... up to stabilization.

    Returns (dims, r) where dims stops at the first stable value and r
    is its 1-based index; the sequence is strictly increasing before
    that because each sumset contains a translate of the previous one.
    """
    if c.is_zero:
        raise ValueError("the zero code has no power sequence")
    dims = [len(c.gen_set)]
    current = c.gen_set
    while True:
        current = sumset(current, c.gen_set)
        d = len(current)
        if d == dims[-1]:
            break
        dims.append(d)
    return tuple(dims), len(dims)


def pattern_of_product(c1: ConstaCode, c2: ConstaCode) -> PatternPoly:
    """Pattern of c1 o c2 from the factor patterns alone.

    v3 = lcm(v1, v2) and alpha3 = alpha1^(v3/v1) * alpha2^(v3/v2); if
    either factor is non-degenerate (v = n) the product's pattern is
    trivial, which the formula reproduces after normalization.
    """
    if c1.params.field is not c2.params.field or c1.params.n != c2.params.n:
        raise ValueError("codes must share field and length")
    pat1, pat2 = pattern_polynomial(c1), pattern_polynomial(c2)
    n = pat1.n
    v3 = pat1.v * pat2.v // math.gcd(pat1.v, pat2.v)
    if v3 == n:
        return PatternPoly(n, n, c1.params.field.one())
    alpha3 = pat1.alpha ** (v3 // pat1.v) * pat2.alpha ** (v3 // pat2.v)
    return PatternPoly(n, v3, alpha3)


# -- bounds ---------------------------------------------------------------


def bounds_report(c: ConstaCode) -> dict:
    """Evaluate the regularity bounds for a nonzero code.

    square_fills: 2k > n forces the componentwise square to be full.
    regularity_bound (k >= 2): the iterated sumset fills (or, degenerate
    case, stabilizes) at every integer exponent >= (n-1)/(k-1) for prime
    n, else 2v/k, so the holds predicate compares r against the first
    such integer.  The bound itself is reported unrounded.
    bias_bound: reported exactly as stated, max(3, (2*log b - log(n/k)) /
    (log b - log(n/k))) with b the Fourier bias of G; guarded rather
    than asserted, since the denominator is negative whenever b*k < n.
    """
    if c.is_zero:
        raise ValueError("bounds are stated for nonzero codes")
    n, k = c.params.n, c.dim
    dims, r = dimension_sequence(c)
    pat = pattern_polynomial(c)
    report = {"n": n, "k": k, "r": r, "dims": dims}

    square_dim = len(sumset(c.gen_set, c.gen_set))
    over_half = 2 * k > n
    report["square_fills"] = {
        "applies": over_half,
        "square_full": square_dim == n,
        "holds": (not over_half) or square_dim == n,
    }

    if k >= 2:
        if is_prime(n):
            num, den = n - 1, k - 1
        else:
            num, den = 2 * pat.v, k
        # r <= ceil(num/den), kept in integers: r*den <= den*ceil
        holds = r * den <= den * (-(-num // den))
        report["regularity_bound"] = {"applies": True, "bound": num / den, "holds": holds}
    else:
        report["regularity_bound"] = {"applies": False, "bound": None, "holds": True}

    report["bias_bound"] = _bias_bound_guarded(c.gen_set, n, k, pat)
    return report


def _bias_bound_guarded(gen_set: ZnSet, n: int, k: int, pat: PatternPoly) -> dict:
    if not pat.is_trivial:
        return {"applicable": False, "reason": "degenerate code", "bound": None}
    bias = fourier_bias(gen_set)
    if bias == 0.0:
        return {"applicable": False, "reason": "zero bias", "bound": None}
    ratio = math.log(n / k)
    den = math.log(bias) - ratio
    if den <= 0:
        return {
            "applicable": False,
            "reason": "nonpositive denominator",
            "bound": None,
            "bias": bias,
        }
    value = max(3.0, (2 * math.log(bias) - ratio) / den)
    return {"applicable": True, "bound": value, "bias": bias, "reason": None}
