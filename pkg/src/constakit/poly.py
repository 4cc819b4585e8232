"""Dense univariate polynomials over a finite-field context.

Coefficients are stored in ascending order of the exponent (index i holds
the coefficient of x**i), in the context's internal representation; the
zero polynomial stores an empty tuple and reports degree -1.  A Poly never
keeps trailing zero coefficients.

The context object supplies the coefficient arithmetic (``add``, ``mul``,
``inv``, ...), so this module works over any tower level from field.py
without knowing how elements are encoded.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class Poly:
    """Immutable dense polynomial over a field context."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs: Iterable = ()):
        cs = list(coeffs)
        zero = ctx.zero_rep
        while cs and cs[-1] == zero:
            cs.pop()
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, ctx) -> "Poly":
        return cls(ctx, ())

    @classmethod
    def one(cls, ctx) -> "Poly":
        return cls(ctx, (ctx.one_rep,))

    @classmethod
    def x(cls, ctx) -> "Poly":
        return cls(ctx, (ctx.zero_rep, ctx.one_rep))

    @classmethod
    def monomial(cls, ctx, k: int, coeff=None) -> "Poly":
        if k < 0:
            raise ValueError("monomial exponent must be >= 0")
        c = ctx.one_rep if coeff is None else coeff
        return cls(ctx, (ctx.zero_rep,) * k + (c,))

    @classmethod
    def from_indices(cls, ctx, indices: Sequence[int]) -> "Poly":
        """Build from canonical element indices (residues, for prime fields)."""
        return cls(ctx, (ctx.rep_from_index(i) for i in indices))

    @classmethod
    def from_elements(cls, elems: Sequence) -> "Poly":
        if not elems:
            raise ValueError("from_elements needs at least one element")
        ctx = elems[0].ctx
        for e in elems:
            if e.ctx is not ctx:
                raise ValueError("mixed field contexts in coefficient list")
        return cls(ctx, (e.rep for e in elems))

    # -- basic queries ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 as the zero-polynomial sentinel."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx.one_rep

    def coeff_rep(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ctx.zero_rep

    def __getitem__(self, i: int):
        from .field import FieldElem

        return FieldElem(self.ctx, self.coeff_rep(i))

    def __iter__(self):
        # Without this, iteration would fall back to __getitem__, which
        # pads with zeros forever instead of raising IndexError.
        from .field import FieldElem

        return iter([FieldElem(self.ctx, c) for c in self.coeffs])

    def indices(self) -> tuple[int, ...]:
        """Coefficients as canonical element indices, ascending exponent."""
        return tuple(self.ctx.rep_to_index(c) for c in self.coeffs)

    def padded(self, n: int) -> tuple:
        """Coefficient reps padded with zeros to length n."""
        if len(self.coeffs) > n:
            raise ValueError(f"degree {self.degree} does not fit in length {n}")
        return self.coeffs + (self.ctx.zero_rep,) * (n - len(self.coeffs))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.ctx is other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.coeffs))

    def __repr__(self) -> str:
        if self.is_zero:
            return "Poly(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeff_rep(i)
            if c == self.ctx.zero_rep:
                continue
            ci = self.ctx.rep_to_index(c)
            if i == 0:
                terms.append(f"{ci}")
            else:
                xs = "x" if i == 1 else f"x^{i}"
                terms.append(xs if ci == 1 else f"{ci}*{xs}")
        return "Poly(" + " + ".join(terms) + ")"

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if not isinstance(other, Poly) or other.ctx is not self.ctx:
            raise ValueError("polynomials over different field contexts")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        add = ctx.add
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return Poly(ctx, out)

    def __neg__(self) -> "Poly":
        neg = self.ctx.neg
        return Poly(self.ctx, (neg(c) for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(ctx)
        mul, add, zero = ctx.mul, ctx.add, ctx.zero_rep
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == zero:
                continue
            for j, bj in enumerate(b):
                if bj != zero:
                    out[i + j] = add(out[i + j], mul(ai, bj))
        return Poly(ctx, out)

    def scale(self, c) -> "Poly":
        """Multiply every coefficient by the rep c."""
        ctx = self.ctx
        if c == ctx.zero_rep:
            return Poly.zero(ctx)
        mul = ctx.mul
        return Poly(ctx, (mul(a, c) for a in self.coeffs))

    def shift(self, k: int) -> "Poly":
        """Multiply by x**k."""
        if k < 0:
            raise ValueError("shift must be >= 0")
        if self.is_zero:
            return self
        return Poly(self.ctx, (self.ctx.zero_rep,) * k + self.coeffs)

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("zero polynomial has no monic scaling")
        lead = self.coeffs[-1]
        if lead == self.ctx.one_rep:
            return self
        return self.scale(self.ctx.inv(lead))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        ctx = self.ctx
        mul, sub, zero = ctx.mul, ctx.sub, ctx.zero_rep
        db = other.degree
        inv_lead = ctx.inv(other.coeffs[-1])
        rem = list(self.coeffs)
        if len(rem) <= db:
            return Poly.zero(ctx), self
        quo = [zero] * (len(rem) - db)
        for i in range(len(rem) - db - 1, -1, -1):
            c = rem[i + db]
            if c == zero:
                continue
            f = mul(c, inv_lead)
            quo[i] = f
            for j, oc in enumerate(other.coeffs):
                if oc != zero:
                    rem[i + j] = sub(rem[i + j], mul(f, oc))
        return Poly(ctx, quo), Poly(ctx, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        """True when self divides other exactly (self nonzero)."""
        if self.is_zero:
            return other.is_zero
        return (other % self).is_zero

    def eval_rep(self, point):
        """Horner evaluation at a rep of the same context."""
        ctx = self.ctx
        acc = ctx.zero_rep
        mul, add = ctx.mul, ctx.add
        for c in reversed(self.coeffs):
            acc = add(mul(acc, point), c)
        return acc

    def __call__(self, point):
        from .field import FieldElem

        if not isinstance(point, FieldElem) or point.ctx is not self.ctx:
            raise ValueError("evaluation point must belong to the same context")
        return FieldElem(self.ctx, self.eval_rep(point.rep))


# -- module-level operations ----------------------------------------------


def mul_mod_constacyclic(a: Poly, b: Poly, n: int, lam) -> Poly:
    """a*b reduced by x**n = lam; both inputs must have degree < n.

    Since deg(a*b) < 2n - 1, at most one wrap happens per exponent: the
    coefficient of x**(n+i) folds onto x**i with a factor lam.
    """
    from .field import FieldElem

    ctx = a.ctx
    if b.ctx is not ctx:
        raise ValueError("polynomials over different field contexts")
    lam_rep = lam.rep if isinstance(lam, FieldElem) else lam
    if lam_rep == ctx.zero_rep:
        raise ValueError("constacyclic constant must be nonzero")
    if a.degree >= n or b.degree >= n:
        raise ValueError(f"inputs must have degree < n = {n}")
    prod = (a * b).coeffs
    if len(prod) <= n:
        return Poly(ctx, prod)
    add, mul = ctx.add, ctx.mul
    out = list(prod[:n])
    for i, c in enumerate(prod[n:]):
        out[i] = add(out[i], mul(lam_rep, c))
    return Poly(ctx, out)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; gcd(0, 0) is an error."""
    if a.ctx is not b.ctx:
        raise ValueError("polynomials over different field contexts")
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended Euclid: returns monic g and u, v with u*a + v*b = g."""
    ctx = a.ctx
    if b.ctx is not ctx:
        raise ValueError("polynomials over different field contexts")
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    r0, r1 = a, b
    u0, u1 = Poly.one(ctx), Poly.zero(ctx)
    v0, v1 = Poly.zero(ctx), Poly.one(ctx)
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    lead_inv = ctx.inv(r0.coeffs[-1])
    return r0.scale(lead_inv), u0.scale(lead_inv), v0.scale(lead_inv)


def pow_mod(a: Poly, e: int, modulus: Poly) -> Poly:
    """a**e mod modulus by square-and-multiply; e must be >= 0."""
    if e < 0:
        raise ValueError("exponent must be >= 0")
    if modulus.degree < 1:
        raise ValueError("modulus must have degree >= 1")
    result = Poly.one(a.ctx) % modulus
    base = a % modulus
    while e:
        if e & 1:
            result = (result * base) % modulus
        base = (base * base) % modulus
        e >>= 1
    return result


def reciprocal(a: Poly) -> Poly:
    """Coefficient-reversed polynomial x**deg(a) * a(1/x); error on zero."""
    if a.is_zero:
        raise ValueError("zero polynomial has no reciprocal")
    return Poly(a.ctx, tuple(reversed(a.coeffs)))


def _schur_reps(ctx, u: Sequence, v: Sequence) -> tuple:
    mul = ctx.mul
    return tuple(mul(a, b) for a, b in zip(u, v))


def schur(u: Sequence, v: Sequence) -> tuple:
    """Componentwise product of two equal-length vectors of field elements."""
    from .field import FieldElem

    if len(u) != len(v):
        raise ValueError("schur product needs equal-length vectors")
    if not u:
        return ()
    ctx = u[0].ctx
    for e in list(u) + list(v):
        if not isinstance(e, FieldElem) or e.ctx is not ctx:
            raise ValueError("schur vectors must share one field context")
    reps = _schur_reps(ctx, [e.rep for e in u], [e.rep for e in v])
    return tuple(FieldElem(ctx, r) for r in reps)
