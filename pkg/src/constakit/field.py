"""Finite-field towers with deterministic, scan-based construction.

A field context is a chain F_p = L_0 < L_1 < ... < L_k where each step
L_{i+1} = L_i[y]/(m_i) extends the level below by a monic irreducible
modulus m_i.  The modulus is not an input: it is always the *first* monic
irreducible of the requested degree in the canonical ordering, so two runs
(or two machines) always build identical towers.

Canonical ordering.  Elements of a level correspond to integers: a
coefficient vector (c_0, ..., c_{d-1}) over a sublevel of size S has index
sum(index(c_j) * S**j), i.e. the base-S number whose most significant
digit is the leading coefficient.  Prime-level elements are their own
residues.  Scans ("first element such that ...") always walk indices
upward; polynomials of fixed degree are ordered the same way by their
non-leading coefficients.

Representations.  Internally an element of a level is
  * an int residue, at the prime level;
  * an int canonical index, at small levels (at most TABLE_LIMIT elements)
    where full multiplication/addition tables are precomputed;
  * a tuple of sublevel representations otherwise.
Subfields embed positionally: the element of index i in a sublevel is the
element of index i upstairs, so embedding small-field scalars is free.

Public entry points: build_field, FieldCtx, FieldElem, elem_order,
find_element_of_order.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from . import numbertheory as nt
from .poly import Poly, poly_xgcd, pow_mod

#: Levels with at most this many elements get full lookup tables and use
#: int indices as their representation.
TABLE_LIMIT = 128

#: find_element_of_order walks the canonical scan only in fields up to this
#: size; larger fields use a deterministic subgroup construction instead
#: (the scan would be quadratic in the field size).
SCAN_LIMIT = 4096

#: Exhaustive root filtering during the modulus scan is only attempted when
#: the sublevel is at most this large.
ROOT_SCAN_LIMIT = 4096

DEFAULT_MAX_CARDINALITY = 2**64

_VAR_NAMES = "yzwv"


def _var_name(level: int) -> str:
    if 1 <= level <= len(_VAR_NAMES):
        return _VAR_NAMES[level - 1]
    return f"t{level}"


class FieldElem:
    """An element of a FieldCtx; a thin immutable wrapper over the rep."""

    __slots__ = ("ctx", "rep")

    def __init__(self, ctx: "FieldCtx", rep):
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "rep", rep)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    def _coerce(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.ctx is not self.ctx:
                raise ValueError(
                    "elements of different field contexts; lift explicitly"
                )
            return other
        raise TypeError(f"cannot combine FieldElem with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.add(self.rep, other.rep))

    def __sub__(self, other):
        other = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.sub(self.rep, other.rep))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.rep))

    def __mul__(self, other):
        other = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.mul(self.rep, other.rep))

    def __truediv__(self, other):
        other = self._coerce(other)
        return FieldElem(self.ctx, self.ctx.mul(self.rep, self.ctx.inv(other.rep)))

    def __pow__(self, e: int):
        return FieldElem(self.ctx, self.ctx.pow_rep(self.rep, e))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.inv(self.rep))

    @property
    def is_zero(self) -> bool:
        return self.rep == self.ctx.zero_rep

    def __bool__(self) -> bool:
        return not self.is_zero

    @property
    def index(self) -> int:
        """Position of this element in the canonical scan."""
        return self.ctx.rep_to_index(self.rep)

    def coeffs(self):
        """Nested coefficient lists down to prime residues."""
        return self.ctx.rep_to_nested(self.rep)

    def lift(self, target: "FieldCtx") -> "FieldElem":
        """Embed into an extension built on top of this element's context."""
        path = []
        c = target
        while c is not None and c is not self.ctx:
            path.append(c)
            c = c.subfield
        if c is None:
            raise ValueError("target is not an extension of this context")
        rep = self.rep
        for level in reversed(path):
            rep = level.embed_from_sub(rep)
        return FieldElem(target, rep)

    def project(self, target: "FieldCtx") -> "FieldElem":
        """Inverse of lift; error if the element is not in the subfield."""
        c = self.ctx
        rep = self.rep
        while c is not target:
            if c.subfield is None:
                raise ValueError("target is not below this element's context")
            if not c.rep_in_sub(rep):
                raise ValueError("element does not lie in the requested subfield")
            rep = c.project_to_sub(rep)
            c = c.subfield
        return FieldElem(target, rep)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldElem)
            and other.ctx is self.ctx
            and other.rep == self.rep
        )

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.rep))

    def __repr__(self) -> str:
        return self.ctx.rep_to_str(self.rep)


class FieldCtx:
    """One level of a field tower.  Immutable after construction."""

    def __init__(self, *, _token=None):
        if _token is not _CTX_TOKEN:
            raise TypeError("use build_field() to construct field contexts")

    # -- construction -----------------------------------------------------

    @staticmethod
    def _make_prime(p: int) -> "FieldCtx":
        ctx = FieldCtx(_token=_CTX_TOKEN)
        ctx.p = p
        ctx.degrees = ()
        ctx.subfield = None
        ctx.step_degree = 0
        ctx.cardinality = p
        ctx.modulus = None
        ctx.kind = "prime"
        ctx.zero_rep = 0
        ctx.one_rep = 1 % p
        ctx.add = lambda a, b: (a + b) % p
        ctx.sub = lambda a, b: (a - b) % p
        ctx.neg = lambda a: (-a) % p

        def mul(a, b):
            return a * b % p

        def inv(a):
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return pow(a, p - 2, p)

        ctx.mul = mul
        ctx.inv = inv
        ctx.scale = mul  # sublevel of the prime level is itself
        ctx._unit_factors = None
        return ctx

    @staticmethod
    def _make_extension(sub: "FieldCtx", degree: int) -> "FieldCtx":
        ctx = FieldCtx(_token=_CTX_TOKEN)
        ctx.p = sub.p
        ctx.degrees = sub.degrees + (degree,)
        ctx.subfield = sub
        ctx.step_degree = degree
        ctx.cardinality = sub.cardinality**degree
        ctx.modulus = _first_irreducible(sub, degree)
        ctx._unit_factors = None

        d = degree
        # y**(d+i) mod modulus, as length-d coefficient tuples over sub.
        red = [
            (Poly.monomial(sub, d + i) % ctx.modulus).padded(d) for i in range(d - 1)
        ]
        ctx._red = tuple(red)

        szero, sone = sub.zero_rep, sub.one_rep
        ctx._vec_zero = (szero,) * d
        ctx._vec_one = (sone,) + (szero,) * (d - 1)

        vec_add, vec_neg, vec_mul, vec_scale = _vector_ops(sub, d, ctx._red)

        def vec_sub(a, b):
            return vec_add(a, vec_neg(b))

        mod_poly = ctx.modulus

        def vec_inv(a):
            if a == ctx._vec_zero:
                raise ZeroDivisionError("inverse of zero")
            g, u, _ = poly_xgcd(Poly(sub, a), mod_poly)
            if g.degree != 0:
                raise RuntimeError("modulus is not irreducible; tower corrupt")
            return u.padded(d)

        S = sub.cardinality

        def vec_to_index(rep):
            idx = 0
            for c in reversed(rep):
                idx = idx * S + sub.rep_to_index(c)
            return idx

        def vec_from_index(i):
            digits = []
            for _ in range(d):
                i, r = divmod(i, S)
                digits.append(sub.rep_from_index(r))
            return tuple(digits)

        if ctx.cardinality <= TABLE_LIMIT:
            ctx.kind = "tabulated"
            n_el = ctx.cardinality
            vecs = [vec_from_index(i) for i in range(n_el)]
            ctx._vecs = tuple(vecs)
            pos = {v: i for i, v in enumerate(vecs)}
            add_t = [[pos[vec_add(a, b)] for b in vecs] for a in vecs]
            mul_t = [[pos[vec_mul(a, b)] for b in vecs] for a in vecs]
            neg_t = [pos[vec_neg(a)] for a in vecs]
            inv_t = [0] + [pos[vec_inv(a)] for a in vecs[1:]]
            ctx._add_t, ctx._mul_t = add_t, mul_t
            ctx.zero_rep, ctx.one_rep = 0, pos[ctx._vec_one]
            ctx.add = lambda a, b: add_t[a][b]
            ctx.sub = lambda a, b: add_t[a][neg_t[b]]
            ctx.neg = lambda a: neg_t[a]
            ctx.mul = lambda a, b: mul_t[a][b]

            def tab_inv(a):
                if a == 0:
                    raise ZeroDivisionError("inverse of zero")
                return inv_t[a]

            ctx.inv = tab_inv
            # Scaling by an embedded sublevel element is plain multiplication
            # because sub indices embed as identical indices here.
            ctx.scale = ctx.mul
        else:
            ctx.kind = "vector"
            ctx.zero_rep, ctx.one_rep = ctx._vec_zero, ctx._vec_one
            ctx.add = vec_add
            ctx.sub = vec_sub
            ctx.neg = vec_neg
            ctx.mul = vec_mul
            ctx.inv = vec_inv
            ctx.scale = vec_scale
        ctx._vec_to_index = vec_to_index
        ctx._vec_from_index = vec_from_index
        return ctx

    # -- representation plumbing -------------------------------------------

    def rep_from_index(self, i: int):
        if not isinstance(i, int) or not 0 <= i < self.cardinality:
            raise ValueError(f"index {i!r} out of range for {self!r}")
        if self.kind == "vector":
            return self._vec_from_index(i)
        return i

    def rep_to_index(self, rep) -> int:
        if self.kind == "vector":
            return self._vec_to_index(rep)
        return rep

    def rep_to_nested(self, rep):
        if self.kind == "prime":
            return rep
        vec = self._vecs[rep] if self.kind == "tabulated" else rep
        return [self.subfield.rep_to_nested(c) for c in vec]

    def rep_from_nested(self, data):
        if self.kind == "prime":
            if not isinstance(data, int):
                raise ValueError(f"prime-level coefficient must be int, got {data!r}")
            if not 0 <= data < self.p:
                raise ValueError(f"residue {data} out of range mod {self.p}")
            return data
        if not isinstance(data, (list, tuple)) or len(data) != self.step_degree:
            raise ValueError(
                f"expected {self.step_degree} coefficients for {self!r}, got {data!r}"
            )
        vec = tuple(self.subfield.rep_from_nested(c) for c in data)
        if self.kind == "tabulated":
            return self._vec_to_index(vec)
        return vec

    def embed_from_sub(self, sub_rep):
        """Rep of a sublevel element viewed one level up (positional)."""
        if self.kind == "tabulated":
            return self.subfield.rep_to_index(sub_rep)
        return (sub_rep,) + (self.subfield.zero_rep,) * (self.step_degree - 1)

    def rep_in_sub(self, rep) -> bool:
        if self.kind == "tabulated":
            return rep < self.subfield.cardinality
        return all(c == self.subfield.zero_rep for c in rep[1:])

    def project_to_sub(self, rep):
        if self.kind == "tabulated":
            return self.subfield.rep_from_index(rep)
        return rep[0]

    def pow_rep(self, rep, e: int):
        if e < 0:
            rep = self.inv(rep)
            e = -e
        result = self.one_rep
        base = rep
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def iter_reps(self) -> Iterator:
        if self.kind == "vector":
            return (self._vec_from_index(i) for i in range(self.cardinality))
        return iter(range(self.cardinality))

    def rep_to_str(self, rep) -> str:
        if self.kind == "prime":
            return str(rep)
        vec = self._vecs[rep] if self.kind == "tabulated" else rep
        var = _var_name(len(self.degrees))
        terms = []
        for j in range(len(vec) - 1, -1, -1):
            c = vec[j]
            if c == self.subfield.zero_rep:
                continue
            cs = self.subfield.rep_to_str(c)
            if j == 0:
                terms.append(cs)
                continue
            xs = var if j == 1 else f"{var}^{j}"
            if cs == "1":
                terms.append(xs)
            elif any(ch in cs for ch in "+- "):
                terms.append(f"({cs})*{xs}")
            else:
                terms.append(f"{cs}*{xs}")
        return " + ".join(terms) if terms else "0"

    # -- public API ---------------------------------------------------------

    def elem(self, x) -> FieldElem:
        """Element from a canonical index, nested coefficient list, or elem."""
        if isinstance(x, FieldElem):
            if x.ctx is not self:
                raise ValueError("element belongs to a different context")
            return x
        if isinstance(x, int):
            return FieldElem(self, self.rep_from_index(x))
        if isinstance(x, (list, tuple)):
            return FieldElem(self, self.rep_from_nested(list(x)))
        raise TypeError(f"cannot build a field element from {type(x).__name__}")

    def vector(self, xs: Iterable) -> tuple[FieldElem, ...]:
        return tuple(self.elem(x) for x in xs)

    def zero(self) -> FieldElem:
        return FieldElem(self, self.zero_rep)

    def one(self) -> FieldElem:
        return FieldElem(self, self.one_rep)

    def elements(self) -> Iterator[FieldElem]:
        return (FieldElem(self, r) for r in self.iter_reps())

    def extend(self, degree: int, max_cardinality: int | None = None) -> "FieldCtx":
        return build_field(
            self.p,
            list(self.degrees) + [degree],
            max_cardinality=max_cardinality or DEFAULT_MAX_CARDINALITY,
        )

    def is_extension_of(self, other: "FieldCtx") -> bool:
        c = self
        while c is not None:
            if c is other:
                return True
            c = c.subfield
        return False

    def describe(self) -> dict:
        moduli = []
        c = self
        chain = []
        while c is not None and c.subfield is not None:
            chain.append(c)
            c = c.subfield
        for level in reversed(chain):
            moduli.append(
                [level.subfield.rep_to_nested(cf) for cf in level.modulus.coeffs]
            )
        return {"p": self.p, "degrees": list(self.degrees), "moduli": moduli}

    def __repr__(self) -> str:
        if not self.degrees:
            return f"GF({self.p})"
        total = 1
        for d in self.degrees:
            total *= d
        return f"GF({self.p}^{total})" if total > 1 else f"GF({self.p})"


_CTX_TOKEN = object()


def _vector_ops(sub: FieldCtx, d: int, red: tuple):
    """Specialized add/neg/mul/scale closures for a degree-d vector level."""
    szero = sub.zero_rep

    if sub.kind == "prime":
        p = sub.p

        def add(a, b):
            return tuple((x + y) % p for x, y in zip(a, b))

        def neg(a):
            return tuple((-x) % p for x in a)

        def mul(a, b):
            conv = [0] * (2 * d - 1)
            for i in range(d):
                ai = a[i]
                if ai:
                    for j in range(d):
                        bj = b[j]
                        if bj:
                            conv[i + j] += ai * bj
            res = conv[:d]
            for i in range(d - 1):
                c = conv[d + i]
                if c:
                    row = red[i]
                    for j in range(d):
                        rj = row[j]
                        if rj:
                            res[j] += c * rj
            return tuple(x % p for x in res)

        def scale(a, s):
            if not s:
                return (0,) * d
            return tuple(x * s % p for x in a)

        return add, neg, mul, scale

    if sub.kind == "tabulated":
        add_t, mul_t = sub._add_t, sub._mul_t
        neg_s = sub.neg

        def add(a, b):
            return tuple(add_t[x][y] for x, y in zip(a, b))

        def neg(a):
            return tuple(neg_s(x) for x in a)

        def mul(a, b):
            conv = [0] * (2 * d - 1)
            for i in range(d):
                ai = a[i]
                if ai:
                    row = mul_t[ai]
                    for j in range(d):
                        bj = b[j]
                        if bj:
                            k = i + j
                            conv[k] = add_t[conv[k]][row[bj]]
            res = conv[:d]
            for i in range(d - 1):
                c = conv[d + i]
                if c:
                    rrow = red[i]
                    crow = mul_t[c]
                    for j in range(d):
                        rj = rrow[j]
                        if rj:
                            res[j] = add_t[res[j]][crow[rj]]
            return tuple(res)

        def scale(a, s):
            if not s:
                return (0,) * d
            row = mul_t[s]
            return tuple(row[x] for x in a)

        return add, neg, mul, scale

    sadd, smul, sneg = sub.add, sub.mul, sub.neg

    def add(a, b):
        return tuple(sadd(x, y) for x, y in zip(a, b))

    def neg(a):
        return tuple(sneg(x) for x in a)

    def mul(a, b):
        conv = [szero] * (2 * d - 1)
        for i in range(d):
            ai = a[i]
            if ai != szero:
                for j in range(d):
                    bj = b[j]
                    if bj != szero:
                        conv[i + j] = sadd(conv[i + j], smul(ai, bj))
        res = conv[:d]
        for i in range(d - 1):
            c = conv[d + i]
            if c != szero:
                row = red[i]
                for j in range(d):
                    rj = row[j]
                    if rj != szero:
                        res[j] = sadd(res[j], smul(c, rj))
        return tuple(res)

    def scale(a, s):
        if s == szero:
            return (szero,) * d
        return tuple(smul(x, s) for x in a)

    return add, neg, mul, scale


def _has_root(f: Poly, sub: FieldCtx) -> bool:
    return any(f.eval_rep(r) == sub.zero_rep for r in sub.iter_reps())


def _is_irreducible(f: Poly, sub: FieldCtx) -> bool:
    """Exact irreducibility test for monic f over the sublevel.

    Degree 1 is always irreducible.  When the sublevel is small enough to
    scan, a root search settles degrees 2 and 3 outright and screens larger
    degrees cheaply.  The general case is the classic power test:
    f (degree d) is irreducible over a field of size S iff x**(S**d) = x
    mod f and gcd(x**(S**(d/r)) - x, f) = 1 for every prime r dividing d.
    """
    d = f.degree
    if d == 1:
        return True
    scannable = sub.cardinality <= ROOT_SCAN_LIMIT
    if scannable:
        if _has_root(f, sub):
            return False
        if d <= 3:
            return True
    S = sub.cardinality
    x = Poly.x(sub)
    checkpoints = {d // r for r in nt.factorint(d)}
    frob = x
    powers = {}
    for k in range(1, d + 1):
        frob = pow_mod(frob, S, f)
        if k in checkpoints or k == d:
            powers[k] = frob
    if powers[d] != x % f:
        return False
    from .poly import poly_gcd

    for k in checkpoints:
        if poly_gcd(powers[k] - x, f).degree != 0:
            return False
    return True


def _first_irreducible(sub: FieldCtx, degree: int) -> Poly:
    """First monic irreducible of the given degree in canonical order."""
    if degree < 1:
        raise ValueError("extension degree must be >= 1")
    S = sub.cardinality
    one = sub.one_rep
    for idx in range(S**degree):
        i = idx
        coeffs = []
        for _ in range(degree):
            i, r = divmod(i, S)
            coeffs.append(sub.rep_from_index(r))
        f = Poly(sub, coeffs + [one])
        if _is_irreducible(f, sub):
            return f
    raise RuntimeError("no irreducible polynomial found; unreachable")


_FIELD_CACHE: dict[tuple[int, tuple[int, ...]], FieldCtx] = {}


def build_field(
    p: int,
    degrees: Sequence[int],
    max_cardinality: int = DEFAULT_MAX_CARDINALITY,
) -> FieldCtx:
    """Deterministically build the tower F_p < F_p^d1 < (F_p^d1)^d2 < ...

    Equal (p, degrees) always return the identical context object, so
    element contexts can be compared by identity.  The constructor refuses
    towers larger than max_cardinality.
    """
    if not nt.is_prime(p):
        raise ValueError(f"{p} is not prime")
    degs = tuple(int(d) for d in degrees)
    if any(d < 1 for d in degs):
        raise ValueError("extension degrees must be >= 1")
    card = p
    for d in degs:
        card **= d
        if card > max_cardinality:
            raise ValueError(
                f"tower cardinality {card} exceeds the cap {max_cardinality}"
            )
    key = (p, degs)
    if key in _FIELD_CACHE:
        return _FIELD_CACHE[key]
    # Build every prefix so .subfield chains are shared and cached.
    prime_key = (p, ())
    if prime_key not in _FIELD_CACHE:
        _FIELD_CACHE[prime_key] = FieldCtx._make_prime(p)
    ctx = _FIELD_CACHE[prime_key]
    for i, d in enumerate(degs):
        pkey = (p, degs[: i + 1])
        if pkey not in _FIELD_CACHE:
            _FIELD_CACHE[pkey] = FieldCtx._make_extension(ctx, d)
        ctx = _FIELD_CACHE[pkey]
    return ctx


def _unit_factors(ctx: FieldCtx) -> dict[int, int]:
    if ctx._unit_factors is None:
        ctx._unit_factors = nt.factorint(ctx.cardinality - 1)
    return ctx._unit_factors


def elem_order(x: FieldElem) -> int:
    """Multiplicative order of a nonzero field element."""
    if x.is_zero:
        raise ValueError("zero has no multiplicative order")
    ctx = x.ctx
    order = ctx.cardinality - 1
    rep = x.rep
    for r in _unit_factors(ctx):
        while order % r == 0 and ctx.pow_rep(rep, order // r) == ctx.one_rep:
            order //= r
    return order


def _order_is(ctx: FieldCtx, rep, e: int, e_factors: dict[int, int]) -> bool:
    if ctx.pow_rep(rep, e) != ctx.one_rep:
        return False
    return all(ctx.pow_rep(rep, e // r) != ctx.one_rep for r in e_factors)


def find_element_of_order(ctx: FieldCtx, e: int) -> FieldElem:
    """Deterministically pick an element of multiplicative order exactly e.

    In fields up to SCAN_LIMIT elements this is the first such element in
    the canonical scan.  In larger fields the scan is replaced by an
    equally deterministic shortcut: take the first scanned h whose power
    h**((Q-1)/e) has order e (the scan would otherwise visit on the order
    of (Q-1)/phi(e) elements, which is hopeless at desk scale).
    """
    Q = ctx.cardinality
    if e < 1:
        raise ValueError("order must be >= 1")
    if (Q - 1) % e != 0:
        raise ValueError(f"no element of order {e}: it does not divide {Q - 1}")
    e_factors = nt.factorint(e) if e > 1 else {}
    if Q <= SCAN_LIMIT:
        for i in range(1, Q):
            rep = ctx.rep_from_index(i)
            if _order_is(ctx, rep, e, e_factors):
                return FieldElem(ctx, rep)
        raise RuntimeError("no element of the requested order; unreachable")
    cofactor = (Q - 1) // e
    for i in range(1, Q):
        rep = ctx.pow_rep(ctx.rep_from_index(i), cofactor)
        if _order_is(ctx, rep, e, e_factors):
            return FieldElem(ctx, rep)
    raise RuntimeError("no element of the requested order; unreachable")
