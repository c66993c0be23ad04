"""Exact coefficient arithmetic for structure-constant tables.

Scalars live in one of three kinds of field:

  * Q               -- stdlib Fraction
  * GF(p)           -- ints in [0, p), p prime
  * Frac(K[x1..xn]) -- fractions of sparse multivariate polynomials over
                       K = Q or GF(p)

A polynomial is a dict mapping exponent tuples to nonzero base-field
coefficients; the zero polynomial is the empty dict.  Fractions are *not*
reduced by multivariate gcd: equality and zero tests go through
cross-multiplication, which is exact regardless of normalisation.  The only
normalisation applied is cheap (common monomial factors, monic single-term
denominators); it keeps the monomial denominators that actually occur in the
bundled tables from snowballing, without pulling in real gcd machinery.

The user-facing value type is `Scalar`, a thin (field, payload) wrapper with
operator overloads; the evaluation loops elsewhere in the package work on raw
payloads through the `Field` objects for speed.

All scalar values are immutable after construction and all operations are
pure, so values can be shared and sent between threads freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Mapping, Optional, Tuple, Union

Exponent = Tuple[int, ...]


class CoeffError(Exception):
    """Base class for scalar arithmetic errors."""


class FieldMismatchError(CoeffError):
    pass


class ZeroInversionError(CoeffError):
    pass


class CharacteristicError(CoeffError):
    pass


class UnboundParameterError(CoeffError):
    pass


def _is_identifier(name: str) -> bool:
    return name.isidentifier()


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Base field plus an ordered tuple of parameter names (possibly empty)."""

    base: str  # "Q" or "GF"
    p: Optional[int] = None
    params: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.base not in ("Q", "GF"):
            raise CoeffError(f"unknown base field {self.base!r}")
        if self.base == "GF":
            if self.p is None or not is_prime(self.p):
                raise CoeffError(f"GF modulus must be prime, got {self.p!r}")
        elif self.p is not None:
            raise CoeffError("Q takes no modulus")
        if len(set(self.params)) != len(self.params):
            raise CoeffError("duplicate parameter names")
        for name in self.params:
            if not _is_identifier(name):
                raise CoeffError(f"bad parameter name {name!r}")

    @property
    def characteristic(self) -> int:
        return self.p if self.base == "GF" else 0

    def base_label(self) -> str:
        return "Q" if self.base == "Q" else f"GF({self.p})"

    def label(self) -> str:
        if not self.params:
            return self.base_label()
        return f"Frac({self.base_label()}[{','.join(self.params)}])"


# ---------------------------------------------------------------------------
# Sparse polynomials over a base field.  These are plain dicts; all the
# operations take the base Field object for coefficient arithmetic.
# ---------------------------------------------------------------------------

Poly = Dict[Exponent, object]


def poly_add(a: Poly, b: Poly, base: "Field") -> Poly:
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for e, c in b.items():
        if e in out:
            s = base.add(out[e], c)
            if base.is_zero(s):
                del out[e]
            else:
                out[e] = s
        else:
            out[e] = c
    return out


def poly_neg(a: Poly, base: "Field") -> Poly:
    return {e: base.neg(c) for e, c in a.items()}


def poly_mul(a: Poly, b: Poly, base: "Field") -> Poly:
    if not a or not b:
        return {}
    out: Poly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            c = base.mul(ca, cb)
            if e in out:
                s = base.add(out[e], c)
                if base.is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            elif not base.is_zero(c):
                out[e] = c
    return out


def poly_scale(a: Poly, c, base: "Field") -> Poly:
    if base.is_zero(c):
        return {}
    return {e: base.mul(coef, c) for e, coef in a.items()}


def poly_pow(a: Poly, k: int, base: "Field", nvars: int) -> Poly:
    out: Poly = {(0,) * nvars: base.one}
    for _ in range(k):
        out = poly_mul(out, a, base)
    return out


def poly_eval(a: Poly, values, base: "Field"):
    """Evaluate with every variable bound to a base-field value."""
    acc = base.zero
    for e, c in a.items():
        term = c
        for v, k in zip(values, e):
            for _ in range(k):
                term = base.mul(term, v)
        acc = base.add(acc, term)
    return acc


class FracPayload:
    """num/den pair of polynomials; den is never the zero polynomial."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        self.num = num
        self.den = den

    def __repr__(self):  # debugging only; real rendering lives on the field
        return f"FracPayload({self.num!r}, {self.den!r})"


# ---------------------------------------------------------------------------
# Field objects
# ---------------------------------------------------------------------------


class Field:
    """Arithmetic over payload values of one scalar kind."""

    spec: FieldSpec
    zero: object
    one: object

    def add(self, x, y):
        raise NotImplementedError

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def is_zero(self, x) -> bool:
        raise NotImplementedError

    def eq(self, x, y) -> bool:
        return self.is_zero(self.sub(x, y))

    def pow(self, x, k: int):
        out = self.one
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def from_int(self, n: int):
        raise NotImplementedError

    def from_fraction(self, q: Fraction):
        raise NotImplementedError

    def render(self, x) -> str:
        raise NotImplementedError

    def scalar(self, x) -> "Scalar":
        return Scalar(self, x)

    def __eq__(self, other):
        return isinstance(other, Field) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)


class RationalField(Field):
    def __init__(self):
        self.spec = FieldSpec("Q")
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def inv(self, x):
        if x == 0:
            raise ZeroInversionError("inverse of zero")
        return 1 / x

    def is_zero(self, x):
        return x == 0

    def eq(self, x, y):
        return x == y

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, q):
        return q

    def render(self, x):
        return str(x)


class PrimeField(Field):
    def __init__(self, p: int):
        self.spec = FieldSpec("GF", p)
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def neg(self, x):
        return (-x) % self.p

    def inv(self, x):
        x %= self.p
        if x == 0:
            raise ZeroInversionError("inverse of zero")
        return pow(x, self.p - 2, self.p)

    def is_zero(self, x):
        return x % self.p == 0

    def eq(self, x, y):
        return (x - y) % self.p == 0

    def from_int(self, n):
        return n % self.p

    def from_fraction(self, q: Fraction):
        if q.denominator % self.p == 0:
            raise CharacteristicError(
                f"1/{q.denominator} does not exist in GF({self.p})"
            )
        return (q.numerator * pow(q.denominator % self.p, self.p - 2, self.p)) % self.p

    def render(self, x):
        return str(x % self.p)


class FractionField(Field):
    """Fraction field of a multivariate polynomial ring over Q or GF(p)."""

    def __init__(self, base: Field, params: Tuple[str, ...]):
        if base.spec.params:
            raise CoeffError("base of a fraction field must be parameter-free")
        if not params:
            raise CoeffError("fraction field needs at least one parameter")
        self.spec = FieldSpec(base.spec.base, base.spec.p, tuple(params))
        self.base = base
        self.n = len(params)
        self._zero_exp = (0,) * self.n
        self.zero = FracPayload({}, {self._zero_exp: base.one})
        self.one = FracPayload({self._zero_exp: base.one}, {self._zero_exp: base.one})

    # -- construction helpers

    def _make(self, num: Poly, den: Poly) -> FracPayload:
        if not den:
            raise ZeroInversionError("zero denominator")
        if not num:
            return FracPayload({}, {self._zero_exp: self.base.one})
        num, den = self._cancel_monomial(num, den)
        den = dict(den)
        num = dict(num)
        # make the denominator monic in its lex-leading term; when the
        # denominator is a single monomial this leaves a coefficient of 1,
        # which is the common case in the bundled tables
        lead = max(den)
        c = den[lead]
        if not self.base.eq(c, self.base.one):
            cinv = self.base.inv(c)
            num = poly_scale(num, cinv, self.base)
            den = poly_scale(den, cinv, self.base)
        return FracPayload(num, den)

    def _cancel_monomial(self, num: Poly, den: Poly):
        lows = None
        for e in num:
            lows = e if lows is None else tuple(map(min, lows, e))
        for e in den:
            lows = tuple(map(min, lows, e))
        if lows is None or not any(lows):
            return num, den
        shift = lambda e: tuple(a - b for a, b in zip(e, lows))
        return {shift(e): c for e, c in num.items()}, {
            shift(e): c for e, c in den.items()
        }

    def monomial(self, name: str) -> FracPayload:
        i = self.spec.params.index(name)
        e = tuple(1 if j == i else 0 for j in range(self.n))
        return FracPayload({e: self.base.one}, {self._zero_exp: self.base.one})

    def from_poly(self, p: Poly) -> FracPayload:
        return self._make(p, {self._zero_exp: self.base.one})

    # -- arithmetic

    def add(self, x: FracPayload, y: FracPayload):
        if not x.num:
            return y
        if not y.num:
            return x
        if x.den == y.den:
            return self._make(poly_add(x.num, y.num, self.base), x.den)
        num = poly_add(
            poly_mul(x.num, y.den, self.base),
            poly_mul(y.num, x.den, self.base),
            self.base,
        )
        return self._make(num, poly_mul(x.den, y.den, self.base))

    def neg(self, x: FracPayload):
        return FracPayload(poly_neg(x.num, self.base), x.den)

    def mul(self, x: FracPayload, y: FracPayload):
        if not x.num or not y.num:
            return self.zero
        return self._make(
            poly_mul(x.num, y.num, self.base), poly_mul(x.den, y.den, self.base)
        )

    def inv(self, x: FracPayload):
        if not x.num:
            raise ZeroInversionError("inverse of zero")
        return self._make(x.den, x.num)

    def pow(self, x: FracPayload, k: int):
        return FracPayload(
            poly_pow(x.num, k, self.base, self.n), poly_pow(x.den, k, self.base, self.n)
        )

    def is_zero(self, x: FracPayload):
        return not x.num

    def eq(self, x: FracPayload, y: FracPayload):
        # cross multiplication: exact whatever the normalisation
        if x.den == y.den:
            return x.num == y.num or not poly_add(
                x.num, poly_neg(y.num, self.base), self.base
            )
        lhs = poly_mul(x.num, y.den, self.base)
        rhs = poly_mul(y.num, x.den, self.base)
        return not poly_add(lhs, poly_neg(rhs, self.base), self.base)

    def from_int(self, n):
        return self.from_poly(
            {} if self.base.is_zero(self.base.from_int(n)) else {self._zero_exp: self.base.from_int(n)}
        )

    def from_fraction(self, q: Fraction):
        c = self.base.from_fraction(q)
        return self.from_poly({} if self.base.is_zero(c) else {self._zero_exp: c})

    # -- substitution

    def substitute(self, x: FracPayload, bindings: Mapping[str, object], target: Field):
        """Bind a subset of the parameters to base-field values.

        `target` must be the field over the remaining parameters (or the bare
        base field when every parameter is bound).
        """
        remaining = [p for p in self.spec.params if p not in bindings]
        if isinstance(target, FractionField):
            if tuple(remaining) != target.spec.params:
                raise CoeffError("target field does not match unbound parameters")
        elif remaining:
            raise UnboundParameterError(
                f"unbound parameters: {', '.join(remaining)}"
            )
        keep = [i for i, p in enumerate(self.spec.params) if p not in bindings]
        vals = {
            i: self.base.from_fraction(Fraction(bindings[p]))
            for i, p in enumerate(self.spec.params)
            if p in bindings
        }

        def down(poly: Poly):
            if isinstance(target, FractionField):
                out: Poly = {}
                for e, c in poly.items():
                    coef = c
                    for i, v in vals.items():
                        coef = self.base.mul(coef, self.base.pow(v, e[i]))
                    ne = tuple(e[i] for i in keep)
                    if ne in out:
                        s = self.base.add(out[ne], coef)
                        if self.base.is_zero(s):
                            del out[ne]
                        else:
                            out[ne] = s
                    elif not self.base.is_zero(coef):
                        out[ne] = coef
                return out
            acc = self.base.zero
            for e, c in poly.items():
                coef = c
                for i, v in vals.items():
                    coef = self.base.mul(coef, self.base.pow(v, e[i]))
                acc = self.base.add(acc, coef)
            return acc

        num = down(x.num)
        den = down(x.den)
        if isinstance(target, FractionField):
            if not den:
                raise ZeroInversionError("denominator vanishes under binding")
            return target._make(num, den)
        if self.base.is_zero(den):
            raise ZeroInversionError("denominator vanishes under binding")
        return self.base.div(num, den)

    # -- rendering (grammar-compatible; see io module)

    def _monomial_str(self, e: Exponent) -> str:
        parts = []
        for name, k in zip(self.spec.params, e):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def _coeff_str(self, c) -> str:
        return self.base.render(c)

    def _poly_str(self, p: Poly) -> str:
        if not p:
            return "0"
        out = []
        for e in sorted(p, reverse=True):
            c = p[e]
            mono = self._monomial_str(e)
            cs = self._coeff_str(c)
            negative = cs.startswith("-")
            mag = cs[1:] if negative else cs
            if mono and mag == "1":
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = mag
            if not out:
                if negative:
                    # "-a^2" would parse as (-a)^2 under the grammar, so a
                    # leading negative bare monomial with an exponent gets an
                    # explicit -1* coefficient
                    if body == mono and "^" in body:
                        out.append(f"-1*{body}")
                    else:
                        out.append(f"-{body}")
                else:
                    out.append(body)
            else:
                out.append(f" - {body}" if negative else f" + {body}")
        return "".join(out)

    def render(self, x: FracPayload) -> str:
        num = self._poly_str(x.num)
        den_trivial = x.den == {self._zero_exp: self.base.one}
        if den_trivial:
            return num
        den = self._poly_str(x.den)
        num_atom = num if (num.isalnum() or self._is_single_monomial(x.num)) else f"({num})"
        den_atom = den if den.isidentifier() else f"({den})"
        return f"{num_atom}/{den_atom}"

    def _is_single_monomial(self, p: Poly) -> bool:
        if len(p) != 1:
            return False
        ((e, c),) = p.items()
        cs = self._coeff_str(c)
        return not cs.startswith("-") and "/" not in cs


_Q = RationalField()
_GF_CACHE: Dict[int, PrimeField] = {}
_FRAC_CACHE: Dict[FieldSpec, FractionField] = {}


def rationals() -> RationalField:
    return _Q


def prime_field(p: int) -> PrimeField:
    if p not in _GF_CACHE:
        _GF_CACHE[p] = PrimeField(p)
    return _GF_CACHE[p]


def field_for(spec: FieldSpec) -> Field:
    base = _Q if spec.base == "Q" else prime_field(spec.p)
    if not spec.params:
        return base
    if spec not in _FRAC_CACHE:
        _FRAC_CACHE[spec] = FractionField(base, spec.params)
    return _FRAC_CACHE[spec]


# ---------------------------------------------------------------------------
# Scalar wrapper
# ---------------------------------------------------------------------------


class Scalar:
    """A payload tagged with its field; operations check field agreement."""

    __slots__ = ("field", "v")

    def __init__(self, field: Field, v):
        self.field = field
        self.v = v

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(
                    f"{self.field.spec.label()} vs {other.field.spec.label()}"
                )
            return other
        if isinstance(other, int):
            return Scalar(self.field, self.field.from_int(other))
        if isinstance(other, Fraction):
            return Scalar(self.field, self.field.from_fraction(other))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.add(self.v, o.v))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.sub(self.v, o.v))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.sub(o.v, self.v))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.mul(self.v, o.v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.div(self.v, o.v))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.v))

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise CoeffError("exponent must be a nonnegative integer")
        return Scalar(self.field, self.field.pow(self.v, k))

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.field.eq(self.v, o.v)

    def __hash__(self):
        raise TypeError("Scalar is not hashable")

    def is_zero(self) -> bool:
        return self.field.is_zero(self.v)

    def __repr__(self):
        return self.field.render(self.v)


def scalar_arith(op: str, x: Scalar, y: Optional[Scalar] = None) -> Scalar:
    """add | sub | mul | neg over two scalars of one FieldSpec."""
    if op == "neg":
        return -x
    if y is None:
        raise CoeffError(f"{op} needs two operands")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise CoeffError(f"unknown op {op!r}")


def scalar_inv(x: Scalar) -> Scalar:
    if x.is_zero():
        raise ZeroInversionError("inverse of zero")
    return Scalar(x.field, x.field.inv(x.v))


def scalar_is_zero(x: Scalar) -> bool:
    return x.is_zero()


def _occurring_params(x: Scalar) -> Tuple[str, ...]:
    f = x.field
    if not isinstance(f, FractionField):
        return ()
    used = set()
    for poly in (x.v.num, x.v.den):
        for e in poly:
            for i, k in enumerate(e):
                if k:
                    used.add(f.spec.params[i])
    return tuple(p for p in f.spec.params if p in used)


def substitute_params(x: Scalar, bindings: Mapping[str, Union[int, Fraction]]) -> Scalar:
    """Evaluate every parameter of `x`, landing in the parameter-free field."""
    f = x.field
    if not isinstance(f, FractionField):
        return x
    missing = [p for p in _occurring_params(x) if p not in bindings]
    if missing:
        raise UnboundParameterError(f"unbound parameters: {', '.join(missing)}")
    full = {p: Fraction(bindings.get(p, 0)) for p in f.spec.params}
    return Scalar(f.base, f.substitute(x.v, full, f.base))
