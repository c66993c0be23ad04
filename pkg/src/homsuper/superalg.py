"""Z2-graded algebras given by structure constants, plus the multilinear
forms the identity checkers are built from.

An algebra is an ordered homogeneous basis (names + parities) together with a
dense 3-index table: `c[i][j]` is the coordinate vector of the product of
basis elements i and j.  Entries are raw field payloads (see coeff); the
public operations speak `Scalar` vectors and unwrap at the boundary.

Sign conventions: every (-1)^(...) exponent is computed from the parities of
the *arguments written in the identity*, never from the support of derived
vectors.  On homogeneous inputs the two agree; the public trilinear and
quadrilinear forms therefore insist on homogeneous arguments where a sign is
involved.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence, Tuple

from .coeff import Field, FieldMismatchError, Scalar
from .report import IdentityReport, Vector


class AlgebraError(Exception):
    pass


class DimensionError(AlgebraError):
    pass


class HomogeneityError(AlgebraError):
    """A sign-bearing form got a mixed-parity argument."""


@dataclass(frozen=True)
class Basis:
    names: Tuple[str, ...]
    parities: Tuple[int, ...]

    def __post_init__(self):
        if len(self.names) != len(self.parities):
            raise AlgebraError("names and parities differ in length")
        if len(set(self.names)) != len(self.names):
            raise AlgebraError("duplicate basis names")
        if any(p not in (0, 1) for p in self.parities):
            raise AlgebraError("parities must be 0 or 1")

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise AlgebraError(f"unknown basis element {name!r}") from None


PayloadVector = Tuple[object, ...]


class SuperAlgebra:
    """Basis + structure constants + coefficient field."""

    __slots__ = ("basis", "field", "table")

    def __init__(self, basis: Basis, field: Field, table: Sequence[Sequence[PayloadVector]]):
        n = len(basis)
        if len(table) != n or any(len(row) != n for row in table):
            raise DimensionError("structure table does not match basis size")
        for row in table:
            for vec in row:
                if len(vec) != n:
                    raise DimensionError("structure vector of wrong length")
        self.basis = basis
        self.field = field
        self.table = tuple(tuple(tuple(vec) for vec in row) for row in table)

    @property
    def dim(self) -> int:
        return len(self.basis)

    # -- vector helpers -----------------------------------------------------

    def zero_vector(self) -> Vector:
        z = self.field.zero
        return tuple(Scalar(self.field, z) for _ in range(self.dim))

    def basis_vector(self, i) -> Vector:
        if isinstance(i, str):
            i = self.basis.index(i)
        return tuple(
            Scalar(self.field, self.field.one if j == i else self.field.zero)
            for j in range(self.dim)
        )

    def vector(self, coeffs: Mapping[str, Scalar]) -> Vector:
        out = [self.field.zero] * self.dim
        for name, s in coeffs.items():
            if s.field != self.field:
                raise FieldMismatchError(name)
            out[self.basis.index(name)] = s.v
        return tuple(Scalar(self.field, v) for v in out)

    def _unwrap(self, u: Vector) -> PayloadVector:
        if len(u) != self.dim:
            raise DimensionError("vector length does not match basis")
        out = []
        for s in u:
            if not isinstance(s, Scalar):
                raise AlgebraError("vector entries must be Scalar")
            if s.field != self.field:
                raise FieldMismatchError("vector over a different field")
            out.append(s.v)
        return tuple(out)

    def _wrap(self, u: Iterable[object]) -> Vector:
        return tuple(Scalar(self.field, v) for v in u)

    def vector_is_zero(self, u: Vector) -> bool:
        return all(s.is_zero() for s in u)

    def parity_of(self, u: Vector) -> Optional[int]:
        """Common parity of the support, None if mixed, 0 for the zero vector."""
        seen = None
        for s, p in zip(u, self.basis.parities):
            if not s.is_zero():
                if seen is None:
                    seen = p
                elif seen != p:
                    return None
        return 0 if seen is None else seen

    # -- raw product --------------------------------------------------------

    def _mul_payload(self, u: PayloadVector, v: PayloadVector) -> PayloadVector:
        F = self.field
        add, mul, is_zero = F.add, F.mul, F.is_zero
        out = [F.zero] * self.dim
        for i, ui in enumerate(u):
            if is_zero(ui):
                continue
            row = self.table[i]
            for j, vj in enumerate(v):
                if is_zero(vj):
                    continue
                uv = mul(ui, vj)
                for k, c in enumerate(row[j]):
                    if not is_zero(c):
                        out[k] = add(out[k], mul(uv, c))
        return tuple(out)


def multiply(A: SuperAlgebra, u: Vector, v: Vector) -> Vector:
    """Bilinear extension of the structure constants."""
    return A._wrap(A._mul_payload(A._unwrap(u), A._unwrap(v)))


def validate(A: SuperAlgebra) -> IdentityReport:
    """Grading check: c[i][j][k] = 0 unless parity(k) = parity(i)+parity(j)."""
    par = A.basis.parities
    bad = []
    for i in range(A.dim):
        for j in range(A.dim):
            vec = A.table[i][j]
            offending = [
                A.field.zero if par[k] == (par[i] + par[j]) % 2 else vec[k]
                for k in range(A.dim)
            ]
            if any(not A.field.is_zero(x) for x in offending):
                bad.append(((A.basis.names[i], A.basis.names[j]), A._wrap(offending)))
    return IdentityReport("grading", not bad, tuple(bad), A.dim * A.dim)


def _pairwise_report(A: SuperAlgebra, name: str, sign: int) -> IdentityReport:
    # residual = mu(ei,ej) - sign*(-1)^(pi pj) mu(ej,ei)
    F = A.field
    par = A.basis.parities
    bad = []
    for i in range(A.dim):
        for j in range(A.dim):
            s = -1 if (par[i] * par[j]) % 2 else 1
            s *= sign
            res = []
            for k in range(A.dim):
                x = A.table[i][j][k]
                y = A.table[j][i][k]
                res.append(F.sub(x, y) if s > 0 else F.add(x, y))
            if any(not F.is_zero(x) for x in res):
                bad.append(((A.basis.names[i], A.basis.names[j]), A._wrap(res)))
    return IdentityReport(name, not bad, tuple(bad), A.dim * A.dim)


def is_super_commutative(A: SuperAlgebra) -> IdentityReport:
    return _pairwise_report(A, "supercommutative", 1)


def is_super_skewsymmetric(A: SuperAlgebra) -> IdentityReport:
    return _pairwise_report(A, "superskew", -1)


# ---------------------------------------------------------------------------
# Even linear maps (data lives here; the operations live in maps.py)
# ---------------------------------------------------------------------------


class EvenLinearMap:
    """Square matrix over the basis; column j is the image of basis element j."""

    __slots__ = ("field", "cols")

    def __init__(self, field: Field, cols: Sequence[PayloadVector]):
        n = len(cols)
        if any(len(c) != n for c in cols):
            raise DimensionError("map matrix is not square")
        self.field = field
        self.cols = tuple(tuple(c) for c in cols)

    @property
    def dim(self) -> int:
        return len(self.cols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "EvenLinearMap":
        return cls(
            field,
            [
                tuple(field.one if i == j else field.zero for i in range(n))
                for j in range(n)
            ],
        )

    @classmethod
    def from_columns(cls, field: Field, cols: Sequence[Vector]) -> "EvenLinearMap":
        payload = []
        for col in cols:
            for s in col:
                if s.field != field:
                    raise FieldMismatchError("matrix entry over a different field")
            payload.append(tuple(s.v for s in col))
        return cls(field, payload)

    def is_identity(self) -> bool:
        F = self.field
        for j, col in enumerate(self.cols):
            for i, x in enumerate(col):
                want = F.one if i == j else F.zero
                if not F.eq(x, want):
                    return False
        return True

    def entry(self, i: int, j: int) -> Scalar:
        return Scalar(self.field, self.cols[j][i])

    def apply_payload(self, u: PayloadVector) -> PayloadVector:
        F = self.field
        out = [F.zero] * self.dim
        for j, uj in enumerate(u):
            if F.is_zero(uj):
                continue
            col = self.cols[j]
            for i, m in enumerate(col):
                if not F.is_zero(m):
                    out[i] = F.add(out[i], F.mul(m, uj))
        return tuple(out)

    def apply(self, A: SuperAlgebra, u: Vector) -> Vector:
        return A._wrap(self.apply_payload(A._unwrap(u)))


class Multiplicativity(enum.Enum):
    VERIFIED_TRUE = "verified-true"
    VERIFIED_FALSE = "verified-false"
    UNCHECKED = "unchecked"


def check_multiplicative(A: SuperAlgebra, alpha: EvenLinearMap) -> IdentityReport:
    """alpha(mu(ei,ej)) = mu(alpha(ei), alpha(ej)) on all basis pairs."""
    F = A.field
    bad = []
    cols = alpha.cols
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = alpha.apply_payload(A.table[i][j])
            rhs = A._mul_payload(cols[i], cols[j])
            res = tuple(F.sub(x, y) for x, y in zip(lhs, rhs))
            if any(not F.is_zero(x) for x in res):
                bad.append(((A.basis.names[i], A.basis.names[j]), A._wrap(res)))
    return IdentityReport("multiplicative", not bad, tuple(bad), A.dim * A.dim)


@dataclass
class HomSuperAlgebra:
    algebra: SuperAlgebra
    alpha: EvenLinearMap
    multiplicative: Multiplicativity = Multiplicativity.UNCHECKED

    def __post_init__(self):
        if self.alpha.dim != self.algebra.dim:
            raise DimensionError("twist map dimension does not match algebra")
        if self.alpha.field != self.algebra.field:
            raise FieldMismatchError("twist map over a different field")

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def field(self) -> Field:
        return self.algebra.field


def hom(A: SuperAlgebra, alpha: Optional[EvenLinearMap] = None) -> HomSuperAlgebra:
    """Pair an algebra with a twist (identity by default), verifying the
    multiplicativity flag eagerly."""
    if alpha is None:
        alpha = EvenLinearMap.identity(A.field, A.dim)
    flag = (
        Multiplicativity.VERIFIED_TRUE
        if check_multiplicative(A, alpha).holds
        else Multiplicativity.VERIFIED_FALSE
    )
    return HomSuperAlgebra(A, alpha, flag)


# ---------------------------------------------------------------------------
# Commutator and plus constructions
# ---------------------------------------------------------------------------


def commutator_algebra(H: HomSuperAlgebra) -> HomSuperAlgebra:
    """[x,y] = mu(x,y) - (-1)^(|x||y|) mu(y,x), same twist."""
    A = H.algebra
    F = A.field
    par = A.basis.parities
    table = []
    for i in range(A.dim):
        row = []
        for j in range(A.dim):
            s = (par[i] * par[j]) % 2
            vec = tuple(
                F.add(x, y) if s else F.sub(x, y)
                for x, y in zip(A.table[i][j], A.table[j][i])
            )
            row.append(vec)
        table.append(row)
    return hom_like(H, SuperAlgebra(A.basis, F, table))


def plus_algebra(H: HomSuperAlgebra) -> HomSuperAlgebra:
    """x*y = (1/2)(mu(x,y) + (-1)^(|x||y|) mu(y,x)), same twist."""
    A = H.algebra
    F = A.field
    if F.spec.characteristic == 2:
        raise AlgebraError("plus product needs 1/2: characteristic 2 field")
    half = F.inv(F.from_int(2))
    par = A.basis.parities
    table = []
    for i in range(A.dim):
        row = []
        for j in range(A.dim):
            s = (par[i] * par[j]) % 2
            vec = tuple(
                F.mul(half, F.sub(x, y) if s else F.add(x, y))
                for x, y in zip(A.table[i][j], A.table[j][i])
            )
            row.append(vec)
        table.append(row)
    return hom_like(H, SuperAlgebra(A.basis, F, table))


def hom_like(H: HomSuperAlgebra, A: SuperAlgebra) -> HomSuperAlgebra:
    """Same twist as H over a rebuilt product; multiplicativity re-verified."""
    flag = (
        Multiplicativity.VERIFIED_TRUE
        if check_multiplicative(A, H.alpha).holds
        else Multiplicativity.VERIFIED_FALSE
    )
    return HomSuperAlgebra(A, H.alpha, flag)


# ---------------------------------------------------------------------------
# Multilinear forms.  Public entry points take Scalar vectors; the signed
# forms demand homogeneous arguments wherever the identity reads a parity.
# ---------------------------------------------------------------------------


def _homogeneous_parity(A: SuperAlgebra, u: Vector, slot: str) -> int:
    p = A.parity_of(u)
    if p is None:
        raise HomogeneityError(f"argument {slot} has mixed parity")
    return p


def hom_associator(H: HomSuperAlgebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """as(x,y,z) = mu(mu(x,y), a(z)) - mu(a(x), mu(y,z)); no signs, any vectors."""
    A = H.algebra
    xp, yp, zp = A._unwrap(x), A._unwrap(y), A._unwrap(z)
    return A._wrap(_as_payload(H, xp, yp, zp))


def _as_payload(H, x, y, z):
    A = H.algebra
    al = H.alpha.apply_payload
    return tuple(
        A.field.sub(u, v)
        for u, v in zip(
            A._mul_payload(A._mul_payload(x, y), al(z)),
            A._mul_payload(al(x), A._mul_payload(y, z)),
        )
    )


def _j_payload(H, x, y, z, py: int, pz: int):
    """Hom-super-Jacobian with the (y,z) sign supplied by the caller."""
    A = H.algebra
    F = A.field
    al = H.alpha.apply_payload
    t1 = A._mul_payload(A._mul_payload(x, y), al(z))
    t2 = A._mul_payload(al(x), A._mul_payload(y, z))
    t3 = A._mul_payload(A._mul_payload(x, z), al(y))
    sgn = (py * pz) % 2
    out = []
    for a, b, c in zip(t1, t2, t3):
        v = F.sub(a, b)
        out.append(F.add(v, c) if sgn else F.sub(v, c))
    return tuple(out)


def hom_super_jacobian(H: HomSuperAlgebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """J(x,y,z) = [[x,y],a(z)] - [a(x),[y,z]] - (-1)^(|y||z|)[[x,z],a(y)].

    y and z must be homogeneous so the sign is defined.
    """
    A = H.algebra
    py = _homogeneous_parity(A, y, "y")
    pz = _homogeneous_parity(A, z, "z")
    return A._wrap(_j_payload(H, A._unwrap(x), A._unwrap(y), A._unwrap(z), py, pz))


def cyclic_hom_associator(H: HomSuperAlgebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """S(x,y,z) = as(x,y,z) + (-1)^(|x|(|y|+|z|)) as(y,z,x)
                + (-1)^(|z|(|x|+|y|)) as(z,x,y); homogeneous arguments."""
    A = H.algebra
    px = _homogeneous_parity(A, x, "x")
    py = _homogeneous_parity(A, y, "y")
    pz = _homogeneous_parity(A, z, "z")
    xp, yp, zp = A._unwrap(x), A._unwrap(y), A._unwrap(z)
    return A._wrap(_s_payload(H, xp, yp, zp, px, py, pz))


def _s_payload(H, x, y, z, px, py, pz):
    F = H.algebra.field
    t1 = _as_payload(H, x, y, z)
    t2 = _as_payload(H, y, z, x)
    t3 = _as_payload(H, z, x, y)
    s2 = (px * (py + pz)) % 2
    s3 = (pz * (px + py)) % 2
    out = []
    for a, b, c in zip(t1, t2, t3):
        v = F.sub(a, b) if s2 else F.add(a, b)
        out.append(F.sub(v, c) if s3 else F.add(v, c))
    return tuple(out)


def _bracket_payload(H, u, v, pu, pv):
    """Super-commutator of mu on payload vectors with given parities."""
    A = H.algebra
    F = A.field
    uv = A._mul_payload(u, v)
    vu = A._mul_payload(v, u)
    if (pu * pv) % 2:
        return tuple(F.add(a, b) for a, b in zip(uv, vu))
    return tuple(F.sub(a, b) for a, b in zip(uv, vu))


def _f_payload(H, t, x, y, z, pt, px, py, pz):
    """Graded Bruck-Kleinfeld f(t,x,y,z)."""
    A = H.algebra
    F = A.field
    al = H.alpha.apply_payload
    al2 = lambda v: al(al(v))
    term1 = _as_payload(H, A._mul_payload(t, x), al(y), al(z))
    term2 = A._mul_payload(_as_payload(H, x, y, z), al2(t))
    term3 = A._mul_payload(al2(x), _as_payload(H, t, y, z))
    s2 = (pt * (px + py + pz)) % 2
    s3 = (pt * px) % 2
    out = []
    for a, b, c in zip(term1, term2, term3):
        v = F.add(a, b) if s2 else F.sub(a, b)
        out.append(F.add(v, c) if s3 else F.sub(v, c))
    return tuple(out)


def _F_payload(H, t, x, y, z, pt, px, py, pz):
    """Graded Bruck-Kleinfeld F via its four-term bracket form."""
    A = H.algebra
    F = A.field
    al = H.alpha.apply_payload
    al2 = lambda v: al(al(v))
    Ssum = px + py + pz + pt
    terms = (
        (0, al2(t), _as_payload(H, x, y, z), pt),
        (1 + pz * (Ssum - pz), al2(z), _as_payload(H, t, x, y), pz),
        ((pt + px) * (py + pz), al2(y), _as_payload(H, z, t, x), py),
        (1 + pt * (Ssum - pt), al2(x), _as_payload(H, y, z, t), px),
    )
    out = [F.zero] * A.dim
    for sgn_exp, head, tail, phead in terms:
        br = _bracket_payload(H, head, tail, phead, (Ssum - phead) % 2)
        if sgn_exp % 2:
            out = [F.sub(a, b) for a, b in zip(out, br)]
        else:
            out = [F.add(a, b) for a, b in zip(out, br)]
    return tuple(out)


def bk_f(H: HomSuperAlgebra, t: Vector, x: Vector, y: Vector, z: Vector) -> Vector:
    A = H.algebra
    ps = [_homogeneous_parity(A, v, s) for v, s in ((t, "t"), (x, "x"), (y, "y"), (z, "z"))]
    vs = [A._unwrap(v) for v in (t, x, y, z)]
    return A._wrap(_f_payload(H, *vs, *ps))


def bk_F(H: HomSuperAlgebra, t: Vector, x: Vector, y: Vector, z: Vector) -> Vector:
    A = H.algebra
    ps = [_homogeneous_parity(A, v, s) for v, s in ((t, "t"), (x, "x"), (y, "y"), (z, "z"))]
    vs = [A._unwrap(v) for v in (t, x, y, z)]
    return A._wrap(_F_payload(H, *vs, *ps))
