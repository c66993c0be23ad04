"""Even linear maps: endomorphism checks, twisting, untwisting, derived
algebras.

`yau_twist` is the guarded construction-theorem operation: it refuses maps
that are not weak endomorphisms of the underlying product, because that is
the hypothesis of every twisting theorem it implements.  The corpus module
separately materialises tables that published examples print even when the
printed map fails this check; those go through direct table composition, not
through this gate.
"""

from __future__ import annotations

from typing import Tuple

from .coeff import Field, FieldMismatchError
from .report import IdentityReport
from .superalg import (
    AlgebraError,
    Basis,
    DimensionError,
    EvenLinearMap,
    HomSuperAlgebra,
    Multiplicativity,
    SuperAlgebra,
    check_multiplicative,
)


class MapError(AlgebraError):
    pass


class NotEndomorphismError(MapError):
    def __init__(self, pair: Tuple[str, str]):
        self.pair = pair
        super().__init__(f"map is not a weak endomorphism; fails at {pair}")


class SingularMapError(MapError):
    pass


class MultiplicativityError(MapError):
    pass


def is_even(f: EvenLinearMap, basis: Basis) -> IdentityReport:
    """Parity-block check: entry (i,j) must vanish when parities differ."""
    if f.dim != len(basis):
        raise DimensionError("map dimension does not match basis")
    F = f.field
    bad = []
    for j, col in enumerate(f.cols):
        offending = [
            F.zero if basis.parities[i] == basis.parities[j] else col[i]
            for i in range(f.dim)
        ]
        if any(not F.is_zero(x) for x in offending):
            bad.append(
                ((basis.names[j],), tuple(map(lambda v: F.scalar(v), offending)))
            )
    return IdentityReport("even", not bad, tuple(bad), f.dim)


def is_weak_morphism(
    src: SuperAlgebra, dst: SuperAlgebra, f: EvenLinearMap
) -> IdentityReport:
    """f(mu(ei,ej)) = mu'(f(ei), f(ej)) on all basis pairs."""
    if src.dim != dst.dim or f.dim != src.dim:
        raise DimensionError("dimension mismatch")
    if src.field != dst.field or f.field != src.field:
        raise FieldMismatchError("weak morphism across different fields")
    F = src.field
    bad = []
    for i in range(src.dim):
        for j in range(src.dim):
            lhs = f.apply_payload(src.table[i][j])
            rhs = dst._mul_payload(f.cols[i], f.cols[j])
            res = tuple(F.sub(a, b) for a, b in zip(lhs, rhs))
            if any(not F.is_zero(x) for x in res):
                bad.append(((src.basis.names[i], src.basis.names[j]), src._wrap(res)))
    return IdentityReport("weak-morphism", not bad, tuple(bad), src.dim * src.dim)


def is_morphism(
    src: HomSuperAlgebra, dst: HomSuperAlgebra, f: EvenLinearMap
) -> IdentityReport:
    """Weak morphism plus the commuting square f . alpha = alpha' . f."""
    weak = is_weak_morphism(src.algebra, dst.algebra, f)
    F = src.field
    bad = list(weak.counterexamples)
    for j in range(src.dim):
        lhs = f.apply_payload(src.alpha.cols[j])
        rhs = dst.alpha.apply_payload(f.cols[j])
        res = tuple(F.sub(a, b) for a, b in zip(lhs, rhs))
        if any(not F.is_zero(x) for x in res):
            bad.append(((src.algebra.basis.names[j],), src.algebra._wrap(res)))
    return IdentityReport(
        "morphism", not bad, tuple(bad), weak.tuples_checked + src.dim
    )


def compose(f: EvenLinearMap, g: EvenLinearMap) -> EvenLinearMap:
    """Matrix of f . g (apply g first)."""
    if f.dim != g.dim or f.field != g.field:
        raise DimensionError("composition dimension/field mismatch")
    return EvenLinearMap(f.field, [f.apply_payload(col) for col in g.cols])


def power(f: EvenLinearMap, k: int) -> EvenLinearMap:
    if k < 0:
        raise MapError("negative power")
    out = EvenLinearMap.identity(f.field, f.dim)
    for _ in range(k):
        out = compose(f, out)
    return out


def matrix_inverse(f: EvenLinearMap) -> EvenLinearMap:
    """Exact Gaussian elimination; pivot on the first nonzero entry (no
    magnitude comparisons exist for symbolic scalars)."""
    F = f.field
    n = f.dim
    # rows of [M | I], where M[i][j] = cols[j][i]
    aug = [
        [f.cols[j][i] for j in range(n)]
        + [F.one if k == i else F.zero for k in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if not F.is_zero(aug[r][col]):
                pivot = r
                break
        if pivot is None:
            raise SingularMapError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = F.inv(aug[col][col])
        aug[col] = [F.mul(inv, x) for x in aug[col]]
        for r in range(n):
            if r != col and not F.is_zero(aug[r][col]):
                factor = aug[r][col]
                aug[r] = [
                    F.sub(x, F.mul(factor, y)) for x, y in zip(aug[r], aug[col])
                ]
    inv_cols = [tuple(aug[i][n + j] for i in range(n)) for j in range(n)]
    return EvenLinearMap(F, inv_cols)


def compose_product(A: SuperAlgebra, beta: EvenLinearMap) -> SuperAlgebra:
    """Structure constants of beta . mu over the same basis."""
    table = [
        [beta.apply_payload(A.table[i][j]) for j in range(A.dim)]
        for i in range(A.dim)
    ]
    return SuperAlgebra(A.basis, A.field, table)


def yau_twist(H: HomSuperAlgebra, beta: EvenLinearMap) -> HomSuperAlgebra:
    """(A, mu, alpha) -> (A, beta.mu, beta.alpha); beta must be a verified
    weak endomorphism of (A, mu)."""
    report = is_weak_morphism(H.algebra, H.algebra, beta)
    if not report.holds:
        raise NotEndomorphismError(report.first_tuple())
    twisted = compose_product(H.algebra, beta)
    alpha = compose(beta, H.alpha)
    flag = (
        Multiplicativity.VERIFIED_TRUE
        if check_multiplicative(twisted, alpha).holds
        else Multiplicativity.VERIFIED_FALSE
    )
    return HomSuperAlgebra(twisted, alpha, flag)


def untwist(H: HomSuperAlgebra) -> SuperAlgebra:
    """Recover the product alpha^{-1} . mu (alpha invertible)."""
    return compose_product(H.algebra, matrix_inverse(H.alpha))


def derived(H: HomSuperAlgebra, n: int) -> HomSuperAlgebra:
    """n-th derived algebra: product alpha^(2^n - 1) . mu, twist alpha^(2^n)."""
    if n < 0:
        raise MapError("derived level must be nonnegative")
    if H.multiplicative is not Multiplicativity.VERIFIED_TRUE:
        raise MultiplicativityError(
            "derived algebra needs verified multiplicativity"
        )
    if n == 0:
        return H
    k = 2**n
    product_map = power(H.alpha, k - 1)
    twisted = compose_product(H.algebra, product_map)
    alpha = power(H.alpha, k)
    flag = (
        Multiplicativity.VERIFIED_TRUE
        if check_multiplicative(twisted, alpha).holds
        else Multiplicativity.VERIFIED_FALSE
    )
    return HomSuperAlgebra(twisted, alpha, flag)
