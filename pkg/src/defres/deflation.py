"""Deflation of restricted skew characters, by tableaux and by quotients.

Throughout, a skew character of S_(m*n) is restricted to the wreath product
S_m wr S_n and deflated to S_n through a character theta of S_m; the result
is the virtual character of S_n whose value at cycle type gamma these
evaluators compute.

Two independent evaluators are provided on top of the wreath oracle:

* ``defres_theorem`` handles trivial theta via the signed count of
  m-border-strip tableaux of type gamma;
* ``defres_recursive`` handles an arbitrary irreducible theta = chi^kappa
  by peeling one cycle of gamma at a time.  A single cycle of length c
  deflates through the c-quotient: the value is 0 unless the skew shape cut
  off for that cycle is c-decomposable, and otherwise it is the quotient
  sign times the multiplicity of chi^kappa in the character induced from
  the quotient components.

``defres_sign``, ``defres_degree`` and ``ncycle_vanishing`` are the closed
forms for the sign character, the degree, and evaluation at an n-cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .abacus import is_n_decomposable, n_core, n_quotient
from .borderstrips import a_coefficient, mn_value
from .characters import (
    _induced,
    irreducible_character,
    lr_coefficient,
    skew_character,
)
from .partitions import (
    Composition,
    Partition,
    SkewPartition,
    centralizer_order,
    intermediates,
    partitions_of,
    stretch,
)


@dataclass(frozen=True)
class DeflationQuery:
    """A deflation instance: which character, through what, evaluated where.

    ``shape`` is the skew shape of the restricted character, ``theta`` the
    partition labelling the deflating irreducible of S_m, and ``gamma`` the
    cycle type in S_n at which to evaluate.
    """

    shape: SkewPartition
    m: int
    n: int
    theta: Partition
    gamma: Composition

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be at least 1")
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if self.theta.size != self.m:
            raise ValueError(f"|theta| = {self.theta.size} must equal m = {self.m}")
        if self.shape.size != self.m * self.n:
            raise ValueError(
                f"|shape| = {self.shape.size} must equal m * n = {self.m * self.n}"
            )
        if self.gamma.size != self.n:
            raise ValueError(
                f"|gamma| = {self.gamma.size} must equal n = {self.n}"
            )


def defres_theorem(query: DeflationQuery) -> int:
    """Deflation through the trivial character, evaluated by tableaux."""
    if query.theta != Partition((query.m,)):
        raise ValueError("defres_theorem requires the trivial deflating character")
    return a_coefficient(query.shape, query.m, query.gamma)


@cache
def _single_cycle(
    outer: tuple[int, ...], inner: tuple[int, ...], c: int, kappa: tuple[int, ...]
) -> int:
    # deflation of the skew character of outer/inner through chi^kappa,
    # evaluated at a single c-cycle
    shape = SkewPartition(outer, inner)
    if not is_n_decomposable(shape, c):
        return 0
    quotient = n_quotient(shape, c)
    thetas = tuple(skew_character(comp) for comp in quotient.components)
    chi = irreducible_character(Partition(kappa))
    total = sum(
        Fraction(_induced(thetas, a.parts) * chi(a), centralizer_order(a))
        for a in partitions_of(chi.degree)
    )
    assert total.denominator == 1
    return quotient.sign * int(total)


@cache
def _recursive(
    outer: tuple[int, ...],
    inner: tuple[int, ...],
    m: int,
    kappa: tuple[int, ...],
    gamma: tuple[int, ...],
) -> int:
    if not gamma:
        return 1 if outer == inner else 0
    c = gamma[0]
    shape = SkewPartition(outer, inner)
    total = 0
    for tau in intermediates(shape, m * c):
        base = _single_cycle(tau.parts, inner, c, kappa)
        if base:
            total += base * _recursive(outer, tau.parts, m, kappa, gamma[1:])
    return total


def defres_recursive(query: DeflationQuery) -> int:
    """Deflation through any irreducible chi^theta, one cycle at a time."""
    return _recursive(
        query.shape.outer.parts,
        query.shape.inner.parts,
        query.m,
        query.theta.parts,
        query.gamma.parts,
    )


def farahat_check(shape: SkewPartition, n: int, alpha) -> tuple[int, int]:
    """Both sides of the stretched-class evaluation identity.

    The left side is the skew character at cycle type n * alpha; the right
    side is 0 when the shape is not n-decomposable, and otherwise the
    quotient sign times the induced character of the quotient components
    evaluated at alpha.  The two agree; returning both keeps the comparison
    honest.
    """
    alpha = Partition(alpha)
    if n < 1:
        raise ValueError("n must be at least 1")
    if shape.size != n * alpha.size:
        raise ValueError(
            f"|shape| = {shape.size} must equal n * |alpha| = {n * alpha.size}"
        )
    lhs = mn_value(shape, stretch(alpha, n))
    if not is_n_decomposable(shape, n):
        return lhs, 0
    quotient = n_quotient(shape, n)
    thetas = tuple(skew_character(comp) for comp in quotient.components)
    rhs = quotient.sign * _induced(thetas, alpha.parts)
    return lhs, rhs


def defres_sign(query: DeflationQuery) -> int:
    """Deflation through the sign character, via the conjugate shape.

    Equals the trivial deflation of the conjugate shape, twisted by the
    sign of the evaluation class when m is odd.
    """
    if query.theta != Partition((1,) * query.m):
        raise ValueError("defres_sign requires the sign deflating character")
    conj = SkewPartition(
        query.shape.outer.conjugate(), query.shape.inner.conjugate()
    )
    value = a_coefficient(conj, query.m, query.gamma)
    if query.m % 2 == 1:
        value *= (-1) ** (query.n - len(query.gamma))
    return value


def defres_degree(lam, kappa) -> int:
    """Degree of the deflation of an irreducible through chi^kappa.

    This is the multiplicity of chi^lam in the n-fold product of chi^kappa
    with itself, n = |lam| / |kappa|.
    """
    lam = Partition(lam)
    kappa = Partition(kappa)
    if kappa.size < 1 or lam.size % kappa.size != 0:
        raise ValueError("|kappa| must divide |lam|")
    n = lam.size // kappa.size
    return lr_coefficient(lam, (kappa,) * n)


def ncycle_vanishing(lam, kappa, n: int) -> int:
    """Deflation of an irreducible through chi^kappa at a single n-cycle.

    Zero unless lam has empty n-core and every quotient component fits
    inside kappa; otherwise the quotient sign times the multiplicity of
    chi^kappa in the product of the quotient component characters.
    """
    lam = Partition(lam)
    kappa = Partition(kappa)
    if lam.size != kappa.size * n:
        raise ValueError("need |lam| = |kappa| * n")
    if n_core(lam, n) != Partition():
        return 0
    quotient = n_quotient(SkewPartition(lam), n)
    components = [comp.outer for comp in quotient.components]
    if any(not kappa.contains(comp) for comp in components):
        return 0
    return quotient.sign * lr_coefficient(kappa, components)
