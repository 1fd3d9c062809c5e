"""Groebner bases via Buchberger's algorithm.

The pair queue is a heap keyed by (degree of the leading-monomial lcm, pair
indices), so runs are deterministic for a given generator list.  Pairs with
coprime leading monomials reduce to zero automatically and are skipped by
default; the flag exists so the pruning itself can be tested.

``reduce_basis`` produces THE reduced basis: monic elements, no monomial of
any element divisible by another element's leading monomial, sorted descending
by leading monomial.  It is unique for a given ideal and order, which is what
makes reduced bases usable as canonical forms.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence, Union

from .division import _mul_term, multivariate_divide, normal_form
from .polynomials import (
    LEX,
    Monomial,
    MonomialOrder,
    Polynomial,
    VarContext,
    monomial_gcd,
    monomial_lcm,
)


@dataclass(frozen=True)
class IdealSpec:
    """Generators of an ideal in a fixed context; zero generators are dropped."""

    context: VarContext
    generators: tuple[Polynomial, ...]
    order: MonomialOrder = LEX

    def __post_init__(self):
        kept = []
        for g in self.generators:
            if g.context != self.context:
                raise ValueError("generator from a different context")
            if g:
                kept.append(g)
        object.__setattr__(self, "generators", tuple(kept))

    @classmethod
    def from_polynomials(
        cls, generators: Sequence[Polynomial], order: MonomialOrder = LEX
    ) -> "IdealSpec":
        if not generators:
            raise ValueError("cannot infer a context from no generators")
        return cls(generators[0].context, tuple(generators), order)


@dataclass(frozen=True)
class GroebnerBasis:
    """A Groebner basis together with its order and reduction status."""

    elements: tuple[Polynomial, ...]
    order: MonomialOrder = LEX
    reduced: bool = False

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def context(self) -> VarContext:
        if not self.elements:
            raise ValueError("empty basis has no context")
        return self.elements[0].context


Generators = Union[IdealSpec, GroebnerBasis, Sequence[Polynomial]]


def _as_polynomials(source: Generators) -> tuple[Polynomial, ...]:
    if isinstance(source, IdealSpec):
        return source.generators
    if isinstance(source, GroebnerBasis):
        return source.elements
    return tuple(p for p in source if p)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = LEX) -> Polynomial:
    """S-polynomial: both leading terms scaled to the lcm and subtracted."""
    f._check(g)
    if not f or not g:
        raise ValueError("s-polynomial of a zero polynomial")
    lf, lg = f.terms[0], g.terms[0]
    lcm = monomial_lcm(lf.monomial, lg.monomial)
    left = _mul_term(f, lf.coefficient.invert(), lcm.quotient(lf.monomial))
    right = _mul_term(g, lg.coefficient.invert(), lcm.quotient(lg.monomial))
    return left - right


def buchberger(
    source: Generators,
    order: MonomialOrder = LEX,
    use_coprime_criterion: bool = True,
) -> GroebnerBasis:
    """Complete the generators to a (generally unreduced) Groebner basis.

    The returned basis contains every nonzero generator.  A zero ideal yields
    an empty basis.
    """
    if isinstance(source, IdealSpec):
        order = source.order
    basis = list(_as_polynomials(source))
    if not basis:
        return GroebnerBasis((), order, reduced=False)
    pairs: list[tuple[int, int, int]] = []
    for j in range(len(basis)):
        for i in range(j):
            lcm = monomial_lcm(basis[i].terms[0].monomial, basis[j].terms[0].monomial)
            heapq.heappush(pairs, (lcm.degree, i, j))
    while pairs:
        _, i, j = heapq.heappop(pairs)
        lm_i = basis[i].terms[0].monomial
        lm_j = basis[j].terms[0].monomial
        if use_coprime_criterion and monomial_gcd(lm_i, lm_j).is_one():
            continue
        remainder = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if remainder:
            basis.append(remainder)
            k = len(basis) - 1
            for i2 in range(k):
                lcm = monomial_lcm(basis[i2].terms[0].monomial, remainder.terms[0].monomial)
                heapq.heappush(pairs, (lcm.degree, i2, k))
    return GroebnerBasis(tuple(basis), order, reduced=False)


def minimalize(basis: GroebnerBasis) -> GroebnerBasis:
    """Drop elements whose leading monomial another element's divides."""
    order = basis.order
    ranked = sorted(basis.elements, key=lambda p: order.key(p.terms[0].monomial))
    kept: list[Polynomial] = []
    for g in ranked:
        lm = g.terms[0].monomial
        if any(h.terms[0].monomial.divides(lm) for h in kept):
            continue
        kept.append(g)
    kept.sort(key=lambda p: order.key(p.terms[0].monomial), reverse=True)
    return GroebnerBasis(tuple(kept), order, reduced=False)


def reduce_basis(basis: GroebnerBasis) -> GroebnerBasis:
    """Minimalize, then autoreduce every element and scale it monic."""
    minimal = minimalize(basis)
    elements = [g.monic() for g in minimal.elements]
    changed = True
    while changed:
        changed = False
        for i, g in enumerate(elements):
            others = elements[:i] + elements[i + 1:]
            if not others:
                continue
            reduced = normal_form(g, others, basis.order).monic()
            if reduced != g:
                if not reduced:
                    raise ValueError("minimal basis element reduced to zero")
                elements[i] = reduced
                changed = True
    elements.sort(key=lambda p: basis.order.key(p.terms[0].monomial), reverse=True)
    return GroebnerBasis(tuple(elements), basis.order, reduced=True)


def reduced_basis(source: Generators, order: MonomialOrder = LEX) -> GroebnerBasis:
    """Buchberger, minimalize and reduce in one step."""
    return reduce_basis(buchberger(source, order))


def is_groebner(source: Generators, order: MonomialOrder = LEX) -> bool:
    """Buchberger criterion: every S-polynomial has normal form zero."""
    polys = _as_polynomials(source)
    if len(polys) < 2:
        return True
    for j in range(len(polys)):
        for i in range(j):
            lm_i = polys[i].terms[0].monomial
            lm_j = polys[j].terms[0].monomial
            if monomial_gcd(lm_i, lm_j).is_one():
                continue
            if normal_form(s_polynomial(polys[i], polys[j], order), polys, order):
                return False
    return True
