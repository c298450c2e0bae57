"""Groebner bases and ideal arithmetic in C[z1..zn].

Everything runs over exact rationals.  Buchberger uses the normal pair
selection strategy plus the coprime-leading-term and chain criteria,
and always returns the reduced monic basis, so two ideals are equal
exactly when their bases coincide element for element under the same
order.  Intersections go through the usual auxiliary-variable trick
with an elimination order; colon ideals divide an intersection through
by the denominator.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .poly import (
    MonomialOrder,
    Polynomial,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)


class _Infinite:
    """Sentinel for infinite-dimensional quotients."""

    def __repr__(self):
        return "INFINITE"


INFINITE = _Infinite()


class DivisionResult(NamedTuple):
    quotients: tuple
    remainder: Polynomial


def divide(p: Polynomial, divisors: Sequence[Polynomial],
           order: MonomialOrder) -> DivisionResult:
    """Multivariate division; ties go to the first listed divisor.

    Invariant: p == sum(q_i * divisors_i) + remainder, and no remainder
    monomial is divisible by any divisor leading monomial.
    """
    n = p.n
    quotients = [Polynomial.zero(n) for _ in divisors]
    remainder = Polynomial.zero(n)
    lts = [g.leading_term(order) for g in divisors]
    work = p
    while not work.is_zero():
        c, exps = work.leading_term(order)
        for i, (gc, gexps) in enumerate(lts):
            if monomial_divides(gexps, exps):
                factor = Polynomial.monomial(n, monomial_div(exps, gexps), c / gc)
                quotients[i] = quotients[i] + factor
                work = work - factor * divisors[i]
                break
        else:
            mono = Polynomial.monomial(n, exps, c)
            remainder = remainder + mono
            work = work - mono
    return DivisionResult(tuple(quotients), remainder)


def _reduce(p: Polynomial, divisors, lts, order) -> Polynomial:
    """Remainder only; same loop as divide without quotient bookkeeping."""
    n = p.n
    rem_terms: dict = {}
    work = p
    while not work.is_zero():
        c, exps = work.leading_term(order)
        for i, (gc, gexps) in enumerate(lts):
            if monomial_divides(gexps, exps):
                factor = Polynomial.monomial(n, monomial_div(exps, gexps), c / gc)
                work = work - factor * divisors[i]
                break
        else:
            rem_terms[exps] = c
            work = work - Polynomial.monomial(n, exps, c)
    return Polynomial(n, rem_terms)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    fc, fe = f.leading_term(order)
    gc, ge = g.leading_term(order)
    lcm = monomial_lcm(fe, ge)
    mf = Polynomial.monomial(f.n, monomial_div(lcm, fe), 1 / fc)
    mg = Polynomial.monomial(g.n, monomial_div(lcm, ge), 1 / gc)
    return mf * f - mg * g


class GroebnerBasis:
    """Reduced monic Groebner basis, elements sorted by leading monomial
    (descending under the basis order) for deterministic output."""

    __slots__ = ("elements", "order", "_lts")

    def __init__(self, elements: Sequence[Polynomial], order: MonomialOrder):
        self.elements = tuple(elements)
        self.order = order
        self._lts = tuple(g.leading_term(order) for g in self.elements)

    def leading_exponents(self):
        return tuple(lt.exponents for lt in self._lts)

    def normal_form(self, p: Polynomial) -> Polynomial:
        return _reduce(p, self.elements, self._lts, self.order)

    def contains(self, p: Polynomial) -> bool:
        return self.normal_form(p).is_zero()

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return isinstance(other, GroebnerBasis) and self.elements == other.elements

    def __repr__(self):
        return "GroebnerBasis([%s])" % ", ".join(g.to_str() for g in self.elements)


def buchberger(generators: Sequence[Polynomial],
               order: MonomialOrder) -> GroebnerBasis:
    basis = [g for g in generators if not g.is_zero()]
    if not basis:
        return GroebnerBasis((), order)
    n = basis[0].n
    lts = [g.leading_term(order) for g in basis]

    def pair_key(pair):
        i, j = pair
        lcm = monomial_lcm(lts[i].exponents, lts[j].exponents)
        return (sum(lcm), order.key(lcm))

    pairs = {(i, j) for i in range(len(basis)) for j in range(i)}
    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        ei, ej = lts[i].exponents, lts[j].exponents
        lcm = monomial_lcm(ei, ej)
        # coprime criterion: disjoint leading monomials reduce to zero
        if lcm == monomial_mul(ei, ej):
            continue
        # chain criterion: some k with lt_k | lcm and both mixed pairs done
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if monomial_divides(lts[k].exponents, lcm):
                a = (max(i, k), min(i, k))
                b = (max(j, k), min(j, k))
                if a not in pairs and b not in pairs:
                    skip = True
                    break
        if skip:
            continue
        rem = _reduce(s_polynomial(basis[i], basis[j], order), basis, lts, order)
        if not rem.is_zero():
            basis.append(rem)
            lts.append(rem.leading_term(order))
            new = len(basis) - 1
            pairs.update((new, k) for k in range(new))

    # minimalize: process by ascending leading monomial so any proper
    # divisor is already kept; drop duplicates and divisible leads
    ordered = sorted(range(len(basis)), key=lambda i: order.key(lts[i].exponents))
    kept_leads: list = []
    minimal = []
    for i in ordered:
        ei = lts[i].exponents
        if any(monomial_divides(le, ei) for le in kept_leads):
            continue
        kept_leads.append(ei)
        minimal.append(basis[i])
    # fully reduce each element against the others and normalize monic
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        if others:
            olts = [h.leading_term(order) for h in others]
            g = _reduce(g, others, olts, order)
        if g.is_zero():
            continue
        c = g.leading_term(order).coefficient
        reduced.append(g * (1 / c))
    reduced.sort(key=lambda g: order.key(g.leading_term(order).exponents),
                 reverse=True)
    return GroebnerBasis(reduced, order)


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    return gb.normal_form(p)


def ideal_equals(gens_a: Sequence[Polynomial], gens_b: Sequence[Polynomial],
                 order: MonomialOrder) -> bool:
    """Structural equality of reduced bases under a common order."""
    return buchberger(gens_a, order).elements == buchberger(gens_b, order).elements


class StandardMonomials(NamedTuple):
    finite: bool
    monomials: tuple | None      # exponent tuples, None when infinite
    missing_variable: int | None  # 1-based witness when infinite


def standard_monomials(gb: GroebnerBasis, n: int) -> StandardMonomials:
    """Monomials outside the leading-term ideal (Macaulay basis).

    Finite exactly when every variable has a pure power among the
    leading monomials; the first variable without one is the witness.
    """
    lead = gb.leading_exponents()
    if any(all(e == 0 for e in exps) for exps in lead):
        return StandardMonomials(True, (), None)
    bounds = []
    for i in range(n):
        pure = [exps[i] for exps in lead
                if all(e == 0 for j, e in enumerate(exps) if j != i)]
        if not pure:
            return StandardMonomials(False, None, i + 1)
        bounds.append(min(pure))
    out = []

    def rec(prefix):
        i = len(prefix)
        if i == n:
            exps = tuple(prefix)
            if not any(monomial_divides(le, exps) for le in lead):
                out.append(exps)
            return
        for e in range(bounds[i]):
            rec(prefix + [e])

    rec([])
    out.sort(key=gb.order.key)
    return StandardMonomials(True, tuple(out), None)


def quotient_dimension(generators: Sequence[Polynomial],
                       order: MonomialOrder):
    """dim_C C[z]/<generators>, or INFINITE."""
    if not generators:
        return INFINITE
    n = generators[0].n
    gb = buchberger(generators, order)
    if not gb.elements:
        return INFINITE
    std = standard_monomials(gb, n)
    if not std.finite:
        return INFINITE
    return len(std.monomials)


def milnor_number(f: Polynomial, order: MonomialOrder | None = None):
    """dim_C C[z]/<grad f>, or INFINITE for non-isolated singularities."""
    grad = [g for g in f.gradient() if not g.is_zero()]
    if not grad:
        raise ValueError("gradient vanishes identically")
    if order is None:
        order = MonomialOrder.lex(f.n)
    return quotient_dimension(grad, order)


def _embed_with_t(p: Polynomial) -> Polynomial:
    return Polynomial(p.n + 1, {(0,) + exps: c for exps, c in p.terms.items()})


def ideal_intersection(gens_a: Sequence[Polynomial],
                       gens_b: Sequence[Polynomial],
                       order: MonomialOrder) -> tuple:
    """Generators of <gens_a> ∩ <gens_b>.

    Standard elimination: in C[t, z] form t*a_i and (1-t)*b_j, take a
    Groebner basis under an order where t dominates every z_i, and keep
    the elements free of t.
    """
    if not gens_a or not gens_b:
        return ()
    n = gens_a[0].n
    t = Polynomial.variable(n + 1, 1)
    ext = [t * _embed_with_t(g) for g in gens_a]
    ext += [(Polynomial.one(n + 1) - t) * _embed_with_t(g) for g in gens_b]
    elim = MonomialOrder.elimination_block(n + 1, (0,))
    gb = buchberger(ext, elim)
    out = []
    for g in gb:
        if all(exps[0] == 0 for exps in g.terms):
            out.append(Polynomial(n, {exps[1:]: c for exps, c in g.terms.items()}))
    return tuple(out)


def exact_divide(p: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """p / g when g divides p exactly; error otherwise."""
    quotients, remainder = divide(p, [g], order)
    if not remainder.is_zero():
        raise ValueError("not an exact division")
    return quotients[0]


def colon_ideal(gens: Sequence[Polynomial], g: Polynomial,
                order: MonomialOrder) -> tuple:
    """Generators of (<gens> : g) = (<gens> ∩ <g>) / g."""
    if g.is_zero():
        raise ValueError("colon by zero")
    meet = ideal_intersection(gens, [g], order)
    return tuple(exact_divide(h, g, order) for h in meet)


def is_zero_divisor_mod(g: Polynomial, f: Polynomial,
                        order: MonomialOrder) -> bool:
    """True when g is a zero divisor in C[z]/<f>, i.e. (<f> : g) != <f>."""
    if g.is_zero():
        return True
    return not ideal_equals(colon_ideal([f], g, order), [f], order)
