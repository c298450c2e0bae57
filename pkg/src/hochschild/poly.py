"""Sparse multivariate polynomials over exact rationals.

A polynomial is a dict from exponent tuples to nonzero Fraction
coefficients.  Instances are treated as immutable; every operation
returns a fresh polynomial with zero coefficients stripped, so equality
is plain dict equality.  Monomial orders are separate objects passed to
the operations that need one (leading terms, division), because a single
session routinely mixes orders (lex for the ambient ring, an elimination
order inside ideal intersections).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

Exponents = tuple  # tuple[int, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError("coefficient must be int or Fraction, got %r" % (c,))


class Term(NamedTuple):
    coefficient: Fraction
    exponents: Exponents


class MonomialOrder:
    """Total order on exponent tuples, exposed through sort keys.

    kind is one of "lex", "weighted", "block".  All three reduce to a
    key function: lex compares exponents along a variable priority list
    (highest priority first); weighted compares total weighted degree
    first and breaks ties by lex; an elimination block order compares
    the front block lexicographically before the back block, which is
    the same as lex with the priority list split accordingly, so it
    shares the implementation.
    """

    __slots__ = ("kind", "n", "priority", "weights")

    def __init__(self, kind: str, n: int, priority: Sequence[int],
                 weights: Sequence[int] | None = None):
        if sorted(priority) != list(range(n)):
            raise ValueError("priority must be a permutation of 0..n-1")
        if kind == "weighted":
            if weights is None or len(weights) != n:
                raise ValueError("weighted order needs one weight per variable")
            self.weights = tuple(int(w) for w in weights)
        elif kind in ("lex", "block"):
            self.weights = None
        else:
            raise ValueError("unknown order kind %r" % kind)
        self.kind = kind
        self.n = n
        self.priority = tuple(priority)

    @staticmethod
    def lex(n: int, priority: Sequence[int] | None = None) -> "MonomialOrder":
        """Lex order; default priority z1 > z2 > ... > zn."""
        return MonomialOrder("lex", n, tuple(priority or range(n)))

    @staticmethod
    def weighted_lex(weights: Sequence[int],
                     priority: Sequence[int] | None = None) -> "MonomialOrder":
        """Compare by weighted degree, ties broken by lex."""
        n = len(weights)
        return MonomialOrder("weighted", n, tuple(priority or range(n)), weights)

    @staticmethod
    def elimination_block(n: int, front: Sequence[int]) -> "MonomialOrder":
        """Any monomial containing a front variable beats any without."""
        front = tuple(front)
        back = tuple(i for i in range(n) if i not in front)
        return MonomialOrder("block", n, front + back)

    def key(self, exps: Exponents):
        if self.kind == "weighted":
            w = self.weights
            total = sum(w[i] * e for i, e in enumerate(exps))
            return (total,) + tuple(exps[i] for i in self.priority)
        return tuple(exps[i] for i in self.priority)

    def __repr__(self):
        return "MonomialOrder(%s, n=%d)" % (self.kind, self.n)


def monomial_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Exponents, b: Exponents) -> bool:
    """True if monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Exponents, b: Exponents) -> Exponents:
    """Quotient exponent tuple a - b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


class Polynomial:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None):
        self.n = n
        if terms:
            self.terms = {e: _as_fraction(c) for e, c in terms.items() if c}
        else:
            self.terms = {}

    # constructors

    @staticmethod
    def zero(n: int) -> "Polynomial":
        return Polynomial(n)

    @staticmethod
    def constant(n: int, c) -> "Polynomial":
        c = _as_fraction(c)
        return Polynomial(n, {(0,) * n: c})

    @staticmethod
    def one(n: int) -> "Polynomial":
        return Polynomial.constant(n, 1)

    @staticmethod
    def variable(n: int, i: int) -> "Polynomial":
        """The variable z_i, 1-based."""
        if not 1 <= i <= n:
            raise ValueError("variable index %d out of range for n=%d" % (i, n))
        exps = tuple(1 if j == i - 1 else 0 for j in range(n))
        return Polynomial(n, {exps: _ONE})

    @staticmethod
    def monomial(n: int, exps: Sequence[int], coeff=1) -> "Polynomial":
        return Polynomial(n, {tuple(exps): _as_fraction(coeff)})

    @staticmethod
    def from_terms(n: int, terms: Iterable[tuple]) -> "Polynomial":
        acc: dict = {}
        for coeff, exps in terms:
            exps = tuple(exps)
            acc[exps] = acc.get(exps, _ZERO) + _as_fraction(coeff)
        return Polynomial(n, acc)

    # predicates and accessors

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_coefficient(self) -> Fraction:
        return self.terms.get((0,) * self.n, _ZERO)

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def leading_term(self, order: MonomialOrder) -> Term:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=order.key)
        return Term(self.terms[exps], exps)

    # arithmetic

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.n, other)
        if self.n != other.n:
            raise ValueError("mixed variable counts %d and %d" % (self.n, other.n))
        acc = dict(self.terms)
        for e, c in other.terms.items():
            s = acc.get(e, _ZERO) + c
            if s:
                acc[e] = s
            elif e in acc:
                del acc[e]
        p = Polynomial.__new__(Polynomial)
        p.n = self.n
        p.terms = acc
        return p

    __radd__ = __add__

    def __neg__(self):
        p = Polynomial.__new__(Polynomial)
        p.n = self.n
        p.terms = {e: -c for e, c in self.terms.items()}
        return p

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return Polynomial.zero(self.n)
            p = Polynomial.__new__(Polynomial)
            p.n = self.n
            p.terms = {e: c * v for e, v in self.terms.items()}
            return p
        if self.n != other.n:
            raise ValueError("mixed variable counts %d and %d" % (self.n, other.n))
        acc: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = monomial_mul(e1, e2)
                s = acc.get(e, _ZERO) + c1 * c2
                if s:
                    acc[e] = s
                elif e in acc:
                    del acc[e]
        p = Polynomial.__new__(Polynomial)
        p.n = self.n
        p.terms = acc
        return p

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = Polynomial.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.n, other)
        return isinstance(other, Polynomial) and self.n == other.n \
            and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    # calculus and grading

    def diff(self, i: int) -> "Polynomial":
        """Formal partial derivative with respect to z_i, 1-based."""
        if not 1 <= i <= self.n:
            raise ValueError("variable index %d out of range" % i)
        j = i - 1
        acc = {}
        for exps, c in self.terms.items():
            e = exps[j]
            if e:
                dexps = exps[:j] + (e - 1,) + exps[j + 1:]
                acc[dexps] = acc.get(dexps, _ZERO) + c * e
        return Polynomial(self.n, acc)

    def gradient(self) -> tuple:
        return tuple(self.diff(i) for i in range(1, self.n + 1))

    def weighted_degrees(self, weights: Sequence[int]) -> set:
        return {sum(w * e for w, e in zip(weights, exps)) for exps in self.terms}

    def is_weighted_homogeneous(self, weights: Sequence[int]) -> bool:
        return len(self.weighted_degrees(weights)) <= 1

    def substitute(self, values: Sequence["Polynomial"]) -> "Polynomial":
        """Evaluate at z_i = values[i]; values live in a common ring."""
        if len(values) != self.n:
            raise ValueError("need one value per variable")
        m = values[0].n
        result = Polynomial.zero(m)
        for exps, c in self.terms.items():
            term = Polynomial.constant(m, c)
            for v, e in zip(values, exps):
                if e:
                    term = term * v ** e
            result = result + term
        return result

    # display

    def to_str(self, names: Sequence[str] | None = None,
               order: MonomialOrder | None = None) -> str:
        """Render in the syntax the expression parser accepts."""
        if not self.terms:
            return "0"
        if names is None:
            names = ["z%d" % (i + 1) for i in range(self.n)]
        if order is None:
            order = MonomialOrder.lex(self.n)
        pieces = []
        for exps in sorted(self.terms, key=order.key, reverse=True):
            c = self.terms[exps]
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            if not factors or abs(c) != 1:
                factors.insert(0, str(abs(c)))
            body = "*".join(factors)
            pieces.append(("- " if c < 0 else "+ ") + body)
        out = " ".join(pieces)
        if out.startswith("+ "):
            return out[2:]
        return "-" + out[2:]

    def __repr__(self):
        return "Polynomial(%s)" % self.to_str()
