"""Koszul-style complexes computing Hochschild (co)homology of C[z]/<f>.

For a hypersurface algebra A = C[z1..zn]/<f> the Hochschild cochain
complex is quasi-isomorphic to a complex of finite free A-modules built
on one even generator b1 and odd generators eta_1..eta_n, with every
differential entry an integer multiple of a partial derivative of f.
The chain complex is the dual picture on a1 and xi_1..xi_n, where the
even generator a1 contributes degree-dependent integer factors p.

Modules are listed by homological degree 0..p_max.  For the cochain
complex diffs[p] maps modules[p] to modules[p+1]; for the chain complex
diffs[p] maps modules[p+1] to modules[p].
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .grading import WeightSystem
from .poly import Polynomial


class BasisElement(NamedTuple):
    power: int        # exponent of the even generator (b1 or a1)
    odd: tuple        # strictly increasing-in-cyclic-order odd indices

    def label(self, even_name: str, odd_name: str) -> str:
        parts = []
        if self.power == 1:
            parts.append(even_name)
        elif self.power > 1:
            parts.append("%s^%d" % (even_name, self.power))
        parts.extend("%s%d" % (odd_name, i) for i in self.odd)
        return "*".join(parts) if parts else "1"


class FreeModule(NamedTuple):
    elements: tuple   # BasisElement per component
    shifts: tuple     # internal weight of each component, or None


class KoszulComplex:
    def __init__(self, direction: str, f: Polynomial, modules, diffs):
        if direction not in ("cochain", "chain"):
            raise ValueError("direction must be cochain or chain")
        self.direction = direction
        self.f = f
        self.n = f.n
        self.modules = list(modules)
        self.diffs = list(diffs)
        self.weights: WeightSystem | None = None

    @property
    def p_max(self) -> int:
        return len(self.modules) - 1

    def labels(self, p: int) -> tuple:
        even, odd = (("b", "eta") if self.direction == "cochain"
                     else ("a", "xi"))
        return tuple(e.label(even + "1", odd) for e in self.modules[p].elements)

    def outgoing(self, p: int):
        """Matrix of the differential leaving homological degree p."""
        if self.direction == "cochain":
            return self.diffs[p] if p < len(self.diffs) else None
        return self.diffs[p - 1] if p >= 1 else None

    def incoming(self, p: int):
        """Matrix of the differential landing in homological degree p."""
        if self.direction == "cochain":
            return self.diffs[p - 1] if p >= 1 else None
        return self.diffs[p] if p < len(self.diffs) else None

    def domain_degree(self, p: int) -> int:
        """Homological degree the outgoing matrix maps to / incoming
        comes from, by direction."""
        return p + 1 if self.direction == "cochain" else p - 1

    def verify_entries(self) -> None:
        """Every nonzero entry must be an integer multiple of some d_i f."""
        grad = self.f.gradient()
        for mat in self.diffs:
            for row in mat:
                for entry in row:
                    if entry.is_zero():
                        continue
                    if not any(_integer_multiple_of(entry, g) for g in grad
                               if not g.is_zero()):
                        raise AssertionError(
                            "entry %r is not an integer multiple of a "
                            "partial derivative" % (entry,))

    def verify_d_squared_zero(self) -> None:
        """Consecutive composites vanish identically in C[z]."""
        for p in range(len(self.diffs) - 1):
            if self.direction == "cochain":
                second, first = self.diffs[p + 1], self.diffs[p]
            else:
                second, first = self.diffs[p], self.diffs[p + 1]
            prod = _matmul(second, first)
            for row in prod:
                for entry in row:
                    if not entry.is_zero():
                        raise AssertionError(
                            "d o d != 0 between degrees %d and %d" % (p, p + 2))

    def assign_weights(self, ws: WeightSystem) -> None:
        """Attach internal weights making every differential preserve
        the grading: eta_i carries d - w_i and b1 carries 0 on the
        cochain side; xi_i carries w_i and a1 carries d on the chain
        side.  Entry weights are validated against the shifts."""
        d, w = ws.degree, ws.weights
        new_modules = []
        for module in self.modules:
            shifts = []
            for elem in module.elements:
                if self.direction == "cochain":
                    shifts.append(sum(d - w[i - 1] for i in elem.odd))
                else:
                    shifts.append(elem.power * d + sum(w[i - 1] for i in elem.odd))
            new_modules.append(FreeModule(module.elements, tuple(shifts)))
        # validate: entry at (r, c) must be homogeneous of weight
        # shift_domain[c] - shift_codomain[r]
        for p, mat in enumerate(self.diffs):
            if self.direction == "cochain":
                dom, cod = new_modules[p], new_modules[p + 1]
            else:
                dom, cod = new_modules[p + 1], new_modules[p]
            for r, row in enumerate(mat):
                for c, entry in enumerate(row):
                    if entry.is_zero():
                        continue
                    expected = dom.shifts[c] - cod.shifts[r]
                    degs = entry.weighted_degrees(w)
                    if degs != {expected}:
                        raise AssertionError(
                            "entry (%d,%d) of differential %d has weight %s, "
                            "expected %d" % (r, c, p, degs, expected))
        self.modules = new_modules
        self.weights = ws


def _integer_multiple_of(entry: Polynomial, g: Polynomial) -> bool:
    e_exps = set(entry.terms)
    if e_exps != set(g.terms):
        return False
    any_exp = next(iter(e_exps))
    ratio = entry.terms[any_exp] / g.terms[any_exp]
    if ratio.denominator != 1 or ratio == 0:
        return False
    return entry == ratio * g


def _matmul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    n = a[0][0].n
    out = []
    for r in range(rows):
        out_row = []
        for c in range(cols):
            acc = Polynomial.zero(n)
            for k in range(inner):
                acc = acc + a[r][k] * b[k][c]
            out_row.append(acc)
        out.append(out_row)
    return out


def _cochain_modules(n: int, p: int):
    if p == 0:
        return (BasisElement(0, ()),)
    if n == 1:
        if p % 2 == 0:
            return (BasisElement(p // 2, ()),)
        return (BasisElement(p // 2, (1,)),)
    if n == 2:
        q = p // 2
        if p % 2 == 0:
            return (BasisElement(q, ()), BasisElement(q - 1, (1, 2)))
        return (BasisElement(q, (1,)), BasisElement(q, (2,)))
    q = p // 2
    if p == 1:
        return (BasisElement(0, (1,)), BasisElement(0, (2,)), BasisElement(0, (3,)))
    if p % 2 == 0:
        return (BasisElement(q, ()), BasisElement(q - 1, (1, 2)),
                BasisElement(q - 1, (2, 3)), BasisElement(q - 1, (3, 1)))
    return (BasisElement(q, (1,)), BasisElement(q, (2,)),
            BasisElement(q, (3,)), BasisElement(q - 1, (1, 2, 3)))


def _chain_modules(n: int, p: int):
    if p == 0:
        return (BasisElement(0, ()),)
    if n == 1:
        if p % 2 == 0:
            return (BasisElement(p // 2, ()),)
        return (BasisElement(p // 2, (1,)),)
    if n == 2:
        q = p // 2
        if p % 2 == 0:
            return (BasisElement(q, ()), BasisElement(q - 1, (1, 2)))
        return (BasisElement(q, (1,)), BasisElement(q, (2,)))
    q = p // 2
    if p == 1:
        return (BasisElement(0, (1,)), BasisElement(0, (2,)), BasisElement(0, (3,)))
    if p % 2 == 0:
        return (BasisElement(q, ()), BasisElement(q - 1, (1, 2)),
                BasisElement(q - 1, (2, 3)), BasisElement(q - 1, (3, 1)))
    return (BasisElement(q, (1,)), BasisElement(q, (2,)),
            BasisElement(q, (3,)), BasisElement(q - 1, (1, 2, 3)))


def cochain_complex(f: Polynomial, p_max: int) -> KoszulComplex:
    n = f.n
    if n not in (1, 2, 3):
        raise ValueError("only 1 to 3 variables supported")
    Z = Polynomial.zero(n)
    D = f.gradient()
    modules = [FreeModule(_cochain_modules(n, p), None) for p in range(p_max + 1)]
    diffs = []
    for p in range(p_max):
        if n == 1:
            mat = [[Z]] if p % 2 == 0 else [[D[0]]]
        elif n == 2:
            if p == 0:
                mat = [[Z], [Z]]
            elif p % 2 == 0:
                mat = [[Z, D[1]], [Z, -D[0]]]
            else:
                mat = [[D[0], D[1]], [Z, Z]]
        else:
            if p == 0:
                mat = [[Z], [Z], [Z]]
            elif p == 1:
                mat = [[D[0], D[1], D[2]], [Z, Z, Z], [Z, Z, Z], [Z, Z, Z]]
            elif p % 2 == 0:
                mat = [[Z, D[1], Z, -D[2]],
                       [Z, -D[0], D[2], Z],
                       [Z, Z, -D[1], D[0]],
                       [Z, Z, Z, Z]]
            else:
                mat = [[D[0], D[1], D[2], Z],
                       [Z, Z, Z, D[2]],
                       [Z, Z, Z, D[0]],
                       [Z, Z, Z, D[1]]]
        diffs.append(mat)
    return KoszulComplex("cochain", f, modules, diffs)


def chain_complex(f: Polynomial, p_max: int) -> KoszulComplex:
    n = f.n
    if n not in (1, 2, 3):
        raise ValueError("only 1 to 3 variables supported")
    Z = Polynomial.zero(n)
    D = f.gradient()
    modules = [FreeModule(_chain_modules(n, p), None) for p in range(p_max + 1)]
    diffs = []
    # diffs[p] maps degree p+1 down to degree p
    for p in range(p_max):
        deg = p + 1
        q = deg // 2
        if n == 1:
            mat = [[q * D[0]]] if deg % 2 == 0 else [[Z]]
        elif n == 2:
            if deg == 1:
                mat = [[Z, Z]]
            elif deg % 2 == 0:
                mat = [[q * D[0], Z], [q * D[1], Z]]
            else:
                mat = [[Z, Z], [-q * D[1], q * D[0]]]
        else:
            if deg == 1:
                mat = [[Z, Z, Z]]
            elif deg == 2:
                mat = [[D[0], Z, Z, Z], [D[1], Z, Z, Z], [D[2], Z, Z, Z]]
            elif deg % 2 == 0:
                mat = [[q * D[0], Z, Z, Z],
                       [q * D[1], Z, Z, Z],
                       [q * D[2], Z, Z, Z],
                       [Z, (q - 1) * D[2], (q - 1) * D[0], (q - 1) * D[1]]]
            else:
                mat = [[Z, Z, Z, Z],
                       [-q * D[1], q * D[0], Z, Z],
                       [Z, -q * D[2], q * D[1], Z],
                       [q * D[2], Z, -q * D[0], Z]]
        diffs.append(mat)
    return KoszulComplex("chain", f, modules, diffs)
