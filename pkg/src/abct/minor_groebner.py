"""Integer multivariate polynomials, lex division, and Buchberger's criterion.

Just enough machinery to certify that the maximal minors of

    [ x1j*x2j ]
    [ x1j*x3j ]   j = 1..c
    [ x2j*x3j ]

form a Groebner basis under the lex order x11 > x12 > ... > x1c > x21 > ... > x3c.
There is no completion loop: a failed check is reported, not repaired.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Dict, List, Optional, Sequence, Tuple

Exp = Tuple[int, ...]


class MultiPoly:
    """Polynomial with integer coefficients in a fixed tuple of named variables."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Dict[Exp, int] | None = None):
        self.variables = tuple(variables)
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != len(self.variables):
                raise ValueError("exponent length does not match the variables")
            if c:
                clean[exp] = clean.get(exp, 0) + int(c)
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> "MultiPoly":
        exp = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exp: 1})

    def _new(self, terms: Dict[Exp, int]) -> "MultiPoly":
        out = MultiPoly.__new__(MultiPoly)
        out.variables = self.variables
        out.terms = terms
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.variables == other.variables and self.terms == other.terms
        return NotImplemented

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        acc = dict(self.terms)
        for e, c in other.terms.items():
            v = acc.get(e, 0) + c
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
        return self._new(acc)

    def __neg__(self) -> "MultiPoly":
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self._new({e: c * other for e, c in self.terms.items()} if other else {})
        acc: Dict[Exp, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = acc.get(e, 0) + c1 * c2
                if v:
                    acc[e] = v
                else:
                    acc.pop(e, None)
        return self._new(acc)

    __rmul__ = __mul__

    def mul_term(self, exp: Exp, coeff: int) -> "MultiPoly":
        return self._new(
            {tuple(a + b for a, b in zip(e, exp)): c * coeff for e, c in self.terms.items()}
        )

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_squarefree(self) -> bool:
        return all(max(e, default=0) <= 1 for e in self.terms)

    def evaluate(self, point: Dict[str, object]):
        total = 0
        for exp, c in self.terms.items():
            term = c
            for v, k in zip(self.variables, exp):
                if k:
                    term = term * point[v] ** k
            total = total + term
        return total

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, exp) if k
            )
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


@dataclass(frozen=True)
class LexOrder:
    """Lex order; ``priority[0]`` is the index of the largest variable."""

    priority: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.priority) != list(range(len(self.priority))):
            raise ValueError("priority must be a permutation")

    @classmethod
    def natural(cls, nvars: int) -> "LexOrder":
        return cls(tuple(range(nvars)))

    def key(self, exp: Exp) -> Exp:
        return tuple(exp[i] for i in self.priority)

    def leading(self, f: MultiPoly) -> Tuple[Exp, int]:
        if self.priority == tuple(range(len(self.priority))):
            exp = max(f.terms)
        else:
            exp = max(f.terms, key=self.key)
        return exp, f.terms[exp]


def _divides(a: Exp, b: Exp) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exp, b: Exp) -> Exp:
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a: Exp, b: Exp) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def s_polynomial(f: MultiPoly, g: MultiPoly, order: LexOrder) -> MultiPoly:
    """``lc(g) * (L/lm f) * f - lc(f) * (L/lm g) * g`` with L the monomial lcm."""
    if not f or not g:
        raise ValueError("S-polynomial of a zero polynomial")
    ef, cf = order.leading(f)
    eg, cg = order.leading(g)
    L = _lcm(ef, eg)
    mf = tuple(a - b for a, b in zip(L, ef))
    mg = tuple(a - b for a, b in zip(L, eg))
    return f.mul_term(mf, cg) - g.mul_term(mg, cf)


def reduce(f: MultiPoly, G: Sequence[MultiPoly], order: LexOrder) -> MultiPoly:
    """Remainder of f on division by G; the first divisor in G wins.

    Integer coefficients are kept: a leading coefficient of G must divide the
    term it cancels (true for +-1 leading coefficients).
    """
    if any(not g for g in G):
        raise ValueError("cannot divide by zero")
    leads = [order.leading(g) for g in G]
    natural = order.priority == tuple(range(len(order.priority)))
    rest = dict(f.terms)
    remainder: Dict[Exp, int] = {}
    while rest:
        lead = max(rest) if natural else max(rest, key=order.key)
        c = rest[lead]
        for g, (eg, cg) in zip(G, leads):
            if _divides(eg, lead):
                q, r = divmod(c, cg)
                if r:
                    raise ArithmeticError(
                        f"leading coefficient {cg} does not divide {c}; rational arithmetic needed"
                    )
                shift = tuple(a - b for a, b in zip(lead, eg))
                for e, k in g.terms.items():
                    e = tuple(a + b for a, b in zip(e, shift))
                    v = rest.get(e, 0) - q * k
                    if v:
                        rest[e] = v
                    else:
                        del rest[e]
                break
        else:
            remainder[lead] = c
            del rest[lead]
    return f._new(remainder)


@dataclass
class BuchbergerReport:
    is_groebner: bool
    pairs: int
    skipped: int
    failing_pair: Optional[Tuple[int, int]] = None
    remainder_sizes: Optional[List[Tuple[Tuple[int, int], int]]] = None


def buchberger_check(G: Sequence[MultiPoly], order: LexOrder, trace: bool = False) -> BuchbergerReport:
    """Buchberger's criterion with the coprime-leading-monomial skip.

    Pairs are processed in lexicographic index order; on failure the first
    failing pair (1-based) is reported.
    """
    if not G:
        raise ValueError("G must be nonempty")
    leads = [order.leading(g)[0] for g in G]
    pairs = skipped = 0
    sizes = [] if trace else None
    for i, j in combinations(range(len(G)), 2):
        pairs += 1
        if _coprime(leads[i], leads[j]):
            skipped += 1
            continue
        r = reduce(s_polynomial(G[i], G[j], order), G, order)
        if trace:
            sizes.append(((i + 1, j + 1), len(r.terms)))
        if r:
            return BuchbergerReport(False, pairs, skipped, (i + 1, j + 1), sizes)
    return BuchbergerReport(True, pairs, skipped, None, sizes)


def minor_variables(n_cols: int) -> List[str]:
    """``x11 .. x1c, x21 .. x3c`` (already in decreasing lex priority)."""
    return [f"x{i}{j}" if n_cols < 10 else f"x{i}_{j}" for i in (1, 2, 3) for j in range(1, n_cols + 1)]


def minors_ideal_generators(n_cols: int) -> List[MultiPoly]:
    """The C(n_cols, 3) maximal minors of the 3 x n_cols matrix theta'_2."""
    if n_cols < 3:
        raise ValueError("need at least 3 columns")
    variables = minor_variables(n_cols)
    nv = len(variables)

    def entry(row: int, col: int) -> Exp:
        # rows: x1*x2, x1*x3, x2*x3
        a, b = ((0, 1), (0, 2), (1, 2))[row]
        exp = [0] * nv
        exp[a * n_cols + col] = 1
        exp[b * n_cols + col] = 1
        return tuple(exp)

    gens = []
    for cols in combinations(range(n_cols), 3):
        terms: Dict[Exp, int] = {}
        for perm in permutations(range(3)):
            sign = _perm_sign(perm)
            exp = [0] * nv
            for row, c in zip(perm, cols):
                for idx, k in enumerate(entry(row, c)):
                    exp[idx] += k
            terms[tuple(exp)] = terms.get(tuple(exp), 0) + sign
        gens.append(MultiPoly(variables, terms))
    return gens


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    for i, j in combinations(range(len(perm)), 2):
        if perm[i] > perm[j]:
            sign = -sign
    return sign


def lex_order(n_cols: int) -> LexOrder:
    return LexOrder.natural(3 * n_cols)
