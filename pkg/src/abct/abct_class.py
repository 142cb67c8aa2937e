"""Cohomology class and Pluecker degree of the ABCT variety V(3, n).

The class of V(3, n) in H*(G(3, n)) is ``[f_{n-5}]`` where ``f_m`` satisfies

    f_m = 2 s_1 f_{m-1} - (s_2 + 2 s_{1,1}) f_{m-2} + s_{2,1} f_{m-3} + 2^m s_m

with f_0 = 1, f_1 = 4 s_1, f_2 = 11 s_2 + 6 s_{1,1}.  Two oracles recompute
``f_m`` without the recursion:

* :func:`genseries_oracle` expands the generating series
  ``prod 1/(1 - 2 x_i t) * prod_{i<j} 1/(1 - (x_i + x_j) t)`` in monomials.
* :func:`porteous_oracle` evaluates the Porteous determinant
  ``det(c_{1+j-i}(S^2 U^vee))`` in the Chern roots of ``S^2 U^vee``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List

from .symfunc import (
    Partition,
    SchurExpansion,
    SymPoly3,
    decompose_to_schur,
    pieri_mul,
    render_text,
    schur_mul,
    to_json,
)

S = SchurExpansion.s

# Linear forms c1*a1 + c2*a2 + c3*a3: the Chern roots of S^2 U^vee in terms of
# the Chern roots a_i of U^vee.
SQUARE_ROOTS = ((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1))


@dataclass(frozen=True)
class ChernRootForm:
    coefficients: tuple

    def __post_init__(self):
        if len(self.coefficients) != 3 or not any(self.coefficients):
            raise ValueError("a Chern root form needs three coefficients, not all zero")

    def as_poly(self) -> SymPoly3:
        return SymPoly3.linear(*self.coefficients)


BETA = tuple(ChernRootForm(c) for c in SQUARE_ROOTS)


@dataclass(frozen=True)
class ClassResult:
    n: int
    expansion: SchurExpansion

    @property
    def codim(self) -> int:
        return self.n - 5

    def check(self) -> None:
        for lam in self.expansion.terms:
            if sum(lam) != self.codim:
                raise AssertionError(f"{lam} has the wrong degree")
            if lam[0] > self.n - 3:
                raise AssertionError(f"{lam} does not fit the 3 x {self.n - 3} box")

    def to_json(self, degree: int | None = None) -> dict:
        out = {"n": self.n, "codim": self.codim, "terms": to_json(self.expansion)}
        if degree is not None:
            out["degree"] = str(degree)
        return out

    def __str__(self) -> str:
        return render_text(self.expansion)


# ---------------------------------------------------------------------------
# the recursion
# ---------------------------------------------------------------------------

_SECOND = S(2) + 2 * S(1, 1)
_THIRD = S(2, 1)

_memo: List[SchurExpansion] = [S(), 4 * S(1), 11 * S(2) + 6 * S(1, 1)]
_memo_lock = threading.Lock()


def _next_term(f1: SchurExpansion, f2: SchurExpansion, f3: SchurExpansion, m: int):
    acc: Dict[Partition, int] = {}

    def add(e: SchurExpansion, scale: int = 1):
        for lam, c in e.items():
            v = acc.get(lam, 0) + scale * c
            if v:
                acc[lam] = v
            else:
                acc.pop(lam, None)

    add(pieri_mul(f1, 1), 2)
    add(schur_mul(f2, _SECOND), -1)
    add(schur_mul(f3, _THIRD))
    add(S(m), 2**m)
    return SchurExpansion(acc)


def abct_recursion(m: int) -> SchurExpansion:
    """``f_m`` from the three-term recursion, memoised across calls."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    with _memo_lock:
        while len(_memo) <= m:
            k = len(_memo)
            _memo.append(_next_term(_memo[k - 1], _memo[k - 2], _memo[k - 3], k))
        return _memo[m]


def clear_cache() -> None:
    """Forget memoised f_m beyond the base cases (for timing runs)."""
    with _memo_lock:
        del _memo[3:]


def abct_class(n: int) -> ClassResult:
    """The class of V(3, n) in G(3, n) for n >= 5."""
    if n < 5:
        raise ValueError(f"the class formula needs n >= 5, got n={n}")
    res = ClassResult(n, abct_recursion(n - 5))
    res.check()
    return res


# ---------------------------------------------------------------------------
# oracles for the class
# ---------------------------------------------------------------------------


def _power_series(form: SymPoly3, m: int) -> List[SymPoly3]:
    # 1/(1 - form*t) truncated after t^m
    powers = [SymPoly3.constant(1)]
    for _ in range(m):
        powers.append(powers[-1] * form)
    return powers


def _series_mul(a: List[SymPoly3], b: List[SymPoly3], m: int) -> List[SymPoly3]:
    out = []
    for k in range(m + 1):
        acc = SymPoly3()
        for i in range(k + 1):
            acc = acc + a[i] * b[k - i]
        out.append(acc)
    return out


def genseries_coefficients(m: int) -> List[SymPoly3]:
    """Monomial forms of ``f_0 .. f_m`` from the generating series."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    series = [SymPoly3.constant(1)] + [SymPoly3() for _ in range(m)]
    for i in range(3):
        c = [0, 0, 0]
        c[i] = 2
        series = _series_mul(series, _power_series(SymPoly3.linear(*c), m), m)
    for i in range(3):
        for j in range(i + 1, 3):
            c = [0, 0, 0]
            c[i] = c[j] = 1
            series = _series_mul(series, _power_series(SymPoly3.linear(*c), m), m)
    return series


def genseries_oracle(m: int) -> SchurExpansion:
    return decompose_to_schur(genseries_coefficients(m)[m])


def chern_classes(roots=BETA) -> List[SymPoly3]:
    """Elementary symmetric polynomials ``e_0 .. e_r`` of the given roots."""
    e = [SymPoly3.constant(1)]
    for root in roots:
        r = root.as_poly()
        e = [
            (e[i] if i < len(e) else SymPoly3()) + (r * e[i - 1] if i > 0 else SymPoly3())
            for i in range(len(e) + 1)
        ]
    return e


def porteous_oracle(n: int) -> SchurExpansion:
    """``det(c_{1+j-i}(S^2 U^vee))_{1<=i,j<=n-5}`` decomposed in Schur functions.

    The Toeplitz matrix is lower Hessenberg (ones below the diagonal), so the
    determinant is evaluated by cofactor expansion along the first row:
    ``D_k = sum_{i=1}^{k} (-1)^(i-1) c_i D_{k-i}``.
    """
    if n < 5:
        raise ValueError(f"the class formula needs n >= 5, got n={n}")
    size = n - 5
    c = chern_classes()
    dets = [SymPoly3.constant(1)]
    for k in range(1, size + 1):
        acc = SymPoly3()
        for i in range(1, min(k, len(c) - 1) + 1):
            term = c[i] * dets[k - i]
            acc = acc + term if i % 2 else acc - term
        dets.append(acc)
    return decompose_to_schur(dets[size])


# ---------------------------------------------------------------------------
# Pluecker degree
# ---------------------------------------------------------------------------


def pluecker_degree(n: int) -> int:
    """Coefficient of ``s_{(n-3)^3}`` in ``f_{n-5} * s_1^(2n-4)``.

    Partitions leaving the 3 x (n-3) box are dropped after every step; adding
    boxes never brings them back.
    """
    if n < 5:
        raise ValueError(f"the degree formula needs n >= 5, got n={n}")
    width = n - 3
    acc = abct_recursion(n - 5)
    for _ in range(2 * n - 4):
        acc = pieri_mul(acc, 1)
        acc = SchurExpansion({lam: c for lam, c in acc.items() if lam[0] <= width})
    return acc.coeff(width, width, width)


def skew_syt_count(outer, inner) -> int:
    """Standard Young tableaux of skew shape outer/inner (Aitken's determinant)."""
    rows = len(outer)
    inner = list(inner) + [0] * (rows - len(inner))
    size = sum(outer) - sum(inner)
    if size < 0:
        return 0
    mat = []
    for i in range(rows):
        row = []
        for j in range(rows):
            k = outer[i] - inner[j] - i + j
            row.append(Fraction(1, factorial(k)) if k >= 0 else Fraction(0))
        mat.append(row)
    return int(factorial(size) * _fraction_det(mat))


def _fraction_det(mat) -> Fraction:
    mat = [row[:] for row in mat]
    size = len(mat)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if mat[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        for r in range(col + 1, size):
            factor = mat[r][col] / mat[col][col]
            if factor:
                for k in range(col, size):
                    mat[r][k] -= factor * mat[col][k]
    return det


def degree_skew_oracle(n: int) -> int:
    if n < 5:
        raise ValueError(f"the degree formula needs n >= 5, got n={n}")
    box = (n - 3,) * 3
    return sum(c * skew_syt_count(box, lam) for lam, c in abct_recursion(n - 5).items())


# ---------------------------------------------------------------------------
# Eulerian numbers
# ---------------------------------------------------------------------------


def eulerian_number(n: int, k: int) -> int:
    """A(n, k): permutations of [n] with exactly k descents."""
    if n < 1 or k < 0 or k >= n:
        raise ValueError(f"A(n, k) needs 0 <= k < n, got n={n}, k={k}")
    row = [1]  # n = 1
    for size in range(2, n + 1):
        row = [
            (j + 1) * (row[j] if j < len(row) else 0)
            + (size - j) * (row[j - 1] if j >= 1 else 0)
            for j in range(size)
        ]
    return row[k]


@dataclass(frozen=True)
class EulerCheck:
    n: int
    coeff: int
    closed_form: int
    eulerian: int

    @property
    def all_equal(self) -> bool:
        return self.coeff == self.closed_form == self.eulerian


def euler_coefficient_check(n: int) -> EulerCheck:
    """Compare the one-row coefficient of [V(3,n)] with 2^(n-3) - (n-2) and A(n-3,1)."""
    cls = abct_class(n).expansion
    return EulerCheck(
        n=n,
        coeff=cls.coeff(n - 5),
        closed_form=2 ** (n - 3) - (n - 2),
        eulerian=eulerian_number(n - 3, 1),
    )


def hook_length_count(shape) -> int:
    """#SYT of a straight shape; used to cross-check the skew counter."""
    shape = [p for p in shape if p]
    cells = sum(shape)
    conj = [sum(1 for p in shape if p > j) for j in range(shape[0])] if shape else []
    prod = 1
    for i, row in enumerate(shape):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(cells) // prod


__all__ = [
    "BETA",
    "ChernRootForm",
    "ClassResult",
    "EulerCheck",
    "abct_class",
    "abct_recursion",
    "chern_classes",
    "degree_skew_oracle",
    "euler_coefficient_check",
    "eulerian_number",
    "genseries_coefficients",
    "genseries_oracle",
    "hook_length_count",
    "pluecker_degree",
    "porteous_oracle",
    "skew_syt_count",
]
