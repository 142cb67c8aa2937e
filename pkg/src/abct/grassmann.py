"""Exact linear algebra on matrix representatives of Grassmannian points.

Matrices hold :class:`fractions.Fraction` entries.  Subsets of columns are
0-based sorted tuples internally and 1-based in every text/JSON rendering.

Veronese rows are ordered by descending lexicographic exponent vector, so for
two rows the order is ``x^d, x^(d-1) y, ..., y^d``.  Any other fixed order
only changes the signs of maximal minors, which does not affect ranks or
vanishing.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable, Dict, List, Sequence, Tuple

from .dual import Dual, value

Subset = Tuple[int, ...]


class ChartError(ArithmeticError):
    """The base point has no usable affine chart (all candidate minors vanish)."""


class DegenerateSample(RuntimeError):
    """Random sampling kept producing rank-deficient matrices."""


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


def parse_rational(text) -> Fraction:
    return Fraction(str(text).strip())


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class ExactMatrix:
    entries: Tuple[Tuple[Fraction, ...], ...]

    def __init__(self, entries: Sequence[Sequence]):
        rows = tuple(tuple(Fraction(x) for x in row) for row in entries)
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("ragged matrix")
        object.__setattr__(self, "entries", rows)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def column(self, j: int) -> Tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self, subset: Sequence[int]) -> List[List[Fraction]]:
        return [[row[j] for j in subset] for row in self.entries]

    def hstack(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix([a + b for a, b in zip(self.entries, other.entries)])

    def to_lists(self) -> List[List[Fraction]]:
        return [list(r) for r in self.entries]

    @classmethod
    def identity(cls, k: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(k)] for i in range(k)])

    @classmethod
    def from_csv(cls, text: str) -> "ExactMatrix":
        rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
        return cls([[parse_rational(c) for c in r] for r in rows])

    def to_csv(self) -> str:
        return "\n".join(",".join(format_rational(x) for x in row) for row in self.entries) + "\n"

    @classmethod
    def from_json(cls, data) -> "ExactMatrix":
        if isinstance(data, str):
            data = json.loads(data)
        m = cls([[parse_rational(c) for c in row] for row in data["entries"]])
        if m.rows != data["rows"] or m.cols != data["cols"]:
            raise ValueError("declared shape does not match entries")
        return m

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[format_rational(x) for x in row] for row in self.entries],
        }


def monomial_index(k: int, d: int) -> List[Tuple[int, ...]]:
    """Exponent vectors of degree d in k variables, descending lex."""

    def rec(k, d):
        if k == 1:
            yield (d,)
            return
        for first in range(d, -1, -1):
            for rest in rec(k - 1, d - first):
                yield (first,) + rest

    return list(rec(k, d))


def _monomial(col: Sequence, exp: Sequence[int]):
    out = 1
    for x, e in zip(col, exp):
        for _ in range(e):
            out = out * x
    return out


def veronese_columns(rows: Sequence[Sequence], d: int) -> List[List]:
    """Veronese map on a matrix given as rows of arbitrary ring elements."""
    k = len(rows)
    n = len(rows[0])
    index = monomial_index(k, d)
    cols = [[row[j] for row in rows] for j in range(n)]
    return [[_monomial(cols[j], exp) for j in range(n)] for exp in index]


def veronese_matrix(M: ExactMatrix, d: int) -> ExactMatrix:
    """Apply the d-th Veronese embedding to every column of M."""
    if d < 1:
        raise ValueError("d must be positive")
    return ExactMatrix(veronese_columns(M.entries, d))


# ---------------------------------------------------------------------------
# determinants, rank, Pluecker coordinates
# ---------------------------------------------------------------------------


def determinant(mat: Sequence[Sequence]):
    """Determinant of a square matrix over Fractions or Duals.

    Laplace expansion up to 3x3, Gaussian elimination with nonzero-value
    pivots above that.
    """
    size = len(mat)
    if size == 0:
        return Fraction(1)
    if size == 1:
        return mat[0][0]
    if size == 2:
        return mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    if size == 3:
        a, b, c = mat
        return (
            a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0])
        )
    rows = [list(r) for r in mat]
    det = 1
    for col in range(size):
        pivot = next((r for r in range(col, size) if value(rows[r][col]) != 0), None)
        if pivot is None:
            return Fraction(0) * rows[0][0]
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        p = rows[col][col]
        det = det * p
        for r in range(col + 1, size):
            if value(rows[r][col]) == 0 and not isinstance(rows[r][col], Dual):
                continue
            factor = rows[r][col] / p
            for c in range(col, size):
                rows[r][c] = rows[r][c] - factor * rows[col][c]
    return det


def rank_of(rows: Sequence[Sequence]) -> int:
    """Rank of a Fraction matrix by exact row reduction."""
    mat = [[Fraction(x) for x in r] for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        p = mat[rank][col]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                factor = mat[r][col] / p
                for c in range(col, ncols):
                    mat[r][c] -= factor * mat[rank][c]
        rank += 1
        if rank == len(mat):
            break
    return rank


def exact_rank(M: ExactMatrix) -> int:
    return rank_of(M.entries)


@dataclass(frozen=True)
class PlueckerVector:
    k: int
    n: int
    coords: Dict[Subset, Fraction] = field(hash=False)

    def __getitem__(self, subset: Sequence[int]) -> Fraction:
        return self.coords[tuple(subset)]

    def support(self) -> frozenset:
        return frozenset(I for I, v in self.coords.items() if v != 0)

    def is_zero(self) -> bool:
        return not any(self.coords.values())

    def to_json(self) -> dict:
        return {
            ",".join(str(i + 1) for i in I): format_rational(v)
            for I, v in sorted(self.coords.items())
        }


def pluecker_coordinates(M: ExactMatrix) -> PlueckerVector:
    k, n = M.rows, M.cols
    if k > n:
        raise ValueError("need k <= n")
    coords = {I: Fraction(determinant(M.columns(I))) for I in combinations(range(n), k)}
    return PlueckerVector(k, n, coords)


# ---------------------------------------------------------------------------
# determinantal loci
# ---------------------------------------------------------------------------


def veronese_rank_bound(k: int, d: int) -> int:
    """Number of degree-d monomials in k variables."""
    return comb(d + k - 1, d)


def z_is_whole_grassmannian(k: int, n: int, d: int) -> bool:
    """True when n is too small for theta_d to have full rank anywhere."""
    return n < veronese_rank_bound(k, d)


def z_membership(M: ExactMatrix, d: int) -> bool:
    """Whether [M] lies in Z_d(k, n), i.e. theta_d(M) drops rank.

    When ``n < C(d+k-1, d)`` every point qualifies; see
    :func:`z_is_whole_grassmannian`.
    """
    return exact_rank(veronese_matrix(M, d)) < veronese_rank_bound(M.rows, d)


def theta_prime_matrix(M: ExactMatrix, d: int) -> ExactMatrix:
    """Veronese matrix with the pure-power rows ``x_i^d`` removed."""
    if d < 2:
        raise ValueError("theta' needs d >= 2")
    index = monomial_index(M.rows, d)
    full = veronese_columns(M.entries, d)
    return ExactMatrix([row for row, exp in zip(full, index) if max(exp) != d])


def chart_matrix(M_chart: ExactMatrix) -> ExactMatrix:
    """``[M_chart | I_k]``: the chart where the last k columns are the identity."""
    return M_chart.hstack(ExactMatrix.identity(M_chart.rows))


def to_chart(M: ExactMatrix) -> ExactMatrix:
    """Chart coordinates of [M]: first n-k columns of B^-1 M, B the last k columns.

    Raises ``ChartError`` when B is singular.
    """
    k, n = M.rows, M.cols
    aug = [list(M.entries[i][n - k :]) + list(M.entries[i][: n - k]) for i in range(k)]
    for col in range(k):
        pivot = next((r for r in range(col, k) if aug[r][col] != 0), None)
        if pivot is None:
            raise ChartError("the last k columns are not independent")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return ExactMatrix([row[k:] for row in aug])


def chart_rank_equivalence(M_chart: ExactMatrix, n: int) -> bool:
    """Check that theta_2 of the chart point drops rank iff theta'_2 does.

    Vanishing of all maximal minors is tested as rank deficiency.
    """
    if M_chart.rows != 3 or M_chart.cols != n - 3 or n < 6:
        raise ValueError("expects a 3 x (n-3) chart matrix with n >= 6")
    full_drops = exact_rank(veronese_matrix(chart_matrix(M_chart), 2)) < 6
    prime_drops = exact_rank(theta_prime_matrix(M_chart, 2)) < 3
    return full_drops == prime_drops


def quartic_residual(P: PlueckerVector, I: Sequence[int]) -> Fraction:
    """Left side of the quartic relation for the 6-subset ``I`` (0-based)."""
    if P.k != 3:
        raise ValueError("quartics are defined on G(3, n)")
    i1, i2, i3, i4, i5, i6 = I
    p = lambda a, b, c: P.coords[tuple(sorted((a, b, c)))]  # noqa: E731
    return (
        p(i1, i2, i3) * p(i1, i5, i6) * p(i2, i4, i6) * p(i3, i4, i5)
        - p(i2, i3, i4) * p(i1, i2, i6) * p(i1, i3, i5) * p(i4, i5, i6)
    )


@dataclass(frozen=True)
class VandermondeCheck:
    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def vandermonde_check(W: ExactMatrix, d: int, I: Sequence[int]) -> VandermondeCheck:
    """Compare the I-minor of theta_d(W) with the product of 2x2 minors of W."""
    if W.rows != 2:
        raise ValueError("W must have two rows")
    I = tuple(I)
    if len(I) != d + 1 or list(I) != sorted(set(I)):
        raise ValueError("I must be a sorted (d+1)-subset")
    lhs = Fraction(determinant(veronese_matrix(W, d).columns(I)))
    rhs = Fraction(1)
    for a, b in combinations(I, 2):
        rhs *= determinant(W.columns((a, b)))
    return VandermondeCheck(lhs, rhs)


# ---------------------------------------------------------------------------
# sampling
# ---------------------------------------------------------------------------


def random_matrix(k: int, n: int, rng: random.Random, bound: int = 99) -> ExactMatrix:
    return ExactMatrix([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(k)])


def sample_vdn_point(n: int, d: int, seed: int, retries: int = 100) -> ExactMatrix:
    """A full-rank representative of a point of V(d+1, n): theta_d(W) for random W."""
    if n < d + 1:
        raise ValueError("need n >= d + 1")
    rng = random.Random(seed)
    for _ in range(retries):
        img = veronese_matrix(random_matrix(2, n, rng), d)
        if exact_rank(img) == d + 1:
            return img
    raise DegenerateSample(f"no full-rank sample after {retries} draws (seed={seed})")


# ---------------------------------------------------------------------------
# dimension of images by Jacobian rank
# ---------------------------------------------------------------------------

Parameterization = Callable[[Sequence], List[List]]


def image_dimension(param: Parameterization, d: int, point: Sequence) -> int:
    """Local dimension of the closure of ``theta_d(param(t))`` at ``t = point``.

    ``param`` maps a parameter list to a 2 x n matrix (as rows) using only
    ring operations, so it can be evaluated on dual numbers.  The Pluecker
    coordinates of the image are normalised in the affine chart of the
    lex-smallest nonvanishing coordinate; the exact rank of their Jacobian is
    returned.  Raises :class:`ChartError` if the base point has no chart.
    """
    t = Dual.variables([Fraction(x) for x in point])
    rows = param(t)
    rows = [[x if isinstance(x, Dual) else Dual(x, (0,) * len(t)) for x in row] for row in rows]
    img = veronese_columns(rows, d)
    k = len(img)
    n = len(img[0])
    minors = {I: determinant([[r[j] for j in I] for r in img]) for I in combinations(range(n), k)}
    chart = next((I for I in sorted(minors) if minors[I].val != 0), None)
    if chart is None:
        raise ChartError("all Pluecker coordinates vanish at the base point")
    base = minors[chart]
    jac = [(minors[I] / base).grad for I in sorted(minors) if I != chart]
    return rank_of(jac)


def grassmannian_parameterization(n: int) -> Tuple[Parameterization, int]:
    """All 2n entries of a 2 x n matrix as parameters."""

    def param(t):
        return [list(t[:n]), list(t[n : 2 * n])]

    return param, 2 * n
