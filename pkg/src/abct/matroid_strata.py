"""Rank-2 matroids, their Veronese images, and image dimensions of their cells.

Ground sets are ``range(n)`` internally; JSON and CLI output are 1-based.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import FrozenSet, Iterator, List, Sequence, Tuple

from .grassmann import ChartError, PlueckerVector, image_dimension

Subset = Tuple[int, ...]


def exchange_axiom_holds(bases) -> bool:
    """Basis exchange for a set of equal-size subsets.

    Empty and one-element families pass vacuously.
    """
    family = {frozenset(b) for b in bases}
    if len({len(b) for b in family}) > 1:
        return False
    for I in family:
        for J in family:
            if I == J:
                continue
            for a in I - J:
                rest = I - {a}
                if not any(rest | {b} in family for b in J - I):
                    return False
    return True


@dataclass(frozen=True)
class MatroidK:
    n: int
    k: int
    bases: FrozenSet[Subset]

    @property
    def empty(self) -> bool:
        return not self.bases

    def is_matroid(self) -> bool:
        return bool(self.bases) and exchange_axiom_holds(self.bases)

    def sorted_bases(self) -> List[Subset]:
        return sorted(self.bases)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "bases": [[i + 1 for i in B] for B in self.sorted_bases()],
            "empty": self.empty,
        }


@dataclass(frozen=True)
class Rank2Matroid:
    n: int
    bases: FrozenSet[Subset]

    def __post_init__(self):
        if not self.bases:
            raise ValueError("a rank-2 matroid needs at least one basis")
        for B in self.bases:
            if len(B) != 2 or B[0] >= B[1] or B[1] >= self.n or B[0] < 0:
                raise ValueError(f"bad basis {B}")

    @classmethod
    def from_bases(cls, n: int, bases) -> "Rank2Matroid":
        m = cls(n, frozenset(tuple(sorted(B)) for B in bases))
        if not exchange_axiom_holds(m.bases):
            raise ValueError("bases violate the exchange axiom")
        return m

    @classmethod
    def from_classes(cls, n: int, classes: Sequence[Sequence[int]]) -> "Rank2Matroid":
        """Bases are the pairs drawn from two different parallel classes."""
        if len(classes) < 2:
            raise ValueError("need at least two parallel classes")
        bases = set()
        for ca, cb in combinations(classes, 2):
            for a in ca:
                for b in cb:
                    bases.add((min(a, b), max(a, b)))
        return cls(n, frozenset(bases))

    @classmethod
    def uniform(cls, n: int) -> "Rank2Matroid":
        return cls(n, frozenset(combinations(range(n), 2)))

    @property
    def loops(self) -> FrozenSet[int]:
        used = {i for B in self.bases for i in B}
        return frozenset(set(range(self.n)) - used)

    def parallel_classes(self) -> List[Tuple[int, ...]]:
        """Non-loops grouped by parallelism, each class sorted, classes by first element."""
        classes: List[List[int]] = []
        for e in range(self.n):
            if e in self.loops:
                continue
            for cls_ in classes:
                if (cls_[0], e) not in self.bases:
                    cls_.append(e)
                    break
            else:
                classes.append([e])
        return [tuple(c) for c in classes]

    def as_matroid(self) -> MatroidK:
        return MatroidK(self.n, 2, self.bases)

    def to_json(self) -> dict:
        return {"n": self.n, "bases": [[i + 1 for i in B] for B in sorted(self.bases)]}

    @classmethod
    def from_json(cls, data) -> "Rank2Matroid":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_bases(data["n"], [(i - 1, j - 1) for i, j in data["bases"]])


def matroid_of_point(P: PlueckerVector) -> MatroidK:
    if P.is_zero():
        raise ValueError("the zero vector has no matroid")
    return MatroidK(P.n, P.k, P.support())


def veronese_image_matroid(M: Rank2Matroid, d: int) -> MatroidK:
    """(d+1)-subsets all of whose pairs are bases of M."""
    if d < 1 or d + 1 > M.n:
        raise ValueError("need 1 <= d and d + 1 <= n")
    bases = frozenset(
        I for I in combinations(range(M.n), d + 1)
        if all(pair in M.bases for pair in combinations(I, 2))
    )
    image = MatroidK(M.n, d + 1, bases)
    assert image.empty or exchange_axiom_holds(bases), f"image of {M} is not a matroid"
    return image


def _set_partitions(items: Sequence[int]) -> Iterator[List[List[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]


def enumerate_rank2_matroids(n: int) -> Iterator[Rank2Matroid]:
    """Every rank-2 matroid on range(n), once each: loops plus >= 2 parallel classes."""
    if n < 2:
        raise ValueError("need n >= 2")
    ground = list(range(n))
    for size in range(n - 1):
        for loops in combinations(ground, size):
            rest = [e for e in ground if e not in loops]
            for part in _set_partitions(rest):
                if len(part) >= 2:
                    yield Rank2Matroid.from_classes(n, part)


def brute_force_rank2_matroids(n: int) -> List[FrozenSet[Subset]]:
    """All nonempty sets of pairs passing the exchange axiom (exponential in C(n,2))."""
    pairs = list(combinations(range(n), 2))
    out = []
    for mask in range(1, 1 << len(pairs)):
        fam = frozenset(p for i, p in enumerate(pairs) if mask >> i & 1)
        if exchange_axiom_holds(fam):
            out.append(fam)
    return out


# ---------------------------------------------------------------------------
# cell image dimensions
# ---------------------------------------------------------------------------


def cell_parameterization(M: Rank2Matroid):
    """Matrices of the cell of M: column e = t_e * v_c(e), loop columns zero.

    Returns ``(param, count)``; parameters are the two entries of every class
    vector followed by one scalar per non-loop element.
    """
    classes = M.parallel_classes()
    members = [e for c in classes for e in c]
    class_of = {e: i for i, c in enumerate(classes) for e in c}
    scalar_slot = {e: 2 * len(classes) + i for i, e in enumerate(members)}
    count = 2 * len(classes) + len(members)

    def param(t):
        top, bottom = [], []
        for e in range(M.n):
            if e not in class_of:
                top.append(Fraction(0))
                bottom.append(Fraction(0))
                continue
            c = class_of[e]
            s = t[scalar_slot[e]]
            top.append(s * t[2 * c])
            bottom.append(s * t[2 * c + 1])
        return [top, bottom]

    return param, count


def strata_dimension_experiment(M: Rank2Matroid, d: int, seed: int, attempts: int = 3) -> int:
    """Dimension of the closure of theta_d of the cell of M, maximised over generic points."""
    param, count = cell_parameterization(M)
    rng = random.Random(seed)
    best = None
    for _ in range(attempts):
        point = [rng.randint(-99, 99) for _ in range(count)]
        try:
            dim = image_dimension(param, d, point)
        except ChartError:
            continue
        best = dim if best is None else max(best, dim)
    if best is None:
        raise ChartError(f"no usable chart in {attempts} attempts (seed={seed})")
    return best


def preset_matroid(name: str, n: int) -> Rank2Matroid:
    """``uniform``; ``m1``: pairs avoiding element 1; ``m2``: m1 minus the pair {2,3}."""
    if name == "uniform":
        return Rank2Matroid.uniform(n)
    m1 = frozenset(B for B in combinations(range(n), 2) if 0 not in B)
    if name == "m1":
        return Rank2Matroid(n, m1)
    if name == "m2":
        if n < 4:
            raise ValueError("m2 needs n >= 4")
        return Rank2Matroid(n, m1 - {(1, 2)})
    raise ValueError(f"unknown preset {name!r}")
