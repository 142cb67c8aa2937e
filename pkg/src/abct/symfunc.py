"""Symmetric functions in three variables.

Elements of Lambda_3 are kept in two forms:

* :class:`SchurExpansion` -- integer combination of Schur polynomials
  ``s[l1,l2,l3]``; this is the working form.
* :class:`SymPoly3` -- every monomial ``x1^a x2^b x3^c`` with its coefficient;
  used as an independent oracle for products and conversions.

Partitions are plain tuples ``(l1, l2, l3)`` with ``l1 >= l2 >= l3 >= 0``.
A partition that would acquire a fourth row is zero in three variables and is
dropped as soon as it appears.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterable, Mapping, Tuple

Partition = Tuple[int, int, int]
Exponent = Tuple[int, int, int]


def make_partition(parts: Iterable[int]) -> Partition:
    """Pad ``parts`` with zeros to length three and validate."""
    parts = tuple(int(p) for p in parts)
    if len(parts) > 3:
        if any(parts[3:]):
            raise ValueError(f"partition {parts} has more than three rows")
        parts = parts[:3]
    parts = parts + (0,) * (3 - len(parts))
    if not parts[0] >= parts[1] >= parts[2] >= 0:
        raise ValueError(f"{parts} is not a partition")
    return parts


def format_partition(lam: Partition) -> str:
    nonzero = [str(p) for p in lam if p]
    return "[" + ",".join(nonzero or ["0"]) + "]"


def _add_into(acc: Dict, key, coeff: int) -> None:
    value = acc.get(key, 0) + coeff
    if value:
        acc[key] = value
    else:
        acc.pop(key, None)


# ---------------------------------------------------------------------------
# Schur basis
# ---------------------------------------------------------------------------


class SchurExpansion:
    """Finite integer combination of Schur polynomials in three variables.

    Values are treated as immutable.  Arithmetic returns new objects.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None):
        clean: Dict[Partition, int] = {}
        for lam, c in (terms or {}).items():
            _add_into(clean, make_partition(lam), int(c))
        self._terms = clean

    @classmethod
    def _from_clean(cls, terms: Dict[Partition, int]) -> "SchurExpansion":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def one(cls) -> "SchurExpansion":
        return cls._from_clean({(0, 0, 0): 1})

    @classmethod
    def s(cls, *parts: int, coeff: int = 1) -> "SchurExpansion":
        """The single term ``coeff * s_parts``."""
        return cls({make_partition(parts): coeff})

    @property
    def terms(self) -> Dict[Partition, int]:
        return dict(self._terms)

    def coeff(self, *parts: int) -> int:
        return self._terms.get(make_partition(parts), 0)

    def items(self):
        return self._terms.items()

    def degrees(self) -> set:
        return {sum(lam) for lam in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, SchurExpansion):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        acc = dict(self._terms)
        for lam, c in other._terms.items():
            _add_into(acc, lam, c)
        return SchurExpansion._from_clean(acc)

    def __neg__(self) -> "SchurExpansion":
        return SchurExpansion._from_clean({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "SchurExpansion") -> "SchurExpansion":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SchurExpansion):
            return schur_mul(self, other)
        if isinstance(other, int):
            if other == 0:
                return SchurExpansion()
            return SchurExpansion._from_clean(
                {k: c * other for k, c in self._terms.items()}
            )
        return NotImplemented

    __rmul__ = __mul__

    def sorted_terms(self):
        """Terms by descending lexicographic partition."""
        return sorted(self._terms.items(), reverse=True)

    def __str__(self) -> str:
        return render_text(self)

    def __repr__(self) -> str:
        return f"SchurExpansion({render_text(self)})"


def render_text(e: SchurExpansion) -> str:
    """``11*s[2] + 6*s[1,1]``; the constant term renders as ``c*s[0]``."""
    pieces = []
    for lam, c in e.sorted_terms():
        body = f"{abs(c)}*s{format_partition(lam)}"
        if not pieces:
            pieces.append(body if c > 0 else "-" + body)
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces) if pieces else "0"


def to_json(e: SchurExpansion) -> list:
    return [
        {"partition": [p for p in lam if p], "coeff": str(c)}
        for lam, c in e.sorted_terms()
    ]


def from_json(data: list) -> SchurExpansion:
    return SchurExpansion({tuple(t["partition"]): int(t["coeff"]) for t in data})


def _pieri_terms(lam: Partition, m: int):
    """Partitions nu with nu/lam a horizontal m-strip and at most three rows."""
    l1, l2, l3 = lam
    for a3 in range(min(m, l2 - l3) + 1):
        for a2 in range(min(m - a3, l1 - l2) + 1):
            yield (l1 + m - a2 - a3, l2 + a2, l3 + a3)


def pieri_mul(e: SchurExpansion, m: int) -> SchurExpansion:
    """Multiply by ``s_m = h_m`` using the Pieri rule."""
    if m < 1:
        raise ValueError("pieri_mul needs m >= 1")
    acc: Dict[Partition, int] = {}
    for lam, c in e.items():
        for nu in _pieri_terms(lam, m):
            _add_into(acc, nu, c)
    return SchurExpansion._from_clean(acc)


def lr_product(lam: Partition, mu: Partition) -> Dict[Partition, int]:
    """Littlewood-Richardson expansion of ``s_lam * s_mu``, rows > 3 dropped.

    Enumerates LR tableaux of shape nu/lam and content mu.  With at most three
    rows, row r of the skew tableau holds only letters <= r, so a tableau is
    fixed by the counts ``a_rj`` of letter j in row r.
    """
    l1, l2, l3 = lam
    m1, m2, m3 = mu
    out: Dict[Partition, int] = {}
    a33 = m3
    for a21 in range(min(m1, l1 - l2) + 1):
        for a31 in range(min(m1 - a21, l2 - l3) + 1):
            a11 = m1 - a21 - a31
            nu1 = l1 + a11
            for a22 in range(min(m2, a11) + 1):
                a32 = m2 - a22
                if a33 > a22 or a22 + a32 > a11 + a21:
                    continue
                nu2 = l2 + a21 + a22
                if nu2 > nu1:
                    continue
                if l3 + a31 + a32 > l2 + a21:
                    continue
                nu3 = l3 + a31 + a32 + a33
                if nu3 > nu2:
                    continue
                nu = (nu1, nu2, nu3)
                out[nu] = out.get(nu, 0) + 1
    return out


def schur_mul(a: SchurExpansion, b: SchurExpansion) -> SchurExpansion:
    acc: Dict[Partition, int] = {}
    for mu, cb in b.items():
        if mu == (0, 0, 0):
            for lam, ca in a.items():
                _add_into(acc, lam, ca * cb)
            continue
        if mu[1] == 0:
            for lam, ca in a.items():
                for nu in _pieri_terms(lam, mu[0]):
                    _add_into(acc, nu, ca * cb)
            continue
        for lam, ca in a.items():
            for nu, k in lr_product(lam, mu).items():
                _add_into(acc, nu, ca * cb * k)
    return SchurExpansion._from_clean(acc)


# ---------------------------------------------------------------------------
# Monomial form
# ---------------------------------------------------------------------------


class SymPoly3:
    """Polynomial in x1, x2, x3 stored as ``{(a, b, c): coeff}``.

    Intended for symmetric polynomials; :meth:`is_symmetric` checks it.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponent, int] | None = None):
        clean: Dict[Exponent, int] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(x) for x in exp)
            if len(exp) != 3 or min(exp) < 0:
                raise ValueError(f"bad exponent {exp}")
            _add_into(clean, exp, int(c))
        self._terms = clean

    @classmethod
    def _from_clean(cls, terms: Dict[Exponent, int]) -> "SymPoly3":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def constant(cls, c: int) -> "SymPoly3":
        return cls({(0, 0, 0): c})

    @classmethod
    def linear(cls, c1: int, c2: int, c3: int) -> "SymPoly3":
        return cls({(1, 0, 0): c1, (0, 1, 0): c2, (0, 0, 1): c3})

    @property
    def terms(self) -> Dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, SymPoly3):
            return self._terms == other._terms
        return NotImplemented

    def __add__(self, other: "SymPoly3") -> "SymPoly3":
        acc = dict(self._terms)
        for k, c in other._terms.items():
            _add_into(acc, k, c)
        return SymPoly3._from_clean(acc)

    def __neg__(self) -> "SymPoly3":
        return SymPoly3._from_clean({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "SymPoly3") -> "SymPoly3":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return SymPoly3()
            return SymPoly3._from_clean({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, SymPoly3):
            return NotImplemented
        acc: Dict[Exponent, int] = {}
        for (a1, b1, c1), x in self._terms.items():
            for (a2, b2, c2), y in other._terms.items():
                _add_into(acc, (a1 + a2, b1 + b2, c1 + c2), x * y)
        return SymPoly3._from_clean(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SymPoly3":
        out = SymPoly3.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def is_symmetric(self) -> bool:
        for exp, c in self._terms.items():
            for perm in permutations(exp):
                if self._terms.get(perm, 0) != c:
                    return False
        return True

    def __repr__(self) -> str:
        return f"SymPoly3({dict(sorted(self._terms.items(), reverse=True))})"


@lru_cache(maxsize=4096)
def _schur_monomials(lam: Partition) -> Tuple[Tuple[Exponent, int], ...]:
    # Gelfand-Tsetlin patterns lam >= (p1, p2) >= (q,) give the SSYT with
    # entries in {1,2,3}: x1^q x2^(p1+p2-q) x3^(|lam|-p1-p2).
    l1, l2, l3 = lam
    total = l1 + l2 + l3
    acc: Dict[Exponent, int] = {}
    for p1 in range(l2, l1 + 1):
        for p2 in range(l3, l2 + 1):
            for q in range(p2, p1 + 1):
                exp = (q, p1 + p2 - q, total - p1 - p2)
                acc[exp] = acc.get(exp, 0) + 1
    return tuple(acc.items())


def schur_polynomial(lam: Iterable[int]) -> SymPoly3:
    return SymPoly3._from_clean(dict(_schur_monomials(make_partition(lam))))


def to_monomial_form(e: SchurExpansion) -> SymPoly3:
    acc: Dict[Exponent, int] = {}
    for lam, c in e.items():
        for exp, k in _schur_monomials(lam):
            _add_into(acc, exp, c * k)
    return SymPoly3._from_clean(acc)


def decompose_to_schur(p: SymPoly3) -> SchurExpansion:
    """Inverse of :func:`to_monomial_form` by leading-term subtraction.

    Raises ``ValueError`` when ``p`` is not symmetric.
    """
    rest = dict(p.items())
    out: Dict[Partition, int] = {}
    while rest:
        lead = max(rest)
        if not lead[0] >= lead[1] >= lead[2]:
            raise ValueError(f"polynomial is not symmetric (leading exponent {lead})")
        c = rest[lead]
        out[lead] = c
        for exp, k in _schur_monomials(lead):
            _add_into(rest, exp, -c * k)
    return SchurExpansion._from_clean(out)


def elementary(m: int) -> SchurExpansion:
    """``e_m`` in three variables (zero for m > 3)."""
    if m > 3:
        return SchurExpansion()
    return SchurExpansion.s(*([1] * m))


def complete(m: int) -> SchurExpansion:
    """``h_m = s_m``."""
    return SchurExpansion.s(m)
