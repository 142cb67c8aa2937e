"""Forward-mode dual numbers over exact rationals.

A :class:`Dual` carries a value and its gradient with respect to a fixed set
of parameters, so one evaluation yields a full Jacobian row.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Tuple


class Dual:
    __slots__ = ("val", "grad")

    def __init__(self, val, grad: Sequence = ()):
        self.val = Fraction(val)
        self.grad: Tuple[Fraction, ...] = tuple(Fraction(g) for g in grad)

    @classmethod
    def variables(cls, values: Sequence) -> list:
        """Independent variables: the i-th has unit gradient in slot i."""
        size = len(values)
        return [
            cls(v, [1 if j == i else 0 for j in range(size)]) for i, v in enumerate(values)
        ]

    @staticmethod
    def _lift(x, size: int) -> "Dual":
        if isinstance(x, Dual):
            return x
        return Dual(x, (0,) * size)

    def _combine(self, other, fn_val, fn_grad):
        other = Dual._lift(other, len(self.grad))
        if len(other.grad) != len(self.grad):
            if not other.grad:
                other = Dual(other.val, (0,) * len(self.grad))
            elif not self.grad:
                return Dual(self.val, (0,) * len(other.grad))._combine(other, fn_val, fn_grad)
            else:
                raise ValueError("gradient lengths differ")
        out = Dual.__new__(Dual)
        out.val = fn_val(self.val, other.val)
        out.grad = tuple(fn_grad(self.val, other.val, g, h) for g, h in zip(self.grad, other.grad))
        return out

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b, lambda a, b, g, h: g + h)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b, lambda a, b, g, h: g - h)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        out = Dual.__new__(Dual)
        out.val = -self.val
        out.grad = tuple(-g for g in self.grad)
        return out

    def __mul__(self, other):
        return self._combine(other, lambda a, b: a * b, lambda a, b, g, h: a * h + b * g)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Dual._lift(other, len(self.grad))
        if other.val == 0:
            raise ZeroDivisionError("dual division by a number with zero value part")
        return self._combine(
            other, lambda a, b: a / b, lambda a, b, g, h: (g * b - a * h) / (b * b)
        )

    def __rtruediv__(self, other):
        return Dual._lift(other, len(self.grad)) / self

    def __pow__(self, k: int):
        out = Dual(1, (0,) * len(self.grad))
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Dual):
            return self.val == other.val and self.grad == other.grad
        return self.val == other and not any(self.grad)

    def __hash__(self):
        return hash((self.val, self.grad))

    def __repr__(self):
        return f"Dual({self.val}, {list(map(str, self.grad))})"


def value(x) -> Fraction:
    return x.val if isinstance(x, Dual) else Fraction(x)
