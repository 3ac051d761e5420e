"""Exact sums of rational multiples of square roots.

Every edge weight used by the indices here is ``integer * sqrt(integer)``,
so index totals live in the Q-span of square roots of square-free integers.
Those roots are linearly independent over Q, which makes comparison of
normalized term maps an exact equality test.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping

from .errors import InvalidParameterError

__all__ = ["Radical", "RadicalSum", "normalize_radical", "square_free_split"]

RationalLike = int | Fraction


@lru_cache(maxsize=None)
def square_free_split(radicand: int) -> tuple[int, int]:
    """Return ``(k, r)`` with ``radicand == k*k*r`` and ``r`` square-free.

    Trial division; radicands in this package stay in the low millions.
    """
    if radicand < 1:
        raise InvalidParameterError(f"radicand must be a positive integer, got {radicand}")
    k, r = 1, radicand
    p = 2
    while p * p <= r:
        while r % (p * p) == 0:
            r //= p * p
            k *= p
        p += 1 if p == 2 else 2
    return k, r


@dataclass(frozen=True)
class Radical:
    """A single term ``coef * sqrt(radicand)``."""

    coef: Fraction
    radicand: int

    def __float__(self) -> float:
        return float(self.coef) * math.sqrt(self.radicand)


def normalize_radical(coef: RationalLike, radicand: int) -> Radical:
    """Pull square factors out of the radicand: ``(3, 50) -> 15*sqrt(2)``."""
    if isinstance(radicand, bool) or not isinstance(radicand, int):
        raise InvalidParameterError(f"radicand must be an int, got {radicand!r}")
    k, r = square_free_split(radicand)
    return Radical(Fraction(coef) * k, r)


class RadicalSum:
    """Immutable value ``sum(q_i * sqrt(n_i))`` with distinct square-free ``n_i``.

    Supports ``+``, ``-``, unary ``-`` and multiplication by a rational
    scalar. Products of two radical sums are deliberately unsupported.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, RationalLike] | None = None):
        acc: dict[int, Fraction] = {}
        for radicand, coef in (terms or {}).items():
            term = normalize_radical(coef, radicand)
            acc[term.radicand] = acc.get(term.radicand, Fraction(0)) + term.coef
        self._terms: dict[int, Fraction] = {n: q for n, q in sorted(acc.items()) if q != 0}
        self._hash: int | None = None

    @classmethod
    def _trusted(cls, terms: dict[int, Fraction]) -> RadicalSum:
        # terms already square-free and nonzero
        obj = cls.__new__(cls)
        obj._terms = dict(sorted(terms.items()))
        obj._hash = None
        return obj

    @classmethod
    def of(cls, term: Radical) -> RadicalSum:
        return cls({term.radicand: term.coef})

    @classmethod
    def sum(cls, items: Iterable[RadicalSum | Radical]) -> RadicalSum:
        # integer coefficients dominate (every edge weight is one); keep them
        # out of Fraction arithmetic until the end
        ints: dict[int, int] = {}
        fracs: dict[int, Fraction] = {}
        for item in items:
            pairs = [(item.radicand, item.coef)] if isinstance(item, Radical) else item._terms.items()
            for n, q in pairs:
                if q.denominator == 1:
                    ints[n] = ints.get(n, 0) + q.numerator
                else:
                    fracs[n] = fracs.get(n, Fraction(0)) + q
        for n, i in ints.items():
            fracs[n] = fracs.get(n, Fraction(0)) + i
        return cls._trusted({n: q for n, q in fracs.items() if q != 0})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: object) -> RadicalSum:
        if isinstance(other, (int, Rational)):
            other = RadicalSum({1: Fraction(other)})
        if not isinstance(other, RadicalSum):
            return NotImplemented
        return RadicalSum.sum((self, other))

    __radd__ = __add__

    def __neg__(self) -> RadicalSum:
        return RadicalSum._trusted({n: -q for n, q in self._terms.items()})

    def __sub__(self, other: object) -> RadicalSum:
        if isinstance(other, (int, Rational)):
            other = RadicalSum({1: Fraction(other)})
        if not isinstance(other, RadicalSum):
            return NotImplemented
        return self + (-other)

    def __mul__(self, q: object) -> RadicalSum:
        if isinstance(q, bool) or not isinstance(q, (int, Rational)):
            return NotImplemented
        q = Fraction(q)
        if q == 0:
            return RadicalSum()
        return RadicalSum._trusted({n: c * q for n, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Rational)):
            other = RadicalSum({1: Fraction(other)})
        if not isinstance(other, RadicalSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __float__(self) -> float:
        return math.fsum(float(q) * math.sqrt(n) for n, q in self._terms.items())

    def __repr__(self) -> str:
        return f"RadicalSum({str(self)!r})"

    def __str__(self) -> str:
        """Render as ``q1*sqrt(n1) + q2*sqrt(n2)``, radicands ascending.

        The ``sqrt(1)`` term prints as a bare rational.
        """
        if not self._terms:
            return "0"
        out = []
        for i, (n, q) in enumerate(self._terms.items()):
            mag = abs(q)
            body = str(mag) if n == 1 else f"{mag}*sqrt({n})"
            if i == 0:
                out.append(body if q > 0 else f"-{body}")
            else:
                out.append(("+ " if q > 0 else "- ") + body)
        return " ".join(out)
