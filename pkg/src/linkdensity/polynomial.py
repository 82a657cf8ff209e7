"""Exact Laurent polynomials in one variable with integer coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPolynomial:
    """Sparse map exponent -> nonzero int. Immutable by convention."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int:
        return min(self._terms)

    def max_degree(self) -> int:
        return max(self._terms)

    def breadth(self) -> int:
        if not self._terms:
            raise ValueError("breadth of the zero polynomial is undefined")
        return self.max_degree() - self.min_degree()

    def __getitem__(self, e: int) -> int:
        return self._terms.get(e, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other) -> "LaurentPolynomial":
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPolynomial(acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPolynomial":
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self._terms.items()})
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPolynomial":
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial inverse needs a unit coefficient")
            return LaurentPolynomial({-e * (-k): c ** (-k)})
        out = LaurentPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LaurentPolynomial":
        return LaurentPolynomial({e + k: c for e, c in self._terms.items()})

    def substitute_inverse(self) -> "LaurentPolynomial":
        """A -> A^-1."""
        return LaurentPolynomial({-e: c for e, c in self._terms.items()})

    def evaluate(self, x):
        """Numeric evaluation; ``x`` may be any field element with ``**``."""
        return sum((c * x**e for e, c in self._terms.items()), 0 * x)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self._terms!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms):
            parts.append(f"{self._terms[e]}*A^{e}")
        return " + ".join(parts).replace("+ -", "- ")
