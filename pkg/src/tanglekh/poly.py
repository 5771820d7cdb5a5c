"""Laurent polynomials in two variables with integer coefficients.

``x`` carries the homological degree and ``y`` the quantum degree.  The same
class doubles as the group algebra Z[Z x Z]: a monomial ``x^k y^q`` is the
bigrading ``(k, q)`` and multiplication adds bigradings.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping

__all__ = ["LaurentPoly", "BigradingMultiset", "parse_poly"]


class LaurentPoly:
    """Finitely supported map ``(i, j) -> int`` read as sum c x^i y^j."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable | None = None):
        acc: dict[tuple[int, int], int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for (i, j), c in items:
                key = (int(i), int(j))
                acc[key] = acc.get(key, 0) + int(c)
        self._terms = {k: c for k, c in acc.items() if c != 0}

    @classmethod
    def monomial(cls, i: int = 0, j: int = 0, coeff: int = 1) -> "LaurentPoly":
        return cls({(i, j): coeff})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls.monomial(0, 0)

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.monomial(0, 0, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.monomial(0, 0, other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({k: c * other for k, c in self._terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._terms) != 1 or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError("only unit monomials have negative powers")
            ((i, j), c), = self._terms.items()
            return LaurentPoly.monomial(i * n, j * n, c ** (-n))
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, di: int, dj: int) -> "LaurentPoly":
        return LaurentPoly({(i + di, j + dj): c for (i, j), c in self._terms.items()})

    def substitute_x(self, value: int) -> "LaurentPoly":
        """Set ``x = value`` (must be +1 or -1) and collect terms in ``y``."""
        if value not in (1, -1):
            raise ValueError("x can only be specialised to +1 or -1")
        out: dict[tuple[int, int], int] = {}
        for (i, j), c in self._terms.items():
            sgn = value ** (i % 2)
            out[(0, j)] = out.get((0, j), 0) + sgn * c
        return LaurentPoly(out)

    def evaluate(self, x, y):
        return sum(c * x**i * y**j for (i, j), c in self._terms.items())

    def min_degree(self, var: str = "x") -> int:
        idx = 0 if var == "x" else 1
        return min(k[idx] for k in self._terms)

    def max_degree(self, var: str = "x") -> int:
        idx = 0 if var == "x" else 1
        return max(k[idx] for k in self._terms)

    def has_nonnegative_coefficients(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def to_json(self) -> list[list[int]]:
        return [[i, j, c] for (i, j), c in self.items()]

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        return cls({(i, j): c for i, j, c in data})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for n, ((i, j), c) in enumerate(self.items()):
            mono = _monomial_str(i, j)
            mag = abs(c)
            body = mono if mag == 1 and mono else f"{mag}{mono}"
            if n == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


def _monomial_str(i: int, j: int) -> str:
    out = ""
    for name, e in (("x", i), ("y", j)):
        if e == 0:
            continue
        out += name if e == 1 else f"{name}^{e}"
    return out


_TERM_RE = re.compile(r"([+-]?)(\d*)((?:[xy](?:\^-?\d+)?)*)")
_FACTOR_RE = re.compile(r"([xy])(?:\^(-?\d+))?")


def parse_poly(text: str) -> LaurentPoly:
    """Parse ``"x^-3y^-9 + 2y^3"``; TeX braces ``x^{-3}`` are accepted too."""
    s = re.sub(r"\s+", "", text).replace("{", "").replace("}", "").replace("*", "")
    if s in ("", "0"):
        return LaurentPoly()
    # split before every sign that is not part of an exponent
    pieces = re.split(r"(?<!\^)(?=[+-])", s)
    acc: dict[tuple[int, int], int] = {}
    for piece in pieces:
        if not piece:
            continue
        m = _TERM_RE.fullmatch(piece)
        if m is None or (not m.group(2) and not m.group(3)):
            raise ValueError(f"cannot parse term {piece!r} in {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        i = j = 0
        for var, exp in _FACTOR_RE.findall(m.group(3)):
            e = int(exp) if exp else 1
            if var == "x":
                i += e
            else:
                j += e
        acc[(i, j)] = acc.get((i, j), 0) + sign * coeff
    return LaurentPoly(acc)


class BigradingMultiset:
    """Multiset of bigradings ``(k, q)``; an element of N[Z x Z].

    ``(k, q) * (k', q') = (k + k', q + q')`` extends bilinearly, so products of
    multisets convolve their supports.
    """

    __slots__ = ("_counts",)

    def __init__(self, counts: Mapping[tuple[int, int], int] | Iterable | None = None):
        acc: dict[tuple[int, int], int] = {}
        if counts is not None:
            items = counts.items() if isinstance(counts, Mapping) else counts
            for (k, q), m in items:
                if m < 0:
                    raise ValueError("multiplicities must be nonnegative")
                if m:
                    acc[(k, q)] = acc.get((k, q), 0) + m
        self._counts = acc

    @classmethod
    def of(cls, *gradings: tuple[int, int]) -> "BigradingMultiset":
        out: dict[tuple[int, int], int] = {}
        for g in gradings:
            out[g] = out.get(g, 0) + 1
        return cls(out)

    @classmethod
    def unit(cls) -> "BigradingMultiset":
        return cls({(0, 0): 1})

    def __mul__(self, other: "BigradingMultiset") -> "BigradingMultiset":
        out: dict[tuple[int, int], int] = {}
        for (k1, q1), m1 in self._counts.items():
            for (k2, q2), m2 in other._counts.items():
                key = (k1 + k2, q1 + q2)
                out[key] = out.get(key, 0) + m1 * m2
        return BigradingMultiset(out)

    def __add__(self, other: "BigradingMultiset") -> "BigradingMultiset":
        out = dict(self._counts)
        for key, m in other._counts.items():
            out[key] = out.get(key, 0) + m
        return BigradingMultiset(out)

    def __pow__(self, n: int) -> "BigradingMultiset":
        if n < 0:
            raise ValueError("negative powers are not defined for multisets")
        out = BigradingMultiset.unit()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, BigradingMultiset):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self) -> int:
        return hash(frozenset(self._counts.items()))

    def __len__(self) -> int:
        return sum(self._counts.values())

    def multiplicity(self, k: int, q: int) -> int:
        return self._counts.get((k, q), 0)

    def items(self):
        return sorted(self._counts.items())

    def to_poly(self) -> LaurentPoly:
        return LaurentPoly(self._counts)

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "BigradingMultiset":
        return cls(p.terms)

    def __str__(self) -> str:
        if not self._counts:
            return "0"
        return " + ".join(
            (f"{m}" if m > 1 else "") + f"({k},{q})" for (k, q), m in self.items()
        )

    def __repr__(self) -> str:
        return f"BigradingMultiset({str(self)!r})"
