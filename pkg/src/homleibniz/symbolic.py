"""Exact multivariate polynomials over Q and generic algebra elements.

A statement "for all x in A" about a polynomial expression in the
coordinates of ``x`` is decided by expanding it at the generic element
``(x1, ..., xn)``: over a field of characteristic zero a polynomial
vanishes on all of Q^n exactly when all of its coefficients vanish.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import ClassVar, Mapping, Sequence

from .algebra import Element, HomAlgebra, Vector, as_scalar

Monomial = tuple[int, ...]


class Poly:
    """Sparse polynomial: a map from exponent vectors to nonzero coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = as_scalar(c)
                if c != 0:
                    clean[tuple(mono)] = c
        self.terms: dict[Monomial, Fraction] = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Poly":
        return cls._raw({tuple(int(k == i) for k in range(nvars)): Fraction(1)})

    @classmethod
    def constant(cls, nvars: int, c) -> "Poly":
        return cls({(0,) * nvars: c})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((m[i] for m in self.terms), default=0)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {sum(m) for m in self.terms}
        if not degs:
            return True
        return len(degs) == 1 and (d is None or degs == {d})

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return len(self.terms) == 1 and all(sum(m) == 0 and c == other
                                                for m, c in self.terms.items())
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(out)

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Poly):
            out: dict[Monomial, Fraction] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = tuple(a + b for a, b in zip(m1, m2))
                    s = out.get(m, 0) + c1 * c2
                    if s:
                        out[m] = s
                    else:
                        out.pop(m, None)
            return Poly._raw(out)
        c = as_scalar(other)
        if c == 0:
            return Poly._raw({})
        return Poly._raw({m: v * c for m, v in self.terms.items()})

    __rmul__ = __mul__

    def __call__(self, point: Sequence) -> Fraction:
        """Evaluate at a rational point."""
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= x ** e
            total += v
        return total

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            mono = "*".join(
                f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


_ZERO = Poly()


@dataclass(frozen=True)
class PolyElement(Vector):
    """Element whose coordinates are polynomials in ``x1..xn``."""

    coords: tuple[Poly, ...]

    zero_coeff: ClassVar[Poly] = _ZERO

    def evaluate(self, point: Sequence) -> Element:
        return Element(tuple(p(point) for p in self.coords))

    def degree(self) -> int:
        return max((p.degree() for p in self.coords), default=-1)

    def is_homogeneous(self, d: int) -> bool:
        return all(p.is_homogeneous(d) for p in self.coords)

    def __str__(self) -> str:
        return "(" + ", ".join(str(p) for p in self.coords) + ")"


def generic_element(A: HomAlgebra | int) -> PolyElement:
    n = A if isinstance(A, int) else A.dim
    return PolyElement(tuple(Poly.variable(n, i) for i in range(n)))


def lift(u: Element, nvars: int) -> PolyElement:
    """Embed a rational element as constant polynomials."""
    return PolyElement(tuple(Poly.constant(nvars, c) for c in u.coords))


def poly_product(A: HomAlgebra, u: PolyElement, v: PolyElement) -> PolyElement:
    return A.product(u, v)


def poly_twist(A: HomAlgebra, u: PolyElement, m: int = 1) -> PolyElement:
    if m < 0:
        raise ValueError(f"twist exponent must be non-negative, got {m}")
    return A.apply_twist(u, m)


def candidate_values(count: int) -> list[int]:
    """The first ``count`` of 0, 1, -1, 2, -2, ..."""
    out = [0]
    k = 1
    while len(out) < count:
        out.append(k)
        if len(out) < count:
            out.append(-k)
        k += 1
    return out[:count]


def zero_witness(u: PolyElement) -> Element | None:
    """Return None if ``u`` is identically zero, else a small integer point where it is not.

    Variable ``i`` ranges over the first ``deg_i + 1`` values of
    ``0, 1, -1, 2, ...``; a nonzero polynomial cannot vanish on such a grid,
    so the search always succeeds. Points are tried in lexicographic grid
    order, which makes witnesses deterministic.
    """
    live = [p for p in u.coords if not p.is_zero()]
    if not live:
        return None
    nvars = len(next(iter(live[0].terms)))
    grids = [candidate_values(max(p.degree_in(i) for p in live) + 1) for i in range(nvars)]
    for point in iproduct(*grids):
        pt = tuple(Fraction(v) for v in point)
        if any(p(pt) != 0 for p in live):
            return Element(pt)
    raise AssertionError("nonzero polynomial vanished on a full grid")


def is_zero(u: PolyElement) -> tuple[bool, Element | None]:
    w = zero_witness(u)
    return w is None, w
