"""Finite-dimensional Hom-algebras over the rationals.

An algebra of dimension ``n`` is given by its structure constants
``structure[i][j] = e_i * e_j`` and a twisting map whose matrix acts on
column vectors, so ``twist[i][j]`` is the i-th coordinate of ``alpha(e_j)``.
Basis indices are 0-based throughout the Python API; reports and the CLI
render them 1-based as ``e1, ..., en``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from typing import Any, ClassVar, Iterable, Mapping, Sequence

Scalar = Fraction
Matrix = tuple[tuple[Fraction, ...], ...]

_RATIONAL = re.compile(r"^\s*(-?\d+)(?:/(\d+))?\s*$")


class DimensionError(ValueError):
    pass


class NotMultiplicativeError(ValueError):
    """Raised when a twist fails ``alpha(x y) = alpha(x) alpha(y)``."""

    def __init__(self, report: "CheckReport"):
        self.report = report
        i, j = report.witness.data
        super().__init__(
            f"twist is not multiplicative: alpha(e{i + 1} e{j + 1}) != "
            f"alpha(e{i + 1}) alpha(e{j + 1})"
        )


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` exactly; anything else is rejected."""
    if not isinstance(text, str):
        raise ValueError(f"invalid rational literal {text!r}: expected a string")
    m = _RATIONAL.match(text)
    if m is None:
        raise ValueError(f"invalid rational literal {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"invalid rational literal {text!r}: zero denominator")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def as_scalar(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError("floating point values are not exact scalars; use Fraction or 'p/q'")
    return Fraction(value)


# -- matrices -----------------------------------------------------------------

def as_matrix(rows: Iterable[Iterable[Any]]) -> Matrix:
    return tuple(tuple(as_scalar(c) for c in row) for row in rows)


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def zero_matrix(n: int) -> Matrix:
    return tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(n))


def diagonal_matrix(entries: Sequence[Any]) -> Matrix:
    n = len(entries)
    return tuple(
        tuple(as_scalar(entries[i]) if i == j else Fraction(0) for j in range(n))
        for i in range(n)
    )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, m = len(b), len(b[0]) if b else 0
    if any(len(row) != n for row in a):
        raise DimensionError(f"cannot multiply matrices: inner dimensions differ")
    return tuple(
        tuple(sum((row[k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(m))
        for row in a
    )


def mat_pow(a: Matrix, m: int) -> Matrix:
    if m < 0:
        raise ValueError(f"matrix power must be non-negative, got {m}")
    result = identity_matrix(len(a))
    base = a
    while m:
        if m & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        m >>= 1
    return result


def _check_square(mat: Matrix, n: int, what: str) -> None:
    if len(mat) != n or any(len(row) != n for row in mat):
        raise DimensionError(f"{what} must be {n}x{n}")


# -- vectors ------------------------------------------------------------------

@dataclass(frozen=True)
class Vector:
    """Coordinate vector over the basis; subclasses fix the coefficient ring."""

    coords: tuple

    zero_coeff: ClassVar[Any] = Fraction(0)

    @property
    def dim(self) -> int:
        return len(self.coords)

    @classmethod
    def zero(cls, n: int):
        return cls(tuple(cls.zero_coeff for _ in range(n)))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def _same_dim(self, other: "Vector") -> None:
        if other.dim != self.dim:
            raise DimensionError(f"expected dimension {self.dim}, got {other.dim}")

    def __add__(self, other):
        self._same_dim(other)
        return type(self)(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._same_dim(other)
        return type(self)(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return type(self)(tuple(-a for a in self.coords))

    def __rmul__(self, scalar):
        s = as_scalar(scalar)
        return type(self)(tuple(c * s for c in self.coords))

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)


@dataclass(frozen=True)
class Element(Vector):
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(as_scalar(c) for c in self.coords))

    @classmethod
    def of(cls, *coords: Any) -> "Element":
        return cls(tuple(coords))

    @classmethod
    def basis(cls, n: int, i: int) -> "Element":
        if not 0 <= i < n:
            raise IndexError(f"basis index {i} out of range for dimension {n}")
        return cls(tuple(Fraction(int(k == i)) for k in range(n)))

    def __str__(self) -> str:
        return format_combination(self.coords)


def format_combination(coords: Sequence[Fraction], names: Sequence[str] | None = None) -> str:
    """Render ``(0, 4, -1)`` as ``4e2 - e3``."""
    terms = []
    for k, c in enumerate(coords):
        if c == 0:
            continue
        name = names[k] if names else f"e{k + 1}"
        mag = abs(c)
        coef = "" if mag == 1 else (f"{mag}" if mag.denominator == 1 else f"({mag})")
        sign = "-" if c < 0 else "+"
        terms.append((sign, f"{coef}{name}"))
    if not terms:
        return "0"
    first = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    return " ".join([first] + [f"{s} {t}" for s, t in terms[1:]])


def mat_vec(mat: Matrix, u: Vector) -> Vector:
    n = len(mat)
    if u.dim != n:
        raise DimensionError(f"expected dimension {n}, got {u.dim}")
    zero = type(u).zero_coeff
    out = []
    for row in mat:
        acc = zero
        for a, c in zip(row, u.coords):
            if a != 0 and c != 0:
                acc = acc + c * a
        out.append(acc)
    return type(u)(tuple(out))


def bilinear(terms: Sequence[tuple[int, int, int, Fraction]], n: int, u: Vector, v: Vector) -> Vector:
    """Evaluate a bilinear map given as sparse ``(i, j, k, c)`` constants.

    Works over any coefficient ring the vector class carries, which is how
    generic (polynomial) elements share code with rational ones.
    """
    if u.dim != n:
        raise DimensionError(f"expected dimension {n}, got {u.dim}")
    if v.dim != n:
        raise DimensionError(f"expected dimension {n}, got {v.dim}")
    if type(u) is not type(v):
        raise TypeError(f"cannot multiply {type(u).__name__} by {type(v).__name__}")
    out = [type(u).zero_coeff] * n
    cache: dict[tuple[int, int], Any] = {}
    uc, vc = u.coords, v.coords
    for i, j, k, c in terms:
        if uc[i] == 0 or vc[j] == 0:
            continue
        w = cache.get((i, j))
        if w is None:
            w = cache[(i, j)] = uc[i] * vc[j]
        out[k] = out[k] + w * c
    return type(u)(tuple(out))


def sparse_terms(tensor: Sequence[Sequence[Vector]]) -> tuple[tuple[int, int, int, Fraction], ...]:
    return tuple(
        (i, j, k, c)
        for i, row in enumerate(tensor)
        for j, val in enumerate(row)
        for k, c in enumerate(val.coords)
        if c != 0
    )


# -- reports ------------------------------------------------------------------

@dataclass(frozen=True)
class Witness:
    """Where an identity fails: basis indices, or a rational point."""

    kind: str  # "basis" or "point"
    data: tuple

    def __str__(self) -> str:
        if self.kind == "basis":
            return "(" + ", ".join(f"e{i + 1}" for i in self.data) + ")"
        return format_combination(self.data)


@dataclass(frozen=True)
class CheckReport:
    identity: str
    holds: bool = True
    witness: Witness | None = None
    residual: Element | None = None
    detail: str | None = None

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("a report holds exactly when it carries no witness")

    def __bool__(self) -> bool:
        return self.holds

    def __str__(self) -> str:
        if self.holds:
            return f"{self.identity}: holds"
        where = f"x = {self.witness}" if self.witness.kind == "point" else f"{self.witness}"
        text = f"{self.identity}: FAILS, witness {where}"
        if self.detail:
            text += f" [{self.detail}]"
        if self.residual is not None:
            text += f", residual {self.residual}"
        return text


def check_basis(identity: str, n: int, arity: int, residual) -> CheckReport:
    """Evaluate ``residual`` on every basis tuple in lexicographic order.

    The first nonzero residual becomes the witness, so reports are
    deterministic.
    """
    for idx in iproduct(range(n), repeat=arity):
        r = residual(*idx)
        if not r.is_zero():
            return CheckReport(identity, False, Witness("basis", idx), r)
    return CheckReport(identity, True)


# -- the algebra --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class HomAlgebra:
    """A Hom-algebra ``(A, *, alpha)`` with exact structure constants.

    The default constructor insists on multiplicativity; use
    :meth:`unchecked` to build deliberately invalid instances.
    """

    dim: int
    structure: tuple[tuple[Element, ...], ...]
    twist: Matrix
    name: str | None = None
    basis_names: tuple[str, ...] | None = None
    check: bool = field(default=True, repr=False)
    _terms: tuple = field(init=False, repr=False)

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise DimensionError(f"dimension must be positive, got {n}")
        structure = tuple(
            tuple(v if isinstance(v, Element) else Element(tuple(v)) for v in row)
            for row in self.structure
        )
        if len(structure) != n or any(len(row) != n for row in structure):
            raise DimensionError(f"structure tensor must be {n}x{n}x{n}")
        for row in structure:
            for v in row:
                if v.dim != n:
                    raise DimensionError(f"structure constants must have length {n}, got {v.dim}")
        twist = as_matrix(self.twist)
        _check_square(twist, n, "twist")
        if self.basis_names is not None and len(self.basis_names) != n:
            raise DimensionError(f"expected {n} basis names, got {len(self.basis_names)}")
        object.__setattr__(self, "structure", structure)
        object.__setattr__(self, "twist", twist)
        object.__setattr__(self, "_terms", sparse_terms(structure))
        if self.check:
            report = check_multiplicative(self)
            if not report.holds:
                raise NotMultiplicativeError(report)

    # construction helpers

    @classmethod
    def from_products(
        cls,
        dim: int,
        products: Mapping[tuple[int, int], Sequence[Any]],
        twist: Iterable[Iterable[Any]] | None = None,
        name: str | None = None,
        check: bool = True,
    ) -> "HomAlgebra":
        """Build from the nonzero products ``{(i, j): coords of e_i e_j}``."""
        rows = [[Element.zero(dim) for _ in range(dim)] for _ in range(dim)]
        for (i, j), value in products.items():
            rows[i][j] = Element(tuple(value))
        return cls(
            dim,
            tuple(tuple(r) for r in rows),
            identity_matrix(dim) if twist is None else as_matrix(twist),
            name=name,
            check=check,
        )

    @classmethod
    def unchecked(cls, dim, structure, twist, name=None, basis_names=None) -> "HomAlgebra":
        return cls(dim, structure, twist, name=name, basis_names=basis_names, check=False)

    def with_twist(self, twist, check: bool = True, name: str | None = None) -> "HomAlgebra":
        return HomAlgebra(self.dim, self.structure, as_matrix(twist),
                          name=self.name if name is None else name,
                          basis_names=self.basis_names, check=check)

    def renamed(self, name: str) -> "HomAlgebra":
        return HomAlgebra(self.dim, self.structure, self.twist, name=name,
                          basis_names=self.basis_names, check=False)

    # equality ignores the construction flag

    def _key(self):
        return (self.dim, self.structure, self.twist, self.name, self.basis_names)

    def __eq__(self, other):
        if not isinstance(other, HomAlgebra):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    # evaluation

    @property
    def twist_is_identity(self) -> bool:
        return self.twist == identity_matrix(self.dim)

    def basis(self, i: int) -> Element:
        return Element.basis(self.dim, i)

    def product(self, u: Vector, v: Vector) -> Vector:
        return bilinear(self._terms, self.dim, u, v)

    def apply_twist(self, u: Vector, m: int = 1) -> Vector:
        if u.dim != self.dim:
            raise DimensionError(f"expected dimension {self.dim}, got {u.dim}")
        if m == 0:
            return u
        return mat_vec(self.twist_power(m), u)

    def twist_power(self, m: int) -> Matrix:
        return _cached_pow(self.twist, m)

    def left_mul(self, z: Element) -> Matrix:
        """Matrix of ``u -> z u``."""
        cols = [self.product(z, self.basis(j)).coords for j in range(self.dim)]
        return tuple(tuple(cols[j][i] for j in range(self.dim)) for i in range(self.dim))

    def right_mul(self, y: Element) -> Matrix:
        """Matrix of ``u -> u y``."""
        cols = [self.product(self.basis(j), y).coords for j in range(self.dim)]
        return tuple(tuple(cols[j][i] for j in range(self.dim)) for i in range(self.dim))

    def nonzero_products(self) -> list[tuple[int, int, Element]]:
        return [
            (i, j, self.structure[i][j])
            for i in range(self.dim)
            for j in range(self.dim)
            if not self.structure[i][j].is_zero()
        ]

    def __str__(self) -> str:
        label = self.name or f"HomAlgebra(dim={self.dim})"
        prods = ", ".join(
            f"e{i + 1}e{j + 1} = {v}" for i, j, v in self.nonzero_products()
        ) or "zero product"
        return f"{label}: {prods}"


@lru_cache(maxsize=256)
def _cached_pow(twist: Matrix, m: int) -> Matrix:
    return mat_pow(twist, m)


def product(A: HomAlgebra, u: Vector, v: Vector) -> Vector:
    return A.product(u, v)


def apply_twist(A: HomAlgebra, u: Vector) -> Vector:
    return A.apply_twist(u)


def twist_power(A: HomAlgebra, m: int) -> Matrix:
    return A.twist_power(m)


def left_mul(A: HomAlgebra, z: Element) -> Matrix:
    return A.left_mul(z)


def right_mul(A: HomAlgebra, y: Element) -> Matrix:
    return A.right_mul(y)


def check_multiplicative(A: HomAlgebra) -> CheckReport:
    """Decide ``alpha(x y) = alpha(x) alpha(y)``; basis pairs suffice by bilinearity."""
    e = [A.basis(i) for i in range(A.dim)]
    te = [A.apply_twist(v) for v in e]

    def residual(i, j):
        return A.apply_twist(A.structure[i][j]) - A.product(te[i], te[j])

    return check_basis("multiplicative", A.dim, 2, residual)


def zero_algebra(n: int, twist=None, name: str | None = None) -> HomAlgebra:
    return HomAlgebra.from_products(n, {}, twist=twist, name=name or f"Zero{n}")
