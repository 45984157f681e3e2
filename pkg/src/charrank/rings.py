"""Truncated mod-2 cohomology rings of Stiefel manifolds V_k(F^n).

The ring is presented by a simple system of generators: squarefree monomials
in the generators form the additive basis, and multiplication rewrites any
repeated factor through the generator's square rule. For F = R the generators
are a_{n-k}, ..., a_{n-1} with deg(a_i) = i and a_i^2 = a_{2i} when
2i <= n-1 (zero otherwise). For F = C and F = H the ring is the exterior
presentation on generators y_j of degree cj-1, j = n-k+1, ..., n, with all
squares zero; this matches every group dimension forced by the connectivity
of these manifolds, which is verified at construction time.
"""

from __future__ import annotations

import enum
from bisect import insort
from dataclasses import dataclass

from .gf2 import CoordVector

Monomial = tuple[int, ...]
"""Strictly increasing tuple of generator labels; () is the unit."""


class FieldTag(enum.Enum):
    """Base (skew-)field of the Stiefel manifold, with its real dimension c."""

    REAL = "R"
    COMPLEX = "C"
    QUATERNION = "H"

    @property
    def c(self) -> int:
        return _FIELD_C[self]


_FIELD_C = {FieldTag.REAL: 1, FieldTag.COMPLEX: 2, FieldTag.QUATERNION: 4}

REAL = FieldTag.REAL
COMPLEX = FieldTag.COMPLEX
QUATERNION = FieldTag.QUATERNION


@dataclass(frozen=True)
class GeneratorSpec:
    """One ring generator: its label, degree, and square rule.

    ``square_label`` names the generator equal to this one's square, or is
    None when the square is zero.
    """

    label: int
    degree: int
    square_label: int | None
    name: str


@dataclass(frozen=True)
class Element:
    """A homogeneous class: a degree plus coordinates over that degree's basis."""

    degree: int
    coords: CoordVector

    @property
    def is_zero(self) -> bool:
        return self.coords.is_zero

    def __add__(self, other: "Element") -> "Element":
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} != {other.degree}")
        return Element(self.degree, self.coords ^ other.coords)


class RingPresentation:
    """Immutable truncated graded GF(2) algebra for H*(V_k(F^n)).

    Built through :func:`build_ring`; all queries are read-only.
    """

    def __init__(
        self,
        field: FieldTag,
        n: int,
        k: int,
        max_degree: int,
        generators: tuple[GeneratorSpec, ...],
        bases: tuple[tuple[Monomial, ...], ...],
        manifold_dimension: int,
    ):
        self.field = field
        self.n = n
        self.k = k
        self.max_degree = max_degree
        self.generators = generators
        self.bases = bases
        self.manifold_dimension = manifold_dimension
        self._gen_by_label = {g.label: g for g in generators}
        self._index = [
            {mono: i for i, mono in enumerate(basis)} for basis in bases
        ]
        self._verify_connectivity()

    # ----- structure queries -----

    @property
    def first_nonzero_degree(self) -> int:
        """Lowest positive degree with a nonzero group: c(n-k+1)-1."""
        return self.field.c * (self.n - self.k + 1) - 1

    @property
    def connectivity_bound(self) -> int:
        """c(n-k+1)-2, the last degree through which all groups vanish."""
        return self.first_nonzero_degree - 1

    def describe(self) -> str:
        return f"V_{self.k}({self.field.value}^{self.n})"

    def generator(self, label: int) -> GeneratorSpec:
        try:
            return self._gen_by_label[label]
        except KeyError:
            raise ValueError(f"no generator with label {label} in {self.describe()}") from None

    def dim(self, d: int) -> int:
        self._check_degree(d)
        return len(self.bases[d])

    def basis(self, d: int) -> tuple[Monomial, ...]:
        """Basis monomials of degree d, in lexicographic factor-label order."""
        self._check_degree(d)
        return self.bases[d]

    def monomial_degree(self, mono: Monomial) -> int:
        return sum(self._gen_by_label[label].degree for label in mono)

    def _check_degree(self, d: int) -> None:
        if not 0 <= d <= self.max_degree:
            raise ValueError(f"degree {d} outside 0..{self.max_degree}")

    # ----- element constructors -----

    def zero(self, d: int) -> Element:
        return Element(d, CoordVector.zero(self.dim(d)))

    def unit(self) -> Element:
        return Element(0, CoordVector.unit(1, 0))

    def monomial_element(self, mono: Monomial) -> Element:
        mono = tuple(mono)
        d = self.monomial_degree(mono)
        self._check_degree(d)
        try:
            idx = self._index[d][mono]
        except KeyError:
            raise ValueError(f"{mono} is not a basis monomial of {self.describe()}") from None
        return Element(d, CoordVector.unit(self.dim(d), idx))

    def generator_element(self, label: int) -> Element:
        return self.monomial_element((self.generator(label).label,))

    def element(self, d: int, monomials: list[Monomial]) -> Element:
        """GF(2) sum of the given degree-d basis monomials."""
        acc = self.zero(d)
        for mono in monomials:
            acc = acc + self.monomial_element(tuple(mono))
        return acc

    # ----- multiplication -----

    def _reduce_monomial(self, factors: list[int]) -> Monomial | None:
        # Rewrite repeated factors via the square rule, smallest label first.
        # Each step removes one factor, so this terminates.
        while True:
            repeat = None
            for i in range(len(factors) - 1):
                if factors[i] == factors[i + 1]:
                    repeat = i
                    break
            if repeat is None:
                return tuple(factors)
            label = factors[repeat]
            square = self._gen_by_label[label].square_label
            if square is None:
                return None
            del factors[repeat : repeat + 2]
            insort(factors, square)

    def multiply(self, x: Element, y: Element) -> Element:
        """Bilinear product; monomials are merged and rewritten squarefree."""
        d = x.degree + y.degree
        if d > self.max_degree:
            raise ValueError(
                f"product degree {d} exceeds truncation bound {self.max_degree}"
            )
        self._check_element(x)
        self._check_element(y)
        bits = 0
        xbasis = self.bases[x.degree]
        ybasis = self.bases[y.degree]
        index = self._index[d]
        for i in x.coords.support():
            for j in y.coords.support():
                merged = sorted(xbasis[i] + ybasis[j])
                mono = self._reduce_monomial(merged)
                if mono is not None:
                    bits ^= 1 << index[mono]
        return Element(d, CoordVector(self.dim(d), bits))

    def _check_element(self, x: Element) -> None:
        self._check_degree(x.degree)
        if x.coords.length != self.dim(x.degree):
            raise ValueError(
                f"coordinate length {x.coords.length} does not match "
                f"dim H^{x.degree} = {self.dim(x.degree)}"
            )

    # ----- formatting and serialization -----

    def format_monomial(self, mono: Monomial) -> str:
        if not mono:
            return "1"
        return "*".join(self._gen_by_label[label].name for label in mono)

    def format_element(self, x: Element) -> str:
        if x.is_zero:
            return "0"
        basis = self.bases[x.degree]
        return " + ".join(self.format_monomial(basis[i]) for i in x.coords.support())

    def _verify_connectivity(self) -> None:
        # dim H^0 = 1, H^i = 0 through the connectivity bound, and the first
        # nonzero group is one-dimensional (as far as the truncation shows).
        if self.dim(0) != 1:
            raise RuntimeError(f"{self.describe()}: dim H^0 = {self.dim(0)}, expected 1")
        for d in range(1, min(self.connectivity_bound, self.max_degree) + 1):
            if self.dim(d) != 0:
                raise RuntimeError(
                    f"{self.describe()}: dim H^{d} = {self.dim(d)}, expected 0"
                )
        fnz = self.first_nonzero_degree
        if fnz <= self.max_degree and self.dim(fnz) != 1:
            raise RuntimeError(
                f"{self.describe()}: dim H^{fnz} = {self.dim(fnz)}, expected 1"
            )

    def connectivity_report(self) -> dict:
        fnz = self.first_nonzero_degree
        return {
            "zero_in_degrees": [1, self.connectivity_bound],
            "first_nonzero_degree": fnz,
            "first_nonzero_dim": self.dim(fnz) if fnz <= self.max_degree else None,
            "verified": True,
        }

    def to_json_dict(self) -> dict:
        return {
            "field": self.field.value,
            "n": self.n,
            "k": self.k,
            "max_degree": self.max_degree,
            "manifold_dimension": self.manifold_dimension,
            "generators": [
                {
                    "name": g.name,
                    "label": g.label,
                    "degree": g.degree,
                    "square": self._gen_by_label[g.square_label].name
                    if g.square_label is not None
                    else "0",
                }
                for g in self.generators
            ],
            "dims": [self.dim(d) for d in range(self.max_degree + 1)],
            "bases": {
                str(d): [self.format_monomial(m) for m in self.bases[d]]
                for d in range(self.max_degree + 1)
                if self.bases[d]
            },
            "connectivity": self.connectivity_report(),
        }


def manifold_dimension(field: FieldTag, n: int, k: int) -> int:
    """Real dimension of V_k(F^n), used only to cap truncation depth."""
    if field is FieldTag.REAL:
        return k * (n - k) + k * (k - 1) // 2
    if field is FieldTag.COMPLEX:
        return k * (2 * n - k)
    return k * (4 * n - 2 * k + 1)


def _generators(field: FieldTag, n: int, k: int) -> tuple[GeneratorSpec, ...]:
    if field is FieldTag.REAL:
        specs = []
        for i in range(n - k, n):
            square = 2 * i if 2 * i <= n - 1 else None
            specs.append(GeneratorSpec(i, i, square, f"a{i}"))
        return tuple(specs)
    c = field.c
    return tuple(
        GeneratorSpec(j, c * j - 1, None, f"y{j}") for j in range(n - k + 1, n + 1)
    )


def validate_parameters(field: FieldTag, n: int, k: int) -> None:
    """Reject frame parameters outside the connected-manifold range.

    k = 1 gives a sphere and k = n over R gives the disconnected O(n);
    both are out of range for this engine.
    """
    if k <= 1:
        raise ValueError(f"k must exceed 1, got k={k} (V_1 is a sphere)")
    if field is FieldTag.REAL:
        if k >= n:
            raise ValueError(
                f"need 1 < k < n over R, got (n, k) = ({n}, {k}); "
                "V_n(R^n) = O(n) is not connected"
            )
    elif k > n:
        raise ValueError(f"need 1 < k <= n over {field.value}, got (n, k) = ({n}, {k})")


def build_ring(field: FieldTag, n: int, k: int, max_degree: int) -> RingPresentation:
    """Construct H*(V_k(F^n); Z_2) truncated above max_degree."""
    validate_parameters(field, n, k)
    if max_degree < 1:
        raise ValueError(f"max_degree must be at least 1, got {max_degree}")
    generators = _generators(field, n, k)
    buckets: list[list[Monomial]] = [[] for _ in range(max_degree + 1)]

    degrees = [g.degree for g in generators]

    def extend(start: int, total: int, chosen: list[int]) -> None:
        buckets[total].append(tuple(chosen))
        for idx in range(start, len(generators)):
            d = total + degrees[idx]
            if d > max_degree:
                break  # generator degrees ascend, so later ones overflow too
            chosen.append(generators[idx].label)
            extend(idx + 1, d, chosen)
            chosen.pop()

    extend(0, 0, [])
    bases = tuple(tuple(sorted(bucket)) for bucket in buckets)
    return RingPresentation(
        field, n, k, max_degree, generators, bases, manifold_dimension(field, n, k)
    )
