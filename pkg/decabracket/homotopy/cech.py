"""
Čech dg-algebra of the line bundles O(q) on P^n.

Cochains are taken for the standard covering U_i = {x_i != 0}. A basis element
x^e_I is the Laurent monomial x^e placed on the intersection U_I; it is regular
there exactly when every index with a negative exponent belongs to I. Every
operator below acts termwise on basis elements and extends linearly.

The homotopy data (iota, pi, Q) contract the complex onto its cohomology,
H^0 = polynomials and H^n = span of x^alpha with all alpha_i < 0.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from sympy import QQ

from decabracket.polynomials.multidegree import MultiIndex
from decabracket.polynomials.polynomial import Polynomial, to_rational

logger = logging.getLogger(__name__)

# k_of returns this when every exponent is negative
BOTTOM = None


class MixedDegreeError(ValueError):
    """Raised when include() is given classes of both H^0 and H^n."""


@dataclass(frozen=True, order=True)
class CechBasisElement:
    """x^e_I: the monomial x^e on U_I, in cohomological degree |I| - 1."""

    indices: Tuple[int, ...]
    exponent: MultiIndex

    def __post_init__(self) -> None:
        indices = tuple(self.indices)
        object.__setattr__(self, "indices", indices)
        if not indices:
            raise ValueError("Čech basis element needs a nonempty index set")
        if any(b <= a for a, b in zip(indices, indices[1:])):
            raise ValueError(f"index set must be strictly increasing, got {indices}")
        if indices[0] < 0 or indices[-1] > self.n:
            raise ValueError(f"index set {indices} is not contained in 0..{self.n}")
        missing = self.exponent.negative_positions() - set(indices)
        if missing:
            raise ValueError(
                f"x^{self.exponent} is not regular on U_{set(indices)}: "
                f"negative exponents at {sorted(missing)}"
            )

    @property
    def n(self) -> int:
        return len(self.exponent) - 1

    @property
    def degree(self) -> int:
        return len(self.indices) - 1

    @property
    def twist(self) -> int:
        return self.exponent.total

    def __str__(self) -> str:
        return f"x^{self.exponent}_{{{','.join(map(str, self.indices))}}}"


def _accumulate(n: int, pairs: Iterable[Tuple[CechBasisElement, object]]) -> Dict[CechBasisElement, object]:
    terms: Dict[CechBasisElement, object] = {}
    for basis, coeff in pairs:
        if basis.n != n:
            raise ValueError(f"basis element {basis} does not live on P^{n}")
        total = terms.get(basis, QQ(0)) + to_rational(coeff)
        if total:
            terms[basis] = total
        else:
            terms.pop(basis, None)
    return terms


@dataclass(frozen=True)
class CechElement:
    """A finite rational combination of basis elements on P^n."""

    n: int
    terms: Dict[CechBasisElement, object] = field(default_factory=dict)

    @classmethod
    def from_terms(cls, n: int, pairs: Iterable[Tuple[CechBasisElement, object]]) -> "CechElement":
        return cls(n, _accumulate(n, pairs))

    @classmethod
    def basis(cls, indices: Iterable[int], exponent: MultiIndex, coeff: object = 1) -> "CechElement":
        element = CechBasisElement(tuple(indices), exponent)
        return cls.from_terms(element.n, [(element, coeff)])

    @classmethod
    def zero(cls, n: int) -> "CechElement":
        return cls(n, {})

    def is_zero(self) -> bool:
        return not self.terms

    def __iter__(self) -> Iterator[Tuple[CechBasisElement, object]]:
        return iter(sorted(self.terms.items()))

    def _check_n(self, other: "CechElement") -> None:
        if other.n != self.n:
            raise ValueError(f"Čech elements live on different spaces: P^{self.n} vs P^{other.n}")

    def __add__(self, other: "CechElement") -> "CechElement":
        self._check_n(other)
        return CechElement.from_terms(self.n, itertools.chain(self.terms.items(), other.terms.items()))

    def __neg__(self) -> "CechElement":
        return CechElement(self.n, {basis: -coeff for basis, coeff in self.terms.items()})

    def __sub__(self, other: "CechElement") -> "CechElement":
        return self + (-other)

    def scale(self, factor: object) -> "CechElement":
        factor = to_rational(factor)
        return CechElement.from_terms(self.n, ((b, c * factor) for b, c in self.terms.items()))

    def degrees(self) -> set:
        return {basis.degree for basis in self.terms}

    def degree_part(self, p: int) -> "CechElement":
        return CechElement(self.n, {b: c for b, c in self.terms.items() if b.degree == p})

    def twist_part(self, q: int) -> "CechElement":
        return CechElement(self.n, {b: c for b, c in self.terms.items() if b.twist == q})

    def isotypic_part(self, exponent: MultiIndex) -> "CechElement":
        return CechElement(self.n, {b: c for b, c in self.terms.items() if b.exponent == exponent})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{coeff}*{basis}" for basis, coeff in self)


@dataclass(frozen=True)
class CohomologyClass:
    """
    Element of H^0 or H^n on P^n, stored as exponent -> coefficient.

    Nonnegative exponents are polynomial classes in H^0; all-negative exponents
    are the basis x^alpha_{0..n} of H^n.
    """

    n: int
    terms: Dict[MultiIndex, object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for exponent in self.terms:
            if len(exponent) != self.n + 1:
                raise ValueError(f"exponent {exponent} does not live on P^{self.n}")
            if not (exponent.is_nonnegative() or exponent.is_negative()):
                raise ValueError(
                    f"x^{exponent} is neither a polynomial nor an H^{self.n} basis monomial"
                )

    @classmethod
    def from_terms(cls, n: int, pairs: Iterable[Tuple[MultiIndex, object]]) -> "CohomologyClass":
        terms: Dict[MultiIndex, object] = {}
        for exponent, coeff in pairs:
            total = terms.get(exponent, QQ(0)) + to_rational(coeff)
            if total:
                terms[exponent] = total
            else:
                terms.pop(exponent, None)
        return cls(n, terms)

    @classmethod
    def monomial(cls, exponent: MultiIndex, coeff: object = 1) -> "CohomologyClass":
        return cls.from_terms(len(exponent) - 1, [(exponent, coeff)])

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "CohomologyClass":
        return cls.from_terms(p.ring.ngens - 1, ((MultiIndex(m), c) for m, c in p.items()))

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degrees(self) -> set:
        return {0 if exponent.is_nonnegative() else self.n for exponent in self.terms}

    @property
    def degree(self) -> Optional[int]:
        """0 or n for homogeneous classes, None for zero or mixed ones."""
        degrees = self.degrees
        return degrees.pop() if len(degrees) == 1 else None

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        if other.n != self.n:
            raise ValueError(f"classes live on different spaces: P^{self.n} vs P^{other.n}")
        return CohomologyClass.from_terms(self.n, itertools.chain(self.terms.items(), other.terms.items()))

    def __neg__(self) -> "CohomologyClass":
        return CohomologyClass(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "CohomologyClass") -> "CohomologyClass":
        return self + (-other)

    def scale(self, factor: object) -> "CohomologyClass":
        factor = to_rational(factor)
        return CohomologyClass.from_terms(self.n, ((e, c * factor) for e, c in self.terms.items()))

    def coefficient(self, exponent: MultiIndex):
        return self.terms.get(exponent, QQ(0))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{coeff}*x^{exponent}" for exponent, coeff in sorted(self.terms.items(), reverse=True))


def k_of(e: MultiIndex) -> Optional[int]:
    """Largest index with a nonnegative exponent, or BOTTOM when there is none."""
    nonnegative = [i for i, value in enumerate(e) if value >= 0]
    return max(nonnegative) if nonnegative else BOTTOM


BasisMap = Callable[[CechBasisElement], Iterable[Tuple[CechBasisElement, int]]]


def _extend_linearly(x: CechElement, basis_map: BasisMap) -> CechElement:
    return CechElement.from_terms(
        x.n,
        ((image, sign * coeff) for basis, coeff in x.terms.items() for image, sign in basis_map(basis)),
    )


def _differential_of_basis(basis: CechBasisElement) -> Iterator[Tuple[CechBasisElement, int]]:
    for k in range(basis.n + 1):
        if k in basis.indices:
            continue
        indices = tuple(sorted(basis.indices + (k,)))
        yield CechBasisElement(indices, basis.exponent), (-1) ** indices.index(k)


def differential(x: CechElement) -> CechElement:
    """Alternating Čech differential; raises degree by one."""
    return _extend_linearly(x, _differential_of_basis)


def _homotopy_of_basis(basis: CechBasisElement) -> Iterator[Tuple[CechBasisElement, int]]:
    k = k_of(basis.exponent)
    if k is BOTTOM or k not in basis.indices or len(basis.indices) < 2:
        return
    j = basis.indices.index(k)
    remaining = basis.indices[:j] + basis.indices[j + 1:]
    yield CechBasisElement(remaining, basis.exponent), (-1) ** j


def homotopy_q(x: CechElement) -> CechElement:
    """Q(x^e_I) = (-1)^j x^e_{I - k(e)} when k(e) is the j-th index of I, else 0."""
    return _extend_linearly(x, _homotopy_of_basis)


def multiply(x: CechElement, y: CechElement) -> CechElement:
    """
    Čech cup product: (ab)_{i0..i(p+r)} = a_{i0..ip} * b_{ip..i(p+r)}.

    Two basis elements multiply to a nonzero element only when the last index
    of the left factor is the first index of the right factor.
    """
    x._check_n(y)
    products = []
    for left, left_coeff in x.terms.items():
        for right, right_coeff in y.terms.items():
            if left.indices[-1] != right.indices[0]:
                continue
            indices = left.indices + right.indices[1:]
            products.append(
                (CechBasisElement(indices, left.exponent + right.exponent), left_coeff * right_coeff)
            )
    return CechElement.from_terms(x.n, products)


HInput = Union[CohomologyClass, Polynomial, Mapping[MultiIndex, object]]


def as_class(h: HInput, n: Optional[int]) -> CohomologyClass:
    if isinstance(h, CohomologyClass):
        return h
    if isinstance(h, Polynomial):
        return CohomologyClass.from_polynomial(h)
    pairs = list(h.items())
    if n is None:
        if not pairs:
            raise ValueError("cannot infer the ambient space of an empty class; pass n")
        n = len(pairs[0][0]) - 1
    return CohomologyClass.from_terms(n, pairs)


def include(h: HInput, n: Optional[int] = None) -> CechElement:
    """
    iota: H -> A.

    A polynomial is placed on every U_k in degree 0; an H^n class is placed on
    the single index set {0, ..., n}.

    Raises:
        MixedDegreeError: if h mixes polynomial and H^n terms
    """
    h = as_class(h, n)
    if len(h.degrees) > 1:
        raise MixedDegreeError(f"include() needs a class of a single degree, got degrees {sorted(h.degrees)}")
    pairs = []
    everything = tuple(range(h.n + 1))
    for exponent, coeff in h.terms.items():
        if exponent.is_nonnegative():
            pairs.extend((CechBasisElement((k,), exponent), coeff) for k in everything)
        else:
            pairs.append((CechBasisElement(everything, exponent), coeff))
    return CechElement.from_terms(h.n, pairs)


def project(x: CechElement) -> CohomologyClass:
    """
    pi: A -> H.

    Degree 0 reads the component on U_n when it is polynomial; degree n keeps
    the all-negative terms on U_{0..n}; other degrees map to zero.
    """
    pairs = []
    for basis, coeff in x.terms.items():
        if basis.degree == 0 and basis.indices == (x.n,) and basis.exponent.is_nonnegative():
            pairs.append((basis.exponent, coeff))
        elif basis.degree == x.n and basis.exponent.is_negative():
            pairs.append((basis.exponent, coeff))
    return CohomologyClass.from_terms(x.n, pairs)


def basis_elements(n: int, bound: int) -> List[CechBasisElement]:
    """
    All basis elements on P^n with max |e_i| <= bound, over every valid index set.

    Args:
        n: Dimension of the projective space
        bound: Exponent bound

    Returns:
        Sorted list of CechBasisElement
    """
    if n < 1:
        raise ValueError(f"projective dimension must be at least 1, got {n}")
    if bound < 0:
        raise ValueError(f"exponent bound must be nonnegative, got {bound}")
    elements = []
    for entries in itertools.product(range(-bound, bound + 1), repeat=n + 1):
        exponent = MultiIndex(entries)
        required = exponent.negative_positions()
        for size in range(1, n + 2):
            for indices in itertools.combinations(range(n + 1), size):
                if required.issubset(indices):
                    elements.append(CechBasisElement(indices, exponent))
    logger.debug(f"[CECH] {len(elements)} basis elements on P^{n} with bound {bound}")
    return sorted(elements)


__all__ = [
    "BOTTOM",
    "HInput",
    "CechBasisElement",
    "CechElement",
    "CohomologyClass",
    "MixedDegreeError",
    "as_class",
    "basis_elements",
    "differential",
    "homotopy_q",
    "include",
    "k_of",
    "multiply",
    "project",
]
