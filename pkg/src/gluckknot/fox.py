"""Fox free differential calculus and Alexander invariants.

Derivatives live in the integer group ring ZF of the free group; abelianizing
through integer orientation weights (generator g -> t^{w_g}) turns them into
Laurent polynomials, and minors of the resulting matrix give the Alexander
polynomial when the first elementary ideal is principal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .intmatrix import IntMatrix, cokernel, kernel_basis, primitive_vector
from .laurent import LaurentPolynomial, divides, laurent_gcd, unit_equivalent
from .words import Presentation, Word


class OrientationError(ValueError):
    """The abelianization is not infinite cyclic up to torsion."""


class FirstIdealZero(ValueError):
    """All Alexander-matrix minors vanish; no Alexander polynomial exists."""


class FoxInternalError(AssertionError):
    """A Fox identity failed; indicates an implementation fault."""


class GroupRingElement:
    """Finite integer combination of freely reduced words (element of ZF)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, int] | Iterable[tuple[Word, int]] = ()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        clean: dict[Word, int] = {}
        for w, c in items:
            if c:
                clean[w] = clean.get(w, 0) + c
                if not clean[w]:
                    del clean[w]
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("GroupRingElement is immutable")

    @classmethod
    def zero(cls) -> "GroupRingElement":
        return cls()

    @classmethod
    def from_word(cls, w: Word, coefficient: int = 1) -> "GroupRingElement":
        return cls({w: coefficient})

    @classmethod
    def one(cls) -> "GroupRingElement":
        return cls({Word(): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElement(out)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        out: dict[Word, int] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u * v
                out[w] = out.get(w, 0) + a * b
        return GroupRingElement(out)

    def __repr__(self) -> str:
        return f"GroupRingElement({self.terms!r})"


def fox_derivative(w: Word, gen: int) -> GroupRingElement:
    """Free derivative d(w)/d(x_gen) in ZF.

    Rules: d(g)/d(g) = 1, d(g^-1)/d(g) = -g^-1, d(uv)/d(g) = du + u dv.
    """
    terms: dict[Word, int] = {}
    prefix: list[int] = []
    for letter in w.letters:
        if letter == gen + 1:
            key = Word(prefix)
            terms[key] = terms.get(key, 0) + 1
        elif letter == -(gen + 1):
            key = Word(prefix + [letter])
            terms[key] = terms.get(key, 0) - 1
        prefix.append(letter)
    return GroupRingElement(terms)


def fundamental_identity_check(w: Word, ngens: int) -> bool:
    """Verify sum_g d(w)/d(g) * (g - 1) = w - 1 exactly in ZF."""
    total = GroupRingElement.zero()
    for g in range(ngens):
        gen_minus_one = GroupRingElement({Word([g + 1]): 1, Word(): -1})
        total = total + fox_derivative(w, g) * gen_minus_one
    expected = GroupRingElement([(w, 1), (Word(), -1)])
    return total == expected


def solve_orientation_weights(p: Presentation) -> tuple[int, ...]:
    """Integer exponent weights g -> t^{w_g} for the infinite-cyclic quotient.

    Recovered as the primitive kernel vector of the relator exponent matrix;
    requires the abelianization to have free rank exactly 1.
    """
    matrix = IntMatrix(p.exponent_matrix(), cols=p.ngens)
    ab = cokernel(matrix)
    if ab.rank != 1:
        raise OrientationError(
            f"abelianization has free rank {ab.rank}, expected 1 (H1 = {ab})"
        )
    basis = kernel_basis(matrix)
    # rank-1 free part means the kernel is one-dimensional
    assert len(basis) == 1
    return tuple(primitive_vector(basis[0]))


def abelianize(
    e: GroupRingElement, weights: tuple[int, ...]
) -> LaurentPolynomial:
    """Map each word u to t^{sum_g w_g * exp_g(u)} and extend linearly."""
    ngens = len(weights)
    coeffs: dict[int, int] = {}
    for w, c in e.terms.items():
        sums = w.exponent_sums(ngens)
        exp = sum(wg * s for wg, s in zip(weights, sums))
        coeffs[exp] = coeffs.get(exp, 0) + c
    return LaurentPolynomial(coeffs)


@dataclass(frozen=True)
class AlexanderMatrix:
    """Abelianized Fox derivatives: one row per relator, one column per
    generator."""

    entries: tuple[tuple[LaurentPolynomial, ...], ...]
    weights: tuple[int, ...]

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.weights)


def alexander_matrix(
    p: Presentation, weights: tuple[int, ...] | None = None
) -> AlexanderMatrix:
    """Matrix of abelianized Fox derivatives of the cyclically reduced relators.

    Each row is checked against the abelianized fundamental identity
    sum_j entry(i,j) * (t^{w_j} - 1) = 0 before returning.
    """
    if weights is None:
        weights = solve_orientation_weights(p)
    rows = []
    for r in p.relators:
        r = r.cyclically_reduced()
        row = tuple(
            abelianize(fox_derivative(r, g), weights) for g in range(p.ngens)
        )
        identity_sum = LaurentPolynomial.zero()
        for g, entry in enumerate(row):
            factor = LaurentPolynomial({weights[g]: 1, 0: -1})
            identity_sum = identity_sum + entry * factor
        if not identity_sum.is_zero():
            raise FoxInternalError(
                f"abelianized row identity failed for relator {p.word_str(r)}"
            )
        rows.append(row)
    return AlexanderMatrix(entries=tuple(rows), weights=weights)


@dataclass(frozen=True)
class AlexanderResult:
    polynomial: LaurentPolynomial
    certified_principal: bool
    weights: tuple[int, ...]


def _minor_determinant(
    matrix: AlexanderMatrix, row_idx: tuple[int, ...], col_idx: tuple[int, ...]
) -> LaurentPolynomial:
    sub = [[matrix.entries[i][j] for j in col_idx] for i in row_idx]

    def det(m: list[list[LaurentPolynomial]]) -> LaurentPolynomial:
        n = len(m)
        if n == 0:
            return LaurentPolynomial.constant(1)
        if n == 1:
            return m[0][0]
        total = LaurentPolynomial.zero()
        for j in range(n):
            if m[0][j].is_zero():
                continue
            minor = [row[:j] + row[j + 1 :] for row in m[1:]]
            term = m[0][j] * det(minor)
            total = total + (term if j % 2 == 0 else -term)
        return total

    return det(sub)


def first_ideal_minors(p: Presentation) -> list[LaurentPolynomial]:
    """All (n-1) x (n-1) minors of the Alexander matrix, n = generator count."""
    matrix = alexander_matrix(p)
    n = matrix.cols
    k = n - 1
    if matrix.rows < k or len(p.relators) == 0:
        return []
    minors = []
    for row_idx in combinations(range(matrix.rows), k):
        for col_idx in combinations(range(n), k):
            minors.append(_minor_determinant(matrix, row_idx, col_idx))
    return minors


def alexander_polynomial(p: Presentation) -> AlexanderResult:
    """Gcd of the first-elementary-ideal minors, unit-normalized.

    The result is certified principal only when every nonzero minor is a unit
    multiple of the gcd (so the ideal visibly equals the gcd's principal
    ideal); otherwise the gcd is reported without a principality claim.
    """
    weights = solve_orientation_weights(p)
    minors = first_ideal_minors(p)
    nonzero = [m for m in minors if not m.is_zero()]
    if not nonzero:
        raise FirstIdealZero("all Alexander minors vanish (E1 = 0)")
    g = nonzero[0]
    for m in nonzero[1:]:
        g = laurent_gcd(g, m)
    if not all(divides(g, m) for m in minors):
        raise FoxInternalError("gcd fails to divide a minor")
    certified = all(unit_equivalent(m, g) for m in nonzero)
    return AlexanderResult(
        polynomial=g.normalize_unit(),
        certified_principal=certified,
        weights=weights,
    )
