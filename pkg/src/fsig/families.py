"""Built-in generator families with their closed-form signatures.

Segre products of two polynomial rings and Veronese subrings, plus the
Eulerian numbers in both their recursive and alternating-sum forms.  All
values are exact.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import InvalidParams
from .exact import Vector
from .semigroup import SemigroupPresentation


def binomial(m: int, k: int) -> int:
    """Binomial coefficient with the vanishing convention outside 0 <= k <= m."""
    if k < 0 or m < 0 or k > m:
        return 0
    return comb(m, k)


@lru_cache(maxsize=None)
def eulerian(d: int, s: int) -> int:
    """Eulerian number A(d, s): permutations of d objects with s-1 descents.

    Computed by the recursion A(d,s) = s A(d-1,s) + (d-s+1) A(d-1,s-1) with
    A(1,1) = 1; zero outside 1 <= s <= d.
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    if s < 1 or s > d:
        return 0
    if d == 1:
        return 1
    return s * eulerian(d - 1, s) + (d - s + 1) * eulerian(d - 1, s - 1)


def eulerian_alternating_sum(d: int, s: int) -> int:
    """A(d, s) via the inclusion-exclusion formula; mutual oracle for eulerian."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    return sum((-1) ** i * binomial(d + 1, i) * (s - i) ** d for i in range(s + 1))


@dataclass(frozen=True)
class EulerianTable:
    """Row d of the Eulerian triangle: values[s-1] = A(d, s) for 1 <= s <= d."""

    d: int
    values: tuple[int, ...]


def eulerian_table(d: int) -> EulerianTable:
    return EulerianTable(d, tuple(eulerian(d, s) for s in range(1, d + 1)))


def segre_generators(r: int, s: int) -> SemigroupPresentation:
    """Generators x_i y_j of the Segre product of two polynomial rings.

    r*s generators e_i + f_j in N^(r+s); the ring has dimension r + s - 1.
    """
    if r < 2 or s < 2:
        raise InvalidParams("segre requires r >= 2 and s >= 2")
    gens = []
    for i in range(r):
        for j in range(s):
            v = [0] * (r + s)
            v[i] = 1
            v[r + j] = 1
            gens.append(tuple(v))
    return SemigroupPresentation(r + s, tuple(gens), name=f"segre({r},{s})")


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def veronese_generators(d: int, n: int) -> SemigroupPresentation:
    """All degree-n monomials in d variables, as exponent vectors."""
    if d < 1 or n < 1:
        raise InvalidParams("veronese requires d >= 1 and n >= 1")
    gens: tuple[Vector, ...] = tuple(_compositions(n, d))
    return SemigroupPresentation(d, gens, name=f"veronese({d},{n})")


def segre_aq_closed_form(r: int, s: int, q: int) -> int:
    """Closed-form free rank of the Segre product at q."""
    if r < 2 or s < 2:
        raise InvalidParams("segre requires r >= 2 and s >= 2")
    if q < 1:
        raise ValueError("q must be a positive integer")
    d = r + s - 1
    return sum(
        (-1) ** i * binomial(d + 1, i) * binomial(q * (s - i) + d - s, d)
        for i in range(s + 1)
    )


def segre_signature(r: int, s: int) -> Fraction:
    """F-signature of the Segre product: A(r+s-1, s) / (r+s-1)!."""
    if r < 2 or s < 2:
        raise InvalidParams("segre requires r >= 2 and s >= 2")
    d = r + s - 1
    return Fraction(eulerian(d, s), factorial(d))


def veronese_signature(d: int, n: int) -> Fraction:
    """F-signature of the degree-n Veronese subring in d variables.

    1/n for d >= 2.  For d = 1 the subring is generated by a single power
    and is itself a polynomial ring, so the signature is 1 regardless of n.
    """
    if d < 1 or n < 1:
        raise InvalidParams("veronese requires d >= 1 and n >= 1")
    if d == 1:
        return Fraction(1)
    return Fraction(1, n)
