"""Affine semigroups given by generator exponent vectors.

A presentation is a finite list of nonzero vectors in N^r.  The context
derived from it fixes lattice coordinates: a Hermite basis of the group
generated by the generators, against which all downstream functionals and
counts are expressed.

Membership and the normality diagnostic below are only meaningful for
normal semigroups; normality itself is an assumption of the signature
pipeline, and check_normal certifies it up to a finite bound only.
"""

from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyPresentation, InvalidPresentation
from .exact import (
    IntegerMatrix,
    Vector,
    dot,
    express_in_basis,
    hermite_basis,
    lattice_points_in_box,
)


@dataclass(frozen=True)
class SemigroupPresentation:
    """Ambient rank plus a duplicate-free list of nonzero generators in N^r."""

    ambient_rank: int
    generators: tuple[Vector, ...]
    name: str | None = None

    def __post_init__(self):
        if self.ambient_rank < 1:
            raise InvalidPresentation("ambient rank must be a positive integer")
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        if not gens:
            raise EmptyPresentation("a presentation needs at least one generator")
        seen = set()
        for g in gens:
            if len(g) != self.ambient_rank:
                raise InvalidPresentation(
                    f"generator {g} does not have {self.ambient_rank} coordinates"
                )
            if any(x < 0 for x in g):
                raise InvalidPresentation(f"generator {g} has a negative coordinate")
            if all(x == 0 for x in g):
                raise InvalidPresentation("the zero vector is not a valid generator")
            if g in seen:
                raise InvalidPresentation(f"duplicate generator {g}")
            seen.add(g)
        object.__setattr__(self, "generators", gens)


@dataclass(frozen=True)
class SemigroupContext:
    """A presentation with its lattice coordinates fixed.

    lattice is a Hermite basis of the group generated by the generators;
    rank is the number of basis rows, which equals the Krull dimension of
    the associated monomial ring.  generator_coords caches each generator
    expressed against the basis.
    """

    presentation: SemigroupPresentation
    lattice: IntegerMatrix
    rank: int
    generator_coords: tuple[Vector, ...]


def build_context(presentation: SemigroupPresentation) -> SemigroupContext:
    """Fix lattice coordinates for a presentation."""
    matrix = IntegerMatrix(presentation.generators)
    lattice = hermite_basis(matrix)
    coords = []
    for g in presentation.generators:
        c = express_in_basis(g, lattice)
        if c is None:  # cannot happen: the basis spans the generators
            raise InvalidPresentation(f"generator {g} escaped its own lattice")
        coords.append(c)
    return SemigroupContext(presentation, lattice, lattice.nrows, tuple(coords))


def member(ctx: SemigroupContext, facets: Sequence, v: Sequence[int]) -> bool:
    """Membership test for a NORMAL semigroup.

    For normal semigroups, v belongs iff it lies in the generated group and
    every facet functional is nonnegative on it.  facets must come from the
    same context (see the cone module).
    """
    if len(v) != ctx.presentation.ambient_rank:
        raise ValueError("vector length does not match the ambient rank")
    if express_in_basis(v, ctx.lattice) is None:
        return False
    return all(dot(f.coefficients, v) >= 0 for f in facets)


def is_natural_combination(v: Sequence[int], generators: Sequence[Vector]) -> bool:
    """Whether v is a sum of generators with nonnegative integer multiplicities.

    Depth-first search with componentwise dominance pruning; terminates
    because generators are nonzero and nonnegative.
    """
    target = tuple(int(x) for x in v)
    if any(x < 0 for x in target):
        return False
    cache: dict[Vector, bool] = {}

    def reach(u: Vector) -> bool:
        if all(x == 0 for x in u):
            return True
        hit = cache.get(u)
        if hit is not None:
            return hit
        cache[u] = False  # cuts revisits along the current search path
        for g in generators:
            w = tuple(a - b for a, b in zip(u, g))
            if all(x >= 0 for x in w) and reach(w):
                cache[u] = True
                return True
        return False

    return reach(target)


@dataclass(frozen=True)
class NormalityVerdict:
    """Outcome of the bounded normality check.

    normal=True certifies saturation only for group-and-cone members with
    coordinates up to the recorded bound.
    """

    normal: bool
    counterexample: Vector | None
    bound: int


def check_normal(ctx: SemigroupContext, facets: Sequence, bound: int) -> NormalityVerdict:
    """Bounded normality diagnostic.

    Enumerates every group member v with 0 <= v_i <= bound and all facet
    values >= 0, and verifies that each is a nonnegative integer combination
    of the generators; the first failure is returned as a counterexample.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    gens = ctx.presentation.generators
    box = [bound] * ctx.presentation.ambient_rank
    for v in lattice_points_in_box(ctx.lattice, box):
        if any(dot(f.coefficients, v) < 0 for f in facets):
            continue
        if not is_natural_combination(v, gens):
            return NormalityVerdict(False, v, bound)
    return NormalityVerdict(True, None, bound)
