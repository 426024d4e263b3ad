"""Facet functionals of the cone spanned by a semigroup, and the embedding
that carries the semigroup onto a full subsemigroup of N^n.

The dual cone is computed by incremental ray insertion (double description):
start from a simplicial subcone cut out by a maximal independent subset of
the constraints, then insert the remaining half-spaces one at a time,
combining adjacent positive/negative ray pairs.  Adjacency of two rays is
decided by the exact rank test: the constraints tight at both must have rank
dim - 2.  Everything is exact over the integers and rationals.

Facet functionals are normalized so that their values on the generators are
integers with gcd 1; this makes each functional integral and primitive on
the generated group, which in turn makes the stacked map T injective with a
full image.  The facet list is the irredundant (minimal) one, ordered
lexicographically by primitive ambient representative so that all
downstream output is deterministic.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateCone, WitnessNotFound, ZeroFunctional
from .exact import (
    IntegerMatrix,
    Vector,
    dot,
    extended_gcd_vector,
    hermite_basis,
    matrix_rank,
    primitive_vector,
    solve_linear_system,
    vadd,
    vscale,
    vsub,
)
from .semigroup import SemigroupContext


def extreme_rays(constraints: list[Vector]) -> list[Vector]:
    """Extreme rays of the pointed cone {x : a . x >= 0 for every row a}.

    The constraint rows must have full column rank (this is what makes the
    cone pointed).  Returns primitive integer ray representatives, sorted.
    """
    if not constraints:
        raise ValueError("extreme_rays requires at least one constraint")
    m = len(constraints[0])

    # Greedy maximal independent subset, in input order.
    chosen: list[int] = []
    for i in range(len(constraints)):
        if len(chosen) == m:
            break
        trial = [constraints[j] for j in chosen] + [constraints[i]]
        if matrix_rank(trial) > len(chosen):
            chosen.append(i)
    if len(chosen) < m:
        raise ValueError("constraint system is rank deficient; cone is not pointed")

    # Simplicial start: ray j satisfies base[k] . ray = delta_{kj}, i.e. the
    # rays are the columns of the inverse of the chosen constraint rows.
    base = [constraints[i] for i in chosen]
    rays: list[Vector] = []
    for j in range(m):
        unit = [1 if k == j else 0 for k in range(m)]
        col = solve_linear_system(base, unit)
        rays.append(primitive_vector(col))

    processed = list(base)
    chosen_set = set(chosen)
    for i, a in enumerate(constraints):
        if i in chosen_set:
            continue
        values = [dot(a, r) for r in rays]
        if all(v >= 0 for v in values):
            processed.append(a)
            continue
        keep = [r for r, v in zip(rays, values) if v >= 0]
        positive = [(r, v) for r, v in zip(rays, values) if v > 0]
        negative = [(r, v) for r, v in zip(rays, values) if v < 0]
        tight = {r: [row for row in processed if dot(row, r) == 0] for r, _ in positive + negative}
        fresh: dict[Vector, None] = {}
        for p, vp in positive:
            tp = set(tight[p])
            for n, vn in negative:
                common = [row for row in tight[n] if row in tp]
                if matrix_rank(common) == m - 2:
                    combo = vsub(vscale(vp, n), vscale(vn, p))
                    fresh[primitive_vector(combo)] = None
        known = set(keep)
        rays = keep + [r for r in fresh if r not in known]
        processed.append(a)
    return sorted(set(rays))


def dual_cone_rays(ctx: SemigroupContext) -> list[Vector]:
    """Minimal generating rays of the dual cone, in ambient coordinates.

    One ray per facet of the cone spanned by the generators, each returned
    as the primitive integer vector on its ray, vanishing on the orthogonal
    complement of the span of the generated group.  Sorted lexicographically.
    """
    if ctx.rank == 0:
        raise DegenerateCone("generators span only the zero cone")
    rays_lattice = extreme_rays([tuple(c) for c in ctx.generator_coords])
    basis = ctx.lattice.rows
    gram = [[dot(bi, bj) for bj in basis] for bi in basis]
    ambient = []
    for w in rays_lattice:
        y = solve_linear_system(gram, w)
        if y is None:  # gram matrix of independent rows is never singular
            raise DegenerateCone("lattice basis lost rank")
        vec = [Fraction(0)] * ctx.presentation.ambient_rank
        for coeff, row in zip(y, basis):
            if coeff:
                vec = [a + coeff * b for a, b in zip(vec, row)]
        ambient.append(primitive_vector(vec))
    return sorted(ambient)


@dataclass(frozen=True)
class FacetFunctional:
    """A facet-defining linear functional, scaled to be primitive.

    coefficients give the functional in ambient coordinates (entries may be
    non-integral rationals); values_on_generators are its values on the
    presentation's generators, always nonnegative integers with gcd 1.
    """

    coefficients: tuple[Fraction, ...]
    values_on_generators: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values_on_generators)
        if any(v < 0 for v in vals):
            raise ValueError("facet functional is negative on a generator")
        nonzero = [v for v in vals if v]
        if not nonzero:
            raise ZeroFunctional("functional vanishes on every generator")
        g = 0
        for v in nonzero:
            g = v if g == 0 else _gcd(g, v)
        if g != 1:
            raise ValueError("facet values are not coprime; functional not primitive")
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))
        object.__setattr__(self, "values_on_generators", vals)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def primitivize(ray, ctx: SemigroupContext) -> FacetFunctional:
    """Rescale a dual ray so that its generator values are coprime integers.

    The scale is the unique positive rational making all values integers of
    gcd 1; e.g. the ray (1, 0) over generators (2,0),(0,2) has values (2, 0)
    and is rescaled to (1/2, 0) with values (1, 0).
    """
    values = [dot([Fraction(x) for x in ray], g) for g in ctx.presentation.generators]
    if all(v == 0 for v in values):
        raise ZeroFunctional("ray vanishes on every generator")
    if any(v < 0 for v in values):
        raise ValueError("ray is negative on a generator")
    scaled = primitive_vector(values)
    factor = None
    for new, old in zip(scaled, values):
        if old != 0:
            factor = Fraction(new) / old
            break
    coefficients = tuple(Fraction(x) * factor for x in ray)
    return FacetFunctional(coefficients, scaled)


@dataclass(frozen=True)
class FullEmbedding:
    """The stacked facet functionals T, mapping the semigroup into N^n.

    matrix_T holds the functionals in lattice coordinates (n rows, rank
    columns); image_generators are the generator images, in presentation
    order; image_lattice is a Hermite basis of the group generated by the
    image, as a sublattice of Z^n.
    """

    functionals: tuple[FacetFunctional, ...]
    matrix_T: IntegerMatrix
    image_generators: tuple[Vector, ...]
    image_lattice: IntegerMatrix
    rank: int

    @property
    def num_coordinates(self) -> int:
        return len(self.functionals)


def full_embedding(ctx: SemigroupContext) -> FullEmbedding:
    """Stack all primitivized facet functionals into an embedding.

    Verifies injectivity on the generated group (the stacked matrix has full
    column rank) and nonnegativity of the generator images.
    """
    rays = dual_cone_rays(ctx)
    functionals = tuple(primitivize(r, ctx) for r in rays)
    t_rows = []
    for f in functionals:
        row = []
        for basis_row in ctx.lattice.rows:
            val = dot(f.coefficients, basis_row)
            if val.denominator != 1:  # integral on the group by construction
                raise DegenerateCone("functional is not integral on the lattice")
            row.append(int(val))
        t_rows.append(tuple(row))
    matrix_t = IntegerMatrix(tuple(t_rows))
    if matrix_rank(matrix_t.rows) != ctx.rank:
        raise DegenerateCone("stacked functionals do not separate the lattice")
    images = tuple(
        tuple(f.values_on_generators[k] for f in functionals)
        for k in range(len(ctx.presentation.generators))
    )
    image_lattice = hermite_basis(matrix_t.transpose())
    return FullEmbedding(functionals, matrix_t, images, image_lattice, ctx.rank)


def fraction_field_witness(emb: FullEmbedding, i: int) -> tuple[Vector, Vector]:
    """A pair (a_i, v) with v in the image group, v_i = -1, v_j >= 0 else.

    v is built as -(x) + t * alpha where x is an image-group element with
    x_i = 1 (it exists because the i-th functional is primitive), alpha is
    the sum of the generator images lying on facet i (a relative-interior
    point of that facet, so alpha_i = 0 and alpha_j > 0 for j != i), and
    t >= 1 is minimal.  a_i is v with its i-th coordinate lifted to 0.
    """
    n = emb.num_coordinates
    if not 0 <= i < n:
        raise ValueError(f"coordinate index {i} out of range")
    lattice = emb.image_lattice
    column = [row[i] for row in lattice.rows]
    g, coeffs = extended_gcd_vector(column)
    if g != 1:
        raise WitnessNotFound(
            f"coordinate {i} of the image group is contained in {g}Z; "
            "input is non-normal or degenerate"
        )
    x = (0,) * n
    for c, row in zip(coeffs, lattice.rows):
        if c:
            x = vadd(x, vscale(c, row))
    alpha = (0,) * n
    for img in emb.image_generators:
        if img[i] == 0:
            alpha = vadd(alpha, img)
    if n > 1 and any(alpha[j] == 0 for j in range(n) if j != i):
        raise WitnessNotFound(
            f"facet {i} has no relative-interior generator sum; "
            "input is non-normal or degenerate"
        )
    t = 1
    for j in range(n):
        if j != i and x[j] > 0:
            # smallest t with t * alpha_j >= x_j
            t = max(t, -(-x[j] // alpha[j]))
    v = vadd(vscale(-1, x), vscale(t, alpha))
    if v[i] != -1 or any(v[j] < 0 for j in range(n) if j != i):
        raise WitnessNotFound("witness construction failed; input is degenerate")
    a = tuple(0 if j == i else v[j] for j in range(n))
    return a, v
