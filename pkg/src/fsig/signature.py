"""The signature polytope and its exact volume.

For an embedding T of rank d, the polytope is {x in R^d : 0 <= (Tx)_i <= 1}.
Counting group elements whose image lies in [0, q-1]^n is, up to O(q^{d-1}),
q^d times the volume of this polytope, so the exact rational volume is the
limit of those normalized counts.  Vertices are found by double description
on the homogenization cone; the volume comes from a lexicographic fan
triangulation of the boundary, summed as exact rational simplex volumes.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .cone import FullEmbedding, extreme_rays, full_embedding
from .errors import Unbounded
from .exact import Vector, dot, matrix_rank, rational_determinant, vsub
from .semigroup import SemigroupPresentation, build_context

RationalVector = tuple[Fraction, ...]


@dataclass(frozen=True)
class SignaturePolytope:
    """H-representation and vertices of {x : 0 <= (Tx)_i <= 1}.

    half_spaces lists pairs (a, b) meaning a . x <= b, two per embedding
    coordinate.  Vertices are sorted lexicographically; the origin is always
    one of them.
    """

    half_spaces: tuple[tuple[Vector, int], ...]
    vertices: tuple[RationalVector, ...]
    dim: int


@dataclass(frozen=True)
class SignatureResult:
    value: Fraction
    polytope: SignaturePolytope
    embedding: FullEmbedding

    def __post_init__(self):
        if not 0 < self.value <= 1:
            raise ArithmeticError(f"signature {self.value} outside (0, 1]")


def signature_polytope(emb: FullEmbedding) -> SignaturePolytope:
    """Assemble the 2n half-spaces and enumerate the vertices exactly.

    The polytope is homogenized to a pointed cone in dimension d + 1 whose
    extreme rays (x, t) with t > 0 are the vertices x / t; a ray with t = 0
    would be a recession direction, which signals an invalid embedding.
    """
    d = emb.rank
    t_rows = emb.matrix_T.rows
    cone_rows: list[Vector] = []
    for w in t_rows:
        cone_rows.append(w + (0,))  # w . x >= 0
        cone_rows.append(tuple(-a for a in w) + (1,))  # w . x <= t
    cone_rows.append((0,) * d + (1,))  # t >= 0
    rays = extreme_rays(cone_rows)
    vertices = []
    for ray in rays:
        t = ray[-1]
        if t == 0:
            raise Unbounded("signature polytope has a recession direction")
        vertices.append(tuple(Fraction(x, t) for x in ray[:-1]))
    vertices = tuple(sorted(set(vertices)))
    origin = (Fraction(0),) * d
    if origin not in vertices:
        raise Unbounded("origin is not a vertex; embedding is invalid")
    if _affine_rank(vertices) != d:
        raise Unbounded("signature polytope is not full-dimensional")
    half_spaces = []
    for w in t_rows:
        half_spaces.append((tuple(-a for a in w), 0))
        half_spaces.append((w, 1))
    return SignaturePolytope(tuple(half_spaces), vertices, d)


def _affine_rank(points) -> int:
    if len(points) <= 1:
        return 0
    base = points[0]
    return matrix_rank([vsub(p, base) for p in points[1:]])


def _face_facets(polytope, face, k, tightness):
    """Facets of a face, as sorted vertex-index tuples.

    Every facet of a face arises by making one more inequality tight, so it
    suffices to scan all half-spaces and keep the subsets of affine rank k-1.
    """
    verts = polytope.vertices
    facets = set()
    for ci in range(len(polytope.half_spaces)):
        sub = tuple(i for i in face if tightness[ci][i])
        if len(sub) == len(face) or not sub:
            continue
        if _affine_rank([verts[i] for i in sub]) == k - 1:
            facets.add(sub)
    return sorted(facets)


def _triangulate_face(polytope, face, k, tightness):
    """Fan triangulation of a k-dimensional face from its lex-least vertex."""
    verts = polytope.vertices
    if len(face) == k + 1:
        return [face]
    apex = min(face, key=lambda i: verts[i])
    simplices = []
    for sub in _face_facets(polytope, face, k, tightness):
        if apex in sub:
            continue
        for s in _triangulate_face(polytope, sub, k - 1, tightness):
            simplices.append((apex,) + s)
    return simplices


def _simplex_volume(verts, simplex, apex_point, d) -> Fraction:
    rows = [vsub(verts[i], apex_point) for i in simplex]
    return abs(rational_determinant(rows)) / factorial(d)


def polytope_volume(polytope: SignaturePolytope, self_check: bool = False) -> Fraction:
    """Exact d-volume by fanning boundary simplices from the origin vertex.

    With self_check=True the volume is recomputed from a second decomposition
    (pyramids over every facet from the vertex centroid) and the two exact
    values are required to agree.
    """
    d = polytope.dim
    verts = polytope.vertices
    if d == 0:
        return Fraction(1)
    tightness = [
        [dot(a, v) == b for v in verts] for a, b in polytope.half_spaces
    ]
    all_indices = tuple(range(len(verts)))
    origin = (Fraction(0),) * d
    origin_index = verts.index(origin)
    facets = _face_facets(polytope, all_indices, d, tightness)
    facet_triangulations = {
        f: _triangulate_face(polytope, f, d - 1, tightness) for f in facets
    }
    total = Fraction(0)
    for f in facets:
        if origin_index in f:
            continue
        for simplex in facet_triangulations[f]:
            total += _simplex_volume(verts, simplex, origin, d)
    if self_check:
        centroid = tuple(
            sum(v[j] for v in verts) / len(verts) for j in range(d)
        )
        second = Fraction(0)
        for f in facets:
            for simplex in facet_triangulations[f]:
                second += _simplex_volume(verts, simplex, centroid, d)
        if second != total:
            raise ArithmeticError(
                f"volume decompositions disagree: {total} versus {second}"
            )
    return total


def f_signature(presentation: SemigroupPresentation) -> SignatureResult:
    """Exact F-signature of the normal semigroup ring of the presentation.

    Pipeline: fix lattice coordinates, embed through the facet functionals,
    cut the signature polytope, take its exact volume.  Normality of the
    semigroup is the caller's responsibility (check_normal is available as a
    bounded diagnostic); the value is independent of generator order and of
    unimodular reparametrization of the ambient lattice.
    """
    ctx = build_context(presentation)
    emb = full_embedding(ctx)
    polytope = signature_polytope(emb)
    value = polytope_volume(polytope)
    return SignatureResult(value, polytope, emb)
