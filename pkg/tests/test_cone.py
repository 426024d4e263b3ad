"""Dual cone rays, facet functionals, the full embedding, and witnesses."""

import itertools
import random
from fractions import Fraction

import pytest

from fsig.cone import (
    dual_cone_rays,
    extreme_rays,
    fraction_field_witness,
    full_embedding,
    primitivize,
)
from fsig.errors import ZeroFunctional
from fsig.exact import (
    dot,
    express_in_basis,
    matrix_rank,
    primitive_vector,
    solve_linear_system,
)
from fsig.families import segre_generators, veronese_generators
from fsig.semigroup import SemigroupPresentation, build_context, is_natural_combination
from fsig.signature import f_signature

FREE2 = SemigroupPresentation(2, ((1, 0), (0, 1)), name="free(2)")
RESCALED = SemigroupPresentation(2, ((2, 0), (0, 2)), name="rescaled")


class TestExtremeRays:
    def test_orthant_is_self_dual(self):
        assert extreme_rays([(1, 0), (0, 1)]) == [(0, 1), (1, 0)]

    def test_redundant_constraint_ignored(self):
        assert extreme_rays([(1, 0), (0, 1), (1, 1)]) == [(0, 1), (1, 0)]

    def test_three_dimensional_cross_check(self):
        # cone x>=0, y>=0, z>=0, x+y-z>=0: the last cuts the (0,0,1) ray
        rays = extreme_rays([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1)])
        for r in rays:
            assert all(dot(c, r) >= 0 for c in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1)])
        assert sorted(rays) == [(0, 1, 0), (0, 1, 1), (1, 0, 0), (1, 0, 1)]

    def test_rank_deficient_rejected(self):
        with pytest.raises(ValueError):
            extreme_rays([(1, 0), (2, 0)])

    def test_matches_subset_enumeration_oracle(self):
        # independent oracle: a ray of a pointed cone spans the nullspace of
        # a rank m-1 subset of constraints and is nonnegative on all of them
        def brute_rays(constraints, m):
            out = set()
            for subset in itertools.combinations(range(len(constraints)), m - 1):
                rows = [constraints[i] for i in subset]
                if matrix_rank(rows) != m - 1:
                    continue
                direction = None
                for pin in range(m):
                    aug = [list(r) for r in rows] + [
                        [1 if j == pin else 0 for j in range(m)]
                    ]
                    if matrix_rank(aug) == m:
                        direction = solve_linear_system(aug, [0] * (m - 1) + [1])
                        break
                for sign in (1, -1):
                    cand = tuple(sign * x for x in direction)
                    if all(dot(c, cand) >= 0 for c in constraints):
                        tight = [c for c in constraints if dot(c, cand) == 0]
                        if matrix_rank(tight) == m - 1:
                            out.add(primitive_vector(cand))
            return sorted(out)

        rng = random.Random(99)
        checked = 0
        while checked < 60:
            m = rng.randint(2, 4)
            k = rng.randint(m, m + 4)
            constraints = [tuple(rng.randint(-3, 3) for _ in range(m)) for _ in range(k)]
            if matrix_rank(constraints) < m:
                continue
            assert extreme_rays(constraints) == brute_rays(constraints, m)
            checked += 1


class TestDualConeRays:
    def test_free_semigroup(self):
        ctx = build_context(FREE2)
        assert dual_cone_rays(ctx) == [(0, 1), (1, 0)]

    def test_slanted_cone(self):
        ctx = build_context(SemigroupPresentation(2, ((1, 0), (1, 2))))
        rays = dual_cone_rays(ctx)
        assert rays == [(0, 1), (2, -1)]
        # (0,1) vanishes on (1,0) and is positive on (1,2); (2,-1) conversely
        assert dot((0, 1), (1, 0)) == 0 and dot((0, 1), (1, 2)) > 0
        assert dot((2, -1), (1, 2)) == 0 and dot((2, -1), (1, 0)) > 0

    def test_segre_cone_has_four_facets(self):
        p = segre_generators(2, 2)
        rays = dual_cone_rays(build_context(p))
        assert len(rays) == 4
        for ray in rays:
            values = [dot(ray, g) for g in p.generators]
            assert all(v >= 0 for v in values)
            # a facet of the cone over a square touches exactly two generators
            assert sum(1 for v in values if v == 0) == 2

    def test_segre_rays_frozen(self):
        rays = dual_cone_rays(build_context(segre_generators(2, 2)))
        assert rays == [(-1, 3, 1, 1), (1, 1, -1, 3), (1, 1, 3, -1), (3, -1, 1, 1)]


class TestPrimitivize:
    def test_already_primitive(self):
        ctx = build_context(veronese_generators(2, 2))
        f = primitivize((1, 0), ctx)
        assert f.values_on_generators == (2, 1, 0)
        assert f.coefficients == (Fraction(1), Fraction(0))

    def test_rescaling_to_half(self):
        ctx = build_context(RESCALED)
        f = primitivize((1, 0), ctx)
        assert f.coefficients == (Fraction(1, 2), Fraction(0))
        assert f.values_on_generators == (1, 0)

    def test_scalar_multiple_collapses(self):
        ctx = build_context(FREE2)
        f = primitivize((3, 0), ctx)
        assert f.coefficients == (Fraction(1), Fraction(0))
        assert f.values_on_generators == (1, 0)

    def test_zero_ray_rejected(self):
        ctx = build_context(FREE2)
        with pytest.raises(ZeroFunctional):
            primitivize((0, 0), ctx)


class TestFullEmbedding:
    def test_rescaled_presentation_embeds_onto_unit_vectors(self):
        emb = full_embedding(build_context(RESCALED))
        assert sorted(emb.image_generators) == [(0, 1), (1, 0)]

    def test_free_semigroup_embedding_is_coordinate_bijection(self):
        emb = full_embedding(build_context(FREE2))
        assert sorted(emb.image_generators) == [(0, 1), (1, 0)]
        assert sorted(emb.matrix_T.rows) == [(0, 1), (1, 0)]

    def test_veronese_functionals_are_coordinates(self):
        emb = full_embedding(build_context(veronese_generators(2, 2)))
        assert sorted(f.coefficients for f in emb.functionals) == [
            (Fraction(0), Fraction(1)),
            (Fraction(1), Fraction(0)),
        ]
        assert sorted(emb.image_generators) == [(0, 2), (1, 1), (2, 0)]

    def test_facet_invariants(self):
        from math import gcd

        for p in (FREE2, RESCALED, veronese_generators(2, 2), segre_generators(2, 3)):
            emb = full_embedding(build_context(p))
            for f in emb.functionals:
                assert all(v >= 0 for v in f.values_on_generators)
                assert any(v == 0 for v in f.values_on_generators)  # touches the cone
                assert gcd(*f.values_on_generators) == 1

    @pytest.mark.parametrize(
        "presentation",
        [veronese_generators(2, 2), RESCALED, segre_generators(2, 2)],
        ids=lambda p: p.name,
    )
    def test_image_is_full_on_a_box(self, presentation):
        # every nonnegative group element with coordinates <= 6 is generated
        emb = full_embedding(build_context(presentation))
        n = emb.num_coordinates
        for u in itertools.product(range(7), repeat=n):
            if express_in_basis(u, emb.image_lattice) is not None:
                assert is_natural_combination(u, emb.image_generators)

    def test_embedding_the_image_preserves_signature(self):
        for p in (veronese_generators(2, 2), segre_generators(2, 2)):
            emb = full_embedding(build_context(p))
            image_presentation = SemigroupPresentation(
                emb.num_coordinates, emb.image_generators
            )
            assert f_signature(image_presentation).value == f_signature(p).value


class TestFractionFieldWitness:
    def test_free_semigroup_frozen(self):
        emb = full_embedding(build_context(FREE2))
        assert fraction_field_witness(emb, 0) == ((0, 1), (-1, 1))
        assert fraction_field_witness(emb, 1) == ((1, 0), (1, -1))

    def test_veronese_frozen(self):
        emb = full_embedding(build_context(veronese_generators(2, 2)))
        a, v = fraction_field_witness(emb, 0)
        assert v == (-1, 1) and a == (0, 1)
        assert express_in_basis(v, emb.image_lattice) is not None

    def test_witness_properties_across_coordinates(self):
        for p in (FREE2, veronese_generators(2, 2), segre_generators(2, 2)):
            emb = full_embedding(build_context(p))
            n = emb.num_coordinates
            for i in range(n):
                a, v = fraction_field_witness(emb, i)
                assert v[i] == -1
                assert all(v[j] >= 0 for j in range(n) if j != i)
                assert a == tuple(0 if j == i else v[j] for j in range(n))
                assert express_in_basis(v, emb.image_lattice) is not None

    def test_index_out_of_range(self):
        emb = full_embedding(build_context(FREE2))
        with pytest.raises(ValueError):
            fraction_field_witness(emb, 5)
