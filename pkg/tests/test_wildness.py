"""
Tests for <p>-wildness, xi(G), ordinary triplets and the solvability
harnesses.
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from catalog import catalog_group
from config import configure
from errors import InvalidParameterError, NotNormalError, TripletError
from groups import derived_series, derived_subgroup
from models import WildStatus
from semidirect import build_saksonov
from wildness import (
    build_triplet,
    builtin_catalog_triplets,
    check_triplet,
    corollary1_check,
    has_characteristic_involution_class,
    named_perm_group,
    p_cyclic_classes,
    quotient_triplet,
    random_intermediate_triplets,
    theorem1_harness,
    verify_p_wild,
    verify_witness,
    xi,
)

ELEMENTARY_8 = "C2 x C2 x C2"


class TestPCyclicClasses:
    """Tests for the inventory of cyclic subgroups of order p."""

    def test_elementary_abelian(self):
        """(Z/2)^4 has 15 involutions, each its own class."""
        classes = p_cyclic_classes(catalog_group("C2 x C2 x C2 x C2"), 2)
        assert len(classes.points) == 15
        assert classes.element_classes == 15
        assert classes.subgroup_classes == 15

    def test_a5_involutions(self, a5):
        """The 15 involutions of A5 form one class."""
        classes = p_cyclic_classes(a5, 2)
        assert len(classes.points) == 15
        assert classes.subgroup_classes == 1

    def test_a5_order_five(self, a5):
        """Two classes of 5-cycles, one class of subgroups of order 5."""
        classes = p_cyclic_classes(a5, 5)
        assert len(classes.points) == 24
        assert classes.element_classes == 2
        assert classes.subgroup_classes == 1

    def test_s4(self, s4):
        """S4: two involution classes, one class of 3-cycles."""
        assert p_cyclic_classes(s4, 2).subgroup_classes == 2
        assert p_cyclic_classes(s4, 3).subgroup_classes == 1

    def test_g2_c3(self, g2_c3):
        """The 15 involutions of G_2(C3) fall into 5 classes of size 3."""
        classes = p_cyclic_classes(g2_c3, 2)
        assert len(classes.points) == 15
        assert classes.subgroup_classes == 5
        assert not (classes.points % g2_c3.nA).any()

    def test_no_elements(self, c3):
        """A group without elements of order p has no classes."""
        classes = p_cyclic_classes(c3, 2)
        assert classes.subgroup_classes == 0

    def test_not_prime(self, s4):
        """p must be prime."""
        with pytest.raises(InvalidParameterError):
            p_cyclic_classes(s4, 4)

    def test_subgroup_of_non_member(self, s4):
        """Only elements of order p have a subgroup class."""
        with pytest.raises(InvalidParameterError):
            p_cyclic_classes(s4, 3).subgroup_of(0)


class TestVerifyPWild:
    """Tests for the witness and exact decision procedures."""

    def test_a5_not_wild(self, a5):
        """A single involution class is characteristic."""
        report = verify_p_wild(a5, 2)
        assert report.status == WildStatus.NOT_WILD_EXACT
        assert report.fixed_class is not None

    def test_no_order_p_elements_is_wild(self, c3):
        """Vacuous wildness is decided exactly."""
        assert verify_p_wild(c3, 2).status == WildStatus.WILD_EXACT

    def test_elementary_abelian_exact(self):
        """GL(3, 2) moves every involution of (Z/2)^3."""
        report = verify_p_wild(catalog_group(ELEMENTARY_8), 2, mode="exact")
        assert report.status == WildStatus.WILD_EXACT
        assert report.stats.aut_order == 168
        assert len(report.witnesses) == 7

    def test_g2_c3_witnessed(self, g2_c3):
        """G_2(C3) is <2>-wild with a verifying word for each class."""
        report = verify_p_wild(g2_c3, 2, depth=3)
        assert report.status == WildStatus.WILD_WITNESSED
        assert len(report.witnesses) == 5
        classes = p_cyclic_classes(g2_c3, 2)
        assert all(verify_witness(g2_c3, classes, w) for w in report.witnesses)

    def test_tampered_witness_fails(self, g2_c3):
        """A witness claiming the wrong image class does not verify."""
        classes = p_cyclic_classes(g2_c3, 2)
        witness = verify_p_wild(g2_c3, 2, classes=classes).witnesses[0]
        bogus = witness.model_copy(update={"image_class": witness.class_id})
        assert not verify_witness(g2_c3, classes, bogus)

    def test_depth_zero_inconclusive(self, g2_c3):
        """With no words to try every class stays unresolved."""
        report = verify_p_wild(g2_c3, 2, depth=0)
        assert report.status == WildStatus.INCONCLUSIVE
        assert len(report.unresolved) == 5

    @pytest.mark.parametrize("threads", [4, 8])
    def test_thread_count_does_not_change_result(self, g2_c3, threads):
        """Parallel searches give the same report as a single worker."""
        one = verify_p_wild(g2_c3, 2, threads=1)
        many = verify_p_wild(g2_c3, 2, threads=threads)
        assert one.model_dump() == many.model_dump()

    def test_bad_search_parameters(self, g2_c3):
        """Negative depth and zero workers are rejected up front."""
        with pytest.raises(InvalidParameterError):
            verify_p_wild(g2_c3, 2, depth=-1)
        with pytest.raises(InvalidParameterError):
            verify_p_wild(g2_c3, 2, threads=0)

    def test_table_search_is_inner_only_by_default(self):
        """Inner maps fix every class of an abelian table; Aut letters are opt-in."""
        G = catalog_group(ELEMENTARY_8)
        inner_only = verify_p_wild(G, 2)
        assert inner_only.status == WildStatus.INCONCLUSIVE
        assert len(inner_only.unresolved) == 7
        configure(witness_table_aut=True)
        with_aut = verify_p_wild(G, 2)
        assert with_aut.status == WildStatus.WILD_WITNESSED
        classes = p_cyclic_classes(G, 2)
        assert all(verify_witness(G, classes, w) for w in with_aut.witnesses)

    def test_generator_order_does_not_change_status(self, g2_c3):
        """Permuting the search generators keeps the verdict."""
        from autos import default_generators
        from groups import brute_force_aut

        gens = default_generators(g2_c3, brute_force_aut(g2_c3.A).generators)
        forward = verify_p_wild(g2_c3, 2, gens=gens)
        backward = verify_p_wild(g2_c3, 2, gens=list(reversed(gens)))
        assert forward.status == backward.status == WildStatus.WILD_WITNESSED

    @pytest.mark.parametrize("name", [ELEMENTARY_8, "A5", "S4"])
    def test_witness_agrees_with_exact(self, name):
        """Witness and exact modes agree on small tables."""
        configure(witness_table_aut=True)
        G = catalog_group(name)
        witnessed = verify_p_wild(G, 2, mode="witness")
        exact = verify_p_wild(G, 2, mode="exact")
        assert witnessed.status.is_wild == exact.status.is_wild

    def test_unknown_mode(self, s4):
        """Only witness and exact modes exist."""
        with pytest.raises(InvalidParameterError):
            verify_p_wild(s4, 2, mode="guess")

    def test_timings_opt_in(self, a5):
        """Seconds are only recorded when timings are enabled."""
        assert verify_p_wild(a5, 2).stats.seconds is None
        configure(report_timings=True)
        assert verify_p_wild(a5, 2).stats.seconds is not None

    @pytest.mark.slow
    def test_g3_c3_witnessed(self, g3_c3):
        """G_3(C3), of order 3^11, is <3>-wild."""
        report = verify_p_wild(g3_c3, 3, depth=3)
        assert report.status == WildStatus.WILD_WITNESSED


class TestXi:
    """Tests for pi(G) and xi(G)."""

    def test_sak_c2(self):
        """Sak(C2) = G_2(C2) has xi = [2]."""
        _, chain = build_saksonov(catalog_group("C2"))
        report = xi(chain[-1], mode="exact")
        assert report.pi == [2]
        assert report.xi == [2]

    def test_cyclic_six(self):
        """C6 is wild at no prime."""
        report = xi(catalog_group("C6"), mode="exact")
        assert report.pi == [2, 3]
        assert report.xi == []

    def test_a5(self, a5):
        """A5 is wild at no prime."""
        assert xi(a5).xi == []

    def test_g2_c3_two(self, g2_c3):
        """2 lies in xi(G_2(C3))."""
        assert 2 in xi(g2_c3).xi


class TestTriplets:
    """Tests for ordinary triplets and their wildness."""

    def test_klein_with_c3(self, klein):
        """(V4, 1, C3) is ordinary and wild with an N2C quotient."""
        report = check_triplet(build_triplet(klein, "1", [[1, 3]]))
        assert report.ordinary
        assert report.wild
        assert report.wild_centralizer_form
        assert report.d1_mod_d0_n2c
        assert (report.d0_order, report.d1_order) == (1, 3)
        assert report.involution_orbits == 3

    def test_klein_with_full_aut(self, klein):
        """(V4, 1, Aut) is wild; Aut/1 = S3 has a normal 2-complement."""
        report = check_triplet(build_triplet(klein, "1", "aut"))
        assert report.wild
        assert report.d1_mod_d0_n2c

    def test_a5_not_wild(self, a5):
        """(A5, Inn, Aut) is not wild."""
        report = check_triplet(build_triplet(a5, "inn", "aut"))
        assert not report.wild
        assert report.d1_order == 120

    def test_s3_not_wild(self, s3):
        """(S3, Inn, Inn) is not wild."""
        assert not check_triplet(build_triplet(s3, "inn", "inn")).wild

    def test_no_involutions(self, c3):
        """Groups of odd order give vacuously wild triplets."""
        report = check_triplet(build_triplet(c3, "inn", "aut"))
        assert report.wild
        assert report.involution_orbits == 0

    @pytest.mark.parametrize("name", ["S3", "D5", "C2 x C3", "D3 x C3"])
    def test_twice_odd_never_wild(self, name):
        """Groups of order 2k, k odd, have no wild triplet."""
        G = catalog_group(name)
        specs = random_intermediate_triplets(G, 5, seed=1)
        specs.append(build_triplet(G, "inn", "aut"))
        for t in specs:
            report = check_triplet(t)
            assert not report.wild
            assert report.wild == report.wild_centralizer_form

    def test_missing_inner(self, s3):
        """A trivial D0 is not ordinary for a nonabelian group."""
        with pytest.raises(TripletError) as exc_info:
            check_triplet(build_triplet(s3, "1", "inn"))
        assert "inner" in exc_info.value.missing

    def test_non_strict_reports_ordinary_flag(self, s3):
        """strict=False reports ordinary = False instead of raising."""
        report = check_triplet(build_triplet(s3, "1", "inn"), strict=False)
        assert not report.ordinary

    def test_not_normal(self, klein):
        """A transposition in Aut(V4) = S3 does not span a normal subgroup."""
        with pytest.raises(NotNormalError):
            check_triplet(build_triplet(klein, [[1, 2]], "aut"))

    def test_bad_images(self, klein):
        """Images that do not define an automorphism are rejected."""
        with pytest.raises(InvalidParameterError):
            named_perm_group(klein, [[0, 0]])

    def test_unknown_name(self, klein):
        """Only inn, aut and 1 are named groups."""
        with pytest.raises(InvalidParameterError):
            named_perm_group(klein, "out")

    def test_quotient_triplet(self, s4):
        """(S4, Inn, Inn) modulo V4 is (S3, Inn, Inn), not wild."""
        t = build_triplet(s4, "inn", "inn")
        q = quotient_triplet(t, derived_series(s4)[2])
        assert q.G.order == 6
        assert not check_triplet(q).wild

    def test_quotient_by_non_normal(self, s3):
        """Quotients need a normal subgroup."""
        t = build_triplet(s3, "inn", "inn")
        with pytest.raises(NotNormalError):
            quotient_triplet(t, frozenset({0, s3.decode("(0 1)")}))


class TestHarnesses:
    """Tests for the solvability harness, the corollary and the A5 instance."""

    def test_builtin_catalog(self):
        """The built-in triplets raise no violations and no errors."""
        specs = builtin_catalog_triplets(samples=2, seed=0)
        report = theorem1_harness(specs)
        assert report.checked == len(specs) == 12
        assert report.violations == []
        assert report.errors == []

    def test_solvable_wild_triplet(self, klein):
        """A wild N2C triplet over a solvable group is not a violation."""
        report = theorem1_harness([build_triplet(klein, "1", [[1, 3]])])
        assert report.wild == report.wild_with_n2c == 1
        assert report.violations == []

    def test_errors_are_collected(self, s3, klein):
        """A failing triplet is recorded and the rest still run."""
        report = theorem1_harness([build_triplet(s3, "1", "inn"), build_triplet(klein, "1", "aut")])
        assert report.checked == 1
        assert len(report.errors) == 1

    def test_harness_threads(self):
        """Results do not depend on the worker count."""
        specs = random_intermediate_triplets(catalog_group("D5"), 4, seed=3)
        single = theorem1_harness(specs, threads=1)
        assert theorem1_harness(specs, threads=4) == single
        assert theorem1_harness(specs, threads=8) == single

    def test_harness_needs_a_worker(self, klein):
        """Zero workers is a parameter error, not a pool failure."""
        with pytest.raises(InvalidParameterError):
            theorem1_harness([build_triplet(klein, "1", "aut")], threads=0)

    def test_corollary_s5(self, s5):
        """S5 over A5 has an involution a in A5 with C(a) A5 = S5."""
        result = corollary1_check(s5, derived_subgroup(s5))
        assert not result.refuted
        assert result.involution is not None
        assert result.product_order == 120

    def test_corollary_solvable_reported(self, s4):
        """Solvable groups are reported as outside the corollary."""
        result = corollary1_check(s4, derived_subgroup(s4))
        assert not result.preconditions_met
        assert "solvable" in result.reason
        assert result.involution is None
        assert not result.refuted

    def test_corollary_non_normal_reported(self, s5):
        """A non-normal N is reported, not searched."""
        result = corollary1_check(s5, frozenset({0, s5.decode("(0 1)")}))
        assert not result.preconditions_met
        assert result.reason == "N is not normal in G"

    def test_corollary_quotient_without_n2c_reported(self, a5):
        """A5 over the trivial subgroup: A5 has no normal 2-complement."""
        result = corollary1_check(a5, frozenset({0}))
        assert not result.preconditions_met
        assert result.reason == "G/N has no normal 2-complement"

    def test_corollary_whole_group(self, a5):
        """N = A5: every involution works since C(a) A5 = A5."""
        result = corollary1_check(a5, frozenset(range(60)))
        assert result.preconditions_met
        assert result.product_order == 60

    def test_a5_characteristic_involutions(self, a5):
        """A5 has a characteristic class of involutions."""
        assert has_characteristic_involution_class(a5)

    def test_klein_has_none(self, klein):
        """Aut(V4) permutes the three involutions transitively."""
        assert not has_characteristic_involution_class(klein)

