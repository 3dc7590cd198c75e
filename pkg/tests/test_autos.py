"""
Tests for automorphisms of G_p(A): primitives, words, lifts, linear
extensions and the conjugator moving (g, t) to (g, 0).
"""

import os
import sys

import numpy as np
import pytest
from pydantic import ValidationError

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from autos import (
    aut_equal,
    check_multiplicative,
    compose,
    conjugator_aut,
    default_generators,
    extend_linear,
    from_word,
    identity_aut,
    invert,
    lemma5_certificate,
    lemma5_conjugator,
    matrix_on_B,
    power,
    primitive_aut,
    sigma_lift_check,
)
from catalog import catalog_group
from errors import EquivarianceError, InvalidParameterError, ParentMismatchError, PreconditionError
from groups import brute_force_aut
from semidirect import build_Gp

G2_C3 = build_Gp(catalog_group("C3"), 2)


def _all_elements(G):
    return [G.unrank(i) for i in range(G.order)]


class TestPrimitives:
    """Tests for psi, phi, psi_i, inner and lifts on G_2(C3)."""

    @pytest.mark.parametrize(
        "kind, kwargs",
        [
            ("psi", {}),
            ("phi", {}),
            ("psi_i", {"index": 1}),
            ("psi_i", {"index": 2}),
            ("inner", {"x": G2_C3.unrank(13)}),
            ("lift", {"F": [2]}),
        ],
    )
    def test_multiplicative_exhaustive(self, kind, kwargs):
        """Every primitive is multiplicative on all 48^2 pairs."""
        f = primitive_aut(G2_C3, kind, **kwargs)
        assert check_multiplicative(f)

    def test_psi_and_phi_fix_base(self):
        """psi and phi fix every (a, 0)."""
        for kind in ("psi", "phi"):
            f = primitive_aut(G2_C3, kind)
            assert all(f(G2_C3.base(a)) == G2_C3.base(a) for a in range(3))

    def test_psi_shifts_blocks(self):
        """psi(v^1_g) = v^2_g."""
        f = primitive_aut(G2_C3, "psi")
        B = G2_C3.B
        assert f(G2_C3.vec(B.basis(1, 1))) == G2_C3.vec(B.basis(2, 1))

    def test_phi_on_last_block(self):
        """phi(v^r_g) = v^r_g - v^1_g."""
        f = primitive_aut(G2_C3, "phi")
        B = G2_C3.B
        assert f(G2_C3.vec(B.basis(2, 1))) == G2_C3.vec(B.basis(2, 1) - B.basis(1, 1))

    def test_psi_order_r(self):
        """psi has order r on B."""
        f = primitive_aut(G2_C3, "psi")
        assert aut_equal(power(f, G2_C3.r), identity_aut(G2_C3))
        assert not aut_equal(f, identity_aut(G2_C3))

    def test_phi_order_p(self):
        """phi composed p times is the identity."""
        f = primitive_aut(G2_C3, "phi")
        assert aut_equal(power(f, G2_C3.p), identity_aut(G2_C3))

    def test_psi_i_rule(self):
        """psi_i(a, v) = (a, v + v^i_a)."""
        f = primitive_aut(G2_C3, "psi_i", index=2)
        assert f(G2_C3.base(1)) == G2_C3.element(1, G2_C3.B.basis(2, 1))

    def test_psi_i_index_range(self):
        """psi_i needs 1 <= i <= r."""
        with pytest.raises(InvalidParameterError):
            primitive_aut(G2_C3, "psi_i", index=3)

    def test_psi_needs_semidirect_parent(self, s3):
        """psi is only defined on G_p(A)."""
        with pytest.raises(InvalidParameterError):
            primitive_aut(s3, "psi")

    def test_inner_needs_element(self):
        """inner without an element is rejected."""
        with pytest.raises(InvalidParameterError):
            primitive_aut(G2_C3, "inner")

    def test_lift_rejects_non_automorphism(self):
        """Generator images must define an automorphism of A."""
        with pytest.raises(InvalidParameterError):
            primitive_aut(G2_C3, "lift", F=[0])

    def test_perm_on_table_group(self, klein):
        """perm letters permute TableGroup indices."""
        f = primitive_aut(klein, "perm", F=[0, 2, 1, 3])
        assert [f(x) for x in range(4)] == [0, 2, 1, 3]
        assert check_multiplicative(f)

    def test_perm_wrong_degree(self, klein):
        """A perm letter must act on every element."""
        with pytest.raises(InvalidParameterError):
            primitive_aut(klein, "perm", F=[0, 1])


class TestWords:
    """Tests for composing, inverting and serialising words."""

    def test_compose_order(self):
        """compose(f, g) applies g first."""
        f = primitive_aut(G2_C3, "psi")
        g = primitive_aut(G2_C3, "phi")
        fg = compose(f, g)
        assert [w.kind for w in fg.word] == ["phi", "psi"]
        x = G2_C3.unrank(45)
        assert fg(x) == f(g(x))

    def test_invert(self):
        """f o f^-1 is the identity."""
        f = compose(primitive_aut(G2_C3, "psi_i", index=1), primitive_aut(G2_C3, "phi"))
        inv = invert(f)
        assert all(f(inv(x)) == x for x in _all_elements(G2_C3))

    def test_from_word_round_trip(self):
        """A serialised word evaluates like the original."""
        f = compose(primitive_aut(G2_C3, "inner", x=G2_C3.unrank(7)), primitive_aut(G2_C3, "psi"))
        payload = [w.model_dump() for w in f.descriptors()]
        g = from_word(G2_C3, payload)
        assert aut_equal(f, g)

    def test_parent_mismatch(self, g2_c2):
        """Words over different groups do not compose."""
        with pytest.raises(ParentMismatchError):
            compose(primitive_aut(G2_C3, "psi"), primitive_aut(g2_c2, "psi"))

    def test_unknown_letter(self):
        """Unknown kinds fail validation."""
        with pytest.raises(ValidationError):
            from_word(G2_C3, [{"kind": "frobenius"}])

    def test_default_generators(self):
        """G_2(C3) search generators: psi, phi, psi_1, psi_2, one lift, three inner maps."""
        gens = default_generators(G2_C3, brute_force_aut(catalog_group("C3")).elements)
        kinds = [g.word[0].kind for g in gens]
        assert kinds == ["psi", "phi", "psi_i", "psi_i", "lift", "inner", "inner", "inner"]


class TestLifts:
    """Tests for lifting automorphisms of A."""

    @pytest.mark.parametrize("base", ["C3", "S3"])
    def test_every_automorphism_lifts(self, base):
        """Each element of Aut(A) lifts and induces itself on G/B."""
        A = catalog_group(base)
        G = build_Gp(A, 2)
        for F in brute_force_aut(A).elements:
            assert sigma_lift_check(G, F)

    def test_s3_lifts_are_multiplicative(self):
        """Lifts to G_2(S3) are multiplicative on sampled products."""
        A = catalog_group("S3")
        G = build_Gp(A, 2)
        for F in brute_force_aut(A).generators:
            assert check_multiplicative(primitive_aut(G, "lift", F=F), samples=50)

    def test_lifts_on_c3_exhaustive(self):
        """Both automorphisms of C3 lift to automorphisms of G_2(C3)."""
        for F in brute_force_aut(catalog_group("C3")).elements:
            assert check_multiplicative(primitive_aut(G2_C3, "lift", F=F))


class TestLinear:
    """Tests for A-equivariant linear maps on B."""

    def test_psi_and_phi_are_equivariant(self):
        """The matrices of psi and phi pass the extension check."""
        for kind in ("psi", "phi"):
            f = primitive_aut(G2_C3, kind)
            g = extend_linear(G2_C3, matrix_on_B(f))
            assert aut_equal(f, g)

    def test_block_swap(self):
        """Swapping the two blocks is psi for r = 2."""
        L = np.kron(np.array([[0, 1], [1, 0]]), np.eye(2, dtype=np.int64))
        assert aut_equal(extend_linear(G2_C3, L), primitive_aut(G2_C3, "psi"))

    def test_non_equivariant(self):
        """Swapping v_g and v_g^2 inside each block does not commute with g."""
        L = np.kron(np.eye(2, dtype=np.int64), np.array([[0, 1], [1, 0]]))
        with pytest.raises(EquivarianceError):
            extend_linear(G2_C3, L)

    def test_singular(self):
        """Singular matrices are rejected."""
        with pytest.raises(InvalidParameterError):
            extend_linear(G2_C3, np.zeros((4, 4), dtype=np.int64))

    def test_wrong_shape(self):
        """The matrix must be dim x dim."""
        with pytest.raises(InvalidParameterError):
            extend_linear(G2_C3, np.eye(3, dtype=np.int64))

    def test_lift_matrix(self):
        """Inversion on C3 lifts to swapping v_g and v_g^2 in each block."""
        M = matrix_on_B(primitive_aut(G2_C3, "lift", F=[2]))
        assert np.array_equal(M, np.kron(np.eye(2, dtype=np.int64), np.array([[0, 1], [1, 0]])))


class TestConjugator:
    """Tests for moving (g, t) of order p to (g, 0)."""

    def test_g2_c2_exhaustive(self, g2_c2):
        """Every (g, t) with g != 1 in G_2(C2) is conjugated to (g, 0)."""
        for i in range(16):
            x = g2_c2.unrank(i)
            if x.a == 0:
                continue
            result = lemma5_certificate(g2_c2, x)
            assert result.verified
            assert from_word(g2_c2, result.word)(x) == g2_c2.base(x.a)

    def test_g3_c3_single_block(self, g3_c3):
        """x = (g, v^1_g) needs u = 0 and psi_1^-1."""
        x = g3_c3.element(1, g3_c3.B.basis(1, 1))
        u, exps = lemma5_conjugator(g3_c3, x)
        assert u.is_zero()
        assert exps == [-1, 0, 0, 0, 0]
        assert conjugator_aut(g3_c3, u, exps)(x) == g3_c3.base(1)

    def test_identity_base_rejected(self, g3_c3):
        """Elements of B are not handled."""
        with pytest.raises(PreconditionError):
            lemma5_conjugator(g3_c3, g3_c3.vec(g3_c3.B.basis(1, 1)))

    def test_wrong_order_rejected(self):
        """(g, t) in G_2(C3) has order 3, not p = 2."""
        x = G2_C3.element(1, G2_C3.B.basis(1, 1))
        with pytest.raises(PreconditionError):
            lemma5_conjugator(G2_C3, x)

    @pytest.mark.slow
    def test_g3_c3_sampled(self, g3_c3):
        """1000 sampled order-3 elements outside B are all conjugated to (g, 0)."""
        ranks = g3_c3.elements_of_order(3)
        ranks = ranks[ranks % g3_c3.nA != 0]
        rng = np.random.default_rng(0)
        for rank in rng.choice(ranks, size=1000, replace=False):
            x = g3_c3.unrank(int(rank))
            assert lemma5_certificate(g3_c3, x).verified
