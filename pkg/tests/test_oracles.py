import random

import pytest

from onerelator import oracles, words
from onerelator.oracles import (
    MAT_A,
    MAT_B,
    AffineMap,
    ProjectiveMatrix,
    affine_eval_bs1n,
    check_commutator_roots,
    check_conjugacy_theorem,
    check_freiheitssatz,
    check_modular_group,
    cyclically_reduced_words,
    free_at_length,
    is_primitive_rank2,
    ncl_semidecide,
    psl2_eval,
    random_reduced_word,
    smith_invariants,
)
from onerelator.presentations import make_presentation
from onerelator.words import Alphabet

AB = Alphabet(("a", "b"))
Z2 = make_presentation(AB, (1, 2, -1, -2))


# -- normal closure ---------------------------------------------------------

def test_ncl_finds_relator_and_conjugates():
    cert = ncl_semidecide(Z2, Z2.relator, conj_len=0, max_factors=1)
    assert cert is not None
    assert cert.expand(Z2.relator) == Z2.relator
    w = words.concat([(1,), Z2.relator, (-1,)])
    cert = ncl_semidecide(Z2, w, conj_len=1, max_factors=1)
    assert cert is not None and cert.expand(Z2.relator) == w


def test_ncl_empty_word():
    cert = ncl_semidecide(Z2, (), conj_len=1, max_factors=2)
    assert cert is not None
    assert cert.expand(Z2.relator) == ()


def test_ncl_product_of_two_conjugates():
    # commutator of squares lies in ncl(abAB) but needs several factors
    w = words.reduce((1, 1, 2, 2, -1, -1, -2, -2))
    cert = ncl_semidecide(Z2, w, conj_len=2, max_factors=4)
    assert cert is not None
    assert cert.expand(Z2.relator) == w


def test_ncl_miss_is_silent():
    assert ncl_semidecide(Z2, (1,), conj_len=2, max_factors=3) is None


# -- modular group ----------------------------------------------------------

def test_projective_matrix_normalization():
    assert ProjectiveMatrix.of(-1, 0, 0, -1) == ProjectiveMatrix.identity()
    with pytest.raises(ValueError):
        ProjectiveMatrix.of(1, 0, 0, 2)
    m = ProjectiveMatrix.of(2, 1, 1, 1)
    assert m * m.inverse() == ProjectiveMatrix.identity()


def test_generator_orders():
    assert (MAT_A * MAT_A).is_identity()
    assert (MAT_B * MAT_B * MAT_B).is_identity()
    assert not (MAT_B * MAT_B).is_identity()


def test_commutator_is_corrected_beta0():
    beta0 = psl2_eval((1, 2, -1, -2))
    assert {beta0, beta0.inverse()} == {ProjectiveMatrix.of(2, 1, 1, 1),
                                        ProjectiveMatrix.of(1, -1, -1, 2)}
    assert "2z+1" in ProjectiveMatrix.of(2, 1, 1, 1).mobius()


def test_free_at_length():
    beta0 = psl2_eval((1, 2, -1, -2))
    beta1 = psl2_eval((1, -2, -1, 2))
    assert free_at_length(beta0, beta1, 8)
    # a has order 2, so the pair (a, b) is certainly not free
    assert not free_at_length(MAT_A, MAT_B, 2)


# -- Smith normal form ------------------------------------------------------

def test_smith_invariants_basics():
    assert smith_invariants([[2, 0], [0, 3]]) == (1, 6)
    assert smith_invariants([[1, 0], [0, 1]]) == (1, 1)
    assert smith_invariants([[0, 0], [0, 0]]) == (0, 0)
    assert smith_invariants([[2, 4], [4, 8]]) == (2, 0)
    assert smith_invariants([[6]]) == (6,)


def test_smith_invariants_divisibility_chain():
    rng = random.Random(5)
    for _ in range(50):
        m = [[rng.randint(-9, 9) for _ in range(3)] for _ in range(3)]
        inv = smith_invariants(m)
        nonzero = [d for d in inv if d]
        for d1, d2 in zip(nonzero, nonzero[1:]):
            assert d2 % d1 == 0
        assert all(d >= 0 for d in inv)


def test_smith_invariants_size_guard():
    with pytest.raises(ValueError):
        smith_invariants([[0] * 9 for _ in range(9)])


# -- primitivity ------------------------------------------------------------

def test_primitive_generators_and_images():
    assert is_primitive_rank2((1,))
    assert is_primitive_rank2((-2,))
    assert is_primitive_rank2((1, 2))
    assert is_primitive_rank2((1, 1, 2))
    assert is_primitive_rank2((1, 2, -1))  # conjugate of a generator


def test_non_primitive_words():
    assert not is_primitive_rank2((1, 1))
    assert not is_primitive_rank2((1, 2, -1, -2))
    assert not is_primitive_rank2((1, 1, 2, 2))
    assert not is_primitive_rank2(())


def test_primitivity_is_automorphism_invariant():
    # applying a basis change to a primitive word keeps it primitive
    w = (1, 2)
    image = words.reduce([lt for a in w for lt in
                          ((1, 2) if a == 1 else (2,))])
    assert is_primitive_rank2(image)


# -- affine representation --------------------------------------------------

def test_affine_map_algebra():
    from fractions import Fraction
    m = AffineMap(Fraction(2), Fraction(3))
    assert m.compose(m.inverse()).is_identity()
    assert m.inverse().compose(m).is_identity()
    # composition order: (self after other)
    n = AffineMap(Fraction(1), Fraction(1))
    assert m.compose(n).offset == Fraction(5)  # 2*(x+1)+3


def test_affine_kills_bs_relator():
    for n in (2, 3, -2):
        relator = words.reduce((1, 2, -1) + tuple([-2] * n if n > 0
                                                  else [2] * (-n)))
        assert affine_eval_bs1n(relator, n).is_identity()


def test_affine_detects_nontrivial_words():
    assert not affine_eval_bs1n((2,), 2).is_identity()
    assert not affine_eval_bs1n((1,), 2).is_identity()
    # b a b a^-1 b^-2 equals b in BS(1,2)
    assert not affine_eval_bs1n((2, 1, 2, -1, -2, -2), 2).is_identity()


def test_affine_rejects_degenerate_n():
    with pytest.raises(ValueError):
        affine_eval_bs1n((1,), 0)


# -- enumeration and suites -------------------------------------------------

def test_cyclically_reduced_words_counts():
    pool = cyclically_reduced_words(2, 2)
    assert all(words.is_cyclically_reduced(w) and w for w in pool)
    assert len(pool) == 4 + 12  # 4 letters plus all 12 reduced pairs


def test_random_reduced_word_is_reduced():
    rng = random.Random(0)
    for _ in range(100):
        w = random_reduced_word(rng, 3, rng.randint(0, 10))
        assert words.reduce(w) == w


def test_check_suites_pass_at_small_scale():
    assert check_conjugacy_theorem(3).passed
    assert check_commutator_roots(3).passed
    assert check_modular_group().passed
    report = check_freiheitssatz(relators=10, words_per_relator=5, seed=1)
    assert report.passed and report.checked == 50


def test_check_report_lines_end_with_verdict():
    report = oracles.CheckReport(name="demo", checked=3, hits=1)
    assert report.lines()[-1] == "PASS"
    report.violations.append("made-up")
    assert report.lines()[-1] == "FAIL"
    assert any("made-up" in line for line in report.lines())


def test_check_suites_reject_non_desk_scale():
    with pytest.raises(ValueError):
        check_conjugacy_theorem(6)
