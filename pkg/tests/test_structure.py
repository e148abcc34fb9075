from fractions import Fraction

import pytest

from oracles import pair_partition_count
from twisted_hv.algebra import HighestWeight, I, L, bracket
from twisted_hv.scalars import UnsupportedModeError, nullspace
from twisted_hv.structure import (
    OutsideTheoremError, avoiding_monomials, character_series, constraint_matrix, corollary5_holds,
    corollary6_check, lemma4_check, predicted_p, quotient_singular_check, singular_vectors,
    submodule_slice, verify_theorem1,
)
from twisted_hv.verma import ONE, basis_of_degree, is_pure_I, verma_module

F = Fraction


def weight(ratio, cli=F(1), h=F(1), cl=F(0)):
    return HighestWeight(F(h), F(ratio) * cli, F(cl), F(cli), F(0))


def test_predicted_p_examples():
    assert predicted_p(HighestWeight.rational(hI=0, cLI=1)) == (1, "L")
    assert predicted_p(HighestWeight.rational(hI=2, cLI=1)) == (1, "I")
    assert predicted_p(HighestWeight.rational(hI=1, cLI=2)) == (None, None)
    assert predicted_p(HighestWeight.rational(hI=3, cLI=3)) == (None, None)
    assert predicted_p(HighestWeight.rational(hI=-6, cLI=2)) == (4, "L")


def test_predicted_p_errors():
    with pytest.raises(OutsideTheoremError):
        predicted_p(HighestWeight.rational(hI=2, cLI=0))
    with pytest.raises(OutsideTheoremError):
        predicted_p(HighestWeight.rational(hI=2, cLI=1, cI="1/3"))


def test_example_i():
    res = singular_vectors(1, HighestWeight.rational("5/3", 0, 1, 2, 0))
    m = res.kernel_basis[0].module
    assert res.kernel_basis == [m.monomial(l_part=[1]) + m.monomial(i_part=[1]) * F(5, 6)]


def test_example_i_constraint_nullspace():
    hw = HighestWeight.rational("7/2", 0, 0, 1, 0)
    rows = constraint_matrix(verma_module(hw), 1)
    assert nullspace(rows) == [[F(7, 2), F(1)]]  # coordinates on (I(-1), L(-1))


@pytest.mark.parametrize("h", [F(0), F(-3, 4), F(11)])
def test_example_ii(h):
    hw = HighestWeight(h, F(2), F(1), F(1), F(0))
    res = singular_vectors(1, hw)
    assert [str(v) for v in res.kernel_basis] == ["I(-1) 𝟏"]


def test_ratio_three_degree_two():
    res = singular_vectors(2, HighestWeight.rational(2, 3, 1, 1, 0))
    assert [str(v) for v in res.kernel_basis] == ["(-1) I(-2) 𝟏 + I(-1)^2 𝟏"]
    assert is_pure_I(res.kernel_basis[0])


def test_irreducible_ratio_has_no_kernel():
    assert singular_vectors(1, HighestWeight.rational(1, 1, 0, 2, 0)).kernel_basis == []


def test_singular_search_needs_rationals():
    with pytest.raises(UnsupportedModeError):
        singular_vectors(1, HighestWeight.symbolic())


def test_verified_annihilators_cover_positive_part():
    res = singular_vectors(3, weight(-2))
    assert set(res.verified_annihilators) == {L(j) for j in (1, 2, 3)} | {I(j) for j in (1, 2, 3)}


def test_lemma4_examples():
    hw1 = HighestWeight.rational("5/3", 0, 1, 2, 0)
    assert lemma4_check(singular_vectors(1, hw1), hw1)
    hw2 = HighestWeight.rational(4, 2, 1, 1, 0)
    assert lemma4_check(singular_vectors(1, hw2), hw2)
    hw3 = HighestWeight.rational(2, 3, 1, 1, 0)
    assert lemma4_check(singular_vectors(2, hw3), hw3)
    assert not lemma4_check(singular_vectors(1, hw3), hw3)


def test_submodule_slices():
    hw = HighestWeight.rational(1, 2, 0, 1, 0)
    v = singular_vectors(1, hw).kernel_basis[0]
    assert submodule_slice(v, 1).rank == 1
    assert submodule_slice(v, 2).rank == 2
    assert submodule_slice(v, 0).rank == 0 and submodule_slice(v, 0).spanning_vectors == []
    with pytest.raises(ValueError):
        submodule_slice(v.module.zero(), 1)


def test_character_examples():
    assert character_series(1, 6).coeffs == [1, 1, 3, 5, 10, 16, 29]
    assert character_series(2, 6).coeffs == [1, 2, 4, 8, 15, 26, 45]
    assert character_series(None, 4).coeffs == [1, 2, 5, 10, 20]
    assert character_series(None, 12).coeffs == [pair_partition_count(n) for n in range(13)]


def test_corollary6_examples():
    hw2 = HighestWeight.rational(1, 2, 0, 1, 0)
    v2 = singular_vectors(1, hw2).kernel_basis[0]
    assert [str(m) for m in avoiding_monomials("I", 1, 2)] == ["I(-2) 𝟏", "L(-2) 𝟏", "L(-1)^2 𝟏"]
    assert corollary6_check(v2, "I", 1, 2)
    hw1 = HighestWeight.rational("5/3", 0, 1, 2, 0)
    v1 = singular_vectors(1, hw1).kernel_basis[0]
    assert [str(m) for m in avoiding_monomials("L", 1, 1)] == ["I(-1) 𝟏"]
    assert corollary6_check(v1, "L", 1, 1)
    hw3 = HighestWeight.rational(2, 3, 1, 1, 0)
    v3 = singular_vectors(2, hw3).kernel_basis[0]
    r = corollary6_check(v3, "I", 2, 1)
    assert r and r.slice_rank == 0 and r.count == 2


def test_corollary6_detects_wrong_factor():
    # avoiding the wrong factor is not a complement of V_n
    hw = HighestWeight.rational(1, 2, 0, 1, 0)
    v = singular_vectors(1, hw).kernel_basis[0]
    assert not corollary6_check(v, "L", 1, 2)


def test_quotient_examples():
    hw2 = HighestWeight.rational(1, 2, 0, 1, 0)
    v2 = singular_vectors(1, hw2).kernel_basis[0]
    assert quotient_singular_check(v2, 1)
    hw1 = HighestWeight.rational("5/3", 0, 1, 2, 0)
    v1 = singular_vectors(1, hw1).kernel_basis[0]
    assert quotient_singular_check(v1, 2)
    hw_a = HighestWeight.rational(1, 1, 0, 2, 0)
    for n in range(1, 4):
        q = quotient_singular_check(None, n, module=verma_module(hw_a))
        assert q and q.solution_dim == 0


def test_quotient_check_sees_missing_submodule():
    # using V = 0 at a reducible weight leaves the singular vector as a witness
    hw = HighestWeight.rational(1, 2, 0, 1, 0)
    q = quotient_singular_check(None, 1, module=verma_module(hw))
    assert not q and q.solution_dim == 1


@pytest.mark.parametrize("hw, case, p", [
    (HighestWeight.rational(1, 0, 1, 1, 0), "b", 1),
    (HighestWeight.rational(1, 1, 0, 1, 0), "a", None),
    (HighestWeight.rational(2, 3, 1, 1, 0), "b", 2),
])
def test_verify_theorem1_examples(hw, case, p):
    rep = verify_theorem1(hw, 5)
    assert (rep.case, rep.p) == (case, p)
    assert rep.passed, rep.failures()
    if case == "a":
        assert {r.check for r in rep.records} == {"det_nonzero", "no_singular_vector"}
    if p == 2:
        assert any(r.check == "remark_pure_I" and r.passed for r in rep.records)


def test_verify_theorem1_rejects_outside_domain():
    with pytest.raises(OutsideTheoremError):
        verify_theorem1(HighestWeight.rational(1, 1, 0, 0, 0), 3)


@pytest.mark.parametrize("ratio", [-3, -2, -1, 0, 2, 3, 4, 5, 6])
def test_existence_at_p_and_nothing_below(ratio):
    cli = F(ratio % 4 + 1, 3)
    hw = weight(ratio, cli=cli, h=F(2, 7), cl=F(-1))
    p, _ = predicted_p(hw)
    assert p == abs(ratio - 1)
    for n in range(1, p):
        assert singular_vectors(n, hw).dimension == 0
    res = singular_vectors(p, hw)
    assert res.dimension >= 1
    assert res.dimension == 1  # measured; not a claim of the theorem


@pytest.mark.parametrize("ratio", [0, -1, 2, 3])
def test_corollary5_spot_check(ratio):
    hw = weight(ratio, cli=F(-5, 2))
    p, case = predicted_p(hw)
    v = singular_vectors(p, hw).kernel_basis[0]
    m = v.module
    for d in range(0, 4):
        images = [m.apply_monomial(w, v) for w in basis_of_degree(d)]
        # mix the generators too: arbitrary U(L_-) combinations
        images.append(sum(images[1:], images[0]) if len(images) > 1 else images[0])
        assert corollary5_holds(images, case, p)


@pytest.mark.parametrize("n", range(1, 7))
def test_heisenberg_pivot(n):
    for ratio in range(-2, 9):
        hw = weight(ratio, cli=F(3, 2))
        m = verma_module(hw)
        val = m.apply_generator(bracket(L(n), I(-n)), m.highest_weight_vector()).coeff(ONE)
        assert val == n * (hw.hI - (n + 1) * hw.cLI)
        assert (val == 0) == (ratio == n + 1)
