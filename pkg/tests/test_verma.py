import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import pair_partition_count
from twisted_hv.algebra import C_I, C_L, C_LI, HighestWeight, I, L, bracket
from twisted_hv.properties import lemma2_suite, lemma3a_suite, lemma3b_suite, random_vector
from twisted_hv.verma import (
    ONE, PBWMonomial, basis_of_degree, i_degree_split, is_pure_I, lowest_i_component,
    partial_derivative, verma_module,
)

SYM = verma_module(HighestWeight.symbolic())
hw_sym = SYM.hw
P = PBWMonomial.of


def vec(i=(), l=(), c=1, module=SYM):
    return module.vector({P(i, l): c})


def test_basis_small_degrees():
    assert basis_of_degree(0) == (ONE,)
    assert [str(m) for m in basis_of_degree(1)] == ["I(-1) 𝟏", "L(-1) 𝟏"]
    assert [str(m) for m in basis_of_degree(2)] == [
        "I(-2) 𝟏", "I(-1)^2 𝟏", "I(-1) L(-1) 𝟏", "L(-2) 𝟏", "L(-1)^2 𝟏"]


@pytest.mark.parametrize("n", range(13))
def test_basis_size_is_pair_partition_count(n):
    # 1, 2, 5, 10, 20, 36, 65, 110, 185, 300, 481, ...
    assert len(basis_of_degree(n)) == pair_partition_count(n)
    assert len(set(basis_of_degree(n))) == len(basis_of_degree(n))


def test_monomial_invariants():
    m = P([3, 1, 3], [2])
    assert (m.i_part, m.l_part, m.degree, m.i_degree, m.length) == ((3, 3, 1), (2,), 9, 3, 4)
    with pytest.raises(ValueError):
        PBWMonomial((1, 2), ())
    with pytest.raises(ValueError):
        PBWMonomial((), (0,))
    assert json.dumps(m.to_json()) == '{"I": [3, 3, 1], "L": [2]}'


def test_apply_generator_examples():
    h, hI, cL, cLI, cI = hw_sym.values()
    assert SYM.apply_generator(L(1), vec(l=[1])) == SYM.vector({ONE: 2 * h})
    assert SYM.apply_generator(L(1), vec(i=[1])) == SYM.vector({ONE: hI - 2 * cLI})
    assert SYM.apply_generator(I(1), vec(i=[1])) == SYM.vector({ONE: cI})
    assert SYM.apply_generator(L(-1), vec(i=[1])) == vec(i=[1], l=[1]) + vec(i=[2])


def test_level_zero_heisenberg_pairing_vanishes():
    m = verma_module(HighestWeight.rational(1, 2, 3, 4, 0))
    assert not m.apply_generator(I(1), m.monomial(i_part=[1]))


def test_apply_word_examples():
    one = SYM.highest_weight_vector()
    assert SYM.apply_word([], vec(i=[2])) == vec(i=[2])
    assert SYM.apply_word([L(-1), L(-1)], one) == vec(l=[1, 1])
    assert SYM.apply_word([I(1), L(-1)], one) == SYM.vector({ONE: hw_sym.hI})


def test_degree_zero_and_central_action():
    m = verma_module(HighestWeight.rational("1/3", 2, 5, 7, 11))
    v = m.monomial([2], [1, 1])
    assert m.apply_generator(L(0), v) == v * (Fraction(1, 3) + 4)
    assert m.apply_generator(I(0), v) == v * 2
    assert m.apply_generator(C_L, v) == v * 5
    assert m.apply_generator(C_LI, v) == v * 7
    assert m.apply_generator(C_I, v) == v * 11


def test_i_degree_split_examples():
    assert list(i_degree_split(vec(i=[1], l=[1])).components) == [1]
    assert list(i_degree_split(SYM.highest_weight_vector()).components) == [0]
    w = vec(l=[1]) + vec(i=[1])
    split = i_degree_split(w)
    assert list(split.components) == [0, 1]
    assert split.reconstruct() == w


def test_lowest_i_component_examples():
    h, hI, cL, cLI, cI = hw_sym.values()
    assert lowest_i_component(vec(l=[1]) + vec(i=[1], c=h)) == vec(l=[1])
    assert lowest_i_component(vec(i=[1])) == vec(i=[1])
    assert lowest_i_component(vec(i=[1, 1]) - vec(i=[2], c=cLI)) == vec(i=[2], c=-cLI)
    with pytest.raises(ValueError):
        lowest_i_component(SYM.zero())


def test_partial_derivative_examples():
    assert partial_derivative("L", 1, vec(l=[1, 1])) == vec(l=[1], c=2)
    assert partial_derivative("I", 2, vec(i=[2], l=[3])) == vec(l=[3])
    assert partial_derivative("I", 1, vec(l=[1])) == 0
    assert partial_derivative("L", 1, SYM.highest_weight_vector()) == 0


def test_is_pure_I_examples():
    cLI = hw_sym.cLI
    assert is_pure_I(vec(i=[1, 1]) - vec(i=[2], c=cLI))
    assert not is_pure_I(vec(l=[2]))
    assert is_pure_I(SYM.highest_weight_vector())


def test_vector_serialization():
    m = verma_module(HighestWeight.rational(1, 0, 0, 1, 0))
    v = m.monomial(l_part=[1]) + m.monomial(i_part=[1]) * Fraction(5, 6)
    assert v.to_json() == [{"monomial": {"I": [1], "L": []}, "coeff": "5/6"},
                           {"monomial": {"I": [], "L": [1]}, "coeff": "1"}]
    assert str(v) == "(5/6) I(-1) 𝟏 + L(-1) 𝟏"


gen_small = st.one_of(st.builds(L, st.integers(-5, 5)), st.builds(I, st.integers(-5, 5)),
                      st.sampled_from([C_L, C_LI, C_I]))
MOD = verma_module(HighestWeight.rational("3/5", "-7/2", "4/3", "5/2", "2/7"))


@settings(max_examples=200, derandomize=True, deadline=None)
@given(gen_small, gen_small, st.integers(0, 2**32))
def test_module_axiom(x, y, seed):
    v = random_vector(MOD, random.Random(seed), 5)
    lhs = MOD.apply_generator(x, MOD.apply_generator(y, v)) - MOD.apply_generator(y, MOD.apply_generator(x, v))
    assert lhs == MOD.apply_generator(bracket(x, y), v)


@settings(max_examples=100, derandomize=True, deadline=None)
@given(gen_small, st.integers(0, 4), st.integers(0, 2**32))
def test_action_respects_grading(g, n, seed):
    v = random_vector(MOD, random.Random(seed), 4, degree=n)
    out = MOD.apply_generator(g, v)
    shift = 0 if g.is_central else g.index
    assert out.degrees() <= {n - shift}
    # L(0) eigenvalue is h + degree
    assert MOD.apply_generator(L(0), v) == v * (MOD.hw.h + n)


@pytest.mark.parametrize("suite", [lemma2_suite, lemma3a_suite, lemma3b_suite])
def test_lemma_suites(suite):
    res = suite(seed=1)
    assert res.cases >= 200
    assert res.passed, res.counterexample


def test_lemma3a_vanishing_factor_when_p_is_smallest_l_index():
    # ratio 1 - p: the factor hI + (p-1) cLI vanishes, so I(p) kills the degree-k part of L(-p)1
    p = 2
    m = verma_module(HighestWeight.rational(1, 1 - p, 0, 1, 0))
    assert not i_degree_split(m.apply_generator(I(p), m.monomial(l_part=[p]))).components.get(0)
