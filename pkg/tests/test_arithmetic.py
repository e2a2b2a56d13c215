import pytest
from hypothesis import given, settings, strategies as st

from cohrealize.arithmetic import (
    FIXTURE_FALSE, FIXTURE_TRUE, arith_prop, arith_realize, case_term, check_function_realizer,
    function_realizer, parse_sentence, realize, realizer_prooflike,
)
from cohrealize.cliques import TOP, apply, numeral
from cohrealize.errors import FalseSentence, ParseError
from cohrealize.types.universe import Universe

U = Universe(3, 2).warm()


class TestParser:
    def test_prints_back(self):
        assert str(parse_sentence('forall x <= 3. x + 0 = x')) == '∀x≤3. x + 0 = x'
        assert str(parse_sentence('∃y≤2. y * (y + 1) = 2')) == '∃y≤2. y * (y + 1) = 2'

    def test_truth(self):
        assert parse_sentence('forall x <= 3. exists y <= 3. x * 0 = y').is_true()
        assert not parse_sentence('exists x <= 3. x * x = 2').is_true()
        assert parse_sentence('double(2) = square(2)').is_true()

    @pytest.mark.parametrize('text, position', [
        ('x = 0', 0),
        ('1 + = 2', 4),
        ('0 =', 3),
        ('forall S <= 1. 0 = 0', 7),
        ('0 = 0 0', 6),
    ])
    def test_errors_carry_offsets(self, text, position):
        with pytest.raises(ParseError) as e:
            parse_sentence(text)
        assert e.value.position == position


class TestRealizers:
    def test_equations_are_realized_by_numerals(self):
        assert realize(parse_sentence('0 = 0')) == numeral(0)
        assert realize(parse_sentence('1 + 1 = 2')) == numeral(2)

    def test_universal_realizer_is_a_case_split(self, universe):
        t = realize(parse_sentence('forall x <= 2. x * 1 = x'), universe)
        assert apply(t, TOP, universe) == TOP
        for n in range(3):
            assert apply(t, numeral(n), universe) == numeral(n)

    @given(st.sampled_from(FIXTURE_TRUE))
    @settings(deadline=None, max_examples=12)
    def test_true_sentences(self, text):
        t, verdict = arith_realize(text, U)
        assert not verdict.refutes
        assert not realizer_prooflike(t, U).no

    @given(st.sampled_from(FIXTURE_FALSE))
    @settings(deadline=None, max_examples=4)
    def test_false_sentences(self, text):
        with pytest.raises(FalseSentence):
            arith_realize(text, U)

    def test_equation_props(self, universe):
        prop = arith_prop(parse_sentence('1 + 1 = 2'), universe)
        assert prop.contains(numeral(2), universe)
        assert not prop.contains(numeral(1), universe)


class TestFunctions:
    def test_case_term_keeps_top(self, universe):
        t = case_term([numeral(1), numeral(0)])
        assert t.is_finite
        assert apply(t, TOP, universe) == TOP
        assert apply(t, numeral(1), universe) == numeral(0)

    def test_double(self, universe):
        t = function_realizer('double', 3)
        assert apply(t, numeral(2), universe) == numeral(4)

    @pytest.mark.parametrize('name', ['S', 'double', 'square'])
    def test_function_constants(self, universe, name):
        assert check_function_realizer(name, 3, universe) == []

    def test_unknown_function(self):
        with pytest.raises(ValueError):
            function_realizer('cube', 2)
