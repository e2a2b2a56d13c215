import pytest
from hypothesis import given, settings, strategies as st

from cohrealize.antichains import (
    AntichainRep, antichain_meet, compatible, minimal_points, minimize_orthogonal, random_families, smyth_leq,
)
from cohrealize.cliques import TOP, Process, Stack, evaluate, numeral
from cohrealize.errors import IllPosedInput
from cohrealize.token_core import hat
from cohrealize.types.token import get_context
from cohrealize.types.universe import Universe

ctx = get_context()
NU0, NU1 = ctx.nu(0), ctx.nu(1)
HAT0 = hat(NU0)
U = Universe(3, 2).warm()
FAMILIES = random_families(100, seed=0, pool=U.cliques())
POINTS = [t.token_set for t in U.cliques()]


class TestRepresentation:
    def test_incompatible_points_form_an_antichain(self):
        a = AntichainRep([{NU0}, {NU1}])
        assert len(a) == 2
        assert a.upset_contains({NU0, HAT0})
        assert not a.upset_contains({HAT0})

    def test_comparable_points_are_rejected(self):
        with pytest.raises(IllPosedInput):
            AntichainRep([{NU0}, {NU0, HAT0}])

    def test_compatible_points_are_rejected(self):
        with pytest.raises(IllPosedInput):
            AntichainRep([{NU0}, {HAT0}])

    def test_minimal_points(self):
        assert minimal_points([frozenset({NU0}), frozenset({NU0, HAT0})]) == [frozenset({NU0})]
        assert compatible(frozenset({NU0}), frozenset({HAT0}))
        assert not compatible(frozenset({NU0}), frozenset({NU1}))


class TestMeet:
    def test_unit(self):
        a = AntichainRep.cone({NU0})
        assert antichain_meet([]) == AntichainRep.everything()
        assert antichain_meet([a]) == a

    def test_cones_meet_at_their_union(self):
        meet = antichain_meet([AntichainRep.cone({NU0}), AntichainRep.cone({HAT0})])
        assert meet == AntichainRep.cone({NU0, HAT0})

    def test_incompatible_cones_meet_at_nothing(self):
        meet = antichain_meet([AntichainRep.cone({NU0}), AntichainRep.cone({NU1})])
        assert len(meet) == 0

    def test_smyth_order(self):
        a = AntichainRep.cone({NU0})
        meet = antichain_meet([a, AntichainRep.cone({HAT0})])
        assert smyth_leq(AntichainRep.everything(), a)
        assert smyth_leq(a, meet)
        assert not smyth_leq(meet, a)

    @given(st.sampled_from(FAMILIES))
    @settings(deadline=None, max_examples=30)
    def test_meet_is_the_upset_intersection(self, family):
        meet = antichain_meet(family)
        assert meet.violations() == []
        for p in POINTS:
            assert meet.upset_contains(p) == all(a.upset_contains(p) for a in family)

    @given(st.sampled_from(FAMILIES))
    @settings(deadline=None, max_examples=30)
    def test_lattice_laws(self, family):
        a = family[0]
        assert antichain_meet([a, a]) == a
        for b in family[1:]:
            assert antichain_meet([a, b]) == antichain_meet([b, a])
        if len(family) == 3:
            b, c = family[1], family[2]
            assert antichain_meet([antichain_meet([a, b]), c]) == antichain_meet([a, antichain_meet([b, c])])


class TestMinimize:
    def test_keeps_tokens_in_some_stack(self):
        stacks = [Stack.seq([TOP])]
        t = numeral(0)
        kept = minimize_orthogonal(TOP, stacks, U)
        assert kept == TOP
        assert minimize_orthogonal(t, stacks, U) == t
        assert all(evaluate(Process(kept, pi), universe=U).top for pi in stacks)
