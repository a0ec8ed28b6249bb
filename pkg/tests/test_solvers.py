import unittest

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from online_manip.crosscheck.engine import Bounds, crosscheck
from online_manip.model.election import OMS, Direction, ElectionSnapshot, ProblemVariant, Role, Voter, Weighting, WinnerModel
from online_manip.model.errors import LengthMismatch, WrongVariant
from online_manip.oracle.game import decide_online, winning_ballots
from online_manip.rules.scoring import RuleId, RuleKind, ScoringVector
from online_manip.solvers.approval import decide_1veto_threshold, decide_kapproval_kveto_unweighted
from online_manip.solvers.plurality import decide_plurality_constructive_weighted, decide_plurality_destructive_weighted
from online_manip.solvers.routing import ROUTING_TABLE, explain, route, solve
from online_manip.solvers.scoring import NotPolynomialCase, decide_scoring_weighted
from online_manip.solvers.state import ScoreState, monus

ABC = ("a", "b", "c")
UNWEIGHTED = ProblemVariant(weighting=Weighting.UNWEIGHTED)


def manip(name, weight=1):
    return Voter(name, weight, Role.MANIPULATOR)


def nonmanip(name, weight=1):
    return Voter(name, weight, Role.NONMANIPULATOR)


def make_oms(d, pending, past=(), candidates=ABC, sigma=None):
    snapshot = ElectionSnapshot(past=tuple(past), current=pending[0], future=tuple(pending[1:]))
    return OMS(candidates, snapshot, sigma or candidates, d)


# p1 votes b, p2 votes c, then u (manipulator) and n (nonmanipulator)
PAST = ((nonmanip("p1"), ("b", "a", "c")), (nonmanip("p2"), ("c", "a", "b")))
PENDING = (manip("u"), nonmanip("n"))


class TestScoreState(unittest.TestCase):
    def test_aggregates(self):
        oms = make_oms("a", (manip("u", 2), nonmanip("n", 3), manip("w", 1)), PAST)
        state = ScoreState.from_oms(oms, ScoringVector((1, 0, 0)))
        self.assertEqual(state.current, {"a": 0, "b": 1, "c": 1})
        self.assertEqual((state.Wm, state.Wn, state.n1, state.n0), (3, 3, 2, 1))
        self.assertEqual(state.maxscore, {"a": 6, "b": 7, "c": 7})
        self.assertEqual(state.best(()), 0)

    def test_nonmanipulator_totals_skip_the_current_voter(self):
        # built directly, so the nonmanipulator on turn is not rejected
        oms = make_oms("a", (nonmanip("u", 4), manip("w", 1), nonmanip("n", 2)), PAST)
        state = ScoreState.from_oms(oms, ScoringVector((1, 0, 0)))
        self.assertEqual((state.Wm, state.Wn, state.n1, state.n0), (1, 2, 1, 1))
        self.assertEqual(state.maxscore, {"a": 7, "b": 8, "c": 8})

    def test_monus(self):
        self.assertEqual(monus(5, 3), 2)
        self.assertEqual(monus(3, 5), 0)


class TestPlurality(unittest.TestCase):
    def test_constructive(self):
        self.assertFalse(decide_plurality_constructive_weighted(make_oms("a", PENDING, PAST)))
        self.assertTrue(decide_plurality_constructive_weighted(make_oms("b", PENDING, PAST)))

    def test_everyone_liked(self):
        oms = make_oms("c", (manip("u"), nonmanip("n", 10)), PAST)
        self.assertTrue(decide_plurality_constructive_weighted(oms))

    def test_destructive(self):
        variant = ProblemVariant(direction=Direction.DESTRUCTIVE)
        two = ("a", "b")
        self.assertTrue(decide_plurality_destructive_weighted(make_oms("b", (manip("u"), nonmanip("n", 0)), candidates=two)))
        self.assertFalse(decide_plurality_destructive_weighted(make_oms("b", (manip("u"), nonmanip("n")), candidates=two)))
        # every candidate is forbidden
        self.assertFalse(decide_plurality_destructive_weighted(make_oms("a", (manip("u", 9),), candidates=two), variant))

    def test_preconditions(self):
        oms = make_oms("a", PENDING, PAST)
        for variant in (
            ProblemVariant(direction=Direction.DESTRUCTIVE),
            ProblemVariant(winner_model=WinnerModel.UNIQUE),
            ProblemVariant(freeform=True),
        ):
            with self.subTest(variant=variant):
                with self.assertRaises(WrongVariant):
                    decide_plurality_constructive_weighted(oms, variant)


@settings(max_examples=150, deadline=None)
@given(
    votes=st.lists(st.tuples(st.integers(0, 3), st.sampled_from(ABC)), max_size=3),
    weights=st.lists(st.tuples(st.booleans(), st.integers(0, 3)), min_size=1, max_size=3),
    d=st.sampled_from(ABC),
    extra=st.integers(1, 3),
)
def test_plurality_constructive_is_monotone_in_manipulator_weight(votes, weights, d, extra):
    past = tuple(
        (nonmanip(f"p{i}", w), (top,) + tuple(c for c in ABC if c != top)) for i, (w, top) in enumerate(votes)
    )
    pending = [manip("u", weights[0][1])] + [
        manip(f"q{i}", w) if is_manip else nonmanip(f"q{i}", w) for i, (is_manip, w) in enumerate(weights[1:])
    ]
    heavier = [manip("u", weights[0][1] + extra)] + pending[1:]
    base = decide_plurality_constructive_weighted(make_oms(d, pending, past))
    assert decide_plurality_constructive_weighted(make_oms(d, heavier, past)) >= base
    assert base == decide_online(make_oms(d, pending, past), RuleId.plurality(), ProblemVariant())


class TestScoring(unittest.TestCase):
    def test_constant_vector_always_ties(self):
        oms = make_oms("a", (manip("u"), nonmanip("n", 5)), PAST)
        self.assertIs(decide_scoring_weighted(ScoringVector((2, 2, 2)), oms), True)

    def test_plurality_shaped_vector(self):
        alpha = ScoringVector((3, 1, 1))
        self.assertIs(decide_scoring_weighted(alpha, make_oms("a", PENDING, PAST)), False)
        self.assertIs(decide_scoring_weighted(alpha, make_oms("b", PENDING, PAST)), True)

    def test_other_vectors_are_not_polynomial_cases(self):
        result = decide_scoring_weighted(ScoringVector((2, 1, 0)), make_oms("a", PENDING, PAST))
        self.assertIsInstance(result, NotPolynomialCase)

    def test_length_mismatch(self):
        with self.assertRaises(LengthMismatch):
            decide_scoring_weighted(ScoringVector((1, 0)), make_oms("a", PENDING, PAST))


class TestGreedy(unittest.TestCase):
    def test_single_manipulator_loses_to_two_approval_reply(self):
        oms = make_oms("a", (manip("u"), nonmanip("n")))
        self.assertFalse(decide_kapproval_kveto_unweighted(oms, RuleKind.K_APPROVAL, 2, UNWEIGHTED))
        self.assertFalse(decide_online(oms, RuleId.k_approval(2), UNWEIGHTED))

    def test_manipulators_spread_their_approvals(self):
        oms = make_oms("a", (manip("u1"), manip("u2"), nonmanip("n")))
        self.assertTrue(decide_kapproval_kveto_unweighted(oms, RuleKind.K_APPROVAL, 2, UNWEIGHTED))
        self.assertTrue(decide_online(oms, RuleId.k_approval(2), UNWEIGHTED))

    def test_needs_unweighted(self):
        oms = make_oms("a", (manip("u"), nonmanip("n")))
        with self.assertRaises(WrongVariant):
            decide_kapproval_kveto_unweighted(oms, RuleKind.K_APPROVAL, 2, ProblemVariant())

    def test_rejects_other_families(self):
        oms = make_oms("a", (manip("u"), nonmanip("n")))
        with self.assertRaises(WrongVariant):
            decide_kapproval_kveto_unweighted(oms, RuleKind.SCORING, 1, UNWEIGHTED)


class TestApprovalChain(unittest.TestCase):
    # v1 approved c3 c4; u must answer c1 c2, and every later manipulator
    # has to mirror the nonmanipulator right before it.
    CANDIDATES = ("c1", "c2", "c3", "c4")
    RULE = RuleId.k_approval(2)

    def chain(self, past, pending):
        return make_oms("c1", pending, past=past, candidates=self.CANDIDATES)

    def approved_sets(self, oms):
        return {frozenset(ballot[:2]) for ballot in winning_ballots(oms, self.RULE, UNWEIGHTED)}

    def test_forced_from_u(self):
        past = ((nonmanip("v1"), ("c3", "c4", "c1", "c2")),)
        oms = self.chain(past, (manip("u"), nonmanip("v3"), manip("v4")))
        self.assertTrue(decide_kapproval_kveto_unweighted(oms, RuleKind.K_APPROVAL, 2, UNWEIGHTED))
        self.assertTrue(decide_online(oms, self.RULE, UNWEIGHTED))
        self.assertTrue(decide_kapproval_kveto_unweighted(oms, RuleKind.K_APPROVAL, 2, UNWEIGHTED, reverse_ties=True))
        self.assertEqual(self.approved_sets(oms), {frozenset({"c1", "c2"})})

    def test_next_move_depends_on_the_reply(self):
        def after(reply):
            past = (
                (nonmanip("v1"), ("c3", "c4", "c1", "c2")),
                (manip("u"), ("c1", "c2", "c3", "c4")),
                (nonmanip("v3"), reply),
            )
            return self.approved_sets(self.chain(past, (manip("v4"),)))

        self.assertEqual(after(("c3", "c4", "c1", "c2")), {frozenset({"c1", "c2"})})
        self.assertEqual(after(("c2", "c3", "c1", "c4")), {frozenset({"c1", "c4"})})

    def test_longer_chain_stays_forced(self):
        past = ((nonmanip("v1"), ("c3", "c4", "c1", "c2")),)
        pending = (manip("u"), nonmanip("v3"), manip("v4"), nonmanip("v5"), manip("v6"))
        oms = self.chain(past, pending)
        self.assertTrue(decide_kapproval_kveto_unweighted(oms, RuleKind.K_APPROVAL, 2, UNWEIGHTED))
        self.assertTrue(decide_online(oms, self.RULE, UNWEIGHTED))
        self.assertEqual(self.approved_sets(oms), {frozenset({"c1", "c2"})})


class TestVetoThreshold(unittest.TestCase):
    def test_examples(self):
        self.assertTrue(decide_1veto_threshold(make_oms("b", (manip("u"), nonmanip("n")))))
        self.assertFalse(decide_1veto_threshold(make_oms("a", (manip("u"), nonmanip("n")))))

    def test_bottom_of_sigma_is_always_reachable(self):
        self.assertTrue(decide_1veto_threshold(make_oms("c", (manip("u"), nonmanip("n"), nonmanip("m")))))


class TestRouting(unittest.TestCase):
    def name(self, oms, rule, variant=ProblemVariant(), solver="auto"):
        return route(oms, rule, variant, solver).name

    def test_auto_routes(self):
        oms = make_oms("b", PENDING, PAST)
        four = make_oms("b", PENDING, candidates=("a", "b", "c", "d"))
        self.assertEqual(self.name(oms, RuleId.plurality()), "plurality-constructive")
        self.assertEqual(
            self.name(oms, RuleId.plurality(), ProblemVariant(direction=Direction.DESTRUCTIVE)), "plurality-destructive"
        )
        self.assertEqual(self.name(oms, RuleId.scoring((3, 1, 1))), "scoring")
        self.assertEqual(self.name(oms, RuleId.scoring((2, 1, 0))), "oracle")
        self.assertEqual(self.name(oms, RuleId.veto(), UNWEIGHTED), "veto-threshold")
        self.assertEqual(self.name(oms, RuleId.veto()), "veto3")
        self.assertEqual(self.name(four, RuleId.veto()), "veto-pnp")
        self.assertEqual(self.name(four, RuleId.k_approval(2), UNWEIGHTED), "greedy")
        self.assertEqual(self.name(oms, RuleId.plurality(), ProblemVariant(winner_model=WinnerModel.UNIQUE)), "oracle")

    def test_named_solver(self):
        oms = make_oms("b", PENDING, PAST)
        self.assertEqual(self.name(oms, RuleId.veto(), solver="veto-pnp"), "veto-pnp")
        self.assertEqual(self.name(oms, RuleId.plurality(), solver="oracle"), "oracle")
        with self.assertRaises(WrongVariant):
            route(oms, RuleId.plurality(), ProblemVariant(), "veto3")
        with self.assertRaises(ValueError):
            route(oms, RuleId.plurality(), ProblemVariant(), "fastest")

    def test_solve_reports_the_solver(self):
        self.assertEqual(solve(make_oms("b", PENDING, PAST), RuleId.plurality(), ProblemVariant()), (True, "plurality-constructive"))
        self.assertEqual(solve(make_oms("a", PENDING, PAST), RuleId.plurality(), ProblemVariant(), "oracle"), (False, "oracle"))

    def test_explain_marks_the_chosen_row(self):
        chosen = ROUTING_TABLE[3]
        lines = explain(chosen)
        self.assertEqual(len(lines), len(ROUTING_TABLE))
        self.assertTrue(lines[3].startswith("* veto-threshold"))
        self.assertTrue(all(line.startswith(" ") for i, line in enumerate(lines) if i != 3))



ABCD = ("a", "b", "c", "d")


@st.composite
def unweighted_four_candidate_instances(draw):
    sigma = tuple(draw(st.permutations(ABCD)))
    d = draw(st.sampled_from(ABCD))
    past = tuple((nonmanip(f"p{i}"), tuple(draw(st.permutations(ABCD)))) for i in range(draw(st.integers(0, 2))))
    roles = draw(st.lists(st.booleans(), max_size=3))
    pending = (manip("u"),) + tuple(manip(f"q{i}") if m else nonmanip(f"q{i}") for i, m in enumerate(roles))
    return make_oms(d, pending, past, candidates=ABCD, sigma=sigma)


@settings(max_examples=150, deadline=None)
@given(
    oms=unweighted_four_candidate_instances(),
    family=st.sampled_from([RuleKind.K_APPROVAL, RuleKind.K_VETO]),
    k=st.integers(1, 3),
)
def test_greedy_matches_the_oracle_on_four_candidates(oms, family, k):
    expected = decide_online(oms, RuleId(family, k), UNWEIGHTED)
    assert decide_kapproval_kveto_unweighted(oms, family, k, UNWEIGHTED) == expected
    if family is RuleKind.K_VETO and k == 1:
        assert decide_1veto_threshold(oms, UNWEIGHTED) == expected


@pytest.mark.parametrize("family", ["plurality", "veto", "approval", "scoring"])
def test_solvers_agree_with_the_oracle(family):
    report = crosscheck((family,), Bounds(max_candidates=3, max_voters=4, max_weight=3), samples=60, seed=7)
    assert report.ok, report.detail
    assert report.checked == 60


def test_schedule_methods_agree():
    report = crosscheck(("schedule",), Bounds(max_candidates=3, max_voters=3, max_weight=3), samples=200, seed=3)
    assert report.ok, report.detail
    assert report.checked == 200


def test_negated_solver_is_caught():
    report = crosscheck(("plurality",), samples=50, seed=1, mutant=True)
    assert not report.ok
    assert report.counterexample is not None
    assert report.counterexample.label is not None
    assert report.detail.startswith("plurality-")


def test_unknown_family():
    with pytest.raises(ValueError):
        crosscheck(("borda",), samples=1)
