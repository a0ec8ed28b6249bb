import random
import unittest

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from online_manip.model.election import (
    OMS,
    Direction,
    ElectionSnapshot,
    ProblemVariant,
    Role,
    ScheduleFreeState,
    Voter,
    WinnerModel,
)
from online_manip.model.errors import (
    BadCoalitionBound,
    CurrentVoterNotManipulator,
    DistinguishedNotCandidate,
    SearchBudgetExceeded,
    WrongVariant,
)
from online_manip.oracle.game import decide_online, decide_schedule_robust, full_profile, winning_ballots
from online_manip.reductions.embedding import embed_standard_wcm, standard_manipulation_brute
from online_manip.reductions.qbf import QBFInstance, gen_qbf_oms, qbf_eval
from online_manip.rules.formula import And, Not, Or, Var, parse_formula, variables
from online_manip.rules.scoring import RuleId

PLURALITY = RuleId.plurality()


def manip(name, weight=1):
    return Voter(name, weight, Role.MANIPULATOR)


def nonmanip(name, weight=1):
    return Voter(name, weight, Role.NONMANIPULATOR)


def two_candidates(d, current, *future, past=()):
    snapshot = ElectionSnapshot(past=past, current=current, future=future)
    return OMS(("a", "b"), snapshot, ("a", "b"), d)


class TestDecideOnline(unittest.TestCase):
    def test_tie_is_enough_for_nonunique_winners(self):
        oms = two_candidates("a", manip("u"), nonmanip("n"))
        self.assertTrue(decide_online(oms, PLURALITY, ProblemVariant()))
        self.assertFalse(decide_online(oms, PLURALITY, ProblemVariant(winner_model=WinnerModel.UNIQUE)))

    def test_heavier_nonmanipulator_wins(self):
        oms = two_candidates("a", manip("u"), nonmanip("n", 2))
        self.assertFalse(decide_online(oms, PLURALITY, ProblemVariant()))

    def test_destructive(self):
        destructive = ProblemVariant(direction=Direction.DESTRUCTIVE)
        oms = two_candidates("b", manip("u"), nonmanip("n"))
        self.assertFalse(decide_online(oms, PLURALITY, destructive))
        self.assertTrue(decide_online(two_candidates("b", manip("u"), nonmanip("n", 0)), PLURALITY, destructive))

    def test_destructive_unique_fails_only_on_a_lone_forbidden_winner(self):
        variant = ProblemVariant(direction=Direction.DESTRUCTIVE, winner_model=WinnerModel.UNIQUE)
        self.assertTrue(decide_online(two_candidates("b", manip("u"), nonmanip("n")), PLURALITY, variant))
        self.assertFalse(decide_online(two_candidates("b", manip("u"), nonmanip("n", 2)), PLURALITY, variant))

    def test_current_voter_must_be_a_manipulator(self):
        oms = two_candidates("a", nonmanip("n"), manip("u"))
        with self.assertRaises(CurrentVoterNotManipulator):
            decide_online(oms, PLURALITY, ProblemVariant())

    def test_freeform_current_nonmanipulator(self):
        freeform = ProblemVariant(freeform=True)
        self.assertTrue(decide_online(two_candidates("a", nonmanip("n"), manip("u")), PLURALITY, freeform))
        self.assertFalse(decide_online(two_candidates("a", nonmanip("n", 2), manip("u")), PLURALITY, freeform))

        fixed = ElectionSnapshot(past=(), current=nonmanip("n", 2), future=(manip("u"),), current_ballot=("a", "b"))
        oms = OMS(("a", "b"), fixed, ("a", "b"), "a")
        self.assertTrue(decide_online(oms, PLURALITY, freeform))

    def test_node_budget(self):
        oms = two_candidates("a", manip("u"), nonmanip("n"))
        with self.assertRaises(SearchBudgetExceeded) as ctx:
            decide_online(oms, PLURALITY, ProblemVariant(), node_budget=1)
        self.assertEqual(ctx.exception.budget, 1)


class TestWinningBallots(unittest.TestCase):
    def test_last_manipulator_must_catch_up(self):
        past = ((nonmanip("p1", 2), ("b", "a", "c")), (nonmanip("p2"), ("a", "b", "c")))
        oms = OMS(("a", "b", "c"), ElectionSnapshot(past=past, current=manip("u")), ("a", "b", "c"), "a")
        self.assertEqual(winning_ballots(oms, PLURALITY, ProblemVariant()), [("a", "b", "c"), ("a", "c", "b")])

    def test_moves_depend_on_the_cast_ballots(self):
        def moves_after(reply):
            past = ((nonmanip("p"), ("a", "b", "c")), (nonmanip("n"), reply))
            snapshot = ElectionSnapshot(past=past, current=manip("u"))
            return winning_ballots(OMS(("a", "b", "c"), snapshot, ("a", "b", "c"), "b"), PLURALITY, ProblemVariant())

        self.assertEqual({b[0] for b in moves_after(("c", "a", "b"))}, {"a", "b"})
        self.assertEqual(len(moves_after(("c", "a", "b"))), 4)
        self.assertEqual(len(moves_after(("a", "b", "c"))), 6)

    def test_not_a_manipulators_turn(self):
        oms = two_candidates("a", nonmanip("n"), manip("u"))
        with self.assertRaises(WrongVariant):
            winning_ballots(oms, PLURALITY, ProblemVariant(freeform=True))


class TestFullProfile(unittest.TestCase):
    def setUp(self):
        past = ((nonmanip("p1"), ("b", "a", "c")), (nonmanip("p2"), ("c", "a", "b")))
        snapshot = ElectionSnapshot(past=past, current=manip("u"), future=(nonmanip("n"),))
        self.oms = OMS(("a", "b", "c"), snapshot, ("a", "b", "c"))

    def test_each(self):
        self.assertEqual(full_profile(self.oms, PLURALITY, ProblemVariant()), (0, 1, 1))

    def test_bisect_matches_each(self):
        self.assertEqual(full_profile(self.oms, PLURALITY, ProblemVariant(), method="bisect"), (0, 1, 1))

    def test_profile_follows_declaration_order(self):
        reordered = OMS(("c", "b", "a"), self.oms.snapshot, self.oms.sigma)
        self.assertEqual(full_profile(reordered, PLURALITY, ProblemVariant()), (1, 1, 0))

    def test_bisect_needs_constructive_segment(self):
        with self.assertRaises(WrongVariant):
            full_profile(self.oms, PLURALITY, ProblemVariant(direction=Direction.DESTRUCTIVE), method="bisect")

    def test_unknown_method(self):
        with self.assertRaises(ValueError):
            full_profile(self.oms, PLURALITY, ProblemVariant(), method="sideways")

    def test_bits_match_single_decisions(self):
        bits = full_profile(self.oms, PLURALITY, ProblemVariant())
        for c, bit in zip(self.oms.candidates, bits):
            self.assertEqual(decide_online(self.oms.with_distinguished(c), PLURALITY, ProblemVariant()), bool(bit))

    def test_custom_decider(self):
        calls = []

        def decider(oms):
            calls.append(oms.d)
            return oms.d == "c"

        self.assertEqual(full_profile(self.oms, PLURALITY, ProblemVariant(), decider=decider), (0, 0, 1))
        self.assertEqual(calls, ["a", "b", "c"])


class TestScheduleRobust(unittest.TestCase):
    def state(self, nonmanip_weight):
        remaining = (nonmanip("n", nonmanip_weight), manip("m"))
        return ScheduleFreeState(("a", "b"), (), remaining, ("a", "b"), "a")

    def test_both_methods(self):
        for method in ("exhaustive", "manipulators_first"):
            with self.subTest(method=method):
                self.assertTrue(decide_schedule_robust(self.state(1), PLURALITY, ProblemVariant(), method))
                self.assertFalse(decide_schedule_robust(self.state(2), PLURALITY, ProblemVariant(), method))

    def test_invalid_state(self):
        bounded = ProblemVariant(coalition_bound=0)
        with self.assertRaises(BadCoalitionBound):
            decide_schedule_robust(self.state(1), PLURALITY, bounded)
        missing = ScheduleFreeState(("a", "b"), (), (manip("m"),), ("a", "b"), "z")
        with self.assertRaises(DistinguishedNotCandidate):
            decide_schedule_robust(missing, PLURALITY, ProblemVariant())

    def test_unknown_method(self):
        with self.assertRaises(ValueError):
            decide_schedule_robust(self.state(1), PLURALITY, ProblemVariant(), "random")


def _qbf(blocks, matrix):
    return QBFInstance(blocks, parse_formula(matrix))


@pytest.mark.parametrize(
    "blocks,matrix,expected",
    [
        ((1,), "x_{1,1}", True),
        ((1,), "x_{1,1}&~x_{1,1}", False),
        ((1, 1), "x_{1,1}|x_{2,1}", True),
        ((1, 1), "x_{1,1}&x_{2,1}", False),
        ((1, 1, 1), "(x_{1,1}|~x_{1,1})&((x_{2,1}&x_{3,1})|(~x_{2,1}&~x_{3,1}))", True),
    ],
)
def test_tiered_game_matches_qbf_value(blocks, matrix, expected):
    q = _qbf(blocks, matrix)
    generated = gen_qbf_oms(q)
    assert qbf_eval(q) is expected
    assert decide_online(generated.oms, generated.rule, generated.variant) is expected


@pytest.mark.parametrize(
    "cast,coalition,c,direction",
    [
        ([(2, ("b", "a", "c"))], [1, 1], "a", Direction.CONSTRUCTIVE),
        ([(2, ("b", "a", "c"))], [1], "a", Direction.CONSTRUCTIVE),
        ([(2, ("b", "a", "c"))], [1, 1], "b", Direction.DESTRUCTIVE),
        ([(2, ("b", "a", "c"))], [3], "b", Direction.DESTRUCTIVE),
        ([(1, ("a", "b", "c")), (1, ("c", "b", "a"))], [2], "b", Direction.CONSTRUCTIVE),
    ],
)
def test_embedded_instance_matches_direct_manipulation(cast, coalition, c, direction):
    candidates = ("a", "b", "c")
    generated = embed_standard_wcm(candidates, cast, coalition, c, PLURALITY, direction)
    expected = standard_manipulation_brute(candidates, cast, coalition, c, PLURALITY, direction)
    assert decide_online(generated.oms, generated.rule, generated.variant) == expected


def test_embedding_examples():
    candidates = ("a", "b", "c")
    cast = [(2, ("b", "a", "c"))]
    assert standard_manipulation_brute(candidates, cast, [1, 1], "a", PLURALITY) is True
    assert standard_manipulation_brute(candidates, cast, [1], "a", PLURALITY) is False
    assert standard_manipulation_brute(candidates, cast, [3], "b", PLURALITY, Direction.DESTRUCTIVE) is True


QBF_SHAPES = ((1,), (2,), (1, 1), (1, 1, 1))


def _random_matrix(rng, blocks, depth):
    if depth == 0 or rng.random() < 0.3:
        i = rng.randint(1, len(blocks))
        var = Var(i, rng.randint(1, blocks[i - 1]))
        return Not(var) if rng.random() < 0.5 else var
    op = rng.choice((And, Or))
    return op(tuple(_random_matrix(rng, blocks, depth - 1) for _ in range(rng.randint(2, 3))))


def _random_qbf(seed):
    rng = random.Random(seed)
    blocks = rng.choice(QBF_SHAPES)
    while True:
        matrix = _random_matrix(rng, blocks, 3)
        if {i for i, _ in variables(matrix)} == set(range(1, len(blocks) + 1)):
            return QBFInstance(blocks, matrix)


@pytest.mark.parametrize("seed", range(200))
def test_tiered_game_matches_random_qbfs(seed):
    q = _random_qbf(seed)
    generated = gen_qbf_oms(q)
    assert decide_online(generated.oms, generated.rule, generated.variant) is qbf_eval(q)


ABC = ("a", "b", "c")
EMBED_RULES = (PLURALITY, RuleId.veto(), RuleId.scoring((2, 1, 0)))


@settings(max_examples=500, deadline=None)
@given(
    cast=st.lists(st.tuples(st.integers(0, 3), st.permutations(ABC).map(tuple)), max_size=2),
    coalition=st.lists(st.integers(0, 3), min_size=1, max_size=3),
    c=st.sampled_from(ABC),
    rule=st.sampled_from(EMBED_RULES),
    direction=st.sampled_from(list(Direction)),
)
def test_embedding_matches_direct_manipulation_on_random_instances(cast, coalition, c, rule, direction):
    generated = embed_standard_wcm(ABC, cast, coalition, c, rule, direction)
    expected = standard_manipulation_brute(ABC, cast, coalition, c, rule, direction)
    assert decide_online(generated.oms, generated.rule, generated.variant) == expected


pending_voters = st.lists(st.tuples(st.booleans(), st.integers(0, 3)), max_size=2)


@settings(max_examples=300, deadline=None)
@given(
    first=st.integers(0, 3),
    before=pending_voters,
    pair=st.tuples(st.integers(0, 3), st.integers(0, 3)),
    after=pending_voters,
    past=st.lists(st.tuples(st.integers(0, 3), st.permutations(ABC).map(tuple)), max_size=2),
    d=st.sampled_from(ABC),
    rule=st.sampled_from((PLURALITY, RuleId.veto())),
)
def test_letting_a_nonmanipulator_vote_earlier_never_hurts(first, before, pair, after, past, d, rule):
    def build(middle):
        future = [manip(f"q{i}", w) if m else nonmanip(f"q{i}", w) for i, (m, w) in enumerate(before)]
        future += middle
        future += [manip(f"r{i}", w) if m else nonmanip(f"r{i}", w) for i, (m, w) in enumerate(after)]
        cast = tuple((nonmanip(f"p{i}", w), b) for i, (w, b) in enumerate(past))
        snapshot = ElectionSnapshot(past=cast, current=manip("u", first), future=tuple(future))
        return OMS(ABC, snapshot, ABC, d)

    early = build([manip("x", pair[0]), nonmanip("y", pair[1])])
    late = build([nonmanip("y", pair[1]), manip("x", pair[0])])
    if decide_online(early, rule, ProblemVariant()):
        assert decide_online(late, rule, ProblemVariant())
