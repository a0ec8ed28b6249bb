"""
Reader and writer for instance files.

An instance file is line oriented:

    # label: YES
    candidates: a b c
    sigma: a>b>c
    d: a
    rule: plurality
    variant: constructive segment weighted nonunique
    voters:
    v1 nonmanip w=2 vote: b>a>c
    u manip w=1 pending
    v3 nonmanip w=1 pending

Past voters carry `vote:`, voters from u onward are `pending` (the first one is
u) and schedule-free files list their remaining voters as `unordered`.
"""
import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from ..model.election import (
    OMS,
    Ballot,
    Candidate,
    Direction,
    ElectionSnapshot,
    ProblemVariant,
    Role,
    ScheduleFreeState,
    Target,
    Voter,
    Weighting,
    WinnerModel,
)
from ..model.errors import ParseError, RuleError, ValidationError
from ..reductions.generated import GeneratedInstance
from ..rules.scoring import RuleId, RuleKind

logger = logging.getLogger(__name__)

SECTIONS = ("candidates", "sigma", "d", "rule", "variant", "voters")
_TOKEN_RE = re.compile(r"\S+")
_LABEL_RE = re.compile(r"#\s*label:\s*(YES|NO)\s*$")
_ROLES = {r.value: r for r in Role}


@dataclass(frozen=True)
class InstanceFile:
    candidates: Tuple[Candidate, ...]
    sigma: Ballot
    rule: RuleId
    variant: ProblemVariant = field(default_factory=ProblemVariant)
    d: Optional[Candidate] = None
    past: Tuple[Tuple[Voter, Ballot], ...] = ()
    pending: Tuple[Voter, ...] = ()
    current_ballot: Optional[Ballot] = None
    unordered: Tuple[Voter, ...] = ()
    label: Optional[bool] = None

    @property
    def schedule_free(self) -> bool:
        return bool(self.unordered)

    def to_oms(self) -> OMS:
        if self.schedule_free or not self.pending:
            raise ValidationError("The instance has no pending voters in a fixed order")
        snapshot = ElectionSnapshot(
            past=self.past,
            current=self.pending[0],
            future=self.pending[1:],
            current_ballot=self.current_ballot,
        )
        return OMS(self.candidates, snapshot, self.sigma, self.d)

    def to_schedule_free(self) -> ScheduleFreeState:
        if not self.schedule_free:
            raise ValidationError("The instance lists no unordered voters")
        return ScheduleFreeState(self.candidates, self.past, self.unordered, self.sigma, self.d)

    @classmethod
    def from_oms(
        cls, oms: OMS, rule: RuleId, variant: ProblemVariant, label: Optional[bool] = None
    ) -> "InstanceFile":
        snapshot = oms.snapshot
        return cls(
            candidates=oms.candidates,
            sigma=oms.sigma,
            rule=rule,
            variant=variant,
            d=oms.d,
            past=snapshot.past,
            pending=snapshot.pending,
            current_ballot=snapshot.current_ballot,
            label=label,
        )

    @classmethod
    def from_generated(cls, generated: GeneratedInstance, label: Optional[bool] = None) -> "InstanceFile":
        return cls.from_oms(generated.oms, generated.rule, generated.variant, label)


class InstanceParser:
    def __init__(self, text: str, source: Optional[str] = None):
        self.lines = text.splitlines()
        self.source = source
        self.values: Dict[str, Tuple[int, int, str]] = {}
        self.label: Optional[bool] = None
        self.voter_lines: List[Tuple[int, str]] = []

    def _error(self, message: str, line: int, column: int = 1) -> ParseError:
        return ParseError(message, line, column, self.source)

    def parse(self) -> InstanceFile:
        in_voters = False
        for number, raw in enumerate(self.lines, start=1):
            stripped = raw.strip()
            if not stripped:
                continue
            if stripped.startswith("#"):
                match = _LABEL_RE.match(stripped)
                if match:
                    self.label = match.group(1) == "YES"
                continue
            key, sep, rest = stripped.partition(":")
            if sep and key.strip() in SECTIONS:
                key = key.strip()
                if key in self.values:
                    raise self._error(f"Duplicate section '{key}:'", number)
                after = raw.index(":") + 1
                column = after + len(raw[after:]) - len(raw[after:].lstrip()) + 1
                self.values[key] = (number, column, rest.strip())
                in_voters = key == "voters"
                if in_voters and rest.strip():
                    raise self._error("Voters go on the lines after 'voters:'", number, column)
                continue
            if not in_voters:
                raise self._error(f"Unexpected line outside a section: {stripped!r}", number)
            self.voter_lines.append((number, raw))

        for required in ("candidates", "sigma", "rule"):
            if required not in self.values:
                raise self._error(f"Missing '{required}:' section", len(self.lines) or 1)

        candidates = self._candidates()
        sigma = self._order(*self.values["sigma"], candidates)
        d = self._distinguished(candidates)
        rule = self._rule()
        variant = self._variant()
        past, pending, current_ballot, unordered = self._voters(candidates)
        return InstanceFile(
            candidates=candidates,
            sigma=sigma,
            rule=rule,
            variant=variant,
            d=d,
            past=past,
            pending=pending,
            current_ballot=current_ballot,
            unordered=unordered,
            label=self.label,
        )

    def _candidates(self) -> Tuple[Candidate, ...]:
        line, column, text = self.values["candidates"]
        names = tuple(text.split())
        if not names:
            raise self._error("The candidate list is empty", line, column)
        seen = set()
        for match in _TOKEN_RE.finditer(text):
            if match.group() in seen:
                raise self._error(f"Duplicate candidate {match.group()!r}", line, column + match.start())
            seen.add(match.group())
        return names

    def _order(self, line: int, column: int, text: str, candidates: Sequence[Candidate]) -> Ballot:
        compact = "".join(text.split())
        names = tuple(compact.split(">"))
        if any(not name for name in names):
            raise self._error(f"Malformed order {text!r}", line, column)
        offset = 0
        for name in names:
            if name not in candidates:
                raise self._error(f"Unknown candidate {name!r}", line, column + offset)
            offset += len(name) + 1
        if len(set(names)) != len(names) or len(names) != len(candidates):
            raise self._error(f"Order {text!r} is not a total order over all candidates", line, column)
        return names

    def _distinguished(self, candidates: Sequence[Candidate]) -> Optional[Candidate]:
        if "d" not in self.values:
            return None
        line, column, text = self.values["d"]
        if text not in candidates:
            raise self._error(f"Distinguished candidate {text!r} is not a candidate", line, column)
        return text

    def _rule(self) -> RuleId:
        line, column, text = self.values["rule"]
        tokens = text.split()
        if not tokens:
            raise self._error("Missing rule name", line, column)
        name, args = tokens[0], tokens[1:]
        try:
            numbers = [int(a) for a in args]
        except ValueError:
            raise self._error(f"Rule parameters must be integers: {text!r}", line, column)
        try:
            if name in ("plurality", "veto", "tiered") and not numbers:
                return {"plurality": RuleId.plurality, "veto": RuleId.veto, "tiered": RuleId.tiered}[name]()
            if name == "approval" and len(numbers) == 1:
                return RuleId.k_approval(numbers[0])
            if name == "kveto" and len(numbers) == 1:
                return RuleId.k_veto(numbers[0])
            if name == "scoring" and numbers:
                return RuleId.scoring(numbers)
        except RuleError as e:
            raise self._error(str(e), line, column)
        raise self._error(f"Unknown rule {text!r}", line, column)

    def _variant(self) -> ProblemVariant:
        if "variant" not in self.values:
            return ProblemVariant()
        line, column, text = self.values["variant"]
        options: Dict[str, object] = {}
        flags = {
            "constructive": ("direction", Direction.CONSTRUCTIVE),
            "destructive": ("direction", Direction.DESTRUCTIVE),
            "segment": ("target", Target.SEGMENT),
            "pinpoint": ("target", Target.PINPOINT),
            "weighted": ("weighting", Weighting.WEIGHTED),
            "unweighted": ("weighting", Weighting.UNWEIGHTED),
            "nonunique": ("winner_model", WinnerModel.NONUNIQUE),
            "unique": ("winner_model", WinnerModel.UNIQUE),
            "freeform": ("freeform", True),
            "final-manip": ("final_voter_manipulator", True),
        }
        for match in _TOKEN_RE.finditer(text):
            token = match.group()
            position = column + match.start()
            if token.startswith("bound="):
                try:
                    key, value = "coalition_bound", int(token[len("bound="):])
                except ValueError:
                    raise self._error(f"Bad coalition bound {token!r}", line, position)
            elif token in flags:
                key, value = flags[token]
            else:
                raise self._error(f"Unknown variant token {token!r}", line, position)
            if key in options and options[key] != value:
                raise self._error(f"Conflicting variant token {token!r}", line, position)
            options[key] = value
        return ProblemVariant(**options)  # type: ignore[arg-type]

    def _voters(self, candidates: Sequence[Candidate]):
        past: List[Tuple[Voter, Ballot]] = []
        pending: List[Voter] = []
        unordered: List[Voter] = []
        current_ballot: Optional[Ballot] = None

        for number, raw in self.voter_lines:
            tokens = list(_TOKEN_RE.finditer(raw))
            if len(tokens) < 4:
                raise self._error("Voter lines read '<name> <role> w=<int> vote:|pending|unordered'", number)
            name, role, weight = tokens[0], tokens[1], tokens[2]
            if role.group() not in _ROLES:
                raise self._error(f"Unknown role {role.group()!r}", number, role.start() + 1)
            if not weight.group().startswith("w="):
                raise self._error(f"Expected w=<int>, got {weight.group()!r}", number, weight.start() + 1)
            try:
                w = int(weight.group()[2:])
            except ValueError:
                raise self._error(f"Bad weight {weight.group()!r}", number, weight.start() + 1)
            voter = Voter(name.group(), w, _ROLES[role.group()])

            kind = tokens[3]
            if kind.group() == "vote:":
                if pending or unordered:
                    raise self._error("Cast votes must come before pending voters", number, kind.start() + 1)
                past.append((voter, self._ballot(number, tokens[4:], candidates, kind.end() + 1)))
                continue
            if kind.group() == "pending":
                if unordered:
                    raise self._error("A file cannot mix pending and unordered voters", number, kind.start() + 1)
                if len(tokens) > 4:
                    if tokens[4].group() != "vote:":
                        raise self._error(f"Unexpected {tokens[4].group()!r}", number, tokens[4].start() + 1)
                    if pending:
                        raise self._error("Only the current voter may come with a ballot", number, tokens[4].start() + 1)
                    current_ballot = self._ballot(number, tokens[5:], candidates, tokens[4].end() + 1)
                pending.append(voter)
                continue
            if kind.group() == "unordered":
                if pending:
                    raise self._error("A file cannot mix pending and unordered voters", number, kind.start() + 1)
                if len(tokens) > 4:
                    raise self._error(f"Unexpected {tokens[4].group()!r}", number, tokens[4].start() + 1)
                unordered.append(voter)
                continue
            raise self._error(f"Expected vote:, pending or unordered, got {kind.group()!r}", number, kind.start() + 1)

        if not pending and not unordered:
            line = self.values["voters"][0] if "voters" in self.values else len(self.lines) or 1
            raise self._error("No pending or unordered voters", line)
        return tuple(past), tuple(pending), current_ballot, tuple(unordered)

    def _ballot(self, number: int, tokens, candidates: Sequence[Candidate], fallback_column: int) -> Ballot:
        if not tokens:
            raise self._error("Missing ballot after 'vote:'", number, fallback_column)
        column = tokens[0].start() + 1
        text = "".join(t.group() for t in tokens)
        return self._order(number, column, text, candidates)


def parse_instance(text: str, source: Optional[str] = None) -> InstanceFile:
    return InstanceParser(text, source).parse()


def load_instance(path: str) -> InstanceFile:
    logger.debug(f"Reading instance file {path}")
    return parse_instance(Path(path).read_text(encoding="utf-8"), source=path)


def _rule_text(rule: RuleId) -> str:
    if rule.kind is RuleKind.SCORING:
        return "scoring " + " ".join(str(a) for a in rule.alpha or ())
    return rule.describe()


def _variant_text(variant: ProblemVariant) -> str:
    tokens = [variant.direction.value, variant.target.value, variant.weighting.value, variant.winner_model.value]
    if variant.freeform:
        tokens.append("freeform")
    if variant.coalition_bound is not None:
        tokens.append(f"bound={variant.coalition_bound}")
    if variant.final_voter_manipulator:
        tokens.append("final-manip")
    return " ".join(tokens)


def serialize_instance(instance: InstanceFile) -> str:
    lines = []
    if instance.label is not None:
        lines.append(f"# label: {'YES' if instance.label else 'NO'}")
    lines.append("candidates: " + " ".join(instance.candidates))
    lines.append("sigma: " + ">".join(instance.sigma))
    if instance.d is not None:
        lines.append(f"d: {instance.d}")
    lines.append(f"rule: {_rule_text(instance.rule)}")
    lines.append(f"variant: {_variant_text(instance.variant)}")
    lines.append("voters:")
    for voter, ballot in instance.past:
        lines.append(f"{voter.name} {voter.role.value} w={voter.weight} vote: {'>'.join(ballot)}")
    for index, voter in enumerate(instance.pending):
        line = f"{voter.name} {voter.role.value} w={voter.weight} pending"
        if index == 0 and instance.current_ballot is not None:
            line += " vote: " + ">".join(instance.current_ballot)
        lines.append(line)
    for voter in instance.unordered:
        lines.append(f"{voter.name} {voter.role.value} w={voter.weight} unordered")
    return "\n".join(lines) + "\n"


def write_instance(instance: InstanceFile, path: str) -> None:
    Path(path).write_text(serialize_instance(instance), encoding="utf-8")
    logger.info(f"Wrote instance file {path}")
