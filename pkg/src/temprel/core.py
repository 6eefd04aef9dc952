"""Domain types for event temporal relation inference.

All types are immutable after construction and safe to share across threads.
Relation scores are softmax probabilities; every per-pair score vector sums
to one within SCORE_SUM_TOL.
"""

from __future__ import annotations

from dataclasses import dataclass, field

SCORE_SUM_TOL = 1e-6

# Reserved gold marker for non-event pairs.  It is never a member of the
# inference label set and inference never assigns it; metrics may exclude
# pairs carrying it.
NONE_GOLD = -1
NONE_LABEL_NAME = "none"


class TemprelError(Exception):
    """Base class for all errors raised by this package."""


class DataError(TemprelError):
    """Malformed or inconsistent input data (files, vectors, alignments)."""


class OracleSizeError(TemprelError):
    """Brute-force enumeration would exceed the hard size guard."""


@dataclass(frozen=True, slots=True)
class LabelSet:
    """Ordered relation label inventory.

    The order is fixed and determines tie-breaking and serialization order.
    """

    labels: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.labels:
            raise DataError("label set must be non-empty")
        if len(set(self.labels)) != len(self.labels):
            raise DataError(f"duplicate label names: {list(self.labels)}")
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(self.labels)})

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise DataError(f"unknown label {name!r} (known: {list(self.labels)})") from None

    def name(self, index: int) -> str:
        if not 0 <= index < len(self.labels):
            raise DataError(f"label index {index} out of range for {len(self.labels)} labels")
        return self.labels[index]


#: TimeBank-Dense label inventory (news domain, six relations).
TIMEBANK_DENSE_LABELS = LabelSet(
    ("before", "after", "includes", "is_included", "simultaneous", "vague")
)

#: i2b2 2012 label inventory (clinical domain, three relations).
I2B2_LABELS = LabelSet(("before", "after", "overlap"))


@dataclass(frozen=True, slots=True)
class Event:
    """An event mention with a type property (e.g. occurrence, treatment)."""

    id: str
    event_type: str


@dataclass(frozen=True, slots=True)
class PairCandidate:
    """A candidate event pair with its relation score vector.

    ``gold`` is a label index, NONE_GOLD for the reserved "none" marker,
    or None when no gold annotation exists.
    """

    source: Event
    target: Event
    scores: tuple[float, ...]
    gold: int | None = None

    def type_pair(self) -> tuple[str, str]:
        return (self.source.event_type, self.target.event_type)


@dataclass(frozen=True, slots=True)
class Instance:
    """One document's candidate event pairs: the unit of inference."""

    doc_id: str
    pairs: tuple[PairCandidate, ...]

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True, slots=True)
class Assignment:
    """One relation label index per candidate pair of the owning instance."""

    labels: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __getitem__(self, i: int) -> int:
        return self.labels[i]


@dataclass(frozen=True, slots=True)
class Violation:
    """A single validation failure: which pair, which field, and why."""

    pair_index: int | None
    field: str
    reason: str


def argmax_label(pair: PairCandidate) -> int:
    """Index of the maximal score; ties break to the lowest label index."""
    best, best_score = 0, pair.scores[0]
    for i in range(1, len(pair.scores)):
        if pair.scores[i] > best_score:
            best, best_score = i, pair.scores[i]
    return best


def validate_instance(instance: Instance, labels: LabelSet) -> list[Violation]:
    """Check every type invariant; returns one violation per failure.

    Validation never raises on bad data, it reports.
    """
    violations = []
    n_labels = len(labels)
    types_by_id: dict[str, str] = {}
    for i, pair in enumerate(instance.pairs):
        if len(pair.scores) != n_labels:
            violations.append(
                Violation(i, "scores", f"expected {n_labels} scores, got {len(pair.scores)}")
            )
        else:
            if any(s < 0 for s in pair.scores):
                violations.append(Violation(i, "scores", "negative score"))
            total = sum(pair.scores)
            if abs(total - 1.0) > SCORE_SUM_TOL:
                violations.append(Violation(i, "scores", f"scores sum to {total!r}, expected 1"))
        if pair.gold is not None and pair.gold != NONE_GOLD and not 0 <= pair.gold < n_labels:
            violations.append(Violation(i, "gold", f"gold index {pair.gold} out of range"))
        for role, event in (("source", pair.source), ("target", pair.target)):
            if not event.event_type:
                violations.append(Violation(i, role, f"event {event.id!r} has empty type"))
            seen = types_by_id.get(event.id)
            if seen is None:
                types_by_id[event.id] = event.event_type
            elif seen != event.event_type:
                violations.append(
                    Violation(
                        i,
                        role,
                        f"event {event.id!r} has inconsistent types {seen!r} vs {event.event_type!r}",
                    )
                )
    return violations
