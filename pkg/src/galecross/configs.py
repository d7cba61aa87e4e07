"""Labeled rational point configurations: generators, the general-position
predicate, dimension lifting, and the point-file format.

Labels are strings so the CLI can reference points; every operation that
enumerates subsets does so in lexicographic label order, which is what makes
"first witness" style results reproducible.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import InvalidInputError, RetryLimitError
from .jsonio import atomic_write_text, canonical_dumps, load_json
from .linalg import Matrix, ONE, det
from .rationals import format_vector, parse_vector

DUMMY_LABEL = "dummy"
RETRY_LIMIT = 1000


@dataclass(frozen=True)
class LabeledPoint:
    label: str
    coords: tuple[Fraction, ...]


@dataclass(frozen=True)
class PointConfig:
    dimension: int
    points: tuple[LabeledPoint, ...]

    def __post_init__(self):
        if self.dimension < 1:
            raise InvalidInputError("dimension must be >= 1")
        labels = [p.label for p in self.points]
        if len(set(labels)) != len(labels):
            raise InvalidInputError("duplicate point labels")
        for p in self.points:
            if len(p.coords) != self.dimension:
                raise InvalidInputError(
                    f"point {p.label} has {len(p.coords)} coords, expected {self.dimension}"
                )

    @property
    def n(self) -> int:
        return len(self.points)

    def labels(self) -> tuple[str, ...]:
        return tuple(p.label for p in self.points)

    def coords(self, label: str) -> tuple[Fraction, ...]:
        for p in self.points:
            if p.label == label:
                return p.coords
        raise InvalidInputError(f"unknown label: {label}")

    def subset(self, labels) -> "PointConfig":
        """Restriction to the given labels, preserving the original order."""
        wanted = set(labels)
        missing = wanted - set(self.labels())
        if missing:
            raise InvalidInputError(f"unknown labels: {sorted(missing)}")
        return PointConfig(self.dimension, tuple(p for p in self.points if p.label in wanted))

    def config_id(self) -> str:
        digest = hashlib.sha256(canonical_dumps(self.to_json_obj()).encode()).hexdigest()
        return f"n{self.n}d{self.dimension}-{digest[:12]}"

    def to_json_obj(self) -> dict:
        return {
            "dimension": self.dimension,
            "points": [
                {"label": p.label, "coords": format_vector(p.coords)} for p in self.points
            ],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "PointConfig":
        try:
            dimension = int(obj["dimension"])
            points = tuple(
                LabeledPoint(str(item["label"]), parse_vector(item["coords"]))
                for item in obj["points"]
            )
        except (KeyError, TypeError) as exc:
            raise InvalidInputError(f"malformed point file: {exc!r}") from exc
        return cls(dimension, points)

    def save(self, path: str) -> None:
        atomic_write_text(path, canonical_dumps(self.to_json_obj()))

    @classmethod
    def load(cls, path: str) -> "PointConfig":
        return cls.from_json_obj(load_json(path))


def moment_curve_config(n: int, d: int) -> PointConfig:
    """Points t -> (t, t^2, ..., t^d) for t = 1..n; general position for free
    (Vandermonde determinants never vanish)."""
    if n < 1 or d < 1:
        raise InvalidInputError("need n >= 1 and d >= 1")
    points = tuple(
        LabeledPoint(f"p{t}", tuple(Fraction(t**j) for j in range(1, d + 1)))
        for t in range(1, n + 1)
    )
    return PointConfig(d, points)


def random_config(n: int, d: int, seed: int, coord_range: int) -> PointConfig:
    """Uniform integer coordinates in [-coord_range, coord_range], resampling the
    whole configuration until it is in general position.

    Generator: random.Random (MT19937) seeded with `seed`; draws happen point by
    point, coordinate by coordinate, via randrange. Same inputs, same output."""
    if n < d + 1:
        raise InvalidInputError("need n >= d + 1")
    if coord_range < 1:
        raise InvalidInputError("range must come as a positive integer")
    rng = random.Random(seed)
    for _ in range(RETRY_LIMIT):
        points = tuple(
            LabeledPoint(
                f"p{i + 1}",
                tuple(Fraction(rng.randrange(-coord_range, coord_range + 1)) for _ in range(d)),
            )
            for i in range(n)
        )
        config = PointConfig(d, points)
        if is_general_position(config):
            return config
    raise RetryLimitError(
        f"no general-position configuration after {RETRY_LIMIT} attempts "
        f"(n={n}, d={d}, range={coord_range}; range too small?)"
    )


def _affine_det(config: PointConfig, labels) -> Fraction:
    """Determinant of the (d+1)x(d+1) coordinates-plus-ones matrix of a subset."""
    columns = [tuple(config.coords(lab)) + (ONE,) for lab in labels]
    return det(Matrix.from_columns(columns))


def find_degenerate_subset(config: PointConfig) -> tuple[str, ...] | None:
    """First (d+1)-subset, in lexicographic label order, that is affinely
    dependent; None when the configuration is in general position."""
    d = config.dimension
    labels = sorted(config.labels())
    for subset in combinations(labels, d + 1):
        if _affine_det(config, subset) == 0:
            return subset
    return None


def is_general_position(config: PointConfig) -> bool:
    return find_degenerate_subset(config) is None


def lift_odd(config: PointConfig) -> PointConfig:
    """Embed one dimension up: append coordinate 0 to every point and add one
    apex point "dummy" at (0, ..., 0, 1).

    The lifted originals keep every affine independence they had, and the apex
    is affinely independent of any of their subsets; but d+2 lifted originals
    always share the hyperplane x_{d+1} = 0, so the lifted configuration as a
    whole never satisfies is_general_position once n >= d+2. Downstream
    witness searches do not need it to."""
    if DUMMY_LABEL in config.labels():
        raise InvalidInputError(f"label collision with {DUMMY_LABEL!r}")
    zero = Fraction(0)
    lifted = [LabeledPoint(p.label, p.coords + (zero,)) for p in config.points]
    apex = LabeledPoint(DUMMY_LABEL, (zero,) * config.dimension + (ONE,))
    return PointConfig(config.dimension + 1, tuple(lifted) + (apex,))


@dataclass(frozen=True)
class SimplexPair:
    """Unordered pair of disjoint vertex sets, canonicalized so that `left`
    holds the lexicographically smallest label overall."""

    left: frozenset
    right: frozenset

    def __post_init__(self):
        left = frozenset(self.left)
        right = frozenset(self.right)
        if not left or not right:
            raise InvalidInputError("both sides of a pair must be nonempty")
        if left & right:
            raise InvalidInputError("pair sides share a vertex")
        if min(right) < min(left):
            left, right = right, left
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    def sizes(self) -> tuple[int, int]:
        return (len(self.left), len(self.right))

    def to_json_obj(self) -> dict:
        return {"left": sorted(self.left), "right": sorted(self.right)}
