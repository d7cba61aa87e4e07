"""Crossing detection for vertex-disjoint simplices, exhaustive pair counting,
witness search on 2k+3 points in R^{2k}, and extension of a crossing pair to
larger vertex sets.

Two simplices cross when their relative interiors share a point; with exact
arithmetic that is the strict positivity of the optimum of a max-min LP over
the barycentric weights. Boundary contact (optimum exactly 0) is NOT crossing,
and pairs sharing a vertex are refused outright rather than counted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .configs import PointConfig, SimplexPair, find_degenerate_subset, is_general_position
from .errors import InvalidInputError, TheoremViolationError
from .linalg import Matrix, ONE, ZERO
from .lp import OPTIMAL, lp_max_min
from .rationals import format_vector


@dataclass(frozen=True)
class CrossingWitness:
    """A common relative-interior point with its barycentric coordinates.

    Coefficients are listed against the sorted labels of each side."""

    pair: SimplexPair
    point: tuple[Fraction, ...]
    left_coeffs: tuple[Fraction, ...]
    right_coeffs: tuple[Fraction, ...]

    def validate(self, config: PointConfig) -> bool:
        """Re-check every invariant by direct arithmetic (no LP trust)."""
        left = sorted(self.pair.left)
        right = sorted(self.pair.right)
        if len(left) != len(self.left_coeffs) or len(right) != len(self.right_coeffs):
            return False
        if any(c <= 0 for c in self.left_coeffs) or any(c <= 0 for c in self.right_coeffs):
            return False
        if sum(self.left_coeffs) != 1 or sum(self.right_coeffs) != 1:
            return False
        d = config.dimension
        for side, coeffs in ((left, self.left_coeffs), (right, self.right_coeffs)):
            for k in range(d):
                combo = sum(
                    (c * config.coords(lab)[k] for lab, c in zip(side, coeffs)), ZERO
                )
                if combo != self.point[k]:
                    return False
        return True

    def to_json_obj(self) -> dict:
        return {
            "pair": self.pair.to_json_obj(),
            "point": format_vector(self.point),
            "left_coeffs": format_vector(self.left_coeffs),
            "right_coeffs": format_vector(self.right_coeffs),
        }


@dataclass(frozen=True)
class CrossingCount:
    config_id: str
    part_sizes: tuple[int, int]
    total_pairs_checked: int
    crossing_pairs: int
    witnesses: tuple[CrossingWitness, ...] = ()

    def to_json_obj(self) -> dict:
        return {
            "config_id": self.config_id,
            "part_sizes": list(self.part_sizes),
            "total_pairs_checked": self.total_pairs_checked,
            "crossing_pairs": self.crossing_pairs,
            "witnesses": [w.to_json_obj() for w in self.witnesses],
        }


@dataclass(frozen=True)
class ExtensionResult:
    witnesses: tuple[CrossingWitness, ...]
    distributions_checked: int


def simplices_cross(config: PointConfig, left, right) -> CrossingWitness | None:
    """Witness that relint(conv left) meets relint(conv right), or None.

    Builds the equality system sum lam_i x_i - sum mu_j x_j = 0, sum lam = 1,
    sum mu = 1 over the concatenated weights and maximizes their minimum; the
    pair crosses exactly when the optimum is strictly positive."""
    left = sorted(set(left))
    right = sorted(set(right))
    if not left or not right:
        raise InvalidInputError("both vertex sets must be nonempty")
    shared = set(left) & set(right)
    if shared:
        raise InvalidInputError(f"shared vertex (never a crossing): {sorted(shared)}")
    lcols = [config.coords(lab) for lab in left]
    rcols = [config.coords(lab) for lab in right]
    d = config.dimension
    nl, nr = len(left), len(right)
    rows = []
    b = []
    for k in range(d):
        rows.append([c[k] for c in lcols] + [-c[k] for c in rcols])
        b.append(ZERO)
    rows.append([ONE] * nl + [ZERO] * nr)
    b.append(ONE)
    rows.append([ZERO] * nl + [ONE] * nr)
    b.append(ONE)
    res = lp_max_min(Matrix(rows, cols=nl + nr), b)
    if res.status != OPTIMAL or res.objective <= 0:
        return None
    lam = res.solution[:nl]
    mu = res.solution[nl:]
    point = tuple(
        sum((c * col[k] for c, col in zip(lam, lcols)), ZERO) for k in range(d)
    )
    pair = SimplexPair(frozenset(left), frozenset(right))
    # the pair canonicalizes its sides; keep the coefficients on the right ones
    if set(pair.left) == set(left):
        witness = CrossingWitness(pair, point, lam, mu)
    else:
        witness = CrossingWitness(pair, point, mu, lam)
    if not witness.validate(config):
        raise AssertionError("LP produced a witness that failed exact re-validation")
    return witness


def count_crossing_pairs(
    config: PointConfig, p: int, q: int, keep_witnesses: bool = False
) -> CrossingCount:
    """Exhaustively count crossing pairs (I, J) with |I| = p, |J| = q over
    disjoint vertex sets; unordered, so p = q pairs are counted once."""
    if p < 1 or q < 1 or p + q > config.n:
        raise InvalidInputError(f"part sizes ({p},{q}) do not fit {config.n} points")
    if not is_gp_cached(config):
        bad = find_degenerate_subset(config)
        raise InvalidInputError(
            f"configuration is not in general position: "
            f"affinely dependent subset {sorted(bad)}"
        )
    labels = sorted(config.labels())
    total = 0
    crossing = 0
    witnesses = []
    for left in combinations(labels, p):
        rest = [lab for lab in labels if lab not in set(left)]
        for right in combinations(rest, q):
            if p == q and right[0] < left[0]:
                continue
            total += 1
            w = simplices_cross(config, left, right)
            if w is not None:
                crossing += 1
                if keep_witnesses:
                    witnesses.append(w)
    return CrossingCount(config.config_id(), (p, q), total, crossing, tuple(witnesses))


# counting runs in tight verification loops that may hit the same
# configuration repeatedly; the general-position verdict is cached by content id
_GP_CACHE: dict[str, bool] = {}


def is_gp_cached(config: PointConfig) -> bool:
    key = config.config_id()
    if key not in _GP_CACHE:
        if len(_GP_CACHE) > 4096:
            _GP_CACHE.clear()
        _GP_CACHE[key] = is_general_position(config)
    return _GP_CACHE[key]


def vkf_find(config: PointConfig) -> CrossingWitness:
    """First crossing pair of disjoint (k+1)-subsets of 2k+3 points in R^{2k},
    in lexicographic order by sorted labels.

    Existence is a theorem with no position hypothesis, so exhausting the
    search raises TheoremViolationError. Degenerate configurations are
    accepted; lifted configurations (which are never in general position as a
    whole) rely on that."""
    d = config.dimension
    if d % 2 != 0 or d < 2:
        raise InvalidInputError(f"need an even dimension 2k, got {d}")
    k = d // 2
    if config.n != 2 * k + 3:
        raise InvalidInputError(f"need exactly {2 * k + 3} points in R^{d}, got {config.n}")
    labels = sorted(config.labels())
    size = k + 1
    for left in combinations(labels, size):
        rest = [lab for lab in labels if lab not in set(left)]
        for right in combinations(rest, size):
            if right[0] < left[0]:
                continue
            w = simplices_cross(config, left, right)
            if w is not None:
                return w
    raise TheoremViolationError(
        f"no crossing ({size},{size})-pair among {config.n} points in R^{d}: "
        "THEOREM_VIOLATION (degenerate beyond repair, or a bug)"
    )


def extend_crossing(config: PointConfig, witness: CrossingWitness, target: int) -> ExtensionResult:
    """All ways to grow both sides of a crossing pair to exactly `target`
    vertices using spare points of the configuration, re-checking the crossing
    for every distribution (the claim that extensions stay crossing is
    measured, not assumed).

    Distributions pick the left side's extras first, then the right side's from
    what remains; when the extras exhaust the spares (the only case the
    verification pipelines use) the count is C(spares, needed_left)."""
    used = set(witness.pair.left) | set(witness.pair.right)
    spares = [lab for lab in sorted(config.labels()) if lab not in used]
    nl = target - len(witness.pair.left)
    nr = target - len(witness.pair.right)
    if nl < 0 or nr < 0:
        raise InvalidInputError("target is below a current side size")
    if nl + nr > len(spares):
        raise InvalidInputError(
            f"insufficient spare points: need {nl}+{nr}, have {len(spares)}"
        )
    found = []
    checked = 0
    for extra_left in combinations(spares, nl):
        remaining = [lab for lab in spares if lab not in set(extra_left)]
        for extra_right in combinations(remaining, nr):
            checked += 1
            w = simplices_cross(
                config,
                set(witness.pair.left) | set(extra_left),
                set(witness.pair.right) | set(extra_right),
            )
            if w is not None:
                found.append(w)
    assert checked == comb(len(spares), nl) * comb(len(spares) - nl, nr)
    return ExtensionResult(tuple(found), checked)
