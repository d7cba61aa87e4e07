"""Origin-hyperplane separations of Gale diagrams: complete enumeration, the
bisecting-cut search, and the iterative coloring schedules that manufacture
many distinct separations.

Enumeration rests on a rotation argument: any hyperplane strictly separating
the vectors can be rotated, without any vector changing sides, until it
contains m-1 of them. So scanning every (m-1)-subset's normal and every sign
assignment of the on-plane vectors visits every realizable partition, and the
2^(m-1) assignments are all realizable because independent on-plane vectors
can be pushed to prescribed sides by an arbitrarily small tilt.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import InvalidInputError, SearchIncompleteError
from .gale import GaleDiagram, LinearSeparation, verify_spanning
from .linalg import Matrix, kernel_basis

ZERO = Fraction(0)


@dataclass(frozen=True)
class HamSandwichInstance:
    """Two disjoint color classes over a diagram's labels; the origin is always
    the implicit third class, pinning candidate hyperplanes through it."""

    ambient: int
    c1: frozenset
    c2: frozenset
    c3_origin: bool = True

    def __post_init__(self):
        object.__setattr__(self, "c1", frozenset(self.c1))
        object.__setattr__(self, "c2", frozenset(self.c2))
        if self.c1 & self.c2:
            raise InvalidInputError("color classes overlap")

    def to_json_obj(self) -> dict:
        return {
            "ambient": self.ambient,
            "c1": sorted(self.c1),
            "c2": sorted(self.c2),
            "c3_origin": self.c3_origin,
        }


@dataclass(frozen=True)
class ScheduleStep:
    coloring: HamSandwichInstance
    separation: LinearSeparation
    newly_separated_pairs: tuple
    kind: str = "cut"  # "cut" | "quad" | "fallback"
    note: str = ""

    def to_json_obj(self) -> dict:
        return {
            "coloring": self.coloring.to_json_obj(),
            "separation": self.separation.to_json_obj(),
            "new_pairs": [list(p) for p in self.newly_separated_pairs],
            "kind": self.kind,
            "note": self.note,
        }


@dataclass(frozen=True)
class ScheduleTrace:
    steps: tuple
    case_taken: str | None = None

    def separations(self) -> list[LinearSeparation]:
        return [s.separation for s in self.steps]

    def fallback_count(self) -> int:
        return sum(1 for s in self.steps if s.kind == "fallback")

    def to_json_obj(self) -> dict:
        return {
            "case_taken": self.case_taken,
            "steps": [s.to_json_obj() for s in self.steps],
        }


def _dot(u, v):
    return sum((a * b for a, b in zip(u, v)), ZERO)


def _oriented_candidates(diagram: GaleDiagram):
    """All candidate hyperplanes: for each (m-1)-subset of vectors, the normal
    of its span plus the strict classification of the remaining vectors.

    Requires the spanning property, under which each subset spans exactly
    (m-1) dimensions and no further vector lies on its hyperplane. Yields
    (on_plane_labels, normal, plus_labels, minus_labels) in lexicographic
    subset order; for m = 1 the single candidate is the coordinate axis."""
    m = diagram.m
    labels = sorted(diagram.labels())
    for subset in combinations(labels, m - 1):
        if subset:
            mat = Matrix([diagram.vector(lab) for lab in subset], cols=m)
            basis = kernel_basis(mat)
            if len(basis) != 1:
                raise InvalidInputError(
                    f"subset {subset} does not span {m - 1} dimensions; "
                    "diagram violates the spanning precondition"
                )
            normal = basis[0]
        else:
            normal = (Fraction(1),)
        plus = []
        minus = []
        degenerate = False
        for lab in labels:
            if lab in subset:
                continue
            d = _dot(normal, diagram.vector(lab))
            if d > 0:
                plus.append(lab)
            elif d < 0:
                minus.append(lab)
            else:
                degenerate = True
                break
        if degenerate:
            raise InvalidInputError(
                "an extra vector lies on a candidate hyperplane; "
                "diagram violates the spanning precondition"
            )
        yield subset, normal, tuple(plus), tuple(minus)


def _assignments(subset):
    """All 2^len(subset) on-plane side choices, in stable binary order; each is
    a tuple of (label, +1/-1) with +1 meaning the positive side."""
    k = len(subset)
    for bits in range(1 << k):
        yield tuple(
            (lab, 1 if not (bits >> i) & 1 else -1) for i, lab in enumerate(subset)
        )


def _materialize(normal, plus, minus, assignment) -> LinearSeparation | None:
    side_a = set(plus)
    side_b = set(minus)
    for lab, sign in assignment:
        (side_a if sign > 0 else side_b).add(lab)
    if not side_a or not side_b:
        return None
    return LinearSeparation(frozenset(side_a), frozenset(side_b), normal, assignment)


def enumerate_separations(diagram: GaleDiagram, sizes) -> list[LinearSeparation]:
    """Every partition of the diagram's labels with part sizes {s1, s2} that a
    hyperplane through the origin realizes strictly (after on-plane sign
    assignment), deduped by partition and deterministically ordered."""
    s1, s2 = sizes
    n = diagram.source_n
    if s1 + s2 != n:
        raise InvalidInputError(f"sizes {sizes} do not sum to {n}")
    if s1 < 1 or s2 < 1:
        # a strict hyperplane cannot leave one side empty: the vectors sum to zero
        return []
    if not verify_spanning(diagram):
        raise InvalidInputError("diagram violates the spanning precondition")
    wanted = {s1, s2}
    out = {}
    for subset, normal, plus, minus in _oriented_candidates(diagram):
        for assignment in _assignments(subset):
            sep = _materialize(normal, plus, minus, assignment)
            if sep is None or set(sep.sizes()) != wanted:
                continue
            out.setdefault(sep.partition(), sep)
    return [out[key] for key in sorted(out, key=_partition_key)]


def _partition_key(partition):
    a, b = partition
    return (tuple(sorted(a)), tuple(sorted(b)))


def _bisects(diagram: GaleDiagram, normal, inst: HamSandwichInstance) -> bool:
    """Open-half-space bound: for each color class, each strict side of the
    hyperplane holds at most floor(|class|/2) of it (on-plane points count
    toward neither side)."""
    for cls in (inst.c1, inst.c2):
        if not cls:
            continue
        bound = len(cls) // 2
        up = 0
        down = 0
        for lab in cls:
            d = _dot(normal, diagram.vector(lab))
            if d > 0:
                up += 1
            elif d < 0:
                down += 1
        if up > bound or down > bound:
            return False
    return True


def _check_cut_inputs(diagram: GaleDiagram, inst: HamSandwichInstance, sizes):
    if diagram.m > 3:
        raise InvalidInputError("cut search supports diagrams in R^1..R^3 only")
    if not inst.c3_origin:
        raise InvalidInputError("the origin must belong to the third color class")
    labels = set(diagram.labels())
    if not (set(inst.c1) <= labels and set(inst.c2) <= labels):
        raise InvalidInputError("color classes mention unknown labels")
    s1, s2 = sizes
    if s1 + s2 != diagram.source_n or s1 < 1 or s2 < 1:
        raise InvalidInputError(f"part sizes {sizes} do not fit the diagram")
    if not verify_spanning(diagram):
        raise InvalidInputError("diagram violates the spanning precondition")


def ham_sandwich_candidates(diagram: GaleDiagram, inst: HamSandwichInstance, sizes):
    """All cuts from the finite candidate family meeting both the bisection
    bound and the size constraint, in deterministic order."""
    wanted = set(sizes)
    for subset, normal, plus, minus in _oriented_candidates(diagram):
        if not _bisects(diagram, normal, inst):
            continue
        for assignment in _assignments(subset):
            sep = _materialize(normal, plus, minus, assignment)
            if sep is not None and set(sep.sizes()) == wanted:
                yield sep


def ham_sandwich_cut_traced(
    diagram: GaleDiagram, inst: HamSandwichInstance, sizes
) -> tuple[LinearSeparation, bool]:
    """The cut plus a flag telling whether the enumeration fallback produced it."""
    _check_cut_inputs(diagram, inst, sizes)
    for sep in ham_sandwich_candidates(diagram, inst, sizes):
        return sep, False
    for sep in enumerate_separations(diagram, sizes):
        if _bisects(diagram, sep.witness_normal, inst):
            return sep, True
    raise SearchIncompleteError(
        "no bisecting separation with the requested sizes exists in the "
        "complete enumeration: SEARCH_INCOMPLETE"
    )


def ham_sandwich_cut(diagram: GaleDiagram, inst: HamSandwichInstance, sizes) -> LinearSeparation:
    """First separation with the requested part sizes whose hyperplane leaves at
    most half of each color class strictly on each side."""
    return ham_sandwich_cut_traced(diagram, inst, sizes)[0]


def _proper_sizes(n: int) -> tuple[int, int]:
    return (n // 2, (n + 1) // 2)


def _blocks(labels, separations):
    """Maximal never-yet-separated groups: the common refinement of all
    separations so far, as a list of frozensets."""
    blocks = [frozenset(labels)]
    for sep in separations:
        refined = []
        for block in blocks:
            a = block & sep.side_a
            b = block & sep.side_b
            if a:
                refined.append(a)
            if b:
                refined.append(b)
        blocks = refined
    return blocks


def _within_block_pairs(blocks):
    pairs = []
    for block in blocks:
        pairs.extend(combinations(sorted(block), 2))
    return sorted(pairs)


def _newly_separated(seen, sep):
    """Pairs split by `sep` that every separation in `seen` kept together."""
    out = []
    for block in _blocks(sep.side_a | sep.side_b, seen):
        for x, y in combinations(sorted(block), 2):
            split = (x in sep.side_a) != (y in sep.side_a)
            if split:
                out.append((x, y))
    return tuple(sorted(out))


class _CutPicker:
    """Shared machinery for schedules: deterministic choice of the next cut,
    with the enumeration as a last-resort fallback."""

    def __init__(self, diagram: GaleDiagram, sizes):
        self.diagram = diagram
        self.sizes = sizes
        self.seen: list[LinearSeparation] = []
        self._enumerated = None

    def enumerated(self):
        if self._enumerated is None:
            self._enumerated = enumerate_separations(self.diagram, self.sizes)
        return self._enumerated

    def pick(self, inst: HamSandwichInstance, predicates) -> tuple[LinearSeparation, str]:
        """First candidate cut that is new and satisfies the strongest
        predicate available; predicates are tried strongest-first. Falls back
        to any unseen enumerated separation satisfying the weakest predicate,
        then to any unseen separation at all."""
        candidates = list(ham_sandwich_candidates(self.diagram, inst, self.sizes))
        for pred in predicates:
            for sep in candidates:
                if sep not in self.seen and pred(sep):
                    return sep, "cut"
        for pred in predicates:
            for sep in self.enumerated():
                if sep not in self.seen and pred(sep):
                    return sep, "fallback"
        for sep in self.enumerated():
            if sep not in self.seen:
                return sep, "fallback"
        raise SearchIncompleteError(
            "schedule exhausted every separation of the diagram: SEARCH_INCOMPLETE"
        )

    def record(self, sep: LinearSeparation):
        self.seen.append(sep)


def _splits_pair(pair):
    x, y = pair
    return lambda sep: (x in sep.side_a) != (y in sep.side_a)


def _always(_sep):
    return True


def schedule_eight(diagram: GaleDiagram) -> ScheduleTrace:
    """The four-cut coloring schedule for 8 vectors in R^3.

    Cut 1 colors everything alike; cut 2 colors the first cut's two sides; cut
    3 splits the lexicographically first pair that stayed together through both
    cuts. If some pair still survives all three cuts, cut 4 splits it (case
    ii). Otherwise every pair has been split and there is a 4-subset that every
    previous cut divided 3-1; coloring it forces a 2-2 division, which no
    earlier separation gives (case i)."""
    if diagram.m != 3 or diagram.source_n != 8:
        raise InvalidInputError("schedule needs exactly 8 vectors in R^3")
    if not verify_spanning(diagram):
        raise InvalidInputError("diagram violates the spanning precondition")
    labels = sorted(diagram.labels())
    sizes = _proper_sizes(8)
    picker = _CutPicker(diagram, sizes)
    steps = []

    def run_step(inst, predicates, kind_note=""):
        sep, kind = picker.pick(inst, predicates)
        new_pairs = _newly_separated(picker.seen, sep)
        if not new_pairs and kind == "cut":
            # distinct from every prior separation, yet coarser than their
            # common refinement: flag it, the pair certificate is empty
            kind = "fallback"
        picker.record(sep)
        steps.append(ScheduleStep(inst, sep, new_pairs, kind, kind_note))
        return sep

    all_labels = frozenset(labels)
    s1 = run_step(
        HamSandwichInstance(diagram.m, all_labels, frozenset()), [_always]
    )
    run_step(
        HamSandwichInstance(diagram.m, s1.side_a, s1.side_b), [_always]
    )

    blocks = _blocks(labels, picker.seen)
    pair3 = _within_block_pairs(blocks)[0]
    run_step(
        HamSandwichInstance(diagram.m, frozenset(pair3), all_labels - set(pair3)),
        [_splits_pair(pair3), _always],
    )

    blocks = _blocks(labels, picker.seen)
    surviving = _within_block_pairs(blocks)
    if surviving:
        case = "case_ii"
        pair4 = surviving[0]
        run_step(
            HamSandwichInstance(diagram.m, frozenset(pair4), all_labels - set(pair4)),
            [_splits_pair(pair4), _always],
        )
    else:
        case = "case_i"
        quad = _find_lopsided_quad(labels, picker.seen)
        if quad is None:
            sep, _ = _fallback_any(picker)
            new_pairs = _newly_separated(picker.seen, sep)
            picker.record(sep)
            steps.append(
                ScheduleStep(
                    HamSandwichInstance(diagram.m, frozenset(), frozenset()),
                    sep,
                    new_pairs,
                    "fallback",
                    "no 3-1 quad exists; took an unseen separation",
                )
            )
        else:

            def spreads_quad(sep):
                inside = sum(1 for lab in quad if lab in sep.side_a)
                return inside == 2

            inst = HamSandwichInstance(diagram.m, frozenset(quad), all_labels - set(quad))
            sep, kind = picker.pick(inst, [spreads_quad, _always])
            new_pairs = _newly_separated(picker.seen, sep)
            picker.record(sep)
            if kind == "cut":
                kind = "quad"
            steps.append(
                ScheduleStep(
                    inst, sep, new_pairs, kind, f"2-2 spread of {{{','.join(quad)}}}"
                )
            )

    trace = ScheduleTrace(tuple(steps), case)
    _assert_distinct(trace)
    return trace


def _fallback_any(picker: _CutPicker):
    for sep in picker.enumerated():
        if sep not in picker.seen:
            return sep, "fallback"
    raise SearchIncompleteError("no unseen separation remains: SEARCH_INCOMPLETE")


def _find_lopsided_quad(labels, separations):
    """Lexicographically first 4-subset that every separation so far split 3-1;
    None when no such subset exists."""
    for quad in combinations(sorted(labels), 4):
        ok = True
        for sep in separations:
            inside = sum(1 for lab in quad if lab in sep.side_a)
            if inside not in (1, 3):
                ok = False
                break
        if ok:
            return quad
    return None


def _assert_distinct(trace: ScheduleTrace):
    seps = trace.separations()
    if len(set(seps)) != len(seps):
        raise SearchIncompleteError("schedule produced duplicate separations")


def schedule_blocks(diagram: GaleDiagram) -> ScheduleTrace:
    """Block-refinement schedule for d+4 vectors in R^3 (d >= 4).

    Maintains the maximal never-yet-separated blocks. Round 1 colors everything
    alike; every later round recolors the largest surviving block against its
    complement and takes the first new cut that splits a pair inside it (any
    block's pair as a fallback). Each emitted separation certifies at least one
    newly split within-block pair, so the refinement strictly progresses and
    the trace length is at least ceil(log2(n)) by the time every block is a
    singleton: k separations can tell at most 2^k labels apart."""
    if diagram.m != 3 or diagram.source_d < 4:
        raise InvalidInputError("schedule needs d+4 vectors in R^3 with d >= 4")
    if diagram.source_n == 8:
        # eight vectors: the four-cut schedule subsumes block refinement and
        # certifies four distinct separations, one more than log2(8)
        return schedule_eight(diagram)
    if not verify_spanning(diagram):
        raise InvalidInputError("diagram violates the spanning precondition")
    labels = sorted(diagram.labels())
    all_labels = frozenset(labels)
    sizes = _proper_sizes(len(labels))
    picker = _CutPicker(diagram, sizes)
    steps = []
    while True:
        blocks = _blocks(labels, picker.seen)
        big = [b for b in blocks if len(b) >= 2]
        if not big:
            break
        target = sorted(big, key=lambda b: (-len(b), min(b)))[0]
        inst = HamSandwichInstance(diagram.m, target, all_labels - target)

        def splits_target(sep, _t=target):
            return any(
                (x in sep.side_a) != (y in sep.side_a)
                for x, y in combinations(sorted(_t), 2)
            )

        def splits_any_block(sep, _blocks=blocks):
            return any(
                (x in sep.side_a) != (y in sep.side_a)
                for x, y in _within_block_pairs(_blocks)
            )

        try:
            sep, kind = picker.pick(inst, [splits_target, splits_any_block])
        except SearchIncompleteError:
            break
        new_pairs = _newly_separated(picker.seen, sep)
        if not new_pairs:
            # the unseen separation splits no surviving pair; nothing further
            # can refine the blocks, stop with what the trace already certifies
            break
        picker.record(sep)
        steps.append(ScheduleStep(inst, sep, new_pairs, kind))
    trace = ScheduleTrace(tuple(steps))
    _assert_distinct(trace)
    return trace
