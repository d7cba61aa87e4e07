import random
from fractions import Fraction

import pytest

from conftest import config_from
from galecross import (
    LabeledPoint,
    PointConfig,
    SimplexPair,
    find_degenerate_subset,
    is_general_position,
    lift_odd,
    moment_curve_config,
    random_config,
)
from galecross.errors import InvalidInputError, RetryLimitError


def test_config_validation():
    with pytest.raises(InvalidInputError):
        PointConfig(0, ())
    with pytest.raises(InvalidInputError):
        config_from(2, [("p1", (0, 0)), ("p1", (1, 1))])
    with pytest.raises(InvalidInputError):
        config_from(2, [("p1", (0, 0, 0))])


def test_subset_preserves_order(cyclic_square):
    sub = cyclic_square.subset(["p3", "p1"])
    assert sub.labels() == ("p1", "p3")
    with pytest.raises(InvalidInputError):
        cyclic_square.subset(["p9"])


def test_config_id_frozen():
    assert moment_curve_config(4, 2).config_id() == "n4d2-d2de0f971d0a"


def test_moment_curve_general_position():
    for n, d in [(6, 3), (8, 4), (10, 5), (12, 6)]:
        cfg = moment_curve_config(n, d)
        assert cfg.labels() == tuple(f"p{t}" for t in range(1, n + 1))
        assert cfg.coords("p2")[0] == 2
        assert is_general_position(cfg)
    with pytest.raises(InvalidInputError):
        moment_curve_config(0, 2)


def test_random_config_deterministic():
    a = random_config(5, 2, seed=7, coord_range=10)
    b = random_config(5, 2, seed=7, coord_range=10)
    assert a == b
    assert a.config_id() == "n5d2-d7e5ea9063da"
    assert all(abs(c) <= 10 for p in a.points for c in p.coords)
    assert is_general_position(a)


def test_random_config_seed_changes_output():
    assert random_config(5, 2, seed=7, coord_range=10) != random_config(
        5, 2, seed=8, coord_range=10
    )


def test_random_config_validation():
    with pytest.raises(InvalidInputError):
        random_config(2, 2, seed=0, coord_range=10)
    with pytest.raises(InvalidInputError):
        random_config(5, 2, seed=0, coord_range=0)


def test_random_config_retry_limit():
    # 10 points need to be distinct; a range-1 grid in the plane has only 9
    with pytest.raises(RetryLimitError):
        random_config(10, 2, seed=0, coord_range=1)


def test_degenerate_subset_detection(triangle_with_center):
    assert find_degenerate_subset(triangle_with_center) is None
    collinear = config_from(2, [("p1", (0, 0)), ("p2", (1, 1)), ("p3", (2, 2)), ("p4", (5, 0))])
    assert not is_general_position(collinear)
    assert find_degenerate_subset(collinear) == ("p1", "p2", "p3")


def test_general_position_affine_invariant():
    rng = random.Random(21)
    cfg = random_config(6, 2, seed=3, coord_range=20)
    for _ in range(5):
        while True:
            m = [[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)]
            if m[0][0] * m[1][1] - m[0][1] * m[1][0] != 0:
                break
        shift = [rng.randint(-9, 9) for _ in range(2)]
        mapped = config_from(
            2,
            [
                (
                    p.label,
                    tuple(
                        sum(m[i][j] * p.coords[j] for j in range(2)) + shift[i]
                        for i in range(2)
                    ),
                )
                for p in cfg.points
            ],
        )
        assert is_general_position(mapped)


def test_lift_odd_shape():
    cfg = moment_curve_config(5, 3)
    lifted = lift_odd(cfg)
    assert lifted.dimension == 4
    assert lifted.n == 6
    assert lifted.labels()[-1] == "dummy"
    assert lifted.coords("p2") == cfg.coords("p2") + (Fraction(0),)
    assert lifted.coords("dummy") == (0, 0, 0, 1)


def test_lift_odd_general_position_boundary():
    # a full simplex stays in general position, anything larger cannot:
    # d+2 lifted originals share the hyperplane added by the lift
    assert is_general_position(lift_odd(moment_curve_config(4, 3)))
    lifted = lift_odd(moment_curve_config(5, 3))
    assert find_degenerate_subset(lifted) == ("p1", "p2", "p3", "p4", "p5")


def test_lift_odd_label_collision():
    cfg = config_from(1, [("dummy", (0,)), ("p2", (1,))])
    with pytest.raises(InvalidInputError):
        lift_odd(cfg)


def test_save_load_round_trip(tmp_path):
    cfg = moment_curve_config(6, 3)
    path = tmp_path / "pts.json"
    cfg.save(str(path))
    first = path.read_bytes()
    loaded = PointConfig.load(str(path))
    assert loaded == cfg
    loaded.save(str(path))
    assert path.read_bytes() == first
    assert first.endswith(b"\n")


def test_load_malformed(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"points": [{"label": "p1"}]}')
    with pytest.raises(InvalidInputError):
        PointConfig.load(str(path))


def test_simplex_pair_canonical_order():
    pair = SimplexPair(frozenset({"p7", "p9"}), frozenset({"p2", "p8"}))
    assert pair.left == frozenset({"p2", "p8"})
    assert pair.right == frozenset({"p7", "p9"})
    assert pair == SimplexPair(frozenset({"p2", "p8"}), frozenset({"p7", "p9"}))
    assert pair.sizes() == (2, 2)
    assert pair.to_json_obj() == {"left": ["p2", "p8"], "right": ["p7", "p9"]}


def test_simplex_pair_validation():
    with pytest.raises(InvalidInputError):
        SimplexPair(frozenset({"p1"}), frozenset({"p1", "p2"}))
    with pytest.raises(InvalidInputError):
        SimplexPair(frozenset(), frozenset({"p1"}))
