import random

import pytest

from legquad.rootdata import (
    DimensionCapExceeded,
    angle_audit,
    build_root_system,
    cone_orbit_dimension,
    distinct_weight_count,
    is_multiplicity_free,
    is_self_dual,
    weight_multiplicities,
    weyl_dimension,
)


@pytest.mark.parametrize(
    "label,rank,count",
    [
        ("A", 1, 1), ("A", 5, 15), ("B", 2, 4), ("B", 5, 25), ("C", 3, 9),
        ("D", 4, 12), ("D", 6, 30), ("E", 6, 36), ("E", 7, 63), ("E", 8, 120),
        ("F", 4, 24), ("G", 2, 6),
    ],
)
def test_positive_root_counts(label, rank, count):
    rs = build_root_system(label, rank)
    assert len(rs.positive_roots) == count


def test_invalid_types_rejected():
    for label, rank in (("A", 0), ("B", 1), ("E", 5), ("F", 3), ("G", 3), ("H", 2)):
        with pytest.raises(ValueError):
            build_root_system(label, rank)


def test_weyl_dimension_examples():
    assert weyl_dimension(build_root_system("A", 1), [3]) == 4
    assert weyl_dimension(build_root_system("C", 3), [0, 0, 1]) == 14
    assert weyl_dimension(build_root_system("E", 7), [0, 0, 0, 0, 0, 0, 1]) == 56
    assert weyl_dimension(build_root_system("A", 5), [0, 0, 1, 0, 0]) == 20
    assert weyl_dimension(build_root_system("D", 6), [0, 0, 0, 0, 0, 1]) == 32


def test_weyl_dimension_classics():
    # adjoint representations have the algebra dimension
    assert weyl_dimension(build_root_system("G", 2), [0, 1]) == 14
    assert weyl_dimension(build_root_system("F", 4), [1, 0, 0, 0]) == 52
    assert weyl_dimension(build_root_system("E", 6), [0, 1, 0, 0, 0, 0]) == 78
    assert weyl_dimension(build_root_system("E", 8), [0, 0, 0, 0, 0, 0, 0, 1]) == 248
    assert weyl_dimension(build_root_system("B", 3), [1, 0, 0]) == 7
    assert weyl_dimension(build_root_system("A", 2), [1, 1]) == 8


def test_weyl_dimension_rejects_non_dominant():
    with pytest.raises(ValueError):
        weyl_dimension(build_root_system("A", 2), [1, -1])


def test_cone_orbit_dimensions():
    assert cone_orbit_dimension(build_root_system("A", 5), [0, 0, 1, 0, 0]) == 10
    assert cone_orbit_dimension(build_root_system("D", 6), [0, 0, 0, 0, 0, 1]) == 16
    assert cone_orbit_dimension(build_root_system("A", 1), [3]) == 2
    assert cone_orbit_dimension(build_root_system("C", 3), [0, 0, 1]) == 7
    assert cone_orbit_dimension(build_root_system("E", 7), [0] * 6 + [1]) == 28


def test_self_duality_table():
    assert is_self_dual(build_root_system("A", 5), [0, 0, 1, 0, 0])
    assert not is_self_dual(build_root_system("A", 5), [1, 0, 0, 0, 0])
    assert is_self_dual(build_root_system("E", 7), [0] * 6 + [1])
    assert not is_self_dual(build_root_system("E", 6), [1, 0, 0, 0, 0, 0])
    assert not is_self_dual(build_root_system("D", 5), [0, 0, 0, 0, 1])
    assert is_self_dual(build_root_system("D", 6), [0, 0, 0, 0, 0, 1])
    assert is_self_dual(build_root_system("B", 4), [0, 0, 0, 1])


def test_weight_multiplicities_examples():
    c3 = build_root_system("C", 3)
    table = weight_multiplicities(c3, [0, 0, 1])
    assert len(table) == 14 and set(table.values()) == {1}
    a1 = build_root_system("A", 1)
    table = weight_multiplicities(a1, [2])
    assert sorted(2 * w[0] for w in table) == [-4, 0, 4] or len(table) == 3
    assert set(table.values()) == {1}
    mixed = weight_multiplicities(c3, [1, 1, 0])
    assert sum(mixed.values()) == 64
    assert any(m > 1 for m in mixed.values())


def test_freudenthal_totals_match_weyl_dimension():
    rng = random.Random(17)
    systems = [
        build_root_system(label, rank)
        for label, rank in (("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3),
                            ("D", 4), ("G", 2), ("A", 4), ("C", 4), ("B", 4))
    ]
    checked = 0
    while checked < 20:
        rs = systems[rng.randrange(len(systems))]
        coeffs = [rng.randint(0, 2) for _ in range(rs.rank)]
        if not any(coeffs):
            continue
        dim = weyl_dimension(rs, coeffs)
        if dim > 600:
            continue
        table = weight_multiplicities(rs, coeffs)
        assert sum(table.values()) == dim
        checked += 1


def test_multiplicity_cap():
    with pytest.raises(DimensionCapExceeded):
        weight_multiplicities(build_root_system("A", 3), [3, 3, 3], cap=100)


def test_distinct_weight_counts():
    a1 = build_root_system("A", 1)
    assert distinct_weight_count(a1, [1]) == 2
    assert distinct_weight_count(a1, [2]) == 3
    b2 = build_root_system("B", 2)
    assert distinct_weight_count(b2, [1, 0]) == 5      # vector rep of so5
    assert distinct_weight_count(b2, [0, 1]) == 4      # spin rep


def test_minuscule_reps_multiplicity_free():
    assert is_multiplicity_free(build_root_system("D", 6), [0] * 5 + [1])
    assert is_multiplicity_free(build_root_system("B", 5), [0, 0, 0, 0, 1])
    assert is_multiplicity_free(build_root_system("E", 7), [0] * 6 + [1])


def test_angle_audit():
    assert angle_audit(build_root_system("E", 7), [0] * 6 + [1])
    assert angle_audit(build_root_system("A", 5), [0, 0, 1, 0, 0])
    assert not angle_audit(build_root_system("A", 5), [1, 0, 1, 0, 0])
    assert angle_audit(build_root_system("C", 3), [0, 0, 1])


def test_edge_monotonicity():
    """The dimension is strictly increasing along every chamber edge, which
    is what makes the classification walk terminate soundly."""
    for label, rank in (("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4)):
        rs = build_root_system(label, rank)
        for edge in range(rank):
            dims = []
            for k in (1, 2, 3, 4):
                coeffs = [0] * rank
                coeffs[edge] = k
                dims.append(weyl_dimension(rs, coeffs))
            assert dims == sorted(set(dims))
