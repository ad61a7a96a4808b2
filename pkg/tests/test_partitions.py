import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affbasis.algebra import Weight
from affbasis.fixture_io import (
    load_color_pairs,
    load_lemma12_fixture,
    load_partitions,
)
from affbasis.partitions import (
    ADJACENT_COLOR_PAIRS,
    EMPTY,
    EXCEPTIONAL_CASES,
    SAME_DEGREE_COLOR_PAIRS,
    SHAPE_CLASSES,
    ColoredPartition,
    compare,
    cubic_a_label,
    cubic_b_label,
    embeddings,
    embedding_excess,
    enumerate_ideal,
    exceptional_class,
    format_partition,
    overlap_catalogue,
    parse_partition,
    partitions_at_most,
    quad_same_label,
    quadratic_embeddings,
    quadratic_leading_labels,
    relation_set,
    satisfies_difference_conditions,
    shape_class_embedding_total,
    colorings_of_shape,
)

parts_strategy = st.lists(
    st.tuples(st.integers(1, 8), st.integers(-4, -1)), min_size=0, max_size=5
)
partition_strategy = parts_strategy.map(ColoredPartition)


# --- order ---------------------------------------------------------------


def test_order_examples():
    p1 = parse_partition("3:-2 5:-1 1:-1")
    p2 = parse_partition("3:-2 4:-1 1:-1")
    p3 = parse_partition("5:-2 3:-1 1:-1")
    assert p1 < p2 < p3
    assert not p1 < p1
    longer = ColoredPartition([(1, -1)] * 3)
    assert longer < ColoredPartition([(1, -3)])


def test_shape_clause_before_color_clause():
    balanced = parse_partition("1:-2 1:-1")
    spread = parse_partition("3:-3 2:0")
    assert balanced < spread


@settings(max_examples=300)
@given(partition_strategy, partition_strategy)
def test_order_trichotomy(p, q):
    signs = [compare(p, q), compare(q, p)]
    if p == q:
        assert signs == [0, 0]
    else:
        assert sorted(signs) == [-1, 1]


@settings(max_examples=300)
@given(partition_strategy, partition_strategy, partition_strategy)
def test_order_transitivity(p, q, r):
    if compare(p, q) < 0 and compare(q, r) < 0:
        assert compare(p, r) < 0


@settings(max_examples=300)
@given(partition_strategy, partition_strategy, partition_strategy)
def test_order_respects_multiplication(p, q, kappa):
    if compare(p, q) < 0:
        assert compare(p * kappa, q * kappa) < 0


def test_finite_strict_chain_within_degree():
    # strictly negative partitions of a fixed degree and length sort into a
    # finite strict chain: no ties, no descents
    pool = []
    for shape in [(-3,), (-2, -1), (-1, -1, -1)]:
        pool.extend(colorings_of_shape(shape))
    pool.sort()
    for a, b in zip(pool, pool[1:]):
        assert compare(a, b) < 0


# --- monoid ops ----------------------------------------------------------


def test_monoid_examples():
    p = parse_partition("1:-1 3:-1")
    q = parse_partition("1:-1 1:-1")
    assert p * EMPTY == p
    assert p.union(EMPTY) == p
    assert p.intersection(q) == parse_partition("1:-1")
    assert parse_partition("3:-2 4:-1 1:-1").quotient(
        parse_partition("4:-1 1:-1")
    ) == parse_partition("3:-2")
    with pytest.raises(ValueError):
        p.quotient(q)


@settings(max_examples=200)
@given(partition_strategy, partition_strategy)
def test_lattice_laws(p, q):
    u, i = p.union(q), p.intersection(q)
    assert u.contains(p) and u.contains(q)
    assert p.contains(i) and q.contains(i)
    # inclusion-exclusion on multiplicity counts
    assert u * i == p * q


@settings(max_examples=200)
@given(partition_strategy, partition_strategy)
def test_quotient_inverts_product(p, q):
    assert (p * q).quotient(q) == p


# --- the forbidden-factor set ---------------------------------------------


def test_relation_set_counts():
    labels = relation_set(-1, -1)
    assert len(labels) == 56
    assert len(relation_set(-3, -1)) == 168
    kinds = [l.kind for l in labels]
    assert kinds.count("quad_same") == 27
    assert kinds.count("quad_adjacent") == 27


def test_color_pair_membership():
    assert (2, 1) in SAME_DEGREE_COLOR_PAIRS
    assert (2, 1) not in ADJACENT_COLOR_PAIRS
    assert len(set(SAME_DEGREE_COLOR_PAIRS)) == 27
    assert len(set(ADJACENT_COLOR_PAIRS)) == 27


def test_tables_match_fixture_files():
    assert list(SAME_DEGREE_COLOR_PAIRS) == load_color_pairs(
        "lemma1_same_degree.txt"
    )
    assert list(ADJACENT_COLOR_PAIRS) == load_color_pairs("lemma1_adjacent.txt")


def test_difference_conditions_examples():
    assert not satisfies_difference_conditions(parse_partition("1:-2 5:-1 3:-1"))
    assert satisfies_difference_conditions(parse_partition("1:-6 5:-3 3:-1"))
    assert satisfies_difference_conditions(EMPTY)
    # cubic exclusions
    assert not satisfies_difference_conditions(parse_partition("3:-2 4:-1 1:-1"))
    assert not satisfies_difference_conditions(parse_partition("8:-2 4:-2 6:-1"))


def test_label_translation():
    lab = cubic_a_label(-1)
    assert lab.translate(-3).partition() == lab.partition().translate(-3)


# --- enumeration -----------------------------------------------------------


def test_enumeration_counts():
    expected = [1, 8, 17, 46, 98, 198]
    for n, count in enumerate(expected):
        assert len(enumerate_ideal(n)) == count


def test_enumeration_sorted_and_valid():
    parts = enumerate_ideal(4)
    assert parts == sorted(parts)
    for p in parts:
        assert satisfies_difference_conditions(p)
        assert p.degree == -4


def test_enumeration_weight_filter():
    full = enumerate_ideal(3)
    filtered = enumerate_ideal(3, Weight(1, 1))
    assert [p for p in full if p.weight() == Weight(1, 1)] == filtered


def test_enumeration_matches_oracle():
    from affbasis.qseries import character_oracle

    oracle = character_oracle(6)
    for n in range(7):
        assert len(enumerate_ideal(n)) == oracle[n]


# --- embeddings -------------------------------------------------------------


def test_embedding_examples():
    found, excess = embeddings(ColoredPartition([(1, -1)] * 3))
    assert [l.colors for l in found] == [(1, 1)] and excess == 0
    found, excess = embeddings(parse_partition("3:-2 5:-1 1:-1"))
    assert len(found) == 2 and excess == 1
    assert embeddings(EMPTY) == ([], 0)


def test_embedding_quadratic_vs_full():
    pi = parse_partition("3:-2 4:-1 1:-1")
    assert quadratic_embeddings(pi) == []
    full, excess = embeddings(pi)
    assert [l.kind for l in full] == ["cubic_a"] and excess == 0


def test_length_three_excess_bounded():
    for shape_class in SHAPE_CLASSES:
        from affbasis.partitions import shape_of_class

        for p in colorings_of_shape(shape_of_class(shape_class, -2)):
            assert embedding_excess(p) <= 2


# --- the coloring totals ------------------------------------------------------


def test_shape_class_totals():
    expected = {"j^3": 97, "(j-1)j(j+1)": 64, "(j-1)j^2": 162, "(j-1)^2j": 162}
    for cls, total in expected.items():
        assert shape_class_embedding_total(cls, -3) == total
        assert shape_class_embedding_total(cls, -6) == total


def test_exceptional_classes():
    for case, (weight, cls) in EXCEPTIONAL_CASES.items():
        found, total = exceptional_class(weight, cls)
        assert len(found) == 10
        assert total == 7
        fixture = load_partitions(f"lemma7_case_{case}.txt")
        assert found == fixture
    case_a, _ = exceptional_class(*EXCEPTIONAL_CASES["a"])
    for text in ("3:-2 5:-1 1:-1", "3:-2 4:-1 1:-1", "5:-2 3:-1 1:-1"):
        assert parse_partition(text) in case_a


def test_exceptional_class_rejects_other_weights():
    with pytest.raises(ValueError):
        exceptional_class(Weight(1, 1), "(j-1)j^2")


# --- the overlap catalogue ------------------------------------------------------


def test_overlap_catalogue_matches_fixture():
    computed = {(p.parts, r.parts) for p, r in overlap_catalogue(-1)}
    assert len(computed) == 73
    assert computed == load_lemma12_fixture()


def test_overlap_catalogue_translates():
    at_minus_2 = {(p.parts, r.parts) for p, r in overlap_catalogue(-2)}
    shifted = {
        (p.translate(-1).parts, r.translate(-1).parts)
        for p, r in overlap_catalogue(-1)
    }
    assert at_minus_2 == shifted


def test_overlap_catalogue_membership_examples():
    cat = overlap_catalogue(-1)
    pis = {p for p, _ in cat}
    assert parse_partition("3:-3 8:-2 4:-2 1:-2 6:-1") in pis
    assert parse_partition("3:-2 1:-2 4:-1 1:-1") in pis
    assert max(p.length for p in pis) == 5


# --- misc -----------------------------------------------------------------------


def test_format_round_trip():
    for text in ("-", "3:-2 4:-1 1:-1", "8:-2 8:-2 2:-1"):
        assert format_partition(parse_partition(text)) == text


def test_partitions_at_most():
    bound = parse_partition("1:-1 1:-1")
    below = partitions_at_most(bound, 2, -2)
    assert bound in below
    assert all(q <= bound for q in below)
    # every length-2 partition of -2 with shape (-1,-1) and color pairs
    assert len(below) == 36


def test_quadratic_leading_labels_partition_degrees():
    for n in (-5, -4, 3):
        for lab in quadratic_leading_labels(n):
            assert lab.partition().degree == n
    assert quad_same_label(5, 1, -1).partition() == parse_partition("5:-1 1:-1")
    assert cubic_b_label(-1).partition() == parse_partition("8:-2 4:-2 6:-1")
