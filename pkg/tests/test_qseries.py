import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affbasis.partitions import enumerate_ideal, parse_partition
from affbasis.qseries import (
    DUNDER,
    PLAIN,
    UNDER,
    Series,
    a2_theta_series,
    character_oracle,
    colored_part_count_series,
    nontriple_product_side,
    phi_degree,
    phi_image,
    phi_part,
    product_side,
    specialized_count_bruteforce,
    specialized_count_series,
    specialized_ideal_partitions,
    tricolor_admissible,
    tricolor_count_bruteforce,
    tricolor_count_series,
    tricolor_partitions_bruteforce,
    verify_identity,
)

series_strategy = st.lists(st.integers(-9, 9), min_size=1, max_size=12).map(Series)


# --- ring laws -------------------------------------------------------------


@settings(max_examples=200)
@given(series_strategy, series_strategy, series_strategy)
def test_series_ring_laws(a, b, c):
    assert (a + b).coeffs == (b + a).coeffs
    n = min(a.order, b.order, c.order)
    t = lambda s: s.truncated(n)
    assert t((a + b) + c) == t(a + (b + c))
    assert t((a * b) * c) == t(a * (b * c))
    assert t(a * (b + c)) == t(a * b + a * c)


@settings(max_examples=100)
@given(series_strategy)
def test_series_inverse(a):
    coeffs = [1] + a.coeffs[1:]
    s = Series(coeffs)
    assert (s * s.inverse()).coeffs == [1] + [0] * s.order


def test_series_truncation_errors():
    s = Series([1, 2, 3])
    with pytest.raises(ValueError):
        s.truncated(5)
    with pytest.raises(ValueError):
        Series([2, 0]).inverse()


# --- product sides -----------------------------------------------------------


def test_product_forms_agree():
    assert product_side(80) == nontriple_product_side(80)


def test_product_coefficients():
    p = product_side(10)
    assert p[0] == 1
    assert p[4] == 4  # 4, 3+1, 2+2, 2+1+1


# --- the constrained count ----------------------------------------------------


def test_small_counts():
    s = tricolor_count_series(6)
    assert s.coeffs[:3] == [1, 1, 2]
    # degree 1: only the doubly underlined 1; degree 2: plain and underlined 2


def test_sum_side_matches_bruteforce():
    assert tricolor_count_series(24) == tricolor_count_bruteforce(24)


def test_admissibility_examples():
    assert tricolor_admissible([(1, DUNDER)])
    assert not tricolor_admissible([(1, PLAIN)])
    assert not tricolor_admissible([(1, UNDER)])
    assert not tricolor_admissible([(2, DUNDER)])
    assert tricolor_admissible([(2, PLAIN)])
    assert not tricolor_admissible([(3, DUNDER)])  # multiples of three
    assert not tricolor_admissible([(4, PLAIN), (5, UNDER)])  # adjacent


def test_pair_condition_does_not_subsume_windows():
    # passes the distance-one rule but fails a four-window family
    assert not tricolor_admissible([(2, PLAIN), (5, PLAIN)])
    # passes every pair rule and four-window family but fails a triple family
    witness = [(4, UNDER), (6, PLAIN), (8, DUNDER)]
    assert not tricolor_admissible(witness)
    for pair in [witness[:2], witness[1:], [witness[0], witness[2]]]:
        assert tricolor_admissible(pair)


# --- the specialization ---------------------------------------------------------


def test_phi_examples():
    assert phi_part(1, 1) == (1, DUNDER)
    assert phi_part(4, 2) == (6, PLAIN)
    assert phi_part(5, 1) == (3, UNDER)
    assert specialized_count_series(4).coeffs[:2] == [1, 1]


def test_phi_degree_matches_image():
    for p in enumerate_ideal(4):
        assert phi_degree(p) == sum(d for d, _ in phi_image(p))


def test_specialized_matches_bruteforce():
    assert specialized_count_series(24) == specialized_count_bruteforce(24)


def test_phi_is_a_bijection_onto_admissible_sets():
    order = 18
    ideal_images = {
        phi_image(p) for p in specialized_ideal_partitions(order) if p.parts
    }
    assert len(ideal_images) == len(
        [p for p in specialized_ideal_partitions(order) if p.parts]
    )
    admissible = {
        f
        for f in tricolor_partitions_bruteforce(order)
        if f and sum(d for d, _ in f) <= order
    }
    assert ideal_images == admissible


def test_phi_image_of_forbidden_pair_is_inadmissible():
    assert not tricolor_admissible(phi_image(parse_partition("5:-1 4:-1")))
    assert not tricolor_admissible(phi_image(parse_partition("1:-2 3:-1")))


# --- the character oracle --------------------------------------------------------


def test_theta_series_both_signs():
    assert a2_theta_series(40, -1) == a2_theta_series(40, 1)


def test_theta_small_values():
    t = a2_theta_series(4)
    assert t.coeffs[:5] == [1, 6, 0, 6, 6]


def test_oracle_values():
    o = character_oracle(6)
    assert o.coeffs == [1, 8, 17, 46, 98, 198, 371]


def test_colored_part_counts():
    assert colored_part_count_series(5, 8).coeffs == [1, 8, 44, 192, 726, 2464]
    assert colored_part_count_series(5, 2).coeffs == [1, 2, 5, 10, 20, 36]


# --- the identity -----------------------------------------------------------------


def test_identity_small_order():
    rep = verify_identity(40)
    assert rep["ok"]
    assert rep["product"][0] == 1


def test_identity_reports_discrepancy_location():
    a = Series([1, 2, 3])
    b = Series([1, 2, 4])
    assert a.first_difference(b) == 2
    assert a.first_difference(a) is None
