import pytest

from arccodes.field import make_field, field_from_order
from arccodes import geometry as geo
from arccodes.codes import classify, min_weight_supports, weight_distribution
from arccodes.construct import (
    build_even_matrix,
    build_odd_matrix,
    even_closed_form,
    odd_closed_form,
    solution_count_census,
    valid_v_set,
    valid_w_set,
)
from arccodes.fixtures import GOLDEN_Q4_EVEN, GOLDEN_Q9_ODD, GOLDEN_Q11_ODD
from arccodes.opoly import make_custom_opoly, make_family_opoly


def test_valid_v_set_gf4():
    F = make_field(2, 2)
    f = make_family_opoly(F, "translation", h=1)
    # image of x^2 + x is {0, 1}, so the complement is {xi, xi^2}
    assert valid_v_set(f) == frozenset({2, 3})
    with pytest.raises(ValueError):
        valid_v_set(make_custom_opoly(F, [0, 1]))


@pytest.mark.parametrize("q", [4, 8, 16, 32])
def test_valid_v_set_size(q):
    F = field_from_order(q)
    f = make_family_opoly(F, "translation", h=1)
    assert len(valid_v_set(f)) == q // 2


def test_valid_w_set_values():
    assert valid_w_set(make_field(11)) == frozenset({7, 10})
    assert len(valid_w_set(make_field(3, 2))) == 2
    with pytest.raises(ValueError):
        valid_w_set(make_field(3))  # (3-2-1)/4 = 0 admissible w
    with pytest.raises(ValueError):
        valid_w_set(make_field(2, 2))  # even characteristic


@pytest.mark.parametrize("q", [5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 49])
def test_valid_w_set_size(q):
    F = field_from_order(q)
    expected = (q - 2 + F.quadratic_character(F.neg(1))) // 4
    assert len(valid_w_set(F)) == expected


def test_even_matrix_reproduces_reference():
    golden = GOLDEN_Q4_EVEN
    F = golden.field()
    f = make_family_opoly(F, "translation", h=1)
    G = build_even_matrix(f, F.element_from_str(golden.v_or_w))
    assert G == golden.matrix()
    assert G.n == F.q + 5
    assert geo.is_n3_arc(F, G.column_points())
    # the first q+2 columns are the hyperoval
    assert G.column_points()[: F.q + 2] == geo.hyperoval_from_opoly(f)


def test_even_matrix_rejects_bad_v():
    F = make_field(2, 2)
    f = make_family_opoly(F, "translation", h=1)
    with pytest.raises(ValueError):
        build_even_matrix(f, 1)  # 1 = f(x)+x at x=xi
    with pytest.raises(ValueError):
        build_even_matrix(f, 0)


@pytest.mark.parametrize("golden", [GOLDEN_Q9_ODD, GOLDEN_Q11_ODD])
def test_odd_matrix_reproduces_reference(golden):
    F = golden.field()
    G = build_odd_matrix(F, F.element_from_str(golden.v_or_w))
    assert G == golden.matrix()
    assert geo.is_n3_arc(F, G.column_points())
    assert G.column_points()[: F.q + 1] == [
        geo.canonical(F, p) for p in geo.standard_oval(F)
    ]


def test_odd_matrix_rejects_bad_w():
    F = make_field(11)
    with pytest.raises(ValueError):
        build_odd_matrix(F, 2)  # eta(1+4*2) = eta(9) = 1
    with pytest.raises(ValueError):
        build_odd_matrix(make_field(2, 2), 1)


def test_closed_form_even():
    assert even_closed_form(4).to_pairs() == [[0, 1], [6, 30], [7, 18], [8, 9], [9, 6]]
    assert even_closed_form(8)[8 + 2] == (3 * 8 + 8) * (8 - 1) // 2 == 112
    for q in (4, 8, 16, 32, 64):
        assert sum(even_closed_form(q).counts) == q ** 3
    with pytest.raises(ValueError):
        even_closed_form(6)
    with pytest.raises(ValueError):
        even_closed_form(2)


def test_closed_form_odd():
    assert odd_closed_form(9).to_pairs() == [[0, 1], [11, 160], [12, 248], [13, 144], [14, 176]]
    assert odd_closed_form(11).to_pairs() == [[0, 1], [13, 230], [14, 510], [15, 210], [16, 380]]
    for q in (5, 7, 9, 11, 13, 25, 27):
        dist = odd_closed_form(q)
        assert sum(dist.counts) == q ** 3
        expected = (2 * q + 2) * (q - 1) if q % 4 == 1 else (2 * q + 1) * (q - 1)
        assert dist[q + 2] == expected
    with pytest.raises(ValueError):
        odd_closed_form(8)


def test_q5_brute_force_confirms_closed_form():
    # smallest odd case: verified exhaustively, both admissible w
    F = make_field(5)
    for w in sorted(valid_w_set(F)):
        G = build_odd_matrix(F, w)
        dist = weight_distribution(G)
        assert classify(G, dist).category == "NMDS"
        assert dist == odd_closed_form(5)
        assert dist.to_pairs() == [[0, 1], [7, 48], [8, 36], [9, 24], [10, 16]]


def test_proof_triples_present():
    # 0-based: {q,q+1,q+2} always; {q-1,q+1,q+3}, {q-1,q,q+4} for even q
    F = make_field(2, 3)
    f = make_family_opoly(F, "translation", h=1)
    q = F.q
    G = build_even_matrix(f, min(valid_v_set(f)))
    triples = set(min_weight_supports(G))
    assert (q, q + 1, q + 2) in triples
    assert (q - 1, q + 1, q + 3) in triples
    assert (q - 1, q, q + 4) in triples
    F11 = make_field(11)
    G11 = build_odd_matrix(F11, 7)
    triples11 = set(min_weight_supports(G11))
    assert (11, 12, 13) in triples11


def test_census_even_gf4():
    F = make_field(2, 2)
    f = make_family_opoly(F, "translation", h=1)
    for kind in ("even-A1", "even-A2"):
        result = solution_count_census(kind, F, f=f, v=2)
        assert set(result.counts) <= {0, 2}
        assert result.pairs_with(2) == (4 - 1) * (4 - 2) // 2 == 3
        assert result.diagonal_ok


def test_census_odd_gf11():
    F = make_field(11)
    b1 = solution_count_census("odd-B1", F, w=7)
    assert set(b1.counts) <= {0, 1, 2}
    assert b1.pairs_with(2) == (11 - 1) * (11 - 3) // 2 == 40
    b2 = solution_count_census("odd-B2", F, w=7)
    assert b2.pairs_with(2) == (11 - 1) * (11 - 2 - 1) // 2 == 40
    assert b1.diagonal_ok and b2.diagonal_ok


def test_census_argument_validation():
    F = make_field(11)
    with pytest.raises(ValueError):
        solution_count_census("odd-B1", F)  # missing w
    with pytest.raises(ValueError):
        solution_count_census("odd-B1", F, w=2)  # inadmissible
    with pytest.raises(ValueError):
        solution_count_census("bogus", F, w=7)
    F4 = make_field(2, 2)
    f = make_family_opoly(F4, "translation", h=1)
    with pytest.raises(ValueError):
        solution_count_census("even-A1", F4, f=f)  # missing v


def test_canonical_order_still_n3_arc():
    F = make_field(2, 2)
    f = make_family_opoly(F, "translation", h=1)
    G = build_even_matrix(f, 2, order="canonical")
    assert geo.is_n3_arc(F, G.column_points())
    assert weight_distribution(G) == even_closed_form(4)
