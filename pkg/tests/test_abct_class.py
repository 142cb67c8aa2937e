import threading
from itertools import permutations
from math import factorial

import pytest

from abct.abct_class import (
    BETA,
    ChernRootForm,
    abct_class,
    abct_recursion,
    chern_classes,
    degree_skew_oracle,
    euler_coefficient_check,
    eulerian_number,
    genseries_coefficients,
    genseries_oracle,
    hook_length_count,
    pluecker_degree,
    porteous_oracle,
    skew_syt_count,
)
from abct.symfunc import SchurExpansion, SymPoly3, decompose_to_schur, to_monomial_form

S = SchurExpansion.s

EXAMPLE_CLASSES = {
    5: S(),
    6: 4 * S(1),
    7: 11 * S(2) + 6 * S(1, 1),
    8: 26 * S(3) + 23 * S(2, 1) + 4 * S(1, 1, 1),
    9: 57 * S(4) + 63 * S(3, 1) + 27 * S(2, 2) + 18 * S(2, 1, 1),
}

EXAMPLE_DEGREES = {5: 5, 6: 168, 7: 4032, 8: 84744, 9: 1664091, 10: 31402800}


def brute_eulerian(n, k):
    return sum(
        1 for p in permutations(range(n)) if sum(p[i] > p[i + 1] for i in range(n - 1)) == k
    )


def brute_syt(outer, inner):
    """Count skew SYT by removing outer corners one at a time."""
    outer = list(outer)
    inner = list(inner) + [0] * (len(outer) - len(inner))
    if outer == inner:
        return 1
    total = 0
    for i in range(len(outer)):
        below = outer[i + 1] if i + 1 < len(outer) else 0
        if outer[i] > inner[i] and outer[i] > below:
            outer[i] -= 1
            total += brute_syt(outer, inner)
            outer[i] += 1
    return total


# ---------------------------------------------------------------------------


@pytest.mark.parametrize("m, expected", [(0, S()), (1, 4 * S(1)), (2, 11 * S(2) + 6 * S(1, 1))])
def test_base_cases(m, expected):
    assert abct_recursion(m) == expected


@pytest.mark.parametrize("n", sorted(EXAMPLE_CLASSES))
def test_example_classes(n):
    res = abct_class(n)
    assert res.expansion == EXAMPLE_CLASSES[n]
    assert res.codim == n - 5


def test_class_rejects_small_n():
    with pytest.raises(ValueError):
        abct_class(4)
    with pytest.raises(ValueError):
        abct_recursion(-1)


def test_class_json_schema():
    data = abct_class(7).to_json(degree=4032)
    assert data == {
        "n": 7,
        "codim": 2,
        "terms": [{"partition": [2], "coeff": "11"}, {"partition": [1, 1], "coeff": "6"}],
        "degree": "4032",
    }


def test_class_fits_box_and_is_homogeneous():
    for n in range(5, 30):
        res = abct_class(n)
        assert res.expansion.degrees() == {n - 5}
        assert all(lam[0] <= n - 3 for lam in res.expansion.terms)


def test_recursion_coefficients_positive():
    for m in range(30):
        assert all(c > 0 for _, c in abct_recursion(m).items())


def test_every_partition_occurs():
    # observed, not required: every partition of m with <= 3 parts shows up
    for m in range(15):
        count = sum(1 for a in range(m + 1) for b in range(a + 1) if b >= m - a - b >= 0)
        assert len(abct_recursion(m)) == count


def test_concurrent_callers_agree():
    results = []

    def work():
        results.append(abct_recursion(40))

    threads = [threading.Thread(target=work) for _ in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == results[0] for r in results)


# ---------------------------------------------------------------------------
# oracles


@pytest.mark.parametrize(
    "m, expected",
    [(1, 4 * S(1)), (2, 11 * S(2) + 6 * S(1, 1)), (3, 26 * S(3) + 23 * S(2, 1) + 4 * S(1, 1, 1))],
)
def test_genseries_examples(m, expected):
    assert genseries_oracle(m) == expected


def test_genseries_matches_recursion():
    coeffs = genseries_coefficients(12)
    for m in range(13):
        assert decompose_to_schur(coeffs[m]) == abct_recursion(m)


def test_genseries_pair_root_classes():
    # h'_1 = e'_1 = 2 s_1, e'_2 = s_2 + 2 s_{1,1}, e'_3 = s_{2,1} for the roots x_i + x_j
    pair_roots = [ChernRootForm(c) for c in ((1, 1, 0), (1, 0, 1), (0, 1, 1))]
    e = chern_classes(pair_roots)
    assert decompose_to_schur(e[1]) == 2 * S(1)
    assert decompose_to_schur(e[2]) == S(2) + 2 * S(1, 1)
    assert decompose_to_schur(e[3]) == S(2, 1)


@pytest.mark.parametrize("n, expected", [(5, S()), (6, 4 * S(1)), (7, 11 * S(2) + 6 * S(1, 1))])
def test_porteous_examples(n, expected):
    assert porteous_oracle(n) == expected


def test_porteous_matches_recursion():
    for n in range(5, 16):
        assert porteous_oracle(n) == abct_class(n).expansion


def test_chern_roots_of_square():
    assert [b.coefficients for b in BETA] == [
        (2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)
    ]
    c = chern_classes()
    assert len(c) == 7
    assert c[1] == SymPoly3.linear(4, 4, 4)
    assert all(p.is_symmetric() for p in c)
    with pytest.raises(ValueError):
        ChernRootForm((0, 0, 0))


# ---------------------------------------------------------------------------
# degrees


@pytest.mark.parametrize("n", sorted(EXAMPLE_DEGREES))
def test_example_degrees(n):
    assert pluecker_degree(n) == EXAMPLE_DEGREES[n]


@pytest.mark.parametrize("n", [6, 8, 9])
def test_skew_oracle_examples(n):
    assert degree_skew_oracle(n) == EXAMPLE_DEGREES[n]


def test_degree_agrees_with_skew_oracle():
    for n in range(5, 13):
        assert pluecker_degree(n) == degree_skew_oracle(n)


def test_degree_matches_monomial_route_for_n5():
    # deg G(3,5) = number of SYT of the 2x2x2 box
    assert pluecker_degree(5) == hook_length_count((2, 2, 2)) == 5


@pytest.mark.parametrize(
    "outer, inner",
    [((3, 3, 3), (0, 0, 0)), ((3, 3, 3), (2, 1, 0)), ((4, 4, 4), (3, 1, 1)), ((4, 3, 1), (2, 1)),
     ((5, 5, 5), (4, 2, 0)), ((3, 3, 3), (3, 3, 3)), ((2, 2, 2), (3, 0, 0))],
)
def test_skew_syt_count_matches_brute_force(outer, inner):
    if any(i > o for i, o in zip(inner, outer)):
        assert skew_syt_count(outer, inner) == 0
    else:
        assert skew_syt_count(outer, inner) == brute_syt(outer, inner)


def test_hook_length_matches_aitken():
    for shape in [(3, 2, 1), (4, 4, 4), (5, 3, 3), (2, 2, 2)]:
        assert hook_length_count(shape) == skew_syt_count(shape, ())


def test_degree_via_monomials_for_n6():
    # independent route: coefficient of s_{333} in f_1 * s_1^8 by leading-term
    # decomposition of the full monomial product
    poly = to_monomial_form(abct_recursion(1)) * SymPoly3.linear(1, 1, 1) ** 8
    assert decompose_to_schur(poly).coeff(3, 3, 3) == 168


# ---------------------------------------------------------------------------
# Eulerian numbers


@pytest.mark.parametrize("n", range(1, 8))
def test_eulerian_matches_brute_force(n):
    for k in range(n):
        assert eulerian_number(n, k) == brute_eulerian(n, k)


def test_eulerian_examples_and_errors():
    assert all(eulerian_number(n, 0) == 1 for n in range(1, 20))
    assert eulerian_number(4, 1) == 11
    assert eulerian_number(5, 1) == 26
    assert sum(eulerian_number(6, k) for k in range(6)) == factorial(6)
    for bad in [(3, 3), (3, -1), (0, 0)]:
        with pytest.raises(ValueError):
            eulerian_number(*bad)


@pytest.mark.parametrize("n, coeff", [(5, 1), (6, 4), (7, 11), (10, 120)])
def test_euler_coefficient_check(n, coeff):
    chk = euler_coefficient_check(n)
    assert chk.coeff == coeff
    assert chk.closed_form == 2 ** (n - 3) - (n - 2)
    assert chk.all_equal


def test_one_row_coefficient_recurrence():
    # A_n = 2 A_{n-1} - A_{n-2} + 2^{n-5} for n >= 8
    a = {n: abct_class(n).expansion.coeff(n - 5) for n in range(5, 30)}
    for n in range(8, 30):
        assert a[n] == 2 * a[n - 1] - a[n - 2] + 2 ** (n - 5)
