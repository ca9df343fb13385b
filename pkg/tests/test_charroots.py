import pytest

from sirdelay.charroots import (
    char_deriv,
    char_roots_scan,
    char_value,
    find_delay_crossing,
    max_real_part,
)
from sirdelay.stability import CharCoeffs

CC_EX5_2 = CharCoeffs(l=3.0, m=2.0, n=0.0, l1=0.0, m1=0.0, n1=0.0)
CC_EX5_3 = CharCoeffs(l=7.0, m=6.0, n=0.0, l1=4.0, m1=4.0, n1=-2.0)


@pytest.mark.parametrize("tau,delta", [(0.0, 0.0), (1.0, 1.0), (3.0, 2.0), (7.0, 0.5)])
def test_ex5_2_roots_are_delay_independent(tau, delta):
    roots = char_roots_scan(CC_EX5_2, tau, delta)
    reals = sorted(r.real for r in roots)
    assert len(reals) == 3
    for got, want in zip(reals, (-2.0, -1.0, 0.0)):
        assert abs(got - want) < 1e-9
    assert all(abs(r.imag) < 1e-9 for r in roots)


def test_all_zero_coefficients_collapse_to_origin():
    roots = char_roots_scan(CharCoeffs(0.0, 0.0, 0.0, 0.0, 0.0, 0.0), 0.0, 0.0)
    assert len(roots) == 1
    assert abs(roots[0]) < 1e-6


def test_polynomial_roots_with_complex_pair():
    # (lam + 4)(lam^2 - 2 lam + 10): roots -4 and 1 +- 3i
    cc = CharCoeffs(l=2.0, m=2.0, n=40.0, l1=0.0, m1=0.0, n1=0.0)
    roots = char_roots_scan(cc, 0.0, 0.0)
    assert len(roots) == 2  # conjugate implied
    assert roots[0] == pytest.approx(1.0 + 3.0j, abs=1e-9)
    assert roots[1] == pytest.approx(-4.0 + 0.0j, abs=1e-9)
    assert roots[0].imag >= 0.0


def test_roots_sorted_by_descending_real_part():
    roots = char_roots_scan(CC_EX5_3, 2.0, 0.0)
    assert all(a.real >= b.real - 1e-12 for a, b in zip(roots, roots[1:]))


def test_residuals_below_tolerance():
    for tau, delta in ((0.0, 0.0), (2.0, 1.0)):
        for root in char_roots_scan(CC_EX5_3, tau, delta):
            assert abs(char_value(CC_EX5_3, tau, delta, root)) < 1e-9


def test_no_delay_terms_means_delay_invariant_roots():
    cc = CharCoeffs(l=4.0, m=5.0, n=2.0, l1=0.0, m1=0.0, n1=0.0)
    base = char_roots_scan(cc, 0.0, 0.0)
    for tau, delta in ((1.0, 0.0), (3.0, 2.0), (9.0, 9.0)):
        other = char_roots_scan(cc, tau, delta)
        assert len(other) == len(base)
        for a, b in zip(base, other):
            assert abs(a - b) < 1e-8


def test_char_deriv_matches_complex_difference():
    tau, delta = 1.5, 0.7
    h = 1e-7
    for z in (0.3 + 1.2j, -1.0 + 0.4j, -0.2 + 3.0j):
        numeric = (char_value(CC_EX5_3, tau, delta, z + h)
                   - char_value(CC_EX5_3, tau, delta, z - h)) / (2.0 * h)
        exact = char_deriv(CC_EX5_3, tau, delta, z)
        assert exact == pytest.approx(numeric, rel=1e-6)


def test_ex5_3_crossing_bracket():
    g4 = max_real_part(CC_EX5_3, 4.0, 0.0)
    g5 = max_real_part(CC_EX5_3, 5.0, 0.0)
    assert g4 < 0.0 < g5
    tau_star = find_delay_crossing(CC_EX5_3, 4.0, 5.0, fixed=0.0)
    assert 4.5 < tau_star < 4.65  # scan locates the switch near 4.56


def test_find_delay_crossing_requires_bracket():
    with pytest.raises(ValueError):
        find_delay_crossing(CC_EX5_3, 0.0, 1.0, fixed=0.0)
