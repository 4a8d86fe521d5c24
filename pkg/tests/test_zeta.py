from fractions import Fraction

import mpmath
import pytest
from mpmath import mpf

from src.config.constants import Constants
from src.kernel.bracket import Bracket, bracket_sum
from src.kernel.elementary import power_real
from src.kernel.precision import working_precision
from src.models.series_value import SeriesMethod
from src.sequences.streams import CoefficientStream, StreamKind
from src.utils.error_handler import InvalidParameterError
from src.zeta.dirichlet import (delta_via_functional_equation, dirichlet_series, dirichlet_series_many,
                                integral_tail_bound)
from src.zeta.hurwitz import em_enclosure, euler_maclaurin_caps, hurwitz_zeta, riemann_zeta
from src.zeta.lambert import lambert_series, lambert_tail_bound
from src.zeta.polygamma import polygamma_34, polygamma_34_series, polygamma_from_hurwitz


def oracle(function):
    with mpmath.workprec(400):
        return function()


def delta_oracle(s):
    return oracle(lambda: mpmath.zeta(s, mpf(3) / 4) / (mpf(4) ** s * (1 - mpf(2) ** -s)))


@pytest.mark.parametrize("s, a, reference", [
    (2, Fraction(3, 4), lambda: mpmath.pi ** 2 - 8 * mpmath.catalan),
    (3, 1, lambda: mpmath.zeta(3)),
    (3, Fraction(3, 4), lambda: 28 * mpmath.zeta(3) - mpmath.pi ** 3),
    ("2.5", Fraction(1, 4), lambda: mpmath.zeta(mpf(5) / 2, mpf(1) / 4)),
    ("1.5", Fraction(1, 3), lambda: mpmath.zeta(mpf(3) / 2, mpf(1) / 3)),
])
def test_hurwitz_zeta_encloses_reference(s, a, reference, bits):
    value = hurwitz_zeta(s, a, precision=bits)
    assert value.method == SeriesMethod.EULER_MACLAURIN
    assert value.target_met
    assert set(value.details) == {'N', 'J'}
    with working_precision(bits):
        assert value.value.contains(oracle(reference))
        assert value.value.rad < mpmath.ldexp(mpf(1), -bits // 2 + 4)


@pytest.mark.parametrize("s, reference", [(2, lambda: mpmath.pi ** 2 / 6), (4, lambda: mpmath.pi ** 4 / 90),
                                          (3, lambda: mpmath.zeta(3))])
def test_riemann_zeta(s, reference, full_bits):
    value = riemann_zeta(s, precision=full_bits)
    with working_precision(full_bits):
        assert value.value.contains(oracle(reference))


def test_hurwitz_zeta_tight_target(full_bits):
    value = hurwitz_zeta(3, Fraction(3, 4), precision=full_bits, target_eps=mpmath.ldexp(mpf(1), -(full_bits - 24)))
    assert value.target_met
    with working_precision(full_bits):
        assert value.value.rad < mpmath.ldexp(mpf(1), -(full_bits - 30))


def test_euler_maclaurin_self_consistency(bits):
    with working_precision(bits):
        first = em_enclosure(3, Fraction(3, 4), 20, 10, precision=bits)
        second = em_enclosure(3, Fraction(3, 4), 40, 25, precision=bits)
        assert first.value.intersects(second.value)
        assert second.tail_bound < first.tail_bound


def test_hurwitz_zeta_reports_shortfall_under_caps():
    reference = oracle(lambda: mpmath.zeta(3))
    value = hurwitz_zeta(3, 1, precision=256, max_n=10, max_j=2)
    assert not value.target_met
    with working_precision(256):
        assert value.value.contains(reference)
        assert value.tail_bound > mpmath.ldexp(mpf(1), -128)


@pytest.mark.parametrize("s, a", [(1, 1), ("0.5", 1), (2, 0), (2, Fraction(3, 2)), (2, -1)])
def test_hurwitz_zeta_domain(s, a):
    with pytest.raises(InvalidParameterError):
        hurwitz_zeta(s, a, precision=64)


def test_polygamma_closed_form(bits):
    with working_precision(bits):
        closed = polygamma_34(1, precision=bits)
        assert closed.contains(oracle(lambda: 2 * mpmath.pi ** 3 - 56 * mpmath.zeta(3)))
        assert closed.contains(oracle(lambda: mpmath.psi(2, mpf(3) / 4)))
        assert mpmath.nstr(closed.mid, 5) == "-5.3026"


def test_polygamma_routes_agree(bits):
    with working_precision(bits):
        assert polygamma_from_hurwitz(2, 1, precision=bits).contains(oracle(lambda: -2 * mpmath.zeta(3)))
        assert polygamma_from_hurwitz(2, Fraction(3, 4), precision=bits).intersects(polygamma_34(1, precision=bits))
        assert polygamma_from_hurwitz(4, Fraction(3, 4), precision=bits).intersects(polygamma_34(2, precision=bits))
        assert polygamma_34(2, precision=bits).contains(
            oracle(lambda: 8 * (5 * mpmath.pi ** 5 - 2 * 24 * 31 * mpmath.zeta(5))))


def test_polygamma_rejects_bad_order():
    with pytest.raises(InvalidParameterError):
        polygamma_34(0)
    with pytest.raises(InvalidParameterError):
        polygamma_from_hurwitz(-1, Fraction(1, 2))


def test_direct_sum_small_example(bits):
    value = dirichlet_series(CoefficientStream(StreamKind.PM_PAPERFOLDING), 3, 4, precision=bits)
    assert value.method == SeriesMethod.DIRECT_PARTIAL_SUM
    assert value.terms_used == 4
    partial = Fraction(-1) - Fraction(1, 8) + Fraction(1, 27) - Fraction(1, 64)
    with working_precision(bits):
        assert value.value.contains(partial)
        assert value.tail_bound >= mpf(1) / 32
        assert value.value.rad >= value.tail_bound


def test_direct_sum_rejects_empty_sum():
    with pytest.raises(InvalidParameterError):
        dirichlet_series(CoefficientStream(StreamKind.TM_RAW), 3, 0)
    with pytest.raises(InvalidParameterError):
        dirichlet_series_many([], 3, 10)
    with pytest.raises(InvalidParameterError):
        dirichlet_series(CoefficientStream(StreamKind.TM_RAW), 1, 10)


def test_integral_tail_bound_values():
    with working_precision(64):
        assert integral_tail_bound(3, 10) >= mpf(1) / 200
        assert integral_tail_bound(3, 10) <= mpf(1) / 200 * (1 + mpf(2) ** -50)
        assert integral_tail_bound(2, 1000) < integral_tail_bound(2, 500)


@pytest.mark.parametrize("s", [3, "2.5", 5])
def test_delta_direct_sum_encloses_functional_equation(s, bits):
    reference = delta_oracle(mpf(Fraction(s).numerator) / Fraction(s).denominator)
    direct = dirichlet_series(CoefficientStream(StreamKind.PAPERFOLDING_RAW), s, 20000, precision=bits)
    closed = delta_via_functional_equation(s, precision=bits)
    assert closed.method == SeriesMethod.FUNCTIONAL_EQUATION
    with working_precision(bits):
        assert direct.value.contains(reference)
        assert closed.value.contains(reference)
        assert direct.value.intersects(closed.value)


def test_delta_at_three_matches_known_value(bits):
    with working_precision(bits):
        closed = delta_via_functional_equation(3, precision=bits)
        assert abs(closed.value.mid - mpf("0.04734494")) < mpf("1e-8")
        assert closed.value.contains(oracle(lambda: (28 * mpmath.zeta(3) - mpmath.pi ** 3) / 56))


def test_delta_at_five_matches_hurwitz_example(bits):
    reference = oracle(lambda: (496 * mpmath.zeta(5) - mpf(5) / 3 * mpmath.pi ** 5) / (mpf(4) ** 5 * mpf(31) / 32))
    with working_precision(bits):
        assert delta_via_functional_equation(5, precision=bits).value.contains(reference)


@pytest.mark.slow
def test_delta_million_terms_non_integer_exponent(bits):
    direct = dirichlet_series(CoefficientStream(StreamKind.PAPERFOLDING_RAW), "2.5", 1000000, precision=bits)
    closed = delta_via_functional_equation("2.5", precision=bits)
    with working_precision(bits):
        assert direct.value.intersects(closed.value)
        assert direct.value.rad < mpf("1e-8")


def test_multi_stream_sum_matches_single_sums(bits):
    streams = [CoefficientStream(StreamKind.TM_RAW_SHIFTED), CoefficientStream(StreamKind.TM_RAW)]
    together = dirichlet_series_many(streams, "2.5", 3000, precision=bits, chunk_size=256)
    for stream, value in zip(streams, together):
        alone = dirichlet_series(stream, "2.5", 3000, precision=bits, chunk_size=256)
        assert (value.value.mid, value.value.rad) == (alone.value.mid, alone.value.rad)
        assert value.details['stream'] == stream.name


def test_direct_sum_bits_independent_of_workers(bits):
    stream = CoefficientStream(StreamKind.THEOREM1_N, 1)
    serial = dirichlet_series(stream, 3, 5000, precision=bits, chunk_size=500, workers=1)
    parallel = dirichlet_series(stream, 3, 5000, precision=bits, chunk_size=500, workers=2)
    assert (serial.value.mid, serial.value.rad) == (parallel.value.mid, parallel.value.rad)


def test_doubling_terms_tightens_radius(bits):
    stream = CoefficientStream(StreamKind.PM_PAPERFOLDING)
    coarse = dirichlet_series(stream, 3, 2000, precision=bits)
    fine = dirichlet_series(stream, 3, 4000, precision=bits)
    assert fine.value.rad < coarse.value.rad
    with working_precision(bits):
        assert fine.value.intersects(coarse.value)


def test_lambert_series_gives_ramanujan_zeta3(full_bits):
    series = lambert_series(3, precision=full_bits)
    assert series.target_met
    assert series.terms_used < 40
    reference = oracle(lambda: mpf(7) / 180 * mpmath.pi ** 3 - mpmath.zeta(3))
    with working_precision(full_bits):
        assert series.value.contains(reference)


def test_lambert_series_fixed_terms_without_tail(bits):
    truncated = lambert_series(3, terms=1, precision=bits, rigorous_tail=False)
    assert truncated.terms_used == 1
    assert truncated.tail_bound == 0
    reference = oracle(lambda: mpf(7) / 180 * mpmath.pi ** 3 - mpmath.zeta(3))
    with working_precision(bits):
        assert not truncated.value.contains(reference)
        assert lambert_series(3, terms=1, precision=bits).value.contains(reference)


def test_lambert_tail_bound_decreases():
    with working_precision(64):
        assert lambert_tail_bound(3, 5) < lambert_tail_bound(3, 4)
        assert lambert_tail_bound(7, 4) < lambert_tail_bound(3, 4)


def test_lambert_series_rejects_bad_input():
    with pytest.raises(InvalidParameterError):
        lambert_series(0)
    with pytest.raises(InvalidParameterError):
        lambert_series(3, terms=0)


@pytest.mark.parametrize("s", [2, "2.5", 3, 5])
def test_riemann_zeta_agrees_with_partial_sum_and_tail(s, bits):
    n_terms = 2000
    value = hurwitz_zeta(s, 1, precision=bits)
    with working_precision(bits):
        exponent = Bracket.exact(s)
        head = bracket_sum(power_real(n, -exponent) for n in range(1, n_terms + 1))
        direct = head.widen(integral_tail_bound(s, n_terms))
        assert value.value.intersects(direct)


def _every_stream():
    return [CoefficientStream(kind, 1 if kind.parameterized else None) for kind in StreamKind]


def _assert_tail_covers_next_block(n_terms, bits):
    streams = _every_stream()
    coarse = dirichlet_series_many(streams, 3, n_terms, precision=bits)
    fine = dirichlet_series_many(streams, 3, 2 * n_terms, precision=bits)
    with working_precision(bits):
        for stream, short, long in zip(streams, coarse, fine):
            assert abs(long.value.mid - short.value.mid) <= short.tail_bound, stream.name


@pytest.mark.parametrize("n_terms", [1000, 10000])
def test_tail_bound_covers_next_block(n_terms, bits):
    _assert_tail_covers_next_block(n_terms, bits)


@pytest.mark.slow
def test_tail_bound_covers_next_block_at_hundred_thousand(bits):
    _assert_tail_covers_next_block(100000, bits)


@pytest.mark.parametrize("s, a, n_terms, big_j", [
    (3, Fraction(3, 4), 20, 4),
    ("2.5", Fraction(1, 4), 20, 4),
    (5, 1, 30, 6),
    ("1.5", Fraction(1, 3), 50, 8),
])
def test_euler_maclaurin_doubled_cutoff_agrees(s, a, n_terms, big_j, bits):
    first = em_enclosure(s, a, n_terms, big_j, precision=bits)
    second = em_enclosure(s, a, 2 * n_terms, big_j + 2, precision=bits)
    with working_precision(bits):
        assert first.value.intersects(second.value)
        assert second.tail_bound < first.tail_bound


def test_euler_maclaurin_caps_apply_inside_block_only():
    with euler_maclaurin_caps(max_n=10, max_j=2):
        capped = riemann_zeta(3, precision=256)
        closed = polygamma_34_series(1, precision=256)
        explicit = riemann_zeta(3, precision=256, max_n=Constants.EM_MAX_N, max_j=Constants.EM_MAX_J)
    assert not capped.target_met
    assert not closed.target_met
    assert explicit.target_met
    assert riemann_zeta(3, precision=256).target_met


def test_polygamma_series_carries_zeta_evaluation(bits):
    closed = polygamma_34_series(1, precision=bits)
    assert closed.method == SeriesMethod.CLOSED_FORM
    assert closed.target_met
    assert closed.terms_used == closed.details['N']
    with working_precision(bits):
        assert closed.value.contains(oracle(lambda: mpmath.psi(2, mpf(3) / 4)))
        assert closed.tail_bound <= closed.value.rad
