import random
from fractions import Fraction
from math import factorial

import mpmath
import pytest
from mpmath import mp, mpf

from src.kernel.bracket import Bracket, bracket_sum, to_bracket
from src.kernel.elementary import cosh, exp, generalized_binomial, ln, pi, power_real
from src.kernel.precision import (check_precision, decimal_digits, default_target_eps, precision_for_digits,
                                  tight_target_eps, working_precision)
from src.utils.error_handler import DomainError, InvalidParameterError
from src.utils.text_utils import (certified_decimals, certified_string, decimal_string, fixed_point,
                                  rational_string)


def oracle(function):
    """Reference value computed well beyond the test precision."""
    with mpmath.workprec(400):
        return function()


def test_pi_encloses_reference():
    reference = oracle(lambda: +mpmath.pi)
    with working_precision(64):
        narrow = pi()
        assert narrow.contains(reference)
    wide = pi(16)
    with working_precision(64):
        assert wide.contains(reference)
        assert wide.rad > narrow.rad


def test_pi_cubed():
    reference = oracle(lambda: mpmath.pi ** 3)
    with working_precision(128):
        assert pi().pow_int(3).contains(reference)
        assert mpmath.nstr(pi().pow_int(3).mid, 10) == "31.00627668"


def test_power_real_integer_and_algebraic():
    with working_precision(64):
        assert power_real(2, 3).contains(8)
        assert power_real(4, "-2.5").contains(Fraction(1, 32))
        assert power_real(Fraction(3, 4), -2).contains(Fraction(16, 9))


def test_power_real_identity_exponent():
    e = oracle(lambda: mpmath.e)
    with working_precision(128):
        x = Bracket(+mpmath.e, mpmath.ldexp(mpf(1), -120))
        assert power_real(x, 1).contains(e)


def test_power_real_rejects_nonpositive_base():
    with working_precision(64):
        with pytest.raises(DomainError):
            power_real(Bracket(mpf(0), mpf("0.1")), 2)


def test_exp_cosh_ln():
    reference = oracle(lambda: mpmath.exp(2 * mpmath.pi))
    with working_precision(128):
        assert exp(0).contains(1)
        assert cosh(0).contains(1)
        assert exp(pi().scale2(1)).contains(reference)
        assert ln(exp(3)).contains(3)
        with pytest.raises(DomainError):
            ln(Bracket(mpf(-1)))


@pytest.mark.parametrize("s, k, expected", [(3, 2, Fraction(6)), ("2.5", 1, Fraction(5, 2)),
                                            ("2.5", 3, Fraction(105, 16)), (7, 0, Fraction(1))])
def test_generalized_binomial(s, k, expected):
    with working_precision(64):
        assert generalized_binomial(s, k).contains(expected)


def test_generalized_binomial_rejects_negative_k():
    with pytest.raises(InvalidParameterError):
        generalized_binomial(2, -1)


def test_bracket_sum_edge_cases():
    with working_precision(64):
        empty = bracket_sum([], extra_tail=Bracket(mpf(0)))
        assert empty.mid == 0 and empty.rad == 0
        three = bracket_sum([Bracket.exact(1), Bracket.exact(2)], extra_tail=Bracket(mpf(0)))
        assert three.contains(3)
        assert three.rad <= mpmath.ldexp(mpf(1), -55)


def test_bracket_sum_basel():
    reference = oracle(lambda: mpmath.pi ** 2 / 6)
    n_terms = 20000
    with working_precision(64):
        terms = (Bracket.exact(Fraction(1, n * n)) for n in range(1, n_terms + 1))
        total = bracket_sum(terms, extra_tail=Bracket(mpf(0), mpf(1) / n_terms))
        assert total.contains(reference)


def test_bracket_sum_is_deterministic_for_fixed_chunks():
    with working_precision(64):
        terms = [Bracket.exact(Fraction(1, n)) for n in range(1, 500)]
        first = bracket_sum(terms, chunk_size=32)
        second = bracket_sum(list(terms), chunk_size=32)
        assert (first.mid, first.rad) == (second.mid, second.rad)


def test_bracket_arithmetic_encloses_exact_results():
    with working_precision(64):
        third = Bracket.exact(Fraction(1, 3))
        assert third.rad > 0
        assert (third + third + third).contains(1)
        assert (third * 3).contains(1)
        assert (Bracket.exact(1) / 3).contains(Fraction(1, 3))
        assert (2 - third).contains(Fraction(5, 3))
        assert (-third).contains(Fraction(-1, 3))
        assert Bracket.exact(2).sqrt().contains(oracle(lambda: mpmath.sqrt(2)))


def test_bracket_predicates():
    with working_precision(64):
        a = Bracket(mpf(1), mpf("0.5"))
        b = Bracket(mpf(2), mpf("0.6"))
        c = Bracket(mpf(3), mpf("0.1"))
        assert a.intersects(b)
        assert not a.intersects(c)
        assert a.is_positive() and a.excludes_zero()
        assert not Bracket(mpf(0), mpf(1)).excludes_zero()
        assert to_bracket(a) is a
        assert Bracket.exact(5).scale2(-1).contains(Fraction(5, 2))
        assert a.widen(mpf(1)).contains(0)


def test_bracket_rejects_bad_input():
    with pytest.raises(DomainError):
        Bracket(mpf(0), mpf(-1))
    with working_precision(64):
        with pytest.raises(DomainError):
            Bracket.exact(1) / Bracket(mpf(0), mpf("0.1"))
    with pytest.raises(TypeError):
        Bracket.exact([1])


def test_bracket_to_dict_uses_decimal_strings():
    with working_precision(64):
        data = Bracket.exact(Fraction(1, 4)).to_dict(digits=5)
    assert data["mid"].startswith("0.25")
    assert isinstance(data["rad"], str)


def test_precision_helpers():
    assert check_precision(16) == 16
    with pytest.raises(InvalidParameterError):
        check_precision(8)
    with pytest.raises(InvalidParameterError):
        check_precision("64")
    previous = mp.prec
    with working_precision(200) as bits:
        assert bits == 200 and mp.prec == 200
    assert mp.prec == previous
    assert precision_for_digits(50) == 264
    assert default_target_eps(256) == mpmath.ldexp(1, -128)
    assert tight_target_eps(256) == mpmath.ldexp(1, -232)
    assert decimal_digits(256) == 79


def test_text_rendering():
    assert fixed_point(mpf("-1.10358"), 4) == "-1.1036"
    assert fixed_point(mpf("0.0473"), 2) == "0.05"
    assert fixed_point(mpf("2.5"), 0) in ("2", "3")
    assert certified_decimals(mpf("2e-6")) == 5
    assert certified_decimals(mpf(2)) == 0
    assert certified_string(mpf("1.6449340668"), mpf("3e-7")) == "1.644934"
    assert rational_string(Fraction(5, 3)) == "5/3"
    assert rational_string(28) == "28"
    assert rational_string(Fraction(-691, 2730)) == "-691/2730"
    with working_precision(64):
        assert decimal_string(mpf("0.5"), 3) == "0.500"


STRESS_PRECISIONS = [24, 53, 64, 128]
STRESS_TRIALS_PER_OPERATION = 320


def _random_bracket(rng, low, high, bits):
    mid = mpf(rng.uniform(low, high))
    if rng.random() < 0.25:
        return Bracket(mid)
    return Bracket(mid, mpmath.ldexp(mpf(rng.random()), -rng.randint(bits // 2, bits)))


def _stress_cases(rng, bits):
    """(name, enclosure, reference) triples; the reference is a point of the inputs at 4x precision."""
    for _ in range(STRESS_TRIALS_PER_OPERATION):
        x = _random_bracket(rng, -1000, 1000, bits)
        y = _random_bracket(rng, -1000, 1000, bits)
        with mpmath.workprec(4 * bits):
            reference = x.mid + y.mid
        yield "add", x + y, reference

        with mpmath.workprec(4 * bits):
            reference = x.mid * y.mid
        yield "mul", x * y, reference

        divisor = _random_bracket(rng, 0.5, 100, bits)
        if rng.random() < 0.5:
            divisor = -divisor
        with mpmath.workprec(4 * bits):
            reference = x.mid / divisor.mid
        yield "div", x / divisor, reference

        argument = _random_bracket(rng, -30, 30, bits)
        with mpmath.workprec(4 * bits):
            reference = mpmath.exp(argument.mid)
        yield "exp", exp(argument), reference

        with mpmath.workprec(4 * bits):
            reference = mpmath.cosh(argument.mid)
        yield "cosh", cosh(argument), reference

        positive = _random_bracket(rng, 0.01, 100, bits)
        with mpmath.workprec(4 * bits):
            reference = mpmath.log(positive.mid)
        yield "ln", ln(positive), reference

        if rng.random() < 0.25:
            exponent = Bracket(mpf(rng.randint(-6, 6)))
        else:
            exponent = _random_bracket(rng, -6, 6, bits)
        with mpmath.workprec(4 * bits):
            reference = mpmath.power(positive.mid, exponent.mid)
        yield "power_real", power_real(positive, exponent), reference

        s = _random_bracket(rng, -10, 10, bits)
        k = rng.randint(0, 12)
        with mpmath.workprec(4 * bits):
            product = mpf(1)
            for j in range(k):
                product *= s.mid + j
            reference = product / factorial(k)
        yield "generalized_binomial", generalized_binomial(s, k), reference


def test_randomized_operations_contain_high_precision_reference():
    rng = random.Random(20240613)
    trials = 0
    violations = []
    for bits in STRESS_PRECISIONS:
        with working_precision(bits):
            for name, enclosure, reference in _stress_cases(rng, bits):
                trials += 1
                if not enclosure.contains(reference):
                    violations.append((bits, name, enclosure, reference))
    assert trials >= 10 ** 4
    assert violations == []


@pytest.mark.parametrize("build", [
    lambda: pi(),
    lambda: exp(Fraction(1, 3)),
    lambda: ln(Fraction(7, 3)),
    lambda: cosh(Fraction(5, 2)),
    lambda: power_real(Fraction(3, 2), "2.5"),
    lambda: generalized_binomial(Fraction(1, 3), 6),
], ids=["pi", "exp", "ln", "cosh", "power_real", "generalized_binomial"])
def test_doubling_precision_shrinks_radius(build):
    enclosures = []
    for bits in (64, 128, 256):
        with working_precision(bits):
            enclosures.append(build())
    for coarse, fine in zip(enclosures, enclosures[1:]):
        assert fine.rad < coarse.rad
        with working_precision(256):
            assert fine.intersects(coarse)
