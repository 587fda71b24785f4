"""p-adic limit evaluation by interpolation, with certified agreement."""

from fractions import Fraction

import pytest

from padicapery.curves import catalog
from padicapery.eisenstein import zeta_star
from padicapery.exactnum import vp
from padicapery.expansion import sequences
from padicapery.oracle import (
    OracleInconsistency,
    PadicValue,
    catalan_2adic_oracle,
    zeta_p_oracle,
)

PUBLISHED_CATALAN_APPROXIMANT = Fraction(783269, 13060350)


def test_zeta_2_oracle_certifies_target():
    value = zeta_p_oracle(2, 1, 40)
    assert value.p == 2
    assert value.agreement_exponent >= 40
    assert vp(value.representative, 2) < value.agreement_exponent


def test_zeta_3_oracle_certifies_target():
    value = zeta_p_oracle(3, 1, 40)
    assert value.p == 3
    assert value.agreement_exponent >= 40


def test_oracle_rejects_bad_arguments():
    with pytest.raises(ValueError):
        zeta_p_oracle(5, 1)
    with pytest.raises(ValueError):
        zeta_p_oracle(2, 0)
    with pytest.raises(ValueError):
        zeta_p_oracle(2, 1, 0)


def test_catalan_oracle_against_published_approximant():
    value = catalan_2adic_oracle(40)
    assert value.agreement_exponent >= 35
    assert vp(value.representative - PUBLISHED_CATALAN_APPROXIMANT, 2) >= 34


def test_catalan_oracle_digit_expansion():
    """The ten leading nonzero digits sit at the published exponents."""
    value = catalan_2adic_oracle(40)
    exponents = [e for e, _ in value.digits(10)]
    assert exponents == [-1, 0, 2, 3, 5, 6, 7, 9, 13, 18]
    assert all(d == 1 for _, d in value.digits(10))


def test_oracle_agreement_is_monotone_in_target():
    small = zeta_p_oracle(2, 1, 20)
    large = zeta_p_oracle(2, 1, 40)
    assert 20 <= small.agreement_exponent <= large.agreement_exponent
    floor = min(small.agreement_exponent, large.agreement_exponent)
    assert vp(small.representative - large.representative, 2) >= floor


def test_oracle_tracks_sequence_limit():
    """Deep table rows agree with the oracle at every certified digit."""
    value = zeta_p_oracle(2, 1, 30)
    table = sequences(catalog("zeta-p2"), 10)
    deep = -table.ratio(9)
    assert vp(value.representative - deep, 2) >= value.agreement_exponent


def test_combine_prefers_tighter_value():
    a = PadicValue(Fraction(1, 3), 5, 2)
    b = PadicValue(Fraction(1, 3) + 32, 5, 2)
    combined = a.combine(b)
    assert combined.agreement_exponent == 5
    c = PadicValue(Fraction(1, 3) + 8, 10, 2)
    with pytest.raises(OracleInconsistency):
        a.combine(c)
    with pytest.raises(ValueError):
        a.combine(PadicValue(Fraction(1, 3), 5, 3))


def test_nodes_use_correct_zeta_values():
    """Spot-check one interpolation node against a hand value."""
    assert zeta_star(2, 14) == Fraction(8191, 12)


def test_digits_reproduce_representative_prefix():
    value = catalan_2adic_oracle(36)
    partial = Fraction(0)
    for exponent, digit in value.digits(8):
        partial += digit * Fraction(2) ** exponent
    assert vp(value.representative - partial, 2) > 9
