import pytest
from hypothesis import given, settings, strategies as st

from moessner import M_sieve, ParameterError, moessner_sieve, power_oracle, take

from conftest import list_sieve


@pytest.mark.parametrize("n, length, expected", [
    (0, 5, [1, 4, 9, 16, 25]),
    (1, 5, [1, 8, 27, 64, 125]),
    (2, 4, [1, 16, 81, 256]),
])
def test_sieve_prefixes(n, length, expected):
    assert take(moessner_sieve(n).stream, length) == expected


def test_sieve_agrees_with_list_replay():
    for n in range(6):
        assert take(moessner_sieve(n).stream, 30) == list_sieve(n, 30)


def test_round_count():
    assert moessner_sieve(0).rounds == (2,)
    assert moessner_sieve(3).rounds == (5, 4, 3, 2)


@pytest.mark.parametrize("k, n, expected", [(0, 0, 4), (1, 1, 27), (3, 2, 625)])
def test_M_sieve(k, n, expected):
    assert M_sieve(k, n) == expected


@pytest.mark.parametrize("k, n, expected", [(0, 0, 4), (2, 1, 64), (10, 10, 8916100448256)])
def test_power_oracle(k, n, expected):
    assert power_oracle(k, n) == expected


def test_oracle_large_value():
    # 12**12 by repeated multiplication
    acc = 1
    for _ in range(12):
        acc *= 12
    assert power_oracle(10, 10) == acc


@pytest.mark.parametrize("call", [
    lambda: moessner_sieve(-1),
    lambda: M_sieve(-1, 0),
    lambda: power_oracle(0, -2),
])
def test_negative_arguments(call):
    with pytest.raises(ParameterError):
        call()


def test_leading_one():
    for n in range(8):
        assert moessner_sieve(n).stream.at(1) == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 50), st.integers(0, 10))
def test_moessner_theorem(k, n):
    assert M_sieve(k, n) == power_oracle(k, n)
