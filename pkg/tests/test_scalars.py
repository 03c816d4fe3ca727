import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from froblab.scalars import (ScalarParseError, field_context, format_scalar,
                             parse_scalar)

PRIMES = [2, 3, 5, 7]


def scalars(p):
    deg = p - 1
    q = st.fractions(min_value=-20, max_value=20, max_denominator=7).map(lambda f: mpq(f.numerator, f.denominator))
    return st.lists(q, min_size=deg, max_size=deg).map(lambda c: field_context(p)(c))


@pytest.mark.parametrize("p", PRIMES)
def test_root_of_unity(p):
    K = field_context(p)
    z = K.zeta(1)
    assert z ** p == K.one()
    powers = [z ** k for k in range(1, p)]
    assert len(set(powers)) == p - 1
    assert sum(powers, K.zero()) + K.one() == K.zero()
    assert z * K.zeta(p - 1) == K.one()
    assert z.inverse() == K.zeta(p - 1)


@pytest.mark.parametrize("p", PRIMES)
def test_character_orthogonality(p):
    K = field_context(p)
    for j in range(p):
        s = sum((K.zeta(j * k) for k in range(p)), K.zero())
        assert s == (K(p) if j == 0 else K.zero())


def test_small_fields():
    assert field_context(2).zeta(1) == field_context(2)(-1)
    K3 = field_context(3)
    assert K3.zeta(2) == -K3.one() - K3.zeta(1)
    assert parse_scalar("z^2", 3).coeffs == (-1, -1)
    K5 = field_context(5)
    assert K5.zeta(4) * K5.zeta(1) == K5.one()


def test_rejects_composite():
    for bad in (1, 4, 9):
        with pytest.raises(ValueError):
            field_context(bad)


def test_parse_format():
    assert not parse_scalar("0", 5)
    assert format_scalar(parse_scalar("2/3*z^1", 5)) == "2/3*z^1"
    s = parse_scalar("1/2 - 3*z^1 + z^2", 5)
    assert parse_scalar(format_scalar(s), 5) == s
    for bad in ("", "1/", "z^", "2**z", "abc"):
        with pytest.raises(ScalarParseError):
            parse_scalar(bad, 5)


@pytest.mark.parametrize("p", [3, 5])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_field_axioms(p, data):
    a, b, c = (data.draw(scalars(p)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    if a:
        assert a * a.inverse() == field_context(p).one()
    assert parse_scalar(format_scalar(a), p) == a
