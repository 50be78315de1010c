import pytest
from hypothesis import given, strategies as st

from topvertex.errors import NotPolynomial, WindowUnknown
from topvertex.qseries import (
    QSeries,
    as_polynomial,
    from_json_dict,
    from_terms,
    macmahon,
    qs_add,
    qs_divide_exact,
    qs_eq_to_order,
    qs_invert_variable,
    qs_monomial,
    qs_mul,
    qs_one,
    qs_scalar,
    qs_sub,
    qs_truncate,
    qs_zero,
    scale_monomial,
    to_json_dict,
)


def test_normal_form():
    a = QSeries(-2, [0, 0, 1, 2], 5)
    assert a.valuation == 0
    assert a.coeffs == (1, 2)
    b = QSeries(0, [1, 2, 3, 4], 1)
    assert b.coeffs == (1, 2)
    assert b.trunc == 1
    z = QSeries(0, [0, 0], 3)
    assert z.is_zero() and z.valuation == 4
    # trailing zeros inside the window are stripped too
    assert QSeries(0, [1, 0], 5) == QSeries(0, [1], 5)


def test_exact_normalisation():
    a = QSeries(1, [7, 0], 99, exact=True)
    assert a.coeffs == (7,)
    assert a.trunc == 1
    assert a.coefficient(1000) == 0


def test_coefficient_window():
    a = QSeries(0, [1, 2], 3)
    assert a.coefficient(-5) == 0
    assert a.coefficient(1) == 2
    assert a.coefficient(3) == 0
    with pytest.raises(WindowUnknown):
        a.coefficient(4)


def test_add_truncs():
    a = QSeries(0, [1, 1, 1], 2)
    b = QSeries(1, [5], 4)
    s = qs_add(a, b)
    assert s.trunc == 2
    assert s.terms() == {0: 1, 1: 6, 2: 1}


def test_mul_trunc_rule():
    a = QSeries(2, [1, 1], 4)   # q^2 + q^3 + O(q^5)
    b = QSeries(-1, [1], 1)     # q^-1 + O(q^2)
    p = qs_mul(a, b)
    # min(trunc_a + val_b, trunc_b + val_a) = min(4 - 1, 1 + 2) = 3
    assert p.trunc == 3
    assert p.terms() == {1: 1, 2: 1}


def test_mul_exact():
    a = QSeries(0, [1, 1], 0, exact=True)
    b = QSeries(0, [1, -1], 0, exact=True)
    p = qs_mul(a, b)
    assert p.exact and p.terms() == {0: 1, 2: -1}


def test_scale_monomial():
    a = QSeries(0, [1, 2], 3)
    s = scale_monomial(a, -2, coeff=3)
    assert s.valuation == -2 and s.trunc == 1
    assert s.terms() == {-2: 3, -1: 6}


def test_invert_variable():
    a = QSeries(-1, [2, 0, 1], 99, exact=True)  # 2q^-1 + q
    inv = qs_invert_variable(a)
    assert inv.terms() == {1: 2, -1: 1}
    assert inv.exact
    with pytest.raises(NotPolynomial):
        qs_invert_variable(QSeries(0, [1], 5))
    assert qs_invert_variable(as_polynomial(QSeries(0, [1], 5))).terms() == {0: 1}


def test_eq_to_order():
    a = QSeries(0, [1, 2, 3], 2)
    b = QSeries(0, [1, 2, 4], 5)
    assert qs_eq_to_order(a, b, 0, 1)
    assert not qs_eq_to_order(a, b, 0, 2)
    with pytest.raises(WindowUnknown):
        qs_eq_to_order(a, b, 0, 3)


def test_divide_exact():
    a = qs_mul(
        QSeries(-1, [1, 2, 1], 0, exact=True),
        QSeries(2, [3, 0, 5], 0, exact=True),
    )
    q = qs_divide_exact(a, QSeries(2, [3, 0, 5], 0, exact=True))
    assert q == QSeries(-1, [1, 2, 1], 0, exact=True)
    with pytest.raises(ValueError):
        qs_divide_exact(
            QSeries(0, [1, 1, 1], 0, exact=True),
            QSeries(0, [1, 1], 0, exact=True),
        )


def test_macmahon_low_coefficients():
    m = macmahon(5)
    assert m.coeffs == (1, 1, 3, 6, 13, 24)
    assert m.trunc == 5 and not m.exact


def test_json_roundtrip():
    a = QSeries(-3, [1, 0, 2], 4)
    d = to_json_dict(a)
    assert d == {"valuation": -3, "trunc": 4, "coeffs": ["1", "0", "2"]}
    assert from_json_dict(d) == a
    e = as_polynomial(a)
    d2 = to_json_dict(e)
    assert d2["exact"] is True
    assert from_json_dict(d2) == e


coeff_lists = st.lists(st.integers(-9, 9), min_size=0, max_size=6)


@given(coeff_lists, coeff_lists, st.integers(-3, 3), st.integers(-3, 3))
def test_mul_matches_exact_on_window(ca, cb, va, vb):
    """Open multiplication agrees with exact polynomial product on the window."""
    a_open = QSeries(va, ca, va + len(ca) + 1)
    b_open = QSeries(vb, cb, vb + len(cb) + 1)
    a_ex = QSeries(va, ca, 0, exact=True)
    b_ex = QSeries(vb, cb, 0, exact=True)
    p_open = qs_mul(a_open, b_open)
    p_ex = qs_mul(a_ex, b_ex)
    for k in range(p_open.valuation - 2, p_open.trunc + 1):
        assert p_open.coefficient(k) == p_ex.coefficient(k)


@given(coeff_lists, coeff_lists)
def test_ring_identities(ca, cb):
    a = QSeries(0, ca, 8)
    b = QSeries(0, cb, 8)
    assert qs_add(a, b) == qs_add(b, a)
    assert qs_mul(a, b) == qs_mul(b, a)
    assert qs_sub(a, a).is_zero()
    one = qs_one()
    assert qs_mul(a, one) == a
    assert qs_scalar(a, 3) == qs_add(a, qs_add(a, a))


def test_zero_and_monomial_helpers():
    z = qs_zero(4)
    assert z.is_zero() and z.trunc == 4 and z.valuation == 5
    m = qs_monomial(-2, 7)
    assert m.exact and m.terms() == {-2: 7}
    t = from_terms({3: 1, -1: 2}, trunc=5)
    assert t.valuation == -1 and t.coefficient(3) == 1
    u = qs_truncate(t, 2)
    assert u.trunc == 2 and u.coefficient(0) == 0
    with pytest.raises(WindowUnknown):
        u.coefficient(3)
