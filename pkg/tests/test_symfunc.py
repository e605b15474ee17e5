import itertools

import pytest

from qvirasoro.arith import ONE, ArithError, Scalar, q, t
from qvirasoro.symfunc import (
    SymFun,
    dominance_less,
    m_to_p,
    macdonald_P,
    macdonald_eigenvalue,
    p_to_m,
    partitions,
    qt_inner,
    z_lambda,
)


def brute_partitions(n):
    """Oracle: enumerate partitions via nondecreasing compositions."""
    out = set()

    def rec(rest, maxp, acc):
        if rest == 0:
            out.add(tuple(acc))
            return
        for k in range(min(rest, maxp), 0, -1):
            rec(rest - k, k, acc + [k])

    rec(n, n, [])
    return out


def brute_p_in_m(lam, nvars):
    """Oracle: expand p_lam literally as a polynomial and collect orbits."""
    poly = {(0,) * nvars: 1}
    for part in lam:
        new = {}
        for e, c in poly.items():
            for i in range(nvars):
                k = list(e)
                k[i] += part
                k = tuple(k)
                new[k] = new.get(k, 0) + c
        poly = new
    out = {}
    for e, c in poly.items():
        mu = tuple(sorted((v for v in e if v), reverse=True))
        key = tuple(sorted(e, reverse=True))
        if e == key:
            out[mu] = c
    return {k: v for k, v in out.items() if v}


def test_partitions_order_and_count():
    assert partitions(0) == [()]
    assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(partitions(6)) == 11
    for n in range(8):
        assert set(partitions(n)) == brute_partitions(n)


def test_z_lambda():
    assert z_lambda((1, 1)) == Scalar.from_int(2)
    assert z_lambda((2,)) == Scalar.from_int(2)
    assert z_lambda((2, 2, 1)) == Scalar.from_int(8)


def test_dominance():
    assert dominance_less((1, 1), (2,))
    assert dominance_less((2, 2), (3, 1))
    assert not dominance_less((3, 1, 1, 1), (2, 2, 2))
    assert not dominance_less((2, 2, 2), (3, 1, 1, 1))
    assert not dominance_less((2,), (2,))
    with pytest.raises(ArithError):
        dominance_less((1,), (2,))


def test_p_to_m_examples():
    p1 = SymFun("p", 1, {(1,): ONE})
    assert p_to_m(p1).terms == {(1,): ONE}
    p11 = SymFun("p", 2, {(1, 1): ONE})
    m = p_to_m(p11).terms
    assert m[(2,)] == ONE and m[(1, 1)] == Scalar.from_int(2)
    p21 = SymFun("p", 3, {(2, 1): ONE})
    m = p_to_m(p21).terms
    assert m == {(3,): ONE, (2, 1): ONE}


def test_p_to_m_against_bruteforce():
    for n in range(1, 6):
        for lam in partitions(n):
            got = p_to_m(SymFun("p", n, {lam: ONE})).terms
            expect = brute_p_in_m(lam, n)
            assert {k: int(str(v)) for k, v in got.items()} == expect, lam


def test_roundtrip():
    for n in range(7):
        for lam in partitions(n):
            f = SymFun("p", n, {lam: ONE})
            assert m_to_p(p_to_m(f)) == f


def test_qt_inner():
    p1 = SymFun("p", 1, {(1,): ONE})
    assert qt_inner(p1, p1) == (1 - q) / (1 - t)
    p2 = SymFun("p", 2, {(2,): ONE})
    p11 = SymFun("p", 2, {(1, 1): ONE})
    assert qt_inner(p2, p11).is_zero()
    assert qt_inner(p11, p11) == 2 * (1 - q) ** 2 / (1 - t) ** 2
    with pytest.raises(ArithError):
        qt_inner(p1, p2)


def test_macdonald_small():
    P1 = macdonald_P((1,))
    assert P1.terms == {(1,): ONE}
    P11 = macdonald_P((1, 1))
    half = Scalar.from_int(1) / 2
    assert P11.terms == {(1, 1): half, (2,): -half}
    P2m = p_to_m(macdonald_P((2,)))
    assert P2m.terms[(2,)] == ONE
    assert P2m.terms[(1, 1)] == (1 + q) * (1 - t) / (1 - q * t)


def test_macdonald_triangular():
    for n in range(1, 6):
        for lam in partitions(n):
            Pm = p_to_m(macdonald_P(lam))
            assert Pm.terms[lam] == ONE
            for mu in Pm.terms:
                assert mu == lam or dominance_less(mu, lam)


def test_macdonald_orthogonal():
    for n in range(1, 6):
        ps = partitions(n)
        Ps = {lam: macdonald_P(lam) for lam in ps}
        for a, b in itertools.combinations(ps, 2):
            assert qt_inner(Ps[a], Ps[b]).is_zero(), (a, b)


def test_hall_littlewood_specialization():
    zero = Scalar.from_int(0)
    for n in range(1, 5):
        for lam in partitions(n):
            Pm = p_to_m(macdonald_P(lam))
            HL = p_to_m(macdonald_P(lam, hall_littlewood=True))
            subbed = {}
            for k, v in Pm.terms.items():
                s = v.substitute({"x": zero})
                if not s.is_zero():
                    subbed[k] = s
            assert subbed == HL.terms, lam


def test_eigenvalue():
    # rectangular (s^r) splits into r terms with q^s and N-r without
    r, s, N = 2, 3, 4
    lam = (s,) * r
    acc = Scalar.from_int(0)
    for i in range(1, r + 1):
        acc = acc + t ** (N - i) * q**s
    for i in range(r + 1, N + 1):
        acc = acc + t ** (N - i)
    assert macdonald_eigenvalue(lam, N) == acc
    assert macdonald_eigenvalue((), 2) == t + 1
    assert macdonald_eigenvalue((1,), 1) == q
    with pytest.raises(ArithError):
        macdonald_eigenvalue((1, 1), 1)


def test_symfun_json():
    f = SymFun("p", 2, {(1, 1): ONE, (2,): -ONE})
    j = f.to_json()
    assert j["basis"] == "p" and j["degree"] == 2
    assert j["terms"] == [
        {"partition": [2], "coeff": "-1"},
        {"partition": [1, 1], "coeff": "1"},
    ]
