"""Exact sparse multivariate polynomials and rational functions over int.

The engine's coefficient field is built from the variables

    x, y         with q = x^2, t = y^2, p = q/t,
    l            a formal highest weight,
    w1, w2, ...  auxiliary variables for rational identities,

so every half-integer power of q, t, p appearing in the operator algebra
is an honest monomial in x and y.  Negative powers are denominators,
never Laurent exponents.

MPoly stores a polynomial as a map from exponent tuples to nonzero int
coefficients over an ordered variable tuple (global order
x < y < l < w1 < w2 < ...).  Scalar is a fully reduced fraction of two
MPoly; the canonical sign makes the denominator's leading coefficient
positive under graded lexicographic order, so Scalar equality is
structural equality and the text serialization is canonical.

Multivariate gcd runs content/primitive-part recursion with a
subresultant polynomial remainder sequence at the univariate base.
Fraction-free (Bareiss) elimination backs the exact determinant and
kernel routines.  All values are immutable after construction.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd as _int_gcd

DEFAULT_PRIME = (1 << 61) - 1


class ArithError(Exception):
    """Invalid exact operation: zero division, inexact division, bad variable."""


class EvalPole(Exception):
    """A denominator vanished at a modular evaluation point; resample."""


def var_rank(name: str) -> int:
    if name == "x":
        return 0
    if name == "y":
        return 1
    if name == "l":
        return 2
    if name[:1] == "w" and name[1:].isdigit():
        return 3 + int(name[1:])
    raise ArithError(f"unknown variable {name!r}")


def merge_vars(u: tuple, v: tuple) -> tuple:
    if u == v:
        return u
    return tuple(sorted(set(u) | set(v), key=var_rank))


def _grlex(item):
    exp = item[0]
    return (sum(exp), exp)


class MPoly:
    """Sparse polynomial: exponent tuple -> nonzero int coefficient."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms, _clean=False):
        self.vars = tuple(vars)
        self.terms = terms if _clean else {e: c for e, c in terms.items() if c}

    @classmethod
    def zero(cls, vars=()):
        return cls(vars, {}, _clean=True)

    @classmethod
    def const(cls, c, vars=()):
        c = int(c)
        if c == 0:
            return cls(vars, {}, _clean=True)
        return cls(vars, {(0,) * len(vars): c}, _clean=True)

    @classmethod
    def variable(cls, name):
        var_rank(name)
        return cls((name,), {(1,): 1}, _clean=True)

    def is_zero(self):
        return not self.terms

    def is_const(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def const_value(self):
        if not self.terms:
            return 0
        ((e, c),) = self.terms.items()
        if any(e):
            raise ArithError("not a constant polynomial")
        return c

    def is_one(self):
        return self.is_const() and self.const_value() == 1

    def _embed(self, vars):
        if self.vars == tuple(vars):
            return self
        idx = [vars.index(v) for v in self.vars]
        n = len(vars)
        nt = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for i, p in enumerate(e):
                ne[idx[i]] = p
            nt[tuple(ne)] = c
        return MPoly(vars, nt, _clean=True)

    @staticmethod
    def aligned(a, b):
        if a.vars == b.vars:
            return a, b
        vs = merge_vars(a.vars, b.vars)
        return a._embed(vs), b._embed(vs)

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b = MPoly.aligned(self, other)
        return a.terms == b.terms

    def __add__(self, other):
        a, b = MPoly.aligned(self, other)
        if not a.terms:
            return b
        if not b.terms:
            return a
        nt = dict(a.terms)
        for e, c in b.terms.items():
            s = nt.get(e, 0) + c
            if s:
                nt[e] = s
            elif e in nt:
                del nt[e]
        return MPoly(a.vars, nt, _clean=True)

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, k: int):
        if k == 0:
            return MPoly.zero(self.vars)
        if k == 1:
            return self
        return MPoly(self.vars, {e: c * k for e, c in self.terms.items()}, _clean=True)

    def __mul__(self, other):
        a, b = MPoly.aligned(self, other)
        if not a.terms or not b.terms:
            return MPoly.zero(a.vars)
        if b.is_const():
            return a.scaled(b.const_value())
        if a.is_const():
            return b.scaled(a.const_value())
        n = len(a.vars)
        npairs = len(a.terms) * len(b.terms)
        if npairs <= 64:
            nt = {}
            for ea, ca in a.terms.items():
                for eb, cb in b.terms.items():
                    k = tuple(i + j for i, j in zip(ea, eb))
                    s = nt.get(k, 0) + ca * cb
                    if s:
                        nt[k] = s
                    elif k in nt:
                        del nt[k]
            return MPoly(a.vars, nt, _clean=True)
        strides, nbins = _mul_strides(a, b)
        pa = _pack_exponents(a.terms, strides)
        pb = _pack_exponents(b.terms, strides)
        if npairs > 4096:
            # Kronecker substitution: one big-integer multiplication
            maxa = max(abs(c) for c in a.terms.values())
            maxb = max(abs(c) for c in b.terms.values())
            nmin = min(len(a.terms), len(b.terms))
            binbits = maxa.bit_length() + maxb.bit_length() + nmin.bit_length() + 3
            binbits = (binbits + 7) & ~7
            va = _kron_pack(pa, binbits)
            vb = _kron_pack(pb, binbits)
            acc = _kron_unpack(va * vb, binbits, nbins)
        else:
            if len(pa) > len(pb):
                pa, pb = pb, pa
            acc = {}
            get = acc.get
            for ka, ca in pa:
                for kb, cb in pb:
                    k = ka + kb
                    s = get(k, 0) + ca * cb
                    if s:
                        acc[k] = s
                    elif k in acc:
                        del acc[k]
        return MPoly(a.vars, _unpack_exponents(acc, strides, n), _clean=True)

    def __pow__(self, n: int):
        if n < 0:
            raise ArithError("negative power of a polynomial")
        out = MPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, var):
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max((e[i] for e in self.terms), default=0)

    def leading(self):
        return max(self.terms.items(), key=_grlex)

    def int_content(self):
        g = 0
        for c in self.terms.values():
            g = _int_gcd(g, c if c >= 0 else -c)
            if g == 1:
                return 1
        return g

    def monomial_split(self):
        """Factor out the componentwise-min exponent vector; returns (exps, rest)."""
        if not self.terms:
            return (0,) * len(self.vars), self
        mins = None
        for e in self.terms:
            mins = e if mins is None else tuple(min(i, j) for i, j in zip(mins, e))
            if not any(mins):
                return mins, self
        nt = {tuple(i - j for i, j in zip(e, mins)): c for e, c in self.terms.items()}
        return mins, MPoly(self.vars, nt, _clean=True)

    def exact_div(self, other):
        a, b = MPoly.aligned(self, other)
        if b.is_zero():
            raise ArithError("division by zero polynomial")
        if a.is_zero():
            return a
        if b.is_const():
            d = b.const_value()
            if d in (1, -1):
                return a.scaled(d)
            nt = {}
            for e, c in a.terms.items():
                q, r = divmod(c, d)
                if r:
                    raise ArithError("inexact division")
                nt[e] = q
            return MPoly(a.vars, nt, _clean=True)
        if len(b.terms) == 1:
            ((be, bc),) = b.terms.items()
            nt = {}
            for e, c in a.terms.items():
                q, r = divmod(c, bc)
                if r:
                    raise ArithError("inexact division")
                ne = tuple(i - j for i, j in zip(e, be))
                if any(v < 0 for v in ne):
                    raise ArithError("inexact division")
                nt[ne] = q
            return MPoly(a.vars, nt, _clean=True)
        import heapq

        be, bc = b.leading()
        rem = dict(a.terms)
        heap = [(-sum(e), tuple(-v for v in e)) for e in rem]
        heapq.heapify(heap)
        qt = {}
        while rem:
            while heap:
                nd, ne_neg = heap[0]
                e = tuple(-v for v in ne_neg)
                if e in rem:
                    break
                heapq.heappop(heap)
            c = rem[e]
            ne = tuple(i - j for i, j in zip(e, be))
            if any(v < 0 for v in ne):
                raise ArithError("inexact division")
            qc, r = divmod(c, bc)
            if r:
                raise ArithError("inexact division")
            qt[ne] = qc
            for eb, cb in b.terms.items():
                k = tuple(i + j for i, j in zip(ne, eb))
                old = rem.get(k, 0)
                s = old - qc * cb
                if s:
                    rem[k] = s
                    if old == 0:
                        heapq.heappush(heap, (-sum(k), tuple(-v for v in k)))
                elif k in rem:
                    del rem[k]
        return MPoly(a.vars, qt, _clean=True)

    def eval_int(self, point: dict, prime: int) -> int:
        acc = 0
        pw = {}
        for e, c in self.terms.items():
            term = c % prime
            for i, v in enumerate(self.vars):
                if e[i]:
                    key = (v, e[i])
                    if key not in pw:
                        if v not in point:
                            raise ArithError(f"no value for variable {v!r}")
                        pw[key] = pow(point[v] % prime, e[i], prime)
                    term = term * pw[key] % prime
            acc = (acc + term) % prime
        return acc

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), key=_grlex, reverse=True):
            factors = []
            for i, v in enumerate(self.vars):
                if e[i] == 1:
                    factors.append(v)
                elif e[i] > 1:
                    factors.append(f"{v}^{e[i]}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            parts.append(("-" if c < 0 else "+", body))
        sign0, body0 = parts[0]
        out = ("-" if sign0 == "-" else "") + body0
        for sign, body in parts[1:]:
            out += (" - " if sign == "-" else " + ") + body
        return out

    def __repr__(self):
        return f"MPoly({self})"


def _positive(p: MPoly) -> MPoly:
    if p.is_zero():
        return p
    return -p if p.leading()[1] < 0 else p


def _to_univar(p: MPoly, vi: int):
    """Dense coefficient list in variable index vi; coefficients keep full vars."""
    deg = max(e[vi] for e in p.terms)
    coeffs = [dict() for _ in range(deg + 1)]
    for e, c in p.terms.items():
        le = list(e)
        d = le[vi]
        le[vi] = 0
        coeffs[d][tuple(le)] = c
    return [MPoly(p.vars, t, _clean=True) for t in coeffs]


def _from_univar(coeffs, vi: int, vars) -> MPoly:
    nt = {}
    for d, cf in enumerate(coeffs):
        for e, c in cf.terms.items():
            le = list(e)
            le[vi] += d
            nt[tuple(le)] = c
    return MPoly(vars, nt, _clean=True)


def _trim(coeffs):
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return coeffs


def _pseudo_rem(A, B):
    """lc(B)^(degA-degB+1) * A modulo B, univariate over MPoly coefficients."""
    dA, dB = len(A) - 1, len(B) - 1
    lcB = B[-1]
    R = list(A)
    scalings = 0
    while len(R) - 1 >= dB and R:
        dR = len(R) - 1
        top = R[-1]
        R = [lcB * c for c in R[:-1]]
        for i in range(dB):
            R[dR - dB + i] = R[dR - dB + i] - top * B[i]
        _trim(R)
        scalings += 1
    extra = (dA - dB + 1) - scalings
    if extra > 0 and R:
        f = lcB**extra
        R = [c * f for c in R]
    return R


def _content_primitive(coeffs):
    cont = MPoly.zero(coeffs[0].vars)
    for c in coeffs:
        if not c.is_zero():
            cont = poly_gcd(cont, c)
            if cont.is_one():
                return cont, coeffs
    return cont, [c.exact_div(cont) for c in coeffs]


def _subresultant_gcd(A, B):
    """Primitive gcd of primitive univariate A, B over an MPoly domain."""
    if len(A) < len(B):
        A, B = B, A
    one = MPoly.const(1, A[0].vars)
    g = h = one
    while True:
        delta = (len(A) - 1) - (len(B) - 1)
        R = _pseudo_rem(A, B)
        if not R:
            break
        if len(R) == 1:
            return [one]
        divisor = g * h**delta
        A, B = B, [c.exact_div(divisor) for c in R]
        g = A[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = (g**delta).exact_div(h ** (delta - 1))
    _, prim = _content_primitive(B)
    return prim


# -- univariate gcd over int coefficient lists (dense, low to high degree)


def _int_list_content(A):
    g = 0
    for c in A:
        g = _int_gcd(g, c if c >= 0 else -c)
        if g == 1:
            return 1
    return g


def _int_list_prim(A):
    while A and A[-1] == 0:
        A.pop()
    if not A:
        return A
    g = _int_list_content(A)
    if A[-1] < 0:
        g = -g
    if g != 1:
        A = [c // g for c in A]
    return A


def _int_pseudo_rem(A, B):
    dA, dB = len(A) - 1, len(B) - 1
    lcB = B[-1]
    R = list(A)
    scalings = 0
    while R and len(R) - 1 >= dB:
        dR = len(R) - 1
        top = R[-1]
        R = [lcB * c for c in R[:-1]]
        for i in range(dB):
            R[dR - dB + i] -= top * B[i]
        while R and R[-1] == 0:
            R.pop()
        scalings += 1
    extra = (dA - dB + 1) - scalings
    if extra > 0 and R:
        f = lcB**extra
        R = [c * f for c in R]
    return R


def _int_gcd_upoly_prs(A, B):
    """Subresultant PRS gcd of primitive univariate int lists; fallback path."""
    if len(A) < len(B):
        A, B = B, A
    g = h = 1
    while True:
        delta = (len(A) - 1) - (len(B) - 1)
        R = _int_pseudo_rem(A, B)
        if not R:
            break
        if len(R) == 1:
            return [1]
        divisor = g * h**delta
        A, B = B, [x // divisor for x in R]
        g = A[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = g**delta // h ** (delta - 1)
    return _int_list_prim(B)


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for sp in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % sp == 0:
            return n == sp
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    # deterministic witness set for n < 3.3 * 10^24
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_stream():
    n = (1 << 61) - 1
    while True:
        if _is_probable_prime(n):
            yield n
        n += 2 if n % 2 else 1


def _mod_upoly_gcd(A, B, prime):
    """Monic gcd of univariate int lists mod a prime, by Euclid."""
    a = [c % prime for c in A]
    b = [c % prime for c in B]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    while b:
        inv = pow(b[-1], prime - 2, prime)
        db = len(b) - 1
        r = list(a)
        while r and len(r) - 1 >= db:
            top = r[-1] * inv % prime
            shift = len(r) - 1 - db
            for i in range(db):
                r[shift + i] = (r[shift + i] - top * b[i]) % prime
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        a, b = b, r
    inv = pow(a[-1], prime - 2, prime)
    return [c * inv % prime for c in a]


def _int_divides_upoly(A, B):
    """Whether B divides A exactly, over int coefficient lists."""
    if not B:
        return False
    r = list(A)
    db = len(B) - 1
    lcB = B[-1]
    while r and len(r) - 1 >= db:
        qc, rem = divmod(r[-1], lcB)
        if rem:
            return False
        shift = len(r) - 1 - db
        for i in range(db):
            r[shift + i] -= qc * B[i]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return not r


def _int_gcd_upoly(A, B):
    """gcd of univariate int polynomials via modular images with CRT lifting.

    Trial division certifies the lifted candidate; the subresultant PRS
    remains as a deterministic fallback.
    """
    A = list(A)
    B = list(B)
    while A and A[-1] == 0:
        A.pop()
    while B and B[-1] == 0:
        B.pop()
    if not A:
        return _int_list_prim(B)
    if not B:
        return _int_list_prim(A)
    c = _int_gcd(_int_list_content(A), _int_list_content(B))
    pa = _int_list_prim(A)
    pb = _int_list_prim(B)
    if len(pa) == 1 or len(pb) == 1:
        return [c]
    g0 = _int_gcd(abs(pa[-1]), abs(pb[-1]))
    best_deg = None
    modulus = 0
    lifted = None
    attempts = 0
    for prime in _prime_stream():
        attempts += 1
        if attempts > 24:
            break
        if pa[-1] % prime == 0 or pb[-1] % prime == 0:
            continue
        dp = _mod_upoly_gcd(pa, pb, prime)
        deg = len(dp) - 1
        if deg == 0:
            return [c]
        scaled = [g0 * x % prime for x in dp]
        if best_deg is None or deg < best_deg:
            best_deg = deg
            modulus = prime
            lifted = list(scaled)
        elif deg > best_deg:
            continue
        else:
            # CRT combine into the accumulated modulus
            newmod = modulus * prime
            comb = []
            inv = pow(modulus % prime, prime - 2, prime)
            for x, y in zip(lifted, scaled):
                d = (y - x) % prime
                comb.append((x + modulus * (d * inv % prime)) % newmod)
            lifted = comb
            modulus = newmod
        cand = [x if x <= modulus // 2 else x - modulus for x in lifted]
        cand = _int_list_prim(list(cand))
        if cand and _int_divides_upoly(pa, cand) and _int_divides_upoly(pb, cand):
            return [c * x for x in cand] if c != 1 else cand
    out = _int_gcd_upoly_prs(pa, pb)
    return [c * x for x in out] if c != 1 else out


# -- modular evaluate/interpolate gcd (Brown style) with PRS fallback


def _univar_index(p: MPoly):
    """Index of the single effective variable, or None."""
    seen = None
    for e in p.terms:
        for i, d in enumerate(e):
            if d:
                if seen is None:
                    seen = i
                elif seen != i:
                    return -1
    return seen


def _to_int_list(p: MPoly, vi: int):
    out = [0] * (p.degree_in(p.vars[vi]) + 1)
    for e, c in p.terms.items():
        out[e[vi]] = c
    return out


def _from_int_list(coeffs, vi: int, vars) -> MPoly:
    n = len(vars)
    nt = {}
    for d, c in enumerate(coeffs):
        if c:
            e = [0] * n
            e[vi] = d
            nt[tuple(e)] = c
    return MPoly(vars, nt, _clean=True)


def _eval_var(p: MPoly, vi: int, c: int) -> MPoly:
    nt = {}
    for e, coef in p.terms.items():
        d = e[vi]
        le = list(e)
        le[vi] = 0
        k = tuple(le)
        nt[k] = nt.get(k, 0) + coef * c**d
    return MPoly(p.vars, {e: v for e, v in nt.items() if v}, _clean=True)


def _others_lc(p: MPoly, vi: int):
    """Leading coefficient of p in the grlex order that ignores variable vi.

    Returns (others exponent tuple with vi zeroed, Z[vi] coefficient as MPoly).
    """
    best = None
    for e in p.terms:
        le = list(e)
        le[vi] = 0
        k = tuple(le)
        if best is None or _grlex((k, 0)) > _grlex((best, 0)):
            best = k
    nt = {}
    for e, c in p.terms.items():
        le = list(e)
        le[vi] = 0
        if tuple(le) == best:
            ue = [0] * len(e)
            ue[vi] = e[vi]
            nt[tuple(ue)] = c
    return best, MPoly(p.vars, nt, _clean=True)


def _content_wrt(p: MPoly, vi: int) -> MPoly:
    """gcd of the Z[v_i] coefficient polynomials over the other-variable monomials."""
    groups: dict = {}
    for e, c in p.terms.items():
        le = list(e)
        d = le[vi]
        le[vi] = 0
        groups.setdefault(tuple(le), {})[d] = c
    cont = None
    for g in groups.values():
        lst = [0] * (max(g) + 1)
        for d, c in g.items():
            lst[d] = c
        cont = lst if cont is None else _int_gcd_upoly(cont, lst)
        if len(cont) == 1 and cont[0] == 1:
            return MPoly.const(1, p.vars)
    return _from_int_list(cont, vi, p.vars)


def _brown_gcd(a: MPoly, b: MPoly, vi: int) -> MPoly | None:
    """gcd by evaluating variable vi at integers and interpolating; None if unlucky."""
    vars = a.vars
    ca = _content_wrt(a, vi)
    cb = _content_wrt(b, vi)
    pa = a if ca.is_one() else a.exact_div(ca)
    pb = b if cb.is_one() else b.exact_div(cb)
    cont_g = poly_gcd(ca, cb)
    _, lca = _others_lc(pa, vi)
    _, lcb = _others_lc(pb, vi)
    gamma_list = _int_gcd_upoly(_to_int_list(lca, vi), _to_int_list(lcb, vi))
    gamma = _from_int_list(gamma_list, vi, vars)
    bound = min(pa.degree_in(vars[vi]), pb.degree_in(vars[vi])) + len(gamma_list)
    points: list[int] = []
    newton: list[dict] = []
    dmin = None
    c = 0
    tried = 0
    while tried < bound + 8:
        c = -c if c > 0 else -c + 1  # 1, -1, 2, -2, ...
        tried += 1
        if not _eval_int_list(gamma_list, c):
            continue
        if not _eval_poly_at(lca, vi, c) or not _eval_poly_at(lcb, vi, c):
            continue
        ga = _eval_var(pa, vi, c)
        gb = _eval_var(pb, vi, c)
        gc = poly_gcd(ga, gb)
        if gc.is_const():
            return _positive(cont_g)
        d = gc.total_degree()
        if dmin is None or d < dmin:
            dmin = d
            points, values, newton = [], [], []
        elif d > dmin:
            continue
        scale = Fraction(_eval_int_list(gamma_list, c), gc.leading()[1])
        val = {e: scale * k for e, k in gc.terms.items()}
        coeff = val
        for j, cj in enumerate(points):
            coeff = _dict_scale(_dict_sub(coeff, newton[j]), Fraction(1, c - cj))
        points.append(c)
        newton.append(coeff)
        if len(points) >= 2 and not newton[-1]:
            cand = _newton_assemble(newton[:-1], points[:-1], vi, vars)
            if cand is not None:
                if _try_division(pa, cand) and _try_division(pb, cand):
                    return _positive(cont_g * cand)
        if len(points) > bound + 1:
            cand = _newton_assemble(newton, points, vi, vars)
            if cand is not None and _try_division(pa, cand) and _try_division(pb, cand):
                return _positive(cont_g * cand)
            return None
    return None


def _eval_int_list(lst, c: int) -> int:
    acc = 0
    for k in range(len(lst) - 1, -1, -1):
        acc = acc * c + lst[k]
    return acc


def _eval_poly_at(p: MPoly, vi: int, c: int) -> int:
    """Evaluate a Z[v_i] polynomial (stored as MPoly in v_i only) at an int."""
    acc = 0
    for e, coef in p.terms.items():
        acc += coef * c ** e[vi]
    return acc


def _dict_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) - v
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def _dict_scale(a: dict, f: Fraction) -> dict:
    if not f:
        return {}
    return {k: v * f for k, v in a.items()}


def _newton_assemble(newton, points, vi: int, vars) -> MPoly | None:
    """Expand the Newton form into an int MPoly (primitive, positive leading)."""
    acc: dict = {}  # full exponent tuple -> Fraction
    basis: dict = {(0,) * len(vars): Fraction(1)}  # polynomial in v_i
    for j, coeff in enumerate(newton):
        for be, bv in basis.items():
            for ke, kv in coeff.items():
                full = tuple(i + jj for i, jj in zip(be, ke))
                s = acc.get(full, 0) + bv * kv
                if s:
                    acc[full] = s
                elif full in acc:
                    del acc[full]
        if j < len(newton) - 1:
            newbasis: dict = {}
            cj = points[j]
            for be, bv in basis.items():
                le = list(be)
                le[vi] += 1
                up = tuple(le)
                newbasis[up] = newbasis.get(up, 0) + bv
                s = newbasis.get(be, 0) - bv * cj
                if s:
                    newbasis[be] = s
                elif be in newbasis:
                    del newbasis[be]
            basis = newbasis
    if not acc:
        return None
    den = 1
    for v in acc.values():
        den = den * v.denominator // _int_gcd(den, v.denominator)
    nt = {}
    for e, v in acc.items():
        nt[e] = int(v * den)
    cand = MPoly(vars, nt, _clean=True)
    cont = _content_wrt(cand, vi)
    if not cont.is_one():
        cand = cand.exact_div(cont)
    ic = cand.int_content()
    if ic > 1:
        cand = cand.exact_div(MPoly.const(ic, vars))
    return _positive(cand)


def _try_division(a: MPoly, b: MPoly) -> bool:
    try:
        a.exact_div(b)
        return True
    except ArithError:
        return False


_GCD_MEMO: dict = {}


def poly_gcd(a: MPoly, b: MPoly) -> MPoly:
    a, b = MPoly.aligned(a, b)
    if a.is_zero():
        return _positive(b)
    if b.is_zero():
        return _positive(a)
    ea, ra = a.monomial_split()
    eb, rb = b.monomial_split()
    em = tuple(min(i, j) for i, j in zip(ea, eb))
    if len(ra.terms) > 4 and len(rb.terms) > 4:
        key = (ra.vars, tuple(sorted(ra.terms.items())), tuple(sorted(rb.terms.items())))
        hit = _GCD_MEMO.get(key)
        if hit is None:
            hit = _gcd_reduced(ra, rb)
            if len(_GCD_MEMO) > 20000:
                _GCD_MEMO.clear()
            _GCD_MEMO[key] = hit
        g = hit
    else:
        g = _gcd_reduced(ra, rb)
    if any(em):
        g = g * MPoly(a.vars, {em: 1}, _clean=True)
    return _positive(g)


def _gcd_reduced(a: MPoly, b: MPoly) -> MPoly:
    if a.is_const() or b.is_const():
        return MPoly.const(_int_gcd(a.int_content(), b.int_content()), a.vars)
    for vi in range(len(a.vars) - 1, -1, -1):
        da = max(e[vi] for e in a.terms)
        db = max(e[vi] for e in b.terms)
        if da or db:
            break
    if da == 0 or db == 0:
        # the main variable appears in only one argument
        holder = b if da == 0 else a
        other = a if da == 0 else b
        cont, _ = _content_primitive(_to_univar(holder, vi))
        return poly_gcd(cont, other)
    ua, ub = _univar_index(a), _univar_index(b)
    if ua == ub and ua is not None and ua >= 0:
        g = _int_gcd_upoly(_to_int_list(a, ua), _to_int_list(b, ua))
        return _from_int_list(g, ua, a.vars)
    g = _brown_gcd(a, b, vi)
    if g is not None:
        return g
    ca, pa = _content_primitive(_to_univar(a, vi))
    cb, pb = _content_primitive(_to_univar(b, vi))
    cg = poly_gcd(ca, cb)
    pg = _subresultant_gcd(pa, pb)
    return cg * _from_univar(pg, vi, a.vars)


def poly_lcm(a: MPoly, b: MPoly) -> MPoly:
    if a.is_zero() or b.is_zero():
        return MPoly.zero(a.vars)
    g = poly_gcd(a, b)
    return _positive(a * b.exact_div(g))


class Scalar:
    """Reduced fraction of two MPoly with canonical sign; immutable."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly | None = None, _normalized=False):
        if den is None:
            den = MPoly.const(1, num.vars)
        if not _normalized:
            num, den = Scalar._reduce(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _reduce(num, den):
        num, den = MPoly.aligned(num, den)
        if den.is_zero():
            raise ArithError("zero denominator")
        if num.is_zero():
            return MPoly.zero(num.vars), MPoly.const(1, num.vars)
        g = poly_gcd(num, den)
        if not g.is_one():
            num = num.exact_div(g)
            den = den.exact_div(g)
        if den.leading()[1] < 0:
            num, den = -num, -den
        return num, den

    @classmethod
    def from_int(cls, k: int):
        return cls(MPoly.const(k), _normalized=True)

    @classmethod
    def from_fraction(cls, f: Fraction):
        f = Fraction(f)
        num, den = MPoly.const(f.numerator), MPoly.const(f.denominator)
        return cls(num, den, _normalized=True)

    @classmethod
    def variable(cls, name: str):
        return cls(MPoly.variable(name), _normalized=True)

    @staticmethod
    def _coerce(v):
        if isinstance(v, Scalar):
            return v
        if isinstance(v, int):
            return Scalar.from_int(v)
        if isinstance(v, Fraction):
            return Scalar.from_fraction(v)
        return None

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def __eq__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __add__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero():
            return o
        if o.is_zero():
            return self
        na, da = self.num, self.den
        nb, db = o.num, o.den
        if da.is_one() and db.is_one():
            na, nb = MPoly.aligned(na, nb)
            return Scalar(na + nb, MPoly.const(1, na.vars), _normalized=True)
        g = poly_gcd(da, db)
        if g.is_one():
            num = na * db + nb * da
            den = da * db
            if num.is_zero():
                return Scalar.from_int(0)
            c = _int_gcd(num.int_content(), den.int_content())
            if c > 1:
                num = num.exact_div(MPoly.const(c, num.vars))
                den = den.exact_div(MPoly.const(c, den.vars))
            num, den = MPoly.aligned(num, den)
            if den.leading()[1] < 0:
                num, den = -num, -den
            return Scalar(num, den, _normalized=True)
        t = na * db.exact_div(g) + nb * da.exact_div(g)
        if t.is_zero():
            return Scalar.from_int(0)
        g2 = poly_gcd(t, g)
        num = t.exact_div(g2)
        den = da.exact_div(g) * db.exact_div(g2)
        num, den = MPoly.aligned(num, den)
        if den.leading()[1] < 0:
            num, den = -num, -den
        return Scalar(num, den, _normalized=True)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return Scalar.from_int(0)
        na, da = self.num, self.den
        nb, db = o.num, o.den
        g1 = poly_gcd(na, db)
        g2 = poly_gcd(nb, da)
        if not g1.is_one():
            na = na.exact_div(g1)
            db = db.exact_div(g1)
        if not g2.is_one():
            nb = nb.exact_div(g2)
            da = da.exact_div(g2)
        num = na * nb
        den = da * db
        num, den = MPoly.aligned(num, den)
        if den.leading()[1] < 0:
            num, den = -num, -den
        return Scalar(num, den, _normalized=True)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ArithError("division by zero")
        num, den = self.den, self.num
        if den.leading()[1] < 0:
            num, den = -num, -den
        return Scalar(num, den, _normalized=True)

    def __truediv__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = Scalar._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = Scalar.from_int(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def normalized(self):
        """Re-run normalization; used to test idempotence."""
        return Scalar(self.num, self.den)

    def substitute(self, mapping: dict) -> "Scalar":
        num = _eval_poly(self.num, mapping)
        den = _eval_poly(self.den, mapping)
        if den.is_zero():
            raise ArithError("substitution produced a zero denominator")
        return num / den

    def eval_mod(self, point: dict, prime: int = DEFAULT_PRIME) -> int:
        d = self.den.eval_int(point, prime)
        if d % prime == 0:
            raise EvalPole("denominator vanishes at evaluation point")
        n = self.num.eval_int(point, prime)
        return n * pow(d, prime - 2, prime) % prime

    def degree_in(self, var: str) -> int:
        return max(self.num.degree_in(var), self.den.degree_in(var))

    def size(self) -> int:
        return len(self.num.terms) + len(self.den.terms) + self.num.total_degree() + self.den.total_degree()

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"Scalar({self})"


def _eval_poly(p: MPoly, mapping: dict) -> Scalar:
    acc = Scalar.from_int(0)
    pw = {}
    for e, c in p.terms.items():
        term = Scalar.from_int(c)
        for i, v in enumerate(p.vars):
            if e[i]:
                key = (v, e[i])
                if key not in pw:
                    base = mapping.get(v)
                    if base is None:
                        base = Scalar.variable(v)
                    pw[key] = base ** e[i]
                term = term * pw[key]
        acc = acc + term
    return acc


ZERO = Scalar.from_int(0)
ONE = Scalar.from_int(1)
X = Scalar.variable("x")
Y = Scalar.variable("y")
LAM = Scalar.variable("l")
q = X * X
t = Y * Y
p = q / t
sqrt_q = X
sqrt_t = Y
sqrt_p = X / Y


def wvar(i: int) -> Scalar:
    return Scalar.variable(f"w{i}")


def eval_mod(a: Scalar, point: dict, prime: int = DEFAULT_PRIME) -> int:
    return a.eval_mod(point, prime)


# ---------------------------------------------------------------------------
# exact linear algebra


def _clear_rows(rows):
    """Scale rows to polynomial entries and strip row contents; returns (matrix, mults).

    mults[i] is the Scalar by which row i was multiplied, so determinants of
    the cleared matrix are det(original) * prod(mults).
    """
    cleared = []
    mults = []
    for row in rows:
        lcm = MPoly.const(1)
        for a in row:
            if not a.den.is_one():
                lcm = poly_lcm(lcm, a.den)
        out = []
        for a in row:
            out.append(a.num * lcm if a.den.is_one() else a.num * lcm.exact_div(a.den))
        cont = MPoly.zero()
        for e in out:
            if not e.is_zero():
                cont = poly_gcd(cont, e)
                if cont.is_one():
                    break
        if not (cont.is_one() or cont.is_zero()):
            out = [e.exact_div(cont) for e in out]
            mults.append(Scalar(lcm) / Scalar(cont))
        else:
            mults.append(Scalar(lcm))
        cleared.append(out)
    return cleared, mults


def det_fraction_free(rows) -> Scalar:
    """Exact determinant of a square Scalar matrix via Bareiss elimination."""
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise ArithError("matrix is not square")
    if n == 0:
        return ONE
    M, mults = _clear_rows(rows)
    vars_all = ()
    for row in M:
        for e in row:
            vars_all = merge_vars(vars_all, e.vars)
    M = [[e._embed(vars_all) for e in row] for row in M]
    sign = 1
    prev = MPoly.const(1, vars_all)
    for k in range(n - 1):
        if M[k][k].is_zero():
            for i in range(k + 1, n):
                if not M[i][k].is_zero():
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pk = M[k][k]
        for i in range(k + 1, n):
            rik = M[i][k]
            for j in range(k + 1, n):
                M[i][j] = (pk * M[i][j] - rik * M[k][j]).exact_div(prev)
            M[i][k] = MPoly.zero(vars_all)
        prev = pk
    det = M[n - 1][n - 1]
    if sign < 0:
        det = -det
    out = Scalar(det)
    for m in mults:
        out = out / m
    return out


def det_by_minors(rows) -> Scalar:
    """Determinant by dynamic programming over column-subset minors.

    Each minor is kept as a reduced Scalar, which avoids the intermediate
    swell of fraction-free elimination when entries share large
    denominators.  Exponential in the dimension; intended for n <= 8.
    """
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise ArithError("matrix is not square")
    if n == 0:
        return ONE
    prev = {(): ONE}
    for k in range(n):
        cur: dict = {}
        row = rows[k]
        for subset, minor in prev.items():
            if minor.is_zero():
                continue
            for j in range(n):
                if j in subset:
                    continue
                e = row[j]
                if e.is_zero():
                    continue
                pos = 0
                while pos < len(subset) and subset[pos] < j:
                    pos += 1
                newsub = subset[:pos] + (j,) + subset[pos:]
                sign = 1 if (len(subset) - pos) % 2 == 0 else -1
                term = e * minor
                if sign < 0:
                    term = -term
                acc = cur.get(newsub)
                cur[newsub] = term if acc is None else acc + term
        prev = cur
    return prev.get(tuple(range(n)), ZERO)


def det_cofactor(rows) -> Scalar:
    """Cofactor-expansion determinant; an independent cross-check for small sizes."""
    n = len(rows)
    if n == 0:
        return ONE
    if n == 1:
        return rows[0][0]
    acc = ZERO
    for j in range(n):
        if rows[0][j].is_zero():
            continue
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = rows[0][j] * det_cofactor(minor)
        acc = acc + (term if j % 2 == 0 else -term)
    return acc


def nullspace(rows, ncols: int):
    """Right kernel basis of a Scalar matrix, by fraction-free elimination.

    Pivots are chosen on lowest-degree entries (columns never swapped, so
    kernel coordinates match input columns).  Returns a list of Scalar
    vectors, each normalized so its first nonzero coordinate is one.
    """
    if not rows:
        return [[ONE if i == j else ZERO for i in range(ncols)] for j in range(ncols)]
    M, _ = _clear_rows(rows)
    vars_all = ()
    for row in M:
        for e in row:
            vars_all = merge_vars(vars_all, e.vars)
    M = [[e._embed(vars_all) for e in row] for row in M]
    nrows = len(M)
    prev = MPoly.const(1, vars_all)
    pivots = []  # (row, col) in elimination order
    pivot_cols = set()
    rpos = 0
    while rpos < nrows:
        best = None
        for i in range(rpos, nrows):
            for j in range(ncols):
                if j in pivot_cols or M[i][j].is_zero():
                    continue
                key = (M[i][j].total_degree(), len(M[i][j].terms), j, i)
                if best is None or key < best[0]:
                    best = (key, i, j)
        if best is None:
            break
        _, bi, bj = best
        M[rpos], M[bi] = M[bi], M[rpos]
        piv = M[rpos][bj]
        for i in range(nrows):
            if i == rpos:
                continue
            rib = M[i][bj]
            if i < rpos and rib.is_zero():
                continue
            for j in range(ncols):
                if j == bj:
                    continue
                # rows below the pivot follow Bareiss scaling even when rib is zero
                if i > rpos:
                    M[i][j] = (piv * M[i][j] - rib * M[rpos][j]).exact_div(prev)
                else:
                    M[i][j] = piv * M[i][j] - rib * M[rpos][j]
            M[i][bj] = MPoly.zero(vars_all)
        prev = piv
        pivots.append((rpos, bj))
        pivot_cols.add(bj)
        rpos += 1
    free_cols = [j for j in range(ncols) if j not in pivot_cols]
    basis = []
    for f in free_cols:
        vec = [ZERO] * ncols
        vec[f] = ONE
        for r, c in reversed(pivots):
            # row r: M[r][c]*v[c] + sum over other columns = 0
            s = ZERO
            for j in range(ncols):
                if j != c and not M[r][j].is_zero() and not vec[j].is_zero():
                    s = s + Scalar(M[r][j], _normalized=True) * vec[j]
            vec[c] = -s / Scalar(M[r][c], _normalized=True)
        lead = next(v for v in vec if not v.is_zero())
        basis.append([v / lead for v in vec])
    return basis


def solve_linear(rows, rhs):
    """Solve A x = b over the Scalar field by fraction-free elimination."""
    n = len(rows)
    aug = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    M, _ = _clear_rows(aug)
    vars_all = ()
    for row in M:
        for e in row:
            vars_all = merge_vars(vars_all, e.vars)
    M = [[e._embed(vars_all) for e in row] for row in M]
    prev = MPoly.const(1, vars_all)
    for k in range(n):
        piv = None
        for i in range(k, n):
            if not M[i][k].is_zero():
                key = (M[i][k].total_degree(), len(M[i][k].terms), i)
                if piv is None or key < piv[0]:
                    piv = (key, i)
        if piv is None:
            raise ArithError("singular linear system")
        M[k], M[piv[1]] = M[piv[1]], M[k]
        pk = M[k][k]
        for i in range(k + 1, n):
            rik = M[i][k]
            for j in range(k + 1, n + 1):
                M[i][j] = (pk * M[i][j] - rik * M[k][j]).exact_div(prev)
            M[i][k] = MPoly.zero(vars_all)
        prev = pk
    xs = [None] * n
    for i in range(n - 1, -1, -1):
        acc = Scalar(M[i][n], _normalized=True)
        for j in range(i + 1, n):
            if not M[i][j].is_zero() and not xs[j].is_zero():
                acc = acc - Scalar(M[i][j], _normalized=True) * xs[j]
        xs[i] = acc / Scalar(M[i][i], _normalized=True)
    return xs


# ---------------------------------------------------------------------------
# symmetrized rational-sum identity used by the screening-charge argument


def verify_sum_identity_c106(r: int, bound: int = 5) -> bool:
    """Check sum_i prod_{j!=i} (1 - t*wj/wi)/(1 - wj/wi) == (1 - t^r)/(1 - t)."""
    if r < 1:
        raise ArithError("r must be >= 1")
    if r > bound:
        raise ArithError(f"r exceeds configured bound {bound}")
    ws = [wvar(i) for i in range(1, r + 1)]
    lhs = ZERO
    for i in range(r):
        term = ONE
        for j in range(r):
            if j == i:
                continue
            ratio = ws[j] / ws[i]
            term = term * (ONE - t * ratio) / (ONE - ratio)
        lhs = lhs + term
    rhs = ZERO
    for k in range(r):
        rhs = rhs + t**k
    return lhs == rhs
