"""Partitions, symmetric-function bases and Macdonald polynomials.

Symmetric functions are stored as finite maps from partitions to Scalar
coefficients in either the power-sum basis ("p") or the monomial basis
("m").  Monomial expansions for a degree-n computation run in exactly n
variables, which is faithful for everything indexed by partitions of n.

macdonald_P builds P_lambda by solving the orthogonality system against
all dominance-lower monomials under the (q,t) inner product whose
power-sum Gram matrix is diagonal with entries
z_lambda * prod_i (1 - q^lambda_i)/(1 - t^lambda_i).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import ONE, ZERO, ArithError, Scalar, q, t

DEFAULT_WEIGHT_BOUND = 8
DEFAULT_PARTITION_BOUND = 12

Partition = tuple


def partitions(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order: (n) first, (1^n) last."""
    if n < 0:
        raise ArithError("negative weight")
    if n == 0:
        return [()]
    mp = n if max_part is None else min(max_part, n)
    out = []
    for first in range(mp, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def z_lambda(lam: Partition) -> Scalar:
    """Stabilizer order prod_i i^{m_i} m_i! of a partition."""
    mult: dict[int, int] = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    z = 1
    for part, m in mult.items():
        z *= part**m
        for k in range(2, m + 1):
            z *= k
    return Scalar.from_int(z)


def dominance_less(mu: Partition, lam: Partition) -> bool:
    """Strict dominance mu < lam (partial order on partitions of equal weight)."""
    if sum(mu) != sum(lam):
        raise ArithError("dominance compares equal weights only")
    if mu == lam:
        return False
    pa = pb = 0
    n = max(len(mu), len(lam))
    for i in range(n):
        pa += mu[i] if i < len(mu) else 0
        pb += lam[i] if i < len(lam) else 0
        if pa > pb:
            return False
    return True


@dataclass(frozen=True)
class SymFun:
    """Homogeneous symmetric function in a named basis."""

    basis: str  # "p" or "m"
    degree: int
    terms: dict  # Partition -> Scalar, no zero values

    def __post_init__(self):
        for lam in self.terms:
            if sum(lam) != self.degree:
                raise ArithError("inhomogeneous symmetric function")

    @classmethod
    def zero(cls, basis: str, degree: int) -> "SymFun":
        return cls(basis, degree, {})

    def coeff(self, lam: Partition) -> Scalar:
        return self.terms.get(tuple(lam), ZERO)

    def scale(self, c: Scalar) -> "SymFun":
        if c.is_zero():
            return SymFun(self.basis, self.degree, {})
        return SymFun(self.basis, self.degree, {k: v * c for k, v in self.terms.items()})

    def add(self, other: "SymFun") -> "SymFun":
        if other.basis != self.basis or other.degree != self.degree:
            raise ArithError("basis or degree mismatch")
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, ZERO) + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return SymFun(self.basis, self.degree, out)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, SymFun)
            and self.basis == other.basis
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "degree": self.degree,
            "terms": [
                {"partition": list(lam), "coeff": str(self.terms[lam])}
                for lam in partitions(self.degree)
                if lam in self.terms
            ],
        }


# ---------------------------------------------------------------------------
# transition matrices between the p and m bases, per degree

_P_IN_M: dict[int, dict] = {}
_M_IN_P: dict[int, dict] = {}


def _pmul_m(mvec: dict, r: int, nvars: int) -> dict:
    """Multiply an m-basis expansion by the power sum p_r, in nvars variables."""
    out: dict = {}
    for mu, c in mvec.items():
        padded = list(mu) + [0] * (nvars - len(mu))
        seen = set()
        for i in range(nvars):
            nu = sorted((padded[j] + (r if j == i else 0) for j in range(nvars)), reverse=True)
            nu = tuple(v for v in nu if v)
            if nu in seen:
                continue
            seen.add(nu)
            nuvec = list(nu) + [0] * (nvars - len(nu))
            count = 0
            for k in range(nvars):
                if nuvec[k] < r:
                    continue
                trial = sorted(
                    (nuvec[j] - (r if j == k else 0) for j in range(nvars)), reverse=True
                )
                if trial == sorted(padded, reverse=True):
                    count += 1
            if count:
                out[nu] = out.get(nu, 0) + c * count
    return {k: v for k, v in out.items() if v}


def _p_in_m(n: int) -> dict:
    """p_lambda expanded in monomials: lam -> (mu -> int)."""
    if n in _P_IN_M:
        return _P_IN_M[n]
    table = {}
    for lam in partitions(n):
        vec = {(): 1}
        for part in lam:
            vec = _pmul_m(vec, part, n if n else 1)
        table[lam] = vec
    _P_IN_M[n] = table
    return table


def _m_in_p(n: int) -> dict:
    """m_mu expanded in power sums with Fraction coefficients: mu -> (lam -> Fraction)."""
    if n in _M_IN_P:
        return _M_IN_P[n]
    plist = partitions(n)
    k = len(plist)
    table = _p_in_m(n)
    # invert the integer transition matrix exactly over Fraction
    A = [[Fraction(table[plist[i]].get(plist[j], 0)) for j in range(k)] for i in range(k)]
    inv = [[Fraction(1 if i == j else 0) for j in range(k)] for i in range(k)]
    for col in range(k):
        piv = next(r for r in range(col, k) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        f = A[col][col]
        A[col] = [v / f for v in A[col]]
        inv[col] = [v / f for v in inv[col]]
        for r in range(k):
            if r != col and A[r][col] != 0:
                g = A[r][col]
                A[r] = [a - g * b for a, b in zip(A[r], A[col])]
                inv[r] = [a - g * b for a, b in zip(inv[r], inv[col])]
    # p = A m as basis vectors, so m_mu takes row mu of the inverse matrix
    out = {}
    for j, mu in enumerate(plist):
        out[mu] = {
            plist[i]: inv[j][i] for i in range(k) if inv[j][i] != 0
        }
    _M_IN_P[n] = out
    return out


def p_to_m(f: SymFun) -> SymFun:
    if f.basis != "p":
        raise ArithError("expected p basis")
    table = _p_in_m(f.degree)
    out: dict = {}
    for lam, c in f.terms.items():
        for mu, k in table[lam].items():
            s = out.get(mu, ZERO) + c * k
            if s.is_zero():
                out.pop(mu, None)
            else:
                out[mu] = s
    return SymFun("m", f.degree, out)


def m_to_p(f: SymFun) -> SymFun:
    if f.basis != "m":
        raise ArithError("expected m basis")
    table = _m_in_p(f.degree)
    out: dict = {}
    for mu, c in f.terms.items():
        for lam, fr in table[mu].items():
            s = out.get(lam, ZERO) + c * Scalar.from_fraction(fr)
            if s.is_zero():
                out.pop(lam, None)
            else:
                out[lam] = s
    return SymFun("p", f.degree, out)


# ---------------------------------------------------------------------------
# the (q,t) inner product and Macdonald polynomials

_GRAM_DIAG: dict = {}


def _p_gram_diag(lam: Partition, hall_littlewood: bool = False) -> Scalar:
    key = (lam, hall_littlewood)
    if key in _GRAM_DIAG:
        return _GRAM_DIAG[key]
    d = z_lambda(lam)
    for part in lam:
        if hall_littlewood:
            d = d / (ONE - t**part)
        else:
            d = d * (ONE - q**part) / (ONE - t**part)
    _GRAM_DIAG[key] = d
    return d


def qt_inner(f: SymFun, g: SymFun, hall_littlewood: bool = False) -> Scalar:
    """Bilinear form with diagonal power-sum Gram entries z_lam prod (1-q^li)/(1-t^li)."""
    if f.degree != g.degree:
        raise ArithError("degree mismatch in inner product")
    fp = f if f.basis == "p" else m_to_p(f)
    gp = g if g.basis == "p" else m_to_p(g)
    acc = ZERO
    for lam, c in fp.terms.items():
        d = gp.terms.get(lam)
        if d is not None:
            acc = acc + c * d * _p_gram_diag(lam, hall_littlewood)
    return acc


_MACDONALD_CACHE: dict = {}


def _m_in_p_fun(mu: Partition) -> SymFun:
    table = _m_in_p(sum(mu))[mu]
    return SymFun("p", sum(mu), {lam: Scalar.from_fraction(f) for lam, f in table.items()})


def macdonald_P(
    lam: Partition,
    bound: int = DEFAULT_WEIGHT_BOUND,
    hall_littlewood: bool = False,
) -> SymFun:
    """The monic Macdonald polynomial P_lambda, returned in the p basis.

    Gram-Schmidt against the cached P_mu for all dominance-lower mu; the
    projections land in the span of the lower monomials, so the result is
    m_lambda plus lower monomial terms and orthogonal to all of them.
    """
    lam = tuple(lam)
    n = sum(lam)
    if n > bound:
        raise ArithError(f"weight exceeds configured bound {bound}")
    key = (lam, hall_littlewood)
    hit = _MACDONALD_CACHE.get(key)
    if hit is not None:
        return hit
    vec = _m_in_p_fun(lam)
    for mu in partitions(n):
        if not dominance_less(mu, lam):
            continue
        Pmu, norm = _macdonald_with_norm(mu, hall_littlewood)
        coeff = qt_inner(vec, Pmu, hall_littlewood) / norm
        if not coeff.is_zero():
            vec = vec.add(Pmu.scale(-coeff))
    _MACDONALD_CACHE[key] = vec
    return vec


def _macdonald_with_norm(mu: Partition, hall_littlewood: bool):
    P = macdonald_P(mu, bound=sum(mu), hall_littlewood=hall_littlewood)
    nkey = (mu, hall_littlewood, "norm")
    norm = _MACDONALD_CACHE.get(nkey)
    if norm is None:
        norm = qt_inner(P, P, hall_littlewood)
        _MACDONALD_CACHE[nkey] = norm
    return P, norm


def macdonald_eigenvalue(lam: Partition, N: int) -> Scalar:
    """Sum_{i=1..N} q^{lam_i} t^{N-i}, with lam_i = 0 past the last part."""
    lam = tuple(lam)
    if N < len(lam):
        raise ArithError("N must be at least the number of parts")
    acc = ZERO
    for i in range(1, N + 1):
        li = lam[i - 1] if i <= len(lam) else 0
        acc = acc + q**li * t ** (N - i)
    return acc
