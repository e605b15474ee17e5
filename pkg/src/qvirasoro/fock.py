"""Bosonic Fock sectors and a generic vertex-operator mode engine.

Oscillators a_n obey [a_n, a_m] = n (1-q^|n|)/(1-t^|n|) delta_{n+m,0} and
a zero mode Q with [a_n, Q] = delta_{n,0}/beta.  The sector |r,s> carries
momentum alpha_{r,s} = (1+r) beta/2 - (1+s)/2, so every zero-mode
multiplier of the form q^(+-beta a0) or t^(+-a0) acts on F_{r,s} as an
integer power of the monomial

    M_{r,s} = q^{alpha_{r,s}} = y^(1+r) x^-(1+s).

A VOSpec describes a normal-ordered exponential operator

    prefactor * exp( sum_n cre(n) a_{-n} z^n / n )
                exp( sum_n ann(n) a_n z^{-n} / n )
                * (zero-mode monomial M^zmode) * (charge shift) * z-coupling

with the convention that all a0-dependent factors evaluate at the source
sector before the charge shift is applied.  Modes are indexed relative to
the sector-dependent overall z-exponent carried by the coupling, so
apply_mode(V, k, v) extracts the coefficient of z^-k and maps level ell
to ell - k.  Negative output levels give the zero vector; output levels
above the explicit truncation bound L raise TruncationError.

Creation-exponential layers are memoized per spec and degree; mode
applications to basis states are memoized per (spec, mode, sector, state).
Everything is exact over Scalar and immutable, so results are safe to
share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import ONE, ZERO, ArithError, Scalar, X, Y, p, q, sqrt_p, t
from .symfunc import SymFun, partitions


class TruncationError(Exception):
    """An operator application would exceed the stated truncation level."""


@dataclass(frozen=True)
class Sector:
    r: int
    s: int

    def weight_monomial(self) -> Scalar:
        """M_{r,s} = y^(1+r) x^-(1+s), the action of q^(beta a0) on this sector."""
        return Y ** (1 + self.r) * X ** (-(1 + self.s))

    def highest_weight(self) -> Scalar:
        """T_0 eigenvalue p^(1/2) M + p^(-1/2) M^(-1) = x^-s y^r + x^s y^-r."""
        m = self.weight_monomial()
        return sqrt_p * m + m.inverse() / sqrt_p

    def shifted(self, dr: int, ds: int) -> "Sector":
        return Sector(self.r + dr, self.s + ds)


@dataclass(frozen=True)
class FockVector:
    """Finite combination of a_{-mu}|r,s> states, homogeneous in level."""

    sector: Sector
    coeffs: dict  # Partition -> Scalar, no zeros

    @classmethod
    def vacuum(cls, sector: Sector) -> "FockVector":
        return cls(sector, {(): ONE})

    @classmethod
    def basis(cls, sector: Sector, mu) -> "FockVector":
        return cls(sector, {tuple(mu): ONE})

    @classmethod
    def zero(cls, sector: Sector) -> "FockVector":
        return cls(sector, {})

    def level(self) -> int:
        for mu in self.coeffs:
            return sum(mu)
        return 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def scale(self, c: Scalar) -> "FockVector":
        if c.is_zero():
            return FockVector(self.sector, {})
        return FockVector(self.sector, {k: v * c for k, v in self.coeffs.items()})

    def add(self, other: "FockVector") -> "FockVector":
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if other.sector != self.sector:
            raise ArithError("sector mismatch")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k, ZERO) + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return FockVector(self.sector, out)

    def sub(self, other: "FockVector") -> "FockVector":
        return self.add(other.scale(-ONE))

    def __eq__(self, other):
        return (
            isinstance(other, FockVector)
            and self.sector == other.sector
            and self.coeffs == other.coeffs
        )

    def to_json(self) -> dict:
        lvl = self.level()
        return {
            "sector": [self.sector.r, self.sector.s],
            "basis": "p",
            "degree": lvl,
            "terms": [
                {"partition": list(mu), "coeff": str(self.coeffs[mu])}
                for mu in partitions(lvl)
                if mu in self.coeffs
            ],
        }


def kappa(n: int) -> Scalar:
    """Oscillator contraction weight n (1-q^n)/(1-t^n)."""
    if n < 1:
        raise ArithError("kappa is defined for positive modes")
    c = _KAPPA.get(n)
    if c is None:
        c = Scalar.from_int(n) * (1 - q**n) / (1 - t**n)
        _KAPPA[n] = c
    return c


_KAPPA: dict = {}


class VOSpec:
    """Declarative vertex operator; coefficient closures are memoized."""

    def __init__(self, name, cre, ann, zmode=0, charge=(0, 0), coupling=0, prefactor=ONE):
        self.name = name
        self._cre = cre
        self._ann = ann
        self.zmode = zmode
        self.charge = charge
        self.coupling = coupling
        self.prefactor = prefactor
        self._cre_cache: dict = {}
        self._ann_cache: dict = {}
        self._contract_cache: dict = {}
        self._layers: dict = {}

    def cre(self, n: int) -> Scalar:
        c = self._cre_cache.get(n)
        if c is None:
            c = self._cre(n)
            self._cre_cache[n] = c
        return c

    def ann(self, n: int) -> Scalar:
        c = self._ann_cache.get(n)
        if c is None:
            c = self._ann(n)
            self._ann_cache[n] = c
        return c

    def contract(self, n: int) -> Scalar:
        """ann(n) * kappa(n) / n, the weight for removing one a_{-n}."""
        c = self._contract_cache.get(n)
        if c is None:
            c = self.ann(n) * kappa(n) / n
            self._contract_cache[n] = c
        return c

    def creation_layer(self, d: int):
        """Homogeneous degree-d part of the creation exponential.

        Returns a list of (partition, Scalar weight) with weight
        prod_n (cre(n)/n)^{m_n} / m_n!.
        """
        layer = self._layers.get(d)
        if layer is None:
            layer = []
            for pi in partitions(d):
                w = ONE
                mult: dict = {}
                for part in pi:
                    mult[part] = mult.get(part, 0) + 1
                for part, m in mult.items():
                    base = self.cre(part) / part
                    w = w * base**m
                    for k in range(2, m + 1):
                        w = w / k
                if not w.is_zero():
                    layer.append((pi, w))
            self._layers[d] = layer
        return layer

    def __repr__(self):
        return f"VOSpec({self.name})"


def scaled(spec: VOSpec, sigma: Scalar, name: str | None = None) -> VOSpec:
    """The operator evaluated at sigma*z; requires a coupling-free spec."""
    if spec.coupling != 0:
        raise ArithError("argument rescaling needs a coupling-free operator")
    return VOSpec(
        name or f"{spec.name}@scaled",
        lambda n: spec.cre(n) * sigma**n,
        lambda n: spec.ann(n) * sigma ** (-n),
        zmode=spec.zmode,
        charge=spec.charge,
        coupling=0,
        prefactor=spec.prefactor,
    )


def composed(xspec: VOSpec, sigma: Scalar, yspec: VOSpec, name: str | None = None) -> VOSpec:
    """Normal-ordered product :X(sigma w) Y(w): as a single spec.

    All zero-mode monomials evaluate at the source sector and the charge
    shifts add, matching the convention stated in the module docstring.
    """
    if xspec.coupling != 0:
        raise ArithError("left factor must be coupling-free")
    return VOSpec(
        name or f":{xspec.name}*{yspec.name}:",
        lambda n: xspec.cre(n) * sigma**n + yspec.cre(n),
        lambda n: xspec.ann(n) * sigma ** (-n) + yspec.ann(n),
        zmode=xspec.zmode + yspec.zmode,
        charge=(xspec.charge[0] + yspec.charge[0], xspec.charge[1] + yspec.charge[1]),
        coupling=yspec.coupling,
        prefactor=xspec.prefactor * yspec.prefactor,
    )


def perturbed(spec: VOSpec) -> VOSpec:
    """Negative control: add 1 to the first creation coefficient."""
    return VOSpec(
        f"{spec.name}#perturbed",
        lambda n: spec.cre(n) + (ONE if n == 1 else ZERO),
        spec.ann,
        zmode=spec.zmode,
        charge=spec.charge,
        coupling=spec.coupling,
        prefactor=spec.prefactor,
    )


def _removals(mult_items, spec):
    """Enumerate annihilation contractions: yields (weight Scalar, removed weight, removed multiset)."""
    out = [(ONE, 0, {})]
    for part, m in mult_items:
        new = []
        cpart = spec.contract(part)
        for w, s, taken in out:
            pw = ONE
            binom = 1
            for k in range(m + 1):
                if k:
                    binom = binom * (m - k + 1) // k
                    pw = pw * cpart
                if pw.is_zero() and k:
                    break
                t2 = dict(taken)
                if k:
                    t2[part] = k
                new.append((w * pw * binom, s + part * k, t2))
        out = new
    return out


def apply_mode(spec: VOSpec, k: int, vec: FockVector, L: int) -> FockVector:
    """Coefficient of z^-k of the operator applied to a homogeneous vector."""
    src = vec.sector
    dst = src.shifted(*spec.charge)
    if vec.is_zero():
        return FockVector.zero(dst)
    ell = vec.level()
    out_level = ell - k
    if out_level < 0:
        return FockVector.zero(dst)
    if out_level > L:
        raise TruncationError(f"output level {out_level} exceeds truncation {L}")
    zfac = spec.prefactor
    if spec.zmode:
        zfac = zfac * src.weight_monomial() ** spec.zmode
    acc: dict = {}
    for mu, c in vec.coeffs.items():
        mult: dict = {}
        for part in mu:
            mult[part] = mult.get(part, 0) + 1
        base = c * zfac
        for w, removed, taken in _removals(tuple(mult.items()), spec):
            d = removed - k
            if d < 0 or w.is_zero():
                continue
            kept = []
            for part, m in mult.items():
                kept.extend([part] * (m - taken.get(part, 0)))
            for pi, lw in spec.creation_layer(d):
                word = tuple(sorted(kept + list(pi), reverse=True))
                s = acc.get(word, ZERO) + base * w * lw
                if s.is_zero():
                    acc.pop(word, None)
                else:
                    acc[word] = s
    return FockVector(dst, acc)


_MODE_CACHE: dict = {}


def cached_mode(spec: VOSpec, k: int, vec: FockVector, L: int) -> FockVector:
    """apply_mode through a per-basis-state cache shared across calls."""
    src = vec.sector
    out = FockVector.zero(src.shifted(*spec.charge))
    for mu, c in vec.coeffs.items():
        if sum(mu) - k > L:
            raise TruncationError(f"output level {sum(mu) - k} exceeds truncation {L}")
        key = (spec.name, k, src.r, src.s, mu)
        hit = _MODE_CACHE.get(key)
        if hit is None:
            hit = apply_mode(spec, k, FockVector.basis(src, mu), max(L, sum(mu) - k))
            _MODE_CACHE[key] = hit
        out = out.add(hit.scale(c))
    return out


# ---------------------------------------------------------------------------
# concrete operators


def t_spec() -> tuple[VOSpec, VOSpec]:
    """The two dressed exponential terms of the deformed stress current."""
    up = VOSpec(
        "T+",
        lambda n: -((1 - t**n) / (1 + p**n)) * t ** (-n) * sqrt_p ** (-n),
        lambda n: -(1 - t**n) * sqrt_p**n,
        zmode=1,
        prefactor=sqrt_p,
    )
    dn = VOSpec(
        "T-",
        lambda n: ((1 - t**n) / (1 + p**n)) * t ** (-n) * sqrt_p**n,
        lambda n: (1 - t**n) * sqrt_p ** (-n),
        zmode=-1,
        prefactor=ONE / sqrt_p,
    )
    return up, dn


_T_SPECS = t_spec()


def t_mode(n: int, vec: FockVector, L: int, specs=None) -> FockVector:
    a, b = specs if specs is not None else _T_SPECS
    return cached_mode(a, n, vec, L).add(cached_mode(b, n, vec, L))


def psi_spec() -> VOSpec:
    """Creation-only partner operator; modes psi_{-n} exist for n >= 0 only."""
    return VOSpec(
        "psi",
        lambda n: -((1 - t**n) / (1 + p**n)) * sqrt_p**n * t ** (-n),
        lambda n: ZERO,
        zmode=-1,
        prefactor=ONE / sqrt_p,
    )


_PSI = psi_spec()


def psi_minus(n: int, vec: FockVector, L: int) -> FockVector:
    """psi_{-n} for n >= 0, the z^n coefficient."""
    if n < 0:
        raise ArithError("psi has nonnegative creation modes only")
    return cached_mode(_PSI, -n, vec, L)


def screening_specs() -> tuple[VOSpec, VOSpec]:
    splus = VOSpec(
        "S+",
        lambda n: (1 - t**n) / (1 - q**n),
        lambda n: -(1 + p**n) * (1 - t**n) / (1 - q**n),
        charge=(2, 0),
        coupling=2,
    )
    sminus = VOSpec(
        "S-",
        lambda n: -ONE,
        lambda n: (1 + p**n) * p ** (-n),
        charge=(0, 2),
        coupling=-2,
    )
    return splus, sminus


def auxiliary_specs() -> dict:
    """The residue operators A+-, the heuristic building blocks B+-, O+-."""
    aplus = VOSpec(
        "A+",
        lambda n: ((1 + t**n) / (1 + p**n)) * ((1 - t**n) / (1 - q**n)) * t ** (-n),
        lambda n: -(1 + t**n) * ((1 - t**n) / (1 - q**n)) * p**n,
        zmode=-1,
        charge=(2, 0),
        coupling=2,
    )
    aminus = VOSpec(
        "A-",
        lambda n: -((1 + q**n) / (1 + p**n)) * t ** (-n),
        lambda n: (1 + q**n) * p ** (-n),
        zmode=1,
        charge=(0, 2),
        coupling=-2,
    )
    bplus = VOSpec(
        "B+",
        lambda n: (1 - t ** (-n)) / (1 + p**n),
        lambda n: -(1 - t**n),
        zmode=1,
    )
    bminus = VOSpec(
        "B-",
        lambda n: -((1 - t ** (-n)) / (1 + p**n)) * p**n,
        lambda n: (1 - t**n) * p ** (-n),
        zmode=-1,
    )
    oplus = VOSpec(
        "O+",
        lambda n: ((1 + t**n) / (1 + p**n)) * ((1 - t**n) / (1 - q**n)) * t ** (-n),
        lambda n: -(1 + t**n) * ((1 - t**n) / (1 - q**n)) * p**n,
        zmode=-1,
        charge=(2, 0),
        coupling=2,
    )
    ominus = VOSpec(
        "O-",
        lambda n: -((1 + q**n) / (1 + p**n)) * t ** (-n),
        lambda n: (1 + q**n) * p ** (-n),
        zmode=1,
        charge=(0, 2),
        coupling=-2,
    )
    return {"A+": aplus, "A-": aminus, "B+": bplus, "B-": bminus, "O+": oplus, "O-": ominus}


def b_specs_with_kernel(eps_is_p: bool = True) -> tuple[VOSpec, VOSpec]:
    """B+- with the exponent parameter left free: the true value sets q^eps = p.

    The eps_is_p=False variant (q^eps = q) is a negative control; the
    delta-function commutators only close at the true parameter value.
    """
    base = p if eps_is_p else q
    tag = "" if eps_is_p else "#eps=q"
    bplus = VOSpec(
        "B+" + tag,
        lambda n: (1 - t ** (-n)) / (1 + base**n),
        lambda n: -(1 - t**n),
        zmode=1,
    )
    bminus = VOSpec(
        "B-" + tag,
        lambda n: -((1 - t ** (-n)) / (1 + base**n)) * base**n,
        lambda n: (1 - t**n) * base ** (-n),
        zmode=-1,
    )
    return bplus, bminus


def macdonald_kernel_spec() -> VOSpec:
    return VOSpec(
        "Dkernel",
        lambda n: 1 - t ** (-n),
        lambda n: -(1 - t**n),
    )


_D_KERNEL = macdonald_kernel_spec()


def macdonald_operator(N: int, vec: FockVector, L: int) -> FockVector:
    """Level-preserving bosonized Macdonald operator with N underlying variables."""
    inner = cached_mode(_D_KERNEL, 0, vec, L)
    c = t**N / (t - 1)
    return inner.scale(c).add(vec.scale(-1 / (t - 1)))


def to_symmetric_function(vec: FockVector) -> SymFun:
    """Relabel a_{-mu}|r,s> as the power sum p_mu, dropping the sector."""
    return SymFun("p", vec.level(), dict(vec.coeffs))


def from_symmetric_function(f: SymFun, sector: Sector) -> FockVector:
    if f.basis != "p":
        raise ArithError("expected p basis")
    return FockVector(sector, dict(f.terms))
