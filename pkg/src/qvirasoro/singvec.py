"""Singular vectors in Fock sectors and their Macdonald identification.

The level-rs singular vector in F_{r,s} is computed as the joint kernel
of the positive current modes T_1 ... T_rs restricted to the level-rs
subspace: stacking the mode matrices gives an exact linear system over
the rational-function field whose kernel is one-dimensional for generic
parameters.  The kernel generator, pushed through the power-sum
relabeling, must be proportional to the Macdonald polynomial of the
rectangular diagram with r rows and s columns, and must be an
eigenvector of the bosonized Macdonald operator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import ONE, ZERO, ArithError, Scalar, nullspace
from .fock import (
    FockVector,
    Sector,
    from_symmetric_function,
    macdonald_operator,
    t_mode,
    to_symmetric_function,
)
from .symfunc import SymFun, macdonald_P, macdonald_eigenvalue, partitions

DEFAULT_LEVEL_BOUND = 6


@dataclass
class SingularVectorResult:
    sector: tuple
    level: int
    kernel_dimension: int
    vector: FockVector | None
    matched_partition: tuple | None = None
    proportionality: Scalar | None = None
    eigenvalue_checks: list | None = None
    image: SymFun | None = None
    macdonald: SymFun | None = None
    duality_note: str | None = None

    def to_json(self) -> dict:
        out = {
            "sector": list(self.sector),
            "level": self.level,
            "kernel_dimension": self.kernel_dimension,
            "vector": self.vector.to_json() if self.vector is not None else None,
            "matched_partition": list(self.matched_partition)
            if self.matched_partition is not None
            else None,
            "proportionality": str(self.proportionality)
            if self.proportionality is not None
            else None,
            "eigenvalue_checks": self.eigenvalue_checks,
            "image": self.image.to_json() if self.image is not None else None,
            "macdonald": self.macdonald.to_json() if self.macdonald is not None else None,
        }
        if self.duality_note:
            out["duality_note"] = self.duality_note
        return out


def positive_mode_kernel(sector: Sector, level: int) -> list:
    """Kernel of the stacked T_1 ... T_level matrices on the level subspace."""
    cols = partitions(level)
    rows = []
    for k in range(1, level + 1):
        out_parts = partitions(level - k)
        mats = {}
        for j, nu in enumerate(cols):
            img = t_mode(k, FockVector.basis(sector, nu), level)
            mats[j] = img.coeffs
        for mu in out_parts:
            row = [mats[j].get(mu, ZERO) for j in range(len(cols))]
            rows.append(row)
    return nullspace(rows, len(cols))


def singular_vector(r: int, s: int, bound: int = DEFAULT_LEVEL_BOUND) -> SingularVectorResult:
    """Normalized generator of the joint kernel at level r*s in F_{r,s}."""
    if r < 1 or s < 1:
        raise ArithError("sector labels must be positive")
    level = r * s
    if level > bound:
        raise ArithError(f"level {level} exceeds configured bound {bound}")
    sector = Sector(r, s)
    kernel = positive_mode_kernel(sector, level)
    if len(kernel) != 1:
        return SingularVectorResult(
            sector=(r, s), level=level, kernel_dimension=len(kernel), vector=None
        )
    coeffs = {}
    for mu, c in zip(partitions(level), kernel[0]):
        if not c.is_zero():
            coeffs[mu] = c
    vec = FockVector(sector, coeffs)
    return SingularVectorResult(
        sector=(r, s), level=level, kernel_dimension=1, vector=vec
    )


def verify_macdonald(r: int, s: int, bound: int = DEFAULT_LEVEL_BOUND) -> SingularVectorResult:
    """Assert exact proportionality of the kernel vector to P_{(s^r)}."""
    res = singular_vector(r, s, bound)
    if res.kernel_dimension != 1:
        raise ArithError(
            f"kernel dimension {res.kernel_dimension} at sector ({r},{s}); expected 1"
        )
    image = to_symmetric_function(res.vector)
    rect = (s,) * r
    P = macdonald_P(rect, bound=bound)
    lead = None
    for mu in partitions(r * s):
        a = image.terms.get(mu, ZERO)
        b = P.terms.get(mu, ZERO)
        if b.is_zero():
            if not a.is_zero():
                raise ArithError(f"support mismatch at {mu} for sector ({r},{s})")
            continue
        ratio = a / b
        if lead is None:
            lead = ratio
        elif ratio != lead:
            raise ArithError(f"not proportional to the rectangular Macdonald at ({r},{s})")
    if lead is None or lead.is_zero():
        raise ArithError(f"zero image at sector ({r},{s})")
    res.matched_partition = rect
    res.proportionality = lead
    res.image = image
    res.macdonald = P
    res.duality_note = (
        "transposed rectangle corresponds to the (s,r) kernel with q and t exchanged"
    )
    return res


def verify_eigenvalue(r: int, s: int, N: int, res: SingularVectorResult | None = None,
                      bound: int = DEFAULT_LEVEL_BOUND) -> dict:
    """Eigenvalue of the bosonized Macdonald operator on the singular vector."""
    if N < r * s and N < r:
        raise ArithError("N must be at least the number of rows")
    if res is None:
        res = singular_vector(r, s, bound)
    if res.kernel_dimension != 1:
        raise ArithError("no one-dimensional kernel to test")
    vec = res.vector
    expected = macdonald_eigenvalue((s,) * r, N)
    got = macdonald_operator(N, vec, r * s)
    ok = got == vec.scale(expected)
    return {"N": N, "status": "pass" if ok else "fail", "eigenvalue": str(expected)}


def full_report(r: int, s: int, Ns=None, bound: int = DEFAULT_LEVEL_BOUND) -> SingularVectorResult:
    res = verify_macdonald(r, s, bound)
    if Ns is None:
        Ns = [r * s, r * s + 1]
    res.eigenvalue_checks = [verify_eigenvalue(r, s, N, res=res, bound=bound) for N in Ns]
    return res
