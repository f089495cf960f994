"""The Landau-Ginzburg superpotential of a semi-Fano toric surface.

Each Maslov index two disk class contributes the monomial

    Z_b = exp(c_i) * q^{area(alpha)} * z^{v_i},       b = beta_i + alpha,

(the boundary of b equals the boundary of beta_i, so the z-exponent is the
ray vector), and the superpotential is the finite sum of Z_b over the classes
with n_b = 1.  Dropping the sphere corrections leaves the Hori-Vafa leading
part W_0 = sum_i Z_{beta_i}, which already is the whole potential in the Fano
case.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import math
from typing import Sequence

from .disks import DiskClass, enumerate_admissible
from .errors import NonIntegralPairing, NotSemiFano, UnsupportedBulk
from .homology import pair
from .kahler import KahlerSpec
from .laurent import LaurentPoly, QPoly, canonical_string


def z_beta(spec: KahlerSpec, b: DiskClass) -> LaurentPoly:
    """The monomial Z_b (a single Laurent term with a single q-monomial)."""
    base = spec.disk_coefficient(b.i)
    area = spec.q_exponent(spec.curve_area(b.alpha))
    exps = tuple(x + y for x, y in zip(base, area))
    return LaurentPoly.monomial(spec.k, spec.fan.ray(b.i), QPoly.monomial(spec.k, exps))


@dataclass
class Superpotential:
    """The potential together with one provenance record per counted class."""

    w: LaurentPoly
    classes: list[tuple[DiskClass, LaurentPoly]] = field(default_factory=list)


def superpotential(spec: KahlerSpec) -> Superpotential:
    """W = sum of Z_b over all admissible Maslov index two classes."""
    if not spec.fan.is_semi_fano():
        raise NotSemiFano("the disk count formula requires a semi-Fano surface")
    records = []
    w = LaurentPoly.zero(spec.k)
    for b in enumerate_admissible(spec.fan):
        term = z_beta(spec, b)
        records.append((b, term))
        w = w + term
    return Superpotential(w, records)


def hori_vafa(spec: KahlerSpec) -> LaurentPoly:
    """The leading part W_0: basic disk classes only."""
    w = LaurentPoly.zero(spec.k)
    for i in range(1, spec.fan.d + 1):
        w = w + z_beta(spec, DiskClass.basic(spec.fan, i))
    return w


@dataclass
class BulkPotential:
    """Potential deformed by a divisor bulk class, grouped by pairing value.

    ``parts[m]`` collects the Z_b with <b, D> = m, so the potential reads
    sum_m exp(m) * parts[m] plus the constant already folded into parts[0].
    The symbol exp(m) is kept formal; ``canonical_string(numeric=True)``
    evaluates it as a float for display only.
    """

    k: int
    parts: dict[int, LaurentPoly]

    def as_laurent(self) -> LaurentPoly:
        """Exact Laurent form; only valid when every pairing was zero."""
        if any(m != 0 for m in self.parts):
            raise ValueError("bulk potential has nontrivial exp factors")
        return self.parts.get(0, LaurentPoly.zero(self.k))

    def canonical_string(self, numeric: bool = False) -> str:
        if not self.parts:
            return "0"
        chunks = []
        for m in sorted(self.parts):
            body = canonical_string(self.parts[m])
            if m == 0:
                chunks.append(body)
            elif numeric:
                chunks.append(f"{math.exp(m)!r}*({body})")
            else:
                chunks.append(f"exp({m})*({body})")
        return " + ".join(chunks)


def bulk_superpotential(
    spec: KahlerSpec,
    a=0,
    D: Sequence | None = None,
    point_coefficient=0,
) -> BulkPotential:
    """a + sum over admissible b of exp(<b, D>) * Z_b for a divisor class D.

    The pairing <b, D> is D_i-coefficient of D at the basic index plus the
    intersection of D with the sphere part.  Point-class bulk insertions are
    not computed by the underlying theory and raise UnsupportedBulk.
    """
    if point_coefficient:
        raise UnsupportedBulk("point-class bulk invariants are not computed")
    if not spec.fan.is_semi_fano():
        raise NotSemiFano("the disk count formula requires a semi-Fano surface")
    d = spec.fan.d
    if D is None:
        D = (0,) * d
    D = tuple(D)
    if len(D) != d:
        raise NonIntegralPairing(f"divisor class must have {d} entries")
    if any(Fraction(m).denominator != 1 for m in D):
        raise NonIntegralPairing("bulk divisor class must be integral")
    D = tuple(int(m) for m in D)
    parts: dict[int, LaurentPoly] = {}
    for b in enumerate_admissible(spec.fan):
        m = D[b.i - 1] + pair(spec.fan, D, b.alpha)
        term = z_beta(spec, b)
        parts[m] = parts.get(m, LaurentPoly.zero(spec.k)) + term
    a = Fraction(a)
    if a:
        parts[0] = parts.get(0, LaurentPoly.zero(spec.k)) + LaurentPoly.constant(spec.k, a)
    return BulkPotential(spec.k, {m: p for m, p in parts.items() if not p.is_zero()})
