"""Verification of the ring isomorphism QH*(X) = Jac(W).

The map psi sends a divisor class D to sum_b (D.b) Z_b over the admissible
Maslov index two classes (the open divisor equation), and the identity
psi(sum_i v_i^j D_i) = z_j dW/dz_j is checked symbolically in the q_l.  Each
quantum Stanley-Reisner relation is then checked by exact ideal membership:
psi(D_i) psi(D_j) - psi(D_i * D_j) must lie in <d_1 W, d_2 W> inside the
Laurent ring, which is realized as Q[z1, z2, u] / (u z1 z2 - 1) and decided
with a Groebner basis over exact rationals.  The vector-space dimension of
the Jacobian ring at the sampled parameters is the number of standard
monomials and must equal the rank of H*(X), i.e. the number of rays.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from sympy import QQ, Poly, Rational, groebner, symbols

from .errors import InfiniteDimensional, IsP2
from .homology import linear_relations, pair
from .kahler import KahlerSpec
from .laurent import LaurentPoly
from .potential import superpotential
from .quantum import QHElement, primitive_pairs, quantum_sr_relations

_Z1, _Z2, _U = symbols("z1 z2 u")


@dataclass
class JacobianIdeal:
    """Generators d_j W = z_j dW/dz_j of the Jacobian ideal."""

    g1: LaurentPoly
    g2: LaurentPoly


def jacobian_ideal(spec: KahlerSpec) -> JacobianIdeal:
    w = superpotential(spec).w
    return JacobianIdeal(w.log_derivative(1), w.log_derivative(2))


def psi_divisor(spec: KahlerSpec, D: Sequence) -> LaurentPoly:
    """psi(D) = sum over admissible b of (D . b) Z_b, extended linearly.

    D is a divisor class vector (rational entries allowed); the pairing with
    b = beta_i + alpha is the i-th coefficient plus the intersection with the
    sphere part.
    """
    fan = spec.fan
    out = LaurentPoly.zero(spec.k)
    for b, term in superpotential(spec).classes:
        weight = D[b.i - 1] + pair(fan, D, b.alpha)
        if weight:
            out = out + term.scale(Fraction(weight))
    return out


def psi_qh(spec: KahlerSpec, el: QHElement) -> LaurentPoly:
    """psi of a scalar + divisor element: psi(1) = 1 on the scalar part."""
    out = LaurentPoly(spec.k, {(0, 0): el.scalar})
    fan = spec.fan
    for coord, c in enumerate(el.divisor, start=1):
        if c.is_zero():
            continue
        unit = tuple(1 if a == coord - 1 else 0 for a in range(fan.d))
        out = out + psi_divisor(spec, unit).scale(c)
    return out


def verify_linear_identity(spec: KahlerSpec) -> bool:
    """psi(sum_i v_i^j D_i) = d_j W exactly (symbolic q), j = 1, 2."""
    ideal = jacobian_ideal(spec)
    l1, l2 = linear_relations(spec.fan)
    return psi_divisor(spec, l1) == ideal.g1 and psi_divisor(spec, l2) == ideal.g2


# --- Groebner machinery over Q[z1, z2, u], u = (z1 z2)^(-1) ---


def _to_poly(p: LaurentPoly) -> Poly:
    """Clear denominators of a specialized (k = 0) Laurent polynomial.

    z1^e1 z2^e2 = z1^(e1+m) z2^(e2+m) u^m with m = max(0, -e1, -e2); the map
    (e1, e2) -> exponent triple is injective, monomials are units, so
    membership statements are unchanged.
    """
    terms = {}
    for (e1, e2), qp in p.terms.items():
        c = qp.specialize(())
        m = max(0, -e1, -e2)
        terms[(e1 + m, e2 + m, m)] = Rational(c.numerator, c.denominator)
    if not terms:
        terms = {(0, 0, 0): Rational(0)}
    return Poly.from_dict(terms, _Z1, _Z2, _U, domain=QQ)


def _groebner_basis(ideal: JacobianIdeal, qvals: Sequence[Fraction], order: str):
    gens = [
        _to_poly(ideal.g1.specialize_q(qvals)),
        _to_poly(ideal.g2.specialize_q(qvals)),
        Poly(_U * _Z1 * _Z2 - 1, _Z1, _Z2, _U, domain=QQ),
    ]
    return groebner(gens, _Z1, _Z2, _U, order=order, domain=QQ)


def groebner_membership(
    p: LaurentPoly,
    ideal: JacobianIdeal,
    qvals: Sequence,
    order: str = "grevlex",
) -> bool:
    """Is p in <g1, g2> inside the Laurent ring, at exact rational q values?"""
    qvals = [Fraction(v) for v in qvals]
    G = _groebner_basis(ideal, qvals, order)
    return G.contains(_to_poly(p.specialize_q(qvals)))


def _standard_monomial_count(G, order: str) -> int:
    if not G.is_zero_dimensional:
        raise InfiniteDimensional("Jacobian ring is not finite-dimensional here")
    lms = [tuple(g.LM(order=order)) for g in G.polys]
    bounds = []
    for var in range(3):
        pure = [
            m[var]
            for m in lms
            if all(e == 0 for v, e in enumerate(m) if v != var)
        ]
        bounds.append(min(pure))
    count = 0
    for a in range(bounds[0]):
        for b in range(bounds[1]):
            for c in range(bounds[2]):
                if not any(
                    a >= m[0] and b >= m[1] and c >= m[2] for m in lms
                ):
                    count += 1
    return count


def jac_dimension(spec: KahlerSpec, qvals: Sequence, order: str = "grevlex") -> int:
    """dim of the Laurent Jacobian ring at exact rational q values."""
    qvals = [Fraction(v) for v in qvals]
    G = _groebner_basis(jacobian_ideal(spec), qvals, order)
    return _standard_monomial_count(G, order)


# --- the end-to-end report ---

_PRIMES = (7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53)


def default_q_sample(k: int, shift: int = 0) -> tuple[Fraction, ...]:
    """q_l = 1 / p_l over consecutive primes starting at 7 (+ shift)."""
    return tuple(Fraction(1, p) for p in _PRIMES[shift : shift + k])


@dataclass
class VerificationReport:
    """Line-oriented record of the QH = Jac verification for one surface."""

    surface: str
    q_sample: tuple[Fraction, ...]
    linear_identity: bool
    relations: list[tuple[tuple[int, int], bool]]
    dimension: int | None
    expected_dimension: int
    samples_tried: list[tuple[Fraction, ...]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.linear_identity
            and all(ok for _, ok in self.relations)
            and self.dimension == self.expected_dimension
        )

    def to_text(self) -> str:
        lines = [f"surface {self.surface}"]
        lines.append(
            "q-sample " + " ".join(f"q{l}={v}" for l, v in enumerate(self.q_sample, 1))
        )
        if len(self.samples_tried) > 1:
            lines.append(f"resampled {len(self.samples_tried) - 1} time(s)")
        lines.append(f"linear-identity {'PASS' if self.linear_identity else 'FAIL'}")
        for (i, j), ok in self.relations:
            lines.append(f"relation D{i}*D{j} membership {'PASS' if ok else 'FAIL'}")
        dim = "undefined" if self.dimension is None else self.dimension
        ok = self.dimension == self.expected_dimension
        lines.append(
            f"jacobian-dimension {dim} expected {self.expected_dimension} "
            f"{'PASS' if ok else 'FAIL'}"
        )
        lines.append(f"RESULT {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def verify_homomorphism(
    spec: KahlerSpec, qvals: Sequence | None = None
) -> VerificationReport:
    """Check every quantum relation and the dimension equality for one surface.

    With qvals omitted, the default prime-reciprocal sample is used and a
    failed check or an infinite-dimensional quotient triggers resampling at
    the next prime window (the report records every sample tried).
    """
    fan = spec.fan
    if fan.d == 3:
        raise IsP2("quantum Stanley-Reisner verification excludes P^2")
    auto = qvals is None
    linear_ok = verify_linear_identity(spec)
    ideal = jacobian_ideal(spec)
    pairs = primitive_pairs(fan)
    memberships = []
    for (i, j), el in quantum_sr_relations(fan, spec):
        lhs = psi_divisor(spec, tuple(1 if a == i - 1 else 0 for a in range(fan.d)))
        rhs = psi_divisor(spec, tuple(1 if a == j - 1 else 0 for a in range(fan.d)))
        memberships.append(((i, j), lhs * rhs - psi_qh(spec, el)))
    tried = []
    report = None
    for attempt in range(3 if auto else 1):
        sample = default_q_sample(spec.k, attempt) if auto else tuple(
            Fraction(v) for v in qvals
        )
        tried.append(sample)
        G = _groebner_basis(ideal, sample, "grevlex")
        relations = [
            (pr, bool(G.contains(_to_poly(p.specialize_q(sample)))))
            for pr, p in memberships
        ]
        try:
            dimension = _standard_monomial_count(G, "grevlex")
        except InfiniteDimensional:
            dimension = None
        report = VerificationReport(
            surface=spec.name or f"{fan.d}-ray surface",
            q_sample=sample,
            linear_identity=linear_ok,
            relations=relations,
            dimension=dimension,
            expected_dimension=fan.d,
            samples_tried=list(tried),
        )
        if report.passed:
            break
    assert report is not None and len(report.relations) == len(pairs)
    return report
