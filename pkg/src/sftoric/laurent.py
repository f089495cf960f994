"""Exact Laurent polynomials in z_1, z_2 over rational polynomials in q_1..q_k.

Coefficients are QPoly values: finite sums of q-monomials with exact
``fractions.Fraction`` coefficients.  q-exponents are integers and may be
negative (bundled surfaces X7..X11 need q-ratios), z-exponents likewise.
Arithmetic never normalizes away exactness; zero terms are dropped eagerly.

``canonical_string`` is the package's stable, bit-exact text grammar:

* a q-monomial prints as ``q1^2*q2`` (unit exponents bare, coefficient
  prefixes ``-`` / ``3/2*`` as needed, the empty monomial as its coefficient);
* a QPoly prints its monomials ascending by exponent vector, joined
  sign-aware: ``1 + q2 - q1*q2``;
* a z-term prints as ``(qpoly)*z1^e1*z2^e2`` with zero exponents omitted,
  exponent one bare, parentheses only when the coefficient has at least two
  terms, and a unit coefficient printed only when no z-monomial remains;
* the full polynomial joins its term strings in ascending string order with
  `` + ``; the zero polynomial prints ``0``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .errors import OutOfRange, ParameterMismatch

QExp = tuple[int, ...]
ZExp = tuple[int, int]


class QPoly:
    """Polynomial in q_1..q_k with Fraction coefficients and integer exponents."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Mapping[QExp, Fraction] | None = None):
        clean: dict[QExp, Fraction] = {}
        if terms:
            for exps, c in terms.items():
                c = Fraction(c)
                if c == 0:
                    continue
                exps = tuple(int(e) for e in exps)
                if len(exps) != k:
                    raise ParameterMismatch(
                        f"exponent vector {exps} does not have length {k}"
                    )
                clean[exps] = c
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    # --- constructors ---

    @staticmethod
    def zero(k: int) -> "QPoly":
        return QPoly(k)

    @staticmethod
    def constant(k: int, c) -> "QPoly":
        return QPoly(k, {(0,) * k: Fraction(c)})

    @staticmethod
    def one(k: int) -> "QPoly":
        return QPoly.constant(k, 1)

    @staticmethod
    def monomial(k: int, exps: Sequence[int], c=1) -> "QPoly":
        return QPoly(k, {tuple(exps): Fraction(c)})

    # --- ring structure ---

    def _check(self, other: "QPoly"):
        if self.k != other.k:
            raise ParameterMismatch(f"QPoly over k={self.k} vs k={other.k}")

    def __add__(self, other: "QPoly") -> "QPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return QPoly(self.k, out)

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __neg__(self) -> "QPoly":
        return QPoly(self.k, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "QPoly") -> "QPoly":
        self._check(other)
        out: dict[QExp, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return QPoly(self.k, out)

    def scale(self, c) -> "QPoly":
        c = Fraction(c)
        return QPoly(self.k, {e: c * v for e, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QPoly) and self.k == other.k and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.k, tuple(sorted(self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.k: Fraction(1)}

    def specialize(self, qvals: Sequence[Fraction]) -> Fraction:
        if len(qvals) != self.k:
            raise ParameterMismatch(f"{len(qvals)} values for k={self.k}")
        total = Fraction(0)
        for e, c in self.terms.items():
            m = Fraction(1)
            for exp, q in zip(e, qvals):
                m *= Fraction(q) ** exp
            total += c * m
        return total

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def __repr__(self) -> str:
        return f"QPoly({qpoly_string(self)!r})"


class LaurentPoly:
    """Laurent polynomial in z_1, z_2 with QPoly coefficients."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Mapping[ZExp, QPoly] | None = None):
        clean: dict[ZExp, QPoly] = {}
        if terms:
            for ze, qp in terms.items():
                if qp.k != k:
                    raise ParameterMismatch(
                        f"coefficient over k={qp.k} in a polynomial over k={k}"
                    )
                if not qp.is_zero():
                    clean[(int(ze[0]), int(ze[1]))] = qp
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # --- constructors ---

    @staticmethod
    def zero(k: int) -> "LaurentPoly":
        return LaurentPoly(k)

    @staticmethod
    def constant(k: int, c) -> "LaurentPoly":
        return LaurentPoly(k, {(0, 0): QPoly.constant(k, c)})

    @staticmethod
    def monomial(k: int, zexp: Sequence[int], coeff: QPoly | None = None) -> "LaurentPoly":
        if coeff is None:
            coeff = QPoly.one(k)
        return LaurentPoly(k, {tuple(zexp): coeff})

    # --- ring structure ---

    def _check(self, other: "LaurentPoly"):
        if self.k != other.k:
            raise ParameterMismatch(f"LaurentPoly over k={self.k} vs k={other.k}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out = dict(self.terms)
        for ze, qp in other.terms.items():
            cur = out.get(ze)
            out[ze] = qp if cur is None else cur + qp
        return LaurentPoly(self.k, out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.k, {ze: -qp for ze, qp in self.terms.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out: dict[ZExp, QPoly] = {}
        for z1, q1 in self.terms.items():
            for z2, q2 in other.terms.items():
                ze = (z1[0] + z2[0], z1[1] + z2[1])
                prod = q1 * q2
                cur = out.get(ze)
                out[ze] = prod if cur is None else cur + prod
        return LaurentPoly(self.k, out)

    def scale(self, c) -> "LaurentPoly":
        """Multiply by a QPoly or a rational scalar."""
        if isinstance(c, QPoly):
            return LaurentPoly(self.k, {ze: qp * c for ze, qp in self.terms.items()})
        return LaurentPoly(self.k, {ze: qp.scale(c) for ze, qp in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.k == other.k
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.k, tuple(sorted(self.terms.items(), key=lambda t: t[0]))))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, zexp: Sequence[int]) -> QPoly:
        return self.terms.get(tuple(zexp), QPoly.zero(self.k))

    def support(self) -> list[ZExp]:
        return sorted(self.terms)

    # --- the operations the mirror computation needs ---

    def log_derivative(self, j: int) -> "LaurentPoly":
        """z_j * d/dz_j: each term c * z^e goes to (e_j * c) * z^e."""
        if j not in (1, 2):
            raise ValueError("j must be 1 or 2")
        return LaurentPoly(
            self.k,
            {ze: qp.scale(ze[j - 1]) for ze, qp in self.terms.items() if ze[j - 1]},
        )

    def specialize_q(self, qvals: Sequence) -> "LaurentPoly":
        """Substitute exact rationals for the q_l; result has k = 0."""
        qvals = [Fraction(v) for v in qvals]
        if len(qvals) != self.k:
            raise ParameterMismatch(f"{len(qvals)} values for k={self.k}")
        for v in qvals:
            if not 0 < v < 1:
                raise OutOfRange(f"q value {v} is not in (0, 1)")
        out: dict[ZExp, QPoly] = {}
        for ze, qp in self.terms.items():
            c = qp.specialize(qvals)
            if c:
                out[ze] = QPoly.constant(0, c)
        return LaurentPoly(0, out)


# --- canonical rendering ---


def _coeff_monomial_string(c: Fraction, exps: QExp, letter: str = "q") -> str:
    parts = []
    for l, e in enumerate(exps, start=1):
        if e == 0:
            continue
        parts.append(f"{letter}{l}" if e == 1 else f"{letter}{l}^{e}")
    if not parts:
        return str(c)
    body = "*".join(parts)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{c}*{body}"


def qpoly_string(p: QPoly) -> str:
    """Monomials ascending by exponent vector, joined sign-aware."""
    if p.is_zero():
        return "0"
    items = sorted(p.terms.items())
    out = _coeff_monomial_string(items[0][1], items[0][0])
    for exps, c in items[1:]:
        if c > 0:
            out += " + " + _coeff_monomial_string(c, exps)
        else:
            out += " - " + _coeff_monomial_string(-c, exps)
    return out


def _z_monomial_string(ze: ZExp) -> str:
    parts = []
    for j, e in enumerate(ze, start=1):
        if e == 0:
            continue
        parts.append(f"z{j}" if e == 1 else f"z{j}^{e}")
    return "*".join(parts)


def term_string(ze: ZExp, qp: QPoly) -> str:
    ztxt = _z_monomial_string(ze)
    multi = len(qp.terms) >= 2
    if not ztxt:
        return f"({qpoly_string(qp)})" if multi else qpoly_string(qp)
    if multi:
        return f"({qpoly_string(qp)})*{ztxt}"
    ((exps, c),) = qp.terms.items()
    m = _coeff_monomial_string(c, exps)
    if m == "1":
        return ztxt
    if m == "-1":
        return "-" + ztxt
    return f"{m}*{ztxt}"


def canonical_string(p: LaurentPoly) -> str:
    """Deterministic text form; injective on normalized polynomials."""
    if p.is_zero():
        return "0"
    return " + ".join(sorted(term_string(ze, qp) for ze, qp in p.terms.items()))
