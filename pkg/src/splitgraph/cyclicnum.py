"""Complex polynomials, the Artal normal form, and offset extraction.

Everything is double precision.  Offsets are read off by matching a complex
ratio to the nearest root of unity; a match is only accepted when it is both
close (``residual < tol``) and unambiguous (``margin > 10 * tol``).

The curve cut out by the normal form is assumed to be smooth; nothing here
certifies it.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Mapping, Optional, Sequence

from .artal import ArtalType, classify
from .errors import ExtractionError, InvalidArgument
from .fingroup import CycloCoset

VARS = ("x", "y", "z")


@dataclass(frozen=True)
class CPolynomial:
    """Sparse polynomial: exponent tuple -> complex coefficient."""

    variables: tuple[str, ...]
    terms: Mapping[tuple[int, ...], complex] = field(default_factory=dict)

    def __post_init__(self):
        n = len(self.variables)
        clean = {}
        for exp, coef in self.terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != n or min(exp, default=0) < 0:
                raise InvalidArgument(f"bad exponent tuple {exp} for {n} variables")
            coef = complex(coef)
            if coef != 0:
                clean[exp] = clean.get(exp, 0) + coef
        object.__setattr__(self, "terms", {e: c for e, c in sorted(clean.items()) if c != 0})

    @classmethod
    def constant(cls, value, variables=VARS) -> "CPolynomial":
        return cls(tuple(variables), {(0,) * len(variables): value})

    @classmethod
    def variable(cls, name, variables=VARS) -> "CPolynomial":
        variables = tuple(variables)
        exp = tuple(1 if v == name else 0 for v in variables)
        if sum(exp) != 1:
            raise InvalidArgument(f"unknown variable {name!r}")
        return cls(variables, {exp: 1})

    def _check(self, other: "CPolynomial") -> None:
        if self.variables != other.variables:
            raise InvalidArgument("polynomials use different variables")

    def _lift(self, other) -> "CPolynomial":
        if isinstance(other, CPolynomial):
            self._check(other)
            return other
        return CPolynomial.constant(other, self.variables)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return CPolynomial(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return CPolynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return CPolynomial(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise InvalidArgument("only nonnegative integer powers are supported")
        result = CPolynomial.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def coefficient(self, exp: Sequence[int]) -> complex:
        return self.terms.get(tuple(exp), 0j)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def eval(self, point: Sequence[complex]) -> complex:
        return evaluate(self, point)


def evaluate(p: CPolynomial, point: Sequence[complex]) -> complex:
    """Term-by-term evaluation, summed in sorted exponent order."""
    if len(point) != len(p.variables):
        raise InvalidArgument(f"expected {len(p.variables)} coordinates, got {len(point)}")
    total = 0j
    for exp, coef in p.terms.items():
        term = coef
        for xv, k in zip(point, exp):
            if k:
                term *= complex(xv) ** k
        total += term
    return total


@dataclass(frozen=True)
class ProjectivePoint:
    coords: tuple[complex, complex, complex]

    def __post_init__(self):
        c = tuple(complex(v) for v in self.coords)
        if len(c) != 3:
            raise InvalidArgument("projective plane points have three coordinates")
        k = max(range(3), key=lambda i: (abs(c[i]), -i))
        if abs(c[k]) == 0:
            raise InvalidArgument("(0:0:0) is not a projective point")
        object.__setattr__(self, "coords", tuple(v / c[k] for v in c))


# the three vertices of the line triangle xyz = 0
P1 = ProjectivePoint((0, 1, 0))
P2 = ProjectivePoint((0, 0, 1))
P3 = ProjectivePoint((1, 0, 0))


def root_of_unity(n: int, k: int = 1) -> complex:
    return cmath.exp(2j * math.pi * k / n)


def principal_root(z: complex, mu: int) -> complex:
    """The mu-th root with argument phase(z)/mu, phase in (-pi, pi]."""
    if mu < 1:
        raise InvalidArgument("root order must be positive")
    return abs(z) ** (1.0 / mu) * cmath.exp(1j * cmath.phase(z) / mu)


def _linear(a: str, b: str, coef: complex) -> CPolynomial:
    return CPolynomial.variable(a) + coef * CPolynomial.variable(b)


# line i is cut by its factors (a + c b); the pairs below are (a, b)
_LINE_VARS = (("y", "z"), ("z", "x"), ("x", "y"))


def check_coefficients(T: ArtalType, beta: int, c: Sequence[Sequence[complex]], tol: float = 1e-8) -> None:
    """Validate the product constraints and distinctness of the c_{i,j}."""
    if len(c) != 3:
        raise InvalidArgument("need three coefficient lists")
    targets = (1, 1, root_of_unity(T.d, beta * T.mu[2]))
    for i, (ci, part) in enumerate(zip(c, T.partitions)):
        if len(ci) != len(part.parts):
            raise InvalidArgument(f"line {i + 1}: expected {len(part.parts)} coefficients, got {len(ci)}")
        prod = reduce(lambda a, b: a * b,
                      (complex(cij) ** mij for cij, mij in zip(ci, T.mu_parts[i])), 1 + 0j)
        if abs(prod - targets[i]) > tol * max(1.0, abs(targets[i])):
            raise InvalidArgument(f"line {i + 1}: product of c^mu is {prod:.12g}, expected {targets[i]:.12g}")
        for a in range(len(ci)):
            if abs(complex(ci[a])) <= tol:
                raise InvalidArgument(f"line {i + 1}: coefficient {a + 1} vanishes")
            for b in range(a):
                if abs(complex(ci[a]) - complex(ci[b])) <= tol:
                    raise InvalidArgument(f"line {i + 1}: coefficients {b + 1} and {a + 1} coincide")


def build_FP(T: ArtalType, beta: int, c: Sequence[Sequence[complex]],
             g0: Optional[CPolynomial] = None, tol: float = 1e-8) -> CPolynomial:
    check_coefficients(T, beta, c, tol)
    d = T.d
    x, y, z = (CPolynomial.variable(v) for v in VARS)
    F = -(x ** d) - y ** d - z ** d
    for (a, b), ci, part in zip(_LINE_VARS, c, T.partitions):
        prod = CPolynomial.constant(1)
        for cij, e in zip(ci, part.parts):
            prod = prod * _linear(a, b, complex(cij)) ** e
        F = F + prod
    if g0 is not None:
        if g0.variables != VARS:
            raise InvalidArgument("g0 must be a polynomial in x, y, z")
        if g0.terms and (not g0.is_homogeneous() or g0.degree() != d - 3):
            raise InvalidArgument(f"g0 must be homogeneous of degree {d - 3}")
        F = F + x * y * z * g0
    return F


def h_polynomials(T: ArtalType, c: Sequence[Sequence[complex]]):
    """``(numerator, mu_i)`` per line; h_i = numerator / (x+y+z)^mu_i."""
    out = []
    for i, ((a, b), ci) in enumerate(zip(_LINE_VARS, c)):
        num = CPolynomial.constant(1)
        for cij, mij in zip(ci, T.mu_parts[i]):
            num = num * _linear(a, b, complex(cij)) ** mij
        out.append((num, T.mu[i]))
    return out


def h_value(num: CPolynomial, mu: int, point: ProjectivePoint) -> complex:
    den = sum(point.coords)
    if abs(den) < 1e-12:
        raise InvalidArgument("point lies on the auxiliary line x+y+z=0")
    return evaluate(num, point.coords) / den ** mu


def h_values_for_artal(T: ArtalType, beta: int, c: Sequence[Sequence[complex]],
                       tol: float = 1e-8) -> tuple[complex, ...]:
    """h_x(P1), h_x(P2), h_y(P2), h_y(P3), h_z(P3), h_z(P1)."""
    check_coefficients(T, beta, c, tol)
    (hx, mx), (hy, my), (hz, mz) = h_polynomials(T, c)
    return (h_value(hx, mx, P1), h_value(hx, mx, P2),
            h_value(hy, my, P2), h_value(hy, my, P3),
            h_value(hz, mz, P3), h_value(hz, mz, P1))


@dataclass(frozen=True)
class OffsetExtraction:
    alpha: int
    residual: float
    margin: float


def extract_offsets(h_evals: Sequence[tuple[complex, complex, int, int]], m: int,
                    tol: float = 1e-6) -> list[OffsetExtraction]:
    """Match each ``h / d**mu`` to the nearest s-th root of unity."""
    out = []
    for i, (h, dval, mu, s) in enumerate(h_evals):
        if s < 1 or m % s:
            raise InvalidArgument(f"entry {i}: s={s} must divide m={m}")
        denom = complex(dval) ** mu
        if denom == 0:
            raise ExtractionError(f"entry {i}: zero root value", {"index": i})
        ratio = complex(h) / denom
        dists = sorted((abs(ratio - root_of_unity(s, k)), k) for k in range(s))
        residual, alpha = dists[0]
        margin = dists[1][0] - residual if s > 1 else math.inf
        diag = {"index": i, "ratio": [ratio.real, ratio.imag], "alpha": alpha,
                "residual": residual, "margin": margin, "tol": tol}
        if residual >= tol:
            raise ExtractionError(f"entry {i}: no root of unity within tolerance", diag)
        if margin <= 10 * tol:
            raise ExtractionError(f"entry {i}: ambiguous root-of-unity match", diag)
        out.append(OffsetExtraction(alpha, residual, margin))
    return out


def theorem_net_voltage(s_list: Sequence[int], alpha_list: Sequence[int], m: int) -> CycloCoset:
    """``[sum alpha] + gcd(s) Z_m`` for a walk through components of splitting numbers s."""
    if len(s_list) != len(alpha_list):
        raise InvalidArgument("s_list and alpha_list differ in length")
    for s in s_list:
        if s < 1 or m % s:
            raise InvalidArgument(f"splitting number {s} does not divide m={m}")
    step = reduce(math.gcd, s_list, m)
    return CycloCoset.normalized(m, sum(alpha_list) % m, step)


# -- the Artal pipeline ---------------------------------------------------

def artal_extraction_inputs(T: ArtalType, hvals: Sequence[complex],
                            branches: Sequence[int] = (0, 0, 0)):
    """Inputs for :func:`extract_offsets` from the six h values.

    ``branches[i]`` picks which mu-th root of h_i(P_i) is used for d_i; 0 is
    the principal root.
    """
    hx1, hx2, hy2, hy3, hz3, hz1 = hvals
    mu = T.mu
    d1 = principal_root(hx1, mu[0]) * root_of_unity(mu[0], branches[0])
    d2 = principal_root(hy2, mu[1]) * root_of_unity(mu[1], branches[1])
    d3 = principal_root(hz3, mu[2]) * root_of_unity(mu[2], branches[2])
    s = T.s_lines
    return [(hx2, d2, mu[0], s[0]), (hy3, d3, mu[1], s[1]), (hz1, d1, mu[2], s[2])]


@dataclass
class NumericBeta:
    hvals: tuple[complex, ...]
    extractions: list[OffsetExtraction]
    beta: int

    @property
    def alphas(self) -> list[int]:
        return [e.alpha for e in self.extractions]


def numeric_beta(T: ArtalType, c: Sequence[Sequence[complex]], beta_hint: Optional[int] = None,
                 tol: float = 1e-6, branches: Sequence[int] = (0, 0, 0)) -> NumericBeta:
    """Recover beta (mod s) from coefficients alone.

    The coefficients fix beta only modulo s_3 through the third product; when
    ``beta_hint`` is None the constraint check is skipped for that product
    and the value is read off numerically.
    """
    if beta_hint is not None:
        check_coefficients(T, beta_hint, c)
    (hx, mx), (hy, my), (hz, mz) = h_polynomials(T, c)
    hvals = (h_value(hx, mx, P1), h_value(hx, mx, P2), h_value(hy, my, P2),
             h_value(hy, my, P3), h_value(hz, mz, P3), h_value(hz, mz, P1))
    ex = extract_offsets(artal_extraction_inputs(T, hvals, branches), T.d, tol)
    return NumericBeta(hvals, ex, sum(e.alpha for e in ex) % T.s)


def sample_coefficients(T: ArtalType, beta: int, rng) -> list[list[complex]]:
    """Random coefficients satisfying the product constraints for ``beta``.

    ``rng`` is a :class:`random.Random`.  The last coefficient on each line is
    solved for, on a random root branch.
    """
    classify(T, beta)  # range check
    targets = (1, 1, root_of_unity(T.d, beta * T.mu[2]))
    out = []
    for i, part in enumerate(T.partitions):
        mus = T.mu_parts[i]
        while True:
            ci = [cmath.rect(rng.uniform(0.5, 2.0), rng.uniform(-math.pi, math.pi))
                  for _ in mus[:-1]]
            rest = targets[i] / reduce(lambda a, b: a * b,
                                       (cij ** mij for cij, mij in zip(ci, mus)), 1 + 0j)
            last = principal_root(rest, mus[-1]) * root_of_unity(mus[-1], rng.randrange(mus[-1]))
            ci.append(last)
            if all(abs(ci[a] - ci[b]) > 1e-3 for a in range(len(ci)) for b in range(a)):
                out.append(ci)
                break
    return out


def random_g0(d: int, rng) -> CPolynomial:
    """A random homogeneous polynomial of degree d-3 in x, y, z."""
    k = d - 3
    terms = {(a, b, k - a - b): complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
             for a in range(k + 1) for b in range(k + 1 - a)}
    return CPolynomial(VARS, terms)
