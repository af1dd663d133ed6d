"""Eigenvalues and executable checkers for the matrix-power laws.

Each checker computes both sides of one stated relation and returns a
`Verdict` carrying per-coefficient detail and, on failure, a witness that
reproduces the computation. A conditional law whose hypothesis does not
hold reports ``holds=None`` (not applicable) rather than pass or fail.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import DomainError
from .matrix import Matrix, char_poly, det, mat_mul, mat_pow, mat_vec, trace
from .polynomial import Interval, roots
from .scalar import Scalar


@dataclass(frozen=True)
class Verdict:
    """Outcome of one law check; ``holds=None`` means not applicable."""

    check: str
    holds: bool | None
    witness: dict | None = None
    detail: tuple[dict, ...] = ()

    @property
    def applicable(self) -> bool:
        return self.holds is not None

    def to_json_dict(self) -> dict:
        out: dict = {"theorem": self.check}
        if self.holds is None:
            out["not_applicable"] = True
        else:
            out["holds"] = self.holds
        if self.witness is not None:
            out["witness"] = self.witness
        out["detail"] = [dict(d) for d in self.detail]
        return out


@dataclass(frozen=True)
class EigenReport:
    """Tangible corner roots of the characteristic polynomial, with the
    ghost-dominated root region kept alongside for diagnostics."""

    eigenvalues: tuple[tuple[Scalar, int], ...]
    ghost_region: tuple[Interval, ...] = field(default=())

    def to_json_dict(self) -> dict:
        return {
            "eigenvalues": [
                {"value": str(v), "multiplicity": m} for v, m in self.eigenvalues
            ],
            "ghost_region": [iv.to_json_dict() for iv in self.ghost_region],
        }


def eigenvalues(a: Matrix, bound: int | None = None) -> EigenReport:
    report = roots(char_poly(a, bound))
    return EigenReport(report.corner_roots, report.ghost_intervals)


def _require_tangible(v: Sequence[Scalar], x: Scalar) -> None:
    if not x.is_tangible:
        raise DomainError("candidate eigenvalue must be tangible")
    if any(not vi.is_tangible for vi in v):
        raise DomainError("candidate eigenvector entries must be tangible")


def check_eigenpair(a: Matrix, v: Sequence[Scalar], x: Scalar) -> Verdict:
    """Does A*v ghost-surpass x*v componentwise?"""
    _require_tangible(v, x)
    av = mat_vec(a, v)
    detail = []
    holds = True
    for i, (lhs, vi) in enumerate(zip(av, v)):
        rhs = x * vi
        ok = lhs.surpasses(rhs)
        holds = holds and ok
        detail.append({"i": i, "lhs": str(lhs), "rhs": str(rhs), "ok": ok})
    witness = None
    if not holds:
        witness = {
            "matrix": a.to_json_dict(),
            "vector": [str(vi) for vi in v],
            "value": str(x),
        }
    return Verdict("eigen-pair", holds, witness, tuple(detail))


def check_eigen_power(a: Matrix, v: Sequence[Scalar], x: Scalar, m: int) -> Verdict:
    """Given an eigenpair (v, x) of A, is (v, x^m) an eigenpair of A^m?"""
    base = check_eigenpair(a, v, x)
    if not base.holds:
        raise DomainError("(v, x) is not an eigenpair of the given matrix")
    inner = check_eigenpair(mat_pow(a, m), v, x**m)
    witness = None
    if not inner.holds:
        witness = dict(inner.witness or {})
        witness["m"] = m
    return Verdict("eigen-power", inner.holds, witness, inner.detail)


def check_charpoly_power(a: Matrix, m: int, bound: int | None = None) -> Verdict:
    """Each coefficient of charpoly(A^m) ghost-surpasses the m-th power of
    the matching coefficient of charpoly(A)."""
    alpha = char_poly(a, bound)
    beta = char_poly(mat_pow(a, m), bound)
    detail = []
    bad = None
    for i in range(a.n + 1):
        b = beta.coeff(i)
        ap = alpha.coeff(i) ** m
        if b == ap:
            relation = "equal"
        elif b.surpasses(ap):
            relation = "ghost-surpass"
        else:
            relation = "violation"
            bad = i
        detail.append({"i": i, "coeff": str(b), "power": str(ap), "relation": relation})
    witness = None
    if bad is not None:
        witness = {"matrix": a.to_json_dict(), "m": m, "i": bad}
    return Verdict("charpoly-power", bad is None, witness, tuple(detail))


def check_tangible_equality(a: Matrix, m: int, bound: int | None = None) -> Verdict:
    """When charpoly(A^m) has no ghost coefficient, it must equal the
    coefficientwise m-th power of charpoly(A) exactly."""
    alpha = char_poly(a, bound)
    beta = char_poly(mat_pow(a, m), bound)
    if any(c.is_ghost for c in beta.coeffs):
        return Verdict("tangible-equality", None)
    detail = []
    bad = None
    for i in range(a.n + 1):
        b = beta.coeff(i)
        ap = alpha.coeff(i) ** m
        ok = b == ap
        if not ok:
            bad = i
        detail.append({"i": i, "coeff": str(b), "power": str(ap), "equal": ok})
    witness = None
    if bad is not None:
        witness = {"matrix": a.to_json_dict(), "m": m, "i": bad}
    return Verdict("tangible-equality", bad is None, witness, tuple(detail))


def check_corner_root_power(a: Matrix, m: int, bound: int | None = None) -> Verdict:
    """Every corner root of charpoly(A^m) is the m-th power of a corner root
    of charpoly(A). Containment only; the converse can fail."""
    base_roots = roots(char_poly(a, bound)).corner_roots
    power_roots = roots(char_poly(mat_pow(a, m), bound)).corner_roots
    detail = []
    bad = None
    for mu, _mult in power_roots:
        match = next((lam for lam, _ in base_roots if lam**m == mu), None)
        if match is None:
            bad = mu
        detail.append(
            {"corner_root": str(mu), "base_root": None if match is None else str(match)}
        )
    witness = None
    if bad is not None:
        witness = {"matrix": a.to_json_dict(), "m": m, "corner_root": str(bad)}
    return Verdict("corner-root-power", bad is None, witness, tuple(detail))


def check_det_rule(a: Matrix, b: Matrix, bound: int | None = None) -> Verdict:
    """det(AB) ghost-surpasses det(A)*det(B); equality whenever det(AB) is
    tangible (implied, but recorded separately in the detail)."""
    lhs = det(mat_mul(a, b), bound).value
    rhs = det(a, bound).value * det(b, bound).value
    holds = lhs.surpasses(rhs)
    detail = (
        {
            "lhs": str(lhs),
            "rhs": str(rhs),
            "tangible_equality": (lhs == rhs) if lhs.is_tangible else None,
        },
    )
    witness = None
    if not holds:
        witness = {"a": a.to_json_dict(), "b": b.to_json_dict()}
    return Verdict("det-product", holds, witness, detail)


def check_trace_power(a: Matrix, m: int) -> Verdict:
    """trace(A^m) ghost-surpasses trace(A)^m."""
    lhs = trace(mat_pow(a, m))
    rhs = trace(a) ** m
    holds = lhs.surpasses(rhs)
    witness = None if holds else {"matrix": a.to_json_dict(), "m": m}
    return Verdict("trace-power", holds, witness, ({"lhs": str(lhs), "rhs": str(rhs)},))


def check_frobenius(a: Scalar, b: Scalar, n: int) -> Verdict:
    """(a+b)^n equals a^n + b^n exactly over this carrier."""
    if n < 1:
        raise DomainError("exponent must be at least 1")
    lhs = (a + b) ** n
    rhs = a**n + b**n
    holds = lhs == rhs
    witness = None if holds else {"a": str(a), "b": str(b), "n": n}
    return Verdict("frobenius", holds, witness, ({"lhs": str(lhs), "rhs": str(rhs)},))
