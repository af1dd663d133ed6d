"""Dense square matrices over the ghost-extended max-plus scalars.

The determinant here is the permanent: the max over all permutation tracks
of the track product. Because tangibility of the result depends on *how
many* tracks attain the maximum, the determinant is computed by exhaustive
enumeration and reports every dominant track, guarded by an explicit
enumeration bound (default 9, overridable per call or via the
``SUPERTROPICAL_DET_BOUND`` environment variable).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .errors import BoundExceededError, DomainError, ParseError, ShapeError
from .polynomial import Polynomial
from .scalar import ONE, Scalar, ZERO, parse_scalar

DEFAULT_DET_BOUND = 9
DET_BOUND_ENV = "SUPERTROPICAL_DET_BOUND"


def det_bound(explicit: int | None = None) -> int:
    if explicit is not None:
        return explicit
    raw = os.environ.get(DET_BOUND_ENV)
    if raw is None:
        return DEFAULT_DET_BOUND
    try:
        return int(raw)
    except ValueError as exc:
        raise ParseError(f"{DET_BOUND_ENV} must be an integer, got {raw!r}") from exc


@dataclass(frozen=True)
class Matrix:
    """Immutable n-by-n array of scalars, indexed from 0 in the API."""

    rows: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ShapeError("matrix must be square and nonempty")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.rows[i][j]

    @staticmethod
    def identity(n: int) -> Matrix:
        return Matrix(
            tuple(
                tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
            )
        )

    def __str__(self) -> str:
        return format_matrix(self)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "rows": [[str(e) for e in row] for row in self.rows]}


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.n != b.n:
        raise ShapeError(f"cannot multiply {a.n}x{a.n} by {b.n}x{b.n}")
    n = a.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = ZERO
            for t in range(n):
                acc = acc + a.rows[i][t] * b.rows[t][j]
            row.append(acc)
        rows.append(tuple(row))
    return Matrix(tuple(rows))


def mat_pow(a: Matrix, m: int) -> Matrix:
    if m < 0:
        raise DomainError("negative matrix powers are not defined")
    result = Matrix.identity(a.n)
    for _ in range(m):
        result = mat_mul(result, a)
    return result


def mat_vec(a: Matrix, v: Sequence[Scalar]) -> tuple[Scalar, ...]:
    if len(v) != a.n:
        raise ShapeError(f"vector length {len(v)} does not match dimension {a.n}")
    out = []
    for i in range(a.n):
        acc = ZERO
        for t in range(a.n):
            acc = acc + a.rows[i][t] * v[t]
        out.append(acc)
    return tuple(out)


def trace(a: Matrix) -> Scalar:
    acc = ZERO
    for i in range(a.n):
        acc = acc + a.rows[i][i]
    return acc


def principal_minor(a: Matrix, indices: Iterable[int]) -> Matrix:
    """Submatrix on the given rows and the same columns, order preserved."""
    idx = sorted(set(indices))
    if not idx:
        raise DomainError("a principal minor needs at least one index")
    if idx[0] < 0 or idx[-1] >= a.n:
        raise DomainError(f"indices {idx} out of range for dimension {a.n}")
    return Matrix(tuple(tuple(a.rows[i][j] for j in idx) for i in idx))


def mat_surpasses(a: Matrix, b: Matrix) -> bool:
    if a.n != b.n:
        raise ShapeError("shape mismatch in entrywise comparison")
    return all(
        a.rows[i][j].surpasses(b.rows[i][j]) for i in range(a.n) for j in range(a.n)
    )


@dataclass(frozen=True)
class PermutationTrack:
    """The entries a permutation selects, one per row, and their product."""

    perm: tuple[int, ...]
    product: Scalar

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Selected positions as 1-based (row, column) pairs."""
        return tuple((i + 1, j + 1) for i, j in enumerate(self.perm))

    @property
    def name(self) -> str:
        n = len(self.perm)
        if self.perm == tuple(range(n)):
            return "Id"
        if self.perm == tuple(range(n - 1, -1, -1)):
            return "-Id"
        return "(" + " ".join(str(j + 1) for j in self.perm) + ")"

    def to_json_dict(self) -> dict:
        return {
            "perm": [j + 1 for j in self.perm],
            "name": self.name,
            "product": str(self.product),
        }


class DetClass(Enum):
    TANGIBLE = "tangible"
    GHOST_BY_TIE = "ghost-by-tie"
    GHOST_BY_GHOST_TRACK = "ghost-by-ghost-track"
    ZERO = "zero"


@dataclass(frozen=True)
class DetReport:
    """Determinant value, every dominant track, and how the value arose.

    ``dominant_tracks`` is empty when the value is zero (no track has a
    finite product).
    """

    value: Scalar
    dominant_tracks: tuple[PermutationTrack, ...]
    classification: DetClass

    def to_json_dict(self) -> dict:
        return {
            "value": str(self.value),
            "classification": self.classification.value,
            "dominant": [t.to_json_dict() for t in self.dominant_tracks],
        }


def det(a: Matrix, bound: int | None = None) -> DetReport:
    """Permanent by full permutation enumeration, with dominant-track report."""
    limit = det_bound(bound)
    if a.n > limit:
        raise BoundExceededError("determinant", a.n, limit)
    rows = a.rows
    value = ZERO
    tracks: list[PermutationTrack] = []
    for perm in permutations(range(a.n)):
        product = ONE
        for i, j in enumerate(perm):
            entry = rows[i][j]
            if entry.is_zero:
                product = ZERO
                break
            product = product * entry
        if product.is_zero:
            continue
        tracks.append(PermutationTrack(perm, product))
        value = value + product
    if value.is_zero:
        return DetReport(ZERO, (), DetClass.ZERO)
    dominant = tuple(t for t in tracks if t.product.value == value.value)
    if len(dominant) > 1:
        cls = DetClass.GHOST_BY_TIE
    elif dominant[0].product.is_ghost:
        cls = DetClass.GHOST_BY_GHOST_TRACK
    else:
        cls = DetClass.TANGIBLE
    return DetReport(value, dominant, cls)


def char_poly(a: Matrix, bound: int | None = None) -> Polynomial:
    """Characteristic polynomial via principal-minor permanents.

    The coefficient of x^(n-k) is the max over all k-subsets of rows of the
    determinant of the corresponding principal minor; the top coefficient
    is the unit.
    """
    limit = det_bound(bound)
    if a.n > limit:
        raise BoundExceededError("characteristic polynomial", a.n, limit)
    n = a.n
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    for k in range(1, n + 1):
        acc = ZERO
        for subset in combinations(range(n), k):
            acc = acc + det(principal_minor(a, subset), bound=limit).value
        coeffs[n - k] = acc
    return Polynomial(tuple(coeffs))


# ---------------------------------------------------------------------------
# Text and JSON formats.


def parse_matrix(text: str) -> Matrix:
    """One row per line, entries whitespace-separated in the scalar grammar."""
    rows: list[tuple[Scalar, ...]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        row = []
        for col, token in enumerate(line.split(), start=1):
            try:
                row.append(parse_scalar(token))
            except ParseError as exc:
                raise ParseError(str(exc), line=lineno, col=col) from exc
        rows.append(tuple(row))
    if not rows:
        raise ParseError("no matrix rows found")
    widths = {len(r) for r in rows}
    if widths != {len(rows)}:
        raise ParseError(
            f"expected a square matrix, got {len(rows)} rows of widths {sorted(widths)}"
        )
    return Matrix(tuple(rows))


def format_matrix(a: Matrix) -> str:
    return "\n".join(" ".join(str(e) for e in row) for row in a.rows)


def matrix_from_json_dict(data: dict) -> Matrix:
    try:
        n = data["n"]
        rows = data["rows"]
    except (TypeError, KeyError) as exc:
        raise ParseError("matrix JSON needs keys 'n' and 'rows'") from exc
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ParseError(f"matrix JSON rows do not form an {n}x{n} array")
    return Matrix(tuple(tuple(parse_scalar(e) for e in row) for row in rows))


def parse_matrix_any(text: str) -> Matrix:
    """Accept either the plain-text or the JSON matrix format."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}") from exc
        return matrix_from_json_dict(data)
    return parse_matrix(text)
