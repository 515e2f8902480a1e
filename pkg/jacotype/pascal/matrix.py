"""The clique-count matrix A (a_{i,j} = η^{K_j}(K_i)) and its signed inverse."""

from __future__ import annotations

import csv
import io
from collections.abc import Sequence
from fractions import Fraction
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict

from jacotype.config import I64_MAX, MATRIX_DIMENSION_CAP
from jacotype.errors import CountOverflowError, InvalidArgumentError
from jacotype.pascal.calculus import binomial

Matrix = Sequence[Sequence[int]]


class CliqueMatrix(BaseModel):
    """n×n lower-triangular integer matrix; rows and columns are 1-based in accessors."""

    model_config = ConfigDict(frozen=True)

    n: int
    entries: tuple[tuple[int, ...], ...]
    kind: Literal["forward", "inverse"] = "forward"

    def entry(self, i: int, j: int) -> int:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise InvalidArgumentError(f"entry ({i}, {j}) outside 1..{self.n}")
        return self.entries[i - 1][j - 1]

    def row(self, i: int) -> tuple[int, ...]:
        """Row i up to the diagonal."""
        return tuple(self.entry(i, j) for j in range(1, i + 1))

    def is_lower_unitriangular(self) -> bool:
        return all(
            self.entries[i][i] == 1 and all(v == 0 for v in self.entries[i][i + 1:])
            for i in range(self.n)
        )

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "kind": self.kind, "entries": [list(r) for r in self.entries]}

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for r in self.entries:
            writer.writerow(r)
        return buf.getvalue()


def _check_dimension(n: int) -> None:
    if not 1 <= n <= MATRIX_DIMENSION_CAP:
        raise InvalidArgumentError(f"matrix dimension must be in 1..{MATRIX_DIMENSION_CAP}, got {n}")


def _signed(value: int) -> int:
    if abs(value) > I64_MAX:
        raise CountOverflowError(f"matrix entry {value} exceeds the signed 64-bit range")
    return value


def clique_matrix(n: int) -> CliqueMatrix:
    """a_{i,j} = C(i, j)."""
    _check_dimension(n)
    rows = tuple(
        tuple(_signed(binomial(i, j)) for j in range(1, n + 1)) for i in range(1, n + 1)
    )
    return CliqueMatrix(n=n, entries=rows, kind="forward")


def clique_matrix_inverse(n: int) -> CliqueMatrix:
    """b_{i,j} = (-1)^{i+j} C(i, j)."""
    _check_dimension(n)
    rows = tuple(
        tuple(_signed((-1) ** (i + j) * binomial(i, j)) for j in range(1, n + 1))
        for i in range(1, n + 1)
    )
    return CliqueMatrix(n=n, entries=rows, kind="inverse")


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> list[list[int]]:
    """Exact integer product."""
    if not a or len(a[0]) != len(b):
        raise InvalidArgumentError("matrix shapes do not align")
    cols = len(b[0])
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(cols)]
        for i in range(len(a))
    ]


def determinant(m: Matrix) -> Fraction:
    """Exact determinant by Gaussian elimination over the rationals."""
    size = len(m)
    work = [[Fraction(v) for v in row] for row in m]
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if work[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            det = -det
        det *= work[col][col]
        for r in range(col + 1, size):
            factor = work[r][col] / work[col][col]
            if factor:
                for c in range(col, size):
                    work[r][c] -= factor * work[col][c]
    return det


def invert(m: Matrix) -> list[list[Fraction]]:
    """Exact Gauss–Jordan inverse over the rationals."""
    size = len(m)
    work = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(size)]
            for i, row in enumerate(m)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if work[r][col] != 0), None)
        if pivot is None:
            raise InvalidArgumentError("matrix is not invertible")
        work[col], work[pivot] = work[pivot], work[col]
        scale = work[col][col]
        work[col] = [v / scale for v in work[col]]
        for r in range(size):
            if r != col and work[r][col]:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    return [row[size:] for row in work]
