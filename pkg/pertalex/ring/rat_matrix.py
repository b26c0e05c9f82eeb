# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

import typing as t
from dataclasses import dataclass

from .. import exceptions
from . import _dense, _elimination
from .laurent_poly import LaurentPoly
from .rat_fun import RatFun

Entry = t.Union[RatFun, LaurentPoly, int]

_ZERO = RatFun(LaurentPoly())
_ONE = RatFun(LaurentPoly.constant(1))


@dataclass(frozen=True, eq=False)
class RatMatrix:
    """Dense rectangular matrix over Z(T).

    Parameters
    ----------
    rows: int
        Number of rows.
    cols: int
        Number of columns.
    entries: tuple of pertalex.ring.RatFun
        Row-major entries. LaurentPoly and int entries are converted on construction.

    Raises
    ------
    pertalex.exceptions.ShapeError
        if the entry count is not rows * cols.
    """

    rows: int
    cols: int
    entries: t.Tuple[RatFun, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0 or len(self.entries) != self.rows * self.cols:
            raise exceptions.ShapeError(
                f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", tuple(_as_ratfun(e) for e in self.entries))

    @classmethod
    def from_rows(cls, rows: t.Sequence[t.Sequence[Entry]]) -> "RatMatrix":
        """Build a matrix from a list of equally long rows.

        Raises
        ------
        pertalex.exceptions.ShapeError
            if the rows differ in length.
        """
        width = len(rows[0]) if rows else 0
        if any(len(row) != width for row in rows):
            raise exceptions.ShapeError("rows of a matrix must have equal length")
        return cls(len(rows), width, tuple(e for row in rows for e in row))

    @classmethod
    def identity(cls, size: int) -> "RatMatrix":
        return cls(
            size, size, tuple(_ONE if r == c else _ZERO for r in range(size) for c in range(size))
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (_ZERO,) * (rows * cols))

    @classmethod
    def fromdict(cls, data_dict: dict) -> "RatMatrix":
        """Generate a matrix from ``{"rows", "cols", "entries": [[RatFun JSON, ...], ...]}``."""
        matrix = cls.from_rows(
            [[RatFun.fromdict(entry) for entry in row] for row in data_dict["entries"]]
        )
        if (matrix.rows, matrix.cols) != (data_dict["rows"], data_dict["cols"]):
            raise exceptions.ShapeError("declared shape does not match the entries")
        return matrix

    def asdict(self) -> dict:
        """Export self as a JSON-compatible dict of nested rows of RatFun JSON."""
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[entry.asdict() for entry in row] for row in self.to_rows()],
        }

    # --- access ---------------------------------------------------------------------------------

    @property
    def shape(self) -> t.Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: t.Tuple[int, int]) -> RatFun:
        row, col = index
        if not (0 <= row < self.rows and 0 <= col < self.cols):
            raise IndexError(f"index {index} out of range for a {self.rows}x{self.cols} matrix")
        return self.entries[row * self.cols + col]

    def row(self, index: int) -> t.Tuple[RatFun, ...]:
        return self.entries[index * self.cols : (index + 1) * self.cols]

    def to_rows(self) -> t.List[t.List[RatFun]]:
        return [list(self.row(r)) for r in range(self.rows)]

    def submatrix(self, rows: t.Sequence[int], cols: t.Sequence[int]) -> "RatMatrix":
        """Return the matrix of the given row and column indices, in the given order."""
        return RatMatrix(len(rows), len(cols), tuple(self[r, c] for r in rows for c in cols))

    def transpose(self) -> "RatMatrix":
        return RatMatrix(
            self.cols,
            self.rows,
            tuple(self[r, c] for c in range(self.cols) for r in range(self.rows)),
        )

    def map(self, function: t.Callable[[RatFun], Entry]) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, tuple(function(e) for e in self.entries))

    def row_sums(self) -> t.List[RatFun]:
        return [sum(self.row(r), _ZERO) for r in range(self.rows)]

    # --- arithmetic -----------------------------------------------------------------------------

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._require_same_shape(other)
        pairs = zip(self.entries, other.entries)
        return RatMatrix(self.rows, self.cols, tuple(a + b for a, b in pairs))

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._require_same_shape(other)
        pairs = zip(self.entries, other.entries)
        return RatMatrix(self.rows, self.cols, tuple(a - b for a, b in pairs))

    def __neg__(self) -> "RatMatrix":
        return self.map(lambda e: -e)

    def __mul__(self, scalar: Entry) -> "RatMatrix":
        if isinstance(scalar, RatMatrix):
            return NotImplemented
        factor = _as_ratfun(scalar)
        return self.map(lambda e: e * factor)

    __rmul__ = __mul__

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise exceptions.ShapeError(
                f"cannot multiply a {self.rows}x{self.cols} by a {other.rows}x{other.cols} matrix"
            )

        entries = []
        for r in range(self.rows):
            left = self.row(r)
            for c in range(other.cols):
                total = _ZERO
                for k, a in enumerate(left):
                    if a:
                        b = other.entries[k * other.cols + c]
                        if b:
                            total = total + a * b
                entries.append(total)
        return RatMatrix(self.rows, other.cols, tuple(entries))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __str__(self) -> str:
        rendered_rows = (", ".join(str(e) for e in self.row(r)) for r in range(self.rows))
        return "\n".join(f"[{row}]" for row in rendered_rows)

    def _require_same_shape(self, other: "RatMatrix"):
        if self.shape != other.shape:
            raise exceptions.ShapeError(f"shapes {self.shape} and {other.shape} differ")

    def _require_square(self, operation: str):
        if not self.is_square:
            raise exceptions.ShapeError(f"{operation} needs a square matrix, got {self.shape}")


def mat_det(m: RatMatrix) -> RatFun:
    """Exact determinant of a square matrix over Z(T).

    Parameters
    ----------
    m: pertalex.ring.RatMatrix
        Square matrix.

    Returns
    -------
    det: pertalex.ring.RatFun
        The determinant in canonical form.

    Raises
    ------
    pertalex.exceptions.ShapeError
        if m is not square.
    """
    m._require_square("a determinant")
    lifted, scales = _lift(m)
    return _scaled_ratfun(_elimination.determinant(lifted), _product(scales))


def mat_adjugate(m: RatMatrix) -> RatMatrix:
    """Exact adjugate, satisfying ``m @ mat_adjugate(m) == mat_det(m) * I``.

    Raises
    ------
    pertalex.exceptions.ShapeError
        if m is not square.
    """
    return _adjugate_and_det(m)[0]


def mat_inverse(m: RatMatrix) -> RatMatrix:
    """Exact inverse ``adj(m) / det(m)``.

    Raises
    ------
    pertalex.exceptions.ShapeError
        if m is not square.
    pertalex.exceptions.SingularMatrixError
        if det(m) is zero.
    """
    adjugate_matrix, determinant = _adjugate_and_det(m)
    if not determinant:
        raise exceptions.SingularMatrixError(f"the {m.rows}x{m.cols} matrix is singular")
    inverse_det = RatFun(LaurentPoly.constant(1)) / determinant
    return adjugate_matrix * inverse_det


def mat_adjugate_and_det(m: RatMatrix) -> t.Tuple[RatMatrix, RatFun]:
    """Return ``(mat_adjugate(m), mat_det(m))`` from a single elimination."""
    return _adjugate_and_det(m)


def _adjugate_and_det(m: RatMatrix) -> t.Tuple[RatMatrix, RatFun]:
    m._require_square("an adjugate")
    size = m.rows
    lifted, scales = _lift(m)
    adjugate_lifted, determinant_lifted = _elimination.adjugate(lifted)
    total_scale = _product(scales)

    # m = diag(scales)^-1 * lifted, so adj(m) = adj(lifted) * diag(scales) / prod(scales).
    entries = []
    for r in range(size):
        for c in range(size):
            numerator = adjugate_lifted[r][c]
            entries.append(
                _scaled_ratfun(numerator, total_scale, scales[c]) if numerator else _ZERO
            )

    return RatMatrix(size, size, tuple(entries)), _scaled_ratfun(determinant_lifted, total_scale)


# A row scale is T^shift * poly, kept as (shift, dup).
_Scale = t.Tuple[int, _dense.Dup]


def _lift(m: RatMatrix) -> t.Tuple[_elimination.DupMatrix, t.List[_Scale]]:
    """Multiply each row by the lcm of its denominators and a power of T to land in Z[T]."""
    lifted = []
    scales = []
    for r in range(m.rows):
        row = m.row(r)

        common: _dense.Dup = _dense.ONE
        for entry in row:
            if entry:
                common = _dense.lcm(common, entry.den.to_dup()[1])

        polys = []
        for entry in row:
            if not entry:
                polys.append(LaurentPoly())
                continue
            cofactor = _dense.exquo(common, entry.den.to_dup()[1])
            polys.append(entry.num * LaurentPoly.from_dup(cofactor))

        lowest = min((p.to_dup()[0] for p in polys if p), default=0)
        shift = max(0, -lowest)
        dense_row = []
        for poly in polys:
            if not poly:
                dense_row.append([])
                continue
            low, dense = poly.to_dup()
            dense_row.append(_dense.mul(dense, _dense.monomial(low + shift)))
        lifted.append(dense_row)
        scales.append((shift, common))
    return lifted, scales


def _product(scales: t.Sequence[_Scale]) -> _Scale:
    shift = 0
    poly: _dense.Dup = _dense.ONE
    for s, p in scales:
        shift += s
        poly = _dense.mul(poly, p)
    return shift, poly


def _scaled_ratfun(
    numerator: _dense.Dup, denominator: _Scale, factor: _Scale = (0, _dense.ONE)
) -> RatFun:
    if not numerator:
        return _ZERO
    return RatFun(
        LaurentPoly.from_dup(_dense.mul(numerator, factor[1]), factor[0]),
        LaurentPoly.from_dup(denominator[1], denominator[0]),
    )


def _as_ratfun(value: Entry) -> RatFun:
    if isinstance(value, RatFun):
        return value
    if isinstance(value, LaurentPoly):
        return RatFun(value)
    if isinstance(value, int):
        return RatFun(LaurentPoly.constant(value))
    raise TypeError(
        f"matrix entries must be RatFun, LaurentPoly or int, got {type(value).__name__}"
    )
