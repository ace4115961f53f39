"""
Exact dense matrices over the rationals
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .exceptions import ShapeMismatch


@dataclass(frozen=True)
class Matrix:
    rows: Tuple[Tuple[Fraction, ...], ...]

    @classmethod
    def from_sparse_rows(cls, rows: Sequence[Dict[int, Fraction]], columns: int) -> 'Matrix':
        return cls(tuple(tuple(row.get(c, Fraction(0)) for c in range(columns)) for row in rows))

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence]) -> 'Matrix':
        return cls(tuple(tuple(Fraction(v) for v in row) for row in rows))

    @classmethod
    def identity(cls, size: int) -> 'Matrix':
        return cls(tuple(tuple(Fraction(int(r == c)) for c in range(size)) for r in range(size)))

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def __getitem__(self, position: Tuple[int, int]) -> Fraction:
        r, c = position
        return self.rows[r][c]

    def __matmul__(self, other: 'Matrix') -> 'Matrix':
        if self.shape[1] != other.shape[0]:
            raise ShapeMismatch(f"Cannot multiply {self.shape} by {other.shape}")
        columns = list(zip(*other.rows)) if other.rows else []
        result = []
        for row in self.rows:
            nonzero = [(i, a) for i, a in enumerate(row) if a]
            result.append(tuple(sum((a * column[i] for i, a in nonzero), Fraction(0)) for column in columns))
        return Matrix(tuple(result))

    def apply(self, vector: Sequence[Fraction]) -> List[Fraction]:
        if self.shape[1] != len(vector):
            raise ShapeMismatch(f"Cannot apply a {self.shape} matrix to a vector of length {len(vector)}")
        return [sum((a * v for a, v in zip(row, vector) if a), Fraction(0)) for row in self.rows]

    def transpose(self) -> 'Matrix':
        return Matrix(tuple(zip(*self.rows)))

    def row_sums(self) -> List[Fraction]:
        return [sum(row, Fraction(0)) for row in self.rows]

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for row in self.rows for v in row)

    def __str__(self):
        return '\n'.join(' '.join(str(v) for v in row) for row in self.rows)
