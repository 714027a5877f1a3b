"""Exact linear algebra over the rationals: incremental echelon bases and rank."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence


class EchelonBasis:
    """Row-echelon basis of a growing span of sparse rational vectors.

    Vectors are dicts from coordinate to Fraction.  ``add`` reduces a vector
    against the basis and keeps it if something survives.
    """

    def __init__(self):
        self.pivots: Dict[object, Dict[object, Fraction]] = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, vec: Dict[object, Fraction]) -> Dict[object, Fraction]:
        vec = {k: Fraction(c) for k, c in vec.items() if c}
        for pivot, row in self.pivots.items():
            c = vec.get(pivot)
            if c:
                for k, r in row.items():
                    value = vec.get(k, Fraction(0)) - c * r
                    if value:
                        vec[k] = value
                    else:
                        vec.pop(k, None)
        return vec

    def add(self, vec: Dict[object, Fraction]) -> bool:
        vec = self.reduce(vec)
        if not vec:
            return False
        pivot = min(vec)
        scale = vec[pivot]
        row = {k: c / scale for k, c in vec.items()}
        # keep existing rows reduced against the new pivot
        for other in self.pivots.values():
            c = other.get(pivot)
            if c:
                for k, r in row.items():
                    value = other.get(k, Fraction(0)) - c * r
                    if value:
                        other[k] = value
                    else:
                        other.pop(k, None)
        self.pivots[pivot] = row
        return True

    def contains(self, vec: Dict[object, Fraction]) -> bool:
        return not self.reduce(vec)


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    basis = EchelonBasis()
    for row in rows:
        basis.add({k: c for k, c in enumerate(row) if c})
    return len(basis)


def solve_combination(target: Dict[object, Fraction], vectors: Sequence[Dict[object, Fraction]]):
    """Coefficients ``c`` with ``sum c_i vectors[i] == target``, or ``None``.

    Plain Gaussian elimination on the augmented system, exact.
    """
    keys = sorted({k for v in vectors for k in v} | set(target), key=repr)
    n = len(vectors)
    matrix: List[List[Fraction]] = [
        [Fraction(v.get(k, 0)) for v in vectors] + [Fraction(target.get(k, 0))] for k in keys
    ]
    pivot_cols = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][col]), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        lead = matrix[r][col]
        matrix[r] = [x / lead for x in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][col]:
                f = matrix[i][col]
                matrix[i] = [a - f * b for a, b in zip(matrix[i], matrix[r])]
        pivot_cols.append(col)
        r += 1
    if any(row[n] for row in matrix[r:]):
        return None
    solution = [Fraction(0)] * n
    for i, col in enumerate(pivot_cols):
        solution[col] = matrix[i][n]
    return solution
