"""Exact integer linear algebra."""

from __future__ import annotations

from typing import Sequence


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination.

    Every intermediate entry is a minor of the input, so the divisions are
    exact and no entry outgrows the Hadamard bound. Zero entries below the
    pivot are skipped, which pays off on the sparse Goeritz and Laplacian
    matrices this is used for.
    """
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            f = row_i[k]
            if f == 0:
                if pivot != prev:
                    for j in range(k + 1, n):
                        v = row_i[j]
                        if v:
                            row_i[j] = v * pivot // prev
            else:
                for j in range(k + 1, n):
                    row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
                row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def laplacian_minor(n_vertices: int, edges: Sequence[tuple[int, int]], drop: int = 0) -> list[list[int]]:
    """Reduced graph Laplacian with row/column ``drop`` removed; loops ignored."""
    L = [[0] * n_vertices for _ in range(n_vertices)]
    for u, v in edges:
        if u == v:
            continue
        L[u][u] += 1
        L[v][v] += 1
        L[u][v] -= 1
        L[v][u] -= 1
    keep = [i for i in range(n_vertices) if i != drop]
    return [[L[i][j] for j in keep] for i in keep]


def spanning_tree_count(n_vertices: int, edges: Sequence[tuple[int, int]]) -> int:
    """Matrix-tree theorem count for a multigraph on ``range(n_vertices)``."""
    if n_vertices <= 1:
        return 1
    return bareiss_det(laplacian_minor(n_vertices, edges))
