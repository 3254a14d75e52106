"""Exponent-sum matrices, Smith normal form and abelian invariants."""

from __future__ import annotations

from dataclasses import dataclass

from .presentation import FinitePresentation

IntMatrix = list[list[int]]


@dataclass(frozen=True)
class AbelianInvariants:
    torsion: tuple[int, ...]
    free_rank: int

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion must form a divisibility chain")
        if any(d < 2 for d in self.torsion) or self.free_rank < 0:
            raise ValueError("bad invariants")

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "1"


@dataclass(frozen=True)
class SnfResult:
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: IntMatrix, B: IntMatrix, inner: int | None = None) -> IntMatrix:
    if inner is None:
        inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(A))]


def det(A: IntMatrix) -> int:
    """Exact integer determinant (fraction-free Bareiss)."""
    n = len(A)
    if n == 0:
        return 1
    M = [row[:] for row in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k]:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def exponent_matrix(P: FinitePresentation) -> IntMatrix:
    col = {g: j for j, g in enumerate(P.generators)}
    rows = []
    for _, r in P.relators:
        row = [0] * len(P.generators)
        for name, e in r:
            row[col[name]] += e
        rows.append(row)
    return rows


def smith_normal_form(A: IntMatrix, cols: int | None = None) -> SnfResult:
    m = len(A)
    n = cols if cols is not None else (len(A[0]) if A else 0)
    D = [list(map(int, row)) for row in A]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row[dst] += q * row[src]
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, q):
        for M in (D, V):
            for row in M:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    v = D[i][j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
            if best is None:
                break
            _, i, j = best
            if i != t:
                swap_rows(i, t)
            if j != t:
                swap_cols(j, t)
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(t, i, -(D[i][t] // p))
                    dirty |= D[i][t] != 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(t, j, -(D[t][j] // p))
                    dirty |= D[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return SnfResult(U, D, V)


def invariants_from_diagonal(diag: list[int], ngens: int) -> AbelianInvariants:
    nz = [abs(d) for d in diag if d]
    return AbelianInvariants(tuple(d for d in nz if d > 1), ngens - len(nz))


def abelianization(P: FinitePresentation) -> AbelianInvariants:
    A = exponent_matrix(P)
    n = len(P.generators)
    if not A or n == 0:
        return AbelianInvariants((), n)
    res = smith_normal_form(A, n)
    return invariants_from_diagonal(res.diagonal, n)
