"""Action of the main generators on mod-2 first homology (dimension 4).

Basis vectors e1..e4 are the classes of the one-sided curves mu1..mu4; the
mod-2 intersection pairing is the standard dot product.  Matrices act on
column vectors and a word ``g1 g2`` maps to ``M(g1) @ M(g2)``.
"""

from __future__ import annotations

from collections import deque
from typing import Mapping

from .presentation import FinitePresentation
from .words import MissingImage, Word

DIM = 4

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


class NoSolution(ArithmeticError):
    pass


class NonInvertibleImage(ArithmeticError):
    pass


def vec(*bits: int) -> Vector:
    if len(bits) == 1 and isinstance(bits[0], str):
        bits = tuple(int(b) for b in bits[0])
    assert len(bits) == DIM
    return tuple(b & 1 for b in bits)


def basis(i: int) -> Vector:
    return tuple(int(j == i) for j in range(DIM))


def all_vectors() -> list[Vector]:
    return [tuple((k >> (DIM - 1 - j)) & 1 for j in range(DIM)) for k in range(2**DIM)]


def add(x: Vector, y: Vector) -> Vector:
    return tuple(a ^ b for a, b in zip(x, y))


def pairing(x: Vector, y: Vector) -> int:
    return sum(a & b for a, b in zip(x, y)) & 1


def identity() -> Matrix:
    return tuple(basis(i) for i in range(DIM))


def matmul(A: Matrix, B: Matrix) -> Matrix:
    n = len(B[0])
    return tuple(
        tuple(sum(A[i][k] & B[k][j] for k in range(len(B))) & 1 for j in range(n))
        for i in range(len(A))
    )


def apply(M: Matrix, x: Vector) -> Vector:
    return tuple(sum(M[i][k] & x[k] for k in range(DIM)) & 1 for i in range(DIM))


def inverse(M: Matrix) -> Matrix:
    n = len(M)
    A = [list(M[i]) + list(basis(i)) for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            raise NonInvertibleImage("singular matrix")
        A[c], A[piv] = A[piv], A[c]
        for r in range(n):
            if r != c and A[r][c]:
                A[r] = [a ^ b for a, b in zip(A[r], A[c])]
    return tuple(tuple(row[n:]) for row in A)


def transvection(c: Vector) -> Matrix:
    """x -> x + <x, c> c."""
    return tuple(tuple(int(r == i) ^ (c[i] & c[r]) for i in range(DIM)) for r in range(DIM))


def transposition(i: int, j: int) -> Matrix:
    """Permutation matrix swapping e_i and e_j (0-based)."""
    perm = list(range(DIM))
    perm[i], perm[j] = j, i
    return tuple(tuple(int(perm[col] == row) for col in range(DIM)) for row in range(DIM))


def preserves_pairing(M: Matrix) -> bool:
    vs = all_vectors()
    return all(pairing(apply(M, x), apply(M, y)) == pairing(x, y) for x in vs for y in vs)


CURVE_CLASSES = {
    "alpha1": vec("1100"),
    "alpha2": vec("0110"),
    "alpha3": vec("0011"),
    "beta": vec("1111"),
}


def solve_alpha4(a2: Matrix, u3: Matrix) -> Vector:
    """Class c with transvection(a2 c) == transvection(u3 [alpha2])."""
    target = transvection(apply(u3, CURVE_CLASSES["alpha2"]))
    sols = [c for c in all_vectors() if transvection(apply(a2, c)) == target]
    if len(sols) != 1:
        raise NoSolution(f"{len(sols)} solutions for the alpha4 class")
    return sols[0]


def derive_assignment() -> dict[str, Matrix]:
    rep: dict[str, Matrix] = {}
    for i in (1, 2, 3):
        rep[f"a{i}"] = transvection(CURVE_CLASSES[f"alpha{i}"])
        rep[f"u{i}"] = transposition(i - 1, i)
        # u = a y with y trivial mod 2
        if rep[f"u{i}"] != rep[f"a{i}"]:
            raise NoSolution(f"crosscap slide y{i} acts non-trivially")
    rep["b"] = transvection(CURVE_CLASSES["beta"])
    rep["t"] = identity()
    rep["a4"] = transvection(solve_alpha4(rep["a2"], rep["u3"]))
    return rep


def word_matrix(word: Word, rep: Mapping[str, Matrix]) -> Matrix:
    M = identity()
    inv_cache: dict[str, Matrix] = {}
    for name, e in word:
        try:
            g = rep[name]
        except KeyError:
            raise MissingImage(name) from None
        if e == -1:
            if name not in inv_cache:
                inv_cache[name] = inverse(g)
            g = inv_cache[name]
        M = matmul(M, g)
    return M


def verify_relations(P: FinitePresentation, rep: Mapping[str, Matrix]) -> list[tuple[str, bool]]:
    missing = [g for g in P.generators if g not in rep]
    if missing:
        raise MissingImage(missing[0])
    I = identity()
    return [(name, word_matrix(r, rep) == I) for name, r in P.relators]


def image_order(rep: Mapping[str, Matrix]) -> int:
    gens = []
    for M in rep.values():
        try:
            inverse(M)
        except NonInvertibleImage:
            raise NonInvertibleImage("generator image is singular") from None
        gens.append(M)
    start = identity()
    seen = {start}
    queue = deque([start])
    while queue:
        X = queue.popleft()
        for g in gens:
            Y = matmul(X, g)
            if Y not in seen:
                seen.add(Y)
                queue.append(Y)
    return len(seen)


def flip_bit(M: Matrix, row: int, col: int) -> Matrix:
    return tuple(
        tuple(v ^ int(r == row and c == col) for c, v in enumerate(line)) for r, line in enumerate(M)
    )
