"""Recompute the frozen derived values by routes independent of the library code.

    python3 scripts/oracle_values.py

* order of the mod 2 image, by closing the generator matrices under
  multiplication with rows packed into bitmasks;
* the alpha4 class, by brute force over all 16 vectors;
* |Hom(main, Z2)| and |Hom(main, Z3)|, by brute force.
"""

from __future__ import annotations

import itertools

from fpg.datasets import builtin
from fpg.gf2 import derive_assignment
from fpg.verify import hom_count


def as_rows(M):
    return tuple(int("".join(map(str, row)), 2) for row in M)


def mul_rows(A, B):
    # rows as bitmasks; (AB)_i = xor of rows of B selected by row i of A
    out = []
    for a in A:
        acc = 0
        for j, b in enumerate(B):
            if a >> (len(B) - 1 - j) & 1:
                acc ^= b
        out.append(acc)
    return tuple(out)


def group_order(mats) -> int:
    ident = tuple(1 << (3 - i) for i in range(4))
    seen, frontier = {ident}, [ident]
    while frontier:
        x = frontier.pop()
        for m in mats:
            y = mul_rows(x, m)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return len(seen)


def alpha4_candidates(rep) -> list[tuple[int, ...]]:
    # the alpha4 class is any c whose transvection equals the image of a4
    target = as_rows(rep["a4"])
    found = []
    for c in itertools.product((0, 1), repeat=4):
        T = [[(int(i == j) + c[i] * c[j]) % 2 for j in range(4)] for i in range(4)]
        if as_rows(T) == target:
            found.append(c)
    return found


def main() -> None:
    rep = derive_assignment()
    print("image order:", group_order([as_rows(M) for M in rep.values()]))
    print("alpha4 candidates:", alpha4_candidates(rep))
    P = builtin("main")
    print("|Hom(main, Z2)| =", hom_count(P, 2))
    print("|Hom(main, Z3)| =", hom_count(P, 3))


if __name__ == "__main__":
    main()
