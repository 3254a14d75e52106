"""Pre-build generation of the frozen certificate corpus.

Each claim is proved by rewriting along a hand-transcribed chain of
intermediate words; every link is found by a bounded bidirectional search
restricted to a few hinted relators (or previously proved lemmas).  Lemma
factors are then inlined so each stored certificate only names relators of
its presentation.

    python3 scripts/build_corpus.py [--only NAME ...] [--dry-run]
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path

from fpg.consequence import (
    Certificate,
    check_certificate,
    format_certificate,
    greedy_reduce,
    inline_lemmas,
    search_derivation,
)
from fpg.datasets import builtin
from fpg.words import Word

logging.getLogger("fpg").setLevel(logging.ERROR)

OUT = Path(__file__).resolve().parents[1] / "src" / "fpg" / "data" / "corpus"

A = "a1 a2 a3"
S = f"{A} {A}"
Ai = "a3^-1 a2^-1 a1^-1"
Si = f"{Ai} {Ai}"


def W(text: str) -> Word:
    return Word.parse(text)


class Prover:
    def __init__(self, dataset: str = "main"):
        self.dataset = dataset
        self.base = builtin(dataset)
        self.aug = self.base
        self.lemmas: dict[str, tuple[Word, Certificate]] = {}
        self.results: dict[str, tuple[Word, Certificate, str]] = {}
        self.verbose = False

    def names(self, hints: str) -> list[str]:
        out = []
        for h in hints.split():
            out.append(h if h.startswith("L.") else f"{self.dataset}.{h}")
        return out

    def _store(self, name, target, cert, claim, lemma):
        cert = inline_lemmas(cert, self.lemmas)
        if not check_certificate(self.base, target, cert):
            raise AssertionError(f"{name}: certificate does not check")
        if lemma:
            self.lemmas[f"L.{name}"] = (target, cert)
            self.aug = self.aug.with_relators([(f"L.{name}", target)])
        if claim:
            self.results[name] = (target, cert, claim)
        print(f"  {name}: {len(cert)} factors", flush=True)
        return cert

    def chain(self, name, lhs, steps, rhs=None, claim="", lemma=False):
        """``lhs = w1 = ... = wk``; each step is ``(word, hints, max_steps)``."""
        prev = W(lhs)
        cert = Certificate()
        for word, hints, depth, *extra in steps:
            slack = extra[0] if extra else 2
            nxt = W(word)
            t0 = time.time()
            res = search_derivation(self.aug, prev, nxt, self.names(hints), max_steps=depth,
                                    max_len=max(len(prev), len(nxt)) + slack)
            if res is None:
                raise LookupError(f"{name}: no link {prev} -> {nxt} via {hints} in {time.time() - t0:.1f}s")
            if self.verbose:
                print(f"    {hints:>16} {res.explored:>8} nodes {time.time() - t0:6.2f}s  -> {nxt}", flush=True)
            cert = cert + res.certificate
            prev = nxt
        target = W(lhs) * ~(W(rhs) if rhs is not None else prev)
        if rhs is not None and prev != W(rhs):
            raise AssertionError(f"{name}: chain does not end at rhs")
        return self._store(name, target, cert, claim, lemma)

    def greedy(self, name, target, hints=None, claim="", lemma=False, slack=6):
        target = W(target) if isinstance(target, str) else target
        rels = None if hints is None else self.names(hints)
        cert = greedy_reduce(self.aug, target, rels, max_len=len(target) + slack, max_nodes=300_000)
        if cert is None:
            raise LookupError(f"{name}: greedy search failed")
        return self._store(name, target, cert, claim, lemma)


def rel(lhs: str, rhs: str = "1") -> Word:
    return W(lhs) * ~W(rhs)


def build(pr: Prover):
    # (a3^2 a2 a4)^3 = 1 uses only three of the base relators
    pr.greedy("prop51", rel(" ".join(["a3 a3 a2 a4"] * 3)), "2 4a 4b 4c 6",
              claim="(a3^2 a2 a4)^3 = 1", lemma=True)
    pr.greedy("u2b", rel("u2^-1 b u2^-1 b"), "3b 3c 11 16", claim="(u2^-1 b)^2 = 1", lemma=True)
    pr.greedy("stab_mu1.xiii", rel("u2 a2 u2^-1", "a2^-1"), "16 4b 8",
              claim="u2 a2 u2^-1 = a2^-1", lemma=True)
    pr.chain("stab_mu1.xiv", "t u2 t", [
        ("t a3^-1 a2^-1 u3^-1 a2 a3 t", "16", 2),
        ("a3^-1 a2^-1 t u3^-1 t a2 a3", "21b 21c", 4),
        ("a3^-1 a2^-1 u3 a2 a3", "18 19", 4),
        ("u2^-1", "16", 1),
    ], claim="t u2 t = u2^-1", lemma=True)

    # both sides are brought to A^-1 (...) A with A = a1 a2 a3
    pr.chain("RT12", "u1 u2 u1", [
        (f"{S} u3 {S} a3^-1 a2^-1 u3^-1 a2 a3 {S} u3 {S}", "15 16", 3),
        (f"{Ai} a3^-1 a2^-1 u3 a2 a3 u3^-1 a3^-1 a2^-1 u3 a2 a3 {A}", "5 7", 6, 4),
        (f"{Ai} a3^-1 a4^-1 a2^-1 a3^-1 a3^-1 a2^-1 u3 a2 a3 {A}", "8 9", 4, 4),
        (f"{Ai} a3 a4 a2 a4 a2^-1 a3 a3 a2 a4 a2^-1 u3 a2 a3 {A}", "L.prop51 4c", 3, 6),
        (f"{Ai} a3 a4 u3 a2^-1 a3^-1 {A}", "8 9", 6, 4),
        (f"{Ai} u3^-1 a3^-1 a4^-1 a2^-1 a3^-1 {A}", "8 10", 4),
        (f"{Ai} u3^-1 a3^-1 a2^-1 u3 a2 a3 u3^-1 {A}", "8 9", 4, 4),
        (f"a3^-1 a2^-1 u3^-1 a2 a3 {S} u3 {S} a3^-1 a2^-1 u3^-1 a2 a3", "5 7", 6, 4),
        ("u2 u1 u2", "15 16", 3),
    ], claim="u1 u2 u1 = u2 u1 u2", lemma=True)

    # conjugation by A = a1 a2 a3 and S = A^2
    pr.chain("Aa1", f"{A} a1", [("a1 a2 a1 a3", "1", 1), (f"a2 {A}", "4a", 1)], lemma=True)
    pr.chain("Ab", f"{A} b", [(f"b {A}", "3a 3b 3c", 3)], lemma=True)
    pr.chain("Aa2", f"{A} a2", [("a1 a3 a2 a3", "4b", 1), (f"a3 {A}", "1", 1)], lemma=True)
    pr.chain("Sa1", f"{S} a1 {Si}", [(f"{A} a2 {A} {Si}", "L.Aa1", 1), ("a3", "L.Aa2", 1)], lemma=True)
    pr.chain("Sa3", f"{S} a3 {Si}", [(f"{Si} a3 {S}", "5", 2, 12), ("a1", "L.Sa1", 1)], lemma=True)
    pr.chain("tA", "t", [(f"{A} t {Ai}", "21a 21b 21c", 3, 6), (f"{A} u3 u2 u1", "17", 1)], lemma=True)

    # stabilizer of delta
    pr.chain("stab_delta.i", "u1 a1 u1^-1", [
        (f"{S} u3 {S} a1 {Si} u3^-1 {Si}", "15", 2, 30),
        (f"{S} u3 a3 u3^-1 {Si}", "L.Sa1", 1),
        (f"{S} a3^-1 {Si}", "8", 1),
        ("a1^-1", "L.Sa3", 1),
    ], claim="u1 a1 u1^-1 = a1^-1", lemma=True)
    pr.chain("stab_delta.vi", "u1 a3 u1^-1", [
        (f"{S} u3 {S} a3 {Si} u3^-1 {Si}", "15", 2, 30),
        (f"{S} u3 a1 u3^-1 {Si}", "L.Sa3", 1),
        (f"{S} a1 {Si}", "7", 1),
        ("a3", "L.Sa1", 1),
    ], claim="u1 a3 u1^-1 = a3", lemma=True)

    # stabilizer of beta with w = u1^-1 u3
    w = "u1^-1 u3"
    pr.greedy("wswap", rel(w, "u1 u3^-1"), "13 14", lemma=True)
    pr.greedy("stab_beta.xiii", rel(f"{w} {w}"), "13 14", claim="w^2 = 1", lemma=True)
    pr.chain("stab_beta.xiv", f"{w} a1 {w}", [
        ("u1^-1 a1 u3 u1^-1 u3", "7", 1),
        ("u1^-1 a1 u1^-1 u3 u3", "13", 2),
        ("u1^-1 a1 u1", "14", 1, 4),
        ("a1^-1", "L.stab_delta.i", 1),
    ], claim="w a1 w = a1^-1", lemma=True)
    pr.chain("stab_beta.xvi", f"{w} a3 {w}", [
        ("u1^-1 u3 a3 u3 u1^-1", "13", 2),
        ("u1^-1 a3^-1 u3 u3 u1^-1", "8", 1, 4),
        ("u1^-1 a3^-1 u1", "14", 1, 4),
        ("a3^-1", "L.stab_delta.vi", 1),
    ], claim="w a3 w = a3^-1", lemma=True)
    pr.greedy("stab_beta.xvii", rel(f"{w} a2 {w}", "a1 a3^-1 a2^-1 a3 a1^-1"),
              claim="w a2 w = a1 a3^-1 a2^-1 a3 a1^-1", lemma=True)

    # a2^-1 u1 u2 u1 a2 = a3 w' t with w' = u1 u3^-1
    pr.chain("local1", "a2^-1 u1 u2 u1 a2", [
        (f"a2^-1 u1 u3^-1 {Ai} t a2", "L.tA", 1, 6),
        (f"a2^-1 {w} {Ai} a2 t", "21b L.wswap", 2),
        (f"a2^-1 a3 {w} a2^-1 a1^-1 a2 t", "L.stab_beta.xvi L.stab_beta.xiii", 3, 4),
        (f"a2^-1 a3 a1 a3^-1 a2 a3 a1^-1 {w} a1^-1 a2 t", "L.stab_beta.xvii L.stab_beta.xiii", 3, 6),
        (f"a2^-1 a3 a1 a3^-1 a2 a3 a1^-1 a1 a1 a3^-1 a2^-1 a3 a1^-1 {w} t",
         "L.stab_beta.xiv L.stab_beta.xvii L.stab_beta.xiii", 4, 6),
        (f"a3 {w} t", "1 4a", 4, 4),
        ("a3 u1 u3^-1 t", "L.wswap", 1),
    ], claim="a2^-1 u1 u2 u1 a2 = a3 u1 u3^-1 t", lemma=True)

    # stabilizer of mu1: u2 a2 rewritten, t u2^-1 = u2 t
    pr.chain("u2a2", "u2 a2", [
        ("a3^-1 a2^-1 u3^-1 a2 a3 a2", "16", 1),
        ("a3^-1 a2^-1 u3^-1 a3 a2 a3", "4b", 1),
        ("a3^-1 a2^-1 a3^-1 u3^-1 a2 a3", "8", 1, 4),
    ], lemma=True)

    # edge identities
    pr.chain("E1", "u1 a1", [("u2^-1 u3^-1 t a3^-1 a2^-1", "17", 1, 8)],
             claim="u1 a1 = u2^-1 u3^-1 t a3^-1 a2^-1", lemma=True)
    pr.chain("tB", "t", [("a2 a3 t a3^-1 a2^-1", "21b 21c", 2, 4), ("a2 a3 u3 u2 u1 a1", "17", 1, 4)],
             lemma=True)
    pr.chain("E2", "a3 a3 a2 a3 a3 a2", [
        ("a3 a2 a3 a2 a3 a2", "4b", 1),
        ("a3 a2 a3 a3 a2 a3", "4b", 1),
        ("a3 a2 a3 a3 a2 a4 a3 a4^-1", "2", 1),
        ("a3 a2 a3 u3 a3^-1 a2^-1 u3^-1 a2 a3 a4^-1", "8 9", 3, 4),
        ("a3 a2 a3 u3 u2 a4^-1", "16", 1),
        ("a3 t a1^-1 u1^-1 a4^-1", "L.tB", 1, 4),
    ], claim="(a3^2 a2)^2 = a3 t a1^-1 u1^-1 a4^-1")
    pr.greedy("E6", rel("u3 u2 u3", f"{Ai} t u1^-1 u3"), claim="u3 u2 u3 = (a1 a2 a3)^-1 t u1^-1 u3")

    # loop E8, g = s = (a1 a2 a3)^2
    pr.chain("E8.a1", f"{Si} a1 {S}", [(f"{S} a1 {Si}", "5", 2, 12), ("a3", "L.Sa1", 1)],
             claim="s^-1 a1 s = a3")
    pr.chain("E8.a3", f"{Si} a3 {S}", [(f"{S} a3 {Si}", "5", 2, 12), ("a1", "L.Sa3", 1)],
             claim="s^-1 a3 s = a1")
    pr.chain("E8.b", f"{Si} b {S}", [("b", "L.Ab", 2, 8)], claim="s^-1 b s = b")
    pr.chain("E8.u1", f"{Si} u1 {S}", [(f"{Si} {S} u3 {S} {S}", "15", 1, 12), ("u3", "5", 1)],
             claim="s^-1 u1 s = u3")
    pr.chain("E8.u3", f"{Si} u3 {S}", [(f"{S} u3 {S}", "5", 2, 12), ("u1", "15", 1)],
             claim="s^-1 u3 s = u1")
    pr.chain("E8.t", f"{Si} t {S}", [("t", "21a 21b 21c", 6, 4)], claim="s^-1 t s = t")

    # loop E9, g = a2^-1 u2^-1
    pr.greedy("E9.a4", rel("u2 a2 a4 a2^-1 u2^-1", "a3^-1"), claim="u2 a2 a4 a2^-1 u2^-1 = a3^-1")
    pr.chain("E9.a3", "u2 a2 a3 a2^-1 u2^-1", [
        ("a3^-1 a2^-1 a3^-1 u3^-1 a2 a3 a2^-1 u3 a3 a2 a3", "L.u2a2", 2),
        ("a3^-1 a2^-1 a3^-1 u3^-1 a3^-1 a2 a3 u3 a3 a2 a3", "4b", 1),
        ("a3^-1 a2^-1 u3^-1 a2 u3 a2 a3", "8", 2, 4),
        ("a3^-1 a2^-1 t u3 t a2 t u3^-1 t a2 a3", "18 19", 4, 6),
        ("a3^-1 a2^-1 t u3 a2 u3^-1 t a2 a3", "21b 18", 3, 4),
        ("a3^-1 a2^-1 t a2 a4^-1 a2^-1 t a2 a3", "9", 1, 4),
        ("a3^-1 t a4^-1 t a3", "21b", 2, 4),
        ("t a4^-1 t", "21c 2", 4, 4),
    ], claim="u2 a2 a3 a2^-1 u2^-1 = t a4^-1 t")
    pr.chain("E9.u3b", "u2 a2 u3 b a2^-1 u2^-1", [
        ("a2^-1 u2 u3 b u2^-1 a2", "L.stab_mu1.xiii", 2, 4),
        ("a2^-1 u2 u3 u2 b^-1 a2", "L.u2b", 1),
        ("a2^-1 u2 u3 u2 a2 b^-1", "3b", 1),
        ("a2^-1 a3^-1 a2^-1 u3^-1 a2 a3 u3 a3^-1 a2^-1 u3^-1 a2 a3 a2 b^-1", "16", 2),
        ("a3^-1 a2^-1 a3^-1 u3^-1 a2 a3 a3 u3 a2^-1 u3^-1 a2 a3 a2 b^-1", "4b 8", 4, 4),
        ("a3^-1 a2^-1 u3^-1 a3 a2 a3 a3 a2 a4 a3 a2 b^-1", "8 9", 4, 4),
        ("a3^-1 u3^-1 a2 a4 a2^-1 a3 a2 a3 a3 a2 a4 a3 a2 b^-1", "9", 1, 4),
        ("a3^-1 u3^-1 a2 a4 a3 a2 a3 a2 a4 a3 a2 b^-1", "4b", 1),
        ("a3^-1 u3^-1 a2 a4 a3 a3 a2 a3 a4 a3 a2 b^-1", "4b", 1),
        ("a3^-1 u3^-1 a3^-1 a3^-1 a4^-1 b^-1", "2 L.prop51", 4, 4),
        ("u3^-1 a3^-1 a4^-1 b^-1", "8", 1, 4),
    ], claim="u2 a2 u3 b a2^-1 u2^-1 = (b a4 a3 u3)^-1")
    pr.chain("E9.u1b", "u2 a2 u1 b a2^-1 u2^-1", [
        ("a2^-1 u2 u1 b u2^-1 a2", "L.stab_mu1.xiii", 2, 4),
        ("a2^-1 u2 u1 u2 b^-1 a2", "L.u2b", 1),
        ("a2^-1 u1 u2 u1 b^-1 a2", "L.RT12", 1),
        ("a2^-1 u1 u2 u1 a2 b^-1", "3b", 1),
        ("a3 u1 u3^-1 t b^-1", "L.local1", 1),
    ], claim="u2 a2 u1 b a2^-1 u2^-1 = a3 u1 u3^-1 t b^-1")
    pr.chain("E9.u1t", "u2 a2 u1 t a2^-1 u2^-1", [
        ("a2^-1 u2 u1 t u2^-1 a2", "L.stab_mu1.xiii", 2, 4),
        ("a2^-1 u2 u1 u2 t a2", "L.stab_mu1.xiv 18", 3, 4),
        ("a2^-1 u1 u2 u1 t a2", "L.RT12", 1),
        ("a2^-1 u1 u2 u1 a2 t", "21b", 1),
        ("a3 u1 u3^-1", "L.local1 18", 2, 4),
    ], claim="u2 a2 u1 t a2^-1 u2^-1 = a3 u1 u3^-1")

    # loop E10, g = u1
    pr.chain("E10.u3", "u1^-1 u3 u1", [("u3", "13", 1)], claim="u1^-1 u3 u1 = u3")
    pr.chain("E10.a3", "u1^-1 a3 u1", [("a3", "L.stab_delta.vi", 1)], claim="u1^-1 a3 u1 = a3")
    pr.chain("E10.a4", "u1^-1 a4 u1", [("u3^-1 a4 u3", "12 14", 6, 4)], claim="u1^-1 a4 u1 = u3^-1 a4 u3")
    pr.chain("stab_delta.xi", "t u1 t", [
        (f"t {S} u3 {S} t", "15", 1),
        (f"{S} t u3 t {S}", "21a 21b 21c", 12, 2),
        (f"{S} u3^-1 {S}", "19", 1),
        ("u1^-1", "5 15", 3, 12),
    ], claim="t u1 t = u1^-1", lemma=True)
    pr.chain("E10.t", "u1^-1 t u1", [("t u1 u1", "L.stab_delta.xi 18", 3, 4), ("t u3 u3", "14", 1)],
             claim="u1^-1 t u1 = t u3^2")
    # w X w with X = u2 a2, pushing w = u1^-1 u3 to the right
    for nm, lhs, rhs in [("wa3i", "a3^-1", "a3"), ("wa3", "a3", "a3^-1"),
                         ("wa2i", "a2^-1", "a1 a3^-1 a2 a3 a1^-1"), ("wa2", "a2", "a1 a3^-1 a2^-1 a3 a1^-1"),
                         ("wu3i", "u3^-1", "u3^-1"), ("wa1", "a1", "a1^-1"), ("wa1i", "a1^-1", "a1")]:
        key = {"a3": "xvi", "a3^-1": "xvi", "a2": "xvii", "a2^-1": "xvii", "a1": "xiv", "a1^-1": "xiv"}.get(lhs)
        hints = f"L.stab_beta.{key} L.stab_beta.xiii" if key else "13"
        pr.chain(nm, f"{w} {lhs}", [(f"{rhs} {w}", hints, 3, 6)], lemma=True)
    X = "a3^-1 a2^-1 a3^-1 u3^-1 a2 a3"
    pr.chain("SXS", f"{S} a3 u3^-1 {Si}", [
        (f"{S} a3 {Si} {S} u3^-1 {Si}", "5", 0 + 1, 12),
        (f"a1 {S} u3^-1 {Si}", "L.Sa3", 1),
        ("a1 u1^-1", "15 5", 3, 12),
    ], lemma=True)
    pr.chain("E10", "u1^-1 u2 a2 u1", [
        (f"u3^-1 {w} u2 a2 {w} u3", "13 14", 4, 6),
        (f"u3^-1 {w} {X} {w} u3", "L.u2a2", 1),
        (f"u3^-1 a3 {w} a2^-1 a3^-1 u3^-1 a2 a3 {w} u3", "L.wa3i", 1),
        (f"u3^-1 a3 a1 a3^-1 a2 a3 a1^-1 {w} a3^-1 u3^-1 a2 a3 {w} u3", "L.wa2i", 1),
        (f"u3^-1 a3 a1 a3^-1 a2 a3 a1^-1 a3 {w} u3^-1 a2 a3 {w} u3", "L.wa3i", 1),
        (f"u3^-1 a3 a1 a3^-1 a2 a3 a1^-1 a3 u3^-1 {w} a2 a3 {w} u3", "L.wu3i", 1),
        (f"u3^-1 a3 a1 a3^-1 a2 a3 a1^-1 a3 u3^-1 a1 a3^-1 a2^-1 a3 a1^-1 {w} a3 {w} u3", "L.wa2", 1),
        (f"u3^-1 a3 a1 a3^-1 a2 a3 a1^-1 a3 u3^-1 a1 a3^-1 a2^-1 a3 a1^-1 a3^-1 {w} {w} u3", "L.wa3", 1),
        ("u3^-1 a3 a1 a3^-1 a2 a3 a1^-1 a3 u3^-1 a1 a3^-1 a2^-1 a3 a1^-1 a3^-1 u3", "L.stab_beta.xiii", 1),
        (f"u3^-1 {A} a3 u3^-1 {Ai} u3", "1 7", 6, 4),
        (f"u3^-1 {Ai} a1 u1^-1 {A} u3", "L.SXS", 1),
        ("u3^-1 a3^-1 a2^-1 a1^-1 u1^-1 a2 a3 u3", "L.stab_delta.i", 1, 4),
    ], claim="u1^-1 u2 a2 u1 = u3^-1 a3^-1 a2^-1 (u1 a1)^-1 a2 a3 u3")

    # loop E11, g = b^-1
    pr.chain("E11.a2", "b a2 b^-1", [("a2", "3b", 1)], claim="b a2 b^-1 = a2")
    pr.chain("E11.a3", "b a3 b^-1", [("a3", "3c", 1)], claim="b a3 b^-1 = a3")
    pr.chain("E11.a4", "b a4 b^-1", [
        ("a2^-1 u3^-1 a2^-1 u3 a2", "9 3b 11", 8, 4),
        ("u3^-1 a4^-1 u3", "9 4c", 4, 4),
    ], claim="b a4 b^-1 = u3^-1 a4^-1 u3")
    pr.chain("E11.u3u2u3t", "b u3 u2 u3 t b^-1", [
        ("u3^-1 b^-1 u2 u3 t b^-1", "11", 1),
        ("u3^-1 b^-1 u2 u3 b t", "20 18", 3, 4),
        ("u3^-1 b^-1 u2 b^-1 u3^-1 t", "11", 1),
        ("u3^-1 u2^-1 u3^-1 t", "L.u2b", 1),
    ], claim="b u3 u2 u3 t b^-1 = (u3 u2 u3)^-1 t")

    # alpha3 stabilizer relations not already present as relators
    pr.chain("stab_alpha3.iv", "u1 b u1 b", [
        (f"{S} u3 {S} b {S} u3 {S} b", "15", 2),
        (f"{S} u3 b {S} {S} u3 b {S}", "L.Ab", 4),
        (f"{S} u3 b u3 b {S}", "5", 1),
        (f"{S} {S}", "11", 1),
        ("1", "5", 1),
    ], claim="(u1 b)^2 = 1", lemma=True)
    pr.greedy("stab_alpha3.v", rel("u1 a4 u1 a4"), "10 12 14", claim="(u1 a4)^2 = 1")
    pr.chain("stab_alpha3.xiii", "u3 b u3^-1", [
        ("b^-1 u3^-1 u3^-1", "11", 2),
        ("b^-1 u1^-1 u1^-1", "14", 1),
        ("u1 b u1^-1", "L.stab_alpha3.iv", 2),
    ], claim="u3 b u3^-1 = u1 b u1^-1", lemma=False)
    pr.chain("K", "a2^-1 u3^-1 a2^-1 u3 a2", [
        ("u3^-1 a4^-1 u3", "9 4c", 4, 4),
        ("u1^-1 a4^-1 u1", "12 14", 6, 4),
    ], lemma=True)
    pr.chain("stab_alpha3.iii", "b a4 b^-1", [
        ("b a2^-1 u3 a2^-1 u3^-1 a2 b^-1", "9", 1),
        ("a2^-1 b u3 a2^-1 u3^-1 b^-1 a2", "3b", 2),
        ("a2^-1 u3^-1 b^-1 a2^-1 b u3 a2", "11", 2),
        ("a2^-1 u3^-1 a2^-1 u3 a2", "3b", 1),
        ("u1^-1 a4^-1 u1", "L.K", 1),
    ], claim="b a4 b^-1 = u1^-1 a4^-1 u1")
    pr.chain("stab_alpha3.xix", "t a4 t", [
        ("t a2^-1 u3 a2^-1 u3^-1 a2 t", "9", 1),
        ("a2^-1 u3^-1 a2^-1 u3 a2", "21b 18 19", 8),
        ("u1^-1 a4^-1 u1", "L.K", 1),
    ], claim="t a4 t = u1^-1 a4^-1 u1")


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dry-run", action="store_true")
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args(argv)
    pr = Prover("main")
    pr.verbose = args.verbose
    build(pr)
    if args.dry_run:
        return 0
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.cert"):
        old.unlink()
    for name, (target, cert, claim) in pr.results.items():
        (OUT / f"{name}.cert").write_text(format_certificate(pr.dataset, target, cert, claim))
    print(f"wrote {len(pr.results)} certificates to {OUT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
