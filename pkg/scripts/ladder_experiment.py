#!/usr/bin/env python3
"""Reproduce the conceptual-distance ladder and its spectrum calibration.

Builds the empty theories on 0..n sentential constants, prints the
model-count table I(T, 1), and compares the exact solver's distance,
witness chain and growth lower bound against the catalog BFS.
"""

from __future__ import annotations

import argparse

from thdist.network import conceptual_distance, sentential_cd_solve
from thdist.relations import EdgeCertificate
from thdist.semantics import Theory, spectrum
from thdist.syntax import Language


def ladder(n: int) -> dict[str, Theory]:
    theories = {}
    for i in range(n + 1):
        lang = Language.make(f"L{i}", {f"C{j + 1}": 0 for j in range(i)}, 0)
        theories[f"T{i}"] = Theory.make(f"T{i}", lang, [])
    return theories


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rungs", type=int, default=6)
    args = parser.parse_args()

    theories = ladder(args.rungs)
    certs = [
        EdgeCertificate("concept-add", f"T{i}", f"T{i + 1}")
        for i in range(args.rungs)
    ]
    print("theory  I(T,1)")
    for name, theory in theories.items():
        print(f"{name:6}  {spectrum(theory, 1)}")
    print()
    print("pair        BFS  solver  lower-bound  chain")
    t0 = theories["T0"]
    for i in range(1, args.rungs + 1):
        target = theories[f"T{i}"]
        bfs = conceptual_distance(theories, "T0", f"T{i}", certs, rank_cap=0)
        solved = sentential_cd_solve(t0, target)
        chain = " -> ".join(t.name for t in solved.chain)
        print(
            f"T0 vs T{i}   {bfs.value}    {solved.distance}       "
            f"{solved.lower_bound.bound}           {chain}"
        )


if __name__ == "__main__":
    main()
