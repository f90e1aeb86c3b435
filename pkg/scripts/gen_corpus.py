#!/usr/bin/env python3
"""Regenerate the vendored desk-scale corpus (corpus/desk.g6).

Deterministic: family parameters are fixed and every random graph derives its
seed from the --seed-base flag, so the checked-in file is reproducible.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from contractia.generators import (  # noqa: E402
    complete,
    complete_bipartite,
    circulant,
    cycle,
    icosahedron,
    petersen,
    prism,
    random_3_connected,
    theta,
    to_graph6,
    wheel,
)


def emit(lines: list[str], comment: str, graphs) -> None:
    lines.append(f"# {comment}")
    lines.extend(to_graph6(g) for g in graphs)


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default=str(Path(__file__).resolve().parent.parent
                                             / "corpus" / "desk.g6"))
    parser.add_argument("--seed-base", type=int, default=1000)
    parser.add_argument("--random-per-n", type=int, default=200)
    args = parser.parse_args()

    lines: list[str] = ["# desk-scale corpus: named families, classics, seeded random 3-connected graphs"]
    emit(lines, "complete graphs K4..K14", (complete(n) for n in range(4, 15)))
    emit(lines, "complete bipartite graphs, 2 <= a <= b, a+b <= 14",
         (complete_bipartite(a, b)
          for a in range(2, 8) for b in range(a, 15 - a)))
    emit(lines, "cycles C3..C14", (cycle(n) for n in range(3, 15)))
    emit(lines, "wheels W4..W14", (wheel(n) for n in range(4, 15)))
    emit(lines, "circulants (n; 1,2) for n=5..14",
         (circulant(n, (1, 2)) for n in range(5, 15)))
    emit(lines, "circulants (n; 1,2,3) for n=7..14",
         (circulant(n, (1, 2, 3)) for n in range(7, 15)))
    emit(lines, "prisms over C3..C7", (prism(n) for n in range(3, 8)))
    emit(lines, "theta graphs",
         (theta(*p) for p in ((1, 1, 1), (1, 2, 3), (2, 2, 2), (3, 3, 3))))
    emit(lines, "classics", (petersen(), icosahedron()))
    for n in range(8, 14):
        graphs = []
        for i in range(args.random_per_n):
            g, _ = random_3_connected(n, 0.5, args.seed_base * n + i)
            graphs.append(g)
        emit(lines, f"random 3-connected, n={n}, p=0.5, seeds {args.seed_base}*n+i", graphs)

    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {sum(1 for l in lines if not l.startswith('#'))} graphs to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
