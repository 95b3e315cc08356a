"""Prime reduced cycle counts by length for a few graph families."""

import argparse
from dataclasses import dataclass

from ihara.graph import bouquet, complete_graph, cycle_graph, graph
from ihara.zeta import eta_truncated, prime_cycle_counts, zeta_via_edges


@dataclass
class CensusConfig:
    L: int = 12


FAMILIES = {
    "K3": lambda: complete_graph(3),
    "K4": lambda: complete_graph(4),
    "K5": lambda: complete_graph(5),
    "C5": lambda: cycle_graph(5),
    "bouquet2": lambda: bouquet(2),
    "bouquet3": lambda: bouquet(3),
    "theta": lambda: graph(2, [(0, 1), (0, 1), (0, 1)]),
    "K33": lambda: graph(6, [(i, j) for i in range(3) for j in range(3, 6)]),
}


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("-L", type=int, default=CensusConfig.L)
    cfg = CensusConfig(p.parse_args().L)
    header = " ".join(f"{m:>7}" for m in range(1, cfg.L + 1))
    print(f"{'graph':<9} {header}  check")
    for name, make in FAMILIES.items():
        g = make()
        counts = prime_cycle_counts(g, cfg.L)
        ok = eta_truncated(g, cfg.L) == zeta_via_edges(g).truncate(cfg.L)
        row = " ".join(f"{counts.get(m, 0):>7}" for m in range(1, cfg.L + 1))
        print(f"{name:<9} {row}  {'ok' if ok else 'MISMATCH'}")


if __name__ == "__main__":
    main()
