"""Run every verification check over the exhaustive small-graph sweep and a random ensemble.

    python scripts/run_sweep.py --max-vertices 3 --count 200 --json sweep.json
"""

import argparse
import sys
import time
from dataclasses import asdict

from graphideals.generators import EnsembleConfig
from graphideals.sweep import exhaustive_graphs
from graphideals.verification import verify_ensemble, verify_many


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-vertices", type=int, default=4, help="exhaustive sweep size (4 takes a few minutes)")
    ap.add_argument("--max-parallel", type=int, default=2)
    ap.add_argument("--max-loops", type=int, default=1)
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--ensemble-vertices", type=int, default=7)
    ap.add_argument("--ensemble-edges", type=int, default=14)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", help="also write the merged report here")
    args = ap.parse_args(argv)

    t0 = time.perf_counter()
    exhaustive = verify_many(enumerate(exhaustive_graphs(args.max_vertices, args.max_parallel, args.max_loops)))
    t1 = time.perf_counter()
    cfg = EnsembleConfig(args.count, args.ensemble_vertices, args.ensemble_edges, seed=args.seed)
    random = verify_ensemble(cfg)
    t2 = time.perf_counter()

    print(f"# exhaustive: {exhaustive.graphs} graphs, {exhaustive.lattice_elements} lattice elements, {t1 - t0:.1f}s")
    print(exhaustive.table())
    print(f"\n# ensemble {asdict(cfg)}: {random.graphs} graphs, {t2 - t1:.1f}s")
    print(random.table())
    if args.json:
        exhaustive.merge(random)
        with open(args.json, "w") as fh:
            fh.write(exhaustive.to_json())
    return 0 if exhaustive.ok and random.ok else 1


if __name__ == "__main__":
    sys.exit(main())
