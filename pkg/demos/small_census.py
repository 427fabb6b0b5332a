"""Annotate a stream of random polyhedra and list what survives a volume cap.

The stream is built from random vertex truncations, diagonal insertions and
edge subdivisions of small seeds, written as planar_code and read back, which
mirrors how an external enumerator's output would be consumed.
"""

import random
from collections import Counter

from equivol import solids
from equivol.bounds import max_vertices_for_volume
from equivol.census import annotate, filter_by_volume_cap, from_polyhedron, parse_planar_code, serialize_planar_code
from equivol.lobachevsky import V3, V8


def main(count: int = 400, seed: int = 7) -> None:
    rng = random.Random(seed)
    data = serialize_planar_code(from_polyhedron(solids.random_polyhedron(rng, max_vertices=30)) for _ in range(count))
    graphs = parse_planar_code(data)
    print(f"{len(graphs)} graphs, {len(data)} bytes of planar_code")

    for kind, cap in (("pi2", 3 * V8), ("pi3", 10 * V3)):
        records = annotate(graphs, kind, jobs=2)
        cases = Counter(r.case for r in records if r.realizable)
        failed = Counter(t for r in records for t in r.failed_conditions)
        kept = filter_by_volume_cap(records, cap)
        print(f"\nkind {kind}: realizable by case {dict(cases)}")
        print(f"  most common failures: {failed.most_common(3)}")
        print(f"  cap {cap:.4f}: {len(kept)} records kept")
        for case in sorted({r.case for r in kept}):
            if case == "mixed_pi2":
                continue
            largest = max(r.n for r in kept if r.case == case)
            print(f"    {case}: largest N kept {largest}, vertex limit {max_vertices_for_volume(cap, case)}")


if __name__ == "__main__":
    main()
