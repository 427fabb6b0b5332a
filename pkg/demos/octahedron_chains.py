"""Chains of right-angled ideal octahedra and their lower bound.

Gluing m regular ideal octahedra black face to black face gives a
right-angled ideal polyhedron of volume exactly m * V8.  The coloring bound
(N - |W|) V8 / 2 recovers that volume on the nose, while the vertex bound
(N - 2) V8 / 4 falls behind as m grows.
"""

from equivol import bounds_ideal_pi2, glue_octahedra, two_color_faces
from equivol.lobachevsky import V8


def main() -> None:
    print(f"V8 = {V8:.12f}")
    print(f"{'m':>3} {'N':>4} {'|W|':>4} {'(N-2)V8/4':>12} {'lower':>12} {'m*V8':>12} {'upper':>12}")
    for m in range(1, 11):
        member = glue_octahedra(m)
        p = member.polyhedron
        b = bounds_ideal_pi2(p)
        w = two_color_faces(p).n_white
        print(
            f"{m:>3} {p.n_vertices:>4} {w:>4} {(p.n_vertices - 2) * V8 / 4:>12.6f} "
            f"{b.lower:>12.6f} {member.exact_volume:>12.6f} {b.upper:>12.6f}"
        )


if __name__ == "__main__":
    main()
