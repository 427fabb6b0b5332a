"""Volume bounds per vertex along the lattice families.

The upper bounds per vertex approach V8/2 (right-angled ideal) and
3 V3/2 (pi/3 ideal); the tables show how quickly.
"""

from equivol.families import asymptotic_report, format_report
from equivol.lobachevsky import V3, V8


def main() -> None:
    print(f"p2k: right-angled ideal, upper/N -> V8/2 = {V8 / 2:.6f}")
    print(format_report(asymptotic_report("p2k", range(3, 9))))
    print()
    print(f"q2k: pi/3 ideal, upper/N -> 3 V3/2 = {1.5 * V3:.6f}")
    print(format_report(asymptotic_report("q2k", range(2, 7))))
    print()
    print("r2k: compact right-angled, every face has at least 5 sides")
    print(format_report(asymptotic_report("r2k", range(3, 7))))


if __name__ == "__main__":
    main()
