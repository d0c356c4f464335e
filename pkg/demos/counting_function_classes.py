"""Count every reversible-function class, by formula and by enumeration."""

from revpal import (
    brute_force_census,
    count_involutions,
    count_of_type,
    count_palindromic,
    formula_census,
    iter_involutions,
    partitions,
)


def show_table():
    print("=" * 64)
    print("CLASS COUNTS BY CLOSED FORMULA")
    print("=" * 64)
    reports = [formula_census(n) for n in range(1, 5)]
    widths = [
        max(len(str(r.rows[name])) for name in r.rows) + 2 for r in reports
    ]
    header = f"{'class':<14}" + "".join(
        f"{f'n={n}':>{w}}" for n, w in zip(range(1, 5), widths)
    )
    print(header)
    for name in reports[0].rows:
        row = f"{name:<14}" + "".join(
            f"{r.rows[name]:>{w}}" for r, w in zip(reports, widths)
        )
        print(row)
    print()
    print("The n=5 column needs big integers:")
    for name, value in formula_census(5).rows.items():
        print(f"  {name:<14} {value}")
    print("  (3 lines have 8! = 40,320 reversible functions; the 40,240")
    print("   sometimes quoted for this table is a typo)")


def cross_check():
    print()
    print("=" * 64)
    print("ENUMERATION ORACLE AGREES")
    print("=" * 64)
    for n in (1, 2, 3):
        formula = formula_census(n).rows
        brute = brute_force_census(n).rows
        status = "ok" if formula == brute else "MISMATCH"
        print(f"n={n}: formula == brute force? {status}")


def involutions_by_size():
    print()
    print("=" * 64)
    print("INVOLUTIONS ON 3 LINES, BY TRANSPOSITION COUNT")
    print("=" * 64)
    sizes = {}
    for p in iter_involutions(8):
        sizes[p.size()] = sizes.get(p.size(), 0) + 1
    for size in sorted(sizes):
        mu = (2,) * size + (1,) * (8 - 2 * size)
        tag = "power of two -> odd palindrome" if size and size & (size - 1) == 0 else (
            "identity" if size == 0 else "needs alternative construction"
        )
        print(
            f"  size {size}: {sizes[size]:>4} involutions"
            f" (cycle-type formula: {count_of_type(mu)})  [{tag}]"
        )
    leftover = count_involutions(3) - count_palindromic(3) - 1
    print(f"  total needing an alternative: {leftover}")


def partition_sanity():
    print()
    print("=" * 64)
    print("CYCLE TYPES PARTITION THE WHOLE GROUP")
    print("=" * 64)
    from math import factorial

    for total in (4, 8):
        s = sum(count_of_type(mu) for mu in partitions(total))
        print(f"  sum over partitions of {total}: {s} == {total}! = {factorial(total)}")


if __name__ == "__main__":
    show_table()
    cross_check()
    involutions_by_size()
    partition_sanity()
