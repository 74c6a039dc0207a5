"""Hunting multicyclic violations of the average comparison.

For trees and unicyclic graphs n*F2 <= m*F1 is a theorem.  With two or
more independent cycles it fails in both directions.  This script runs
the parameterised family sweep, prints one witness per direction, and
evaluates the closed-form difference quotients whose sign change
predicts where the violations begin.
"""

import fermatecc as fe


def main():
    summary = fe.search_counterexample("family-sweep")
    print(f"swept {summary.instance_count} parameterised multicyclic graphs")
    print(f"  {len(summary.positive_instances)} with n*F2 > m*F1 (inequality violated)")
    print(f"  {len(summary.negative_instances)} with n*F2 < m*F1 (opposite violated)")

    pos = min(summary.positive_instances, key=lambda g6: fe.from_graph6(g6).n)
    g = fe.from_graph6(pos)
    rep = fe.full_report(g)
    print(f"\nsmallest positive witness: n={rep.n}, m={rep.m}")
    print(f"  F1={rep.f1}, F2={rep.f2}, n*F2 - m*F1 = {rep.n * rep.f2 - rep.m * rep.f1}")
    print(f"  graph6: {pos}")

    print("\nclosed-form bicyclic difference quotient F1/n - F2/m crosses zero:")
    for x in (60, 67, 68, 80):
        v = fe.bicyclic_delta_formula(x)
        print(f"  x={x:3d}: {v.numerator}/{v.denominator} ({'>= 0' if v >= 0 else '< 0'})")

    print("\nk-cycle family: first x with a negative quotient, k = 3..8:")
    for k in range(3, 9):
        x = next(x for x in range(1, 1000) if fe.multicyclic_delta_formula(k, x) < 0)
        print(f"  k={k}: x={x}")


if __name__ == "__main__":
    main()
