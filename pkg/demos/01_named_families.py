"""Index reports for the classic named families.

Walks through paths, stars, cycles, and a theta graph, printing the
Fermat eccentricity profile, all six indices, and the sign of the
cross-multiplied average comparison n*F2 - m*F1.
"""

import fermatecc as fe


def show(name, g):
    rep = fe.full_report(g)
    print(f"{name:12s} n={rep.n:3d} m={rep.m:3d} {rep.kind.value:11s}", end="  ")
    print(f"F1={rep.f1:5d} F2={rep.f2:5d} E1={rep.e1:5d} E2={rep.e2:5d}", end="  ")
    print(f"sign={rep.comparison.value}")


def main():
    print("On a path every vertex spans the whole graph: eps3 is constant,")
    print("so F2/m equals F1/n exactly and the comparison reads 'zero'.\n")
    for n in (4, 7, 10):
        show(f"P_{n}", fe.path(n))

    print("\nStars sit at the other extreme: they minimise both F1 and F2")
    print("over all trees of their order, with strict inequality.\n")
    for n in (5, 8, 12):
        show(f"K_1,{n - 1}", fe.star(n))

    print("\nCycles are eps3-regular, so they also land exactly on 'zero'.\n")
    for n in (5, 6, 9):
        show(f"C_{n}", fe.cycle(n))

    print("\nOnce a second independent cycle appears the guarantees stop;")
    print("this small theta graph still satisfies the inequality, but")
    print("nothing forces that any more (see the counterexample demo).\n")
    show("theta(2,3,4)", fe.theta(2, 3, 4))


if __name__ == "__main__":
    main()
