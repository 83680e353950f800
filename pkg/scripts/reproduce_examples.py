"""Recompute the worked examples shipped as fixtures and print them as text.

    python scripts/reproduce_examples.py
"""

from fuzzyrough import fixtures
from fuzzyrough.characterize import is_fuzzy_rough_pair, selected_representatives
from fuzzyrough.induced import factor_poset, quasiorder_R, quasiorder_rho
from fuzzyrough.lattice import check_properties, enumerate_lattice, frs_of, join, meet
from fuzzyrough.space import FuzzySet


def show(label, h):
    print(f"  {label:<10} {' '.join(str(v) for v in h.values)}")


def three_point():
    space = fixtures.three_point()
    print("three-point space, chain", space.chain)
    f1, f2 = fixtures.three_point_sets(space)
    for name, f in (("f1", f1), ("f2", f2)):
        show(name, f)
        show("upper", space.upper(f))
        show("lower", space.lower(f))
    a1, a2 = frs_of(space, f1), frs_of(space, f2)
    m = meet(space, [a1, a2])
    print("  meet      ", m.matrix(), " witness", " ".join(map(str, m.witness.values)))
    naive_F = FuzzySet(space.universe, tuple(map(min, a1.upper.values, a2.upper.values)))
    naive_G = FuzzySet(space.universe, tuple(map(min, a1.lower.values, a2.lower.values)))
    v = is_fuzzy_rough_pair(space, naive_F, naive_G)
    print("  componentwise pair accepted:", v.accepted, v.failed_condition, v.failed_class)

    c = frs_of(space, FuzzySet.constant(space.universe, "1/2"))
    left = join(space, [m, c])
    right = meet(space, [join(space, [a1, c]), join(space, [a2, c])])
    print("  (a1 ^ a2) v c        =", left.matrix())
    print("  (a1 v c) ^ (a2 v c)  =", right.matrix())
    d = enumerate_lattice(space)
    report = check_properties(space, d)
    print(f"  {len(d)} pairs; distributive={report.is_distributive}, modular={report.is_modular}, self-dual={report.is_self_dual}")
    print()


def reference_6():
    space = fixtures.reference_6()
    h = fixtures.reference_6_h(space)
    F, G = space.upper(h), space.lower(h)
    print("six-element space")
    show("h", h)
    show("F", F)
    show("G", G)
    for name, q in (("R(F)", quasiorder_R(space, F)), ("rho(G)", quasiorder_rho(space, G))):
        poset = factor_poset(q)
        part = poset.partition
        classes = " ".join(part.label(k) for k in range(len(part.classes)))
        maximal = " ".join(part.label(k) for k in poset.maximal)
        print(f"  {name:<7} classes {classes}; maximal {maximal}")
    v = is_fuzzy_rough_pair(space, F, G)
    print("  accepted:", v.accepted, "selected", selected_representatives(space, F, G))
    show("witness", v.witness)
    print()


def coarse():
    space = fixtures.three_point_coarse()
    d = enumerate_lattice(space)
    report = check_properties(space, d)
    print(f"three-point space on {space.chain}: {len(d)} pairs, {len(d.covers)} covers")
    for p in d.elements:
        print("  ", p.matrix())
    print(f"  lattice={report.is_lattice} distributive={report.is_distributive} self-dual={report.is_self_dual}")


if __name__ == "__main__":
    three_point()
    reference_6()
    coarse()
