import pytest

from splitgraph.artal import (ArtalType, Partition, allowed_automorphisms, classify, family_table,
                              hexagon_walk, partition_compare, same_embedded_topology,
                              sort_partitions, splitting_graph_of)
from splitgraph.cover import net_voltage_set, validate_cover
from splitgraph.cyclicnum import theorem_net_voltage
from splitgraph.equivalence import DISTINGUISHED, INCONCLUSIVE, distinguish, nv_signature
from splitgraph.errors import InvalidArgument
from splitgraph.fingroup import CycloCoset, GroupAutomorphism, coset_of


def partitions_of(n, smallest=1):
    if n == 0:
        yield ()
        return
    for k in range(smallest, n + 1):
        for rest in partitions_of(n - k, k):
            yield (k,) + rest


def all_types(d):
    ps = [Partition(p) for p in partitions_of(d)]
    for i, a in enumerate(ps):
        for j in range(i, len(ps)):
            for k in range(j, len(ps)):
                yield ArtalType.normalized([a, ps[j], ps[k]])


def test_partition_compare():
    p = Partition((1, 2, 3))
    assert partition_compare(p, Partition((1, 2, 3))) == 0
    assert partition_compare(Partition((1, 5)), Partition((2, 4))) == -1
    assert partition_compare(Partition((2, 4)), Partition((1, 5))) == 1
    ps = [Partition((6,)), Partition((1, 5)), Partition((2, 4)), Partition((3, 3))]
    assert [q.parts for q in sort_partitions(ps)] == [(1, 5), (2, 4), (3, 3), (6,)]
    with pytest.raises(InvalidArgument):
        partition_compare(Partition((3,)), Partition((4,)))
    with pytest.raises(InvalidArgument):
        Partition((3, 1))


def test_type_derived_values():
    T = ArtalType.parse("2,4:2,2,2:6")
    assert T.to_text() == "2,2,2:2,4:6"
    assert T.s_lines == (2, 2, 6) and T.s == 2 and T.mu == (3, 3, 1)
    assert T.mu_parts == ((1, 1, 1), (1, 2), (1,))
    with pytest.raises(InvalidArgument):
        ArtalType(Partition((6,)), Partition((1, 5)), Partition((2, 4)))
    with pytest.raises(InvalidArgument):
        ArtalType.parse("1,1")
    with pytest.raises(InvalidArgument):
        ArtalType.parse("3:4:3")
    assert ArtalType.parse("3") == ArtalType.parse("3:3:3")


def test_classify_examples():
    T3 = ArtalType.parse("3")
    assert classify(T3, 0).alpha == 0 and classify(T3, 0).chirality is None
    assert classify(T3, 2).alpha == 1
    T = ArtalType.parse("1,5:2,4:6")
    assert T.s == 1 and classify(T, 0).alpha == 0
    with pytest.raises(InvalidArgument):
        classify(T, 1)
    with pytest.raises(InvalidArgument):
        classify(T3, -1)


def test_chirality():
    T = ArtalType.parse("5,5:10:5,5")
    assert not T.distinct
    T = ArtalType.parse("3,6:3,3,3:9")
    assert T.distinct and T.s == 3
    assert classify(T, 1).chirality == "+"
    assert classify(T, 2).chirality == "-"
    assert classify(T, 1).alpha == classify(T, 2).alpha == 1
    assert classify(T, 0).chirality is None
    assert classify(ArtalType.parse("3"), 1).chirality is None


def test_family_tables():
    assert len(family_table(ArtalType.parse("3"))) == 2
    assert len(family_table(ArtalType.parse("6"))) == 4
    assert len(family_table(ArtalType.parse("2,4:2,2,2:6"))) == 2
    assert len(family_table(ArtalType.parse("1,5:2,4:6"))) == 1


def test_splitting_graph_examples():
    T = ArtalType.parse("3")
    c0 = splitting_graph_of(T, 0)
    assert validate_cover(c0).ok
    points = [x for x in c0.total.vertices if x.startswith("P")]
    lines = [x for x in c0.total.vertices if x.startswith("L")]
    assert len(points) == 9 and len(lines) == 9 and len(c0.total.edges) == 18
    for beta in range(3):
        c = splitting_graph_of(T, beta)
        plus = net_voltage_set(c, hexagon_walk(c), "P1@0")
        minus = net_voltage_set(c, hexagon_walk(c, "-"), "P1@0")
        assert coset_of(plus) == CycloCoset(3, beta, 3)
        assert coset_of(minus) == CycloCoset(3, (-beta) % 3, 3)


def test_same_embedded_topology():
    T = ArtalType.parse("3")
    assert same_embedded_topology((T, 1), (T, 1))
    assert not same_embedded_topology((T, 0), (T, 1))
    T6 = ArtalType.parse("6")
    assert same_embedded_topology((T6, 1), (T6, 5))
    with pytest.raises(InvalidArgument):
        same_embedded_topology((T, 0), (T6, 0))


def test_allowed_automorphisms():
    assert len(allowed_automorphisms(2)) == 1
    auts = allowed_automorphisms(3)
    assert [a.images for a in auts] == [(0, 1, 2), (0, 2, 1)]
    for d in range(1, 13):
        for a in allowed_automorphisms(d):
            GroupAutomorphism(a.group, a.images)


def test_consistency_triangle():
    for d in range(3, 13):
        for T in all_types(d):
            if T.s == 1 and d > 6:
                continue  # nothing new beyond the trivial coset
            for beta in range(T.s):
                c = splitting_graph_of(T, beta)
                bfs = coset_of(net_voltage_set(c, hexagon_walk(c), "P1@0"))
                thm = theorem_net_voltage(T.s_lines, [0, 0, beta], d)
                assert bfs == thm == CycloCoset.normalized(d, beta, T.s)


def test_classifier_agrees_with_discriminator():
    for d in range(3, 10):
        types = {T for T in all_types(d) if T.s > 1}
        for T in types:
            covers = [splitting_graph_of(T, b) for b in range(T.s)]
            sigs = [nv_signature(c) for c in covers]
            for b1 in range(T.s):
                for b2 in range(T.s):
                    verdicts = [distinguish(covers[b1], covers[b2], t, sigs[b1], sigs[b2]).kind
                                for t in allowed_automorphisms(d)]
                    if same_embedded_topology((T, b1), (T, b2)):
                        assert INCONCLUSIVE in verdicts
                    else:
                        assert verdicts == [DISTINGUISHED] * len(verdicts)


def test_conjugation_involution():
    for text in ("3", "6", "3,6:3,3,3:9", "4", "2,4:2,2,2:6", "12"):
        T = ArtalType.parse(text)
        assert len(family_table(T)) == T.s // 2 + 1
        seen = set()
        for beta in range(T.s):
            a, b = classify(T, beta), classify(T, (T.s - beta) % T.s)
            assert a.alpha == b.alpha
            if a.chirality is not None:
                assert {a.chirality, b.chirality} == {"+", "-"}
            seen.add(a.alpha)
        assert seen == {c.alpha for c in family_table(T)}
