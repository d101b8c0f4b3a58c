from math import gcd

import pytest

from knotq import links
from knotq.enumerator import enumerate_quandle
from knotq.links import BraidWord, LinkSpecError
from knotq.presentation import parse_presentation, relation
from knotq.quandle import from_cayley, is_isomorphic

A, B, C = 0, 1, 2


def size(p):
    return enumerate_quandle(p).size


def quandle(p):
    return from_cayley(enumerate_quandle(p))


def test_two_bridge_presentations():
    assert links.two_bridge(3, 5, 2).relations == (relation(A, [B, A, B, A], B),)
    assert links.two_bridge(1, 2, 2).relations == (relation(A, [B], A), relation(B, [A], B))
    assert links.two_bridge(1, 4, 2).relations == (relation(A, [B, A, B], A), relation(B, [A, B, A], B))


def test_two_bridge_hopf_is_trivial_of_order_two():
    assert quandle(links.two_bridge(1, 2, 2)).is_trivial()


@pytest.mark.parametrize("p, q", [(2, 4), (0, 3), (3, 3), (5, 3)])
def test_two_bridge_rejects_bad_parameters(p, q):
    with pytest.raises(LinkSpecError):
        links.two_bridge(p, q, 2)


def test_schubert_signs_for_three_fifths():
    # fundamental presentation <a, b | a^{b ~a ~b a} = b, b^{a ~b ~a b} = a>
    assert links.schubert_signs(3, 5) == [1, -1, -1, 1]
    p = links.two_bridge(3, 5, None)
    assert p.relations == (relation(A, [B, -1, -2, A], B), relation(B, [A, -2, -1, B], A))


@pytest.mark.parametrize("q", range(2, 16))
def test_two_bridge_order_and_components(q):
    for p in range(1, q):
        if gcd(p, q) == 1:
            t = enumerate_quandle(links.two_bridge(p, q, 2))
            assert t.size == q
            assert len(t.components()) == (1 if q % 2 else 2)


def test_braid_closure_examples():
    assert size(links.braid_closure(BraidWord.from_ints(2, [1, 1]), "++", 2)) == 2
    assert size(links.braid_closure(BraidWord.from_ints(2, [1, 1, 1]), None, 3)) == 4
    assert size(links.braid_closure(BraidWord.from_ints(3, [1, 2] * 3), None, 2)) == 6


def test_orientation_count_mismatch():
    braid = BraidWord.from_ints(2, [1, 1])
    with pytest.raises(LinkSpecError):
        links.braid_closure(braid, "+", 2)
    with pytest.raises(LinkSpecError):
        links.braid_closure(braid, "+-+", 2)
    with pytest.raises(LinkSpecError):
        links.braid_closure(BraidWord.from_ints(2, [1]), "+-", 2)


def test_per_strand_flags_for_a_knot():
    assert links.torus(3, 5, "+++", 2) == links.torus(3, 5, None, 2)
    assert size(links.torus(3, 5, "+++", 2)) == 30


def test_braid_letters_are_range_checked():
    with pytest.raises(LinkSpecError):
        BraidWord.from_ints(3, [3])
    with pytest.raises(LinkSpecError):
        BraidWord.from_ints(2, [0])


def test_torus_examples():
    t_pp = enumerate_quandle(links.torus(2, 4, "++", 3))
    t_pm = enumerate_quandle(links.torus(2, 4, "+-", 3))
    assert t_pp.size == t_pm.size == 8
    assert is_isomorphic(from_cayley(t_pp), from_cayley(t_pm)) is None
    assert size(links.torus(3, 5, None, 2)) == 30


def test_torus_with_axis_presentations():
    p3 = links.torus_with_axis(3)
    assert p3.generators == ("a", "b", "c") and p3.n == 2
    assert set(p3.relations) == {relation(C, [A, B], C), relation(A, [B, A, B, C], B),
                                 relation(B, [A, B, C], A)}
    p4 = links.torus_with_axis(4)
    assert set(p4.relations) == {relation(C, [A, B], C), relation(A, [B, A, B, C], A),
                                 relation(B, [A, B, A, B, C], B)}
    with pytest.raises(LinkSpecError):
        links.torus_with_axis(1)


@pytest.mark.parametrize("q", range(2, 9))
def test_torus_with_axis_order(q):
    t = enumerate_quandle(links.torus_with_axis(q))
    assert t.size == 2 + 2 * q
    strands = [2 * q] if q % 2 else [q, q]
    assert sorted(len(c) for c in t.components()) == sorted([2] + strands)


def test_braid_closure_with_axis_examples():
    axis3 = links.braid_closure_with_axis(BraidWord.from_ints(2, [1, 1, 1]), 2)
    assert is_isomorphic(quandle(axis3), quandle(links.torus_with_axis(3))) is not None
    assert size(links.braid_closure_with_axis(BraidWord.from_ints(3, [1, 2, 1, 2]), 2)) == 18
    assert size(links.braid_closure_with_axis(BraidWord.from_ints(2, [1, 1]), 2)) == 6


def test_named():
    assert size(links.named("unknot")) == 1
    assert size(links.named("hopf")) == 2
    assert links.named("trefoil-axis-b") == links.braid_closure_with_axis(
        BraidWord.from_ints(3, [1, 2, 1, 2]), 2)
    with pytest.raises(LinkSpecError):
        links.named("granny")


@pytest.mark.parametrize("builder, count", [
    (lambda: links.two_bridge(3, 7, 2), 1),
    (lambda: links.two_bridge(3, 8, 2), 2),
    (lambda: links.torus(2, 4, "+-", 3), 2),
    (lambda: links.torus(3, 3, None, 2), 3),
    (lambda: links.torus(3, 4, None, 2), 1),
    (lambda: links.torus_with_axis(5), 2),
    (lambda: links.torus_with_axis(6), 3),
    (lambda: links.named("trefoil-axis-b", 2), 2),
])
def test_algebraic_components_match_link_components(builder, count):
    assert len(enumerate_quandle(builder()).components()) == count


@pytest.mark.parametrize("braid, n", [
    (BraidWord.from_ints(2, [1, 1, 1]), 3),
    (BraidWord.from_ints(2, [1, 1, 1, 1]), 3),
    (BraidWord.from_ints(3, [1, 2] * 4), 2),
    (BraidWord.from_ints(3, [1, -2, 1, -2]), 2),
])
def test_mirror_reverse_invariance(braid, n):
    ncomp = max(braid.components()) + 1
    q1 = quandle(links.braid_closure(braid, None, n))
    q2 = quandle(links.braid_closure(braid.mirror_reverse(), [-1] * ncomp, n))
    assert is_isomorphic(q1, q2) is not None


@pytest.mark.parametrize("orient", ["++", "+-", "-+", "--"])
def test_involutory_quandle_ignores_orientation(orient):
    base = quandle(links.torus(2, 6, "++", 2))
    assert is_isomorphic(base, quandle(links.torus(2, 6, orient, 2))) is not None
    base = quandle(links.torus(3, 3, "+++", 2))
    assert is_isomorphic(base, quandle(links.torus(3, 3, orient + "+", 2))) is not None


def test_torus_two_q_matches_two_bridge():
    for q in range(3, 9):
        w = is_isomorphic(quandle(links.torus(2, q, None, 2)), quandle(links.two_bridge(1, q, 2)))
        assert w is not None


@pytest.mark.parametrize("spec, n, order", [
    ("two-bridge:3/5", 2, 5),
    ("torus:2,4:+-", 3, 8),
    ("torus:3,5", 2, 30),
    ("torus-axis:4", 2, 10),
    ("braid:3:1 2 1 2 1 2", 2, 6),
    ("braid:2:-1 -1 -1", 3, 4),
    ("braid-axis:3:1 2 1 2", 2, 18),
    ("unknot", None, 1),
    ("hopf", None, 2),
])
def test_parse_link_spec(spec, n, order):
    assert size(links.parse_link_spec(spec, n)) == order


def test_parse_link_spec_file(tmp_path):
    path = tmp_path / "l35.txt"
    path.write_text("gens a b\nn 2\nrel a : b a b a = b\n")
    p = links.parse_link_spec(f"file:{path}", None)
    assert p == parse_presentation(path.read_text())


@pytest.mark.parametrize("spec", ["two-bridge:5", "torus:2", "braid:2:x", "lens:3", "torus:2,4:+*"])
def test_parse_link_spec_errors(spec):
    with pytest.raises(LinkSpecError):
        links.parse_link_spec(spec, 2)
