import numpy as np
import pytest

from src.algebra import (
    Arrow,
    Path,
    QuiverPresentation,
    Relation,
    build_algebra,
    ideal_from_generators,
    ideal_power,
    ideal_product,
    is_idempotent,
    is_nilpotent,
    quotient_algebra,
    stable_index,
    stable_part,
    trace_ideal,
    whole_ideal,
    zero_ideal,
)
from src.errors import DimensionError, PreconditionError, PresentationError
from src.modrep import indecomposable_projective, simple_module


def test_path_labels_compose_right_to_left():
    first = Path("1", "2", ("a",))
    second = Path("2", "3", ("b",))
    assert first.then(second).label == "b*a"
    assert second.then(first) is None
    assert Path("1", "1").label == "e1"


def test_a2_basis_and_products(a2):
    assert a2.basis_labels == ("a", "e1", "e2")
    assert a2.dim == 3
    assert a2.simple_count == 2
    a, e1, e2 = (a2.element(x) for x in ("a", "e1", "e2"))
    assert a2.multiply(a, e1).tolist() == a.tolist()
    assert a2.multiply(e2, a).tolist() == a.tolist()
    assert not a2.multiply(e1, a).any()
    assert a2.multiply(a2.one, a).tolist() == a.tolist()


def test_zero_relation_algebra(a3z):
    assert a3z.dim == 5
    assert "b*a" not in a3z.basis_labels
    b, a = a3z.element("b"), a3z.element("a")
    assert not a3z.multiply(b, a).any()


def test_truncated_local_and_nakayama(loc2, n32):
    assert loc2.basis_labels == ("x", "e1")
    x = loc2.element("x")
    assert not loc2.multiply(x, x).any()
    assert n32.dim == 6
    assert n32.simple_count == 3


def test_opposite_algebra_is_involutive(a3z):
    assert a3z.op.op is a3z
    a, e1 = a3z.element("a"), a3z.element("e1")
    assert a3z.op.multiply(e1, a).tolist() == a3z.multiply(a, e1).tolist()


def test_long_paths_must_lie_in_the_ideal():
    arrows = (Arrow("a", "1", "2"), Arrow("b", "2", "3"))
    q = QuiverPresentation("bad", 2, ("1", "2", "3"), arrows, (), 2)
    with pytest.raises(PresentationError, match="nilpotency bound"):
        build_algebra(q)


def test_relations_must_be_admissible():
    arrows = (Arrow("a", "1", "2"),)
    short = Relation(((1, Path("1", "2", ("a",))),))
    with pytest.raises(PresentationError, match="length 1"):
        build_algebra(QuiverPresentation("bad", 2, ("1", "2"), arrows, (short,), 2))


def test_non_prime_field_rejected():
    with pytest.raises(PresentationError):
        build_algebra(QuiverPresentation("bad", 4, ("1",), (), (), 2))


def test_commutativity_relation_over_f3():
    arrows = (Arrow("a", "1", "2"), Arrow("b", "2", "4"), Arrow("c", "1", "3"), Arrow("d", "3", "4"))
    q = QuiverPresentation("square", 3, ("1", "2", "3", "4"), arrows, (), 3)
    rel = Relation(((1, q.parse_path("b*a")), (2, q.parse_path("d*c"))))
    q = QuiverPresentation("square", 3, q.vertices, arrows, (rel,), 3)
    A = build_algebra(q)
    # 4 idempotents, 4 arrows and one surviving path of length 2
    assert A.dim == 9
    ba = A.multiply(A.element("b"), A.element("a"))
    dc = A.multiply(A.element("d"), A.element("c"))
    assert ((ba + 2 * dc) % 3 == 0).all()


def test_ideal_generated_by_an_idempotent(a2):
    I = ideal_from_generators(a2, [a2.element("e1")])
    # A e1 A = span{e1, a}
    assert I.dim == 2
    assert I.contains(a2.element("a"))
    assert is_idempotent(I)
    assert not is_nilpotent(I)
    assert stable_part(I) == I


def test_radical_ideal_is_nilpotent(a3z):
    rad = ideal_from_generators(a3z, [a3z.element("a"), a3z.element("b")])
    assert rad.dim == 2
    assert is_nilpotent(rad)
    assert ideal_power(rad, 2).is_zero()
    assert stable_part(rad).is_zero()
    assert ideal_power(rad, 0).is_whole()


def test_ideal_generators_must_have_algebra_length(a2):
    with pytest.raises(DimensionError):
        ideal_from_generators(a2, [[1, 0]])


def test_ideal_product_needs_same_algebra(a2, a3z):
    with pytest.raises(PreconditionError):
        ideal_product(zero_ideal(a2), zero_ideal(a3z))


def test_stable_index_counts_covered_projectives(a2):
    I = ideal_from_generators(a2, [a2.element("e1")])
    # I·A e1 = A e1 while I·A e2 = 0
    assert stable_index(I) == 1
    assert stable_index(whole_ideal(a2)) == 2
    assert stable_index(zero_ideal(a2)) == 0


def test_quotient_algebra_drops_vertices(a2):
    I = ideal_from_generators(a2, [a2.element("e1")])
    Q = quotient_algebra(a2, I)
    assert Q.algebra.dim == 1
    assert Q.algebra.vertices == ("2",)
    assert Q.projection.shape == (1, 3)


def test_quotient_by_whole_ideal_is_zero_algebra(a2):
    Q = quotient_algebra(a2, whole_ideal(a2))
    assert Q.algebra.dim == 0
    assert Q.algebra.simple_count == 0


def test_quotient_by_radical_is_semisimple(a3z):
    rad = ideal_from_generators(a3z, [a3z.element("a"), a3z.element("b")])
    Q = quotient_algebra(a3z, rad)
    assert Q.algebra.dim == 3
    assert Q.algebra.simple_count == 3


def test_trace_ideal_of_projective(a2):
    tr = trace_ideal(indecomposable_projective(a2, 0))
    assert tr.dim == 2
    tr2 = trace_ideal(indecomposable_projective(a2, 1))
    # images of P2 = A e2 in A: span{e2, a}
    assert tr2.dim == 2
    assert tr2.contains(a2.element("a"))


def test_trace_ideal_rejects_non_projective(a2):
    with pytest.raises(PreconditionError):
        trace_ideal(simple_module(a2, 0))


def test_structure_constants_are_associative(linear3):
    linear3.validate()
    d = linear3.dim
    rng = np.random.default_rng(1)
    x, y, z = rng.integers(0, 2, size=(3, d))
    lhs = linear3.multiply(linear3.multiply(x, y), z)
    rhs = linear3.multiply(x, linear3.multiply(y, z))
    assert lhs.tolist() == rhs.tolist()
