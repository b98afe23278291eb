import os

import pytest

import ncpq

DATA = os.environ.get("NCPQ_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data", "quivers"))


def a2():
    return ncpq.parse_quiver("vertices 2\narrow 1 2\n")


def test_parse_and_classify():
    q = a2()
    assert q.n == 2
    assert q.arrows == [(1, 2)]
    assert ncpq.cartan_matrix(q) == [[2, -1], [-1, 2]]
    assert ncpq.classify_type(q) == "Finite(A2)"
    assert ncpq.classify_type(ncpq.load_quiver(os.path.join(DATA, "kronecker.quiver"))) == "Affine"


def test_parse_error_carries_line():
    with pytest.raises(ncpq.ParseError, match="line 2"):
        ncpq.parse_quiver("vertices 2\nedge 1 2\n")
    with pytest.raises(ncpq.Error):
        ncpq.parse_quiver("vertices 2\narrow 1 2\narrow 2 1\n")


def test_forms_and_roots():
    q = a2()
    assert ncpq.euler_form(q, [1, 0], [0, 1]) == -1
    assert ncpq.euler_form(q, [0, 1], [1, 0]) == 0
    roots, complete = ncpq.positive_roots(q)
    assert complete
    assert sorted(roots) == [[0, 1], [1, 0], [1, 1]]
    roots, complete = ncpq.positive_roots(ncpq.load_quiver(os.path.join(DATA, "kronecker.quiver")), 5)
    assert not complete
    assert sorted(roots) == [[0, 1], [1, 0], [1, 2], [2, 1], [2, 3], [3, 2]]


def test_noncrossing_and_lengths():
    for name, count in [("A2", 5), ("A3", 14), ("D4", 50)]:
        q = ncpq.load_quiver(os.path.join(DATA, f"{name}.quiver"))
        nc = ncpq.noncrossing_partitions(q, jobs=2)
        assert len(nc) == count
        c = ncpq.coxeter_element(q)
        assert ncpq.absolute_length(q, c) == q.n
    with pytest.raises(ncpq.UnsupportedType):
        ncpq.noncrossing_partitions(ncpq.load_quiver(os.path.join(DATA, "kronecker.quiver")))


def test_hurwitz():
    q = ncpq.load_quiver(os.path.join(DATA, "A3.quiver"))
    c = ncpq.coxeter_element(q)
    facts = ncpq.reflection_factorizations(q, c, 3)
    assert len(facts) == 16
    assert len(ncpq.hurwitz_orbit(q, facts[0])) == 16
    assert ncpq.hurwitz_move(a2(), [[1, 0], [0, 1]], 1) == [[0, 1], [1, 1]]


def test_registry_and_sequences():
    q = a2()
    reg = ncpq.Registry(q)
    assert len(reg) == 3
    assert reg.ext([1, 0], [0, 1]) == 1
    assert reg.ext([0, 1], [1, 0]) == 0
    assert reg.is_exceptional_sequence([[1, 0], [0, 1]])
    assert len(reg.complete_sequences()) == 3
    assert len(reg.exceptional_antichains()) == 5
    inds, simples = reg.thick_closure([[1, 1]])
    assert inds == [[1, 1]] and simples == [[1, 1]]
    assert reg.braid_mutate([[1, 0], [0, 1]], 1) == [[0, 1], [1, 1]]
    assert reg.cox([[0, 1], [1, 0]]) == ncpq.coxeter_element(q)


def test_verify_bijection():
    report = ncpq.verify_bijection(ncpq.load_quiver(os.path.join(DATA, "A3.quiver")))
    assert report["counts"] == {"subcategories": 14, "nc": 14}
    assert all(report["flags"].values())
    assert report["failures"] == []
    partial = ncpq.verify_bijection(a2(), group_cap=2)
    assert partial["cap_exceeded"]
