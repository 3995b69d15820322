import numpy as np
import pytest

from src.algebra import build_algebra
from src.dell import endo_transfer
from src.errors import DimensionError, FormatError, PreconditionError, PresentationError
from src.data.formats import (
    dump_algebra,
    dump_module,
    format_matrix,
    load_algebra,
    load_module,
    parse_algebra,
    parse_matrix,
    parse_module,
)
from src.modrep import dual, is_isomorphic
from src.tautilt import classify

A3Z_TEXT = """
# zero relation
name A3Z
field p=2
vertices 1 2 3
arrow a 1 2
arrow b 2 3
relation 1 b*a
nilpotency 2
"""


def test_parse_matrix():
    assert parse_matrix("1 0 ; 0 1").tolist() == [[1, 0], [0, 1]]
    assert parse_matrix("").shape == (0, 0)
    assert parse_matrix("1 1 ;").shape == (1, 2)
    assert format_matrix(np.zeros((0, 0), dtype=int)) == "[]"
    assert format_matrix(np.array([[1, 0], [0, 1]])) == "[1 0 ; 0 1]"


def test_parse_matrix_errors_carry_line_numbers():
    with pytest.raises(FormatError, match="Ragged"):
        parse_matrix("1 0 ; 1", line=3)
    with pytest.raises(FormatError) as info:
        parse_matrix("1 x", path="m.mod", line=7)
    assert info.value.line == 7
    assert str(info.value).startswith("m.mod:7:")


def test_parse_algebra_text():
    q = parse_algebra(A3Z_TEXT)
    assert q.name == "A3Z"
    assert q.p == 2
    assert [a.name for a in q.arrows] == ["a", "b"]
    assert len(q.relations) == 1
    assert build_algebra(q).dim == 5


def test_dumped_algebra_parses_back(a3z):
    again = build_algebra(parse_algebra(dump_algebra(a3z.quiver)))
    assert again.basis_labels == a3z.basis_labels


def test_algebra_syntax_errors():
    with pytest.raises(FormatError) as info:
        parse_algebra("name X\nfield p=2\nvertices 1\nfoo bar\n")
    assert info.value.line == 4
    assert "Unknown keyword 'foo'" in str(info.value)
    with pytest.raises(FormatError, match="field"):
        parse_algebra("vertices 1 2\n")
    with pytest.raises(FormatError, match="vertices"):
        parse_algebra("field p=2\n")
    with pytest.raises(FormatError):
        parse_algebra("field q=2\nvertices 1\n")
    with pytest.raises(FormatError, match="arrow"):
        parse_algebra("field p=2\nvertices 1 2\narrow a 1\n")


def test_relation_with_unknown_arrow_reports_line():
    text = "field p=2\nvertices 1 2\narrow a 1 2\nrelation 1 z*a\n"
    with pytest.raises(FormatError) as info:
        parse_algebra(text, path="bad.alg")
    assert info.value.line == 4
    assert info.value.path == "bad.alg"


def test_load_corpus_files(corpus_dir, a3z):
    A = load_algebra(corpus_dir / "A3Z.alg")
    assert A.name == "A3Z"
    assert A.dim == 5
    T = load_module(corpus_dir / "A3Z_Tstar.mod", A)
    assert T.name == "Tstar"
    assert T.dimension_vector == (2, 1, 1)
    r = classify(T)
    assert r.tau_tilting and not r.one_tilting


def test_apr_tilting_file_is_one_tilting(corpus_dir):
    A = load_algebra(corpus_dir / "A2.alg")
    T = load_module(corpus_dir / "A2_P1S1.mod", A)
    assert classify(T).one_tilting


def test_missing_files(tmp_path, a2):
    with pytest.raises(FormatError, match="File not found"):
        load_algebra(tmp_path / "nope.alg")
    with pytest.raises(FormatError, match="File not found"):
        load_module(tmp_path / "nope.mod", a2)


def test_bad_module_files(corpus_dir, a3z):
    with pytest.raises(DimensionError):
        load_module(corpus_dir / "A3Z_bad_shape.mod", a3z)
    with pytest.raises(PresentationError) as info:
        load_module(corpus_dir / "A3Z_bad_relation.mod", a3z)
    assert info.value.basis_pair is not None


def test_module_syntax_errors(a2):
    with pytest.raises(FormatError, match="Unknown keyword"):
        parse_module("module M over A2\nshape 1=1\n", a2)
    with pytest.raises(FormatError, match="Duplicate"):
        parse_module("module M over A2\ndim 1=1 2=1\nmatrix a = [1]\nmatrix a = [0]\n", a2)
    with pytest.raises(FormatError):
        parse_module("module M over A2\ndim 1=x\n", a2)


def test_dumped_module_parses_back(tstar, a3z):
    text = dump_module(tstar)
    assert text.startswith("module Tstar over A3Z")
    assert "dim 1=2 2=1 3=1" in text
    assert is_isomorphic(parse_module(text, a3z), tstar)


def test_dump_rejects_right_modules(std_a2):
    with pytest.raises(PreconditionError):
        dump_module(dual(std_a2.simples[0]))


def test_action_form_for_algebras_without_quiver(tstar):
    transfer = endo_transfer(tstar)
    B = transfer.algebra
    M = transfer.dual_module()
    text = dump_module(M)
    assert "action" in text and "matrix" not in text
    parsed = parse_module(text, B)
    assert np.array_equal(parsed.action, M.action)
    with pytest.raises(FormatError, match="no quiver"):
        parse_module("module M\ndim 1\n", B)
    with pytest.raises(FormatError, match="Missing action"):
        parse_module(f"module M\ndim 1\naction {B.basis_labels[0]} = [1]\n", B)


def test_corpus_file_generation(tmp_path):
    from scripts.generate_corpus_files import write_entry
    from src.data.corpus import CorpusSpec

    written = write_entry(CorpusSpec.parse("A3Z"), tmp_path)
    # the .alg file plus simples, projectives and injectives at three vertices
    assert written == 10
    A = load_algebra(tmp_path / "A3Z.alg")
    assert A.dim == 5
    injective = load_module(tmp_path / "A3Z_I3.mod", A)
    assert injective.name == "I3"
    assert injective.dimension_vector == (0, 1, 1)
