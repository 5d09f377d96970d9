from fractions import Fraction

import pytest

from orbitrank.catalog import CATALOG, catalog, direct_sum, axb
from orbitrank.liealg import JacobiViolation
from orbitrank.lieio import LieParseError, parse_lie, parse_lie_file, render_lie


def test_axb_minimal_file():
    L = parse_lie_file("lie 1\ndim 2\nbasis X Y\n[X,Y] = 1 Y\n")
    assert L.basis_names == ("X", "Y")
    assert L.constants == {(0, 1): (Fraction(0), Fraction(1))}


def test_coefficient_list_grammar():
    text = "lie 1\ndim 3\nbasis P Q Z\n[P,Q] = 1/2 Z + -1 P\n"
    L = parse_lie_file(text)
    assert L.constants[(0, 1)] == (Fraction(-1), Fraction(0), Fraction(1, 2))


def test_comments_and_blank_lines():
    text = "# header comment\nlie 1\n\ndim 2   # trailing\nbasis X Y\n\n[X,Y] = 1 Y\n"
    assert parse_lie_file(text).dim == 2


def test_reversed_pair_is_duplicate():
    text = "lie 1\ndim 2\nbasis X Y\n[X,Y] = 1 Y\n[Y,X] = -1 Y\n"
    with pytest.raises(LieParseError) as exc:
        parse_lie(text)
    assert "twice" in str(exc.value)
    assert exc.value.line == 5


def test_undeclared_name():
    with pytest.raises(LieParseError):
        parse_lie("lie 1\ndim 2\nbasis X Y\n[X,W] = 1 Y\n")
    with pytest.raises(LieParseError):
        parse_lie("lie 1\ndim 2\nbasis X Y\n[X,Y] = 1 W\n")


def test_syntax_errors_carry_position():
    with pytest.raises(LieParseError) as exc:
        parse_lie("lie 2\n")
    assert exc.value.line == 1
    with pytest.raises(LieParseError) as exc:
        parse_lie("lie 1\ndim two\n")
    assert exc.value.line == 2 and exc.value.column >= 5
    with pytest.raises(LieParseError) as exc:
        parse_lie("lie 1\ndim 2\nbasis X Y\n[X,Y] = q Y\n")
    assert exc.value.line == 4


def test_bracket_of_vector_with_itself_rejected():
    with pytest.raises(LieParseError):
        parse_lie("lie 1\ndim 2\nbasis X Y\n[X,X] = 1 Y\n")


def test_jacobi_failure_propagates():
    text = (
        "lie 1\ndim 4\nbasis e1 e2 e3 e4\n"
        "[e1,e2] = 1 e3\n[e1,e3] = 1 e4\n[e2,e3] = 1 e2\n"
    )
    with pytest.raises(JacobiViolation):
        parse_lie_file(text)


def test_round_trip_catalog():
    entries = []
    for name in CATALOG:
        if name == "direct_sum":
            continue
        params = {"abelian": [2], "heisenberg": [2], "filiform": [5], "grelaud": ["1/2"]}.get(name, [])
        entries.append(catalog(name, params))
    entries.append(direct_sum(axb(), axb()))
    for L in entries:
        again = parse_lie_file(render_lie(L))
        assert again == L


def test_reversed_bracket_direction_parses_with_sign():
    # [Y,X] = -1 Y is the same algebra as [X,Y] = 1 Y
    L = parse_lie_file("lie 1\ndim 2\nbasis X Y\n[Y,X] = -1 Y\n")
    assert L == parse_lie_file("lie 1\ndim 2\nbasis X Y\n[X,Y] = 1 Y\n")
