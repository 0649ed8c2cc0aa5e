import json

import pytest

from innaut import io
from innaut.constructors import clifford8, z2_rees_example
from innaut.gset import z2_example
from innaut.partition import Partition
from innaut.semigroup import NonAssociative, NotSquare, validate


def test_parse_trivial():
    S = io.parse_table("1\n0\n")
    assert S.n == 1 and S.identity == 0


def test_parse_left_zero():
    S = io.parse_table("2\n0 0\n1 1\n")
    assert S.table.tolist() == [[0, 0], [1, 1]]


def test_malformed_row_names_line():
    with pytest.raises(io.ParseError) as e:
        io.parse_table("2\n0 0\n1 x\n")
    assert e.value.line == 3


def test_validation_errors():
    with pytest.raises(io.ParseError):
        io.parse_table("2\n0 0\n")
    with pytest.raises(NotSquare):
        validate(2, [[0, 0]])
    with pytest.raises(NonAssociative):
        io.parse_table("2\n1 0\n0 0\n")


def test_table_round_trip_keeps_labels():
    S = clifford8()
    T = io.parse_table(io.format_table(S))
    assert (T.table == S.table).all() and T.element_labels == S.element_labels


def test_rees_and_gset_round_trip():
    spec = z2_rees_example()
    assert io.format_rees(io.parse_rees(io.format_rees(spec))) == io.format_rees(spec)
    gs = z2_example()
    assert io.parse_gset(io.format_gset(gs)).action == gs.action


def test_emit():
    assert io.emit({}) == b"{}\n"
    assert io.emit({"p": Partition(3, [[0, 1], [2]])}) == b"p: 0 1 | 2\n"
    rep = {"b": [1, 2], "a": {"y": True, "x": None}}
    out = io.emit(rep, "json")
    assert json.loads(out) == rep and out.index(b'"a"') < out.index(b'"b"')
    assert io.emit(rep) == io.emit(dict(reversed(list(rep.items()))))


def test_unknown_format():
    with pytest.raises(ValueError):
        io.emit({"a": 1}, "yaml")
