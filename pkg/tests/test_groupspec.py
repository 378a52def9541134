import pytest
from hypothesis import given, strategies as st

from diffgraph.group_core import check_axioms
from diffgraph.groupspec import (
    Atom,
    DirectProduct,
    GroupSpecError,
    ResourceError,
    SpecSemanticError,
    SpecSyntaxError,
    load_cayley,
    parse,
    realize,
    render,
)


def test_parse_atoms():
    assert parse("D30").ast == Atom("D", 30)
    assert parse("z12").ast == Atom("Z", 12)
    assert parse("  Q12 ").ast == Atom("Q", 12)
    assert parse("S5").ast == Atom("S", 5)
    assert parse("A7").ast == Atom("A", 7)


def test_parse_product_flattens():
    assert parse("Z2 x Z9").ast == DirectProduct((Atom("Z", 2), Atom("Z", 9)))
    nested = parse("Z2 x (Z3 * (Z5 x D8))").ast
    assert nested == DirectProduct((Atom("Z", 2), Atom("Z", 3), Atom("Z", 5), Atom("D", 8)))
    assert parse("(Z4)").ast == Atom("Z", 4)


@pytest.mark.parametrize("text", ["D7", "D4", "D0", "Q6", "Q4", "Q10", "Z0", "S0", "A0"])
def test_semantic_errors(text):
    with pytest.raises(SpecSemanticError):
        parse(text)


@pytest.mark.parametrize("text, offset", [
    ("", 0),
    ("Z", 1),
    ("X5", 0),
    ("Z2 x", 4),
    ("Z2 x (Z3", 8),
    ("Z2 Z3", 3),
    ("Z-2", 1),
])
def test_syntax_errors_carry_offset(text, offset):
    with pytest.raises(SpecSyntaxError) as info:
        parse(text)
    assert info.value.offset == offset
    assert f"offset {offset}" in str(info.value)


def test_errors_are_value_errors():
    assert issubclass(GroupSpecError, ValueError)


atoms = st.one_of(
    st.integers(1, 60).map(lambda n: Atom("Z", n)),
    st.integers(3, 30).map(lambda m: Atom("D", 2 * m)),
    st.integers(2, 15).map(lambda m: Atom("Q", 4 * m)),
    st.integers(1, 9).map(lambda n: Atom("S", n)),
    st.integers(1, 9).map(lambda n: Atom("A", n)),
)
asts = st.one_of(atoms, st.lists(atoms, min_size=2, max_size=4).map(
    lambda fs: DirectProduct(tuple(fs))))


@given(asts)
def test_render_round_trip(ast):
    assert parse(render(ast)).ast == ast


def test_realize_orders():
    g = realize("Z6")
    assert g.n == 6 and g.identity == 0
    assert realize("S5").n == 120
    assert realize("A7").n == 2520
    assert realize("Q12").n == 12
    assert realize("D8 x Z3").n == 24
    assert realize("A1").n == 1 and realize("S1").n == 1


def test_realize_cap():
    with pytest.raises(ResourceError):
        realize("S9")
    with pytest.raises(ResourceError):
        realize("Z10", max_elements=9)
    assert realize("Z10", max_elements=10).n == 10


@pytest.mark.parametrize("spec", ["Z7", "D12", "Q16", "S4", "A5", "Z2 x D8", "Q8 x Z3"])
def test_realized_groups_satisfy_axioms(spec):
    check_axioms(realize(spec))


def _write_table(tmp_path, rows):
    path = tmp_path / "g.txt"
    body = "\n".join(" ".join(map(str, r)) for r in rows)
    path.write_text(f"{len(rows)}\n{body}\n")
    return path


def test_load_cayley_z6(tmp_path):
    rows = [[(i + j) % 6 for j in range(6)] for i in range(6)]
    g = load_cayley(_write_table(tmp_path, rows))
    assert g.n == 6
    assert sorted(int(o) for o in g.orders) == [1, 2, 3, 3, 6, 6]


def test_load_cayley_rejects_non_group(tmp_path):
    rows = [[(i * j) % 4 for j in range(4)] for i in range(4)]
    with pytest.raises(GroupSpecError):
        load_cayley(_write_table(tmp_path, rows))


def test_load_cayley_malformed(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("3\n0 1 2\n1 2\n")
    with pytest.raises(GroupSpecError):
        load_cayley(p)
    p.write_text("")
    with pytest.raises(GroupSpecError):
        load_cayley(p)


def test_load_cayley_cap(tmp_path):
    rows = [[(i + j) % 5 for j in range(5)] for i in range(5)]
    with pytest.raises(ResourceError):
        load_cayley(_write_table(tmp_path, rows), max_elements=4)
