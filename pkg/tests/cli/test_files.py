import pytest

from curvefact.cli import read_input
from curvefact.cli.files import parse_branch_file, parse_mf_file, parse_module_file
from curvefact.exceptions import ExpressionSyntaxError, InputFileError, UnknownVariable
from curvefact.models import Branch, MatrixFactorization, ModuleData


def test_read_branch(static_dir, poly):
    b = read_input(static_dir / "exc5def.branch")
    assert isinstance(b, Branch)
    assert b.name == "exC5def"
    assert b.params == ("s6",)
    assert b.coords[1] == poly("t^6 + (1+s6)*t^7", ("t", "s6"))


def test_read_module(static_dir):
    m = read_input(static_dir / "m467_t7.module")
    assert isinstance(m, ModuleData)
    assert m.orders == (0, 7)
    assert m.plane.name == "M(4,6,7) over (t^4, t^6+t^7)"


def test_read_mf_without_h(static_dir):
    mf = read_input(static_dir / "exc5mf.mf")
    assert isinstance(mf, MatrixFactorization)
    assert mf.d @ mf.h == mf.h @ mf.d
    assert mf.gens.orders == (0, 7)
    assert mf.F.normalization.monomial == "as given"


def test_syntax_error_location(static_dir):
    with pytest.raises(ExpressionSyntaxError) as exc_info:
        read_input(static_dir / "broken.branch")
    assert exc_info.value.line == 3
    assert exc_info.value.column == 3
    assert str(exc_info.value).startswith("line 3, column 3: ")


def test_unknown_suffix(tmp_path):
    path = tmp_path / "curve.txt"
    path.write_text("coord: t^2\n")
    with pytest.raises(InputFileError, match="unknown input type '.txt'"):
        read_input(path)


def test_missing_file(tmp_path):
    with pytest.raises(InputFileError, match="Cannot read"):
        read_input(tmp_path / "absent.branch")


def test_comments_and_options():
    bf = parse_branch_file("# cusp\nname: c\n\ncoord: t^2  # x\ncoord: t^3\noption trunc = 10\n")
    assert bf.coords == ("t^2", "t^3")
    assert bf.options == {"trunc": "10"}
    assert bf.lines == {"name": 2, "coord 1": 4, "coord 2": 5, "option trunc": 6}


@pytest.mark.parametrize(
    "text,message",
    [
        ("coord: t^2\ncoord t^3\n", "line 2: expected 'key: value'"),
        ("name: a\nname: b\ncoord: t^2\ncoord: t^3\n", "line 2: 'name' is given twice"),
        ("coord: t^2\ncolour: red\n", "line 2: unknown key 'colour'"),
        ("coord[1,1]: t^2\n", "line 1: 'coord' takes no index"),
        ("coord: t^2\n", "at least 2 coord lines"),
    ],
)
def test_branch_file_errors(text, message):
    with pytest.raises(InputFileError, match=message):
        parse_branch_file(text)


def test_module_file_needs_plane():
    with pytest.raises(InputFileError, match="'y:' line"):
        parse_module_file("x: t^3\ngen: 1\n")


def test_module_defaults_to_one_generator():
    assert parse_module_file("x: t^3\ny: t^4\n").gens == ("1",)


@pytest.mark.parametrize(
    "text,message",
    [
        ("F: y^3 - x^4\nd[1,1]: y\n", "'size:' line"),
        ("size: two\nF: y^3 - x^4\n", "line 1: size must be an integer"),
        ("size: 1\nF: y^3 - x^4\nd[2,1]: y\n", "line 3: index \\(2,1\\) is outside a 1x1 matrix"),
        ("size: 1\nF: y\nd[1,1]: y\nd[1,1]: x\n", "line 4: d\\[1,1\\] is given twice"),
    ],
)
def test_mf_file_errors(text, message):
    with pytest.raises(InputFileError, match=message):
        parse_mf_file(text)


def test_undeclared_parameter(tmp_path):
    path = tmp_path / "family.branch"
    path.write_text("coord: t^4\ncoord: t^6 + s*t^7\n")
    with pytest.raises(UnknownVariable):
        read_input(path)


def test_invalid_trunc_option(tmp_path):
    path = tmp_path / "cusp.branch"
    path.write_text("coord: t^2\ncoord: t^3\noption trunc = ten\n")
    with pytest.raises(InputFileError, match="line 3: option trunc"):
        read_input(path)


def test_non_injective_branch(tmp_path):
    path = tmp_path / "double.branch"
    path.write_text("coord: t^4\ncoord: t^6\n")
    with pytest.raises(InputFileError, match="Invalid Branch"):
        read_input(path)
