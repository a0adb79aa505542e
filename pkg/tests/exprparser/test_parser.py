import pytest

from lark import Tree

from curvefact.exceptions import ExpressionSyntaxError
from curvefact.exprparser import LarkParser
from curvefact.exprparser.lark_parser import ParserError, get_versions


class TestParserV1_0_0:
    version = (1, 0, 0)
    variant = "default"

    @pytest.fixture(autouse=True)
    def set_up(self):
        self.parser = LarkParser(version=self.version, variant=self.variant)

    def parse(self, inp):
        return self.parser.parse(inp)

    def test_literals(self):
        assert self.parse("1") is not None
        assert isinstance(self.parse("3/4*t"), Tree)
        assert isinstance(self.parse("t^12"), Tree)

    def test_names(self):
        assert isinstance(self.parse("s6*t^7"), Tree)
        assert isinstance(self.parse("_c1 + x"), Tree)
        with pytest.raises(ExpressionSyntaxError):
            self.parse("6s*t")

    def test_operators(self):
        assert isinstance(self.parse("-(x - y)^2 + +x*y"), Tree)
        with pytest.raises(ExpressionSyntaxError):
            self.parse("2 x")  # no implicit multiplication
        with pytest.raises(ExpressionSyntaxError):
            self.parse("t^-1")
        with pytest.raises(ExpressionSyntaxError):
            self.parse("t^x")
        with pytest.raises(ExpressionSyntaxError):
            self.parse("x/y")

    def test_empty(self):
        with pytest.raises(ExpressionSyntaxError):
            self.parse("")

    def test_error_position(self):
        with pytest.raises(ExpressionSyntaxError) as exc_info:
            self.parse("t^^4")
        assert exc_info.value.line == 1
        assert exc_info.value.column == 3
        assert str(exc_info.value).startswith("line 1, column 3:")

        with pytest.raises(ExpressionSyntaxError) as exc_info:
            self.parser.parse("t^^4", line_offset=2)
        assert exc_info.value.line == 3

    def test_repr(self):
        assert repr(self.parser) is not None
        self.parse("t^4 + t^6")
        assert "pow" in repr(self.parser)


def test_versions():
    assert (1, 0, 0) in get_versions()
    assert LarkParser().version == max(get_versions())
    with pytest.raises(ParserError):
        LarkParser(version=(0, 0, 1))
    with pytest.raises(ParserError):
        LarkParser(variant="unknown")
