from .lark_parser import LarkParser, ParserError, get_versions

__all__ = ("LarkParser", "ParserError", "get_versions")
