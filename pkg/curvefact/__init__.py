__version__ = "0.1.0"
__grammar_version__ = "1.0.0"
