import logging

__all__ = ("LOGGER",)

LOGGER = logging.getLogger("curvefact").getChild("branch")
