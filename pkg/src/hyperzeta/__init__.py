"""Exact zeta functions of finite hypergraphs."""

__version__ = "0.1.0"
