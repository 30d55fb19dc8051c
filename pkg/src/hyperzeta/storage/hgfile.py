"""Reading and writing ``.hg`` hypergraph files and polynomial golden files."""

from __future__ import annotations

from pathlib import Path
from typing import List, Optional, Union

from hyperzeta.algebra.poly import IntPoly
from hyperzeta.models import Hypergraph, InvalidHypergraphError


class HypergraphParseError(ValueError):
    """Raised when ``.hg`` text is malformed; carries the offending line number."""

    def __init__(self, message: str, line_number: Optional[int] = None) -> None:
        prefix = f"line {line_number}: " if line_number is not None else ""
        super().__init__(prefix + message)
        self.line_number = line_number


def parse_hypergraph(text: Union[str, bytes]) -> Hypergraph:
    """Parse ``vertices <n>`` followed by ``edge <i0> <i1> ...`` lines (0-based, ``#`` comments)."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise HypergraphParseError(f"input is not UTF-8: {exc}") from exc

    n_vertices: Optional[int] = None
    header_line = None
    edges: List[tuple] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword, *fields = line.split()
        if n_vertices is None:
            if keyword != "vertices" or len(fields) != 1:
                raise HypergraphParseError("expected 'vertices <n>' first", line_number)
            n_vertices = _parse_index(fields[0], line_number)
            if n_vertices < 1:
                raise HypergraphParseError("vertex count must be positive", line_number)
            header_line = line_number
            continue
        if keyword != "edge":
            raise HypergraphParseError(f"unknown directive {keyword!r}", line_number)
        if not fields:
            raise HypergraphParseError("empty hyperedge", line_number)
        members = [_parse_index(token, line_number) for token in fields]
        for v in members:
            if v >= n_vertices:
                raise HypergraphParseError(
                    f"vertex {v} out of range for {n_vertices} vertices", line_number
                )
        if len(set(members)) != len(members):
            raise HypergraphParseError("repeated vertex within hyperedge", line_number)
        edges.append(tuple(members))

    if n_vertices is None:
        raise HypergraphParseError("missing 'vertices <n>' line")
    try:
        return Hypergraph.from_edges(n_vertices, edges)
    except InvalidHypergraphError as exc:
        raise HypergraphParseError(str(exc), header_line) from exc


def _parse_index(token: str, line_number: int) -> int:
    try:
        value = int(token)
    except ValueError as exc:
        raise HypergraphParseError(f"not an integer: {token!r}", line_number) from exc
    if value < 0:
        raise HypergraphParseError(f"negative index {value}", line_number)
    return value


def format_hypergraph(h: Hypergraph, comment: Optional[str] = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"vertices {h.n_vertices}")
    lines.extend("edge " + " ".join(str(v) for v in edge) for edge in h.hyperedges)
    return "\n".join(lines) + "\n"


def read_hypergraph(path: Union[str, Path]) -> Hypergraph:
    return parse_hypergraph(Path(path).read_bytes())


def write_hypergraph(path: Union[str, Path], h: Hypergraph) -> None:
    Path(path).write_text(format_hypergraph(h), encoding="utf-8")


def read_polynomial(path: Union[str, Path]) -> IntPoly:
    """Golden files hold one line of ascending coefficients."""
    return IntPoly.parse(Path(path).read_text(encoding="utf-8"))


def write_polynomial(path: Union[str, Path], p: IntPoly) -> None:
    Path(path).write_text(p.to_text() + "\n", encoding="utf-8")


__all__ = [
    "HypergraphParseError",
    "format_hypergraph",
    "parse_hypergraph",
    "read_hypergraph",
    "read_polynomial",
    "write_hypergraph",
    "write_polynomial",
]
