"""JSON document formats for colorings and embedded simplices."""

from __future__ import annotations

from .coloring import ColoredGraph
from .geometry import DEFAULT_TOLERANCE, EmbeddedSimplex


class DocumentError(ValueError):
    """A malformed input document, with a field diagnostic."""


def coloring_to_doc(g: ColoredGraph) -> dict:
    """Serialize a coloring: edges stored with i < j, classes ordered by their
    least edge."""
    classes = [sorted(edges) for edges in g.classes()]
    if any(not edges for edges in classes):
        raise ValueError("cannot serialize a coloring with empty color classes")
    classes.sort(key=lambda edges: edges[0])
    return {"n": g.n, "colors": [[[i, j] for i, j in edges] for edges in classes]}


def coloring_from_doc(doc) -> ColoredGraph:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    n = doc.get("n")
    if not isinstance(n, int) or n < 1:
        raise DocumentError("field 'n': expected an integer >= 1")
    classes = doc.get("colors")
    if not isinstance(classes, list) or not classes:
        raise DocumentError("field 'colors': expected a non-empty array of edge arrays")
    parsed = []
    for c, edges in enumerate(classes):
        if not isinstance(edges, list) or not edges:
            raise DocumentError(f"colors[{c}]: expected a non-empty array of edges")
        cleaned = []
        for k, edge in enumerate(edges):
            if (
                not isinstance(edge, list)
                or len(edge) != 2
                or not all(isinstance(v, int) for v in edge)
            ):
                raise DocumentError(f"colors[{c}][{k}]: expected an edge [i, j]")
            i, j = edge
            if not 0 <= i < j <= n:
                raise DocumentError(
                    f"colors[{c}][{k}]: edge [{i}, {j}] needs 0 <= i < j <= {n}"
                )
            cleaned.append((i, j))
        parsed.append(cleaned)
    try:
        return ColoredGraph.from_classes(n, parsed)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def simplex_to_doc(s: EmbeddedSimplex) -> dict:
    return {
        "n": s.n,
        "points": [[float(x) for x in row] for row in s.coords],
        "tolerance": s.tolerance,
    }


def simplex_from_doc(doc, tolerance: float | None = None) -> EmbeddedSimplex:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    n = doc.get("n")
    if not isinstance(n, int) or n < 1:
        raise DocumentError("field 'n': expected an integer >= 1")
    points = doc.get("points")
    if not isinstance(points, list) or len(points) != n + 1:
        raise DocumentError(f"field 'points': expected {n + 1} coordinate rows")
    width = None
    for k, row in enumerate(points):
        if not isinstance(row, list) or not all(isinstance(x, (int, float)) for x in row):
            raise DocumentError(f"points[{k}]: expected an array of numbers")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise DocumentError(f"points[{k}]: expected {width} coordinates")
    if tolerance is None:
        tolerance = doc.get("tolerance", DEFAULT_TOLERANCE)
    if not isinstance(tolerance, (int, float)) or tolerance < 0:
        raise DocumentError("field 'tolerance': expected a non-negative number")
    try:
        return EmbeddedSimplex(points, float(tolerance))
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
