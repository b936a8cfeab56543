"""Line-oriented algebra file format.

::

    # comment
    algebra NAME
    vertices: v1 v2 v3
    arrows: a: v1 -> v2, b: v2 -> v3
    truncate: 2            # or:  relations: a.b, b.c.a

A well-formed file carries exactly one of ``truncate``/``relations``.  A
file with neither is read as the zero ideal, which is admissible only for
acyclic quivers; the admissibility check rejects it otherwise.  Only
monomial relations exist in this format: a relation is a single
dot-separated arrow path of length >= 2, never a sum.
"""

from __future__ import annotations

from .errors import AlgebraSyntaxError
from .quiver import MonomialAlgebra, Quiver


def parse_algebra(text: str) -> MonomialAlgebra:
    name = None
    vertices: list[str] | None = None
    arrows: list[tuple[str, str, str]] | None = None
    truncate_line = None
    relations_line = None
    vertices_lineno = None
    arrows_lineno = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("algebra"):
            rest = line[len("algebra") :].strip()
            if not rest:
                raise AlgebraSyntaxError("missing algebra name", lineno)
            if name is not None:
                raise AlgebraSyntaxError("duplicate 'algebra' line", lineno)
            name = rest
        elif line.startswith("vertices:"):
            if vertices is not None:
                raise AlgebraSyntaxError("duplicate 'vertices' line", lineno)
            vertices = line[len("vertices:") :].split()
            vertices_lineno = lineno
            if not vertices:
                raise AlgebraSyntaxError("empty vertex list", lineno)
        elif line.startswith("arrows:"):
            if arrows is not None:
                raise AlgebraSyntaxError("duplicate 'arrows' line", lineno)
            arrows = _parse_arrows(line[len("arrows:") :], lineno)
            arrows_lineno = lineno
        elif line.startswith("truncate:"):
            if truncate_line is not None:
                raise AlgebraSyntaxError("duplicate 'truncate' line", lineno)
            truncate_line = (line[len("truncate:") :].strip(), lineno)
        elif line.startswith("relations:"):
            if relations_line is not None:
                raise AlgebraSyntaxError("duplicate 'relations' line", lineno)
            relations_line = (line[len("relations:") :].strip(), lineno)
        else:
            raise AlgebraSyntaxError(f"unrecognized line {line!r}", lineno)

    if vertices is None:
        raise AlgebraSyntaxError("missing 'vertices:' line")
    if truncate_line is not None and relations_line is not None:
        raise AlgebraSyntaxError(
            "give exactly one of 'truncate:' or 'relations:'", relations_line[1]
        )

    try:
        quiver = Quiver(vertices, arrows or [])
    except AlgebraSyntaxError:
        raise
    except Exception as exc:
        raise AlgebraSyntaxError(str(exc), arrows_lineno or vertices_lineno)

    truncation = None
    if truncate_line is not None:
        spec, lineno = truncate_line
        try:
            truncation = int(spec)
        except ValueError:
            raise AlgebraSyntaxError(f"truncation level {spec!r} is not an integer", lineno)
        if truncation < 2:
            raise AlgebraSyntaxError("truncation level must be >= 2", lineno)

    relations = []
    if relations_line is not None:
        spec, lineno = relations_line
        for chunk in spec.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            if "+" in chunk or "-" in chunk:
                raise AlgebraSyntaxError(
                    f"relation {chunk!r} is not a single path; "
                    "only monomial relations are supported",
                    lineno,
                )
            names = [part.strip() for part in chunk.split(".")]
            try:
                path = quiver.path_by_names(names)
            except Exception as exc:
                raise AlgebraSyntaxError(f"bad relation {chunk!r}: {exc}", lineno)
            if len(path) < 2:
                raise AlgebraSyntaxError(
                    f"relation {chunk!r} has length {len(path)} < 2", lineno
                )
            relations.append(path)

    return MonomialAlgebra(
        quiver, truncation=truncation, relations=relations, name=name or "A"
    )


def _parse_arrows(spec: str, lineno: int) -> list[tuple[str, str, str]]:
    arrows = []
    for chunk in spec.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if ":" not in chunk or "->" not in chunk:
            raise AlgebraSyntaxError(
                f"bad arrow {chunk!r}, expected 'name: v -> w'", lineno
            )
        name, rest = chunk.split(":", 1)
        src, tgt = rest.split("->", 1)
        name, src, tgt = name.strip(), src.strip(), tgt.strip()
        if not (name and src and tgt):
            raise AlgebraSyntaxError(
                f"bad arrow {chunk!r}, expected 'name: v -> w'", lineno
            )
        arrows.append((name, src, tgt))
    return arrows


def load_algebra(path) -> MonomialAlgebra:
    with open(path, encoding="utf-8") as handle:
        return parse_algebra(handle.read())


def render_algebra_file(algebra: MonomialAlgebra) -> str:
    """Serialize back to the file format; parse(render(A)) == A."""
    q = algebra.quiver
    lines = [f"algebra {algebra.name}"]
    lines.append("vertices: " + " ".join(q.vertex_names))
    if q.arrows:
        lines.append(
            "arrows: "
            + ", ".join(
                f"{a.name}: {q.vertex_names[a.source]} -> {q.vertex_names[a.target]}"
                for a in q.arrows
            )
        )
    if algebra.is_truncated:
        lines.append(f"truncate: {algebra.truncation}")
    elif algebra.relations:
        lines.append(
            "relations: " + ", ".join(q.path_name(r) for r in algebra.relations)
        )
    return "\n".join(lines) + "\n"
