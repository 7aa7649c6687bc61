"""Sphere triangulations from two polygon triangulations, and four-coloring.

Gluing two triangulations of the same polygon along their boundary gives a
triangulation of the sphere.  A signing of its faces is a Heawood signing
when the signs around every vertex sum to 0 mod 3; such a signing exists
exactly when the vertices admit a proper four-coloring, and gluing any
triangulation to itself with mirror-opposite signs always produces one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .triangulation import Coloring, Diagonal, Face, Triangulation, faces, validate

FaceKey = tuple[str, int]  # hemisphere "N"/"S" and face label


@dataclass
class SphereTriangulation:
    n: int
    north: Triangulation
    south: Triangulation
    face_signs: dict[FaceKey, int] | None = None

    def __post_init__(self) -> None:
        if self.north.n != self.n or self.south.n != self.n:
            raise ValueError("hemispheres disagree with n")
        for hemi, t in (("north", self.north), ("south", self.south)):
            problems = validate(t)
            if problems:
                raise ValueError(f"{hemi} is not a triangulation: {problems[0]}")


def glue(north: Triangulation, south: Triangulation,
         face_signs: dict[FaceKey, int] | None = None) -> SphereTriangulation:
    if north.n != south.n:
        raise ValueError(f"cannot glue n={north.n} and n={south.n}")
    return SphereTriangulation(north.n, north, south, face_signs)


def mirror_sphere(t: Triangulation, eps: Coloring) -> SphereTriangulation:
    """Glue t to itself, the south copy carrying the opposite face signs."""
    signs: dict[FaceKey, int] = {}
    for label in t.ring.inner:
        signs[("N", label)] = eps[label - 1]
        signs[("S", label)] = -eps[label - 1]
    return SphereTriangulation(t.n, t, t, signs)


def sphere_faces(s: SphereTriangulation) -> list[tuple[FaceKey, Face]]:
    out = [(("N", f.label), f) for f in faces(s.north)]
    out += [(("S", f.label), f) for f in faces(s.south)]
    return out


def sphere_edges(s: SphereTriangulation) -> set[Diagonal]:
    edges = set(s.north.ring.boundary_edges())
    edges |= set(s.north.diagonals)
    edges |= set(s.south.diagonals)
    return edges


def heawood_check(s: SphereTriangulation) -> list[int]:
    """Vertices whose incident face signs do not sum to 0 mod 3 (empty = pass)."""
    if s.face_signs is None:
        raise ValueError("heawood check needs face signs")
    total = {v: 0 for v in s.north.ring.vertices}
    for key, face in sphere_faces(s):
        if key not in s.face_signs:
            raise ValueError(f"face {key} is unsigned")
        for v in face:
            total[v] += s.face_signs[key]
    return [v for v in sorted(total) if total[v] % 3 != 0]


def color_graph(vertices: list[int], edges: set[tuple[int, int]], colors: int = 4) -> dict[int, int] | None:
    """Greedy-ordered backtracking proper coloring; None when impossible."""
    adj: dict[int, set[int]] = {v: set() for v in vertices}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    order = sorted(vertices, key=lambda v: (-len(adj[v]), v))
    assignment: dict[int, int] = {}

    def backtrack(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        used = {assignment[u] for u in adj[v] if u in assignment}
        for c in range(colors):
            if c in used:
                continue
            assignment[v] = c
            if backtrack(i + 1):
                return True
            del assignment[v]
        return False

    return dict(assignment) if backtrack(0) else None


def four_color(s: SphereTriangulation) -> dict[int, int] | None:
    """A proper vertex coloring of the glued sphere with colors 0..3."""
    return color_graph(list(s.north.ring.vertices), sphere_edges(s))


def coloring_violations(s: SphereTriangulation, coloring: dict[int, int]) -> list[Diagonal]:
    bad = []
    for a, b in sorted(sphere_edges(s)):
        if a not in coloring or b not in coloring or coloring[a] == coloring[b]:
            bad.append((a, b))
    return bad


def verify_coloring(s: SphereTriangulation, coloring: dict[int, int]) -> bool:
    return not coloring_violations(s, coloring)
