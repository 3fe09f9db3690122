"""Points, lines and arcs in the projective plane PG(2,q).

Points and lines are canonical homogeneous triples of field-element indices:
the triple is scaled so its last nonzero coordinate is 1, which makes the
canonical form unique per 1-dimensional subspace and matches the reference
notations (x^2, x, 1) and (1, 0, 0).  A line u is incident with a point x
when the dot product x.u vanishes; the representation of points and lines is
identical, so incidence is symmetric under duality.
"""

from .field import GF
from .opoly import OPolynomial, evaluate, is_o_polynomial

Triple = tuple[int, int, int]


def canonical(F: GF, triple) -> Triple:
    """Scale so the last nonzero coordinate becomes 1."""
    t = tuple(F.check(int(c)) for c in triple)
    if len(t) != 3:
        raise ValueError(f"expected a homogeneous triple, got {triple!r}")
    for i in (2, 1, 0):
        if t[i]:
            s = F.inv(t[i])
            return tuple(F.mul(s, c) for c in t)
    raise ValueError("the zero triple is not a projective point")


def all_points(F: GF) -> list[Triple]:
    """The q^2+q+1 canonical points, lexicographically ordered."""
    pts = [(x, y, 1) for x in range(F.q) for y in range(F.q)]
    pts += [(x, 1, 0) for x in range(F.q)]
    pts.append((1, 0, 0))
    pts.sort()
    return pts


# Lines use the same canonical representation.
all_lines = all_points


def incident(F: GF, point, line) -> bool:
    a = F.mul(point[0], line[0])
    b = F.mul(point[1], line[1])
    c = F.mul(point[2], line[2])
    return F.add(F.add(a, b), c) == 0


def line_through(F: GF, p1, p2) -> Triple:
    """The unique line through two distinct points (cross product)."""
    a1, a2, a3 = p1
    b1, b2, b3 = p2
    cross = (
        F.sub(F.mul(a2, b3), F.mul(a3, b2)),
        F.sub(F.mul(a3, b1), F.mul(a1, b3)),
        F.sub(F.mul(a1, b2), F.mul(a2, b1)),
    )
    if cross == (0, 0, 0):
        raise ValueError(f"points {p1} and {p2} coincide projectively")
    return canonical(F, cross)


def lines_through_point(F: GF, point) -> list[Triple]:
    """The q+1 lines of the pencil through a point."""
    return [u for u in all_lines(F) if incident(F, point, u)]


def validate_point_set(F: GF, points) -> list[Triple]:
    pts = [canonical(F, p) for p in points]
    if len(set(pts)) != len(pts):
        raise ValueError("point set has projectively repeated points")
    return pts


def line_point_counts(F: GF, points) -> dict[Triple, int]:
    """Incidence count per canonical line (lines hitting no point omitted)."""
    pts = [canonical(F, p) for p in points]
    counts: dict[Triple, int] = {}
    for u in all_lines(F):
        c = sum(1 for p in pts if incident(F, p, u))
        if c:
            counts[u] = c
    return counts


def line_intersection_profile(F: GF, points) -> tuple[dict[int, int], int]:
    """Map size -> number of lines meeting the set in that many points, over
    all q^2+q+1 lines, plus the maximum size."""
    counts = line_point_counts(F, points)
    total = F.q * F.q + F.q + 1
    profile: dict[int, int] = {}
    for c in counts.values():
        profile[c] = profile.get(c, 0) + 1
    hit = sum(profile.values())
    if hit < total:
        profile[0] = total - hit
    return profile, max(counts.values(), default=0)


def is_arc(F: GF, points) -> bool:
    """No three points collinear (pairwise distinct required)."""
    pts = validate_point_set(F, points)
    _, biggest = line_intersection_profile(F, pts)
    return biggest <= 2


def is_n3_arc(F: GF, points) -> bool:
    """Some three points collinear but never four."""
    pts = validate_point_set(F, points)
    _, biggest = line_intersection_profile(F, pts)
    return biggest == 3


def hyperoval_from_opoly(f: OPolynomial, order: str = "powers") -> list[Triple]:
    """The q+2 points {(f(c), c, 1)} + {(1,0,0), (0,1,0)}, columns ordered by
    the requested element enumeration."""
    verdict = is_o_polynomial(f)
    if not verdict:
        raise ValueError(
            f"not an o-polynomial (failed {verdict.condition}"
            + (f" at a={verdict.witness})" if verdict.witness is not None else ")")
        )
    F = f.field
    pts = [(evaluate(f, c), c, 1) for c in F.elements(order)]
    pts.append((1, 0, 0))
    pts.append((0, 1, 0))
    return pts


def standard_oval(F: GF, order: str = "powers") -> list[Triple]:
    """The q+1 points {(x^2, x, 1)} + {(1,0,0)} over odd q."""
    if F.p == 2:
        raise ValueError("the standard oval needs odd characteristic")
    pts = [(F.mul(x, x), x, 1) for x in F.elements(order)]
    pts.append((1, 0, 0))
    return pts


def point_to_str(F: GF, point, powers: bool = False) -> str:
    return ":".join(F.element_to_str(c, powers) for c in point)


def point_from_str(F: GF, text: str) -> Triple:
    toks = text.split(":")
    if len(toks) != 3:
        raise ValueError(f"expected 'x:y:z', got {text!r}")
    return canonical(F, tuple(F.element_from_str(t) for t in toks))
