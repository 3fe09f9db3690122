"""The two [q+5, 3, q+2] near-MDS constructions.

Even q: take the hyperoval columns (f(a), a, 1) for every field element plus
(1,0,0), (0,1,0), then append (1,1,0), (0,v,1), (v,0,1) for any v outside
the image of x -> f(x)+x (q/2 admissible choices).

Odd q: take the conic columns (a^2, a, 1) plus (1,0,0), then append
(0,1,0), (1,1,0), (0,w,-1), (w,0,1) for any w with eta(w) = eta(1+4w) = -1
((q-2+eta(-1))/4 admissible choices; none exist at q=3).

Both column sets are (q+5, 3)-arcs, and the weight distributions admit
closed forms that the exhaustive enumerator reproduces exactly.
"""

from dataclasses import dataclass

from .field import GF
from .codes import GeneratorMatrix, WeightDistribution
from .opoly import OPolynomial, evaluate, is_o_polynomial, linear_shift_image

CENSUS_KINDS = ("even-A1", "even-A2", "odd-B1", "odd-B2")


def valid_v_set(f: OPolynomial) -> frozenset[int]:
    """Admissible v for the even construction: the complement of the image of
    x -> f(x) + x.  Exactly q/2 elements for an o-polynomial."""
    F = f.field
    verdict = is_o_polynomial(f)
    if not verdict:
        raise ValueError(f"not an o-polynomial (failed {verdict.condition})")
    return frozenset(range(F.q)) - linear_shift_image(f)


def valid_w_set(F: GF) -> frozenset[int]:
    """Admissible w for the odd construction, by exhaustive scan."""
    if F.p == 2:
        raise ValueError("the odd construction needs odd characteristic")
    eta = F.quadratic_character
    four = F.add(F.add(1, 1), F.add(1, 1))
    out = frozenset(
        w for w in range(F.q)
        if eta(w) == -1 and eta(F.add(1, F.mul(four, w))) == -1
    )
    if not out:
        raise ValueError(f"no admissible w exists at q={F.q}")
    return out


def build_even_matrix(f: OPolynomial, v: int, order: str = "powers") -> GeneratorMatrix:
    """3 x (q+5) generator matrix for even q; the first q+2 columns are the
    hyperoval of f in the requested element order."""
    F = f.field
    F.check(v)
    if v not in valid_v_set(f):
        raise ValueError(f"v={v} lies in the image of x -> f(x)+x; not admissible")
    cols = [(evaluate(f, a), a, 1) for a in F.elements(order)]
    cols += [(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, v, 1), (v, 0, 1)]
    return GeneratorMatrix.from_columns(F, cols)


def build_odd_matrix(F: GF, w: int, order: str = "powers") -> GeneratorMatrix:
    """3 x (q+5) generator matrix for odd q; the first q+1 columns are the
    standard oval in the requested element order."""
    F.check(w)
    if w not in valid_w_set(F):
        raise ValueError(f"w={w} fails eta(w) = eta(1+4w) = -1; not admissible")
    minus_one = F.neg(1)
    cols = [(F.mul(a, a), a, 1) for a in F.elements(order)]
    cols += [(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, w, minus_one), (w, 0, 1)]
    return GeneratorMatrix.from_columns(F, cols)


def even_closed_form(q: int) -> WeightDistribution:
    """Closed-form weight distribution of the even construction."""
    if q < 4 or q & (q - 1):
        raise ValueError(f"q={q} must be a power of 2, q >= 4")
    n = q + 5
    counts = [0] * (n + 1)
    counts[0] = 1
    counts[q + 2] = (q - 1) * (3 * q + 8) // 2
    counts[q + 3] = (q - 1) * (q + 2) * (q - 2) // 2
    counts[q + 4] = 3 * (q - 1) * (q - 2) // 2
    counts[q + 5] = (q - 1) * (q - 2) ** 2 // 2
    return WeightDistribution(counts, q, 3)


def odd_closed_form(q: int) -> WeightDistribution:
    """Closed-form weight distribution of the odd construction, branching on
    q mod 4."""
    if q < 5 or q % 2 == 0:
        raise ValueError(f"q={q} must be an odd prime power >= 5")
    n = q + 5
    counts = [0] * (n + 1)
    counts[0] = 1
    if q % 4 == 1:
        counts[q + 2] = (2 * q + 2) * (q - 1)
        counts[q + 3] = (q - 1) * (q * q - 3 * q + 8) // 2
        counts[q + 4] = (3 * q - 9) * (q - 1)
        counts[q + 5] = (q - 1) * (q * q - 5 * q + 8) // 2
    else:
        counts[q + 2] = (2 * q + 1) * (q - 1)
        counts[q + 3] = (q - 1) * (q * q - 3 * q + 14) // 2
        counts[q + 4] = (3 * q - 12) * (q - 1)
        counts[q + 5] = (q - 1) * (q * q - 5 * q + 10) // 2
    return WeightDistribution(counts, q, 3)


@dataclass(frozen=True)
class CensusResult:
    kind: str
    q: int
    counts: dict  # number of solutions -> number of (u1, u2) pairs
    diagonal_ok: bool

    def pairs_with(self, size: int) -> int:
        return self.counts.get(size, 0)

    def to_dict(self):
        return {
            "kind": self.kind,
            "q": self.q,
            "counts": {str(s): c for s, c in sorted(self.counts.items())},
            "diagonal_ok": self.diagonal_ok,
        }


def solution_count_census(kind: str, F: GF, f: OPolynomial | None = None,
                          v: int | None = None, w: int | None = None) -> CensusResult:
    """Tally, over all (u1, u2) in (F*)^2, the number of roots x of the
    construction's line equations:

      even-A1:  u1 f(x) + u2 x + u2 v = 0
      even-A2:  u1 f(x) + u2 x + u1 v = 0
      odd-B1:   u1 x^2  + u2 x + u2 w = 0
      odd-B2:   u1 x^2  + u2 x - u1 w = 0

    diagonal_ok reports that the structurally solution-free diagonal pairs
    (u, u) for the even kinds, (u, -u) for the odd kinds, have zero roots.
    """
    if kind not in CENSUS_KINDS:
        raise ValueError(f"unknown census kind {kind!r}")
    q = F.q
    if kind.startswith("even"):
        if f is None or v is None:
            raise ValueError(f"{kind} needs an o-polynomial and v")
        if v not in valid_v_set(f):
            raise ValueError(f"v={v} is not admissible")
        tab = [evaluate(f, x) for x in range(q)]
        const_from_u1 = kind == "even-A2"
        shift = v
    else:
        if w is None:
            raise ValueError(f"{kind} needs w")
        if w not in valid_w_set(F):
            raise ValueError(f"w={w} is not admissible")
        tab = [F.mul(x, x) for x in range(q)]
        const_from_u1 = kind == "odd-B2"
        shift = F.neg(w) if const_from_u1 else w
    add, mul = F.add, F.mul
    counts: dict[int, int] = {}
    diagonal_ok = True
    for u1 in range(1, q):
        row1 = F.scalar_row(u1)
        for u2 in range(1, q):
            row2 = F.scalar_row(u2)
            const = mul(u1 if const_from_u1 else u2, shift)
            roots = 0
            for x in range(q):
                if add(add(row1[tab[x]], row2[x]), const) == 0:
                    roots += 1
            counts[roots] = counts.get(roots, 0) + 1
            diagonal = u2 == u1 if kind.startswith("even") else u2 == F.neg(u1)
            if diagonal and roots:
                diagonal_ok = False
    return CensusResult(kind, q, counts, diagonal_ok)
