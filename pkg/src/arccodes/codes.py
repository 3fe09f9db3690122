"""Linear-code analytics over GF(q): brute-force weight distributions, duals,
Singleton-defect classification, the near-MDS closed-form weight formulas,
and minimum-weight support structure for dimension-3 arc codes.

The brute-force enumerator walks one representative per projective message
class ((q^k-1)/(q-1) codewords) and scales nonzero weights by q-1, so a
dimension-3 code costs q^2+q+1 codeword evaluations regardless of q^3.
"""

import math
from dataclasses import dataclass

from .field import GF, parse_descriptor
from . import geometry

ENUMERATION_BUDGET = 2 ** 32


class BudgetExceededError(RuntimeError):
    """Raised when an exhaustive enumeration would exceed its guard."""


class GeneratorMatrix:
    """A k x n full-rank matrix over GF(q), stored row-major as int indices."""

    def __init__(self, field: GF, rows):
        self.field = field
        self.rows = tuple(tuple(field.check(int(e)) for e in row) for row in rows)
        self.k = len(self.rows)
        if self.k < 1:
            raise ValueError("a generator matrix needs at least one row")
        self.n = len(self.rows[0])
        if any(len(r) != self.n for r in self.rows):
            raise ValueError("ragged rows")
        if self.n < self.k:
            raise ValueError(f"length n={self.n} below dimension k={self.k}")
        _, pivots = rref(field, self.rows)
        if len(pivots) != self.k:
            raise ValueError(f"rank {len(pivots)} below row count {self.k}")
        self._columns = tuple(zip(*self.rows))

    @classmethod
    def from_columns(cls, field: GF, columns) -> "GeneratorMatrix":
        return cls(field, list(zip(*columns)))

    def columns(self):
        return self._columns

    def column_points(self):
        """Columns as canonical projective points (k = 3 only)."""
        if self.k != 3:
            raise ValueError("column points are defined for k = 3")
        return [geometry.canonical(self.field, c) for c in self._columns]

    def __eq__(self, other):
        return (
            isinstance(other, GeneratorMatrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"GeneratorMatrix(q={self.field.q}, k={self.k}, n={self.n})"

    def to_text(self, powers: bool = False) -> str:
        F = self.field
        head = f"q={F.q} {F.descriptor()}"
        body = "\n".join(
            " ".join(F.element_to_str(e, powers) for e in row) for row in self.rows
        )
        return head + "\n" + body + "\n"

    @classmethod
    def from_text(cls, text: str) -> "GeneratorMatrix":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty matrix text")
        head = dict(tok.split("=", 1) for tok in lines[0].split())
        F = parse_descriptor(
            f"p={head['p']} m={head['m']} mod={head['mod']}"
        )
        if "q" in head and int(head["q"]) != F.q:
            raise ValueError(f"header q={head['q']} disagrees with p^m={F.q}")
        rows = [[F.element_from_str(tok) for tok in ln.split()] for ln in lines[1:]]
        return cls(F, rows)


def rref(F: GF, rows):
    """Reduced row echelon form over GF(q); returns (rows, pivot columns)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    n = len(mat[0])
    pivots = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        s = F.inv(mat[r][col])
        mat[r] = [F.mul(s, e) for e in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


class WeightDistribution:
    """Counts A_0..A_n; validates A_0 = 1, nonnegativity and sum q^k when the
    code parameters are supplied."""

    def __init__(self, counts, q: int | None = None, k: int | None = None):
        self.counts = tuple(int(c) for c in counts)
        self.n = len(self.counts) - 1
        if any(c < 0 for c in self.counts):
            raise ValueError("negative weight count")
        if self.counts[0] != 1:
            raise ValueError(f"A_0 = {self.counts[0]} != 1")
        if q is not None and k is not None and sum(self.counts) != q ** k:
            raise ValueError(f"counts sum to {sum(self.counts)}, expected {q ** k}")

    def __eq__(self, other):
        return isinstance(other, WeightDistribution) and self.counts == other.counts

    def __getitem__(self, w: int) -> int:
        return self.counts[w]

    def minimum_distance(self) -> int:
        return next(w for w in range(1, self.n + 1) if self.counts[w])

    def to_pairs(self):
        return [[w, c] for w, c in enumerate(self.counts) if c]

    @classmethod
    def from_pairs(cls, n: int, pairs, q=None, k=None):
        counts = [0] * (n + 1)
        for w, c in pairs:
            counts[w] = c
        return cls(counts, q, k)

    def __repr__(self):
        return f"WeightDistribution({self.to_pairs()})"


def weight_of(G: GeneratorMatrix, message) -> int:
    """Hamming weight of the codeword message . G."""
    F = G.field
    message = [F.check(int(u)) for u in message]
    if len(message) != G.k:
        raise ValueError(f"message length {len(message)} != k={G.k}")
    w = 0
    for col in G.columns():
        acc = 0
        for u, e in zip(message, col):
            acc = F.add(acc, F.mul(u, e))
        if acc:
            w += 1
    return w


def projective_messages(F: GF, k: int):
    """One representative per projective class: first nonzero coordinate 1."""
    q = F.q
    for lead in range(k):
        tail = [0] * (k - lead - 1)
        while True:
            yield (0,) * lead + (1,) + tuple(tail)
            i = len(tail) - 1
            while i >= 0:
                tail[i] += 1
                if tail[i] < q:
                    break
                tail[i] = 0
                i -= 1
            if i < 0:
                break


def weight_distribution(G: GeneratorMatrix, budget: int = ENUMERATION_BUDGET) -> WeightDistribution:
    """Exact counts by projective enumeration; nonzero weights appear q-1
    times per class."""
    F = G.field
    q = F.q
    if q ** G.k > budget:
        raise BudgetExceededError(
            f"q^k = {q ** G.k} exceeds the enumeration budget {budget}"
        )
    counts = [0] * (G.n + 1)
    counts[0] = 1
    cols = G.columns()
    n = G.n
    if G.k == 3:
        scalar_row = F.scalar_row
        if F.p == 2:
            for u0, u1, u2 in projective_messages(F, 3):
                t0, t1, t2 = scalar_row(u0), scalar_row(u1), scalar_row(u2)
                w = sum(1 for a, b, c in cols if t0[a] ^ t1[b] ^ t2[c])
                counts[w] += q - 1
        else:
            s = F._add_flat
            if s is not None:
                for u0, u1, u2 in projective_messages(F, 3):
                    t0, t1, t2 = scalar_row(u0), scalar_row(u1), scalar_row(u2)
                    w = sum(1 for a, b, c in cols if s[s[t0[a] * q + t1[b]] * q + t2[c]])
                    counts[w] += q - 1
            else:
                add = F.add
                for u0, u1, u2 in projective_messages(F, 3):
                    t0, t1, t2 = scalar_row(u0), scalar_row(u1), scalar_row(u2)
                    w = sum(1 for a, b, c in cols if add(add(t0[a], t1[b]), t2[c]))
                    counts[w] += q - 1
    else:
        add, mul = F.add, F.mul
        for u in projective_messages(F, G.k):
            w = 0
            for col in cols:
                acc = 0
                for ui, e in zip(u, col):
                    if ui and e:
                        acc = add(acc, mul(ui, e))
                if acc:
                    w += 1
            counts[w] += q - 1
    return WeightDistribution(counts, q, G.k)


def dual_matrix(G: GeneratorMatrix) -> GeneratorMatrix:
    """A generator matrix of the dual code (null space basis, G . H^T = 0)."""
    F = G.field
    if G.n == G.k:
        raise ValueError("the dual of a full [n, n] code is zero-dimensional")
    R, pivots = rref(F, G.rows)
    free = [j for j in range(G.n) if j not in pivots]
    rows = []
    for j in free:
        h = [0] * G.n
        h[j] = 1
        for i, pc in enumerate(pivots):
            h[pc] = F.neg(R[i][j])
        rows.append(h)
    return GeneratorMatrix(F, rows)


@dataclass(frozen=True)
class CodeProfile:
    n: int
    k: int
    d: int
    d_dual: int | None
    defect: int
    defect_dual: int | None
    category: str  # MDS / AMDS / NMDS / other

    def to_dict(self):
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "d_dual": self.d_dual,
            "defect": self.defect,
            "defect_dual": self.defect_dual,
            "category": self.category,
        }


def _dual_distance_by_columns(G: GeneratorMatrix) -> int | None:
    """Minimum size of a dependent column set of G = d(dual).  Exact up to 4;
    None means "> 4"."""
    F = G.field
    cols = G.columns()
    if any(all(e == 0 for e in c) for c in cols):
        return 1
    canon = []
    for c in cols:
        lead = next(i for i, e in enumerate(c) if e)
        s = F.inv(c[lead])
        canon.append(tuple(F.mul(s, e) for e in c))
    if len(set(canon)) != len(canon):
        return 2
    if G.k == 3:
        # dependent triple <=> collinear canonical points
        pts = G.column_points()
        _, biggest = geometry.line_intersection_profile(F, pts)
        if biggest >= 3:
            return 3
        return 4 if G.n >= 4 else None
    n = G.n
    for size in (3, 4):
        if math.comb(n, size) > 250_000:
            return None
        from itertools import combinations

        for subset in combinations(range(n), size):
            sub = [[G.rows[i][j] for j in subset] for i in range(G.k)]
            _, pivots = rref(F, sub)
            if len(pivots) < size:
                return size
    return None


def classify(G: GeneratorMatrix, distribution: WeightDistribution | None = None) -> CodeProfile:
    """Fill the code profile; pass a precomputed distribution to reuse it."""
    if distribution is None:
        distribution = weight_distribution(G)
    d = distribution.minimum_distance()
    defect = G.n - G.k + 1 - d
    d_dual = _dual_distance_by_columns(G)
    defect_dual = None if d_dual is None else G.k + 1 - d_dual
    if defect == 0:
        category = "MDS"
    elif defect == 1 and defect_dual == 1:
        category = "NMDS"
    elif defect == 1:
        category = "AMDS"
    else:
        category = "other"
    return CodeProfile(G.n, G.k, d, d_dual, defect, defect_dual, category)


def nmds_closed_form(n: int, k: int, q: int, a_min: int):
    """Both full weight distributions of an [n, k, n-k] NMDS code from the
    count a_min of minimum-weight codewords (= the dual's, by the pairing).

    Returns (distribution of C, distribution of the dual).  Exact integer
    arithmetic; a negative intermediate count signals an inconsistent a_min.
    """
    if not (1 <= k < n):
        raise ValueError(f"bad NMDS parameters n={n}, k={k}")
    comb = math.comb
    primal = [0] * (n + 1)
    primal[0] = 1
    primal[n - k] = a_min
    for s in range(1, k + 1):
        base = comb(n, k - s) * sum(
            (-1) ** j * comb(n - k + s, j) * (q ** (s - j) - 1) for j in range(s)
        )
        val = base + (-1) ** s * comb(k, s) * a_min
        if val < 0:
            raise ValueError(f"A_{n - k + s} = {val} < 0: a_min={a_min} is inconsistent")
        primal[n - k + s] = val
    dual = [0] * (n + 1)
    dual[0] = 1
    dual[k] = a_min
    for s in range(1, n - k + 1):
        base = comb(n, k + s) * sum(
            (-1) ** j * comb(k + s, j) * (q ** (s - j) - 1) for j in range(s)
        )
        val = base + (-1) ** s * comb(n - k, s) * a_min
        if val < 0:
            raise ValueError(
                f"dual A_{k + s} = {val} < 0: a_min={a_min} is inconsistent"
            )
        dual[k + s] = val
    return (
        WeightDistribution(primal, q, k),
        WeightDistribution(dual, q, n - k),
    )


def min_weight_supports(G: GeneratorMatrix) -> list[tuple[int, int, int]]:
    """All collinear column triples {i, j, l} (0-based) of a dimension-3 code
    whose columns are pairwise non-proportional and never 4 on a line.

    These are exactly the supports of the weight-3 dual codewords, and their
    complements are the supports of the minimum-weight codewords.
    """
    F = G.field
    if G.k != 3:
        raise ValueError("minimum-weight supports need k = 3")
    pts = G.column_points()
    if len(set(pts)) != len(pts):
        raise ValueError("columns must be pairwise non-proportional")
    by_line: dict[tuple[int, int, int], list[int]] = {}
    for i in range(G.n):
        for j in range(i + 1, G.n):
            u = geometry.line_through(F, pts[i], pts[j])
            members = by_line.setdefault(u, [])
            if i not in members:
                members.append(i)
            if j not in members:
                members.append(j)
    triples = []
    for members in by_line.values():
        if len(members) >= 4:
            raise ValueError(f"four collinear columns: {sorted(members)}")
        if len(members) == 3:
            triples.append(tuple(sorted(members)))
    triples.sort()
    return triples


@dataclass(frozen=True)
class PairingVerdict:
    ok: bool
    min_weight_count: int
    dual_min_weight_count: int
    detail: str = ""

    def __bool__(self):
        return self.ok


def min_weight_pairing_check(G: GeneratorMatrix,
                             distribution: WeightDistribution | None = None) -> PairingVerdict:
    """For an NMDS code of dimension 3: every minimum-weight codeword has
    exactly one projective class of weight-3 dual codeword with disjoint
    support, and both codes have the same number of minimum-weight words."""
    F = G.field
    if distribution is None:
        distribution = weight_distribution(G)
    profile = classify(G, distribution)
    if profile.category != "NMDS":
        raise ValueError(f"pairing check needs an NMDS code, got {profile.category}")
    d = profile.d
    triples = set(min_weight_supports(G))
    a_min = distribution[d]
    a_min_dual = (F.q - 1) * len(triples)
    if a_min != a_min_dual:
        return PairingVerdict(False, a_min, a_min_dual,
                              "minimum-weight counts differ between code and dual")
    cols = G.columns()
    add, mul = F.add, F.mul
    for u in projective_messages(F, 3):
        support = []
        for j, col in enumerate(cols):
            acc = 0
            for ui, e in zip(u, col):
                if ui and e:
                    acc = add(acc, mul(ui, e))
            if acc:
                support.append(j)
        if len(support) != d:
            continue
        complement = tuple(sorted(set(range(G.n)) - set(support)))
        if complement not in triples:
            return PairingVerdict(
                False, a_min, a_min_dual,
                f"no disjoint dual support for codeword class {u}"
            )
    return PairingVerdict(True, a_min, a_min_dual)
