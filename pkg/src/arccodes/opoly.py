"""O-polynomials over GF(2^m): the nine known families, evaluation, and the
two exhaustive validity checks (permutation/quotient criterion and the
2-to-1-with-linear-term criterion).

A polynomial f of degree < q with f(0)=0 and f(1)=1 parameterizes a
hyperoval {(f(c), c, 1)} + {(1,0,0), (0,1,0)} exactly when f permutes GF(q)
and, for every a, the quotient map x -> (f(x+a)+f(a)) * x^(q-2) also
permutes GF(q).  Equivalently (given f(0)=0): x -> f(x) + u*x is 2-to-1 for
every nonzero u.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .field import GF, make_field

FAMILIES = (
    "translation",
    "segre",
    "glynn1",
    "glynn2",
    "glynn3",
    "cherowitzo",
    "payne",
    "subiaco",
    "adelaide",
    "custom",
)


@dataclass(frozen=True)
class OPolynomial:
    """Dense coefficient form (low-to-high, degree < q) plus its provenance."""

    field: GF
    family: str
    params: tuple[tuple[str, int], ...]
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def param(self, name: str):
        for key, value in self.params:
            if key == name:
                return value
        raise KeyError(name)

    def descriptor(self, powers: bool = False) -> str:
        if self.family == "custom":
            toks = ",".join(self.field.element_to_str(c, powers) for c in self.coeffs)
            return f"custom:coeffs={toks}"
        if not self.params:
            return self.family
        parts = []
        for key, value in self.params:
            if key == "a":
                parts.append(f"a={self.field.element_to_str(value, True)}")
            else:
                parts.append(f"{key}={value}")
        return self.family + ":" + ",".join(parts)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    condition: str | None = None
    witness: int | None = None

    def __bool__(self):
        return self.ok


def evaluate(f: OPolynomial, x: int) -> int:
    """Horner evaluation of f at x."""
    F = f.field
    F.check(x)
    acc = 0
    for c in reversed(f.coeffs):
        acc = F.add(F.mul(acc, x), c)
    return acc


def value_table(f: OPolynomial) -> list[int]:
    return [evaluate(f, x) for x in range(f.field.q)]


def _monomial_opoly(F: GF, family: str, params, exponents) -> OPolynomial:
    # Reduce exponents as functions on GF(q): x^e == x^(((e-1) mod (q-1)) + 1)
    # for e >= 1, then add coefficients (colliding exponents accumulate).
    coeffs = [0] * F.q
    deg = 0
    for e in exponents:
        e = ((e - 1) % (F.q - 1)) + 1 if F.q > 2 else 1
        coeffs[e] = F.add(coeffs[e], 1)
        deg = max(deg, e)
    return OPolynomial(F, family, tuple(params), tuple(coeffs[: deg + 1]))


def interpolate(F: GF, values) -> tuple[int, ...]:
    """Newton interpolation through (x, values[x]) for all x in GF(q).

    Returns dense coefficients low-to-high (degree < q, trailing zeros
    stripped, constant 0 kept as a single coefficient).
    """
    q = F.q
    if len(values) != q:
        raise ValueError("need one value per field element")
    coef = list(values)
    for j in range(1, q):
        for i in range(q - 1, j - 1, -1):
            num = F.sub(coef[i], coef[i - 1])
            den = F.sub(i, i - j)
            coef[i] = F.mul(num, F.inv(den))
    poly = [coef[q - 1]]
    for i in range(q - 2, -1, -1):
        # poly = poly * (x - x_i) + coef[i]
        nxt = [0] * (len(poly) + 1)
        neg_xi = F.neg(i)
        for d, c in enumerate(poly):
            nxt[d + 1] = F.add(nxt[d + 1], c)
            nxt[d] = F.add(nxt[d], F.mul(c, neg_xi))
        nxt[0] = F.add(nxt[0], coef[i])
        poly = nxt
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def _inv0(F: GF, x: int) -> int:
    """x^(q-2): the inverse for nonzero x, 0 at 0."""
    return F.inv(x) if x else 0


def _subiaco_values(F: GF, a: int) -> list[int]:
    a2 = F.mul(a, a)
    c = F.mul(a2, F.add(F.add(1, a), a2))  # a^2 (1 + a + a^2)
    half = 2 ** (F.m - 1)
    out = []
    for x in range(F.q):
        x2 = F.mul(x, x)
        x3 = F.mul(x2, x)
        x4 = F.mul(x2, x2)
        num = F.add(F.mul(a2, F.add(x4, x)), F.mul(c, F.add(x3, x2)))
        base = F.add(F.add(x4, F.mul(a2, x2)), 1)
        out.append(F.add(F.mul(num, _inv0(F, base)), F.pow(x, half)))
    return out


def _default_subiaco_a(F: GF) -> int:
    for a in range(1, F.q):
        if F.trace(F.inv(a)) != 1:
            continue
        if F.m % 4 == 2 and F.pow(a, 4) == a:
            continue
        return a
    raise ValueError(f"no admissible parameter a for the subiaco family at q={F.q}")


def _adelaide_values(F: GF, beta_power: int, t: int) -> list[int]:
    q = F.q
    E = make_field(2, 2 * F.m)
    # Embed GF(q) into GF(q^2) through the least root of F's modulus.
    root = None
    for cand in range(E.q):
        acc = 0
        for c in reversed(F.modulus):
            acc = E.add(E.mul(acc, cand), c)
        if acc == 0:
            root = cand
            break
    if root is None:
        raise AssertionError("modulus has no root in the quadratic extension")
    embed = []
    for x in range(q):
        acc = 0
        for c in reversed(F._digits[x]):
            acc = E.add(E.mul(acc, root), c)
        embed.append(acc)
    unembed = {img: x for x, img in enumerate(embed)}

    gamma = E.pow(E.primitive_element(), q - 1)  # order q+1
    beta = E.pow(gamma, beta_power)
    if beta == 1:
        raise ValueError("adelaide parameter beta must differ from 1")

    def T(z):
        return E.add(z, E.pow(z, q))

    Tb = T(beta)
    Tb_inv = E.inv(Tb)
    Tbt = T(E.pow(beta, t))
    beta_q = E.pow(beta, q)
    half = 2 ** (2 * F.m - 1)
    out = []
    for x in range(q):
        X = embed[x]
        sqrt_x = E.pow(X, half)
        term1 = E.mul(E.mul(Tbt, E.add(X, 1)), Tb_inv)
        num2 = T(E.pow(E.add(E.mul(beta, X), beta_q), t))
        denom_base = E.add(E.add(X, E.mul(Tb, sqrt_x)), 1)
        denom = E.mul(Tb, E.pow(denom_base, t - 1)) if denom_base else 0
        term2 = E.mul(num2, _inv0(E, denom))
        val = E.add(E.add(term1, term2), sqrt_x)
        if val not in unembed:
            raise ValueError(
                "adelaide formula left the base field; parameters are inadmissible"
            )
        out.append(unembed[val])
    return out


def make_family_opoly(F: GF, family: str, **params) -> OPolynomial:
    """Build one of the named o-polynomial families over GF(2^m).

    Raises ValueError when the family's applicability constraints fail for
    this field or parameter choice.
    """
    if F.p != 2:
        raise ValueError("o-polynomials live in even characteristic")
    m = F.m
    q = F.q

    def need(cond, msg):
        if not cond:
            raise ValueError(f"{family}: {msg}")

    if family == "translation":
        h = int(params.pop("h", 1))
        need(not params, f"unknown parameters {sorted(params)}")
        need(h >= 1, "h must be >= 1")
        need(gcd(h, m) == 1, f"gcd(h={h}, m={m}) != 1")
        return _monomial_opoly(F, family, (("h", h),), [2 ** (h % m) if m > 1 else 1])
    if family == "segre":
        need(not params, f"unknown parameters {sorted(params)}")
        need(m % 2 == 1 and m >= 3, "needs odd m >= 3")
        return _monomial_opoly(F, family, (), [6])
    if family == "glynn1":
        need(not params, f"unknown parameters {sorted(params)}")
        need(m % 2 == 1 and m >= 3, "needs odd m >= 3")
        return _monomial_opoly(F, family, (), [3 * 2 ** ((m + 1) // 2) + 4])
    if family == "glynn2":
        need(not params, f"unknown parameters {sorted(params)}")
        need(m % 4 == 3, "needs m = 3 (mod 4)")
        return _monomial_opoly(F, family, (), [2 ** ((m + 1) // 2) + 2 ** ((m + 1) // 4)])
    if family == "glynn3":
        need(not params, f"unknown parameters {sorted(params)}")
        need(m % 4 == 1 and m >= 5, "needs m = 1 (mod 4), m >= 5")
        return _monomial_opoly(F, family, (), [2 ** ((m + 1) // 2) + 2 ** ((3 * m + 1) // 4)])
    if family == "cherowitzo":
        need(not params, f"unknown parameters {sorted(params)}")
        need(m % 2 == 1 and m >= 3, "needs odd m >= 3")
        e = (m + 1) // 2
        return _monomial_opoly(F, family, (), [2 ** e, 2 ** e + 2, 3 * 2 ** e + 4])
    if family == "payne":
        need(not params, f"unknown parameters {sorted(params)}")
        need(m % 2 == 1 and m >= 3, "needs odd m >= 3")
        half = 2 ** (m - 1)
        return _monomial_opoly(
            F, family, (), [(half + 2) // 3, half, (5 * half - 2) // 3]
        )
    if family == "subiaco":
        need(m >= 2, "needs m >= 2")
        a = params.pop("a", None)
        need(not params, f"unknown parameters {sorted(params)}")
        a = _default_subiaco_a(F) if a is None else F.check(int(a))
        need(a != 0 and F.trace(F.inv(a)) == 1, f"parameter a={a} needs Tr(1/a) = 1")
        if m % 4 == 2:
            need(F.pow(a, 4) != a, f"parameter a={a} must avoid the GF(4) subfield")
        coeffs = interpolate(F, _subiaco_values(F, a))
        return OPolynomial(F, family, (("a", a),), coeffs)
    if family == "adelaide":
        need(m % 2 == 0 and m >= 4, "needs even m >= 4")
        beta_power = int(params.pop("beta_power", 1))
        t = params.pop("t", None)
        need(not params, f"unknown parameters {sorted(params)}")
        t = (q - 1) // 3 if t is None else int(t)
        r = t % (q + 1)
        need(
            r == (q - 1) // 3 % (q + 1) or (-r) % (q + 1) == (q - 1) // 3 % (q + 1),
            f"exponent t={t} must be +-(q-1)/3 mod q+1",
        )
        coeffs = interpolate(F, _adelaide_values(F, beta_power, t))
        f = OPolynomial(F, family, (("beta_power", beta_power), ("t", t)), coeffs)
        verdict = is_o_polynomial(f)
        if not verdict:
            raise ValueError(
                f"adelaide parameters (beta_power={beta_power}, t={t}) do not "
                f"produce an o-polynomial (failed {verdict.condition})"
            )
        return f
    if family == "custom":
        coeffs = params.pop("coeffs", None)
        need(coeffs is not None, "needs coeffs=c0,c1,...")
        need(not params, f"unknown parameters {sorted(params)}")
        return make_custom_opoly(F, coeffs)
    raise ValueError(f"unknown o-polynomial family {family!r}")


def make_custom_opoly(F: GF, coeffs) -> OPolynomial:
    coeffs = [F.check(int(c)) for c in coeffs]
    if len(coeffs) > F.q:
        raise ValueError(f"degree must stay below q={F.q}")
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return OPolynomial(F, "custom", (), tuple(coeffs))


def parse_opoly_descriptor(F: GF, text: str) -> OPolynomial:
    """Parse CLI descriptors: 'translation:h=1', 'segre', 'subiaco:a=g^5',
    'custom:coeffs=0,0,1'."""
    family, _, rest = text.partition(":")
    family = family.strip()
    params = {}
    if rest:
        for item in rest.split(","):
            key, eq, value = item.partition("=")
            if family == "custom" and key.strip() == "coeffs":
                # coefficient list swallows the remaining comma-separated tokens
                tail = rest[rest.index("=") + 1 :]
                coeffs = [F.element_from_str(tok) for tok in tail.split(",")]
                return make_custom_opoly(F, coeffs)
            if not eq:
                raise ValueError(f"bad o-polynomial parameter {item!r}")
            key = key.strip()
            if key == "a":
                params[key] = F.element_from_str(value)
            else:
                params[key] = int(value)
    return make_family_opoly(F, family, **params)


def is_o_polynomial(f: OPolynomial) -> Verdict:
    """Full check of the hyperoval criterion.

    Conditions, in order: f permutes GF(q); f(0)=0 and f(1)=1; for every a
    the quotient map g_a(x) = (f(x+a)+f(a)) * x^(q-2) permutes GF(q).  On
    failure the verdict carries the first failing condition and, for the
    quotient condition, the witness a.
    """
    return _is_o_polynomial_cached(f.field, f.coeffs)


@lru_cache(maxsize=4096)
def _is_o_polynomial_cached(F: GF, coeffs: tuple[int, ...]) -> Verdict:
    if F.p != 2:
        raise ValueError("o-polynomials live in even characteristic")
    q = F.q
    f = OPolynomial(F, "custom", (), coeffs)
    tab = value_table(f)
    if len(set(tab)) != q:
        return Verdict(False, "permutation")
    if tab[0] != 0:
        return Verdict(False, "f(0)=0", 0)
    if tab[1] != 1:
        return Verdict(False, "f(1)=1", 1)
    add, mul, inv = F.add, F.mul, F.inv
    for a in range(q):
        fa = tab[a]
        seen = set()
        for x in range(1, q):
            seen.add(mul(add(tab[add(x, a)], fa), inv(x)))
        # g_a(0) = 0 and f injective keep 0 out of the nonzero image, so
        # g_a permutes GF(q) iff the q-1 nonzero images are distinct.
        if len(seen) != q - 1:
            return Verdict(False, "quotient-permutation", a)
    return Verdict(True)


def is_two_to_one_with_linear(f: OPolynomial) -> Verdict:
    """Check that x -> f(x) + u*x is 2-to-1 for every nonzero u.

    Requires even characteristic and f(0)=0.  The witness on failure is the
    first u whose value map has a fiber of size other than 0 or 2.
    """
    F = f.field
    if F.p != 2:
        raise ValueError("2-to-1 criterion lives in even characteristic")
    tab = value_table(f)
    if tab[0] != 0:
        raise ValueError("2-to-1 criterion requires f(0) = 0")
    q = F.q
    for u in range(1, q):
        row = F.scalar_row(u)
        fibers: dict[int, int] = {}
        for x in range(q):
            v = tab[x] ^ row[x]
            fibers[v] = fibers.get(v, 0) + 1
        if any(c != 2 for c in fibers.values()):
            return Verdict(False, "fiber-size", u)
    return Verdict(True)


def linear_shift_image(f: OPolynomial) -> frozenset[int]:
    """The image of x -> f(x) + x; size q/2 for a valid o-polynomial."""
    F = f.field
    return frozenset(F.add(evaluate(f, x), x) for x in range(F.q))


def applicable_families(F: GF) -> list[OPolynomial]:
    """Every built-in family instance valid over this field: all admissible
    translation exponents, default parameters elsewhere."""
    out = []
    for h in range(1, max(F.m, 2)):
        if gcd(h, F.m) == 1:
            out.append(make_family_opoly(F, "translation", h=h))
    for family in ("segre", "glynn1", "glynn2", "glynn3", "cherowitzo", "payne",
                   "subiaco", "adelaide"):
        try:
            out.append(make_family_opoly(F, family))
        except ValueError:
            continue
    return out
