"""Shared sweep builders.  The constructed-code sweeps are expensive enough
(q up to 32, every family, every admissible v/w) that the acceptance
criteria share one cached build."""

from dataclasses import dataclass
from functools import lru_cache

from arccodes.field import GF, field_from_order
from arccodes import codes, construct, opoly

EVEN_SWEEP_Q = (4, 8, 16, 32)
ODD_SWEEP_Q = (5, 7, 9, 11, 13, 17, 19, 23, 25, 27)


@dataclass(frozen=True)
class BuiltCode:
    q: int
    label: str
    G: codes.GeneratorMatrix
    dist: codes.WeightDistribution

    @property
    def field(self) -> GF:
        return self.G.field


@lru_cache(maxsize=None)
def even_sweep() -> tuple[BuiltCode, ...]:
    out = []
    for q in EVEN_SWEEP_Q:
        F = field_from_order(q)
        for f in opoly.applicable_families(F):
            for v in sorted(construct.valid_v_set(f)):
                G = construct.build_even_matrix(f, v)
                out.append(BuiltCode(q, f"{f.descriptor()},v={v}", G,
                                     codes.weight_distribution(G)))
    return tuple(out)


@lru_cache(maxsize=None)
def odd_sweep() -> tuple[BuiltCode, ...]:
    out = []
    for q in ODD_SWEEP_Q:
        F = field_from_order(q)
        for w in sorted(construct.valid_w_set(F)):
            G = construct.build_odd_matrix(F, w)
            out.append(BuiltCode(q, f"w={w}", G, codes.weight_distribution(G)))
    return tuple(out)
