"""Structure-constant triples [k;ij] and module dimensions.

A triple is the sum of squared structure constants over -B-orthonormal bases
of three metric modules.  Two routes compute the same table: brute-force
summation over basis brackets, and the closed forms

    [a;aa]       = k_a (k_a - 1)(k_a - 2) / (2(n - 2))
    [a;(ab)(ab)] = k_a k_b (k_a - 1)     / (2(n - 2))
    [(ac);(ab)(bc)] = k_a k_b k_c        / (2(n - 2))

The brute-force route is the oracle; the closed forms are what the solver
uses.  Triples never touch the isotropy block: sums run over metric modules
only.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .so_algebra import (
    ISOTROPY,
    BasisElement,
    BlockDecomposition,
    Diag,
    ModuleLabel,
    OffDiag,
    bracket,
    module_of,
)

TripleKey = tuple[ModuleLabel, ModuleLabel, ModuleLabel]


def triple_key(i: ModuleLabel, j: ModuleLabel, k: ModuleLabel) -> TripleKey:
    """Canonical (sorted) key for the unordered multiset {i, j, k}."""
    return tuple(sorted((i, j, k)))  # type: ignore[return-value]


def dims(decomp: BlockDecomposition) -> dict[ModuleLabel, int]:
    """Dimension of every metric module of the decomposition.

    Diag(a) appears only for a in {1, 2} with k_a >= 2; the last block is
    isotropy and contributes nothing.
    """
    if len(decomp.blocks) != 3:
        raise DomainError("module dimensions are defined for 3-block decompositions")
    k = decomp.blocks
    out: dict[ModuleLabel, int] = {}
    for a in (1, 2):
        if k[a - 1] >= 2:
            out[Diag(a)] = k[a - 1] * (k[a - 1] - 1) // 2
    for a, b in ((1, 2), (1, 3), (2, 3)):
        out[OffDiag(a, b)] = k[a - 1] * k[b - 1]
    return out


# The seven triple shapes that can be nonzero, as unordered block-label
# multisets; anything else is identically zero (and the table enforces it).
def _admissible_keys(decomp: BlockDecomposition) -> set[TripleKey]:
    keys = set()
    d = dims(decomp)
    def have(lbl: ModuleLabel) -> bool:
        return lbl in d
    for a in (1, 2):
        if have(Diag(a)):
            keys.add(triple_key(Diag(a), Diag(a), Diag(a)))
    for a in (1, 2):
        for b in (1, 2, 3):
            if a == b:
                continue
            ab = OffDiag(min(a, b), max(a, b))
            if have(Diag(a)) and have(ab):
                keys.add(triple_key(Diag(a), ab, ab))
    keys.add(triple_key(OffDiag(1, 2), OffDiag(1, 3), OffDiag(2, 3)))
    return keys


@dataclass(frozen=True)
class TripleTable:
    """Exact rational triples [k;ij] keyed by unordered module multisets."""

    decomp: BlockDecomposition
    entries: dict[TripleKey, Fraction]
    dims: dict[ModuleLabel, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.dims:
            object.__setattr__(self, "dims", dims(self.decomp))
        admissible = _admissible_keys(self.decomp)
        for key, val in self.entries.items():
            if val < 0:
                raise DomainError(f"negative triple {key}: {val}")
            if val != 0 and key not in admissible:
                raise DomainError(f"inadmissible nonzero triple shape {key}")

    def value(self, i: ModuleLabel, j: ModuleLabel, k: ModuleLabel) -> Fraction:
        return self.entries.get(triple_key(i, j, k), Fraction(0))

    def labels(self) -> list[ModuleLabel]:
        return sorted(self.dims)

    def to_json(self) -> dict:
        return {
            "blocks": list(self.decomp.blocks),
            "dims": {lbl.name: d for lbl, d in sorted(self.dims.items())},
            "triples": [
                {
                    "modules": [lbl.name for lbl in key],
                    "num": v.numerator,
                    "den": v.denominator,
                }
                for key, v in sorted(self.entries.items(), key=lambda kv: kv[0])
                if v != 0
            ],
        }


def _metric_basis_by_module(
    decomp: BlockDecomposition,
) -> dict[ModuleLabel, list[BasisElement]]:
    mods: dict[ModuleLabel, list[BasisElement]] = {lbl: [] for lbl in dims(decomp)}
    for e in decomp.basis():
        lbl = module_of(decomp, e)
        if lbl is not ISOTROPY:
            mods[lbl].append(e)
    return mods


def triples_bruteforce(decomp: BlockDecomposition) -> TripleTable:
    """Triples by direct summation over orthonormalized basis brackets.

    With e-hat = e / sqrt(2(n-2)), every nonzero structure constant squares
    to 1/(2(n-2)), so [k;ij] is just a bracket-hit count divided by 2(n-2).
    The count is taken for one fixed role assignment (alpha in m_i, beta in
    m_j, gamma in m_k); full symmetry of the triple is a theorem, not an
    aggregation rule.
    """
    n = decomp.n
    mods = _metric_basis_by_module(decomp)
    counts: dict[tuple[ModuleLabel, ModuleLabel, ModuleLabel], int] = {}
    for mi, mj in itertools.product(mods, repeat=2):
        for ea in mods[mi]:
            for eb in mods[mj]:
                r = bracket(ea, eb)
                if r is None:
                    continue
                mk = module_of(decomp, r[1])
                if mk is ISOTROPY:
                    continue
                counts[(mi, mj, mk)] = counts.get((mi, mj, mk), 0) + 1
    entries: dict[TripleKey, Fraction] = {}
    for (mi, mj, mk), c in counts.items():
        key = triple_key(mi, mj, mk)
        val = Fraction(c, 2 * (n - 2))
        prev = entries.setdefault(key, val)
        if prev != val:
            raise AssertionError(f"triple symmetry broken at {key}: {prev} vs {val}")
    return TripleTable(decomp, entries)


def triples_closed_form(decomp: BlockDecomposition) -> TripleTable:
    """Triples from the closed forms; only the seven admissible shapes."""
    if len(decomp.blocks) != 3:
        raise DomainError("triples are defined for 3-block decompositions")
    k = decomp.blocks
    n = decomp.n
    den = 2 * (n - 2)
    d = dims(decomp)
    entries: dict[TripleKey, Fraction] = {}

    for a in (1, 2):
        if Diag(a) in d:
            ka = k[a - 1]
            entries[triple_key(Diag(a), Diag(a), Diag(a))] = Fraction(
                ka * (ka - 1) * (ka - 2), den
            )
    for a in (1, 2):
        if Diag(a) not in d:
            continue
        ka = k[a - 1]
        for b in (1, 2, 3):
            if b == a:
                continue
            kb = k[b - 1]
            ab = OffDiag(min(a, b), max(a, b))
            entries[triple_key(Diag(a), ab, ab)] = Fraction(ka * kb * (ka - 1), den)
    entries[triple_key(OffDiag(1, 2), OffDiag(1, 3), OffDiag(2, 3))] = Fraction(
        k[0] * k[1] * k[2], den
    )
    entries = {key: v for key, v in entries.items() if v != 0}
    return TripleTable(decomp, entries)
