"""Automorphisms, isomorphisms, chamber orbits and symmetry increase.

Every search uses the same extension step: an automorphism (or isomorphism)
that commutes with the involutions is fixed by the image of one flag, so
the image of a base flag is guessed and pushed along a breadth-first
spanning tree.  Candidate images are pruned by an invariant colour
refinement of the flags.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .flags import FlagSystem, dual
from .operations import ClassLabeling, OperationPatch, apply, is_c3
from .polyhedral import graph_conditions, is_polyhedral

COLOUR_PRESERVING = "colour-preserving"
ALLOW_DUAL_SWAP = "allow-dual-swap"
ORIENTATION_PRESERVING = "orientation-preserving-only"
MODES = (COLOUR_PRESERVING, ALLOW_DUAL_SWAP, ORIENTATION_PRESERVING)

_SAME = np.array([0, 1, 2])
_SWAP = np.array([2, 1, 0])


def _patterns(mode: str):
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    return [_SAME, _SWAP] if mode == ALLOW_DUAL_SWAP else [_SAME]


def _spanning_levels(sigma: np.ndarray, base: int):
    """BFS tree from ``base`` as per-level (child, parent, generator) arrays."""
    n = sigma.shape[1]
    seen = np.zeros(n, dtype=bool)
    seen[base] = True
    frontier = np.array([base])
    levels = []
    while len(frontier):
        kids, parents, gens = [], [], []
        for i in range(3):
            img = sigma[i, frontier]
            kids.append(img)
            parents.append(frontier)
            gens.append(np.full(len(frontier), i))
        kids = np.concatenate(kids)
        parents = np.concatenate(parents)
        gens = np.concatenate(gens)
        fresh = ~seen[kids]
        kids, parents, gens = kids[fresh], parents[fresh], gens[fresh]
        kids, first = np.unique(kids, return_index=True)
        parents, gens = parents[first], gens[first]
        seen[kids] = True
        if len(kids):
            levels.append((kids, parents, gens))
        frontier = kids
    return levels


def _extend(levels, base: int, target: int, sigma_a: np.ndarray, sigma_b: np.ndarray, pattern: np.ndarray):
    """The unique map with base -> target intertwining sigma_a[i] and sigma_b[pattern[i]], or None."""
    n = sigma_a.shape[1]
    phi = np.empty(n, dtype=np.int64)
    phi[base] = target
    for kids, parents, gens in levels:
        phi[kids] = sigma_b[pattern[gens], phi[parents]]
    for i in range(3):
        if not np.array_equal(phi[sigma_a[i]], sigma_b[pattern[i], phi]):
            return None
    if np.count_nonzero(np.bincount(phi, minlength=n) != 1):
        return None
    return phi


def _refine(sigma: np.ndarray, initial: np.ndarray, symmetric: bool) -> np.ndarray:
    """Stable colouring of flags under the involutions.

    With ``symmetric`` the roles of sigma0 and sigma2 may be exchanged, so
    their neighbour colours are combined as an unordered pair.
    """
    _, labels = np.unique(initial, axis=0, return_inverse=True)
    labels = labels.reshape(-1)
    count = labels.max() + 1
    while True:
        n0, n1, n2 = labels[sigma[0]], labels[sigma[1]], labels[sigma[2]]
        if symmetric:
            n0, n2 = np.minimum(n0, n2), np.maximum(n0, n2)
        sig = np.stack([labels, n0, n1, n2], axis=1)
        _, new = np.unique(sig, axis=0, return_inverse=True)
        new = new.reshape(-1)
        new_count = new.max() + 1
        labels = new
        if new_count == count:
            return labels
        count = new_count


def _initial_invariant(m: FlagSystem, symmetric: bool) -> np.ndarray:
    deg = m.degrees[m.vertex_of]
    size = m.face_sizes[m.face_of]
    if symmetric:
        return np.stack([np.minimum(deg, size), np.maximum(deg, size)], axis=1)
    return np.stack([deg, size], axis=1)


def _candidate_labels(systems: list[FlagSystem], mode: str) -> list[np.ndarray]:
    """Refined flag colours computed jointly so they are comparable across maps."""
    symmetric = mode == ALLOW_DUAL_SWAP
    offsets = np.cumsum([0] + [m.flag_count for m in systems])
    sigma = np.concatenate([m.sigma + off for m, off in zip(systems, offsets[:-1])], axis=1)
    initial = np.concatenate([_initial_invariant(m, symmetric) for m in systems])
    labels = _refine(sigma, initial, symmetric)
    return [labels[a:b] for a, b in zip(offsets[:-1], offsets[1:])]


def _base_flag(labels: np.ndarray) -> int:
    counts = np.bincount(labels)
    rarest = int(np.argmin(np.where(counts > 0, counts, counts.max() + 1)))
    return int(np.flatnonzero(labels == rarest)[0])


@dataclass(frozen=True)
class AutReport:
    mode: str
    group_order: int
    elements: np.ndarray = field(repr=False)
    chamber_orbits: np.ndarray = field(repr=False)
    orbit_count: int = 0

    def orbit_sizes(self) -> np.ndarray:
        return np.bincount(self.chamber_orbits)

    def swaps_colours(self, index: int) -> bool:
        """Whether element ``index`` exchanges colours 0 and 2."""
        return bool(self._swap[index])

    @property
    def _swap(self) -> np.ndarray:
        return self.__dict__.get("_swap_flags", np.zeros(self.group_order, dtype=bool))


def _search(a: FlagSystem, b: FlagSystem, mode: str, first_only: bool = False, labels=None):
    """All intertwiners a -> b under ``mode``: list of (permutation, swaps)."""
    if a.flag_count != b.flag_count:
        return []
    if labels is None:
        labels = _candidate_labels([a] if a is b else [a, b], mode)
    la, lb = labels[0], labels[-1]
    base = _base_flag(la)
    levels = _spanning_levels(a.sigma, base)
    targets = np.flatnonzero(lb == la[base])
    if mode == ORIENTATION_PRESERVING:
        targets = targets[b.orientation[targets] == a.orientation[base]]
    found = []
    for pattern in _patterns(mode):
        swaps = pattern is _SWAP
        for t in targets:
            phi = _extend(levels, base, int(t), a.sigma, b.sigma, pattern)
            if phi is not None:
                found.append((phi, swaps))
                if first_only:
                    return found
    return found


def automorphisms(m: FlagSystem, mode: str = COLOUR_PRESERVING) -> AutReport:
    found = _search(m, m, mode)
    found.sort(key=lambda item: (item[1], int(item[0][0])))
    elements = np.array([phi for phi, _ in found], dtype=np.int64)
    orbit_min = elements.min(axis=0)
    _, orbits = np.unique(orbit_min, return_inverse=True)
    report = AutReport(mode, len(found), elements, orbits.reshape(-1), int(orbits.max()) + 1)
    object.__setattr__(report, "_swap_flags", np.array([s for _, s in found], dtype=bool))
    return report


def group_order(m: FlagSystem, mode: str = COLOUR_PRESERVING) -> int:
    return len(_search(m, m, mode))


def chamber_orbits(m: FlagSystem, mode: str = COLOUR_PRESERVING) -> tuple[np.ndarray, int]:
    report = automorphisms(m, mode)
    return report.chamber_orbits, report.orbit_count


def isomorphism(a: FlagSystem, b: FlagSystem, mode: str = COLOUR_PRESERVING) -> np.ndarray | None:
    """A flag bijection from ``a`` to ``b`` intertwining the involutions, or None."""
    found = _search(a, b, mode, first_only=True)
    return found[0][0] if found else None


def are_isomorphic(a: FlagSystem, b: FlagSystem, mode: str = COLOUR_PRESERVING) -> bool:
    return isomorphism(a, b, mode) is not None


def self_duality(m: FlagSystem) -> np.ndarray | None:
    """Witness isomorphism from ``m`` to its dual, or None."""
    return isomorphism(m, dual(m), COLOUR_PRESERVING)


def is_self_dual(m: FlagSystem) -> bool:
    return self_duality(m) is not None


# ----------------------------------------------------------------------
# symmetry increase


@dataclass(frozen=True)
class IncreaseReport:
    increased: bool
    ratio: Fraction
    order_before: int
    order_after: int
    certificate: np.ndarray | None = field(default=None, repr=False)
    chamber: int | None = None
    crosses_every_chamber: bool | None = None
    input_polyhedral: bool | None = None

    def __str__(self) -> str:
        verdict = "increased" if self.increased else "not increased"
        return f"ratio {self.ratio.numerator}/{self.ratio.denominator}, {verdict}"


def class_crossing_automorphism(result: FlagSystem, labeling: ClassLabeling, orders=None):
    """An automorphism of the result moving some chamber to another class, with that chamber."""
    cls = labeling.chamber_class
    labels = _candidate_labels([result], COLOUR_PRESERVING)
    la = labels[0]
    base = _base_flag(la)
    levels = _spanning_levels(result.sigma, base)
    targets = np.flatnonzero((la == la[base]) & (cls != cls[base]))
    for t in targets:
        phi = _extend(levels, base, int(t), result.sigma, result.sigma, _SAME)
        if phi is not None:
            return phi, base
    return None, None


def increases_symmetry(p: OperationPatch, m: FlagSystem, check_inputs: bool = True) -> IncreaseReport:
    """Compare |Aut(O(P))| with |Aut(P)| and certify an increase.

    The map must be simple and 3-connected and the patch must be c3.  Whether
    the faces of the map also meet properly is recorded in
    ``input_polyhedral`` but not enforced: the decision procedure only uses
    the free action of automorphisms on flags, which holds for every
    connected map.
    """
    polyhedral = None
    if check_inputs:
        report = graph_conditions(m)
        if not report:
            raise ValueError(f"input map is not polyhedral: {report.condition}")
        polyhedral = bool(is_polyhedral(m))
        if not is_c3(p):
            raise ValueError("patch is not a c3-lsp-operation")
    result, labeling = apply(p, m)
    before = group_order(m)
    after = group_order(result)
    ratio = Fraction(after, before)
    if ratio <= 1:
        return IncreaseReport(False, ratio, before, after, input_polyhedral=polyhedral)
    phi, chamber = class_crossing_automorphism(result, labeling)
    crosses = None
    if phi is not None:
        cls = labeling.chamber_class
        crosses = bool(np.all(cls[phi] != cls))
    return IncreaseReport(True, ratio, before, after, phi, chamber, crosses, polyhedral)


# ----------------------------------------------------------------------
# tables of small operations


@dataclass(frozen=True)
class TableCheck:
    """Observed behaviour of one table row on the witness maps of one genus."""

    row: str
    operation: str
    genus: int
    expected: bool
    witnesses: tuple[str, ...]
    tested: tuple[str, ...]

    @property
    def observed(self) -> bool:
        return bool(self.witnesses)

    @property
    def status(self) -> str:
        if self.observed and not self.expected:
            return "contradiction"
        if self.expected and not self.observed:
            return "gap"
        return "ok"


def _check_row(label: str, genus: int, genus_cap: int) -> TableCheck:
    from .families import witness_corpus
    from .library import TABLE_ROWS, patch

    row = next(r for r in TABLE_ROWS if r.label == label)
    maps = witness_corpus(genus_cap).get(genus, [])
    op = patch(row.name)
    hits = tuple(name for name, m in maps if increases_symmetry(op, m).increased)
    return TableCheck(row.label, row.name, genus, genus in row.genera, hits, tuple(n for n, _ in maps))


def verify_tables(genus_cap: int = 3, corpus=None, jobs: int = 1) -> list[TableCheck]:
    """Test every table row on the witness corpus of each genus up to ``genus_cap``.

    A positive on a row whose genus set excludes that genus is a
    contradiction; a missing positive on a row that can increase symmetry is
    only a gap in the corpus.  ``jobs > 1`` spreads the rows over worker
    processes (only with the default corpus).
    """
    from .families import witness_corpus
    from .library import TABLE_ROWS, patch

    if genus_cap < 0:
        raise ValueError("genus_cap must be non-negative")
    tasks = [(row.label, g) for row in TABLE_ROWS for g in range(genus_cap + 1)]
    if corpus is None and jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_check_row, label, g, genus_cap) for label, g in tasks]
            return [f.result() for f in futures]
    if corpus is None:
        corpus = witness_corpus(genus_cap)
    out = []
    for row in TABLE_ROWS:
        op = patch(row.name)
        for g in range(genus_cap + 1):
            maps = corpus.get(g, [])
            hits = tuple(name for name, m in maps if increases_symmetry(op, m).increased)
            out.append(TableCheck(row.label, row.name, g, g in row.genera, hits, tuple(n for n, _ in maps)))
    return out
