"""Prime spectra, the closed-set calculus, and the compactly-packed battery."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import HypothesesUnmet, TheoremViolation
from .limits import IDEAL_ENUM_CAP, SPEC_POWERSET_CAP
from .ideals import (
    IdealSet,
    TWO_SIDED,
    enumerate_ideals,
    generate_ideal,
    ideal_masks,
    is_prime,
    is_subtractive,
    iter_bits,
    mask_members,
    radical,
    _semiprime_elementwise,
)
from .tables import CayleyStructure, check_laws, require_commutative_semiring

BATTERY_CONDITIONS = (
    "ideal_union_containment",
    "prime_union_containment",
    "prime_is_radical_of_principal",
    "semiprime_is_radical_of_principal",
    "radical_is_radical_of_principal",
)


@functools.lru_cache(maxsize=None)
def _spec_masks(s: CayleyStructure, cap: int = IDEAL_ENUM_CAP) -> tuple[int, ...]:
    out = []
    for m in ideal_masks(s, TWO_SIDED, cap):
        ideal = IdealSet(structure=s, side=TWO_SIDED, mask=m)
        if ideal.is_proper and is_prime(ideal)[0]:
            out.append(m)
    return tuple(out)


def spec_of(s: CayleyStructure, cap: int = IDEAL_ENUM_CAP) -> tuple[IdealSet, ...]:
    """All proper two-sided prime ideals, sorted by member tuple."""
    return tuple(
        IdealSet(structure=s, side=TWO_SIDED, mask=m) for m in _spec_masks(s, cap)
    )


def vanishing_sets(
    s: CayleyStructure, ideal: IdealSet
) -> tuple[tuple[IdealSet, ...], tuple[IdealSet, ...]]:
    """Partition of the spectrum into primes containing the ideal and the rest."""
    inside, outside = [], []
    for p in spec_of(s):
        (inside if ideal.issubset(p) else outside).append(p)
    return tuple(inside), tuple(outside)


def zariski_axioms(s: CayleyStructure) -> bool:
    """The family of vanishing sets contains the empty set and the whole
    spectrum and is closed under pairwise union and intersection, with the
    union of two vanishing sets equal to the vanishing set of the meet."""
    require_commutative_semiring(s)
    primes = _spec_masks(s)
    lattice = ideal_masks(s, TWO_SIDED)

    def v_of(ideal_mask: int) -> frozenset:
        return frozenset(i for i, pm in enumerate(primes) if ideal_mask & ~pm == 0)

    family = {}
    for m in lattice:
        family.setdefault(v_of(m), m)
    full_ideal = (1 << s.size) - 1
    if v_of(full_ideal) != frozenset():
        return False
    zero = check_laws(s).zero
    if v_of(1 << zero) != frozenset(range(len(primes))):
        return False
    for a in lattice:
        for b in lattice:
            va, vb = v_of(a), v_of(b)
            if va | vb != v_of(a & b):
                return False
            if va | vb not in family:
                return False
            if va & vb not in family:
                return False
    return True


@dataclass(frozen=True, repr=False)
class SpectrumReport:
    primes: tuple[IdealSet, ...]
    weak_gaussian: bool
    compactly_packed: bool
    equivalence_table: dict
    radical_principal_map: dict

    def __repr__(self):
        return (
            f"<SpectrumReport primes={len(self.primes)} packed={self.compactly_packed} "
            f"weak_gaussian={self.weak_gaussian}>"
        )


def compactly_packed_battery(
    s: CayleyStructure, powerset_cap: int = SPEC_POWERSET_CAP
) -> SpectrumReport:
    """Evaluate the five equivalent packedness conditions independently.

    On a finite spectrum the arbitrary prime families of the first two
    conditions are exactly the subsets of the spectrum, so both are decided
    by powerset enumeration. All five verdicts must agree.
    """
    require_commutative_semiring(s)
    primes = _spec_masks(s)
    if len(primes) > powerset_cap:
        raise HypothesesUnmet(
            f"spectrum of size {len(primes)} exceeds the powerset cap {powerset_cap}"
        )
    lattice = ideal_masks(s, TWO_SIDED)
    nprimes = len(primes)

    def contained_in_some(target: int, family: Sequence[int]) -> bool:
        return any(target & ~pm == 0 for pm in family)

    def union_condition(targets: Sequence[int]) -> bool:
        for choice in range(1, 1 << nprimes):
            family = [primes[i] for i in range(nprimes) if choice >> i & 1]
            union = 0
            for pm in family:
                union |= pm
            for target in targets:
                if target & ~union == 0 and not contained_in_some(target, family):
                    return False
        return True

    cond1 = union_condition(lattice)
    cond2 = union_condition(primes)

    def radical_of_principal_masks() -> tuple[int, ...]:
        return tuple(
            radical(generate_ideal(s, [x], TWO_SIDED)).mask for x in range(s.size)
        )

    principal_radicals = radical_of_principal_masks()

    radical_principal_map = {}
    cond3 = True
    for pm in primes:
        found = None
        for x, rm in enumerate(principal_radicals):
            if rm == pm:
                found = x
                break
        radical_principal_map[mask_members(pm)] = found
        if found is None:
            cond3 = False

    cond4 = True
    for m in lattice:
        ideal = IdealSet(structure=s, side=TWO_SIDED, mask=m)
        if not ideal.is_proper or _semiprime_elementwise(s, m) is not None:
            continue
        if m not in principal_radicals:
            cond4 = False
            break

    cond5 = True
    for m in lattice:
        ideal = IdealSet(structure=s, side=TWO_SIDED, mask=m)
        if radical(ideal).mask != m:
            continue
        if m not in principal_radicals:
            cond5 = False
            break

    table = dict(zip(BATTERY_CONDITIONS, (cond1, cond2, cond3, cond4, cond5)))
    if len(set(table.values())) != 1:
        raise TheoremViolation(f"packedness conditions disagree: {table}")

    weak_gaussian = all(
        is_subtractive(IdealSet(structure=s, side=TWO_SIDED, mask=pm))[0]
        for pm in primes
    )
    return SpectrumReport(
        primes=spec_of(s),
        weak_gaussian=weak_gaussian,
        compactly_packed=cond1,
        equivalence_table=table,
        radical_principal_map=radical_principal_map,
    )


def principal_open_refinement(
    s: CayleyStructure, points: Sequence[IdealSet], ideal: IdealSet
) -> int:
    """An element x of the ideal whose principal open set contains the given
    points and sits inside the open set of the ideal."""
    rep = check_laws(s)
    if not rep.is_semiring:
        raise HypothesesUnmet("needs a semiring")
    for i in enumerate_ideals(s, TWO_SIDED):
        if not is_subtractive(i)[0]:
            raise HypothesesUnmet("needs every ideal subtractive")
    for p in points:
        if ideal.issubset(p):
            raise HypothesesUnmet("a point lies outside the open set of the ideal")
    avoid = 0
    for p in points:
        avoid |= p.mask
    x = None
    for a in iter_bits(ideal.mask & ~avoid):
        x = a
        break
    if x is None:
        raise TheoremViolation("no refinement element despite verified hypotheses")
    x_ideal = generate_ideal(s, [x], TWO_SIDED)
    v_x, d_x = vanishing_sets(s, x_ideal)
    v_i, d_i = vanishing_sets(s, ideal)
    d_x_masks = {p.mask for p in d_x}
    if any(p.mask not in d_x_masks for p in points):
        raise TheoremViolation("refinement misses a point")
    if any(p.mask not in {q.mask for q in d_i} for p in d_x):
        raise TheoremViolation("refined open set escapes the original")
    return x
