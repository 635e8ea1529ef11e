"""Zero-divisor theory of finite semimodules.

Covers the radical decomposition of the zero-divisor set, associated primes,
Property (A), the total quotient semiring with its Kasch and semi-local
verdicts, contents, and the bounded-degree monoid checks.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import StructureError, TheoremViolation
from .ideals import (
    IdealSet,
    TWO_SIDED,
    annihilator,
    generate_ideal,
    ideal_masks,
    is_prime,
    is_subtractive,
    iter_bits,
    mask_members,
    radical,
)
from .covering import FAILS, HOLDS, UNMET, WitnessReport
from .spectrum import compactly_packed_battery, spec_of
from .tables import (
    CayleyStructure,
    FiniteSemimodule,
    check_laws,
    require_commutative_semiring,
    require_semimodule,
    self_action,
)
from .constructions import MonoidSemiring


def zero_divisor_mask(m: FiniteSemimodule) -> int:
    """Scalars killing some nonzero module element; empty for the zero module."""
    s = m.semiring
    act, mz = m.action, m.mzero
    mask = 0
    for r in range(s.size):
        row = act[r]
        if any(row[x] == mz for x in range(m.msize) if x != mz):
            mask |= 1 << r
    return mask


@dataclass(frozen=True, repr=False)
class ZeroDivisorReport:
    zset: tuple[int, ...]
    radical_decomposition: tuple  # (module element, radical annihilator members)
    ass: tuple  # (module element, annihilator members) with the annihilator prime
    very_few: bool
    few: bool
    property_a: bool

    def __repr__(self):
        return (
            f"<ZeroDivisorReport z={list(self.zset)} ass={len(self.ass)} "
            f"very_few={self.very_few} property_a={self.property_a}>"
        )


def _element_annihilators(m: FiniteSemimodule) -> list[tuple[int, IdealSet]]:
    return [
        (x, annihilator(m, [x]))
        for x in range(m.msize)
        if x != m.mzero
    ]


def ass_primes(m: FiniteSemimodule) -> tuple[tuple[int, IdealSet], ...]:
    """Module elements whose annihilator is a prime ideal."""
    out = []
    for x, ann in _element_annihilators(m):
        if ann.is_proper and is_prime(ann)[0]:
            out.append((x, ann))
    return tuple(out)


def property_a_check(
    s: CayleyStructure, m: FiniteSemimodule
) -> tuple[bool, Optional[IdealSet]]:
    """Every ideal inside the zero-divisor set kills a common nonzero element.

    Finiteness makes every ideal finitely generated, so the quantifier runs
    over the whole ideal lattice. Returns the least offending ideal if any.
    """
    require_commutative_semiring(s)
    require_semimodule(m)
    z = zero_divisor_mask(m)
    act, mz = m.action, m.mzero
    for im in ideal_masks(s, TWO_SIDED):
        if im & ~z:
            continue
        scalars = list(iter_bits(im))
        if not any(
            all(act[r][x] == mz for r in scalars)
            for x in range(m.msize)
            if x != mz
        ):
            return False, IdealSet(structure=s, side=TWO_SIDED, mask=im)
    return True, None


def zero_divisor_report(s: CayleyStructure, m: FiniteSemimodule) -> ZeroDivisorReport:
    """Zero-divisor decomposition with every theorem-backed equality asserted."""
    require_commutative_semiring(s)
    require_semimodule(m)
    z = zero_divisor_mask(m)

    decomposition = []
    union = 0
    for x, ann in _element_annihilators(m):
        rad = radical(ann)
        union |= rad.mask
        decomposition.append((x, rad.members()))
    if union != z:
        raise TheoremViolation(
            "zero divisors differ from the union of radical annihilators"
        )

    ass = ass_primes(m)
    ass_union = 0
    for _, ann in ass:
        ass_union |= ann.mask
    very_few = ass_union == z
    if not very_few:
        raise TheoremViolation(
            "finite semimodule without very few zero-divisors; primality of "
            "maximal annihilators must have failed"
        )

    prop_a, _ = property_a_check(s, m)
    if not prop_a:
        raise TheoremViolation("finite semimodule without Property (A)")

    return ZeroDivisorReport(
        zset=mask_members(z),
        radical_decomposition=tuple(decomposition),
        ass=tuple((x, ann.members()) for x, ann in ass),
        very_few=very_few,
        few=_few_for_module(s, m),
        property_a=prop_a,
    )


def _few_for_module(s: CayleyStructure, m: FiniteSemimodule) -> bool:
    z = zero_divisor_mask(m)
    union = 0
    for p in spec_of(s):
        if p.issubset(z) and is_subtractive(p)[0]:
            union |= p.mask
    return union == z


def few_zero_divisors(s: CayleyStructure) -> tuple[bool, tuple[IdealSet, ...]]:
    """Whether the zero-divisor set is a finite union of subtractive primes.

    The union of all subtractive primes inside the zero-divisor set is the
    largest union any subset of the spectrum can reach, so comparing it with
    the set itself decides existence outright; the returned decomposition is
    the maximal such primes.
    """
    require_commutative_semiring(s)
    z = zero_divisor_mask(self_action(s))
    inside = [p for p in spec_of(s) if p.issubset(z) and is_subtractive(p)[0]]
    union = 0
    for p in inside:
        union |= p.mask
    if union != z:
        return False, ()
    maximal = [
        p
        for p in inside
        if not any(q.mask != p.mask and p.mask & ~q.mask == 0 for q in inside)
    ]
    return True, tuple(sorted(maximal, key=lambda p: p.members()))


@dataclass(frozen=True, repr=False)
class QuotientSemiring:
    """Localization of a commutative semiring at its non-zero-divisors.

    Pairs (s, u) collapse under the congruence demanding w*(s*v) = w*(t*u)
    for some non-zero-divisor w; the auxiliary factor is required because a
    non-zero-divisor of a semiring need not be additively cancellable.
    """

    base: CayleyStructure
    structure: CayleyStructure
    units: tuple[int, ...]  # non-zero-divisors of the base, ascending
    pair_class: dict  # (s, u) -> class index
    canonical: tuple[int, ...]  # base element -> class of (element, 1)
    maximal_ideals: tuple[IdealSet, ...]

    def extend(self, ideal: IdealSet) -> IdealSet:
        mask = 0
        for a in iter_bits(ideal.mask):
            for u in self.units:
                mask |= 1 << self.pair_class[(a, u)]
        return IdealSet(structure=self.structure, side=TWO_SIDED, mask=mask)

    def __repr__(self):
        return f"<QuotientSemiring size={self.structure.size} of {self.base.name or 'S'}>"


@functools.lru_cache(maxsize=None)
def total_quotient(s: CayleyStructure) -> QuotientSemiring:
    rep = require_commutative_semiring(s)
    mul, add = s.mul, s.add
    z_mask = zero_divisor_mask(self_action(s))
    units = [u for u in range(s.size) if not z_mask >> u & 1]
    if rep.one not in units:
        raise TheoremViolation("one turned out to be a zero-divisor")

    pairs = [(a, u) for a in range(s.size) for u in units]

    def related(p, q) -> bool:
        (a, u), (b, v) = p, q
        av, bu = mul[a][v], mul[b][u]
        return any(mul[w][av] == mul[w][bu] for w in units)

    # union-find over the raw relation; the relation is transitive, which the
    # exactness pass below re-checks
    parent = {p: p for p in pairs}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    for i, p in enumerate(pairs):
        for q in pairs[i + 1 :]:
            if related(p, q):
                rp, rq = find(p), find(q)
                if rp != rq:
                    parent[max(rp, rq)] = min(rp, rq)

    classes: dict = {}
    for p in pairs:
        classes.setdefault(find(p), []).append(p)
    reps = sorted(classes)
    class_index = {r: i for i, r in enumerate(reps)}
    pair_class = {p: class_index[find(p)] for p in pairs}
    for r, members in classes.items():
        for p in members:
            if not related(p, r):
                raise TheoremViolation("localization relation is not transitive here")

    size = len(reps)

    def combine(table_op, i, j):
        results = set()
        for a, u in classes[reps[i]]:
            for b, v in classes[reps[j]]:
                if table_op is add:
                    num = add[mul[a][v]][mul[b][u]]
                else:
                    num = mul[a][b]
                results.add(pair_class[(num, mul[u][v])])
        if len(results) != 1:
            raise TheoremViolation("quotient operation is not well defined")
        return results.pop()

    add_rows = [[combine(add, i, j) for j in range(size)] for i in range(size)]
    mul_rows = [[combine(mul, i, j) for j in range(size)] for i in range(size)]
    one_u = rep.one
    q = CayleyStructure(
        size=size,
        add=tuple(map(tuple, add_rows)),
        mul=tuple(map(tuple, mul_rows)),
        zero=pair_class[(rep.zero, one_u)],
        one=pair_class[(one_u, one_u)],
        name=f"Q({s.name or 'S'})",
    )
    require_commutative_semiring(q)

    canonical = tuple(pair_class[(a, one_u)] for a in range(s.size))
    for a in range(s.size):
        for b in range(s.size):
            if canonical[add[a][b]] != q.add[canonical[a]][canonical[b]]:
                raise TheoremViolation("canonical map is not additive")
            if canonical[mul[a][b]] != q.mul[canonical[a]][canonical[b]]:
                raise TheoremViolation("canonical map is not multiplicative")
    for u in units:
        if not any(q.mul[canonical[u]][c] == q.one for c in range(size)):
            raise TheoremViolation("a non-zero-divisor failed to become a unit")

    full = (1 << size) - 1
    proper = [m for m in ideal_masks(q, TWO_SIDED) if m != full]
    maximal = tuple(
        IdealSet(structure=q, side=TWO_SIDED, mask=m)
        for m in proper
        if not any(other != m and m & ~other == 0 for other in proper)
    )
    return QuotientSemiring(
        base=s,
        structure=q,
        units=tuple(units),
        pair_class=pair_class,
        canonical=canonical,
        maximal_ideals=maximal,
    )


def annihilator_extension_check(q: QuotientSemiring, x: int) -> bool:
    """The extension of an element annihilator equals the annihilator of the
    element's image, for every base element x."""
    base_ann = annihilator(base_module(q.base), [x])
    extended = q.extend(base_ann)
    image_ann = annihilator(base_module(q.structure), [q.canonical[x]])
    return extended.mask == image_ann.mask


def base_module(s: CayleyStructure) -> FiniteSemimodule:
    return self_action(s)


@dataclass(frozen=True)
class KaschReport:
    kasch: bool
    semilocal: bool
    very_few: bool
    maximal_matches: tuple  # (maximal ideal members, annihilating element or None)


def kasch_semilocal_report(q: QuotientSemiring) -> KaschReport:
    """Match every maximal ideal of the quotient against element annihilators
    and recompute the zero-divisor verdicts inside the quotient."""
    qs = q.structure
    matches = []
    kasch = True
    module = self_action(qs)
    for m in q.maximal_ideals:
        found = None
        for x in range(qs.size):
            if annihilator(module, [x]).mask == m.mask:
                found = x
                break
        if found is None:
            kasch = False
        matches.append((m.members(), found))

    few, decomposition = few_zero_divisors(q.base)
    semilocal = True
    if few:
        extensions = {q.extend(p).mask for p in decomposition}
        semilocal = extensions == {m.mask for m in q.maximal_ideals}

    zrep = zero_divisor_report(qs, module)
    return KaschReport(
        kasch=kasch,
        semilocal=semilocal,
        very_few=zrep.very_few,
        maximal_matches=tuple(matches),
    )


def content(ms: MonoidSemiring, f: int) -> IdealSet:
    """Ideal of the base generated by the coefficients of a monoid-semiring
    element."""
    if not isinstance(ms, MonoidSemiring):
        raise StructureError("content needs a monoid-semiring element")
    coeffs = ms.coeffs(f)
    base_rep = check_laws(ms.base)
    gens = sorted(set(coeffs))
    if gens == [base_rep.zero]:
        return generate_ideal(ms.base, [], TWO_SIDED)
    return generate_ideal(ms.base, gens, TWO_SIDED)


def monoid_zd_check(
    s: CayleyStructure, m: FiniteSemimodule, degree_cap: int
) -> WitnessReport:
    """Both inclusions of the zero-divisor decomposition over a bounded slice
    of polynomial scalars and polynomial module elements.

    Scalars are tuples of base coefficients indexed by exponents 0..degree_cap.
    The containment direction that rests on an external annihilation theorem
    is downgraded to witness search: an absent annihilator in the slice is
    inconclusive, never a refutation.
    """
    rep = check_laws(s)
    if not rep.is_commutative_semiring:
        return WitnessReport(verdict=UNMET, violated_hypothesis="commutative-semiring")
    battery = compactly_packed_battery(s)
    if not battery.compactly_packed:
        return WitnessReport(verdict=UNMET, violated_hypothesis="compactly-packed")
    prop_a, bad = property_a_check(s, m)
    if not prop_a:
        return WitnessReport(
            verdict=UNMET, violated_hypothesis="property-a", details={"ideal": bad.members()}
        )
    z_mask = zero_divisor_mask(m)
    primes = [ann for _, ann in ass_primes(m)]
    maximal = [
        p
        for p in primes
        if not any(q.mask != p.mask and p.mask & ~q.mask == 0 for q in primes)
    ]
    seen = set()
    decomposition = []
    for p in maximal:
        if p.mask not in seen:
            seen.add(p.mask)
            decomposition.append(p)
    union = 0
    for p in decomposition:
        union |= p.mask
    if union != z_mask:
        raise TheoremViolation("associated primes do not cover the zero divisors")

    length = degree_cap + 1
    sadd, smul = s.add, s.mul
    madd, act, mz = m.madd, m.action, m.mzero

    def poly_times_module(f, g):
        out = [mz] * (2 * length - 1)
        for i, fi in enumerate(f):
            for j, gj in enumerate(g):
                k = i + j
                out[k] = madd[out[k]][act[fi][gj]]
        return out

    tallies = {
        "slice_size": 0,
        "sup_checked": 0,
        "sup_witnessed": 0,
        "sub_witnessed": 0,
        "sub_inconclusive": 0,
        "sub_violations": 0,
    }
    module_slice = list(itertools.product(range(m.msize), repeat=length))
    zero_poly = tuple([mz] * length)
    for f in itertools.product(range(s.size), repeat=length):
        tallies["slice_size"] += 1
        in_decomposition = any(
            all(p.mask >> c & 1 for c in f) for p in decomposition
        )
        if in_decomposition:
            tallies["sup_checked"] += 1
            killer = None
            for b in range(m.msize):
                if b == mz:
                    continue
                if all(act[c][b] == mz for c in f):
                    killer = b
                    break
            if killer is None:
                raise TheoremViolation(
                    "polynomial with coefficients in a decomposition prime has "
                    "no constant annihilator despite Property (A)"
                )
            tallies["sup_witnessed"] += 1
        annihilating = None
        for g in module_slice:
            if g == zero_poly:
                continue
            if all(c == mz for c in poly_times_module(f, g)):
                annihilating = g
                break
        if annihilating is not None:
            if in_decomposition:
                tallies["sub_witnessed"] += 1
            else:
                tallies["sub_violations"] += 1
        elif not in_decomposition:
            tallies["sub_inconclusive"] += 1
    verdict = HOLDS if tallies["sub_violations"] == 0 else FAILS
    return WitnessReport(verdict=verdict, details=tallies)
