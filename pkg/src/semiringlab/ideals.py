"""Ideal generation, enumeration, classification, and arithmetic.

Ideals are bitmasks over the carrier wrapped in :class:`IdealSet`. All
enumeration orders and returned witnesses are deterministic: ideals sort by
their member tuples and element scans run in ascending index order.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Union

from .errors import CapExceeded, HypothesesUnmet, StructureError, TheoremViolation
from .limits import BRUTE_FORCE_CAP, IDEAL_ENUM_CAP
from .tables import (
    CayleyStructure,
    FiniteSemimodule,
    check_laws,
    require_commutative_semiring,
    require_semimodule,
    require_semiring,
)

LEFT = "left"
RIGHT = "right"
TWO_SIDED = "two-sided"
SIDES = (LEFT, RIGHT, TWO_SIDED)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def mask_members(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


@dataclass(frozen=True)
class IdealSet:
    """A one- or two-sided ideal of a ringoid, stored as a bitmask."""

    structure: CayleyStructure
    side: str
    mask: int

    def members(self) -> tuple[int, ...]:
        return mask_members(self.mask)

    def __contains__(self, idx: int) -> bool:
        return bool(self.mask >> idx & 1)

    def issubset(self, other: Union["IdealSet", int]) -> bool:
        other_mask = other.mask if isinstance(other, IdealSet) else other
        return self.mask & ~other_mask == 0

    @property
    def is_proper(self) -> bool:
        return self.mask != (1 << self.structure.size) - 1

    @property
    def count(self) -> int:
        return self.mask.bit_count()

    def __repr__(self):
        return f"<IdealSet {self.side} {list(self.members())} of {self.structure.name or 'R'}>"


@dataclass(frozen=True)
class MultiplicativeSet:
    structure: CayleyStructure
    mask: int

    def members(self) -> tuple[int, ...]:
        return mask_members(self.mask)

    def __contains__(self, idx: int) -> bool:
        return bool(self.mask >> idx & 1)


def multiplicative_set(s: CayleyStructure, members: Iterable[int]) -> MultiplicativeSet:
    """Validate that the members contain one and are closed under multiplication."""
    rep = require_semiring(s)
    mask = mask_of(members)
    if not mask >> rep.one & 1:
        raise StructureError("multiplicative set must contain one")
    for x in iter_bits(mask):
        for y in iter_bits(mask):
            if not mask >> s.mul[x][y] & 1:
                raise StructureError(f"not multiplicatively closed: {x}*{y} escapes")
    return MultiplicativeSet(structure=s, mask=mask)


def mult_closure(s: CayleyStructure, gens: Iterable[int]) -> MultiplicativeSet:
    rep = require_semiring(s)
    mask = mask_of(gens) | 1 << rep.one
    changed = True
    while changed:
        changed = False
        new = mask
        for x in iter_bits(mask):
            for y in iter_bits(mask):
                new |= 1 << s.mul[x][y]
        if new != mask:
            mask, changed = new, True
    return MultiplicativeSet(structure=s, mask=mask)


def ideal_violation(s: CayleyStructure, mask: int, side: str) -> Optional[tuple]:
    """None if the mask is an ideal of the given side, else a small witness."""
    if side not in SIDES:
        raise ValueError(f"unknown side {side!r}")
    if mask == 0:
        return ("empty",)
    add, mul, n = s.add, s.mul, s.size
    elems = list(iter_bits(mask))
    for x in elems:
        row = add[x]
        for y in elems:
            if not mask >> row[y] & 1:
                return ("add", x, y)
    if side in (LEFT, TWO_SIDED):
        for r in range(n):
            row = mul[r]
            for x in elems:
                if not mask >> row[x] & 1:
                    return ("left-mul", r, x)
    if side in (RIGHT, TWO_SIDED):
        for x in elems:
            row = mul[x]
            for r in range(n):
                if not mask >> row[r] & 1:
                    return ("right-mul", x, r)
    return None


def make_ideal(s: CayleyStructure, members: Iterable[int], side: str = TWO_SIDED) -> IdealSet:
    mask = mask_of(members)
    bad = ideal_violation(s, mask, side)
    if bad is not None:
        raise StructureError(f"not a {side} ideal: violation {bad}")
    return IdealSet(structure=s, side=side, mask=mask)


def close_mask(s: CayleyStructure, mask: int, side: str) -> int:
    """Least superset closed under addition and the side's multiplications."""
    add, mul, n = s.add, s.mul, s.size
    while True:
        new = mask
        elems = list(iter_bits(mask))
        for x in elems:
            row = add[x]
            for y in elems:
                new |= 1 << row[y]
        if side in (LEFT, TWO_SIDED):
            for r in range(n):
                row = mul[r]
                for x in elems:
                    new |= 1 << row[x]
        if side in (RIGHT, TWO_SIDED):
            for x in elems:
                row = mul[x]
                for r in range(n):
                    new |= 1 << row[r]
        if new == mask:
            return mask
        mask = new


def generate_ideal(s: CayleyStructure, gens: Iterable[int], side: str = TWO_SIDED) -> IdealSet:
    """Least ideal of the given side containing the generators.

    The empty generator set is only meaningful when the structure has an
    absorbing zero, in which case it yields the zero ideal.
    """
    mask = mask_of(gens)
    if mask == 0:
        rep = check_laws(s)
        if not rep.is_with_zero:
            raise StructureError("empty generating set needs a structure with zero")
        mask = 1 << rep.zero
    if mask >> s.size:
        raise StructureError("generator out of range")
    return IdealSet(structure=s, side=side, mask=close_mask(s, mask, side))


@functools.lru_cache(maxsize=None)
def principal_masks(s: CayleyStructure, side: str = TWO_SIDED) -> tuple[int, ...]:
    return tuple(close_mask(s, 1 << x, side) for x in range(s.size))


@functools.lru_cache(maxsize=None)
def ideal_masks(s: CayleyStructure, side: str = TWO_SIDED, cap: int = IDEAL_ENUM_CAP) -> tuple[int, ...]:
    """All ideal masks of the side, found by join-closing the principal ideals.

    Every ideal is the join of the principal ideals of its members, so
    closing the seed set under binary joins is complete. Validated against
    the brute-force subset filter in the test suite for small carriers.
    """
    if s.size > cap:
        raise CapExceeded(f"carrier of size {s.size} exceeds ideal enumeration cap {cap}")
    rep = check_laws(s)
    seeds = set(principal_masks(s, side))
    if rep.is_with_zero:
        seeds.add(1 << rep.zero)
    found = set(seeds)
    queue = list(seeds)
    while queue:
        a = queue.pop()
        for b in list(found):
            joined = a | b
            if joined in found:
                continue
            joined = close_mask(s, joined, side)
            if joined not in found:
                found.add(joined)
                queue.append(joined)
    return tuple(sorted(found, key=mask_members))


def enumerate_ideals(s: CayleyStructure, side: str = TWO_SIDED, cap: int = IDEAL_ENUM_CAP) -> tuple[IdealSet, ...]:
    return tuple(IdealSet(structure=s, side=side, mask=m) for m in ideal_masks(s, side, cap))


def brute_force_ideal_masks(s: CayleyStructure, side: str = TWO_SIDED) -> tuple[int, ...]:
    """Filter all nonempty subsets. Exponential; only for cross-validation."""
    if s.size > BRUTE_FORCE_CAP:
        raise CapExceeded(f"brute force limited to {BRUTE_FORCE_CAP} elements")
    out = []
    for mask in range(1, 1 << s.size):
        if ideal_violation(s, mask, side) is None:
            out.append(mask)
    return tuple(sorted(out, key=mask_members))


def is_subtractive(ideal: IdealSet) -> tuple[bool, Optional[tuple[int, int]]]:
    """Check both cancellation directions; witness is the least failing pair."""
    s, mask = ideal.structure, ideal.mask
    add = s.add
    for x in range(s.size):
        for y in range(s.size):
            total_in = mask >> add[x][y] & 1
            if not total_in:
                continue
            if mask >> x & 1 and not mask >> y & 1:
                return False, (x, y)
            if mask >> y & 1 and not mask >> x & 1:
                return False, (x, y)
    return True, None


def _set_product_into(s: CayleyStructure, amask: int, bmask: int, target: int) -> bool:
    mul = s.mul
    for u in iter_bits(amask):
        row = mul[u]
        for v in iter_bits(bmask):
            if not target >> row[v] & 1:
                return False
    return True


def is_prime(ideal: IdealSet) -> tuple[bool, Optional[tuple[int, int]]]:
    """Primality via principal-ideal products; on semirings the element-wise
    sandwich criterion is computed as well and the two must agree."""
    s = ideal.structure
    if ideal.side != TWO_SIDED:
        raise ValueError("primality is defined for two-sided ideals")
    if not ideal.is_proper:
        raise ValueError("primality is defined for proper ideals")
    mask = ideal.mask
    principal = principal_masks(s, TWO_SIDED)
    witness = None
    for a in range(s.size):
        if mask >> a & 1:
            continue
        for b in range(s.size):
            if mask >> b & 1:
                continue
            if _set_product_into(s, principal[a], principal[b], mask):
                witness = (a, b)
                break
        if witness:
            break
    ringoid_prime = witness is None

    rep = check_laws(s)
    if rep.is_semiring:
        mul = s.mul
        sandwich_witness = None
        for x in range(s.size):
            if mask >> x & 1:
                continue
            for y in range(s.size):
                if mask >> y & 1:
                    continue
                if all(mask >> mul[mul[x][t]][y] & 1 for t in range(s.size)):
                    sandwich_witness = (x, y)
                    break
            if sandwich_witness:
                break
        if (sandwich_witness is None) != ringoid_prime:
            raise TheoremViolation(
                f"prime criteria disagree on {ideal!r}: "
                f"principal={ringoid_prime} sandwich={sandwich_witness is None}"
            )
    return ringoid_prime, witness


def power_orbit(s: CayleyStructure, x: int) -> tuple[int, ...]:
    """x, x^2, x^3, ... until the first repeat. Needs associative multiplication."""
    seen = []
    seen_set = set()
    cur = x
    while cur not in seen_set:
        seen.append(cur)
        seen_set.add(cur)
        cur = s.mul[cur][x]
    return tuple(seen)


def radical(ideal: IdealSet) -> IdealSet:
    """Elements with some positive power inside the ideal."""
    s = ideal.structure
    require_commutative_semiring(s)
    mask = 0
    for x in range(s.size):
        if any(ideal.mask >> p & 1 for p in power_orbit(s, x)):
            mask |= 1 << x
    return IdealSet(structure=s, side=ideal.side, mask=mask)


def ideal_sum(a: IdealSet, b: IdealSet) -> IdealSet:
    """Elementwise sums; an ideal whenever addition is medial."""
    s = a.structure
    rep = check_laws(s)
    if not rep.add_medial:
        raise HypothesesUnmet("sum of ideals needs an additively medial ringoid")
    if a.side != b.side:
        raise ValueError("sides differ")
    add = s.add
    mask = 0
    for x in iter_bits(a.mask):
        row = add[x]
        for y in iter_bits(b.mask):
            mask |= 1 << row[y]
    bad = ideal_violation(s, mask, a.side)
    if bad is not None:
        raise TheoremViolation(f"medial sum failed to be an ideal: {bad}")
    return IdealSet(structure=s, side=a.side, mask=mask)


def set_product_mask(a: IdealSet, b: IdealSet) -> int:
    """Raw elementwise products. Not an ideal in general."""
    s = a.structure
    mul = s.mul
    mask = 0
    for x in iter_bits(a.mask):
        row = mul[x]
        for y in iter_bits(b.mask):
            mask |= 1 << row[y]
    if a.side == RIGHT and b.side == LEFT or a.side == b.side == TWO_SIDED:
        meet = a.mask & b.mask
        if mask & ~meet:
            raise TheoremViolation("product of a right and a left ideal escaped their intersection")
    return mask


def generated_product(a: IdealSet, b: IdealSet) -> IdealSet:
    side = a.side if a.side == b.side else TWO_SIDED
    return generate_ideal(a.structure, mask_members(set_product_mask(a, b)), side)


def ideal_intersect(a: IdealSet, b: IdealSet) -> IdealSet:
    if a.side != b.side:
        raise ValueError("sides differ")
    mask = a.mask & b.mask
    if mask == 0:
        raise StructureError("empty intersection is not an ideal")
    return IdealSet(structure=a.structure, side=a.side, mask=mask)


def ideal_arith(op: str, a: IdealSet, b: IdealSet):
    """Dispatch used by the CLI; op is one of sum, set_product,
    generated_product, intersect."""
    if op == "sum":
        return ideal_sum(a, b)
    if op == "set_product":
        return mask_members(set_product_mask(a, b))
    if op == "generated_product":
        return generated_product(a, b)
    if op == "intersect":
        return ideal_intersect(a, b)
    raise ValueError(f"unknown ideal operation {op!r}")


def residual(ideal: IdealSet, t: int) -> IdealSet:
    """Elements whose product with t lands in the ideal."""
    s = ideal.structure
    require_commutative_semiring(s)
    mask = mask_of(x for x in range(s.size) if ideal.mask >> s.mul[t][x] & 1)
    bad = ideal_violation(s, mask, ideal.side)
    if bad is not None:
        raise TheoremViolation(f"residual failed to be an ideal: {bad}")
    if ideal.mask & ~mask:
        raise TheoremViolation("residual does not contain the ideal")
    return IdealSet(structure=s, side=ideal.side, mask=mask)


@dataclass(frozen=True, repr=False)
class IdealClassification:
    subtractive: bool
    proper: bool
    prime: bool
    semiprime: bool
    two_absorbing: bool
    maximal: bool
    radical_ideal: Optional[bool]
    t_semiprime: Optional[bool]
    t_element: Optional[int]
    witnesses: dict

    def __repr__(self):
        flags = {
            k: getattr(self, k)
            for k in ("subtractive", "proper", "prime", "semiprime", "two_absorbing", "maximal")
        }
        return f"<IdealClassification {flags}>"


def _semiprime_elementwise(s: CayleyStructure, mask: int) -> Optional[tuple[int]]:
    mul = s.mul
    for x in range(s.size):
        if mask >> mul[x][x] & 1 and not mask >> x & 1:
            return (x,)
    return None


def classify_ideal(
    ideal: IdealSet,
    t_set: Optional[MultiplicativeSet] = None,
    cap: int = IDEAL_ENUM_CAP,
) -> IdealClassification:
    """Decide all classification flags exhaustively for a two-sided ideal."""
    s = ideal.structure
    if ideal.side != TWO_SIDED:
        raise ValueError("classification applies to two-sided ideals")
    rep = check_laws(s)
    witnesses: dict = {}

    subtractive, w = is_subtractive(ideal)
    if w is not None:
        witnesses["subtractive"] = w

    proper = ideal.is_proper
    if not proper:
        witnesses["proper"] = ()

    if proper:
        prime, w = is_prime(ideal)
        if w is not None:
            witnesses["prime"] = w
    else:
        prime = False
        witnesses["prime"] = ()

    lattice = ideal_masks(s, TWO_SIDED, cap)

    if proper:
        semiprime = True
        for jm in lattice:
            square = 0
            mul = s.mul
            for u in iter_bits(jm):
                row = mul[u]
                for v in iter_bits(jm):
                    square |= 1 << row[v]
            if square & ~ideal.mask == 0 and jm & ~ideal.mask:
                semiprime = False
                witnesses["semiprime"] = mask_members(jm)
                break
        if rep.is_commutative_semiring:
            elem = _semiprime_elementwise(s, ideal.mask)
            if (elem is None) != semiprime:
                raise TheoremViolation(
                    "elementwise and ideal-square semiprime criteria disagree"
                )
            if elem is not None:
                witnesses["semiprime"] = elem
    else:
        semiprime = False
        witnesses["semiprime"] = ()

    if proper:
        two_absorbing = True
        mul = s.mul
        done = False
        for x in range(s.size):
            for y in range(s.size):
                xy = mul[x][y]
                for z in range(s.size):
                    if not ideal.mask >> mul[xy][z] & 1:
                        continue
                    if (
                        ideal.mask >> xy & 1
                        or ideal.mask >> mul[y][z] & 1
                        or ideal.mask >> mul[x][z] & 1
                    ):
                        continue
                    two_absorbing = False
                    witnesses["two_absorbing"] = (x, y, z)
                    done = True
                    break
                if done:
                    break
            if done:
                break
    else:
        two_absorbing = False
        witnesses["two_absorbing"] = ()

    maximal = proper
    if proper:
        full = (1 << s.size) - 1
        for jm in lattice:
            if jm != full and jm != ideal.mask and ideal.mask & ~jm == 0:
                maximal = False
                witnesses["maximal"] = mask_members(jm)
                break
    else:
        witnesses["maximal"] = ()

    radical_ideal: Optional[bool] = None
    if rep.is_commutative_semiring:
        radical_ideal = radical(ideal).mask == ideal.mask
        if not radical_ideal:
            witnesses["radical_ideal"] = mask_members(radical(ideal).mask & ~ideal.mask)[:1]

    t_semiprime: Optional[bool] = None
    t_element: Optional[int] = None
    if t_set is not None:
        if ideal.mask & t_set.mask:
            raise StructureError("T-semiprimeness needs an ideal disjoint from T")
        mul = s.mul
        for t in iter_bits(t_set.mask):
            if all(
                ideal.mask >> mul[t][x] & 1
                for x in range(s.size)
                if ideal.mask >> mul[x][x] & 1
            ):
                t_element = t
                break
        t_semiprime = t_element is not None
        if not t_semiprime:
            witnesses["t_semiprime"] = ()

    return IdealClassification(
        subtractive=subtractive,
        proper=proper,
        prime=prime,
        semiprime=semiprime,
        two_absorbing=two_absorbing,
        maximal=maximal,
        radical_ideal=radical_ideal,
        t_semiprime=t_semiprime,
        t_element=t_element,
        witnesses=witnesses,
    )


def t_semiprime_equivalence(
    ideal: IdealSet, t_set: MultiplicativeSet
) -> tuple[bool, Union[int, tuple, None]]:
    """Match T-semiprimeness against semiprimeness of some residual quotient.

    Returns (verdict, t) with the least t realizing both sides, or raises if
    the two sides of the equivalence disagree, which would falsify the
    residual-quotient theorem.
    """
    s = ideal.structure
    require_commutative_semiring(s)
    cls = classify_ideal(ideal, t_set)
    if not cls.two_absorbing:
        raise HypothesesUnmet("equivalence needs a 2-absorbing ideal")
    direct = cls.t_semiprime
    residual_t = None
    for t in iter_bits(t_set.mask):
        r = residual(ideal, t)
        if r.is_proper and _semiprime_elementwise(s, r.mask) is None:
            residual_t = t
            break
    via_residual = residual_t is not None
    if direct != via_residual:
        raise TheoremViolation(
            f"T-semiprime equivalence broken: direct={direct} residual={via_residual}"
        )
    if direct:
        return True, min(cls.t_element, residual_t)
    return False, None


def annihilator(
    target: Union[CayleyStructure, FiniteSemimodule],
    xs: Iterable[int],
    side: str = LEFT,
) -> IdealSet:
    """Annihilator of a nonempty subset, of the carrier or of a semimodule.

    For a semimodule target the result is the two-sided ideal of scalars
    killing every listed element. For a structure target the side picks
    between left and right annihilators.
    """
    xs = sorted(set(xs))
    if not xs:
        raise StructureError("annihilator of the empty set is undefined")
    if isinstance(target, FiniteSemimodule):
        require_semimodule(target)
        s = target.semiring
        act, mz = target.action, target.mzero
        if any(not 0 <= x < target.msize for x in xs):
            raise StructureError("module element out of range")
        mask = mask_of(
            r for r in range(s.size) if all(act[r][x] == mz for x in xs)
        )
        result = IdealSet(structure=s, side=TWO_SIDED, mask=mask)
        bad = ideal_violation(s, mask, TWO_SIDED)
        if bad is not None:
            raise StructureError(f"annihilator is not two-sided here: {bad}")
    else:
        s = target
        rep = check_laws(s)
        if not rep.is_with_zero:
            raise StructureError("annihilators need a structure with absorbing zero")
        if any(not 0 <= x < s.size for x in xs):
            raise StructureError("element out of range")
        z, mul = rep.zero, s.mul
        if side == LEFT:
            mask = mask_of(r for r in range(s.size) if all(mul[r][x] == z for x in xs))
        elif side == RIGHT:
            mask = mask_of(r for r in range(s.size) if all(mul[x][r] == z for x in xs))
        else:
            raise ValueError("annihilator side must be left or right")
        result = IdealSet(structure=s, side=side, mask=mask)
        bad = ideal_violation(s, mask, side)
        if bad is not None:
            raise StructureError(f"annihilator is not a {side} ideal here: {bad}")
    if check_laws(result.structure).mul_associative:
        ok, w = is_subtractive(result)
        if not ok:
            raise TheoremViolation(f"annihilator not subtractive, witness {w}")
    return result


def subsemimodule_masks(m: FiniteSemimodule) -> tuple[int, ...]:
    """All subsets containing zero and closed under addition and the action."""
    require_semimodule(m)
    madd, act = m.madd, m.action
    nscalars = m.semiring.size

    def close(mask: int) -> int:
        while True:
            new = mask
            elems = list(iter_bits(mask))
            for x in elems:
                row = madd[x]
                for y in elems:
                    new |= 1 << row[y]
            for r in range(nscalars):
                row = act[r]
                for x in elems:
                    new |= 1 << row[x]
            if new == mask:
                return mask
            mask = new

    seeds = {close(1 << m.mzero)}
    for x in range(m.msize):
        seeds.add(close(1 << x | 1 << m.mzero))
    found = set(seeds)
    queue = list(seeds)
    while queue:
        a = queue.pop()
        for b in list(found):
            joined = a | b
            if joined in found:
                continue
            joined = close(joined)
            if joined not in found:
                found.add(joined)
                queue.append(joined)
    return tuple(sorted(found, key=mask_members))


def maximal_annihilator_primes(s: CayleyStructure, m: FiniteSemimodule) -> tuple[IdealSet, ...]:
    """Maximal annihilators of proper nonzero subsemimodules; each is checked
    subtractive and prime before being returned."""
    require_semiring(s)
    if m.semiring is not s and m.semiring != s:
        raise StructureError("module is not over the given semiring")
    if m.msize == 1:
        raise StructureError("zero semimodule has no proper nonzero subsemimodules")
    zero_mask = 1 << m.mzero
    full = (1 << m.msize) - 1
    gamma = set()
    for nm in subsemimodule_masks(m):
        if nm == zero_mask or nm == full:
            continue
        gamma.add(annihilator(m, mask_members(nm)).mask)
    maximal = [
        am for am in gamma if not any(other != am and am & ~other == 0 for other in gamma)
    ]
    out = []
    for am in sorted(maximal, key=mask_members):
        ideal = IdealSet(structure=s, side=TWO_SIDED, mask=am)
        ok, w = is_subtractive(ideal)
        if not ok:
            raise TheoremViolation(f"maximal annihilator not subtractive: {w}")
        prime, w = is_prime(ideal)
        if not prime:
            raise TheoremViolation(f"maximal annihilator not prime: {w}")
        out.append(ideal)
    return tuple(out)


def krull_separation(s: CayleyStructure, t_set: MultiplicativeSet, ideal: IdealSet) -> IdealSet:
    """A prime ideal containing the given one, maximal among ideals disjoint
    from the multiplicative set; ties break to the least member tuple."""
    require_commutative_semiring(s)
    if ideal.mask & t_set.mask:
        raise HypothesesUnmet("ideal meets the multiplicative set")
    candidates = [
        jm
        for jm in ideal_masks(s, TWO_SIDED)
        if jm & t_set.mask == 0 and ideal.mask & ~jm == 0
    ]
    maximal = [
        jm
        for jm in candidates
        if not any(other != jm and jm & ~other == 0 for other in candidates)
    ]
    best = min(maximal, key=mask_members)
    result = IdealSet(structure=s, side=TWO_SIDED, mask=best)
    prime, w = is_prime(result)
    if not prime:
        raise TheoremViolation(f"separating ideal not prime, witness {w}")
    return result


# --- sum trees -------------------------------------------------------------
#
# A tree is either a carrier element (leaf) or a pair of trees. Evaluation
# folds the addition table bottom-up, which pins one parenthesization of a
# sum whose addition need not be associative.

Tree = Union[int, tuple]


def tree_leaves(tree: Tree) -> list[int]:
    if isinstance(tree, int):
        return [tree]
    left, right = tree
    return tree_leaves(left) + tree_leaves(right)


def evaluate_tree(s: CayleyStructure, tree: Tree) -> int:
    if isinstance(tree, int):
        return tree
    left, right = tree
    return s.add[evaluate_tree(s, left)][evaluate_tree(s, right)]


def left_comb(values: Sequence[int]) -> Tree:
    if not values:
        raise ValueError("need at least one leaf")
    tree: Tree = values[0]
    for v in values[1:]:
        tree = (tree, v)
    return tree


def all_tree_shapes(values: Sequence[int]) -> list[Tree]:
    if len(values) == 1:
        return [values[0]]
    shapes = []
    for split in range(1, len(values)):
        for l in all_tree_shapes(values[:split]):
            for r in all_tree_shapes(values[split:]):
                shapes.append((l, r))
    return shapes


def random_tree(values: Sequence[int], rng) -> Tree:
    if len(values) == 1:
        return values[0]
    split = rng.randrange(1, len(values))
    return (random_tree(values[:split], rng), random_tree(values[split:], rng))


def subtractive_sumtree_property(ideal: IdealSet, tree: Tree, hole: int) -> bool:
    """Membership of the hole leaf when the tree value and all other leaves
    lie in a subtractive ideal. Guaranteed true; exposed for diagnostics."""
    ok, w = is_subtractive(ideal)
    if not ok:
        raise HypothesesUnmet(f"ideal is not subtractive, witness {w}")
    leaves = tree_leaves(tree)
    if not 0 <= hole < len(leaves):
        raise ValueError("hole index out of range")
    value = evaluate_tree(ideal.structure, tree)
    if value not in ideal:
        raise HypothesesUnmet("tree value must lie in the ideal")
    for pos, leaf in enumerate(leaves):
        if pos != hole and leaf not in ideal:
            raise HypothesesUnmet("all leaves except the hole must lie in the ideal")
    return leaves[hole] in ideal
