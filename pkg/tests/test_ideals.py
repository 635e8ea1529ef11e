"""Ideal generation, enumeration, classification, and sum-tree properties.

Derived expectations are computed by in-test oracles: subset filters for
enumeration, direct table scans for radicals and annihilators, and hand
expansions for the chain semiring.
"""

import itertools

import pytest
from hypothesis import given, strategies as st

from semiringlab.corpus import (
    austere_z6,
    boolean_semifield,
    boolean_square,
    chain_semiring,
    componentwise_module,
    dual_numbers_mod2,
)
from semiringlab.errors import HypothesesUnmet, StructureError
from semiringlab.ideals import (
    IdealSet,
    TWO_SIDED,
    all_tree_shapes,
    annihilator,
    classify_ideal,
    enumerate_ideals,
    evaluate_tree,
    generate_ideal,
    ideal_arith,
    ideal_masks,
    is_prime,
    is_subtractive,
    krull_separation,
    left_comb,
    make_ideal,
    mask_members,
    mask_of,
    maximal_annihilator_primes,
    mult_closure,
    multiplicative_set,
    radical,
    residual,
    set_product_mask,
    subtractive_sumtree_property,
    t_semiprime_equivalence,
)
from semiringlab.tables import CayleyStructure, check_laws, self_action


def subset_filter_oracle(s, side):
    """Independent enumeration: test closure of every nonempty subset directly."""
    found = []
    for bits in range(1, 1 << s.size):
        members = [x for x in range(s.size) if bits >> x & 1]
        ok = all(s.add[x][y] in members_set for members_set in [set(members)] for x in members for y in members)
        if not ok:
            continue
        mset = set(members)
        if side in ("left", TWO_SIDED):
            if not all(s.mul[r][x] in mset for r in range(s.size) for x in members):
                continue
        if side in ("right", TWO_SIDED):
            if not all(s.mul[x][r] in mset for r in range(s.size) for x in members):
                continue
        found.append(bits)
    return sorted(found, key=mask_members)


# --- generation ----------------------------------------------------------------

def test_generate_ideal_on_chain():
    t = chain_semiring()
    got = generate_ideal(t, [1])
    assert got.members() == (0, 1)
    # cross check: intersection of all enumerated ideals containing the element
    meet = None
    for m in subset_filter_oracle(t, TWO_SIDED):
        if m >> 1 & 1:
            meet = m if meet is None else meet & m
    assert got.mask == meet


def test_generate_from_one_gives_everything():
    for s in (boolean_semifield(), chain_semiring(), dual_numbers_mod2()):
        one = check_laws(s).one
        assert generate_ideal(s, [one]).count == s.size


def test_generate_from_empty_set():
    t = chain_semiring()
    assert generate_ideal(t, []).members() == (0,)


def test_generate_empty_needs_zero():
    # a ringoid with constant operations has no additive neutral
    s = CayleyStructure(size=2, add=((1, 1), (1, 1)), mul=((1, 1), (1, 1)))
    assert check_laws(s).is_ringoid and not check_laws(s).has_zero
    with pytest.raises(StructureError):
        generate_ideal(s, [])


def test_generate_least_property_corpus_wide(all_entries):
    for e in all_entries:
        s = e.structure
        if s.size > 8:
            continue
        lattice = subset_filter_oracle(s, TWO_SIDED)
        for x in range(s.size):
            meet = None
            for m in lattice:
                if m >> x & 1:
                    meet = m if meet is None else meet & m
            assert generate_ideal(s, [x]).mask == meet


# --- enumeration ----------------------------------------------------------------

@pytest.mark.parametrize(
    "factory,expected",
    [
        (boolean_semifield, [(0,), (0, 1)]),
        (chain_semiring, [(0,), (0, 1), (0, 1, 2)]),
    ],
)
def test_enumeration_small_goldens(factory, expected):
    s = factory()
    assert [i.members() for i in enumerate_ideals(s)] == expected


def test_f2xy_has_six_ideals():
    s = dual_numbers_mod2()
    ideals = enumerate_ideals(s)
    assert len(ideals) == 6
    members = {i.members() for i in ideals}
    assert (0,) in members and tuple(range(8)) in members
    assert (0, 1, 2, 3) in members  # the maximal ideal spanned by x and y


def test_enumeration_matches_subset_filter(all_entries):
    for e in all_entries:
        s = e.structure
        if s.size > 8:
            continue
        for side in (TWO_SIDED, "left", "right"):
            assert list(ideal_masks(s, side)) == subset_filter_oracle(s, side)


def test_zero_free_ringoid_enumeration():
    s = CayleyStructure(size=2, add=((1, 1), (1, 1)), mul=((1, 1), (1, 1)))
    assert [mask_members(m) for m in ideal_masks(s)] == [(0, 1), (1,)]


# --- subtractivity ----------------------------------------------------------------

def test_annihilators_are_subtractive(all_entries):
    for e in all_entries:
        s = e.structure
        rep = check_laws(s)
        if not rep.is_semiring:
            continue
        m = self_action(s)
        for x in range(s.size):
            ok, _ = is_subtractive(annihilator(m, [x]))
            assert ok


def test_austere_witness_golden():
    s = austere_z6()
    m1 = generate_ideal(s, [3])  # residue 2
    assert m1.members() == (0, 1, 3, 5)
    ok, witness = is_subtractive(m1)
    assert not ok
    assert witness == (1, 2)  # residues 0 and 1: 0 + 1 = 0 lands in the ideal


def test_zero_ideal_subtractive_in_zerosumfree():
    s = chain_semiring()
    ok, _ = is_subtractive(generate_ideal(s, []))
    assert ok


# --- primality ----------------------------------------------------------------

def test_chain_middle_ideal_prime():
    t = chain_semiring()
    p = make_ideal(t, [0, 1])
    assert is_prime(p) == (True, None)


def test_chain_zero_ideal_not_prime():
    t = chain_semiring()
    ok, witness = is_prime(make_ideal(t, [0]))
    assert not ok
    assert witness == (1, 1)  # the nilpotent middle element squares to zero


def test_zero_prime_in_entire_semiring():
    for s in (boolean_semifield(), austere_z6()):
        zero = check_laws(s).zero
        assert is_prime(make_ideal(s, [zero]))[0]


def test_prime_requires_proper():
    t = chain_semiring()
    with pytest.raises(ValueError):
        is_prime(make_ideal(t, [0, 1, 2]))


def test_prime_criteria_agree_independsource(all_entries):
    """Independent replication of both criteria, then agreement, entrywise."""
    for e in all_entries:
        s = e.structure
        if not check_laws(s).is_semiring or s.size > 8:
            continue
        principal = [generate_ideal(s, [x]).mask for x in range(s.size)]
        for m in ideal_masks(s, TWO_SIDED):
            if m == (1 << s.size) - 1:
                continue
            outside = [a for a in range(s.size) if not m >> a & 1]
            kernel = lambda am, bm: all(
                m >> s.mul[u][v] & 1
                for u in range(s.size)
                if am >> u & 1
                for v in range(s.size)
                if bm >> v & 1
            )
            principal_prime = not any(
                kernel(principal[a], principal[b]) for a in outside for b in outside
            )
            sandwich_prime = not any(
                all(m >> s.mul[s.mul[x][t]][y] & 1 for t in range(s.size))
                for x in outside
                for y in outside
            )
            assert principal_prime == sandwich_prime
            ideal = IdealSet(structure=s, side=TWO_SIDED, mask=m)
            assert is_prime(ideal)[0] == principal_prime


# --- classification ----------------------------------------------------------------

def test_chain_middle_classification():
    t = chain_semiring()
    cls = classify_ideal(make_ideal(t, [0, 1]))
    assert cls.semiprime and cls.two_absorbing and cls.prime
    assert cls.subtractive and cls.maximal and cls.radical_ideal


def test_whole_carrier_classification():
    t = chain_semiring()
    cls = classify_ideal(make_ideal(t, [0, 1, 2]))
    assert not cls.proper and not cls.prime and not cls.semiprime
    assert not cls.maximal


def test_semiprime_is_t_semiprime_with_one(all_entries):
    for e in all_entries:
        s = e.structure
        rep = check_laws(s)
        if not rep.is_commutative_semiring:
            continue
        t_set = mult_closure(s, [rep.one])
        for i in enumerate_ideals(s):
            if not i.is_proper or i.mask & t_set.mask:
                continue
            cls = classify_ideal(i, t_set)
            if cls.semiprime:
                assert cls.t_semiprime and cls.t_element == rep.one


def test_classification_chain_invariant(all_entries):
    for e in all_entries:
        s = e.structure
        if not check_laws(s).is_commutative_semiring:
            continue
        for i in enumerate_ideals(s):
            cls = classify_ideal(i)
            if cls.prime:
                assert cls.semiprime
            if cls.semiprime:
                assert cls.radical_ideal


# --- radical ----------------------------------------------------------------

def test_radical_chain_golden():
    t = chain_semiring()
    # oracle: the middle element squares to zero, the top stays at itself
    assert t.mul[1][1] == 0 and t.mul[2][2] == 2
    assert radical(generate_ideal(t, [1])).members() == (0, 1)
    assert radical(make_ideal(t, [0])).members() == (0, 1)


def test_radical_whole_and_entire():
    t = chain_semiring()
    assert radical(make_ideal(t, [0, 1, 2])).count == 3
    b = boolean_semifield()
    assert radical(make_ideal(b, [0])).members() == (0,)


def test_radical_rejects_noncommutative():
    s = cross_free = austere_z6()
    # austere-z6 is commutative; build a noncommutative semiring instead
    from semiringlab.corpus import cross_product_hemiring

    with pytest.raises(StructureError):
        radical(IdealSet(structure=cross_product_hemiring(), side=TWO_SIDED, mask=1))


@given(st.integers(0, 5))
def test_radical_idempotent_monotone_extensive(seed):
    entries = [boolean_semifield(), chain_semiring(), dual_numbers_mod2(), boolean_square()]
    s = entries[seed % len(entries)]
    for i in enumerate_ideals(s):
        r = radical(i)
        assert i.issubset(r)
        assert radical(r).mask == r.mask


# --- arithmetic ----------------------------------------------------------------

def test_chain_ideal_sums_and_products():
    t = chain_semiring()
    mid = make_ideal(t, [0, 1])
    assert ideal_arith("sum", mid, mid).members() == (0, 1)
    assert ideal_arith("set_product", mid, mid) == (0,)
    assert ideal_arith("generated_product", mid, mid).members() == (0,)
    assert ideal_arith("intersect", mid, mid).members() == (0, 1)


def test_product_lands_in_intersection(all_entries):
    for e in all_entries:
        s = e.structure
        if s.size > 8:
            continue
        ideals = enumerate_ideals(s)
        for a in ideals:
            for b in ideals:
                prod = set_product_mask(a, b)  # raises if it escapes the meet
                assert prod & ~(a.mask & b.mask) == 0


def test_right_ideal_times_carrier():
    s = dual_numbers_mod2()
    whole = make_ideal(s, range(8))
    for i in enumerate_ideals(s):
        assert set_product_mask(i, whole) & ~i.mask == 0


def test_sum_requires_medial():
    s = CayleyStructure(
        size=2, add=((0, 0), (1, 0)), mul=((0, 0), (0, 0)), name="skew"
    )
    rep = check_laws(s)
    if not rep.add_medial and rep.is_ringoid:
        ideals = enumerate_ideals(s)
        with pytest.raises(HypothesesUnmet):
            ideal_arith("sum", ideals[0], ideals[0])


# --- residuals ----------------------------------------------------------------

def test_residual_by_one_is_identity(all_entries):
    for e in all_entries:
        s = e.structure
        rep = check_laws(s)
        if not rep.is_commutative_semiring:
            continue
        for i in enumerate_ideals(s):
            assert residual(i, rep.one).mask == i.mask


def test_residual_chain_golden():
    t = chain_semiring()
    zero = make_ideal(t, [0])
    # oracle: 1*0 = 0, 1*1 = 0, 1*2 = 1, so exactly {0, 1} divides into zero
    assert residual(zero, 1).members() == (0, 1)


def test_residual_contains_ideal(all_entries):
    for e in all_entries:
        s = e.structure
        if not check_laws(s).is_commutative_semiring:
            continue
        for i in enumerate_ideals(s):
            for t in range(s.size):
                assert i.issubset(residual(i, t))


# --- T-semiprime equivalence ------------------------------------------------------

def test_equivalence_semiprime_case():
    t = chain_semiring()
    p = make_ideal(t, [0, 1])
    t_set = mult_closure(t, [2])
    holds, witness = t_semiprime_equivalence(p, t_set)
    assert holds and witness == 2  # the unit element realizes the equivalence


def test_equivalence_rejects_meeting_t():
    t = chain_semiring()
    p = make_ideal(t, [0, 1])
    with pytest.raises(StructureError):
        t_semiprime_equivalence(p, multiplicative_set(t, [1, 2, 0]))


def test_equivalence_needs_two_absorbing():
    s = boolean_square()
    whole_minus = enumerate_ideals(s)
    t_set = mult_closure(s, [check_laws(s).one])
    zero = generate_ideal(s, [])
    cls = classify_ideal(zero, t_set)
    if not cls.two_absorbing:
        with pytest.raises(HypothesesUnmet):
            t_semiprime_equivalence(zero, t_set)


# --- annihilators ----------------------------------------------------------------

def test_annihilator_of_one_in_entire():
    b = boolean_semifield()
    assert annihilator(self_action(b), [1]).members() == (0,)


def test_annihilator_chain_golden():
    t = chain_semiring()
    assert annihilator(self_action(t), [1]).members() == (0, 1)


def test_annihilator_of_whole_is_meet(all_entries):
    for e in all_entries:
        s = e.structure
        if not check_laws(s).is_commutative_semiring:
            continue
        m = self_action(s)
        meet = None
        for x in range(s.size):
            am = annihilator(m, [x]).mask
            meet = am if meet is None else meet & am
        assert annihilator(m, list(range(s.size))).mask == meet


def test_annihilator_rejects_empty():
    with pytest.raises(StructureError):
        annihilator(self_action(boolean_semifield()), [])


def test_structure_annihilator_sides():
    t = chain_semiring()
    left = annihilator(t, [1], side="left")
    right = annihilator(t, [1], side="right")
    assert left.members() == right.members() == (0, 1)


# --- maximal annihilator primes -----------------------------------------------------

def test_gamma_empty_for_boolean_self():
    b = boolean_semifield()
    assert maximal_annihilator_primes(b, self_action(b)) == ()


def test_gamma_for_boolean_square_self():
    s = boolean_square()
    primes = maximal_annihilator_primes(s, self_action(s))
    assert [p.members() for p in primes] == [(0, 1), (0, 2)]


def test_gamma_for_module_over_boolean():
    b = boolean_semifield()
    primes = maximal_annihilator_primes(b, componentwise_module(b, 2))
    assert [p.members() for p in primes] == [(0,)]
    assert all(p.is_proper for p in primes)


def test_gamma_rejects_zero_module():
    from semiringlab.corpus import zero_module

    b = boolean_semifield()
    with pytest.raises(StructureError):
        maximal_annihilator_primes(b, zero_module(b))


# --- Krull separation ----------------------------------------------------------------

def test_krull_chain_golden():
    t = chain_semiring()
    p = krull_separation(t, mult_closure(t, [2]), make_ideal(t, [0]))
    assert p.members() == (0, 1)


def test_krull_fixed_point():
    t = chain_semiring()
    mid = make_ideal(t, [0, 1])
    assert krull_separation(t, mult_closure(t, [2]), mid).mask == mid.mask


def test_krull_rejects_meeting_t():
    t = chain_semiring()
    with pytest.raises(HypothesesUnmet):
        krull_separation(t, multiplicative_set(t, [1, 2, 0]), make_ideal(t, [0]))


def test_krull_always_prime_and_disjoint(all_entries):
    for e in all_entries:
        s = e.structure
        if not check_laws(s).is_commutative_semiring:
            continue
        for gen in range(s.size):
            t_set = mult_closure(s, [gen])
            for i in enumerate_ideals(s):
                if i.mask & t_set.mask:
                    continue
                p = krull_separation(s, t_set, i)
                assert i.issubset(p) and p.mask & t_set.mask == 0


# --- sum trees ----------------------------------------------------------------

def test_two_leaf_tree_is_the_definition():
    t = chain_semiring()
    mid = make_ideal(t, [0, 1])
    # 1 + 2 = 2 is outside the ideal; 1 + 1 = 1 inside
    assert evaluate_tree(t, (1, 1)) == 1
    assert subtractive_sumtree_property(mid, (1, 1), 1) is True


def test_three_leaf_trees_exhaustive_over_boolean():
    b = boolean_semifield()
    zero = make_ideal(b, [0])
    for leaves in itertools.product(range(2), repeat=3):
        for tree in all_tree_shapes(leaves):
            value = evaluate_tree(b, tree)
            for hole in range(3):
                others_in = all(
                    leaf == 0 for pos, leaf in enumerate(leaves) if pos != hole
                )
                if value == 0 and others_in:
                    assert subtractive_sumtree_property(zero, tree, hole)


def test_sumtree_rejects_nonsubtractive_ideal():
    s = austere_z6()
    m1 = generate_ideal(s, [3])
    with pytest.raises(HypothesesUnmet):
        subtractive_sumtree_property(m1, (3, 3), 0)


def test_left_comb_shape():
    assert left_comb([1, 2, 3]) == ((1, 2), 3)
    assert evaluate_tree(chain_semiring(), left_comb([1, 1, 2])) == 2
