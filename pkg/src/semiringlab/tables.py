"""Finite algebraic structures as dense Cayley tables, with exhaustive law checks.

Carriers are index sets 0..size-1 and binary operations are row-major tables,
so every law is decidable by quantifier elimination over the carrier. Failing
laws always carry the lexicographically least witness tuple, which keeps
reports deterministic and golden-testable.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import StructureError

Row = tuple[int, ...]
Table = tuple[Row, ...]

LAW_NAMES = (
    "left_distributive",
    "right_distributive",
    "add_associative",
    "add_commutative",
    "add_medial",
    "mul_associative",
    "mul_commutative",
    "has_zero",
    "zero_absorbing",
    "has_one",
    "zerosumfree",
    "entire",
    "complemented",
    "mul_idempotent",
)


def freeze_table(rows: Sequence[Sequence[int]], nrows: int, ncols: int, what: str = "table") -> Table:
    """Copy rows into tuples, validating shape and entry range."""
    if len(rows) != nrows:
        raise StructureError(f"{what}: expected {nrows} rows, got {len(rows)}")
    out = []
    for i, row in enumerate(rows):
        frozen = tuple(int(v) for v in row)
        if len(frozen) != ncols:
            raise StructureError(f"{what}: row {i} has length {len(frozen)}, expected {ncols}")
        for v in frozen:
            if not 0 <= v < ncols:
                raise StructureError(f"{what}: entry {v} in row {i} out of range 0..{ncols - 1}")
        out.append(frozen)
    return tuple(out)


@dataclass(frozen=True)
class CayleyStructure:
    """A finite carrier with addition and multiplication tables.

    ``zero`` and ``one`` are optional designated elements. Designations are
    produced honestly by the constructors in this package; files are verified
    on ingest. ``check_laws`` always rediscovers neutral elements from the
    tables, independently of any designation.
    """

    size: int
    add: Table
    mul: Table
    zero: Optional[int] = None
    one: Optional[int] = None
    name: str = ""

    def __post_init__(self):
        if self.size <= 0:
            raise StructureError("carrier must be nonempty")
        object.__setattr__(self, "add", freeze_table(self.add, self.size, self.size, "add"))
        object.__setattr__(self, "mul", freeze_table(self.mul, self.size, self.size, "mul"))
        for label in ("zero", "one"):
            v = getattr(self, label)
            if v is not None and not 0 <= v < self.size:
                raise StructureError(f"{label}={v} out of range for carrier of size {self.size}")

    def elements(self) -> range:
        return range(self.size)

    def __repr__(self):  # tables are noisy; show identity only
        return f"<{type(self).__name__} {self.name or 'anonymous'} size={self.size}>"


@dataclass(frozen=True, repr=False)
class LawReport:
    """Outcome of exhaustive law checking.

    A flag is False exactly when ``witnesses`` carries an entry under the
    flag's name; the entry is the least tuple falsifying the law, or the
    empty tuple for existence flags with nothing to exhibit.
    """

    left_distributive: bool
    right_distributive: bool
    add_associative: bool
    add_commutative: bool
    add_medial: bool
    mul_associative: bool
    mul_commutative: bool
    has_zero: bool
    zero_absorbing: bool
    has_one: bool
    zerosumfree: bool
    entire: bool
    complemented: bool
    mul_idempotent: bool
    zero: Optional[int]
    one: Optional[int]
    witnesses: dict

    def flag(self, law: str) -> bool:
        if law not in LAW_NAMES:
            raise KeyError(f"unknown law {law!r}")
        return getattr(self, law)

    @property
    def is_ringoid(self) -> bool:
        return self.left_distributive and self.right_distributive

    @property
    def is_with_zero(self) -> bool:
        return self.has_zero and self.zero_absorbing

    @property
    def is_na_hemiring(self) -> bool:
        return (
            self.is_ringoid
            and self.add_associative
            and self.add_commutative
            and self.is_with_zero
        )

    @property
    def is_na_semiring(self) -> bool:
        return self.is_na_hemiring and self.has_one and self.zero != self.one

    @property
    def is_semiring(self) -> bool:
        return self.is_na_semiring and self.mul_associative

    @property
    def is_commutative_semiring(self) -> bool:
        return self.is_semiring and self.mul_commutative

    def __repr__(self):
        failing = sorted(self.witnesses)
        return f"<LawReport ok={not failing} failing={failing}>"


def _neutral(table: Table, n: int) -> Optional[int]:
    """Least two-sided neutral element of a magma table, if any."""
    for e in range(n):
        row = table[e]
        if all(row[x] == x and table[x][e] == x for x in range(n)):
            return e
    return None


def _scan1(n, bad):
    for a in range(n):
        if bad(a):
            return (a,)
    return None


def _scan2(n, bad):
    for a in range(n):
        for b in range(n):
            if bad(a, b):
                return (a, b)
    return None


def _scan3(n, bad):
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if bad(a, b, c):
                    return (a, b, c)
    return None


def _scan4(n, bad):
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    if bad(a, b, c, d):
                        return (a, b, c, d)
    return None


@functools.lru_cache(maxsize=None)
def check_laws(s: CayleyStructure) -> LawReport:
    """Decide every law flag exhaustively, with lexicographically least witnesses."""
    n, add, mul = s.size, s.add, s.mul
    witnesses: dict = {}

    def settle(law: str, witness) -> bool:
        if witness is None:
            return True
        witnesses[law] = witness
        return False

    left_distributive = settle(
        "left_distributive",
        _scan3(n, lambda a, b, c: mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]),
    )
    right_distributive = settle(
        "right_distributive",
        _scan3(n, lambda a, b, c: mul[add[b][c]][a] != add[mul[b][a]][mul[c][a]]),
    )
    add_associative = settle(
        "add_associative", _scan3(n, lambda a, b, c: add[add[a][b]][c] != add[a][add[b][c]])
    )
    add_commutative = settle("add_commutative", _scan2(n, lambda a, b: add[a][b] != add[b][a]))
    add_medial = settle(
        "add_medial",
        _scan4(n, lambda a, b, c, d: add[add[a][b]][add[c][d]] != add[add[a][c]][add[b][d]]),
    )
    mul_associative = settle(
        "mul_associative", _scan3(n, lambda a, b, c: mul[mul[a][b]][c] != mul[a][mul[b][c]])
    )
    mul_commutative = settle("mul_commutative", _scan2(n, lambda a, b: mul[a][b] != mul[b][a]))

    zero = _neutral(add, n)
    has_zero = settle("has_zero", None if zero is not None else ())
    if zero is None:
        zero_absorbing = settle("zero_absorbing", ())
        zerosumfree = settle("zerosumfree", ())
        entire = settle("entire", ())
    else:
        z = zero
        zero_absorbing = settle(
            "zero_absorbing", _scan1(n, lambda x: mul[z][x] != z or mul[x][z] != z)
        )
        zerosumfree = settle(
            "zerosumfree", _scan2(n, lambda a, b: add[a][b] == z and (a != z or b != z))
        )
        entire = settle("entire", _scan2(n, lambda a, b: mul[a][b] == z and a != z and b != z))

    one = _neutral(mul, n)
    has_one = settle("has_one", None if one is not None else ())

    if zero is None or one is None:
        complemented = settle("complemented", ())
    else:
        z, e = zero, one

        def lacks_unique_complement(r):
            count = 0
            for rp in range(n):
                if mul[r][rp] == z and mul[rp][r] == z and add[r][rp] == e and add[rp][r] == e:
                    count += 1
            return count != 1

        complemented = settle("complemented", _scan1(n, lacks_unique_complement))

    mul_idempotent = settle("mul_idempotent", _scan1(n, lambda r: mul[r][r] != r))

    return LawReport(
        left_distributive=left_distributive,
        right_distributive=right_distributive,
        add_associative=add_associative,
        add_commutative=add_commutative,
        add_medial=add_medial,
        mul_associative=mul_associative,
        mul_commutative=mul_commutative,
        has_zero=has_zero,
        zero_absorbing=zero_absorbing,
        has_one=has_one,
        zerosumfree=zerosumfree,
        entire=entire,
        complemented=complemented,
        mul_idempotent=mul_idempotent,
        zero=zero,
        one=one,
        witnesses=witnesses,
    )


def verify_designations(s: CayleyStructure) -> None:
    """Reject structures whose designated zero/one disagree with the tables."""
    rep = check_laws(s)
    if s.zero is not None and rep.zero != s.zero:
        raise StructureError(
            f"{s.name or 'structure'}: designated zero {s.zero} is not the additive neutral"
        )
    if s.one is not None and rep.one != s.one:
        raise StructureError(
            f"{s.name or 'structure'}: designated one {s.one} is not the multiplicative identity"
        )


def require_semiring(s: CayleyStructure) -> LawReport:
    rep = check_laws(s)
    if not rep.is_semiring:
        raise StructureError(f"{s.name or 'structure'} is not a semiring: fails {sorted(rep.witnesses)}")
    return rep


def require_commutative_semiring(s: CayleyStructure) -> LawReport:
    rep = require_semiring(s)
    if not rep.mul_commutative:
        raise StructureError(f"{s.name or 'structure'} is not commutative")
    return rep


def is_semifield(s: CayleyStructure) -> bool:
    """Commutative semiring in which every nonzero element has a multiplicative inverse."""
    rep = check_laws(s)
    if not rep.is_commutative_semiring:
        return False
    z, e = rep.zero, rep.one
    return all(
        any(s.mul[x][y] == e for y in s.elements()) for x in s.elements() if x != z
    )


@dataclass(frozen=True)
class StructureConstants:
    """Multiplication data for a finite-dimensional bilinear product over a semifield.

    ``gamma[i][j][k]`` is the coefficient of the k-th basis vector in the
    product of basis vectors i and j.
    """

    semifield: CayleyStructure
    dim: int
    gamma: tuple

    def __post_init__(self):
        if self.dim <= 0:
            raise StructureError("dimension must be positive")
        ksize = self.semifield.size
        if len(self.gamma) != self.dim:
            raise StructureError("gamma must have one block per basis vector")
        frozen = []
        for i, block in enumerate(self.gamma):
            if len(block) != self.dim:
                raise StructureError("gamma block has wrong shape")
            brows = []
            for j, row in enumerate(block):
                row = tuple(int(v) for v in row)
                if len(row) != self.dim:
                    raise StructureError("gamma block has wrong shape")
                for v in row:
                    if not 0 <= v < ksize:
                        raise StructureError(f"gamma entry {v} not in the semifield carrier")
                brows.append(row)
            frozen.append(tuple(brows))
        object.__setattr__(self, "gamma", tuple(frozen))


@dataclass(frozen=True, repr=False)
class FiniteSemimodule:
    """A finite commutative monoid with a scalar action by a finite semiring."""

    semiring: CayleyStructure
    msize: int
    madd: Table
    mzero: int
    action: Table  # one row per scalar, one column per module element
    name: str = ""

    def __post_init__(self):
        if self.msize <= 0:
            raise StructureError("module carrier must be nonempty")
        object.__setattr__(self, "madd", freeze_table(self.madd, self.msize, self.msize, "madd"))
        object.__setattr__(
            self, "action", freeze_table(self.action, self.semiring.size, self.msize, "action")
        )
        if not 0 <= self.mzero < self.msize:
            raise StructureError("mzero out of range")

    def elements(self) -> range:
        return range(self.msize)

    def __repr__(self):
        return f"<FiniteSemimodule {self.name or 'anonymous'} msize={self.msize} over {self.semiring.name or 'S'}>"


SEMIMODULE_AXIOMS = (
    "add_associative",
    "add_commutative",
    "zero_neutral",
    "action_associative",
    "action_unital",
    "scalar_add_distributes",
    "module_add_distributes",
    "zero_scalar_absorbs",
    "scalar_zero_absorbs",
)


@dataclass(frozen=True, repr=False)
class SemimoduleReport:
    add_associative: bool
    add_commutative: bool
    zero_neutral: bool
    action_associative: bool
    action_unital: bool
    scalar_add_distributes: bool
    module_add_distributes: bool
    zero_scalar_absorbs: bool
    scalar_zero_absorbs: bool
    witnesses: dict

    @property
    def valid(self) -> bool:
        return not self.witnesses

    def __repr__(self):
        return f"<SemimoduleReport ok={self.valid} failing={sorted(self.witnesses)}>"


@functools.lru_cache(maxsize=None)
def semimodule_check(m: FiniteSemimodule) -> SemimoduleReport:
    """Exhaustively verify the commutative-monoid and scalar-action axioms."""
    rep = require_semiring(m.semiring)
    zero_s, one_s = rep.zero, rep.one
    n, k = m.semiring.size, m.msize
    sadd, smul = m.semiring.add, m.semiring.mul
    madd, act, mz = m.madd, m.action, m.mzero
    witnesses: dict = {}

    def settle(axiom, witness):
        if witness is None:
            return True
        witnesses[axiom] = witness
        return False

    add_associative = settle(
        "add_associative", _scan3(k, lambda a, b, c: madd[madd[a][b]][c] != madd[a][madd[b][c]])
    )
    add_commutative = settle("add_commutative", _scan2(k, lambda a, b: madd[a][b] != madd[b][a]))
    zero_neutral = settle(
        "zero_neutral", _scan1(k, lambda x: madd[mz][x] != x or madd[x][mz] != x)
    )

    action_associative = None
    for st in range(n):
        for t in range(n):
            for x in range(k):
                if act[smul[st][t]][x] != act[st][act[t][x]]:
                    action_associative = (st, t, x)
                    break
            if action_associative:
                break
        if action_associative:
            break
    action_associative = settle("action_associative", action_associative)

    action_unital = settle("action_unital", _scan1(k, lambda x: act[one_s][x] != x))

    scalar_add = None
    for st in range(n):
        for t in range(n):
            for x in range(k):
                if act[sadd[st][t]][x] != madd[act[st][x]][act[t][x]]:
                    scalar_add = (st, t, x)
                    break
            if scalar_add:
                break
        if scalar_add:
            break
    scalar_add_distributes = settle("scalar_add_distributes", scalar_add)

    module_add = None
    for st in range(n):
        for x in range(k):
            for y in range(k):
                if act[st][madd[x][y]] != madd[act[st][x]][act[st][y]]:
                    module_add = (st, x, y)
                    break
            if module_add:
                break
        if module_add:
            break
    module_add_distributes = settle("module_add_distributes", module_add)

    zero_scalar_absorbs = settle("zero_scalar_absorbs", _scan1(k, lambda x: act[zero_s][x] != mz))
    scalar_zero_absorbs = settle("scalar_zero_absorbs", _scan1(n, lambda st: act[st][mz] != mz))

    return SemimoduleReport(
        add_associative=add_associative,
        add_commutative=add_commutative,
        zero_neutral=zero_neutral,
        action_associative=action_associative,
        action_unital=action_unital,
        scalar_add_distributes=scalar_add_distributes,
        module_add_distributes=module_add_distributes,
        zero_scalar_absorbs=zero_scalar_absorbs,
        scalar_zero_absorbs=scalar_zero_absorbs,
        witnesses=witnesses,
    )


def require_semimodule(m: FiniteSemimodule) -> SemimoduleReport:
    rep = semimodule_check(m)
    if not rep.valid:
        raise StructureError(f"{m.name or 'module'} fails semimodule axioms: {sorted(rep.witnesses)}")
    return rep


def self_action(s: CayleyStructure) -> FiniteSemimodule:
    """A semiring viewed as a semimodule over itself by left multiplication."""
    rep = require_semiring(s)
    return FiniteSemimodule(
        semiring=s,
        msize=s.size,
        madd=s.add,
        mzero=rep.zero,
        action=s.mul,
        name=f"{s.name or 'S'} on itself",
    )
