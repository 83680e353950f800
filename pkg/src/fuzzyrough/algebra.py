"""Exact value domain and the operator algebra (t-norms, t-conorms, negators, implicators).

All degrees are :class:`fractions.Fraction` instances in [0, 1]. Floats are
refused on purpose: membership in the induced quasiorders depends on exact
equalities such as ``F(a) == theta(a, b) * F(b)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, Mapping, Sequence

from .errors import ParseError, ValueNotInChain
from .report import ValidationReport

ZERO = Fraction(0)
ONE = Fraction(1)

# Probe grid for flag checks in free mode; closed under x -> 1 - x.
PROBE_GRID = tuple(Fraction(k, 12) for k in range(13))


def unit(value) -> Fraction:
    """Parse ``value`` into an exact rational in [0, 1].

    Accepts ``Fraction``, ``int``, and strings such as ``"3/4"``, ``"1"`` or
    terminating decimals like ``"0.75"``.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(f"inexact or boolean degree {value!r}; pass a string or Fraction")
    if isinstance(value, Fraction):
        q = value
    elif isinstance(value, int):
        q = Fraction(value)
    elif isinstance(value, str):
        try:
            q = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {value!r}") from exc
    else:
        raise ParseError(f"cannot read a degree from {type(value).__name__}")
    if not ZERO <= q <= ONE:
        raise ParseError(f"degree {value!r} outside [0, 1]")
    return q


def fmt(value: Fraction) -> str:
    return str(value)


@dataclass(frozen=True)
class Chain:
    """A finite chain 0 = l_0 < l_1 < ... < l_k = 1 inside [0, 1]."""

    elements: tuple[Fraction, ...]

    def __post_init__(self):
        els = tuple(unit(x) for x in self.elements)
        object.__setattr__(self, "elements", els)
        if len(els) < 2 or els[0] != ZERO or els[-1] != ONE:
            raise ParseError("a chain must start at 0 and end at 1")
        if any(a >= b for a, b in zip(els, els[1:])):
            raise ParseError("chain elements must be strictly increasing")

    @classmethod
    def of(cls, *values) -> "Chain":
        if len(values) == 1 and not isinstance(values[0], (str, int, Fraction)):
            values = tuple(values[0])
        return cls(tuple(values))

    @cached_property
    def _rank(self) -> dict[Fraction, int]:
        return {x: i for i, x in enumerate(self.elements)}

    def __contains__(self, x) -> bool:
        return x in self._rank

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def rank(self, x: Fraction) -> int:
        try:
            return self._rank[x]
        except KeyError:
            raise ValueNotInChain(f"{x} is not in the chain {self}") from None

    def reverse(self, x: Fraction) -> Fraction:
        return self.elements[len(self.elements) - 1 - self.rank(x)]

    def floor(self, x: Fraction) -> Fraction:
        """Largest chain element not above ``x``."""
        best = ZERO
        for el in self.elements:
            if el <= x:
                best = el
            else:
                break
        return best

    def __str__(self) -> str:
        return "{" + ", ".join(fmt(x) for x in self.elements) + "}"


class TNorm(enum.Enum):
    MIN = "min"
    PRODUCT = "product"
    LUKASIEWICZ = "lukasiewicz"

    def __call__(self, x: Fraction, y: Fraction) -> Fraction:
        if self is TNorm.MIN:
            return x if x <= y else y
        if self is TNorm.PRODUCT:
            return x * y
        return max(ZERO, x + y - 1)


class TConorm(enum.Enum):
    MAX = "max"
    PROBSUM = "probsum"
    BOUNDED_SUM = "bounded_sum"

    def __call__(self, x: Fraction, y: Fraction) -> Fraction:
        if self is TConorm.MAX:
            return x if x >= y else y
        if self is TConorm.PROBSUM:
            return x + y - x * y
        return min(ONE, x + y)


class NegatorKind(enum.Enum):
    STANDARD = "standard"
    CHAIN_REVERSAL = "reversal"
    TABLE = "table"


@dataclass(frozen=True)
class Negator:
    kind: NegatorKind
    chain: Chain | None = None
    table: tuple[tuple[Fraction, Fraction], ...] | None = None

    def __post_init__(self):
        if self.kind is NegatorKind.CHAIN_REVERSAL and self.chain is None:
            raise ParseError("chain reversal needs a chain")
        if self.kind is NegatorKind.TABLE:
            if not self.table:
                raise ParseError("table negator needs a table")
            mapping = dict(self.table)
            if mapping.get(ZERO) != ONE or mapping.get(ONE) != ZERO:
                raise ParseError("a negator must send 0 to 1 and 1 to 0")
            keys = sorted(mapping)
            if any(mapping[a] < mapping[b] for a, b in zip(keys, keys[1:])):
                raise ParseError("a negator must be decreasing")

    @classmethod
    def standard(cls) -> "Negator":
        return cls(NegatorKind.STANDARD)

    @classmethod
    def reversal(cls, chain: Chain) -> "Negator":
        return cls(NegatorKind.CHAIN_REVERSAL, chain=chain)

    @classmethod
    def from_table(cls, mapping: Mapping) -> "Negator":
        pairs = tuple(sorted((unit(k), unit(v)) for k, v in mapping.items()))
        return cls(NegatorKind.TABLE, table=pairs)

    @cached_property
    def _lookup(self) -> dict[Fraction, Fraction] | None:
        return dict(self.table) if self.table else None

    def __call__(self, x: Fraction) -> Fraction:
        if self.kind is NegatorKind.STANDARD:
            return ONE - x
        if self.kind is NegatorKind.CHAIN_REVERSAL:
            return self.chain.reverse(x)
        try:
            return self._lookup[x]
        except KeyError:
            raise ValueNotInChain(f"{x} is outside the negator table") from None

    @property
    def domain(self) -> tuple[Fraction, ...] | None:
        """Values on which the negator is defined; ``None`` means all of [0, 1]."""
        if self.kind is NegatorKind.CHAIN_REVERSAL:
            return self.chain.elements
        if self.kind is NegatorKind.TABLE:
            return tuple(k for k, _ in self.table)
        return None

    def involution_witness(self, values: Iterable[Fraction] | None = None):
        """First ``x`` with n(n(x)) != x, or ``None`` when involutive on ``values``."""
        values = self.domain if values is None else values
        if values is None:
            values = PROBE_GRID
        for x in values:
            try:
                if self(self(x)) != x:
                    return x
            except ValueNotInChain:
                return x
        return None

    def is_involutive(self, values: Iterable[Fraction] | None = None) -> bool:
        return self.involution_witness(values) is None

    def descriptor(self):
        if self.kind is NegatorKind.TABLE:
            return {"table": {fmt(k): fmt(v) for k, v in self.table}}
        return self.kind.value


def _residuum(tnorm: TNorm, x: Fraction, y: Fraction) -> Fraction:
    if x <= y:
        return ONE
    if tnorm is TNorm.MIN:
        return y
    if tnorm is TNorm.PRODUCT:
        return y / x
    return min(ONE, ONE - x + y)


@dataclass(frozen=True)
class Implicator:
    """R-implicator of a t-norm, or S-implicator n(x) (+) y."""

    kind: str  # "R" or "S"
    tnorm: TNorm | None = None
    tconorm: TConorm | None = None
    negator: Negator | None = None

    def __post_init__(self):
        if self.kind == "R" and self.tnorm is None:
            raise ParseError("an R-implicator needs its t-norm")
        if self.kind == "S" and (self.tconorm is None or self.negator is None):
            raise ParseError("an S-implicator needs a t-conorm and a negator")
        if self.kind not in ("R", "S"):
            raise ParseError(f"unknown implicator kind {self.kind!r}")

    @classmethod
    def residual(cls, tnorm: TNorm) -> "Implicator":
        return cls("R", tnorm=tnorm)

    @classmethod
    def s_implicator(cls, tconorm: TConorm, negator: Negator) -> "Implicator":
        return cls("S", tconorm=tconorm, negator=negator)

    def __call__(self, x: Fraction, y: Fraction) -> Fraction:
        if self.kind == "R":
            return _residuum(self.tnorm, x, y)
        return self.tconorm(self.negator(x), y)

    @property
    def name(self) -> str:
        if self.kind == "R":
            return {TNorm.MIN: "goedel", TNorm.PRODUCT: "goguen", TNorm.LUKASIEWICZ: "lukasiewicz"}[self.tnorm]
        if self.tconorm is TConorm.MAX:
            return "kd"
        return "s"


_IMPLICATOR_NAMES = {
    "goedel": TNorm.MIN,
    "godel": TNorm.MIN,
    "gödel": TNorm.MIN,
    "goguen": TNorm.PRODUCT,
    "lukasiewicz": TNorm.LUKASIEWICZ,
}


@dataclass(frozen=True)
class AlgebraFlags:
    n_dual: bool
    border: bool
    involutive: bool
    itml: bool
    condition_C: bool
    condition_D: bool
    condition_ID: bool


@dataclass(frozen=True)
class Algebra:
    tnorm: TNorm
    tconorm: TConorm
    negator: Negator
    implicator: Implicator

    @classmethod
    def kleene_dienes(cls, negator: Negator | None = None) -> "Algebra":
        """min / max / n / max(n(x), y): the algebra of condition (C) when n is involutive."""
        negator = negator or Negator.standard()
        return cls(TNorm.MIN, TConorm.MAX, negator, Implicator.s_implicator(TConorm.MAX, negator))

    @classmethod
    def from_descriptor(cls, doc: Mapping, chain: Chain | None = None) -> "Algebra":
        try:
            tnorm = TNorm(doc.get("tnorm", "min"))
            tconorm = TConorm(doc.get("tconorm", "max"))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
        neg_doc = doc.get("negator", "reversal" if chain is not None else "standard")
        if isinstance(neg_doc, Mapping) and "table" in neg_doc:
            negator = Negator.from_table(neg_doc["table"])
        elif neg_doc == "standard":
            negator = Negator.standard()
        elif neg_doc in ("reversal", "chain_reversal"):
            if chain is None:
                raise ParseError("the reversal negator needs a chain in the space document")
            negator = Negator.reversal(chain)
        else:
            raise ParseError(f"unknown negator {neg_doc!r}")
        imp_doc = doc.get("implicator", "kd")
        if imp_doc == "kd":
            implicator = Implicator.s_implicator(TConorm.MAX, negator)
        elif imp_doc == "s":
            implicator = Implicator.s_implicator(tconorm, negator)
        elif imp_doc == "r":
            implicator = Implicator.residual(tnorm)
        elif imp_doc in _IMPLICATOR_NAMES:
            implicator = Implicator.residual(_IMPLICATOR_NAMES[imp_doc])
        else:
            raise ParseError(f"unknown implicator {imp_doc!r}")
        return cls(tnorm, tconorm, negator, implicator)

    def descriptor(self) -> dict:
        imp = self.implicator
        if imp.kind == "R":
            imp_name = "r" if imp.tnorm is self.tnorm else imp.name
        elif imp.negator == self.negator and imp.tconorm is TConorm.MAX:
            imp_name = "kd"
        else:
            imp_name = "s"
        return {
            "tnorm": self.tnorm.value,
            "tconorm": self.tconorm.value,
            "negator": self.negator.descriptor(),
            "implicator": imp_name,
        }

    def n(self, x: Fraction) -> Fraction:
        """The negation x |> 0 that the duality statements are about."""
        return self.implicator(x, ZERO)

    def flags(self, domain: Sequence[Fraction] | None = None) -> AlgebraFlags:
        domain = tuple(domain) if domain is not None else probe_domain(self)
        return _flags(self, domain)


def probe_domain(alg: Algebra, chain: Chain | None = None) -> tuple[Fraction, ...]:
    """Finite set of degrees on which algebraic flags are tested."""
    restricted = alg.negator.domain
    imp_neg = alg.implicator.negator
    if restricted is None and imp_neg is not None:
        restricted = imp_neg.domain
    if restricted is not None:
        return tuple(restricted)
    values = set(PROBE_GRID)
    if chain is not None:
        values.update(chain)
        values.update(ONE - x for x in chain)
    return tuple(sorted(values))


def _safe(fn, *args):
    try:
        return fn(*args)
    except ValueNotInChain:
        return None


def _dual_witness(tnorm: TNorm, tconorm: TConorm, negator: Negator, domain):
    for x, y in product(domain, repeat=2):
        lhs = _safe(negator, tconorm(x, y))
        nx, ny = _safe(negator, x), _safe(negator, y)
        if lhs is None or nx is None or ny is None or lhs != tnorm(nx, ny):
            return (x, y)
    return None


def _induced_involution_witness(imp: Implicator, domain):
    for x in domain:
        nx = imp(x, ZERO)
        if _safe(imp, nx, ZERO) != x:
            return x
    return None


def _flags(alg: Algebra, domain) -> AlgebraFlags:
    imp = alg.implicator
    n_dual = _dual_witness(alg.tnorm, alg.tconorm, alg.negator, domain) is None
    border = all(imp(ONE, x) == x for x in domain)
    involutive = alg.negator.is_involutive(domain)
    itml = imp.kind == "R" and imp.tnorm is alg.tnorm and _induced_involution_witness(imp, domain) is None
    s_ok = (
        imp.kind == "S"
        and imp.negator.is_involutive(domain)
        and _dual_witness(alg.tnorm, imp.tconorm, imp.negator, domain) is None
    )
    # Left-continuity of the built-in t-norms is assumed; it is vacuous on a finite chain.
    r_ok = imp.kind == "R" and imp.tnorm is alg.tnorm
    condition_C = (
        alg.tnorm is TNorm.MIN
        and imp.kind == "S"
        and imp.tconorm is TConorm.MAX
        and imp.negator.is_involutive(domain)
    )
    return AlgebraFlags(
        n_dual=n_dual,
        border=border,
        involutive=involutive,
        itml=itml,
        condition_C=condition_C,
        condition_D=itml or s_ok,
        condition_ID=r_ok or s_ok,
    )


def tnorm_apply(kind: TNorm, x: Fraction, y: Fraction) -> Fraction:
    return kind(x, y)


def negator_apply(kind: Negator, x: Fraction, chain: Chain | None = None) -> Fraction:
    if chain is not None and kind.kind is not NegatorKind.STANDARD and x not in chain:
        raise ValueNotInChain(f"{x} is not in {chain}")
    return kind(x)


def implicator_apply(alg: Algebra, x: Fraction, y: Fraction) -> Fraction:
    return alg.implicator(x, y)


def induced_negator(alg: Algebra, chain: Chain) -> Negator:
    """The map x -> x |> 0 tabulated over ``chain``.

    Use :meth:`Negator.is_involutive` on the result for the involutivity flag.
    """
    return Negator(NegatorKind.TABLE, table=tuple((x, alg.implicator(x, ZERO)) for x in chain))


def validate_algebra(alg: Algebra, chain: Chain) -> ValidationReport:
    report = ValidationReport()
    domain = tuple(chain)
    report.add("n-dual", (w := _dual_witness(alg.tnorm, alg.tconorm, alg.negator, domain)) is None, w)
    w = next((x for x in domain if alg.implicator(ONE, x) != x), None)
    report.add("border", w is None, w)
    w = alg.negator.involution_witness(domain)
    report.add("involutive negator", w is None, w)
    flags = alg.flags(domain)
    c_witness = None
    if not flags.condition_C:
        c_witness = "requires min t-norm and max(n(x), y) with involutive n"
    report.add("condition (C)", flags.condition_C, c_witness)
    report.add("condition (D)", flags.condition_D, None if flags.condition_D else "hypotheses of (D) not met")
    report.add(
        "condition (ID)",
        flags.condition_ID,
        None if flags.condition_ID else "hypotheses of (ID) not met",
        note="left-continuity of built-in t-norms assumed (vacuous on a finite chain)",
    )
    for name, op in (("tnorm", alg.tnorm), ("tconorm", alg.tconorm), ("implicator", alg.implicator)):
        w = None
        for x, y in product(domain, repeat=2):
            v = _safe(op, x, y)
            if v is None or v not in chain:
                w = (x, y)
                break
        report.add(f"closure: {name}", w is None, w)
    w = next((x for x in domain if _safe(alg.negator, x) not in chain), None)
    report.add("closure: negator", w is None, w)
    return report
