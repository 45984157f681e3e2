"""Wu-constraint enumeration and characteristic-rank bounds.

A candidate total Stiefel-Whitney class on V_k(F^n) is a list of homogeneous
classes w_1, w_2, ... subject to the Sq^1 instance of Wu's formula,

    Sq^1(w_j) = w_1 w_j + (j + 1) w_{j+1}  (mod 2).

For even j this forces w_{j+1} = w_1 w_j + Sq^1(w_j); for odd j >= 3 it is a
parity condition Sq^1(w_j) = w_1 w_j. Degree 1 and all even degrees are free
choices. The enumerator walks degree by degree: a branch stays alive while
the subalgebra generated by its classes covers every cohomology group seen so
far, and is retired with its characteristic rank the first time coverage
fails. The maximum recorded rank is an upper bound for ucharrank; verified
witness bundles (and the connectivity of the manifold) give the lower bound.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .gf2 import CoordVector, Span
from .registry import WitnessRecord, load_witnesses
from .rings import (
    Element,
    FieldTag,
    RingPresentation,
    build_ring,
    manifold_dimension,
    validate_parameters,
)
from .steenrod import SQ1_ZERO_ASSUMPTION, SqTable

DEFAULT_BRANCH_LIMIT = 1 << 20
DEFAULT_CAP_LIMIT = 24
MILNOR_EXEMPT = frozenset({1, 2, 4, 8})
TRIVIAL_WITNESS_ID = "trivial_bundle"


class BranchLimitExceeded(RuntimeError):
    """The enumeration frontier grew past the configured guard."""


class WitnessVerificationError(RuntimeError):
    """A registry witness failed verification: the registry data is wrong."""


@dataclass(frozen=True)
class ObstructionRule:
    """An opt-in vanishing constraint on realizable bundles.

    When the rule applies to (field, n, k) it forces w_d = 0 at the degree
    returned by ``zero_degree``; the enumeration drops every branch that
    violates it.
    """

    id: str
    description: str
    applies: Callable[[FieldTag, int, int], bool]
    zero_degree: Callable[[int, int], int]


MILNOR_RULE = ObstructionRule(
    id="milnor",
    description=(
        "restriction to the bottom sphere is an isomorphism on H^{n-k}, and "
        "a rank-(n-k) class can survive on a sphere only in dimensions 1, 2, "
        "4, 8; elsewhere w_{n-k} = 0"
    ),
    applies=lambda field, n, k: field is FieldTag.REAL and (n - k) not in MILNOR_EXEMPT,
    zero_degree=lambda n, k: n - k,
)

STANDARD_RULES = (MILNOR_RULE,)


def default_cap(field: FieldTag, n: int, k: int) -> int:
    """Default enumeration depth: generous, and never below the first
    degree where anything can happen."""
    return max(DEFAULT_CAP_LIMIT, field.c * (n - k + 1) + 2)


# ---------------------------------------------------------------------------
# assignments and coverage
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SWAssignment:
    """Candidate classes w_1..w_D on a ring (w_0 = 1 is implicit)."""

    ring: RingPresentation
    classes: tuple[Element, ...]

    def __post_init__(self) -> None:
        for j, w in enumerate(self.classes, start=1):
            if w.degree != j:
                raise ValueError(f"class in slot {j} has degree {w.degree}")
            if w.coords.length != self.ring.dim(j):
                raise ValueError(f"class w_{j} has wrong coordinate length")

    @classmethod
    def trivial(cls, ring: RingPresentation, top: int) -> "SWAssignment":
        return cls(ring, tuple(ring.zero(d) for d in range(1, top + 1)))

    @property
    def top_degree(self) -> int:
        return len(self.classes)

    def w(self, j: int) -> Element:
        if j == 0:
            return self.ring.unit()
        return self.classes[j - 1]

    def check_wu(self, sq: SqTable) -> None:
        """Raise if a forced class or an odd-degree parity condition fails."""
        for j in range(2, self.top_degree, 2):
            forced = self.ring.multiply(self.w(1), self.w(j)) + sq.sq(1, self.w(j))
            if self.w(j + 1) != forced:
                raise ValueError(f"w_{j + 1} differs from the Wu-forced value")
        for j in range(3, self.top_degree + 1, 2):
            if j + 1 > self.ring.max_degree:
                continue
            if sq.sq(1, self.w(j)) != self.ring.multiply(self.w(1), self.w(j)):
                raise ValueError(f"Sq^1(w_{j}) != w_1 w_{j}")

    def to_display(self) -> dict[str, str]:
        return {
            f"w{j}": self.ring.format_element(w)
            for j, w in enumerate(self.classes, start=1)
            if not w.is_zero
        } or {"w*": "0"}


def _unit_span() -> Span:
    # degree-0 slice: H^0 is one-dimensional, spanned by the unit
    return Span.empty(1).add_vector(CoordVector.unit(1, 0))


def _degree_span(
    ring: RingPresentation, classes: Sequence[Element], spans: Sequence[Span], d: int
) -> Span:
    # Degree-d slice of the subalgebra generated by the classes:
    # span of w_i * (degree d-i slice) over i = 1..d, with slice 0 = <1>.
    span = Span.empty(ring.dim(d))
    for i in range(1, d + 1):
        w = classes[i - 1]
        if w.is_zero:
            continue
        for row in spans[d - i].rows:
            prod = ring.multiply(w, Element(d - i, row))
            if not prod.is_zero:
                span = span.add_vector(prod.coords)
    return span


def coverage_prefix(ring: RingPresentation, assignment: SWAssignment, d: int) -> bool:
    """True iff the classes generate every cohomology group in degrees <= d."""
    if d > assignment.top_degree:
        raise ValueError(f"d = {d} exceeds assignment length {assignment.top_degree}")
    spans = [_unit_span()]
    for j in range(1, d + 1):
        spans.append(_degree_span(ring, assignment.classes, spans, j))
    return all(s.is_full() for s in spans)


def charrank_of_assignment(ring: RingPresentation, assignment: SWAssignment) -> int:
    """Largest d <= top_degree through which coverage holds."""
    spans = [_unit_span()]
    for j in range(1, assignment.top_degree + 1):
        span = _degree_span(ring, assignment.classes, spans, j)
        if not span.is_full():
            return j - 1
        spans.append(span)
    return assignment.top_degree


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Partial:
    """A live branch: classes w_1..w_d plus the coverage spans S_0..S_d."""

    classes: tuple[Element, ...]
    spans: tuple[Span, ...]

    @property
    def degree(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class RetiredAssignment:
    """A branch whose coverage failed (or that reached the manifold top)."""

    charrank: int
    classes: tuple[Element, ...]
    death_degree: int | None


@dataclass
class _Tally:
    deaths: Counter
    parity_prunes: Counter
    rule_events: Counter
    max_live: int = 1

    @classmethod
    def fresh(cls) -> "_Tally":
        return cls(Counter(), Counter(), Counter())


@dataclass(frozen=True)
class EnumerationTrace:
    cap_limit: int
    ceiling: int
    stopped_at: int
    capped: bool
    deaths_by_degree: tuple[tuple[int, int], ...]
    parity_prunes_by_degree: tuple[tuple[int, int], ...]
    rule_events: tuple[tuple[str, int, int], ...]
    max_live_branches: int
    branches_retired: int

    def to_json_dict(self) -> dict:
        return {
            "cap_limit": self.cap_limit,
            "ceiling": self.ceiling,
            "stopped_at": self.stopped_at,
            "capped": self.capped,
            "deaths_by_degree": [
                {"degree": d, "branches": c} for d, c in self.deaths_by_degree
            ],
            "parity_prunes_by_degree": [
                {"degree": d, "branches": c} for d, c in self.parity_prunes_by_degree
            ],
            "rule_events": [
                {"rule": rule, "degree": d, "choices_removed": c}
                for rule, d, c in self.rule_events
            ],
            "max_live_branches": self.max_live_branches,
            "branches_retired": self.branches_retired,
        }


@dataclass(frozen=True)
class EnumerationResult:
    retired: tuple[RetiredAssignment, ...]
    stopped_at: int
    capped: bool
    trace: EnumerationTrace


class WuEnumerator:
    """Degree-by-degree enumeration of Wu-consistent assignments."""

    def __init__(
        self,
        ring: RingPresentation,
        sq: SqTable | None = None,
        rules: Sequence[ObstructionRule] = (),
        branch_limit: int = DEFAULT_BRANCH_LIMIT,
    ):
        self.ring = ring
        self.sq = sq if sq is not None else SqTable(ring)
        self.rules = tuple(rules)
        self.branch_limit = branch_limit

    def initial(self) -> Partial:
        return Partial((), (_unit_span(),))

    def partial_from_classes(self, classes: Iterable[Element]) -> Partial:
        """Rebuild a branch (with its spans) from explicit classes."""
        classes = tuple(classes)
        spans = [_unit_span()]
        for j in range(1, len(classes) + 1):
            spans.append(_degree_span(self.ring, classes, spans, j))
        return Partial(classes, tuple(spans))

    def _rule_forcing_zero(self, d: int) -> ObstructionRule | None:
        r = self.ring
        for rule in self.rules:
            if rule.applies(r.field, r.n, r.k) and rule.zero_degree(r.n, r.k) == d:
                return rule
        return None

    def _choices(self, partial: Partial, d: int, tally: _Tally) -> list[Element]:
        ring = self.ring
        rule = self._rule_forcing_zero(d)
        if d == 1 or d % 2 == 0:
            dim = ring.dim(d)
            if rule is not None:
                tally.rule_events[(rule.id, d)] += (1 << dim) - 1
                return [ring.zero(d)]
            return [
                Element(d, CoordVector(dim, bits)) for bits in range(1 << dim)
            ]
        # odd d >= 3: the single Wu-forced class
        w1 = partial.classes[0]
        w_prev = partial.classes[d - 2]
        forced = ring.multiply(w1, w_prev) + self.sq.sq(1, w_prev)
        if rule is not None and not forced.is_zero:
            tally.rule_events[(rule.id, d)] += 1
            return []
        if d + 1 <= ring.max_degree:
            if self.sq.sq(1, forced) != ring.multiply(w1, forced):
                tally.parity_prunes[d] += 1
                return []
        return [forced]

    def extend(
        self,
        partials: Sequence[Partial],
        *,
        prune_coverage: bool = True,
        retired: list[RetiredAssignment] | None = None,
        tally: _Tally | None = None,
    ) -> list[Partial]:
        """Extend every branch one degree; see the module docstring.

        With ``prune_coverage`` (the default) branches whose coverage fails
        are retired into ``retired`` with their characteristic rank; without
        it every Wu-consistent branch survives.
        """
        if not partials:
            return []
        degrees = {p.degree for p in partials}
        if len(degrees) != 1:
            raise ValueError("all partials must sit at the same degree")
        d = degrees.pop() + 1
        if d > self.ring.max_degree:
            raise ValueError(f"degree {d} exceeds ring truncation")
        tally = tally if tally is not None else _Tally.fresh()
        if d == 1 or d % 2 == 0:
            projected = len(partials) * (1 << self.ring.dim(d))
            if projected > self.branch_limit:
                raise BranchLimitExceeded(
                    f"{projected} branches at degree {d} exceed the limit "
                    f"{self.branch_limit}"
                )
        out: list[Partial] = []
        for partial in partials:
            for w in self._choices(partial, d, tally):
                classes = partial.classes + (w,)
                span = _degree_span(self.ring, classes, partial.spans, d)
                new = Partial(classes, partial.spans + (span,))
                if prune_coverage and not span.is_full():
                    tally.deaths[d] += 1
                    if retired is not None:
                        retired.append(RetiredAssignment(d - 1, classes, d))
                else:
                    out.append(new)
        if len(out) > self.branch_limit:
            raise BranchLimitExceeded(
                f"{len(out)} live branches at degree {d} exceed the limit "
                f"{self.branch_limit}"
            )
        tally.max_live = max(tally.max_live, len(out))
        return out

    def run_bound(self, ceiling: int, shuffle_rng=None) -> EnumerationResult:
        """Coverage-pruned run up to ``ceiling`` (at most the manifold dim).

        Branches still alive at the manifold dimension have seen every
        nonzero group and are retired with rank equal to the dimension;
        branches alive at a lower ceiling leave the result capped.
        """
        dim = self.ring.manifold_dimension
        ceiling = min(ceiling, dim)
        tally = _Tally.fresh()
        retired: list[RetiredAssignment] = []
        partials = [self.initial()]
        stopped_at = 0
        capped = False
        for d in range(1, ceiling + 1):
            if shuffle_rng is not None:
                partials = list(partials)
                shuffle_rng.shuffle(partials)
            partials = self.extend(partials, retired=retired, tally=tally)
            stopped_at = d
            if not partials:
                break
        if partials:
            if ceiling == dim:
                for p in partials:
                    retired.append(RetiredAssignment(dim, p.classes, None))
            else:
                capped = True
        trace = EnumerationTrace(
            cap_limit=ceiling,
            ceiling=ceiling,
            stopped_at=stopped_at,
            capped=capped,
            deaths_by_degree=tuple(sorted(tally.deaths.items())),
            parity_prunes_by_degree=tuple(sorted(tally.parity_prunes.items())),
            rule_events=tuple(
                (rule, d, count)
                for (rule, d), count in sorted(tally.rule_events.items())
            ),
            max_live_branches=tally.max_live,
            branches_retired=len(retired),
        )
        return EnumerationResult(tuple(retired), stopped_at, capped, trace)

    def run_exhaustive(self, target: int) -> list[Partial]:
        """All Wu-consistent (rule-respecting) branches through ``target``,
        with no coverage pruning."""
        if target > self.ring.max_degree:
            raise ValueError(f"target degree {target} exceeds ring truncation")
        partials = [self.initial()]
        for _ in range(1, target + 1):
            partials = self.extend(partials, prune_coverage=False)
        return partials


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WitnessVerification:
    witness_id: str
    field: FieldTag
    n: int
    k: int
    claimed_charrank: int
    computed_charrank: int | None
    ok: bool
    message: str = ""

    def to_json_dict(self) -> dict:
        return {
            "id": self.witness_id,
            "field": self.field.value,
            "n": self.n,
            "k": self.k,
            "claimed_charrank": self.claimed_charrank,
            "computed_charrank": self.computed_charrank,
            "ok": self.ok,
            "message": self.message,
        }


@dataclass(frozen=True)
class BoundReport:
    field: FieldTag
    n: int
    k: int
    lower: int
    upper: int
    exact: bool
    witness_id: str | None
    rules: tuple[str, ...]
    assumptions: tuple[str, ...]
    trace: EnumerationTrace
    witness_checks: tuple[WitnessVerification, ...] = ()

    def to_json_dict(self) -> dict:
        trace = self.trace.to_json_dict()
        trace["witnesses"] = [w.to_json_dict() for w in self.witness_checks]
        return {
            "schema": 1,
            "field": self.field.value,
            "n": self.n,
            "k": self.k,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "witness_id": self.witness_id,
            "rules": list(self.rules),
            "assumptions": list(self.assumptions),
            "trace": trace,
        }


def _complete_from_prefix(
    ring: RingPresentation,
    sq: SqTable,
    prefix: dict[int, Element],
    top: int,
) -> tuple[SWAssignment, str]:
    """Fill free degrees from the prefix (zero if absent) and forced degrees
    from the Wu relation; returns the assignment and a problem message
    (empty when consistent)."""
    classes: list[Element] = []
    problem = ""
    for d in range(1, top + 1):
        if d == 1 or d % 2 == 0:
            w = prefix.get(d, ring.zero(d))
        else:
            w1 = classes[0]
            w_prev = classes[d - 2]
            w = ring.multiply(w1, w_prev) + sq.sq(1, w_prev)
            given = prefix.get(d)
            if given is not None and given != w and not problem:
                problem = f"prefix entry w_{d} contradicts the Wu-forced value"
            if d + 1 <= ring.max_degree and not problem:
                if sq.sq(1, w) != ring.multiply(w1, w):
                    problem = f"parity condition fails at degree {d}"
        classes.append(w)
    return SWAssignment(ring, tuple(classes)), problem


def _instantiate_prefix(
    ring: RingPresentation, record: WitnessRecord
) -> dict[int, Element]:
    prefix: dict[int, Element] = {}
    for degree, monomials in record.prefix:
        element = ring.element(degree, [tuple(m) for m in monomials])
        prefix[degree] = element
    return prefix


def _verify_in_ring(
    record: WitnessRecord, ring: RingPresentation, sq: SqTable, ceiling: int
) -> WitnessVerification:
    if record.claimed_charrank > ceiling:
        return WitnessVerification(
            record.id,
            ring.field,
            ring.n,
            ring.k,
            record.claimed_charrank,
            None,
            False,
            "claimed rank exceeds the enumeration ceiling",
        )
    try:
        prefix = _instantiate_prefix(ring, record)
    except ValueError as exc:
        return WitnessVerification(
            record.id, ring.field, ring.n, ring.k, record.claimed_charrank,
            None, False, str(exc),
        )
    assignment, problem = _complete_from_prefix(ring, sq, prefix, ceiling)
    if problem:
        return WitnessVerification(
            record.id, ring.field, ring.n, ring.k, record.claimed_charrank,
            None, False, problem,
        )
    computed = charrank_of_assignment(ring, assignment)
    ok = computed == record.claimed_charrank
    return WitnessVerification(
        record.id,
        ring.field,
        ring.n,
        ring.k,
        record.claimed_charrank,
        computed,
        ok,
        "" if ok else "computed rank differs from the claim",
    )


def verify_witness(
    record: WitnessRecord,
    n: int | None = None,
    *,
    cap: int | None = None,
) -> WitnessVerification:
    """Check one registry witness at a concrete frame size."""
    if n is None:
        n = record.n_exact
    if n is None:
        raise ValueError(f"witness {record.id} is parametric in n, pass n explicitly")
    k = record.resolve_k(n)
    if not record.applies_to(record.field, n, k):
        raise ValueError(f"witness {record.id} does not apply at (n, k) = ({n}, {k})")
    validate_parameters(record.field, n, k)
    dim = manifold_dimension(record.field, n, k)
    ceiling = min(cap if cap is not None else default_cap(record.field, n, k), dim)
    ring = build_ring(record.field, n, k, ceiling + 1)
    return _verify_in_ring(record, ring, SqTable(ring), ceiling)


def ucharrank_bound(
    field: FieldTag,
    n: int,
    k: int,
    *,
    rules: Sequence[ObstructionRule] | None = None,
    use_witnesses: bool = True,
    cap: int | None = None,
    branch_limit: int = DEFAULT_BRANCH_LIMIT,
    registry: Sequence[WitnessRecord] | None = None,
    shuffle_rng=None,
) -> BoundReport:
    """Bound ucharrank(V_k(F^n)) by exhausting Wu-consistent assignments.

    ``rules=None`` enables the standard obstruction rules (currently the
    sphere-restriction rule); pass an empty sequence for the pure Wu bound.
    """
    validate_parameters(field, n, k)
    if rules is None:
        rules = STANDARD_RULES
    dim = manifold_dimension(field, n, k)
    cap_limit = cap if cap is not None else default_cap(field, n, k)
    ceiling = min(cap_limit, dim)
    fnz = field.c * (n - k + 1) - 1
    if ceiling < fnz:
        raise ValueError(
            f"cap {cap_limit} is below the first nonzero degree {fnz}; "
            "no meaningful bound can be computed"
        )
    ring = build_ring(field, n, k, ceiling + 1)
    sq = SqTable(ring)
    enum = WuEnumerator(ring, sq, rules, branch_limit)
    result = enum.run_bound(ceiling, shuffle_rng=shuffle_rng)
    if result.capped:
        upper = ceiling
    else:
        upper = max(r.charrank for r in result.retired)
    lower = ring.connectivity_bound
    witness_id = TRIVIAL_WITNESS_ID
    checks: list[WitnessVerification] = []
    if use_witnesses:
        for record in registry if registry is not None else load_witnesses():
            if not record.applies_to(field, n, k):
                continue
            verification = _verify_in_ring(record, ring, sq, ceiling)
            checks.append(verification)
            if not verification.ok:
                raise WitnessVerificationError(
                    f"registry witness {record.id} failed at (n, k) = ({n}, {k}): "
                    f"{verification.message}"
                )
            if record.claimed_charrank > lower:
                lower = record.claimed_charrank
                witness_id = record.id
    if lower > upper:
        raise RuntimeError(
            f"lower bound {lower} exceeds upper bound {upper} for "
            f"{ring.describe()}: inconsistent engine state"
        )
    exact = (not result.capped) and lower == upper
    assumptions = (SQ1_ZERO_ASSUMPTION,) if field is not FieldTag.REAL else ()
    trace = EnumerationTrace(
        cap_limit=cap_limit,
        ceiling=ceiling,
        stopped_at=result.stopped_at,
        capped=result.capped,
        deaths_by_degree=result.trace.deaths_by_degree,
        parity_prunes_by_degree=result.trace.parity_prunes_by_degree,
        rule_events=result.trace.rule_events,
        max_live_branches=result.trace.max_live_branches,
        branches_retired=result.trace.branches_retired,
    )
    return BoundReport(
        field=field,
        n=n,
        k=k,
        lower=lower,
        upper=upper,
        exact=exact,
        witness_id=witness_id,
        rules=tuple(rule.id for rule in rules),
        assumptions=assumptions,
        trace=trace,
        witness_checks=tuple(checks),
    )


# ---------------------------------------------------------------------------
# corollary checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CorollaryResult:
    which: int
    field: FieldTag
    n: int
    k: int
    statement: str
    passed: bool
    assignments_checked: int
    counterexample: dict[str, str] | None

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "corollary": self.which,
            "field": self.field.value,
            "n": self.n,
            "k": self.k,
            "statement": self.statement,
            "passed": self.passed,
            "assignments_checked": self.assignments_checked,
            "counterexample": self.counterexample,
        }


def _exhaust(
    field: FieldTag,
    n: int,
    k: int,
    target: int,
    rules: Sequence[ObstructionRule],
    branch_limit: int,
) -> tuple[RingPresentation, list[Partial]]:
    ring = build_ring(field, n, k, target + 1)
    enum = WuEnumerator(ring, SqTable(ring), rules, branch_limit)
    return ring, enum.run_exhaustive(target)


def _partial_display(ring: RingPresentation, partial: Partial) -> dict[str, str]:
    return SWAssignment(ring, partial.classes).to_display()


def check_corollary(
    which: int,
    *,
    n: int,
    k: int | None = None,
    branch_limit: int = DEFAULT_BRANCH_LIMIT,
) -> CorollaryResult:
    """Exhaustively test one of the vanishing/classification consequences.

    1: over R with n-k outside {1, 2, 4, 8}, every assignment respecting the
       sphere-restriction rule has w_{n-k} = 0 (the rule is enabled here).
    2: over SO(n) = V_{n-1}(R^n), n >= 4, every Wu-consistent assignment with
       w_1 != 0 has w_3 = 0 or w_3 = a1^3.
    3: over R with n-k even, every Wu-consistent assignment has w_{n-k+1} = 0.
    4: over U(n) = V_n(C^n), every Wu-consistent assignment has w_3 = 0.
    """
    if which == 1:
        if k is None:
            raise ValueError("corollary 1 needs both n and k")
        validate_parameters(FieldTag.REAL, n, k)
        gap = n - k
        if gap in MILNOR_EXEMPT:
            raise ValueError(f"corollary 1 needs n-k outside {{1,2,4,8}}, got {gap}")
        ring, partials = _exhaust(
            FieldTag.REAL, n, k, gap, (MILNOR_RULE,), branch_limit
        )
        statement = (
            f"w_{gap} = 0 for every assignment on {ring.describe()} respecting "
            "the sphere-restriction rule"
        )
        bad = [p for p in partials if not p.classes[gap - 1].is_zero]
        field, kk = FieldTag.REAL, k
    elif which == 2:
        if n < 4:
            raise ValueError(f"corollary 2 needs n >= 4, got {n}")
        kk = n - 1
        ring, partials = _exhaust(FieldTag.REAL, n, kk, 3, (), branch_limit)
        statement = (
            f"every Wu-consistent assignment on SO({n}) with w_1 != 0 has "
            "w_3 = 0 or w_3 = a1^3"
        )
        a1 = ring.generator_element(1)
        a1_cubed = ring.multiply(ring.multiply(a1, a1), a1)
        partials = [p for p in partials if not p.classes[0].is_zero]
        bad = [
            p
            for p in partials
            if not p.classes[2].is_zero and p.classes[2] != a1_cubed
        ]
        field = FieldTag.REAL
    elif which == 3:
        if k is None:
            raise ValueError("corollary 3 needs both n and k")
        validate_parameters(FieldTag.REAL, n, k)
        gap = n - k
        if gap % 2 != 0:
            raise ValueError(f"corollary 3 needs n-k even, got {gap}")
        ring, partials = _exhaust(FieldTag.REAL, n, k, gap + 1, (), branch_limit)
        statement = (
            f"w_{gap + 1} = 0 for every Wu-consistent assignment on "
            f"{ring.describe()}"
        )
        bad = [p for p in partials if not p.classes[gap].is_zero]
        field, kk = FieldTag.REAL, k
    elif which == 4:
        if n < 2:
            raise ValueError(f"corollary 4 needs n >= 2, got {n}")
        kk = n
        ring, partials = _exhaust(FieldTag.COMPLEX, n, kk, 3, (), branch_limit)
        statement = f"w_3 = 0 for every Wu-consistent assignment on U({n})"
        bad = [p for p in partials if not p.classes[2].is_zero]
        field = FieldTag.COMPLEX
    else:
        raise ValueError(f"corollary index must be 1..4, got {which}")
    counterexample = _partial_display(ring, bad[0]) if bad else None
    return CorollaryResult(
        which=which,
        field=field,
        n=n,
        k=kk,
        statement=statement,
        passed=not bad,
        assignments_checked=len(partials),
        counterexample=counterexample,
    )
