"""Bounded saturation of generated sub-semirings, with certificates.

The fusion semiring is infinite, so closures are computed up to a word
length bound (work_len).  Membership answers are three-valued: present
(with a replayable derivation certificate), certified absent (by an exact
invariant that holds in the full infinite closure), or merely not found
within the bound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd

from .fusion import _simple_terms, mul_many, mul_simple
from .words import (
    degree,
    format_word,
    involute,
    is_balanced,
    one_runs,
    parse_word,
    shortlex_key,
    zero_runs,
)

# --------------------------------------------------------------------------
# configuration


@dataclass(frozen=True)
class ClosureConfig:
    """Bounds for saturation: words longer than work_len are discarded,
    answers are reported up to report_len."""

    work_len: int = 12
    report_len: int = 6
    require_dual_closure: bool = True

    def __post_init__(self):
        if self.report_len > self.work_len:
            raise ValueError("report_len must not exceed work_len")
        if self.work_len < 0:
            raise ValueError("work_len must be nonnegative")


# --------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class Unit:
    """Leaf deriving the trivial simple."""


@dataclass(frozen=True)
class Generator:
    """Leaf deriving a generator."""

    word: str


@dataclass(frozen=True)
class ProductTerm:
    """Internal node: term selected from the product of two derived simples."""

    left: "Certificate"
    right: "Certificate"
    term: str


@dataclass(frozen=True)
class AdStep:
    """Internal node: conjugation of a derived simple by an ambient simple.

    Valid only when conjugator * inner * involute(conjugator) is a single
    simple with multiplicity one; that simple is `result`.
    """

    conjugator: str
    inner: "Certificate"
    result: str


Certificate = Unit | Generator | ProductTerm | AdStep


def certificate_word(cert: Certificate) -> str:
    """The simple a certificate derives."""
    if isinstance(cert, Unit):
        return ""
    if isinstance(cert, Generator):
        return cert.word
    if isinstance(cert, ProductTerm):
        return cert.term
    if isinstance(cert, AdStep):
        return cert.result
    raise TypeError(f"not a certificate node: {cert!r}")


def certificate_dual(cert: Certificate) -> Certificate:
    """Derivation of the dual simple, obtained by dualizing every node."""
    if isinstance(cert, Unit):
        return cert
    if isinstance(cert, Generator):
        return Generator(involute(cert.word))
    if isinstance(cert, ProductTerm):
        return ProductTerm(
            certificate_dual(cert.right),
            certificate_dual(cert.left),
            involute(cert.term),
        )
    if isinstance(cert, AdStep):
        return AdStep(
            cert.conjugator, certificate_dual(cert.inner), involute(cert.result)
        )
    raise TypeError(f"not a certificate node: {cert!r}")


def certificate_to_json(cert: Certificate) -> dict:
    if isinstance(cert, Unit):
        return {"kind": "unit"}
    if isinstance(cert, Generator):
        return {"kind": "gen", "word": format_word(cert.word)}
    if isinstance(cert, ProductTerm):
        return {
            "kind": "prod",
            "left": certificate_to_json(cert.left),
            "right": certificate_to_json(cert.right),
            "term": format_word(cert.term),
        }
    if isinstance(cert, AdStep):
        return {
            "kind": "ad",
            "conjugator": format_word(cert.conjugator),
            "inner": certificate_to_json(cert.inner),
            "result": format_word(cert.result),
        }
    raise TypeError(f"not a certificate node: {cert!r}")


def certificate_from_json(obj: dict) -> Certificate:
    kind = obj.get("kind")
    if kind == "unit":
        return Unit()
    if kind == "gen":
        return Generator(parse_word(obj["word"]))
    if kind == "prod":
        return ProductTerm(
            certificate_from_json(obj["left"]),
            certificate_from_json(obj["right"]),
            parse_word(obj["term"]),
        )
    if kind == "ad":
        return AdStep(
            parse_word(obj["conjugator"]),
            certificate_from_json(obj["inner"]),
            parse_word(obj["result"]),
        )
    raise ValueError(f"unknown certificate node kind: {kind!r}")


def verify_certificate_detailed(
    cert, gens: frozenset[str] | set[str], path: str = "root"
) -> tuple[bool, str | None]:
    """Replay a certificate against the fusion rule only.

    Returns (True, None) on success, otherwise (False, diagnostic path).
    """
    if isinstance(cert, Unit):
        return True, None
    if isinstance(cert, Generator):
        if cert.word in gens:
            return True, None
        return False, f"{path}: {format_word(cert.word)} is not a generator"
    if isinstance(cert, ProductTerm):
        ok, why = verify_certificate_detailed(cert.left, gens, path + ".left")
        if not ok:
            return ok, why
        ok, why = verify_certificate_detailed(cert.right, gens, path + ".right")
        if not ok:
            return ok, why
        lw = certificate_word(cert.left)
        rw = certificate_word(cert.right)
        if mul_simple(lw, rw).get(cert.term, 0) > 0:
            return True, None
        return (
            False,
            f"{path}: {format_word(cert.term)} does not occur in "
            f"{format_word(lw)} * {format_word(rw)}",
        )
    if isinstance(cert, AdStep):
        ok, why = verify_certificate_detailed(cert.inner, gens, path + ".inner")
        if not ok:
            return ok, why
        y = cert.conjugator
        x = certificate_word(cert.inner)
        product = mul_many([{y: 1}, {x: 1}, {involute(y): 1}])
        if product == {cert.result: 1}:
            return True, None
        return (
            False,
            f"{path}: {format_word(y)} * {format_word(x)} * "
            f"{format_word(involute(y))} is not exactly the single simple "
            f"{format_word(cert.result)}",
        )
    return False, f"{path}: malformed node {cert!r}"


def verify_certificate(cert, gens) -> bool:
    """True iff the certificate replays correctly from the given generators."""
    ok, _ = verify_certificate_detailed(cert, set(gens))
    return ok


# --------------------------------------------------------------------------
# membership answers


ABSENT_RUN_BOUND = "run-bound"
ABSENT_DEGREE = "degree"


@dataclass(frozen=True)
class Membership:
    """Three-valued membership answer.

    status "present": in the computed closure, certificate available.
    status "absent-certified": provably absent from the full infinite
    closure (reason "run-bound" or "degree").
    status "absent-within-bound": not among the retained members; no claim
    about the infinite closure.
    """

    status: str
    reason: str | None = None

    @property
    def present(self) -> bool:
        return self.status == "present"

    @property
    def certified_absent(self) -> bool:
        return self.status == "absent-certified"

    def to_json(self) -> dict:
        out: dict = {"status": self.status}
        if self.reason is not None:
            out["reason"] = self.reason
        return out


PRESENT = Membership("present")
ABSENT_WITHIN_BOUND = Membership("absent-within-bound")


# --------------------------------------------------------------------------
# saturation


@dataclass
class ClosureResult:
    """Bounded closure of a generated sub-semiring.

    `generators` is the effective generating set (dual-closed when the
    config asks for it); `members` are all derived simples of length at
    most work_len; `provenance` records one derivation step per member,
    from which witness certificates are rebuilt on demand.
    """

    generators: frozenset[str]
    members: frozenset[str]
    config: ClosureConfig
    saturated: bool
    stats: dict[str, int]
    is_ad: bool = False
    provenance: dict[str, tuple] = field(default_factory=dict, repr=False)

    def to_json(self) -> dict:
        return {
            "generators": [
                format_word(g) for g in sorted(self.generators, key=shortlex_key)
            ],
            "config": {
                "work_len": self.config.work_len,
                "report_len": self.config.report_len,
                "require_dual_closure": self.config.require_dual_closure,
            },
            "ad": self.is_ad,
            "saturated": self.saturated,
            "members": [
                format_word(w) for w in sorted(self.members, key=shortlex_key)
            ],
            "stats": dict(sorted(self.stats.items())),
        }


class Saturator:
    """Worklist fixpoint engine for fusion saturation.

    Members are processed in discovery order (breadth-first over the
    derivation DAG): processing a member multiplies it, in both orders,
    with every member processed so far and optionally scans its adjoint
    conjugations.  Discovery order is itself deterministic, so the trace,
    the member set and every certificate are reproducible.  An optional
    ambient predicate confines added terms; an optional target set allows
    stopping as soon as all targets have been derived (the member set is
    then a sound under-approximation of the fixpoint).
    """

    def __init__(self, config: ClosureConfig, ambient_contains=None,
                 ambient_size: int | None = None):
        self.config = config
        self.contains = ambient_contains
        self.ambient_size = ambient_size
        self.members: set[str] = set()
        self.order: list[str] = []
        self.provenance: dict[str, tuple] = {}
        self.remaining: set[str] = set()
        self.has_targets = False
        self.stopped_early = False
        self.stats = {"products": 0, "members": 0, "ad_steps": 0}
        self.add("", ("unit",))

    def set_targets(self, targets):
        """Allow saturation to stop once every target word is a member."""
        self.has_targets = True
        self.remaining = {t for t in targets if t not in self.members}

    def add(self, w: str, prov: tuple) -> bool:
        if w in self.members:
            return False
        self.members.add(w)
        self.order.append(w)
        self.provenance[w] = prov
        self.stats["members"] += 1
        self.remaining.discard(w)
        if self.config.require_dual_closure:
            d = involute(w)
            if d not in self.members:
                self.add(d, ("dual", w))
        return True

    def add_generator(self, g: str):
        if len(g) > self.config.work_len:
            raise ValueError(
                f"generator {format_word(g)} exceeds work_len "
                f"{self.config.work_len}"
            )
        if self.contains is not None and not self.contains(g):
            raise ValueError(f"{format_word(g)} is not an ambient simple")
        self.add(g, ("gen",))

    def done(self) -> bool:
        """True once no further rule application is needed or wanted."""
        if self.ambient_size is not None and len(self.members) == self.ambient_size:
            # The member set already equals every ambient simple within the
            # length bound, so no rule can add anything: a genuine fixpoint.
            return True
        if self.has_targets and not self.remaining:
            # All targets derived; remaining work is skipped, so the result
            # is only an under-approximation of the fixpoint.
            self.stopped_early = True
            return True
        return False

    def _absorb(self, x: str, y: str):
        self.stats["products"] += 1
        work_len = self.config.work_len
        contains = self.contains
        for t in _simple_terms(x, y):
            if len(t) <= work_len and (contains is None or contains(t)):
                self.add(t, ("prod", x, y))

    def run(self, ad_scan=None):
        """Process the worklist to fixpoint, target stop, or ambient-full.

        ad_scan, when given, maps a member to (conjugator, result) pairs;
        results are added with an adjoint provenance step.
        """
        work_len = self.config.work_len
        i = 0
        while i < len(self.order):
            if self.done():
                return
            m = self.order[i]
            for j in range(i + 1):
                o = self.order[j]
                self._absorb(m, o)
                if o != m:
                    self._absorb(o, m)
                if self.done():
                    return
            if ad_scan is not None:
                for y, z in ad_scan(m):
                    self.stats["ad_steps"] += 1
                    if len(z) <= work_len and (
                        self.contains is None or self.contains(z)
                    ):
                        self.add(z, ("ad", y, m))
                if self.done():
                    return
            i += 1

    def result(self, generators: frozenset[str], is_ad: bool) -> ClosureResult:
        return ClosureResult(
            generators=generators,
            members=frozenset(self.members),
            config=self.config,
            saturated=not self.stopped_early,
            stats=dict(self.stats),
            is_ad=is_ad,
            provenance=self.provenance,
        )


def effective_generators(gens, config: ClosureConfig) -> frozenset[str]:
    """The generating set actually used: dual-closed unless disabled."""
    eff = set(gens)
    if config.require_dual_closure:
        eff |= {involute(g) for g in gens}
    return frozenset(eff)


def generate(gens, config: ClosureConfig = ClosureConfig()) -> ClosureResult:
    """Least fixpoint, within the length bound, of fusion generation from
    the given simples (plus the unit, plus duals by default)."""
    eff = effective_generators(gens, config)
    sat = Saturator(config)
    for g in sorted(eff, key=shortlex_key):
        sat.add_generator(g)
    sat.run()
    return sat.result(eff, is_ad=False)


# --------------------------------------------------------------------------
# membership and witnesses


def certified_absence(generators, w: str, is_ad: bool) -> str | None:
    """Reason why w provably cannot lie in the full infinite closure, or None.

    Degree obstruction: degrees of derivable simples lie in the subgroup
    of the integers generated by the generator degrees (conjugation is
    degree-preserving, so this also holds for ad-closures).  Run bound:
    the leading run of '0's (resp. '1's) of a derivable simple never
    exceeds the longest run of '0's (resp. '1's) occurring in a generator;
    this is unsound under adjoint steps and only applies to plain closures.
    """
    g = 0
    for gen in generators:
        g = gcd(g, abs(degree(gen)))
    d = degree(w)
    if (d != 0 if g == 0 else d % g != 0):
        return ABSENT_DEGREE
    if not is_ad:
        zr_bound = max((zero_runs(g_)[1] for g_ in generators), default=0)
        or_bound = max((one_runs(g_)[1] for g_ in generators), default=0)
        if zero_runs(w)[0] > zr_bound or one_runs(w)[0] > or_bound:
            return ABSENT_RUN_BOUND
    return None


def member(result: ClosureResult, w: str) -> Membership:
    """Three-valued membership of a simple in the closure."""
    if w in result.members:
        return PRESENT
    reason = certified_absence(result.generators, w, result.is_ad)
    if reason is not None:
        return Membership("absent-certified", reason)
    return ABSENT_WITHIN_BOUND


def witness(result: ClosureResult, w: str) -> Certificate | None:
    """Derivation certificate for a member, or None for a non-member."""
    if w not in result.members:
        return None
    memo: dict[str, Certificate] = {}

    def build(u: str) -> Certificate:
        got = memo.get(u)
        if got is not None:
            return got
        step = result.provenance[u]
        kind = step[0]
        if kind == "unit":
            cert: Certificate = Unit()
        elif kind == "gen":
            cert = Generator(u)
        elif kind == "dual":
            cert = certificate_dual(build(step[1]))
        elif kind == "prod":
            cert = ProductTerm(build(step[1]), build(step[2]), u)
        elif kind == "ad":
            cert = AdStep(step[1], build(step[2]), u)
        else:
            raise ValueError(f"unknown provenance step {step!r}")
        memo[u] = cert
        return cert

    return build(w)


# --------------------------------------------------------------------------
# enumeration


def enumerate_words(which: str = "all", max_len: int = 0) -> list[str]:
    """All words (or all balanced words) of length <= max_len, shortlex."""
    if which not in ("all", "balanced"):
        raise ValueError(f"unknown word filter {which!r}")
    out = []
    for n in range(max_len + 1):
        if which == "balanced" and n % 2:
            continue
        for t in itertools.product("01", repeat=n):
            w = "".join(t)
            if which == "balanced" and not is_balanced(w):
                continue
            out.append(w)
    return out
