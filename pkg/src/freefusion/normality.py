"""Ad-saturated closures and the desk-scale simplicity checkers.

The fusion-level surrogate of ad-invariance: a sub-semiring is stable
under conjugating any of its simples x by an ambient simple y whenever
the triple product y * x * involute(y) collapses to a single simple with
multiplicity one.  In that situation the multiplication map on the
corresponding coalgebras is injective, so membership of the result is
forced; closures alternating fusion generation with such conjugation
steps reproduce, at bounded length, the inductive proofs that the
projective quotient has no proper normal quantum subgroups.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb

from .closure import (
    ClosureConfig,
    ClosureResult,
    Saturator,
    certificate_to_json,
    certified_absence,
    effective_generators,
    enumerate_words,
    generate,
    member,
    verify_certificate_detailed,
    witness,
)
from .fusion import _simple_terms, mul_simple
from .words import format_word, involute, parse_word, shortlex_key

# --------------------------------------------------------------------------
# ambients


@dataclass(frozen=True)
class Ambient:
    """Which semiring the simples live in.

    kind "au": all binary words (the full free unitary semiring).
    kind "pu": balanced words only (the projective quotient).
    kind "gen": the bounded closure of a finite generating set.
    """

    kind: str
    gens: frozenset[str] = frozenset()

    @staticmethod
    def full_au() -> "Ambient":
        return Ambient("au")

    @staticmethod
    def projective_pu() -> "Ambient":
        return Ambient("pu")

    @staticmethod
    def generated(gens) -> "Ambient":
        return Ambient("gen", frozenset(gens))

    def describe(self) -> str:
        if self.kind == "gen":
            gens = ",".join(
                format_word(g) for g in sorted(self.gens, key=shortlex_key)
            )
            return f"gen:{gens}"
        return self.kind

    @staticmethod
    def parse(text: str) -> "Ambient":
        if text == "au":
            return Ambient.full_au()
        if text == "pu":
            return Ambient.projective_pu()
        if text.startswith("gen:"):
            gens = [parse_word(t) for t in text[4:].split(",") if t]
            if not gens:
                raise ValueError("gen: ambient needs at least one generator")
            return Ambient.generated(gens)
        raise ValueError(f"unknown ambient {text!r}; expected au, pu or gen:...")


class AmbientView:
    """An ambient resolved against a length bound, answering membership and
    enumeration queries.  For a generated ambient the simple set is the
    bounded plain closure of its generators."""

    def __init__(self, ambient: Ambient, config: ClosureConfig):
        self.ambient = ambient
        self.config = config
        self._members: frozenset[str] | None = None
        if ambient.kind == "gen":
            self._members = generate(ambient.gens, config).members

    def contains(self, w: str) -> bool:
        if self.ambient.kind == "au":
            return True
        if self.ambient.kind == "pu":
            return w.count("0") * 2 == len(w)
        return w in self._members

    def simples(self, max_len: int) -> list[str]:
        if self.ambient.kind == "au":
            return enumerate_words("all", max_len)
        if self.ambient.kind == "pu":
            return enumerate_words("balanced", max_len)
        return sorted(
            (w for w in self._members if len(w) <= max_len), key=shortlex_key
        )

    def count(self, max_len: int) -> int:
        if self.ambient.kind == "au":
            return 2 ** (max_len + 1) - 1
        if self.ambient.kind == "pu":
            return sum(comb(2 * n, n) for n in range(max_len // 2 + 1))
        return sum(1 for w in self._members if len(w) <= max_len)


# --------------------------------------------------------------------------
# configuration


@dataclass(frozen=True)
class AdConfig:
    """Bounds for ad-saturation: conjugators up to ad_len, seed sweeps up
    to seed_len, plus the underlying closure bounds."""

    closure: ClosureConfig = ClosureConfig()
    ad_len: int = 8
    seed_len: int = 6

    def __post_init__(self):
        if self.ad_len > self.closure.work_len:
            raise ValueError("ad_len must not exceed work_len")

    def to_json(self) -> dict:
        return {
            "work_len": self.closure.work_len,
            "report_len": self.closure.report_len,
            "require_dual_closure": self.closure.require_dual_closure,
            "ad_len": self.ad_len,
            "seed_len": self.seed_len,
        }


# --------------------------------------------------------------------------
# adjoint steps


def _scan_conjugations(x: str, conjugators):
    """Yield (y, z) with y * x * involute(y) equal to the single simple z.

    The triple product collapses to a single simple exactly when both
    folds of the left-to-right product are single-term, because the
    semiring has no cancellation.
    """
    for y in conjugators:
        t1 = _simple_terms(y, x)
        if len(t1) != 1:
            continue
        t2 = _simple_terms(t1[0], involute(y))
        if len(t2) != 1:
            continue
        yield y, t2[0]


def ad_candidates(
    x: str, ambient: Ambient, ad_len: int, config: ClosureConfig = ClosureConfig()
) -> set[tuple[str, str]]:
    """All (conjugator, result) pairs forcing membership of result from x.

    Conjugators range over the nontrivial ambient simples of length at
    most ad_len.  The right-oriented form involute(y) * x * y is covered
    automatically: ambient simple sets are dual-closed, so it equals the
    left-oriented scan with conjugator involute(y).
    """
    view = AmbientView(ambient, config)
    conjugators = [y for y in view.simples(ad_len) if y]
    return set(_scan_conjugations(x, conjugators))


def ad_closure(
    seeds,
    ambient: Ambient = Ambient.full_au(),
    config: AdConfig = AdConfig(),
    stop_targets=None,
    _view: AmbientView | None = None,
) -> ClosureResult:
    """Least fixpoint, within bounds, of fusion generation interleaved with
    adjoint steps, confined to the ambient simple set.

    With stop_targets, saturation halts as soon as every target word has
    been derived; the member set is then a sound under-approximation and
    the result is marked unsaturated.
    """
    view = _view if _view is not None else AmbientView(ambient, config.closure)
    work_len = config.closure.work_len
    eff = effective_generators(seeds, config.closure)
    sat = Saturator(
        config.closure,
        ambient_contains=view.contains,
        ambient_size=view.count(work_len),
    )
    for s in sorted(eff, key=shortlex_key):
        sat.add_generator(s)
    if stop_targets is not None:
        sat.set_targets(stop_targets)
    conjugators = [y for y in view.simples(config.ad_len) if y]
    sat.run(ad_scan=lambda x: _scan_conjugations(x, conjugators))
    return sat.result(eff, is_ad=True)


# --------------------------------------------------------------------------
# reports


@dataclass
class SeedRecord:
    seed: str
    status: str  # "pass" | "fail" | "inconclusive"
    missing_certified: list[str] = field(default_factory=list)
    missing_within_bound: list[str] = field(default_factory=list)
    certificates: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "seed": format_word(self.seed),
            "status": self.status,
            "missing_certified": [
                format_word(w) for w in self.missing_certified
            ],
            "missing_within_bound": [
                format_word(w) for w in self.missing_within_bound
            ],
            "certificates": self.certificates,
        }


@dataclass
class SimplicityReport:
    check: str  # "simplicity" | "circle-corollary"
    ambient: str
    config: AdConfig
    seeds: list[SeedRecord]
    verdict: str  # "pass" | "fail" | "inconclusive"

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "ambient": self.ambient,
            "config": self.config.to_json(),
            "verdict": self.verdict,
            "seeds": [r.to_json() for r in self.seeds],
        }


def _certificate_sample(result: ClosureResult, present: list[str], n: int) -> list[dict]:
    """Verified derivation certificates for the n shortlex-largest derived
    targets; a spot-checkable sample, not a full trace."""
    sample = []
    for w in sorted(present, key=shortlex_key, reverse=True)[:n]:
        cert = witness(result, w)
        ok, why = verify_certificate_detailed(cert, set(result.generators))
        entry = {
            "word": format_word(w),
            "verified": ok,
            "certificate": certificate_to_json(cert),
        }
        if why is not None:
            entry["error"] = why
        sample.append(entry)
    return sample


def _check_seed(seed, ambient, config, view, targets, cert_samples):
    # Targets ruled out by an exact invariant can never appear, so they
    # must not keep the stop-at-targets saturation running to exhaustion.
    eff = effective_generators({seed}, config.closure)
    reachable = [
        t for t in targets if certified_absence(eff, t, is_ad=True) is None
    ]
    cl = ad_closure(
        {seed}, ambient, config, stop_targets=reachable, _view=view
    )
    missing_certified = []
    missing_within = []
    present = []
    for t in targets:
        m = member(cl, t)
        if m.present:
            present.append(t)
        elif m.certified_absent:
            missing_certified.append(t)
        else:
            missing_within.append(t)
    if not missing_certified and not missing_within:
        status = "pass"
    elif missing_certified:
        status = "fail"
    else:
        status = "inconclusive"
    return SeedRecord(
        seed=seed,
        status=status,
        missing_certified=missing_certified,
        missing_within_bound=missing_within,
        certificates=_certificate_sample(cl, present, cert_samples),
    )


def _run_seed_sweep(check, ambient, config, view, seeds, targets,
                    cert_samples, threads):
    def job(seed):
        return _check_seed(seed, ambient, config, view, targets, cert_samples)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(job, seeds))
    else:
        records = [job(s) for s in seeds]
    if any(r.status == "fail" for r in records):
        verdict = "fail"
    elif any(r.status == "inconclusive" for r in records):
        verdict = "inconclusive"
    else:
        verdict = "pass"
    return SimplicityReport(
        check=check,
        ambient=ambient.describe(),
        config=config,
        seeds=records,
        verdict=verdict,
    )


def check_simplicity(
    ambient: Ambient,
    config: AdConfig = AdConfig(),
    cert_samples: int = 3,
    threads: int = 1,
) -> SimplicityReport:
    """For every nontrivial ambient simple up to seed_len, check that its
    ad-closure contains every ambient simple up to report_len.

    A pass proves, at these bounds, that no proper nontrivial ad-invariant
    sub-semiring exists.  Targets whose absence is certified make the seed
    a genuine failure; targets merely not found within bounds make it
    inconclusive, never a silent pass.
    """
    view = AmbientView(ambient, config.closure)
    targets = view.simples(config.closure.report_len)
    seeds = [s for s in view.simples(config.seed_len) if s]
    return _run_seed_sweep(
        "simplicity", ambient, config, view, seeds, targets, cert_samples, threads
    )


def check_circle_corollary(
    config: AdConfig = AdConfig(),
    cert_samples: int = 3,
    threads: int = 1,
) -> SimplicityReport:
    """For every nonempty word up to seed_len, check that its ad-closure in
    the full ambient contains every balanced word up to report_len: any
    nontrivial ad-invariant sub-semiring contains the projective quotient's."""
    ambient = Ambient.full_au()
    view = AmbientView(ambient, config.closure)
    targets = enumerate_words("balanced", config.closure.report_len)
    seeds = [s for s in view.simples(config.seed_len) if s]
    return _run_seed_sweep(
        "circle-corollary", ambient, config, view, seeds, targets,
        cert_samples, threads,
    )


# --------------------------------------------------------------------------
# invertibles


def find_invertibles(max_len: int) -> list[str]:
    """Words whose product with their dual is exactly the unit.

    For any nonempty w the empty cut contributes the nonempty term
    w + involute(w), so only the unit qualifies; scanned, not assumed.
    """
    return [
        w
        for w in enumerate_words("all", max_len)
        if mul_simple(w, involute(w)) == {"": 1}
    ]
