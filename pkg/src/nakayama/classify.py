"""Algebra classification and mechanical theorem verifiers.

Each verifier checks one characterization on one algebra and reports a
typed verdict with explicit witnesses on failure, so a sweep over many
algebras doubles as a falsification search.
"""

from __future__ import annotations

import random
import zlib
from dataclasses import dataclass, field

from .core import ExtendedNat, KupischSeries
from .errors import NotGorenstein, PreconditionFailed
from .homology import (
    _gpd1,
    domdim,
    gldim,
    gorenstein_degree,
    gpd,
    pd,
    regular_id,
    regular_id_left,
)
from .modules import (
    IntervalModule,
    ModuleSum,
    in_sub_lambda,
    indecomposables,
    injective,
    is_injective,
    is_projective,
    projective,
    simple,
    socle,
)
from .notation import format_module

__all__ = [
    "ClassificationReport",
    "VerifierResult",
    "classify",
    "is_minimal_ag",
    "is_n_auslander",
    "is_self_injective",
    "minimal_ag_parameter",
    "n_auslander_parameter",
    "prinj_vertices",
    "verify_ses_gpd_bounds",
    "verify_thm31_count",
    "verify_thm_gp_socle_sub",
    "verify_thm_prinj",
]


# -- classification predicates -------------------------------------------------


def is_self_injective(alg: KupischSeries) -> bool:
    return alg._cached(
        "self_injective",
        lambda: all(is_injective(alg, projective(alg, i)) for i in alg.vertices()),
    )


def is_minimal_ag(alg: KupischSeries, n: int) -> bool:
    """Minimal n-Auslander-Gorenstein: self-injective dimension at most
    n + 1 and dominant dimension at least n + 1."""
    if n < 0:
        raise ValueError("the tilting level n must be >= 0")
    return regular_id(alg) <= n + 1 and domdim(alg) >= ExtendedNat(n + 1)


def is_n_auslander(alg: KupischSeries, n: int) -> bool:
    """n-Auslander: global dimension at most n + 1 and dominant dimension
    at least n + 1."""
    if n < 0:
        raise ValueError("the tilting level n must be >= 0")
    return gldim(alg) <= n + 1 and domdim(alg) >= ExtendedNat(n + 1)


def minimal_ag_parameter(alg: KupischSeries) -> int | None:
    """Least n making the algebra minimal n-Auslander-Gorenstein, or None."""
    rid = regular_id(alg)
    if not rid.is_finite:
        return None
    n0 = max(rid.value - 1, 0)
    return n0 if domdim(alg) >= ExtendedNat(n0 + 1) else None


def n_auslander_parameter(alg: KupischSeries) -> int | None:
    """Least n making the algebra n-Auslander, or None."""
    gd = gldim(alg)
    if not gd.is_finite:
        return None
    n0 = max(gd.value - 1, 0)
    return n0 if domdim(alg) >= ExtendedNat(n0 + 1) else None


def prinj_vertices(alg: KupischSeries) -> tuple[int, ...]:
    """Vertices whose indecomposable projective is also injective."""
    return tuple(
        i for i in alg.vertices() if is_injective(alg, projective(alg, i))
    )


# -- verifier verdicts ----------------------------------------------------------


@dataclass(frozen=True)
class VerifierResult:
    theorem: str
    n: int | None
    passed: bool
    checked: int
    witnesses: tuple[dict, ...] = ()
    note: str = ""

    def to_json(self) -> dict:
        return {
            "status": "pass" if self.passed else "fail",
            "n": self.n,
            "checked": self.checked,
            "witnesses": list(self.witnesses),
            "note": self.note,
        }


def _skipped_verdict(note: str, status: str = "skipped") -> dict:
    return {"status": status, "n": None, "checked": 0, "witnesses": [], "note": note}


def _require_precluster_level(n: int) -> None:
    if n < 0:
        raise PreconditionFailed("the level n must be >= 0")


# -- verifier: projective-injectives vs low-Gpd socles --------------------------


def verify_thm_prinj(alg: KupischSeries, n: int) -> VerifierResult:
    """Check, vertex by vertex: the injective at j is projective exactly
    when the simple socle at j has Gorenstein projective dimension <= n.

    Applies to self-injective algebras (any n) and to algebras of
    Gorenstein degree exactly n + 1; anything else is a precondition
    error, not a verdict.
    """
    _require_precluster_level(n)
    g = gorenstein_degree(alg)
    if not g.is_finite:
        raise NotGorenstein(
            f"{alg.lengths} has infinite Gorenstein degree; nothing to check"
        )
    if not is_self_injective(alg) and g != n + 1:
        raise PreconditionFailed(
            f"verifier needs Gorenstein degree n+1 = {n + 1} or a "
            f"self-injective algebra; {alg.lengths} has degree {g}"
        )
    witnesses = []
    for j in alg.vertices():
        inj = injective(alg, j)
        lhs = is_projective(alg, inj)
        socle_gpd = _gpd1(alg, simple(alg, j))
        rhs = socle_gpd <= n
        if lhs != rhs:
            witnesses.append(
                {
                    "vertex": j,
                    "injective": format_module(inj),
                    "injective_is_projective": lhs,
                    "socle_gpd": socle_gpd,
                }
            )
    return VerifierResult(
        "prinj", n, not witnesses, alg.num_vertices, tuple(witnesses)
    )


# -- verifier: Gpd <= n versus socle and embedding -------------------------------


def _sample_sums(alg: KupischSeries, seed: int, tag: str) -> list[ModuleSum]:
    """Deterministic small batch of 2- and 3-term direct sums."""
    indec = indecomposables(alg)
    key = repr((alg.lengths, alg.cyclic, seed, tag)).encode()
    rng = random.Random(zlib.crc32(key))
    out = []
    for width in (2, 3):
        for _ in range(12):
            out.append(ModuleSum.of(*rng.choices(indec, k=width)))
    return out


def verify_thm_gp_socle_sub(
    alg: KupischSeries, n: int, seed: int = 0
) -> VerifierResult:
    """Check the three-way equivalence, on every indecomposable and on a
    seeded batch of direct sums: Gpd(N) <= n, Gpd(soc N) <= n, and N
    embeds into a finite direct sum of projectives."""
    _require_precluster_level(n)
    g = gorenstein_degree(alg)
    if not g.is_finite:
        raise NotGorenstein(
            f"{alg.lengths} has infinite Gorenstein degree; nothing to check"
        )
    mods: list[ModuleSum] = [ModuleSum.of(m) for m in indecomposables(alg)]
    mods.extend(_sample_sums(alg, seed, "gp-socle-sub"))
    witnesses = []
    for nmod in mods:
        a = gpd(alg, nmod) <= n
        b = gpd(alg, socle(alg, nmod)) <= n
        c = in_sub_lambda(alg, nmod)
        if not (a == b == c):
            witnesses.append(
                {
                    "module": format_module(nmod),
                    "gpd": gpd(alg, nmod),
                    "socle_gpd": gpd(alg, socle(alg, nmod)),
                    "in_sub_lambda": c,
                }
            )
    return VerifierResult(
        "gp-socle-sub", n, not witnesses, len(mods), tuple(witnesses)
    )


# -- verifier: counting low-Gpd simples ------------------------------------------


def verify_thm31_count(alg: KupischSeries, n: int) -> VerifierResult:
    """Over a minimal n-Auslander-Gorenstein algebra that is not
    semisimple: every simple has Gpd <= n or exactly n + 1, and the
    number with Gpd <= n equals the number of projective-injective
    indecomposables."""
    _require_precluster_level(n)
    if all(c == 1 for c in alg.lengths):
        raise PreconditionFailed("semisimple algebra; the count is degenerate")
    if not is_minimal_ag(alg, n):
        raise PreconditionFailed(
            f"{alg.lengths} is not minimal {n}-Auslander-Gorenstein"
        )
    low = []
    witnesses = []
    for i in alg.vertices():
        val = _gpd1(alg, simple(alg, i))
        if val <= n:
            low.append(i)
        elif val != n + 1:
            witnesses.append(
                {"vertex": i, "simple_gpd": val, "reason": "dichotomy breached"}
            )
    pi = list(prinj_vertices(alg))
    if len(low) != len(pi):
        witnesses.append(
            {
                "low_gpd_simples": low,
                "projective_injectives": pi,
                "reason": "counts differ",
            }
        )
    note = f"low-Gpd simples: {len(low)}; projective-injectives: {len(pi)}"
    return VerifierResult(
        "thm31-count", n, not witnesses, alg.num_vertices, tuple(witnesses), note
    )


# -- verifier: Gpd bounds along canonical short exact sequences -------------------


def verify_ses_gpd_bounds(alg: KupischSeries) -> VerifierResult:
    """For every interval module Y and every proper radical layer cut
    0 -> X -> Y -> Z -> 0 (X = rad^s Y, Z = Y/rad^s Y), check:
    Gpd Y <= max(Gpd X, Gpd Z), Gpd X <= max(Gpd Y, Gpd Z - 1),
    Gpd Z <= max(Gpd Y, Gpd X + 1)."""
    g = gorenstein_degree(alg)
    if not g.is_finite:
        raise NotGorenstein(
            f"{alg.lengths} has infinite Gorenstein degree; nothing to check"
        )
    checked = 0
    witnesses = []
    for y in indecomposables(alg):
        for s in range(1, y.length):
            x = IntervalModule(alg.shift(y.start, s), y.length - s)
            z = IntervalModule(y.start, s)
            gx, gy, gz = _gpd1(alg, x), _gpd1(alg, y), _gpd1(alg, z)
            checked += 1
            bad = []
            if gy > max(gx, gz):
                bad.append("middle")
            if gx > max(gy, gz - 1):
                bad.append("sub")
            if gz > max(gy, gx + 1):
                bad.append("quotient")
            if bad:
                witnesses.append(
                    {
                        "sub": format_module(x),
                        "middle": format_module(y),
                        "quotient": format_module(z),
                        "gpd": [gx, gy, gz],
                        "violates": bad,
                    }
                )
    return VerifierResult(
        "lemma22", None, not witnesses, checked, tuple(witnesses)
    )


# -- the full report --------------------------------------------------------------


REPORT_KEYS = (
    "kupisch",
    "cyclic",
    "regular_id",
    "regular_id_left",
    "domdim",
    "gldim",
    "gorenstein_degree",
    "self_injective",
    "minimal_ag_n",
    "n_auslander_n",
    "prinj",
    "simple_gpd",
    "theorem_verdicts",
)


@dataclass(frozen=True)
class ClassificationReport:
    algebra: KupischSeries
    regular_id: ExtendedNat
    regular_id_left: ExtendedNat
    domdim: ExtendedNat
    gldim: ExtendedNat
    gorenstein_degree: ExtendedNat
    self_injective: bool
    minimal_ag_n: int | None
    n_auslander_n: int | None
    prinj: tuple[int, ...]
    simple_gpd: tuple
    theorem_verdicts: tuple = field(default=())

    def to_json(self) -> dict:
        vals = {
            "kupisch": list(self.algebra.lengths),
            "cyclic": self.algebra.cyclic,
            "regular_id": self.regular_id.to_json(),
            "regular_id_left": self.regular_id_left.to_json(),
            "domdim": self.domdim.to_json(),
            "gldim": self.gldim.to_json(),
            "gorenstein_degree": self.gorenstein_degree.to_json(),
            "self_injective": self.self_injective,
            "minimal_ag_n": self.minimal_ag_n,
            "n_auslander_n": self.n_auslander_n,
            "prinj": list(self.prinj),
            "simple_gpd": [
                v.to_json() if isinstance(v, ExtendedNat) else v
                for v in self.simple_gpd
            ],
            "theorem_verdicts": {name: dict(v) for name, v in self.theorem_verdicts},
        }
        return {k: vals[k] for k in REPORT_KEYS}


def classify(alg: KupischSeries, seed: int = 0) -> ClassificationReport:
    """Compute every headline invariant plus theorem verdicts for one algebra."""
    g = gorenstein_degree(alg)
    if g.is_finite:
        simple_gpd = tuple(_gpd1(alg, simple(alg, i)) for i in alg.vertices())
    else:
        simple_gpd = tuple(pd(alg, simple(alg, i)) for i in alg.vertices())

    verdicts = []
    if g.is_finite:
        n_check = max(g.value - 1, 0)
        verdicts.append(("prinj", verify_thm_prinj(alg, n_check).to_json()))
        verdicts.append(
            ("gp-socle-sub", verify_thm_gp_socle_sub(alg, n_check, seed).to_json())
        )
        verdicts.append(("lemma22", verify_ses_gpd_bounds(alg).to_json()))
    else:
        note = "infinite Gorenstein degree"
        verdicts.append(("prinj", _skipped_verdict(note, "error")))
        verdicts.append(("gp-socle-sub", _skipped_verdict(note, "error")))
        verdicts.append(("lemma22", _skipped_verdict(note, "error")))

    mag = minimal_ag_parameter(alg)
    if all(c == 1 for c in alg.lengths):
        verdicts.append(("thm31-count", _skipped_verdict("semisimple algebra")))
    elif mag is None:
        verdicts.append(
            ("thm31-count", _skipped_verdict("not minimal Auslander-Gorenstein"))
        )
    else:
        verdicts.append(("thm31-count", verify_thm31_count(alg, mag).to_json()))

    return ClassificationReport(
        algebra=alg,
        regular_id=regular_id(alg),
        regular_id_left=regular_id_left(alg),
        domdim=domdim(alg),
        gldim=gldim(alg),
        gorenstein_degree=g,
        self_injective=is_self_injective(alg),
        minimal_ag_n=mag,
        n_auslander_n=n_auslander_parameter(alg),
        prinj=prinj_vertices(alg),
        simple_gpd=simple_gpd,
        theorem_verdicts=tuple(verdicts),
    )
