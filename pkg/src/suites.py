"""
Verification suites

Each suite sweeps the corpus algebras and turns the checks in tautilt and dell
into TheoremVerdict / DellRecord entries of one Report.

Suites:
    reduction    τ-tilting vs. (Ann nilpotent, 1-tilting over A/Ann, Ann ⊗ T = 0),
                 plus the classical criteria and both support τ-tilting routes
    criteria     the four equivalent 1-tilting conditions for τ-tilting T, the
                 dual-quotient approximation and the Ext² routes over fac(T)
    counts       ideal counting identities, trace ideals, quotient rigidity,
                 support τ-tilting counts and oracle agreement
    dell         delooping level bounds over the enumerated pool
    conjectures  self-orthogonality conjecture instances, the endomorphism
                 transfer and the local-algebra sanity check

thm1 and thm2 are accepted as short names for reduction and criteria.

Work is split into (suite, algebra) units. Units only carry a CorpusSpec and
the Settings, so they can run in worker processes; results are merged in
input order.
"""

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, List, Sequence

import numpy as np
from pydantic import BaseModel
from tqdm import tqdm

from .algebra import (
    Algebra,
    Ideal,
    ideal_from_generators,
    is_nilpotent,
    quotient_algebra,
    stable_index,
    stable_part,
    trace_ideal,
)
from .config import Settings
from .data.corpus import CorpusSpec
from .data.enumerate import enumerate_modules, enumerate_support_tau_tilting, enumerate_tau_tilting
from .data.reports import EnumerationSummary, Report
from .dell import (
    ambient_context,
    check_endomorphism_transfer,
    dell_upper,
    ext2_vanishing_via_dell,
    fac_context,
    global_dell_estimate,
    is_self_injective,
)
from .errors import UndecidedError
from .exactla import Subspace
from .homology import is_gorenstein_up_to
from .modrep import (
    Iso,
    ModuleRep,
    compare_modules,
    direct_sum,
    indecomposable_projective,
    regular_module,
    set_search_limits,
    standard_modules,
)
from .tautilt import (
    TheoremVerdict,
    check_classical,
    check_conjectures,
    check_dual_quotient_approximation,
    check_one_tilting_criteria,
    check_quotient_rigidity,
    check_support_routes,
    check_tau_tilting_reduction,
    classify,
    fac_cover,
)

logger = logging.getLogger(__name__)

SUITES = ("reduction", "criteria", "counts", "dell", "conjectures")
SUITE_ALIASES = {"thm1": "reduction", "thm2": "criteria"}
SUITE_CHOICES = SUITES + tuple(SUITE_ALIASES) + ("all",)


def resolve_suite(name: str) -> str:
    """Canonical suite name for a name or alias; unknown names pass through"""
    return SUITE_ALIASES.get(name, name)


class SuiteUnit(BaseModel):
    suite: str
    corpus: CorpusSpec
    settings: Settings


@dataclass
class SuiteContext:
    """Everything a suite runner needs about one corpus algebra"""

    spec: CorpusSpec
    settings: Settings
    algebra: Algebra
    pool: List[ModuleRep]
    cap: int
    complete: bool

    @property
    def seed(self) -> int:
        return self.settings.suite.seed

    @property
    def horizon(self) -> int:
        return self.settings.homology.horizon

    @property
    def search(self) -> Dict[str, int]:
        d = self.settings.dell
        return {"budget": d.budget_modules, "max_dim": d.budget_max_dim, "max_level": d.max_level}

    @property
    def cover_args(self) -> Dict[str, int]:
        t = self.settings.tautilt
        return {"max_power": t.fac_cover_max_power, "samples": t.fac_cover_samples}

    @cached_property
    def tau_tilting(self) -> List[ModuleRep]:
        return enumerate_tau_tilting(self.algebra, self.pool)

    @cached_property
    def support_tau_tilting(self) -> List[ModuleRep]:
        return enumerate_support_tau_tilting(self.algebra, self.pool)

    @cached_property
    def sweep(self) -> List[ModuleRep]:
        """A, the pool, every (support) τ-tilting module and capped basic sums of |A| pool members"""
        A = self.algebra
        modules = [regular_module(A).with_name("A")] + list(self.pool)
        modules += self.tau_tilting + self.support_tau_tilting
        size = A.simple_count
        cap = self.settings.suite.combination_cap
        for chosen in itertools.islice(itertools.combinations(self.pool, size), cap):
            modules.append(direct_sum(*chosen, name="⊕".join(M.name for M in chosen)))
        seen, out = set(), []
        for M in modules:
            if M.dim and M.name not in seen:
                seen.add(M.name)
                out.append(M)
        return out


def apply_settings(settings: Settings) -> None:
    m = settings.modrep
    set_search_limits(m.iso_exhaustive_log2, m.iso_samples, m.decompose_exhaustive_dim, m.decompose_samples)


def build_context(spec: CorpusSpec, settings: Settings) -> SuiteContext:
    A = spec.build()
    cap = spec.enumeration_cap(settings.enumeration.max_dim)
    key = ("pool", cap, settings.suite.seed)
    if key not in A.cache:
        A.cache[key] = enumerate_modules(
            A, cap, settings.enumeration.brute_force_limit_log2, seed=settings.suite.seed
        )
    return SuiteContext(spec, settings, A, A.cache[key], cap, spec.pool_is_complete(cap))


# --- runners ---------------------------------------------------------------


def run_reduction(ctx: SuiteContext) -> Report:
    part = Report(command="suite")
    h, seed = ctx.horizon, ctx.seed
    for T in ctx.sweep:
        part.classifications.append(classify(T, h, seed))
        part.verdicts.append(check_tau_tilting_reduction(T, h, seed))
        part.verdicts.append(check_classical(T, h, seed, **ctx.cover_args))
        part.verdicts.append(check_support_routes(T, h, seed))
    return part


def run_criteria(ctx: SuiteContext) -> Report:
    part = Report(command="suite")
    h, seed = ctx.horizon, ctx.seed
    for T in ctx.sweep:
        r = classify(T, h, seed)
        if r.tau_tilting:
            part.verdicts.append(check_one_tilting_criteria(T, h, seed, **ctx.cover_args))
        if not r.support_tau_tilting:
            continue
        part.verdicts.append(check_dual_quotient_approximation(T, h, seed, **ctx.cover_args))
        if r.uncertain:
            continue
        fctx = fac_context(T, seed)
        cover = fac_cover(T, seed=seed, **ctx.cover_args)[: ctx.settings.suite.ext2_samples]
        for X in cover:
            part.ext2.append(ext2_vanishing_via_dell(T, X, fctx, h, **ctx.search))
    return part


def _basis_subsets(A: Algebra, cap: int, seed: int) -> List[tuple]:
    n = A.dim
    if 2 ** n <= cap:
        return [s for k in range(n + 1) for s in itertools.combinations(range(n), k)]
    rng = np.random.default_rng(seed)
    subsets = {(), tuple(range(n))}
    while len(subsets) < cap:
        mask = rng.integers(0, 2, size=n)
        subsets.add(tuple(int(i) for i in np.nonzero(mask)[0]))
    return sorted(subsets, key=lambda s: (len(s), s))


def check_ideal_counts(I: Ideal, label: str) -> TheoremVerdict:
    """|A| = |A/I| + st(I) = |A/I0| + st(I), and |A| = |A/I| exactly when I is nilpotent"""
    A = I.parent
    st = stable_index(I)
    q = quotient_algebra(A, I).algebra.simple_count
    q0 = quotient_algebra(A, stable_part(I)).algebra.simple_count
    conditions = {
        "count_by_quotient": A.simple_count == q + st,
        "count_by_stable_part": A.simple_count == q0 + st,
        "nilpotent_iff_full_count": is_nilpotent(I) == (q == A.simple_count),
    }
    return TheoremVerdict(
        theorem="ideal-counts",
        algebra=A.name,
        module=label,
        conditions=conditions,
        consistent=all(conditions.values()),
        witness={"ideal_dim": I.dim, "stable_index": st, "quotient_simples": q},
    )


def check_trace_ideal(A: Algebra, v: int) -> TheoremVerdict:
    """tr(P)·P = P for the indecomposable projective at vertex v"""
    P = indecomposable_projective(A, v)
    tr = trace_ideal(P)
    images = [P.rho(t).T for t in tr.basis]
    span = Subspace.span(np.vstack(images) if images else np.zeros((0, P.dim)), P.dim, A.p)
    return TheoremVerdict(
        theorem="trace-ideal",
        algebra=A.name,
        module=f"P{A.vertices[v]}",
        conditions={"trace_acts_fully": span.dim == P.dim},
        consistent=span.dim == P.dim,
        witness={"trace_dim": tr.dim},
    )


def check_oracle_agreement(ctx: SuiteContext) -> TheoremVerdict:
    """Every simple, projective and injective within the cap appears in the enumerated pool"""
    A = ctx.algebra
    std = standard_modules(A)
    missing = []
    for M in std.simples + std.projectives + std.injectives:
        if M.dim > ctx.cap:
            continue
        if not any(compare_modules(M, N, seed=ctx.seed) is Iso.ISO for N in ctx.pool):
            missing.append(M.name)
    return TheoremVerdict(
        theorem="oracle-agreement",
        algebra=A.name,
        module="standard modules",
        conditions={"all_found": not missing},
        consistent=not missing,
        witness={"missing": missing} if missing else {},
    )


def run_counts(ctx: SuiteContext) -> Report:
    A = ctx.algebra
    part = Report(command="suite")
    eye = np.eye(A.dim, dtype=np.int64)
    for subset in _basis_subsets(A, ctx.settings.suite.ideal_cap, ctx.seed):
        I = ideal_from_generators(A, eye[list(subset)])
        label = "⟨" + ",".join(A.basis_labels[i] for i in subset) + "⟩"
        part.verdicts.append(check_ideal_counts(I, label))
        part.verdicts.append(check_quotient_rigidity(I))
    for v in range(A.simple_count):
        part.verdicts.append(check_trace_ideal(A, v))
    part.verdicts.append(check_oracle_agreement(ctx))
    for S in ctx.support_tau_tilting:
        if S.dim:
            part.verdicts.append(check_support_routes(S, ctx.horizon, ctx.seed))
    part.enumerations.append(
        EnumerationSummary(
            algebra=A.name,
            max_dim=ctx.cap,
            complete=ctx.complete,
            indecomposables=len(ctx.pool),
            tau_tilting=len(ctx.tau_tilting),
            support_tau_tilting=len(ctx.support_tau_tilting),
            modules=[S.name for S in ctx.support_tau_tilting],
        )
    )
    return part


def run_dell(ctx: SuiteContext) -> Report:
    A = ctx.algebra
    part = Report(command="suite")
    actx = ambient_context(A, ctx.seed)
    gorenstein = is_gorenstein_up_to(A, ctx.horizon)
    if is_self_injective(A):
        gorenstein = 0
    for X in ctx.pool:
        res = dell_upper(actx, X, pool=ctx.pool, pool_complete=ctx.complete, horizon=ctx.horizon, **ctx.search)
        part.dell.append(res.to_record())
        conditions = {"bounded": res.bounded}
        if res.bounded and res.pd_bound is not None:
            conditions["below_pd"] = res.level <= res.pd_bound
        if res.bounded and gorenstein is not None:
            if res.level <= gorenstein:
                conditions["gorenstein_bound"] = True
            elif res.exact:
                conditions["gorenstein_bound"] = False
        part.verdicts.append(
            TheoremVerdict(
                theorem="dell-bounds",
                algebra=A.name,
                module=X.name,
                conditions=conditions,
                consistent=conditions.get("below_pd") is not False and conditions.get("gorenstein_bound") is not False,
                certified=res.bounded and res.verified,
                witness={"dell": str(res), "gorenstein": gorenstein},
            )
        )
    part.global_dell.append(global_dell_estimate(actx, ctx.pool, ctx.complete, **ctx.search))
    return part


def check_local_tau_tilting(ctx: SuiteContext) -> TheoremVerdict:
    """Over a local algebra the only basic τ-tilting module is A"""
    A = ctx.algebra
    found = ctx.tau_tilting
    regular = regular_module(A)
    only_regular = len(found) == 1 and compare_modules(found[0], regular, seed=ctx.seed) is Iso.ISO
    return TheoremVerdict(
        theorem="local-tau-tilting",
        algebra=A.name,
        module="A",
        conditions={"only_regular": only_regular},
        consistent=only_regular,
        witness={"found": [T.name for T in found]},
    )


def run_conjectures(ctx: SuiteContext) -> Report:
    A = ctx.algebra
    part = Report(command="suite")
    part.verdicts.extend(check_conjectures(A, ctx.sweep, ctx.horizon, ctx.seed))
    for T in ctx.tau_tilting:
        part.verdicts.append(
            check_endomorphism_transfer(
                T, ctx.horizon, ctx.seed, ctx.pool, ctx.complete, **ctx.cover_args, **ctx.search
            )
        )
    if A.simple_count == 1:
        part.verdicts.append(check_local_tau_tilting(ctx))
    return part


RUNNERS: Dict[str, Callable[[SuiteContext], Report]] = {
    "reduction": run_reduction,
    "criteria": run_criteria,
    "counts": run_counts,
    "dell": run_dell,
    "conjectures": run_conjectures,
}


def run_unit(unit: SuiteUnit) -> Report:
    """One suite over one algebra; pure in its inputs"""
    apply_settings(unit.settings)
    ctx = build_context(unit.corpus, unit.settings)
    logger.info(f"Suite {unit.suite} on {unit.corpus.label} ({len(ctx.pool)} indecomposables, D = {ctx.cap})")
    try:
        return RUNNERS[unit.suite](ctx)
    except UndecidedError as e:
        logger.warning(f"Suite {unit.suite} on {unit.corpus.label} undecided: {e}")
        part = Report(command="suite", notes=[f"{unit.suite} on {unit.corpus.label}: {e}"])
        part.verdicts.append(
            TheoremVerdict(theorem=unit.suite, algebra=ctx.algebra.name, certified=False, note=str(e))
        )
        return part


def run_suite(
    suite: str,
    corpus: Sequence[CorpusSpec],
    settings: Settings,
    progress: bool = False,
) -> Report:
    """
    Run a suite (or 'all') over the corpus

    Args:
        suite: One of SUITES or 'all'
        corpus: Corpus entries, processed in order
        settings: Effective configuration; suite.workers > 1 uses a process pool
        progress: Show a tqdm bar over units

    Returns:
        Report with verdicts in (algebra, suite) input order
    """
    suite = resolve_suite(suite)
    names = SUITES if suite == "all" else (suite,)
    unknown = [n for n in names if n not in RUNNERS]
    if unknown:
        raise ValueError(f"Unknown suite '{unknown[0]}'; choose from {', '.join(SUITES)} or all")
    units = [SuiteUnit(suite=name, corpus=spec, settings=settings) for spec in corpus for name in names]
    report = Report(
        command="suite",
        suite=suite,
        corpus=[spec.label for spec in corpus],
        seed=settings.suite.seed,
        config=settings.model_dump(mode="json"),
    )
    workers = settings.suite.workers
    bar = tqdm(total=len(units), desc=f"suite {suite}", disable=not progress)
    if workers > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            for part in executor.map(run_unit, units):
                report.extend(part)
                bar.update(1)
    else:
        for unit in units:
            report.extend(run_unit(unit))
            bar.update(1)
    bar.close()
    s = report.summary
    logger.info(f"Suite {suite}: {s['verdicts']} verdicts, {s['inconsistent']} inconsistent, {s['candidates']} candidates")
    return report
