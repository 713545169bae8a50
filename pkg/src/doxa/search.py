"""
Random structure generation, countermodel search and countermodel shrinking.

Every trial of a search generates its structure from a seed derived from the configured seed and the trial
index, so a search is reproducible and its result does not depend on the number of workers.
"""

import functools
import logging
import random
import time

from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from fractions import Fraction

from . import config
from . import core

from .principles import check_principle
from .properties import satisfies
from .structs import BeliefOperator
from .structs import Constraint
from .structs import ConstraintFilter
from .structs import Countermodel
from .structs import GeneratorConfig
from .structs import Mode
from .structs import Principle
from .structs import SearchResult
from .errors import InfeasibleConfig
from .errors import NotACountermodel
from .errors import StructureError

log = logging.getLogger(__name__)

CHUNK = 1000
MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def generate_random(cfg=GeneratorConfig()):
    """
    Generates a random valid probability structure. The result is a deterministic function of the
    configuration (seed included).

        Parameters:
            cfg  (GeneratorConfig)  Generator configuration.

        Returns:
            ProbabilityStructure.

        Raises:
            InfeasibleConfig  If the configuration cannot produce a valid structure.
    """
    grid = _validate(cfg)
    rng = random.Random(cfg.seed)

    match Mode(cfg.mode):
        case Mode.PRODUCT:
            states, weights, cells, evidence = _product(rng, cfg)
        case Mode.COARSE:
            states, weights, cells = _states(rng, cfg)
            evidence = _coarse_evidence(rng, cfg, weights, cells)
        case _:
            states, weights, cells = _states(rng, cfg)
            evidence = _free_evidence(rng, cfg, weights)

    threshold = rng.choice(grid)

    return core.structure(states, weights, cells, evidence, threshold)


def search_countermodel(principle, op=BeliefOperator.HPD, constraint=None, cfg=GeneratorConfig(), budget=1000, workers=None):
    """
    Searches for a structure on which a principle fails.

        Parameters:
            principle   (Principle)         Principle to refute.
            op          (BeliefOperator)    Belief operator.
            constraint  (ConstraintFilter)  Optional constraint every candidate structure has to satisfy.
            cfg         (GeneratorConfig)   Generator configuration. cfg.seed seeds the whole search.
            budget      (int)               Number of structures to generate.
            workers     (int)               Optional number of worker processes. Defaults to config.workers().

        Returns:
            SearchResult with the countermodel from the lowest failing trial (or None).

        Raises:
            InfeasibleConfig  If the configuration cannot produce a valid structure.
    """
    principle = Principle(principle)
    op = BeliefOperator(op)
    constraints = ConstraintFilter(constraint).constraints if constraint is not None else ()
    workers = config.workers(workers)

    _validate(cfg)
    if Constraint.STABILITY in constraints and cfg.cells[1] > config.max_question_cells():
        raise InfeasibleConfig(f"stability filter requires at most {config.max_question_cells()} cells")

    start = time.perf_counter()
    chunks = [(i, min(i + CHUNK, budget)) for i in range(0, max(budget, 0), CHUNK)]

    found = None
    tried = 0
    accepted = 0

    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_search, principle, op, constraints, cfg, lo, hi) for lo, hi in chunks]
            for future in futures:
                hit, n, k = future.result()
                tried += n
                accepted += k
                log.debug("search: %d tried, %d accepted", tried, accepted)
                if hit is not None:
                    found = hit
                    for f in futures:
                        f.cancel()
                    break
    else:
        for lo, hi in chunks:
            hit, n, k = _search(principle, op, constraints, cfg, lo, hi)
            tried += n
            accepted += k
            log.debug("search: %d tried, %d accepted", tried, accepted)
            if hit is not None:
                found = hit
                break

    elapsed = time.perf_counter() - start

    log.debug("search: %s after %d trials (%.3fs)", "found" if found else "nothing found", tried, elapsed)

    return SearchResult(found, tried, accepted, elapsed)


def trial_seed(seed, trial):
    """
    Returns the generator seed for a search trial.
    """
    return (seed * GOLDEN + trial) & MASK64


def shrink(m, principle, op=BeliefOperator.HPD):
    """
    Greedily reduces a countermodel: deletes states, deletes bodies of evidence, merges answers and
    simplifies weights, keeping each change only if the principle still fails. Passes are repeated until
    none of the reductions applies.

        Parameters:
            m          (ProbabilityStructure)  Structure on which the principle fails.
            principle  (Principle)             Principle.
            op         (BeliefOperator)        Belief operator.

        Returns:
            ProbabilityStructure that is a local minimum.

        Raises:
            NotACountermodel  If the principle holds on m.
    """
    principle = Principle(principle)
    op = BeliefOperator(op)

    if check_principle(m, principle, op).holds:
        raise NotACountermodel(f"{principle.value} holds for {op.value} on this structure")

    def fails(candidate):
        if candidate is None or _size(candidate) >= _size(m):
            return False

        return not check_principle(candidate, principle, op).holds

    changed = True
    while changed:
        changed = False
        for reduce in (_delete_states, _delete_evidence, _merge_cells, _simplify_weights):
            while (candidate := next(filter(fails, reduce(m)), None)) is not None:
                log.debug("shrink: %s -> %s", reduce.__name__.lstrip("_"), core.describe(candidate))
                m = candidate
                changed = True

    return m


def _size(m):
    return (len(m.states), len(m.evidence), len(m.question.cells), sum(m.masses))


def _search(principle, op, constraints, cfg, lo, hi):
    tried = 0
    accepted = 0

    for trial in range(lo, hi):
        m = generate_random(replace(cfg, seed=trial_seed(cfg.seed, trial)))
        tried += 1

        if constraints and not satisfies(m, constraints):
            continue

        accepted += 1
        verdict = check_principle(m, principle, op)
        if not verdict.holds:
            return Countermodel(m, verdict.witnesses[0]), tried, accepted

    return None, tried, accepted


@functools.lru_cache(maxsize=64)
def _grid(lo, hi, denominator):
    points = {Fraction(n, d) for d in range(1, denominator + 1) for n in range(d + 1)}

    return sorted(p for p in points if lo <= p <= hi)


def _validate(cfg):
    for name in ("states", "evidence", "cells"):
        lo, hi = getattr(cfg, name)
        if lo < 1 or lo > hi:
            raise InfeasibleConfig(f"invalid {name} range ({lo},{hi})")

    if cfg.cells[0] > cfg.states[1]:
        raise InfeasibleConfig(f"more cells ({cfg.cells[0]}) than states ({cfg.states[1]})")

    if cfg.weight_bound < 1:
        raise InfeasibleConfig(f"invalid weight bound ({cfg.weight_bound})")

    if cfg.threshold_denominator < 1:
        raise InfeasibleConfig(f"invalid threshold denominator ({cfg.threshold_denominator})")

    if not 0 <= Fraction(cfg.split_bias) <= 1:
        raise InfeasibleConfig(f"invalid split bias ({cfg.split_bias})")

    lo, hi = (core.rational(v) for v in cfg.threshold_range)
    if not 0 <= lo <= hi <= 1:
        raise InfeasibleConfig(f"invalid threshold range ({lo},{hi})")

    if Mode(cfg.mode) is Mode.PRODUCT and not _factors(cfg):
        raise InfeasibleConfig(f"no product of {cfg.cells} cells fits {cfg.states} states")

    if not (grid := _grid(lo, hi, cfg.threshold_denominator)):
        raise InfeasibleConfig(f"no threshold in [{lo},{hi}] with denominator up to {cfg.threshold_denominator}")

    return grid


def _names(n):
    return [f"s{i + 1}" for i in range(n)]


def _weights(rng, n, bound):
    while True:
        weights = [rng.randint(0, bound) for _ in range(n)]
        if any(weights):
            return weights


def _cells(rng, n, k):
    order = list(range(n))
    rng.shuffle(order)

    cells = [[s] for s in order[:k]]
    for s in order[k:]:
        cells[rng.randrange(k)].append(s)

    return cells


def _states(rng, cfg):
    n = rng.randint(max(cfg.states[0], cfg.cells[0]), cfg.states[1])
    k = rng.randint(cfg.cells[0], min(cfg.cells[1], n))
    weights = _weights(rng, n, cfg.weight_bound)

    return _names(n), weights, _cells(rng, n, k)


def _target(rng, cfg):
    return rng.randint(*cfg.evidence)


def _add(family, e, weights):
    if e and any(weights[s] for s in e) and e not in family:
        family.append(e)
        return True

    return False


def _free_evidence(rng, cfg, weights):
    n = len(weights)
    target = _target(rng, cfg)
    family = []

    if cfg.include_full_evidence:
        _add(family, frozenset(range(n)), weights)

    for _ in range(20 * target):
        if len(family) >= target:
            break

        splittable = [e for e in family if len(e) > 1]
        if splittable and rng.random() < cfg.split_bias:
            e = sorted(rng.choice(splittable))
            rng.shuffle(e)
            cut = rng.randint(1, len(e) - 1)
            for part in (frozenset(e[:cut]), frozenset(e[cut:])):
                if len(family) < target:
                    _add(family, part, weights)
        else:
            _add(family, frozenset(s for s in range(n) if rng.random() < 0.5), weights)

    if not family:
        _add(family, frozenset(range(n)), weights)

    return [sorted(e) for e in family]


def _coarse_evidence(rng, cfg, weights, cells):
    n = len(weights)
    target = _target(rng, cfg)
    family = []

    if cfg.include_full_evidence:
        _add(family, frozenset(range(n)), weights)

    for _ in range(20 * target):
        if len(family) >= target:
            break

        union = frozenset(s for cell in cells if rng.random() < 0.5 for s in cell)
        _add(family, union, weights)

    if not family:
        _add(family, frozenset(range(n)), weights)

    return [sorted(e) for e in family]


def _factors(cfg):
    pairs = []
    for k in range(cfg.cells[0], cfg.cells[1] + 1):
        for l in range(1, cfg.states[1] // k + 1):
            if cfg.states[0] <= k * l <= cfg.states[1]:
                pairs.append((k, l))

    return pairs


def _product(rng, cfg):
    k, l = rng.choice(_factors(cfg))
    a = _weights(rng, k, cfg.weight_bound)
    b = _weights(rng, l, cfg.weight_bound)

    states = [f"a{i + 1}b{j + 1}" for i in range(k) for j in range(l)]
    weights = [a[i] * b[j] for i in range(k) for j in range(l)]
    cells = [[i * l + j for j in range(l)] for i in range(k)]

    target = _target(rng, cfg)
    family = []
    columns = []

    def add(column):
        if column and any(b[j] for j in column) and column not in columns:
            columns.append(column)
            family.append(sorted(i * l + j for i in range(k) for j in column))

    if cfg.include_full_evidence:
        add(frozenset(range(l)))

    for _ in range(20 * target):
        if len(family) >= target:
            break
        add(frozenset(j for j in range(l) if rng.random() < 0.5))

    if not family:
        add(frozenset(range(l)))

    return states, weights, cells, family


def _rebuild(m, keep=None, prior=None, cells=None, evidence=None):
    keep = sorted(keep if keep is not None else m.full)
    prior = prior if prior is not None else m.prior
    cells = cells if cells is not None else m.question.cells
    evidence = evidence if evidence is not None else m.evidence

    kept = set(keep)
    family = []
    for e in evidence:
        f = frozenset(e) & kept
        if f and any(prior[s] for s in f) and f not in family:
            family.append(f)

    try:
        return core.structure(
            [m.states[s] for s in keep],
            {m.states[s]: prior[s] for s in keep},
            [[m.states[s] for s in sorted(c & kept)] for c in cells if c & kept],
            [[m.states[s] for s in sorted(f)] for f in family],
            m.threshold,
        )
    except StructureError:
        return None


def _delete_states(m):
    for s in range(len(m.states)):
        yield _rebuild(m, keep=m.full - {s})


def _delete_evidence(m):
    for i in range(len(m.evidence)):
        yield _rebuild(m, evidence=m.evidence[:i] + m.evidence[i + 1 :])


def _merge_cells(m):
    cells = m.question.cells
    for i, j in ((i, j) for i in range(len(cells)) for j in range(i + 1, len(cells))):
        merged = [c for x, c in enumerate(cells) if x not in (i, j)] + [cells[i] | cells[j]]
        yield _rebuild(m, cells=merged)


def _simplify_weights(m):
    for s, p in enumerate(m.prior):
        if p.denominator > 1 and (q := p.limit_denominator(p.denominator // 2)) != p:
            prior = list(m.prior)
            prior[s] = q
            yield _rebuild(m, prior=prior)
