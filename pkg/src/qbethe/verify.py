"""Property suites behind ``qbethe verify``; each returns gated checks plus diagnostics."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .bethe import NonConvergenceError, solve_spectrum
from .config import RunConfig, worker_count
from .params import HeckeParams, parameter_grid
from .qboson_fock import (
    check_algebra_relations,
    hamiltonian_explicit,
    hamiltonian_from_generators,
    weighted_symmetry_residual,
)
from .states import enumerate_states


@dataclass
class CheckResult:
    name: str
    value: float
    tol: float
    point: int = 0

    @property
    def passed(self):
        return bool(np.isfinite(self.value) and self.value <= self.tol)

    def to_record(self):
        return {"name": self.name, "point": self.point, "value": float(self.value), "tol": self.tol, "passed": self.passed}


@dataclass
class SuiteResult:
    name: str
    checks: list = field(default_factory=list)
    diagnostics: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def gate(self, name, value, tol, point=0):
        self.checks.append(CheckResult(name, float(value), float(tol), point))

    def to_record(self):
        return {
            "suite": self.name,
            "passed": self.passed,
            "checks": [c.to_record() for c in self.checks],
            "diagnostics": self.diagnostics,
            "notes": self.notes,
        }


def suite_points(cfg: RunConfig):
    """The configured couplings followed by a seeded low-discrepancy grid."""
    return [cfg.params] + parameter_grid(cfg.grid_points, seed=cfg.seed)


def _strict_points(cfg: RunConfig, result: SuiteResult):
    out = []
    for k, p in enumerate(suite_points(cfg)):
        if p.strict:
            out.append((k, p))
        else:
            result.notes.append(f"point {k}: couplings not all nonzero, Hecke checks skipped")
    return out


def suite_fock(cfg: RunConfig):
    res = SuiteResult("fock")
    tol = cfg.tolerances.relation
    if cfg.n < 1:
        res.notes.append("n = 0: only the trivial sector, nothing to relate")
        return res
    for k, p in enumerate(suite_points(cfg)):
        for sector in range(1, cfg.n + 1):
            rep = check_algebra_relations(sector, cfg.m, p, tol)
            res.gate(f"relations[n={sector}]", rep.max_residual(), tol, k)
            res.notes.extend(f"point {k}: {note}" for note in dict.fromkeys(rep.notes))
        gen = hamiltonian_from_generators(cfg.n, cfg.m, p)
        exp = hamiltonian_explicit(cfg.n, cfg.m, p)
        res.gate("explicit == generators", np.abs(gen.matrix - exp.matrix).max(), tol, k)
        res.gate("weighted self-adjointness", weighted_symmetry_residual(exp, p), tol, k)
    return res


def suite_daha(cfg: RunConfig):
    """Relations in extended precision (window-corner rows amplify rounding)."""
    from .hecke.relations import check_daha_relations

    res = SuiteResult("daha")
    if cfg.n < 1:
        res.notes.append("n = 0: no generators")
        return res
    for k, p in _strict_points(cfg, res):
        hp = HeckeParams.from_model(p, "extended")
        rep = check_daha_relations(cfg.n, cfg.m, hp, trials=cfg.trials, tol=cfg.tolerances.relation, seed=cfg.seed + k)
        for r in rep.results:
            res.gate(r.relation, r.max_residual, cfg.tolerances.relation, k)
    return res


def suite_laplacian(cfg: RunConfig):
    """Propagation operator and deformed Laplacian, in multiprecision."""
    from .hecke.checks import propagation_checks

    res = SuiteResult("laplacian")
    if cfg.n < 1:
        res.notes.append("n = 0: no lattice")
        return res
    for k, p in _strict_points(cfg, res):
        hp = HeckeParams.from_model(p, "mp", cfg.mp_dps)
        rep = propagation_checks(cfg.n, cfg.m, hp, seed=cfg.seed + k)
        for name, value in sorted(rep.residuals.items()):
            tol = cfg.tolerances.laplacian if name == "laplacian" else cfg.tolerances.relation
            res.gate(name, value, tol, k)
    return res


def suite_integrals(cfg: RunConfig):
    from .hecke.integrals import commutator_norm, quantum_integrals

    res = SuiteResult("integrals")
    if cfg.n < 1:
        res.notes.append("n = 0: no integrals")
        return res
    tol = cfg.tolerances.integrals
    for k, p in _strict_points(cfg, res):
        hs = quantum_integrals(cfg.n, cfg.m, HeckeParams.from_model(p))
        fock = hamiltonian_explicit(cfg.n, cfg.m, p).matrix
        res.gate("H_1 == Fock Hamiltonian", np.abs(hs[0] - fock).max(), tol, k)
        for r in range(len(hs)):
            for s in range(r + 1, len(hs)):
                res.gate(f"[H_{r + 1}, H_{s + 1}]", commutator_norm(hs[r], hs[s]), tol, k)
    return res


def suite_pieri(cfg: RunConfig):
    from .pieri import pieri_check

    res = SuiteResult("pieri")
    if cfg.n < 1:
        res.notes.append("n = 0: no rule to check")
        return res
    tol = cfg.tolerances.eigen
    for k, p in enumerate(suite_points(cfg)):
        res.gate("affine Pieri", pieri_check(cfg.n, cfg.m, p, tol=cfg.tolerances.newton).max_residual, tol, k)
        res.gate("affine Pieri (q=0)", pieri_check(cfg.n, cfg.m, p, q0=True, tol=cfg.tolerances.newton).max_residual, tol, k)
    return res


def suite_completeness(cfg: RunConfig):
    """Bethe roots, eigen-equations for every H_r, and the rank of the eigenbasis."""
    from .spectrum import compute_spectrum

    res = SuiteResult("completeness")
    if cfg.n < 1:
        res.notes.append("n = 0: the single empty state is trivially complete")
        return res
    tol = cfg.tolerances.eigen
    gram = {}
    for k, p in enumerate(suite_points(cfg)):
        try:
            roots = solve_spectrum(cfg.n, cfg.m, p, cfg.tolerances.newton, cfg.max_iter)
        except NonConvergenceError as exc:
            res.gate("newton convergence", np.inf, 0.0, k)
            res.notes.append(f"point {k}: {exc}")
            continue
        res.gate("newton gradient", max(s.grad_norm for s in roots), cfg.tolerances.newton, k)
        res.gate("roots outside alcove or brackets", sum(not (s.in_alcove and s.in_brackets and s.in_pair_brackets) for s in roots), 0.0, k)
        sp = compute_spectrum(cfg.n, cfg.m, p, roots=roots)
        res.gate("bethe equations", sp.max_bae_residual, tol, k)
        res.gate("H psi = E psi", sp.max_eigen_residual, tol, k)
        if sp.integral_residuals:
            res.gate("H_r psi = E_r psi", sp.max_integral_residual, tol, k)
        if p.strict:
            res.gate("rank deficit", sp.dimension - sp.rank, 0.0, k)
        else:
            res.notes.append(f"point {k}: rank reported only (couplings not strict): {sp.rank}/{sp.dimension}")
        gram[str(k)] = sp.gram_offdiagonal
    res.diagnostics["gram_offdiagonal_mass"] = gram
    return res


def suite_poincare(cfg: RunConfig):
    from .hecke.poincare import poincare_bruteforce, poincare_series

    res = SuiteResult("poincare")
    for k, p in _strict_points(cfg, res):
        hp = HeckeParams.from_model(p)
        worst = 0.0
        for lam in enumerate_states(cfg.n, cfg.m, as_tuples=True):
            worst = max(worst, abs(poincare_series(lam, hp, cfg.m) - poincare_bruteforce(lam, hp, cfg.m)))
        res.gate("product == brute force", worst, cfg.tolerances.relation, k)
    return res


SUITE_FUNCTIONS = {
    "fock": suite_fock,
    "daha": suite_daha,
    "laplacian": suite_laplacian,
    "integrals": suite_integrals,
    "pieri": suite_pieri,
    "completeness": suite_completeness,
    "poincare": suite_poincare,
}


def run_suites(cfg: RunConfig, workers=None):
    """Run the configured suites concurrently; results come back in suite order."""
    names = cfg.suite_names
    workers = min(worker_count(workers), len(names)) or 1
    if workers == 1:
        return [SUITE_FUNCTIONS[name](cfg) for name in names]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda name: SUITE_FUNCTIONS[name](cfg), names))
