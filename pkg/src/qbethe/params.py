"""Model couplings of the open q-boson chain and their Hecke-algebra counterparts."""
from __future__ import annotations

import cmath
from dataclasses import asdict, dataclass

import mpmath
import numpy as np
from scipy.stats import qmc

PARAM_NAMES = ("q", "a_minus", "a_hat_minus", "a_plus", "a_hat_plus")


class ParameterDomainError(ValueError):
    pass


@dataclass(frozen=True)
class ModelParams:
    """Couplings q, a-, â-, a+, â+; boundary constants c± and g± are derived."""

    q: float = 0.0
    a_minus: float = 0.0
    a_hat_minus: float = 0.0
    a_plus: float = 0.0
    a_hat_plus: float = 0.0

    def __post_init__(self):
        for name in PARAM_NAMES:
            value = getattr(self, name)
            if not -1.0 < value < 1.0:
                raise ParameterDomainError(f"{name}={value} outside (-1, 1)")

    @property
    def c_minus(self):
        return self.a_minus * self.a_hat_minus

    @property
    def c_plus(self):
        return self.a_plus * self.a_hat_plus

    @property
    def g_minus(self):
        return self.a_minus + self.a_hat_minus

    @property
    def g_plus(self):
        return self.a_plus + self.a_hat_plus

    @property
    def strict(self) -> bool:
        """All five couplings nonzero (the domain where completeness is proven)."""
        return all(getattr(self, name) != 0 for name in PARAM_NAMES)

    def as_tuple(self):
        return tuple(getattr(self, name) for name in PARAM_NAMES)

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        unknown = set(data) - set(PARAM_NAMES)
        if unknown:
            raise ParameterDomainError(f"unknown parameter keys: {sorted(unknown)}")
        return cls(**{k: float(v) for k, v in data.items()})

    def require_strict(self):
        if not self.strict:
            raise ParameterDomainError(f"strict domain requires nonzero couplings, got {self.as_tuple()}")
        return self


@dataclass(frozen=True)
class HeckeParams:
    """The five Hecke parameters tau, tau_0, hat tau_0, tau_n, hat tau_n."""

    tau: complex
    tau0: complex
    tau0_hat: complex
    taun: complex
    taun_hat: complex

    def __post_init__(self):
        for name in ("tau", "tau0", "tau0_hat", "taun", "taun_hat"):
            value = getattr(self, name)
            if not isinstance(value, (np.clongdouble, mpmath.ctx_mp_python._mpc)):
                value = complex(value)
            if value == 0:
                raise ParameterDomainError(f"{name} must be nonzero")
            if abs(abs(value) - 1.0) < 1e-12:
                raise ParameterDomainError(f"{name}={value} lies on the unit circle")
            object.__setattr__(self, name, value)

    @classmethod
    def from_model(cls, p: ModelParams, precision="double", dps=40) -> "HeckeParams":
        """Invert q = tau^2, a = t*that, â = -t/that with principal square roots.

        ``precision`` is "double", "extended" (80-bit) or "mp" (mpmath, ``dps``
        digits); the higher precisions start from the exact couplings of ``p``.
        """
        if precision != "double":
            base = cls.from_model(p)
            if precision == "extended":
                return base.to_extended(p.as_tuple())
            if precision == "mp":
                return base.to_multiprecision(dps, p.as_tuple())
            raise ValueError(f"unknown precision {precision!r}")
        p.require_strict()
        tau = cmath.sqrt(p.q)
        taun = cmath.sqrt(-p.a_minus * p.a_hat_minus)
        tau0 = cmath.sqrt(-p.a_plus * p.a_hat_plus)
        hp = cls(tau, tau0, p.a_plus / tau0, taun, p.a_minus / taun)
        back = hp.model_values()
        err = max(abs(x - y) for x, y in zip(back, p.as_tuple()))
        if err > 1e-14:
            raise ParameterDomainError(f"parameter map round trip off by {err:.3g}")
        return hp

    @property
    def extended(self) -> bool:
        return isinstance(self.tau, np.clongdouble)

    @property
    def multiprecision(self) -> bool:
        return isinstance(self.tau, mpmath.ctx_mp_python._mpc)

    def to_multiprecision(self, dps=40, couplings=None) -> "HeckeParams":
        """The same parameters as mpmath numbers in a private context of ``dps`` digits.

        ``couplings`` (q, a-, â-, a+, â+) default to the values implied by self.
        """
        ctx = mpmath.MPContext()
        ctx.dps = dps
        vals = [ctx.mpc(complex(v)) for v in (couplings or self.model_values())]
        q, am, ahm, ap, ahp = vals

        def root(value, reference):
            r = ctx.sqrt(value)
            return r if abs(complex(r) - reference) <= abs(complex(r) + reference) else -r

        tau = root(q, self.tau)
        taun = root(-am * ahm, self.taun)
        tau0 = root(-ap * ahp, self.tau0)
        return HeckeParams(tau, tau0, ap / tau0, taun, am / taun)

    def to_extended(self, couplings=None) -> "HeckeParams":
        """The same parameters carried in 80-bit extended complex arithmetic.

        Square roots are recomputed at extended precision from the model
        couplings when the parameters are real or purely imaginary.
        """
        if self.extended:
            return self
        vals = [np.clongdouble(v) for v in (couplings or self.model_values())]
        q, am, ahm, ap, ahp = vals
        tau = _ext_sqrt(q, self.tau)
        taun = _ext_sqrt(-am * ahm, self.taun)
        tau0 = _ext_sqrt(-ap * ahp, self.tau0)
        return HeckeParams(tau, tau0, ap / tau0, taun, am / taun)

    def model_values(self):
        """(q, a-, â-, a+, â+) as complex numbers."""
        return (
            self.tau**2,
            self.taun * self.taun_hat,
            -self.taun / self.taun_hat,
            self.tau0 * self.tau0_hat,
            -self.tau0 / self.tau0_hat,
        )

    def to_model(self) -> ModelParams:
        vals = self.model_values()
        if max(abs(v.imag) for v in vals) > 1e-12:
            raise ParameterDomainError("Hecke parameters do not map to real couplings")
        return ModelParams(*(v.real for v in vals))

    def tau_j(self, j, n):
        if j == 0:
            return self.tau0
        if j == n:
            return self.taun
        return self.tau

    def tau_hat_j(self, j, n):
        if j == 0:
            return self.tau0_hat
        if j == n:
            return self.taun_hat
        return self.tau


def _ext_sqrt(value, reference):
    """Extended-precision square root on the branch of ``reference``."""
    root = np.sqrt(np.clongdouble(value))
    return root if abs(complex(root) - reference) <= abs(complex(root) + reference) else -root


def parameter_grid(count, seed=0, low=0.15, high=0.85, strict=True):
    """Deterministic low-discrepancy sample of ModelParams.

    Magnitudes are drawn in [low, high] with a scrambled Halton sequence and signs
    from a second coordinate block. Points with |a| == |â| on a boundary are nudged
    since their Hecke parameter hat tau sits on the unit circle. With
    ``strict=False`` each coupling is also zeroed with probability 0.3, drawn from
    an independent sequence so the strict grid is unchanged.
    """
    sampler = qmc.Halton(d=10, scramble=True, seed=seed)
    raw = sampler.random(count)
    drop = qmc.Halton(d=5, scramble=True, seed=seed + 1).random(count) < 0.3 if not strict else None
    points = []
    for r, row in enumerate(raw):
        mags = low + (high - low) * row[:5]
        signs = np.where(row[5:] < 0.5, -1.0, 1.0)
        vals = mags * signs
        for i, k in ((1, 2), (3, 4)):
            if abs(abs(vals[i]) - abs(vals[k])) < 0.02:
                vals[k] = np.sign(vals[k]) * (abs(vals[k]) + 0.05 if abs(vals[k]) < 0.8 else abs(vals[k]) - 0.05)
        if drop is not None:
            vals = np.where(drop[r], 0.0, vals)
        points.append(ModelParams(*map(float, vals)))
    return points
