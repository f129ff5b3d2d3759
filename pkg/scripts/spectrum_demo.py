"""Bethe roots, eigenvalues and completeness for one sector.

    python3 scripts/spectrum_demo.py --n 2 --m 3 --q 0.5 --a-minus 0.3
"""
import argparse

import numpy as np

from qbethe.params import ModelParams
from qbethe.qboson_fock import hamiltonian_explicit
from qbethe.spectrum import compute_spectrum


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=2)
    parser.add_argument("--m", type=int, default=3)
    for name in ("q", "a-minus", "a-hat-minus", "a-plus", "a-hat-plus"):
        parser.add_argument(f"--{name}", type=float, default=0.0)
    args = parser.parse_args()
    p = ModelParams(args.q, args.a_minus, args.a_hat_minus, args.a_plus, args.a_hat_plus)

    sp = compute_spectrum(args.n, args.m, p)
    exact = np.sort(np.linalg.eigvals(hamiltonian_explicit(args.n, args.m, p).matrix).real)
    print(f"{'mu':<14}{'xi':<40}{'E':>12}{'iters':>7}")
    for sol in sorted(sp.roots, key=lambda s: 2 * np.cos(s.xi).sum()):
        xi = " ".join(f"{x:.10f}" for x in sol.xi)
        print(f"{str(sol.mu):<14}{xi:<40}{2 * np.cos(sol.xi).sum():>12.8f}{sol.iterations:>7}")
    bethe = np.sort([2 * np.cos(s.xi).sum() for s in sp.roots])
    print(f"\nmax |E_bethe - E_diag|      {np.abs(bethe - exact).max():.2e}")
    print(f"max eigen residual          {sp.max_eigen_residual:.2e}")
    print(f"max integral residual       {sp.max_integral_residual:.2e}")
    print(f"rank                        {sp.rank}/{sp.dimension}")
    print(f"sigma_min / sigma_max       {sp.singular_values[-1] / sp.singular_values[0]:.2e}")


if __name__ == "__main__":
    main()
