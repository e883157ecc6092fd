"""Fit the lhs of a failing identity against a basket of candidate rhs sums."""
import math, sys
import numpy as np
from theta_idents.catalog import catalog_by_id, enumerate_params
from theta_idents.identities import S, F, LD, R34, R12, R33, R333, R123, R1233, R14, R24, R23, R13, R111, R222, R1123, R34a, R12a, R33a, R123a, LDa
from theta_idents.special import EllipticContext, theta
from theta_idents.verify import _ThetaColumns, _ThetaConsts, _sum_batch, _shift_delta

BASKETS = {
    "plain-pi":  [("R34", R34), ("R12", R12), ("R33", R33), ("R333", R333), ("R123", R123), ("R1233", R1233), ("const", None)],
    "alt-pi":    [("R34a", R34a), ("R12a", R12a), ("R33a", R33a), ("R123a", R123a), ("LDa", LDa), ("const", None)],
    "plain-2pi": [("R14", R14), ("R24", R24), ("R23", R23), ("R13", R13), ("R111", R111), ("R222", R222), ("R1123", R1123), ("const", None)],
}

def fit(spec, binding, m, basket, nz=24, seed=5):
    ctx = EllipticContext(m)
    p = binding["p"]
    rng = np.random.default_rng(seed)
    zs = rng.random(nz) * spec.T
    delta = _shift_delta(spec, p, ctx.tau)
    cols = _ThetaColumns(ctx.tau, delta, np.asarray(zs, complex))
    lhs = np.zeros(nz, complex)
    for cs in spec.lhs:
        v, _ = _sum_batch(cols, cs, binding, p)
        lhs += v
    columns, names = [], []
    for name, cs in basket:
        if cs is None:
            columns.append(np.ones(nz, complex))
        else:
            v, _ = _sum_batch(cols, cs, binding, p)
            columns.append(v)
        names.append(name)
    A = np.stack(columns, axis=1)
    sol, *_ = np.linalg.lstsq(A, lhs, rcond=None)
    resid = np.abs(A @ sol - lhs).max()
    return names, sol, resid

if __name__ == "__main__":
    ident = sys.argv[1]
    basket = BASKETS[sys.argv[2]]
    by_id = catalog_by_id()
    spec = by_id[ident]
    print(f"=== {ident} basis fit ===")
    for m in (0.5, 0.3):
        for b in enumerate_params(spec, range(2, 8), 5)[:10]:
            try:
                names, sol, resid = fit(spec, b, m, basket)
            except Exception as exc:
                print(f"  m={m} {b}: skip {type(exc).__name__}"); continue
            parts = [f"{n}:{c.real:+.8f}" for n, c in zip(names, sol) if abs(c) > 1e-8]
            print(f"  m={m} {b}: resid={resid:.1e}  " + "  ".join(parts))
    ctx = EllipticContext(0.5)
    t = lambda i, x=0.0: theta(i, x, ctx.tau).real
