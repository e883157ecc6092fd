"""Fit implied RHS coefficients for failing identities and compare to printed."""
import math, sys
import numpy as np
from theta_idents.catalog import builtin_catalog, catalog_by_id, enumerate_params, WeightedSum, PConstant, MeanValueIntegral, ZeroTerm
from theta_idents.coeffexpr import eval_expr
from theta_idents.special import EllipticContext, theta
from theta_idents.verify import _ThetaColumns, _ThetaConsts, _sum_batch, _shift_delta, mean_value_rhs

def implied(spec, binding, m, nz=12, seed=3):
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
    consts = _ThetaConsts(ctx.tau, spec.T / p)
    ints = {k: v for k, v in binding.items() if k in ("p","r","s","t","l")}
    columns, printed = [], []
    for term in spec.rhs:
        if isinstance(term, ZeroTerm):
            continue
        if isinstance(term, WeightedSum):
            v, _ = _sum_batch(cols, term.sum, binding, p)
            columns.append(v)
            printed.append(eval_expr(term.coeff, ints, consts))
        elif isinstance(term, PConstant):
            columns.append(np.full(nz, float(p), complex))
            printed.append(eval_expr(term.coeff, ints, consts))
        elif isinstance(term, MeanValueIntegral):
            val = mean_value_rhs(term.integrand, binding, ctx.tau, 256, T=spec.T)
            columns.append(np.full(nz, val, complex))
            printed.append(1.0+0j)
    A = np.stack(columns, axis=1)
    sol, res, rank, sv = np.linalg.lstsq(A, lhs, rcond=None)
    resid = np.abs(A @ sol - lhs).max()
    return sol, np.array(printed), resid

def theta0(i, m):
    return theta(i, 0.0, EllipticContext(m).tau).real

if __name__ == "__main__":
    ids = sys.argv[1:]
    by_id = catalog_by_id()
    for ident in ids:
        spec = by_id[ident]
        print(f"=== {ident} ===")
        for m in (0.3, 0.5, 0.8):
            bindings = enumerate_params(spec, range(2, 10), 7)
            shown = bad = 0
            for b in bindings:
                try:
                    sol, prt, resid = implied(spec, b, m)
                except Exception as exc:
                    print(f"  m={m} {b}: skip {type(exc).__name__}")
                    continue
                ratios = [s/p0 if abs(p0) > 1e-14 else complex('nan') for s, p0 in zip(sol, prt)]
                flag = all(abs(rr-1) < 1e-6 for rr in ratios)
                if not flag or shown < 1:
                    rs = " ".join(f"{rr.real:+.6f}{rr.imag:+.2e}j" for rr in ratios)
                    print(f"  m={m} {b}: impl/printed = {rs}  (fit resid {resid:.1e})" + ("  OK" if flag else "  <-"))
                shown += 1
                bad += 0 if flag else 1
                if shown > 18 or bad > 7:
                    break
        t2,t3,t4 = theta0(2,0.5), theta0(3,0.5), theta0(4,0.5)
        print(f"  [m=0.5 constants: t2={t2:.6f} t3={t3:.6f} t4={t4:.6f} t3/t4={t3/t4:.6f} t4/t3={t4/t3:.6f} (t3/t4)^2={ (t3/t4)**2:.6f} t2/t3={t2/t3:.6f} t2/t4={t2/t4:.6f}]")
