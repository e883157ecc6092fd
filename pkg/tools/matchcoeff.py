"""Single-column implied-coefficient fit + automatic symbolic identification.

For each failing identity: compute c_impl = lhs / rhs_sum per binding, then
identify the ratio c_impl/c_printed against a dictionary of candidate
constants built from theta values at 0, r*delta, 2r*delta, s*delta, (r-s)*delta.
"""
import math, sys
from fractions import Fraction
import numpy as np
from theta_idents.catalog import catalog_by_id, enumerate_params, WeightedSum, PConstant, MeanValueIntegral, ZeroTerm
from theta_idents.coeffexpr import eval_expr
from theta_idents.special import EllipticContext, theta
from theta_idents.verify import _ThetaColumns, _ThetaConsts, _sum_batch, _shift_delta, mean_value_rhs

def implied_single(spec, binding, m, nz=10, seed=11, term_index=0):
    """Fit all rhs coefficients; returns list of (c_impl, c_printed)."""
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
    cols_list, printed = [], []
    for term in spec.rhs:
        if isinstance(term, ZeroTerm): continue
        if isinstance(term, WeightedSum):
            v, _ = _sum_batch(cols, term.sum, binding, p)
            cols_list.append(v); printed.append(eval_expr(term.coeff, ints, consts))
        elif isinstance(term, PConstant):
            cols_list.append(np.full(nz, float(p), complex)); printed.append(eval_expr(term.coeff, ints, consts))
        elif isinstance(term, MeanValueIntegral):
            val = mean_value_rhs(term.integrand, binding, ctx.tau, 256, T=spec.T)
            cols_list.append(np.full(nz, val, complex)); printed.append(1.0+0j)
    A = np.stack(cols_list, axis=1)
    sol, *_ = np.linalg.lstsq(A, lhs, rcond=None)
    resid = float(np.abs(A @ sol - lhs).max())
    return list(zip([complex(s) for s in sol], [complex(c) for c in printed])), resid

def candidates(binding, m, T):
    """name -> value dictionary of plausible correction factors."""
    ctx = EllipticContext(m)
    p = binding["p"]
    D = T / p
    t0 = {i: complex(theta(i, 0.0, ctx.tau)) for i in (2,3,4)}
    out = {}
    for num in (1,2,3,4,6,8,3j):
        pass
    import itertools
    base = {"1": 1.0, "2": 2.0, "3": 3.0, "4": 4.0, "1/2": 0.5, "1/3": 1/3, "2/3": 2/3, "3/2": 1.5}
    ratios0 = {}
    for i, j in itertools.permutations((2,3,4), 2):
        for e in (1,2,3,4):
            ratios0[f"(t{i}0/t{j}0)^{e}"] = (t0[i]/t0[j])**e
    rdep = {}
    offs = {"r": binding.get("r")}
    if binding.get("r") is not None:
        offs["2r"] = 2*binding["r"]
    if binding.get("s") is not None:
        offs["s"] = binding["s"]; offs["r-s"] = binding["r"]-binding["s"]
    for nm, off in offs.items():
        if off is None: continue
        tv = {i: complex(theta(i, off*D, ctx.tau)) for i in (1,2,3,4)}
        for i, j in itertools.permutations((1,2,3,4), 2):
            for e in (1,2):
                v = (tv[i]/tv[j])**e if abs(tv[j])>1e-13 else complex('nan')
                rdep[f"(t{i}({nm})/t{j}({nm}))^{e}"] = v
    out = {}
    for bn, bv in base.items():
        out[bn] = bv
        out["-"+bn] = -bv
        for rn, rv in ratios0.items():
            out[f"{bn}*{rn}"] = bv*rv
            out[f"-{bn}*{rn}"] = -bv*rv
    for rn, rv in {**ratios0, **rdep}.items():
        out[rn] = rv
        out["-"+rn] = -rv
    return out

def match(values, cand_sets):
    """values: list over bindings; cand_sets: list of dicts. Find names matching all."""
    names = set(cand_sets[0])
    for v, cands in zip(values, cand_sets):
        keep = set()
        for nm in names:
            cv = cands.get(nm)
            if cv is None or cv != cv: continue
            if abs(v - cv) <= 1e-8 * (1 + abs(cv)):
                keep.add(nm)
        names = keep
        if not names: break
    return sorted(names)

if __name__ == "__main__":
    by_id = catalog_by_id()
    for ident in sys.argv[1:]:
        spec = by_id[ident]
        nterms = len([t for t in spec.rhs if not isinstance(t, ZeroTerm)])
        print(f"=== {ident} ({nterms} rhs terms) ===")
        ratio_series = {}  # term index -> (values, cand dicts)
        rows = []
        for m in (0.5, 0.3, 0.8):
            for b in enumerate_params(spec, range(2, 9), 5):
                try:
                    pairs, resid = implied_single(spec, b, m)
                except Exception as exc:
                    continue
                desc = []
                for ti, (ci, cp) in enumerate(pairs):
                    ratio = ci/cp if abs(cp) > 1e-13 else complex('nan')
                    desc.append(f"T{ti}: impl/print={ratio.real:+.8f}{ratio.imag:+.1e}j")
                    ratio_series.setdefault(ti, ([], []))
                    ratio_series[ti][0].append(ratio)
                    ratio_series[ti][1].append(candidates(b, m, spec.T))
                ok = all(abs((ci/cp)-1) < 1e-7 for ci, cp in pairs if abs(cp) > 1e-13)
                rows.append((m, b, desc, resid, ok))
        shown = {}
        for m, b, desc, resid, ok in rows:
            if not ok and shown.get(m, 0) < 4:
                print(f"  m={m} {b}: {'  '.join(desc)} (resid {resid:.0e})")
                shown[m] = shown.get(m, 0) + 1
        for ti, (vals, cands) in ratio_series.items():
            bad = [v for v in vals if abs(v-1) > 1e-7]
            if not bad: continue
            names = match(vals, cands)
            print(f"  -> term {ti} ratio matches: {names[:6] if names else 'NO MATCH in dictionary'}")
