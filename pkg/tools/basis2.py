"""Two-stage structural fit for failing coefficients.

Stage 1 (per m): regress implied coefficients over a structured basis of
theta-ratio monomials in the shift offsets; stage 2: identify each surviving
weight across m against products of theta constants at 0.
"""
import itertools, math, sys
from fractions import Fraction
import numpy as np
from theta_idents.catalog import catalog_by_id, enumerate_params, WeightedSum, PConstant, MeanValueIntegral, ZeroTerm
from theta_idents.special import EllipticContext, theta
from theta_idents.verify import _ThetaColumns, _ThetaConsts, _sum_batch, _shift_delta, mean_value_rhs
from tools.mutate import fit_terms

def monomials_single(deg_list=(2,), offset="r", with_d4=False):
    """Monomials theta_i1..theta_ik(offset)/theta1^k(offset)."""
    out = []
    for deg in deg_list:
        for combo in itertools.combinations_with_replacement((2, 3, 4), deg):
            out.append((f"{''.join(map(str,combo))}({offset})/1^{deg}", (offset, combo, 0)))
        if with_d4:
            for combo in itertools.combinations_with_replacement((2, 3, 4), deg - 1):
                out.append((f"4'{''.join(map(str,combo))}({offset})/1^{deg}", (offset, combo, 1)))
    return out

def monomials_pair(offsets=("r", "s", "r-s"), indices=(2, 3, 4)):
    """Products of two ratios theta_i(a)/theta1(a) * theta_j(b)/theta1(b)."""
    out = []
    offs = list(offsets)
    for ai in range(len(offs)):
        for bi in range(ai, len(offs)):
            a, b = offs[ai], offs[bi]
            for i in indices:
                for j in indices:
                    if ai == bi and j < i:
                        continue
                    out.append((f"{i}({a})*{j}({b})/11", (a, b, i, j)))
    return out

def eval_single(consts, binding, spec_T, item):
    offset, combo, deriv = item
    from theta_idents.coeffexpr import IntPoly
    k = IntPoly.parse(offset).eval(binding)
    den = consts(1, k, 0) ** (len(combo) + deriv)
    num = 1.0 + 0j
    for i in combo:
        num *= consts(i, k, 0)
    if deriv:
        num *= consts(4, k, 1)
    return num / den

def eval_pair(consts, binding, item):
    from theta_idents.coeffexpr import IntPoly
    a, b, i, j = item
    ka = IntPoly.parse(a).eval(binding)
    kb = IntPoly.parse(b).eval(binding)
    return (consts(i, ka, 0) / consts(1, ka, 0)) * (consts(j, kb, 0) / consts(1, kb, 0))

def run(ident, term_index, kind, max_cond=1e9, p_range=range(2, 14), wthresh=5e-6):
    by_id = catalog_by_id()
    spec = by_id[ident]
    if kind == "single2":
        basis = monomials_single((2,), "r")
        ev = lambda consts, b, it: eval_single(consts, b, spec.T, it)
    elif kind == "single24":
        basis = monomials_single((2, 4), "r")
        ev = lambda consts, b, it: eval_single(consts, b, spec.T, it)
    elif kind == "single24d":
        basis = monomials_single((2, 3, 4), "r", with_d4=True)
        ev = lambda consts, b, it: eval_single(consts, b, spec.T, it)
    elif kind == "pair":
        basis = monomials_pair()
        ev = lambda consts, b, it: eval_pair(consts, b, it)
    else:
        raise SystemExit(f"unknown basis {kind}")
    names = [n for n, _ in basis]
    weights_by_m = {}
    for m in (0.5, 0.3, 0.8):
        rows, targets = [], []
        for b in enumerate_params(spec, p_range, 5):
            try:
                sol, resid, cond, consts, ints = fit_terms(spec, b, m)
            except Exception:
                continue
            if cond > max_cond or resid > 1e-10:
                continue
            try:
                row = [ev(consts, ints, item) for _, item in basis]
            except Exception:
                continue
            rows.append(row); targets.append(sol[term_index])
        if len(rows) < len(basis) + 2:
            print(f"  m={m}: only {len(rows)} samples for {len(basis)} unknowns")
            continue
        A = np.array(rows); y = np.array(targets)
        w, *_ = np.linalg.lstsq(A, y, rcond=None)
        resid = float(np.abs(A @ w - y).max())
        nz = [(names[i], complex(w[i])) for i in range(len(w)) if abs(w[i]) > wthresh]
        weights_by_m[m] = dict(nz)
        print(f"  m={m}: fit resid {resid:.1e}, {len(nz)} nonzero weights")
        for nm, val in nz:
            print(f"      w[{nm}] = {val.real:+.10f}{val.imag:+.1e}j")
    # stage 2: identify weights across m
    if len(weights_by_m) == 3:
        all_names = sorted(set().union(*[set(d) for d in weights_by_m.values()]))
        for nm in all_names:
            vals = [weights_by_m[m].get(nm, 0.0) for m in (0.5, 0.3, 0.8)]
            print(f"  identify w[{nm}]: {[f'{complex(v).real:+.8f}' for v in vals]}", end="")
            found = []
            for m_i, m in enumerate((0.5, 0.3, 0.8)):
                pass
            # candidate dictionary
            cands = {}
            for m in (0.5, 0.3, 0.8):
                ctx = EllipticContext(m)
                t0 = {i: complex(theta(i, 0.0, ctx.tau)) for i in (2, 3, 4)}
                d = {}
                for a in range(-6, 7):
                    for bpow in range(-6, 7):
                        if abs(a) + abs(bpow) > 6: continue
                        d[(a, bpow)] = (t0[2]/t0[3])**a * (t0[4]/t0[3])**bpow
                cands[m] = d
            hits = []
            for key in cands[0.5]:
                for ratn, ratv in (("1",1),("2",2),("1/2",0.5),("3",3),("4",4),("-1",-1),("-2",-2),("-1/2",-0.5),("-3",-3),("-4",-4),("3/2",1.5),("-3/2",-1.5),("1/4",0.25),("-1/4",-0.25)):
                    ok = True
                    for m in (0.5, 0.3, 0.8):
                        v = complex(weights_by_m[m].get(nm, 0.0))
                        cv = ratv * cands[m][key]
                        if abs(v - cv) > 1e-6 * (1 + abs(cv)):
                            ok = False; break
                    if ok:
                        hits.append(f"{ratn}*(t2/t3)^{key[0]}*(t4/t3)^{key[1]}")
            print("  ->", hits[:3] if hits else "?")

if __name__ == "__main__":
    ident, ti, kind = sys.argv[1], int(sys.argv[2]), sys.argv[3]
    print(f"=== {ident} term {ti} basis {kind} ===")
    run(ident, ti, kind)
