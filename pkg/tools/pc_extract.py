"""Extract p-constant terms with pinned weighted-sum term, then mutation-search."""
import sys
sys.path.insert(0, ".")
import math
import numpy as np
from theta_idents.catalog import catalog_by_id, enumerate_params, ZeroTerm, WeightedSum, PConstant
from theta_idents.coeffexpr import eval_expr, serialize_expr
from theta_idents.special import EllipticContext
from theta_idents.verify import _ThetaColumns, _ThetaConsts, _sum_batch, _shift_delta
from tools.mutate import iter_mutations, global_factors

def samples_for(ident, t0_factor=1.0):
    by_id = catalog_by_id()
    spec = by_id[ident]
    out = []
    for m in (0.5, 0.3, 0.8):
        ctx = EllipticContext(m)
        for b in enumerate_params(spec, range(2, 10), 5):
            p = b["p"]
            rng = np.random.default_rng(23)
            strip = min(1.2, math.pi * ctx.tau.imag / 4.2)
            zs = rng.random(8) * spec.T + 1j * (rng.random(8) - 0.5) * 2 * strip
            delta = _shift_delta(spec, p, ctx.tau)
            cols = _ThetaColumns(ctx.tau, delta, np.asarray(zs, complex))
            try:
                lhs = np.zeros(8, complex)
                for cs in spec.lhs:
                    v, _ = _sum_batch(cols, cs, b, p)
                    lhs += v
                consts = _ThetaConsts(ctx.tau, spec.T / p)
                ints = {k: v for k, v in b.items() if k in ("p","r","s","t","l")}
                terms = [t for t in spec.rhs if not isinstance(t, ZeroTerm)]
                c0 = t0_factor * eval_expr(terms[0].coeff, ints, consts)
                S0, _ = _sum_batch(cols, terms[0].sum, b, p)
                vals = (lhs - c0 * S0) / p
            except Exception:
                continue
            spread = float(np.abs(vals - vals.mean()).max())
            if spread > 1e-9 * (1 + abs(vals.mean())):
                continue
            out.append((complex(vals.mean()), consts, ints, m))
    return out, spec

if __name__ == "__main__":
    ident = sys.argv[1]
    samples, spec = samples_for(ident)
    print(f"=== {ident} PC term (pinned printed T0): {len(samples)} samples ===")
    terms = [t for t in spec.rhs if not isinstance(t, ZeroTerm)]
    base = terms[1].coeff
    def matches(expr, extra=None):
        for c1, consts, ints, m in samples:
            try:
                val = eval_expr(expr, ints, consts)
                if extra is not None:
                    val *= extra(m)
            except Exception:
                return False
            if abs(val - c1) > 1e-7 * (1 + abs(c1)):
                return False
        return True
    hits = []
    if matches(base):
        hits.append(("printed PC matches", base))
    muts = list(iter_mutations(base))
    for desc, mut in muts:
        if matches(mut):
            hits.append((desc, mut))
    gf = {m: global_factors(m) for m in (0.5, 0.3, 0.8)}
    for name in list(gf[0.5]):
        if matches(base, extra=lambda m, _n=name: gf[m][_n]):
            hits.append((f"global {name}", None))
    if not hits:
        for i, (d1, m1) in enumerate(muts):
            for d2, m2 in iter_mutations(m1):
                if matches(m2):
                    hits.append((f"{d1} AND {d2}", m2))
            if hits:
                break
    for desc, expr in hits[:5] or [("NO HIT", None)]:
        print("  ", desc)
        if expr is not None:
            print("   ", serialize_expr(expr))
