"""Mutation search for the second rhs coefficient, with the first pinned."""
import sys
sys.path.insert(0, ".")
from theta_idents.catalog import catalog_by_id, enumerate_params, ZeroTerm
from theta_idents.coeffexpr import eval_expr, serialize_expr
from tools.extract_t1 import extract
from tools.mutate import iter_mutations, global_factors, rename_offsets

def search(ident, pairs=False):
    by_id = catalog_by_id()
    spec = by_id[ident]
    samples = []
    for m in (0.5, 0.3, 0.8):
        for b in enumerate_params(spec, range(2, 14), 5):
            try:
                c1, spread, consts, ints = extract(spec, ident, b, m)
            except Exception:
                continue
            if spread > 1e-8 * (1 + abs(c1)):
                continue
            samples.append((c1, consts, ints, m))
    print(f"  {len(samples)} pinned-T0 samples")
    if len(samples) < 6:
        return []
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
    base = [t for t in spec.rhs if not isinstance(t, ZeroTerm)][1].coeff
    hits = []
    if matches(base):
        hits.append(("printed T1 matches (with corrected T0)", base))
    muts = list(iter_mutations(base))
    for old, new in (("1", "r"), ("r", "2*r"), ("2*r", "r"), ("4", "r")):
        muts.append((f"rename {old}->{new}", rename_offsets(base, old, new)))
    for desc, mut in muts:
        if matches(mut):
            hits.append((desc, mut))
    gf = {m: global_factors(m) for m in (0.5, 0.3, 0.8)}
    for name in list(gf[0.5]):
        if matches(base, extra=lambda m, _n=name: gf[m][_n]):
            hits.append((f"global factor {name}", None))
        for desc, mut in muts[:0 if not pairs else len(muts)]:
            if matches(mut, extra=lambda m, _n=name: gf[m][_n]):
                hits.append((f"global {name} AND {desc}", mut))
    if not hits and pairs:
        for i, (d1, m1) in enumerate(muts):
            for d2, m2 in iter_mutations(m1):
                if matches(m2):
                    hits.append((f"{d1} AND {d2}", m2))
            if hits:
                break
    return hits

if __name__ == "__main__":
    ident = sys.argv[1]
    pairs = "--pairs" in sys.argv
    print(f"=== {ident} T1 (pinned T0) ===")
    for desc, expr in search(ident, pairs)[:6] or [("NO HIT", None)]:
        print("  ", desc)
        if expr is not None:
            print("    ", serialize_expr(expr))
