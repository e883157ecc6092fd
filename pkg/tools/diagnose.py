"""Development harness: sweep every entry on a reduced grid and report
residuals plus lhs/rhs diagnostics for failures."""
import sys, time
import numpy as np
from theta_idents.catalog import builtin_catalog, enumerate_params
from theta_idents.verify import SweepGrid, sweep
from theta_idents.errors import EmptyParameterSpace

grid = SweepGrid(m_values=(0.3, 0.5, 0.8), p_values=tuple(range(2, 10)), samples=4, seed=7)
only = sys.argv[1:] if len(sys.argv) > 1 else None
t0 = time.perf_counter()
bad = []
for spec in builtin_catalog():
    if only and spec.id not in only:
        continue
    t1 = time.perf_counter()
    try:
        rep = sweep(spec.id, grid)
    except Exception as exc:
        print(f"{spec.id:10s} EXCEPTION {type(exc).__name__}: {exc}")
        bad.append(spec.id)
        continue
    dt = time.perf_counter() - t1
    mark = "ok " if rep.fail_count == 0 else "FAIL"
    print(f"{spec.id:10s} {mark} pass={rep.pass_count:4d} fail={rep.fail_count:4d} "
          f"skip={rep.skip_count:3d} maxres={rep.max_rel_residual:.2e} ({dt:.2f}s)")
    if rep.fail_count:
        bad.append(spec.id)
        # summarize which bindings fail
        seen = {}
        for row in rep.rows:
            if row.verdict == "fail":
                key = tuple(sorted(row.binding.items()))
                seen.setdefault(key, []).append(row.residual)
        for key, residuals in list(seen.items())[:6]:
            print(f"    fail at {dict(key)}: max {max(residuals):.3e} (n={len(residuals)})")
print(f"\ntotal {time.perf_counter()-t0:.1f}s; failing: {bad}")
