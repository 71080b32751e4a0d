"""
The exhaustive property suite
=============================

Every property is checked on all labeled topologies up to a given size, all
their homeomorphisms and all small covers.  Failures come with a shrunk
instance document.
"""
import time

from expanso.suite import run_suite

t0 = time.perf_counter()
report = run_suite(3, seed=0)
print(f"{time.perf_counter() - t0:.1f}s, spaces per size {dict(sorted(report.spaces.items()))}")
for prop, n in sorted(report.checked.items()):
    print(f"  {prop:24s} {n:6d} checked, {report.failed[prop]} failed")
print("clean" if report.ok else report.failures[:3])
