"""
Four worked examples
====================

One scenario from each regime, iterated exactly and classified.
"""
from ratrec import classify, detect_period, paper_example, simulate
from ratrec.analysis import report

for k in (1, 2, 3, 4):
    sc = paper_example(k)
    traj = simulate(sc.params, sc.init, 120)
    print(f"--- {sc.label}")
    print("first terms:", ", ".join(str(traj[n]) for n in range(1, 9)))
    print("tail period:", detect_period(traj, 20))
    print(report(classify(sc.params, sc.init)))

# Example 4 sits exactly on both zero-conditions, so the seeds repeat forever
sc = paper_example(4)
traj = simulate(sc.params, sc.init, 40)
assert all(traj[n + 4] == traj[n] for n in range(-3, 37))
