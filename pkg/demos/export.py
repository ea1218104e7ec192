"""
CSV and SVG export
==================

Writes example3.csv and example3.svg into the current directory.
"""
from ratrec import Mode, emit_plot, export_csv, paper_example, simulate

sc = paper_example(3)
traj = simulate(sc.params, sc.init, 200, mode=Mode.FLOAT)

with open("example3.csv", "w", newline="") as fh:
    fh.write(export_csv(traj))
with open("example3.svg", "w") as fh:
    fh.write(emit_plot(traj, "Example 3: unbounded"))
print(traj.status, len(traj), "points")
