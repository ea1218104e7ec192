"""
Random sweep
============

Seeded scenarios from every regime, each compared term by term.
"""
from ratrec.verify import format_report, run_sweep

result = run_sweep(trials=80, seed=2024, horizon=40)
print(format_report(result), end="")

# same seed, same report, byte for byte
assert format_report(run_sweep(trials=80, seed=2024, horizon=40)) == format_report(result)
