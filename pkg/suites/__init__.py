# Check suites — per-algebra invariants and the full catalog run
