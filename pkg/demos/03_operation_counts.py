# Semantic operation counts: pair method versus symmetric matrix powers
# versus index doubling, for a handful of indices.

from phifib import OpCounters, fib_fast_doubling, fib_matrix, fib_pair_fast

print(f"{'n':>8} {'algo':>10} {'squarings':>10} {'mults':>6} {'adds':>6} {'shifts':>7}")
for n in (49, 1000, 4096, 10**6):
    for name, fn in (
        ("pair-fast", lambda n, c: fib_pair_fast(n, c)[0]),
        ("matrix", fib_matrix),
        ("doubling", fib_fast_doubling),
    ):
        c = OpCounters()
        fn(n, c)
        print(f"{n:>8} {name:>10} {c.squarings:>10} {c.mults:>6} {c.adds:>6} {c.shifts:>7}")
