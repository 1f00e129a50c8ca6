# F(10**6) exactly, timed against the competitors, with a CSV report.

import math

from phifib import digit_count, emit_report, fib_pair_fast, run_bench

n = 10**6
fib_n, lucas_n = fib_pair_fast(n)
phi = (1 + math.sqrt(5)) / 2
print("digits:", digit_count(fib_n))
print("closed-form estimate:", math.floor(n * math.log10(phi) - math.log10(math.sqrt(5))) + 1)
print("last 20 digits:", str(fib_n % 10**20).zfill(20))

records = [run_bench(algo, n, 3) for algo in ("pair-fast", "doubling", "matrix")]
print(emit_report(records, "csv"), end="")
