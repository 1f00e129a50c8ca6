# Rounding phi**n / sqrt(5) in binary64 works for small n, then stops.

from phifib import fib_float, fib_iterative, float_breakdown, float_max_n

for n in range(9):
    est = fib_float(n)
    print(f"{n}  {est.g:.4f}  {est.rounded}")

first_bad = float_breakdown(200)
print("first wrong index:", first_bad)
est = fib_float(first_bad)
print("  float says", est.rounded)
print("  exact is  ", fib_iterative(first_bad))
print("largest n before overflow:", float_max_n())
