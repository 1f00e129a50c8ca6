# Half-integer pairs: (a, b) stands for (a + b*sqrt(5)) / 2.
#
# phi is (1, 1), psi is (1, -1) and 1 is (2, 0). Powers of phi carry the
# Lucas number in the first slot and the Fibonacci number in the second.

from phifib import (
    OpCounters,
    PhiPair,
    pair_mul,
    pair_mul_phi,
    pair_mul_psi,
    pair_norm,
    pair_one,
    pair_phi,
    pair_pow_phi,
    pair_psi,
    pair_square,
)

print("phi * psi =", pair_mul(pair_phi(), pair_psi()))  # (-2, 0), i.e. -1

# Stepping by phi walks through (L(n), F(n)).
x = pair_one()
for n in range(9):
    print(n, tuple(x), "norm", pair_norm(x))
    x = pair_mul_phi(x)

# Stepping by psi gives the same numbers with the sqrt(5) part negated.
y = pair_one()
for _ in range(8):
    y = pair_mul_psi(y)
print("psi**8 =", y, " phi**8 =", pair_pow_phi(8))

# Squaring is two integer squarings plus one product.
c = OpCounters()
print("(3, 1)^2 =", pair_square(PhiPair(3, 1), c), c)

# 49 = 0b110001: six squarings, three multiplies by phi.
c = OpCounters()
print("phi**49 =", pair_pow_phi(49, c))
print("square steps", c.square_steps, "phi steps", c.mul_steps)
