"""
Centered residues, balanced digits and CRT coordinates
======================================================

Two ways to split an index J of Z(D) into smaller pieces, and why only one
of them respects addition.
"""

# %%
# Every element of Z(D) is stored by its centered representative.
from oddfft import CenteredResidue, crt_basis, crt_encode, crt_decode, radix_encode, radix_decode

print(CenteredResidue(8, 15), CenteredResidue(11, 15))

# %%
# Balanced base-3 digits of Z(9).  4 has digits (1, 1) and -4 has (-1, -1).
for J in range(-4, 5):
    print(J, radix_encode(J, 3, 2).digits)

# %%
# Adding digit-wise does not add the numbers: 4 + 4 = -1 in Z(9), but
# (1, 1) + (1, 1) = (2, 2) is not even a valid digit pair.
print((CenteredResidue(4, 9) + 4).value, radix_encode(-1, 3, 2).digits)

# %%
# The Chinese remainder coordinates of Z(15) = Z(3) x Z(5) do respect
# addition and multiplication.
basis = crt_basis((3, 5))
print("a =", basis.a, " b =", basis.b, " c =", basis.c)
J, K = 11, 6
lhs = crt_encode(J + K, basis)
rhs = tuple(x + y for x, y in zip(crt_encode(J, basis), crt_encode(K, basis)))
print(lhs == rhs, crt_decode(lhs, basis))

# %%
# Round trip for every element, in both coordinate systems.
ok = all(radix_decode(radix_encode(J, 3, 3)).value == J for J in range(-13, 14))
ok &= all(crt_decode(crt_encode(J, basis), basis).value == J for J in range(-7, 8))
print("round trips:", ok)
