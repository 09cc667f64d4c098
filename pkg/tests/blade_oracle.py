"""Independent brute-force blade arithmetic for cross-checking the kernel.

Works on explicit generator lists instead of bitmasks: concatenate the
two ascending sequences, bubble-sort while counting swaps, then strike
adjacent equal generators (they contract to +1).  Deliberately naive so
it shares nothing with the bit-twiddling implementation it checks.
"""


def blade_product_bruteforce(a_mask: int, b_mask: int) -> tuple[int, int]:
    factors = [i for i in range(a_mask.bit_length()) if a_mask >> i & 1]
    factors += [i for i in range(b_mask.bit_length()) if b_mask >> i & 1]

    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            if factors[i] > factors[i + 1]:
                factors[i], factors[i + 1] = factors[i + 1], factors[i]
                sign = -sign
                changed = True

    i = 0
    while i < len(factors) - 1:
        if factors[i] == factors[i + 1]:
            del factors[i : i + 2]
            i = max(i - 1, 0)
        else:
            i += 1

    mask = 0
    for g in factors:
        mask |= 1 << g
    return sign, mask
