"""Deterministic search for the LARGE preset constants.

Run once; the printed values are pinned in ``ibs_forge.pairing_core``.
q is the first prime >= 2**160, c the smallest cofactor making p = 2*q*c + 1
prime, and g = h**((p-1)/q) mod p for the smallest h >= 2 giving g != 1.
"""
from sympy import isprime, nextprime


def search():
    q = nextprime(2**160 - 1)
    c = 1
    while not isprime(2 * q * c + 1):
        c += 1
    p = 2 * q * c + 1
    h = 2
    while pow(h, (p - 1) // q, p) == 1:
        h += 1
    return p, q, pow(h, (p - 1) // q, p), c, h


if __name__ == "__main__":
    p, q, g, c, h = search()
    print(f"p = {p}\nq = {q}\ng = {g}\n# cofactor c = {c}, base h = {h}")
