"""apsieve: complete-resolution pipeline for the Diophantine equation

    (x-3r)^3 + (x-2r)^3 + (x-r)^3 + x^3 + (x+r)^3 + (x+2r)^3 + (x+3r)^3 = y^p

over 1 <= r <= 10**6 and primes p >= 5, via descent into twelve cases,
exponent bounds, modular elimination sieves, quadratic-field descent, and
a primitive-divisor solver for the remaining cases.
"""

__version__ = "0.1.0"
