import random
from fractions import Fraction

from unidiv.algebra import AlgElem, STANDARD_ALGEBRA
from unidiv.fields import KElem, LElem


def rand_fraction(rng: random.Random, num: int = 10, den: int = 5) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def rand_k(rng: random.Random, num: int = 10, den: int = 5) -> KElem:
    return KElem(rand_fraction(rng, num, den), rand_fraction(rng, num, den))


def rand_l(rng: random.Random, num: int = 10, den: int = 5) -> LElem:
    return LElem.from_six_tuple([rand_fraction(rng, num, den) for _ in range(6)])


def rand_real_l(rng: random.Random, num: int = 10, den: int = 5) -> LElem:
    """Random element of the real subfield Q(theta)."""
    return LElem(*(KElem(rand_fraction(rng, num, den)) for _ in range(3)))


def rand_alg(rng: random.Random, num: int = 10, den: int = 5, spec=STANDARD_ALGEBRA) -> AlgElem:
    return AlgElem(spec, rand_l(rng, num, den), rand_l(rng, num, den), rand_l(rng, num, den))


def rand_nonzero_l(rng: random.Random, num: int = 10, den: int = 5) -> LElem:
    while True:
        a = rand_l(rng, num, den)
        if not a.is_zero():
            return a
