"""Random generators shared by the property, differential and acceptance tests."""

import random

from conjugacy.expr import EmptySet, Literal, Star, concat, union
from conjugacy.words import WordPair, cyclic_shift


def random_word(rng, max_len, alphabet="ab", min_len=0):
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(min_len, max_len)))


def random_conjugate_pair(rng, max_len, alphabet="ab", min_len=1):
    u = random_word(rng, max_len, alphabet, min_len)
    return WordPair(u, cyclic_shift(u, rng.randint(0, max(0, len(u) - 1))))


def random_literal(rng, max_len=3, p_conjugate=0.75):
    if rng.random() < p_conjugate:
        return Literal(random_conjugate_pair(rng, max_len, min_len=0))
    return Literal(WordPair(random_word(rng, max_len), random_word(rng, max_len)))


def random_expr(rng, budget, max_stars=3, max_len=3, p_conjugate=0.75):
    """Random expression with at most ``max_stars`` stars and about ``budget`` leaves."""
    stars = [max_stars]

    def go(n):
        if n <= 1:
            if rng.random() < 0.03:
                return EmptySet()
            return random_literal(rng, max_len, p_conjugate)
        roll = rng.random()
        if roll < 0.3 and stars[0] > 0:
            stars[0] -= 1
            return Star(go(n - 1))
        k = rng.randint(1, n - 1)
        left, right = go(k), go(n - k)
        return union(left, right) if roll < 0.45 else concat(left, right)

    return go(budget)


def seeded(seed):
    return random.Random(seed)
