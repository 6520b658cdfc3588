"""
Module to manipulate words in a free group.

A word is a tuple of nonzero integers: g stands for generator g (1-based) and -g for its inverse.
The commutator convention is [x, y] = x y x^-1 y^-1.
"""


def reduce(word):
    """
    Freely reduce a word (cancel adjacent g g^-1 pairs).
    """
    stack = []
    for letter in word:
        if letter == 0:
            raise ValueError('0 is not a valid letter, generators are numbered from 1')
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def invert(word):
    return tuple(-letter for letter in reversed(word))


def multiply(*words):
    """
    Concatenate words and freely reduce the result.
    """
    result = []
    for word in words:
        result.extend(word)
    return reduce(result)


def commutator(a, b):
    return multiply(a, b, invert(a), invert(b))


def conjugate(word, by):
    """
    Get by word by^-1.
    """
    return multiply(by, word, invert(by))


def power(word, k):
    if k < 0:
        return power(invert(word), -k)
    return reduce(tuple(word) * k)


def exponent_sums(word, generators):
    """
    Get the exponent sum of every generator in a word.

    Parameters
    ----------
    word : tuple of int (required)

    generators : int (required)
        Number of generators.
    """
    sums = [0] * generators
    for letter in word:
        sums[abs(letter) - 1] += 1 if letter > 0 else -1
    return sums


def cyclic_normal_form(word):
    """
    Get a canonical representative of the cyclic word up to rotation and inversion.
    """
    word = reduce(word)
    # Cyclically reduce
    while len(word) > 1 and word[0] == -word[-1]:
        word = word[1:-1]
    if not word:
        return ()
    candidates = []
    for w in (word, invert(word)):
        candidates += [w[k:] + w[:k] for k in range(len(w))]
    return min(candidates)
