"""Exact free-group word algebra.

A word is a tuple of nonzero ints.  The letter ``+(g+1)`` is generator ``g``
(0-based id into an :class:`Alphabet`), ``-(g+1)`` is its inverse.  Every
word handed out by this module is freely reduced, so equality of group
elements is tuple equality and the empty tuple is the identity.
"""

from math import gcd

from .errors import ResourceExhausted, UnknownGenerator

Word = tuple

#: default cap on word length; blowing past it raises ResourceExhausted.
DEFAULT_MAX_WORD_LEN = 2**20


class Alphabet:
    """An ordered list of distinct generator names; order fixes the ids."""

    __slots__ = ("names", "_index")

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names: {names}")
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}

    @property
    def size(self):
        return len(self.names)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UnknownGenerator(f"unknown generator {name!r}") from None

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Alphabet({', '.join(self.names)})"


def letter(gen, sign=1):
    """Encode generator id ``gen`` with the given sign as a letter."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return sign * (gen + 1)


def letter_gen(lt):
    """Generator id of a letter."""
    return abs(lt) - 1


def letter_sign(lt):
    return 1 if lt > 0 else -1


def reduce(raw, max_len=DEFAULT_MAX_WORD_LEN):
    """Freely reduce a letter sequence.  Total and idempotent."""
    out = []
    for lt in raw:
        if out and out[-1] == -lt:
            out.pop()
        else:
            out.append(lt)
            if len(out) > max_len:
                raise ResourceExhausted(f"word length exceeds {max_len}")
    return tuple(out)


def multiply(u, v, max_len=DEFAULT_MAX_WORD_LEN):
    """Product of two reduced words, reduced."""
    out = list(u)
    for lt in v:
        if out and out[-1] == -lt:
            out.pop()
        else:
            out.append(lt)
            if len(out) > max_len:
                raise ResourceExhausted(f"word length exceeds {max_len}")
    return tuple(out)


def concat(words, max_len=DEFAULT_MAX_WORD_LEN):
    out = ()
    for w in words:
        out = multiply(out, w, max_len)
    return out


def invert(u):
    return tuple(-lt for lt in reversed(u))


def power(u, n, max_len=DEFAULT_MAX_WORD_LEN):
    if n < 0:
        return power(invert(u), -n, max_len)
    out = ()
    for _ in range(n):
        out = multiply(out, u, max_len)
    return out


def cyclic_reduce(w):
    """Split ``w`` as ``conjugator * core * conjugator^-1`` with cyclically
    reduced core.  Returns ``(conjugator, core)``."""
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[:i], w[i:j]


def is_cyclically_reduced(w):
    return len(w) < 2 or w[0] != -w[-1]


def cyclically_equal_up_to_inversion(u, v):
    """True iff ``v`` is a cyclic permutation of ``u`` or of ``u``'s inverse.

    Both inputs must be cyclically reduced.
    """
    if len(u) != len(v):
        return False
    if not u:
        return True
    doubled = u + u
    for shift in range(len(u)):
        if doubled[shift:shift + len(u)] == v:
            return True
    ui = invert(u)
    doubled = ui + ui
    for shift in range(len(u)):
        if doubled[shift:shift + len(u)] == v:
            return True
    return False


def exponent_sum(w, gen):
    """Signed count of occurrences of generator id ``gen`` in ``w``."""
    target = gen + 1
    return sum(letter_sign(lt) for lt in w if abs(lt) == target)


def exponent_vector(w, size):
    vec = [0] * size
    for lt in w:
        vec[letter_gen(lt)] += letter_sign(lt)
    return tuple(vec)


def support(w):
    """Set of generator ids occurring in ``w`` with either sign."""
    return frozenset(letter_gen(lt) for lt in w)


def validate_word(alphabet, w):
    """Check every letter of ``w`` indexes into ``alphabet``."""
    n = alphabet.size
    for lt in w:
        if lt == 0 or letter_gen(lt) >= n:
            raise UnknownGenerator(
                f"letter {lt} has no generator in {alphabet!r}")


def vector_gcd(vec):
    g = 0
    for x in vec:
        g = gcd(g, abs(x))
    return g
