"""
Multilinear polynomials over GF(2).

A monomial is stored as an int bit mask of its variables (0 is the
constant 1), a polynomial as the frozenset of its monomials.
"""
import re

import numpy as np

from switchsep.utils.common import bits_of, full_mask, mask_of, popcount

_TERM = re.compile(r'^x(\d+)$')


def moebius_transform(table):
    """
    Moebius transform over GF(2): maps a truth table to the coefficient
    vector of its algebraic normal form and back (it is an involution).

    Args:
        table (array-like): 0/1 values of length 2**k, index bit i is
            argument i.

    Returns:
        np.ndarray: uint8 array of the same length.
    """
    a = np.array(table, dtype=np.uint8).ravel() & 1
    size = a.shape[0]
    if size == 0 or size & (size - 1):
        raise ValueError('Table length must be a power of two, got %d'
                         % size)
    step = 1
    while step < size:
        view = a.reshape(-1, 2, step)
        view[:, 1, :] ^= view[:, 0, :]
        step <<= 1
    return a


def _monomial_key(m):
    return -popcount(m), bits_of(m)


class Gf2Polynomial(object):
    """
    A multilinear polynomial over GF(2).

    Args:
        arity (int): number of variables x0..x{arity-1}.
        monomials (iterable): monomials as int masks or as iterables of
            variable indices. A monomial listed twice cancels.

    Attributes:
        arity (int): number of variables.
        monomials (frozenset): the monomials as int masks.
    """

    def __init__(self, arity, monomials=()):
        if not isinstance(arity, int) or arity < 0:
            raise ValueError('Arity must be a non-negative integer, '
                             'got %r' % (arity,))
        terms = set()
        for m in monomials:
            if not isinstance(m, int):
                m = mask_of(m)
            if m < 0 or m >> arity:
                raise ValueError('Monomial %s uses a variable outside '
                                 'x0..x%d' % (bits_of(m), arity - 1))
            terms ^= {m}
        self.arity = arity
        self.monomials = frozenset(terms)

    @classmethod
    def zero(cls, arity):
        return cls(arity)

    @classmethod
    def one(cls, arity):
        return cls(arity, [0])

    @classmethod
    def variable(cls, i, arity):
        if i < 0 or i >= arity:
            raise ValueError('Variable x%d outside x0..x%d' % (i, arity - 1))
        return cls(arity, [1 << i])

    @classmethod
    def sigma(cls, arity):
        """
        The sum x0 + ... + x{arity-1}.
        """
        return cls(arity, [1 << i for i in range(arity)])

    @classmethod
    def parse(cls, text, arity=None):
        """
        Parse text such as ``"x0*x1 + x2 + 1"``.

        Args:
            text (str): sum of terms; a term is ``1`` or a product of
                variables ``xK``. ``0`` is the zero polynomial.
            arity (int): number of variables, defaults to the largest
                index plus one.

        Returns:
            Gf2Polynomial: the polynomial.
        """
        terms = []
        top = -1
        stripped = text.strip()
        if stripped and stripped != '0':
            for raw in stripped.split('+'):
                term = raw.strip()
                if term == '1':
                    terms.append(0)
                    continue
                mask = 0
                for factor in term.split('*'):
                    match = _TERM.match(factor.strip())
                    if match is None:
                        raise ValueError('Cannot parse term %r in %r'
                                         % (term, text))
                    idx = int(match.group(1))
                    top = max(top, idx)
                    mask |= 1 << idx
                terms.append(mask)
        elif not stripped:
            raise ValueError('Empty polynomial text')
        if arity is None:
            arity = top + 1
        return cls(arity, terms)

    def format(self):
        """
        Text form: monomials by decreasing degree, then by index tuple.
        """
        if not self.monomials:
            return '0'
        parts = []
        for m in sorted(self.monomials, key=_monomial_key):
            parts.append('*'.join('x%d' % i for i in bits_of(m)) or '1')
        return ' + '.join(parts)

    def degree(self):
        """
        Largest monomial size; the zero polynomial has degree 0.
        """
        return max([popcount(m) for m in self.monomials] or [0])

    def is_zero(self):
        return not self.monomials

    def linear_part(self):
        """
        The monomials of degree at most one, constant included.
        """
        return Gf2Polynomial(self.arity,
                             [m for m in self.monomials if popcount(m) <= 1])

    def quadratic_part(self):
        """
        The monomials of degree exactly two.
        """
        return Gf2Polynomial(self.arity,
                             [m for m in self.monomials if popcount(m) == 2])

    def evaluate(self, point):
        """
        Args:
            point (int or sequence): bit mask (bit i is x_i) or a
                sequence of arity bits.

        Returns:
            int: 0 or 1.
        """
        if not isinstance(point, int):
            bits = list(point)
            if len(bits) != self.arity:
                raise ValueError('Expected %d values, got %d'
                                 % (self.arity, len(bits)))
            point = mask_of(i for i, b in enumerate(bits) if b)
        value = 0
        for m in self.monomials:
            if point & m == m:
                value ^= 1
        return value

    def coefficients(self):
        """
        np.ndarray: uint8 coefficient vector of length 2**arity indexed
        by monomial mask.
        """
        coeffs = np.zeros(1 << self.arity, dtype=np.uint8)
        for m in self.monomials:
            coeffs[m] = 1
        return coeffs

    def truth_table(self):
        """
        np.ndarray: uint8 values at every point, indexed by point mask.
        """
        return moebius_transform(self.coefficients())

    @classmethod
    def from_truth_table(cls, table):
        """
        The algebraic normal form of a truth table of length 2**k.
        """
        coeffs = moebius_transform(table)
        arity = coeffs.shape[0].bit_length() - 1
        return cls(arity, [int(m) for m in np.flatnonzero(coeffs)])

    def restrict(self, i, value):
        """
        Substitute x_i := value and renumber the later variables down.

        Args:
            i (int): variable index.
            value (int): 0 or 1.

        Returns:
            Gf2Polynomial: polynomial of arity ``arity - 1``.
        """
        if i < 0 or i >= self.arity:
            raise ValueError('Variable x%d outside x0..x%d'
                             % (i, self.arity - 1))
        low = full_mask(i)
        terms = []
        for m in self.monomials:
            if m >> i & 1:
                if not value:
                    continue
                m ^= 1 << i
            terms.append((m & low) | (m >> (i + 1) << i))
        return Gf2Polynomial(self.arity - 1, terms)

    def extend(self, arity):
        """
        The same polynomial viewed in more variables.
        """
        if arity < self.arity:
            raise ValueError('Cannot shrink arity %d to %d'
                             % (self.arity, arity))
        return Gf2Polynomial(arity, self.monomials)

    def _check_arity(self, other):
        if not isinstance(other, Gf2Polynomial):
            return NotImplemented
        if other.arity != self.arity:
            raise ValueError('Arity mismatch: %d vs %d'
                             % (self.arity, other.arity))
        return None

    def __add__(self, other):
        bad = self._check_arity(other)
        if bad is not None:
            return bad
        return Gf2Polynomial(self.arity, self.monomials ^ other.monomials)

    __sub__ = __add__

    def __mul__(self, other):
        bad = self._check_arity(other)
        if bad is not None:
            return bad
        terms = set()
        for a in self.monomials:
            for b in other.monomials:
                terms ^= {a | b}
        return Gf2Polynomial(self.arity, terms)

    def __eq__(self, other):
        if not isinstance(other, Gf2Polynomial):
            return NotImplemented
        return self.arity == other.arity and self.monomials == other.monomials

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.arity, self.monomials))

    def __str__(self):
        return self.format()

    def __repr__(self):
        return 'Gf2Polynomial(arity=%d, %r)' % (self.arity, self.format())
