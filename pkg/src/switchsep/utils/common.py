import os


def popcount(mask):
    """
    Number of set bits.

    Args:
        mask (int): non-negative integer.

    Returns:
        int: number of ones in the binary expansion of mask.
    """
    return bin(mask).count('1')


def bits_of(mask):
    """
    Positions of the set bits in increasing order.

    Args:
        mask (int): non-negative integer.

    Returns:
        list: sorted list of bit positions.
    """
    out = []
    pos = 0
    while mask:
        if mask & 1:
            out.append(pos)
        mask >>= 1
        pos += 1
    return out


def mask_of(positions):
    """
    Bit mask with the given positions set.

    Args:
        positions (iterable): non-negative integers.

    Returns:
        int: the bit mask.
    """
    mask = 0
    for p in positions:
        mask |= 1 << int(p)
    return mask


def full_mask(n):
    return (1 << n) - 1


def lowest_bit(mask):
    """
    Position of the least significant set bit of a nonzero mask.
    """
    return (mask & -mask).bit_length() - 1


def lexicographic_subsets(universe, first=None, min_size=1, max_size=None):
    """
    Enumerate subsets of ``universe`` as sorted tuples in lexicographic
    order, e.g. (0,) < (0, 1) < (0, 1, 2) < (0, 2) < (1,).

    Args:
        universe (list): sorted list of elements.
        first: if given, only subsets whose least element is ``first``
            are produced.
        min_size (int): smallest subset size to yield.
        max_size (int): largest subset size to yield (defaults to
            the universe size).

    Yields:
        tuple: the next subset.
    """
    universe = list(universe)
    if max_size is None:
        max_size = len(universe)

    def extend(prefix, start):
        if min_size <= len(prefix) <= max_size:
            yield prefix
        if len(prefix) >= max_size:
            return
        for idx in range(start, len(universe)):
            for s in extend(prefix + (universe[idx],), idx + 1):
                yield s

    if first is None:
        for idx in range(len(universe)):
            for s in extend((universe[idx],), idx + 1):
                yield s
    else:
        idx = universe.index(first)
        for s in extend((first,), idx + 1):
            yield s


def parse_int_list(text):
    """
    Parse a comma separated list of integers such as ``"0,3,5"``.

    Args:
        text (str): the list; empty string means the empty list.

    Returns:
        list: the integers in the given order.
    """
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(',')]
    except ValueError:
        raise ValueError('Expected a comma separated list of '
                         'integers, got: %r' % text)


def env_int(name, default):
    """
    Read an integer from the environment.

    Args:
        name (str): environment variable name.
        default (int): value used when the variable is unset or empty.

    Returns:
        int: the parsed value.
    """
    value = os.environ.get(name, '').strip()
    if not value:
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError('Environment variable %s must be an integer, '
                         'got: %r' % (name, value))
