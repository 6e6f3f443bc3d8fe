"""Frozen golden data: the 18x18 Gram block for m = 3 colors on two positions.

Every entry of that block is a power of q; the table stores the exponents,
row-major, in the canonical basis order.  Transcribed by hand from the
published block and used as the byte-exact reference for the enumeration
order, the operator engine, and the CSV/CLI formats.
"""

GOLDEN_M3_N2_EXPONENTS = [
    [0, 1, 1, 1, 2, 2, 1, 2, 2, 1, 2, 2, 2, 3, 3, 2, 3, 3],
    [1, 0, 1, 2, 1, 2, 2, 1, 2, 2, 1, 2, 3, 2, 3, 3, 2, 3],
    [1, 1, 0, 2, 2, 1, 2, 2, 1, 2, 2, 1, 3, 3, 2, 3, 3, 2],
    [1, 2, 2, 0, 1, 1, 1, 2, 2, 2, 3, 3, 1, 2, 2, 2, 3, 3],
    [2, 1, 2, 1, 0, 1, 2, 1, 2, 3, 2, 3, 2, 1, 2, 3, 2, 3],
    [2, 2, 1, 1, 1, 0, 2, 2, 1, 3, 3, 2, 2, 2, 1, 3, 3, 2],
    [1, 2, 2, 1, 2, 2, 0, 1, 1, 2, 3, 3, 2, 3, 3, 1, 2, 2],
    [2, 1, 2, 2, 1, 2, 1, 0, 1, 3, 2, 3, 3, 2, 3, 2, 1, 2],
    [2, 2, 1, 2, 2, 1, 1, 1, 0, 3, 3, 2, 3, 3, 2, 2, 2, 1],
    [1, 2, 2, 2, 3, 3, 2, 3, 3, 0, 1, 1, 1, 2, 2, 1, 2, 2],
    [2, 1, 2, 3, 2, 3, 3, 2, 3, 1, 0, 1, 2, 1, 2, 2, 1, 2],
    [2, 2, 1, 3, 3, 2, 3, 3, 2, 1, 1, 0, 2, 2, 1, 2, 2, 1],
    [2, 3, 3, 1, 2, 2, 2, 3, 3, 1, 2, 2, 0, 1, 1, 1, 2, 2],
    [3, 2, 3, 2, 1, 2, 3, 2, 3, 2, 1, 2, 1, 0, 1, 2, 1, 2],
    [3, 3, 2, 2, 2, 1, 3, 3, 2, 2, 2, 1, 1, 1, 0, 2, 2, 1],
    [2, 3, 3, 2, 3, 3, 1, 2, 2, 1, 2, 2, 1, 2, 2, 0, 1, 1],
    [3, 2, 3, 3, 2, 3, 2, 1, 2, 2, 1, 2, 2, 1, 2, 1, 0, 1],
    [3, 3, 2, 3, 3, 2, 2, 2, 1, 2, 2, 1, 2, 2, 1, 1, 1, 0],
]
