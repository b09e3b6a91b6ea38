"""Pure-Python Keccak-256 fallback (original padding byte 0x01).

Slow path only; the C extension in _keccak.c is preferred.  Both are
checked against the same published vectors in the test suite.
"""

_RC = (
    0x0000000000000001, 0x0000000000008082, 0x800000000000808A,
    0x8000000080008000, 0x000000000000808B, 0x0000000080000001,
    0x8000000080008081, 0x8000000000008009, 0x000000000000008A,
    0x0000000000000088, 0x0000000080008009, 0x000000008000000A,
    0x000000008000808B, 0x800000000000008B, 0x8000000000008089,
    0x8000000000008003, 0x8000000000008002, 0x8000000000000080,
    0x000000000000800A, 0x800000008000000A, 0x8000000080008081,
    0x8000000000008080, 0x0000000080000001, 0x8000000080008008,
)
# rotation offsets indexed by lane = x + 5*y
_RHO = (
    0, 1, 62, 28, 27, 36, 44, 6, 55, 20, 3, 10, 43,
    25, 39, 41, 45, 15, 21, 8, 18, 2, 61, 56, 14,
)
_MASK = (1 << 64) - 1
_RATE = 136

# (source lane, rotation) for each target lane of the combined rho+pi step
_PI = tuple(
    (x + 5 * y, _RHO[x + 5 * y])
    for i in range(25)
    for x in range(5)
    for y in range(5)
    if y + 5 * ((2 * x + 3 * y) % 5) == i
)


def _keccak_f(a: list) -> None:
    rc = _RC
    pi = _PI
    for rnd in range(24):
        c0 = a[0] ^ a[5] ^ a[10] ^ a[15] ^ a[20]
        c1 = a[1] ^ a[6] ^ a[11] ^ a[16] ^ a[21]
        c2 = a[2] ^ a[7] ^ a[12] ^ a[17] ^ a[22]
        c3 = a[3] ^ a[8] ^ a[13] ^ a[18] ^ a[23]
        c4 = a[4] ^ a[9] ^ a[14] ^ a[19] ^ a[24]
        d = (
            c4 ^ (((c1 << 1) | (c1 >> 63)) & _MASK),
            c0 ^ (((c2 << 1) | (c2 >> 63)) & _MASK),
            c1 ^ (((c3 << 1) | (c3 >> 63)) & _MASK),
            c2 ^ (((c4 << 1) | (c4 >> 63)) & _MASK),
            c3 ^ (((c0 << 1) | (c0 >> 63)) & _MASK),
        )
        for i in range(25):
            a[i] ^= d[i % 5]
        b = [0] * 25
        for i in range(25):
            src, rot = pi[i]
            v = a[src]
            b[i] = ((v << rot) | (v >> (64 - rot))) & _MASK if rot else v
        for y in range(0, 25, 5):
            b0, b1, b2, b3, b4 = b[y], b[y + 1], b[y + 2], b[y + 3], b[y + 4]
            a[y] = b0 ^ (~b1 & b2) & _MASK
            a[y + 1] = b1 ^ (~b2 & b3) & _MASK
            a[y + 2] = b2 ^ (~b3 & b4) & _MASK
            a[y + 3] = b3 ^ (~b4 & b0) & _MASK
            a[y + 4] = b4 ^ (~b0 & b1) & _MASK
        a[0] ^= rc[rnd]


def keccak256(data: bytes) -> bytes:
    a = [0] * 25
    padded = bytearray(data)
    padded.append(0x01)
    if len(padded) % _RATE:
        padded.extend(b"\x00" * (_RATE - len(padded) % _RATE))
    padded[-1] |= 0x80
    for off in range(0, len(padded), _RATE):
        for i in range(_RATE // 8):
            a[i] ^= int.from_bytes(padded[off + 8 * i : off + 8 * i + 8], "little")
        _keccak_f(a)
    return b"".join(a[i].to_bytes(8, "little") for i in range(4))
