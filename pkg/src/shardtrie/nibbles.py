"""Nibble paths and the compact hex-prefix encoding.

Keys traverse the trie one hex character (4-bit nibble) at a time.  Path
segments stored in extension and leaf nodes are serialized with the
hex-prefix scheme: the first nibble carries a leaf flag (bit 1) and an
odd-length flag (bit 0), so any nibble sequence round-trips losslessly.
"""

from __future__ import annotations

from shardtrie.errors import EncodingError

Nibbles = tuple[int, ...]


def bytes_to_nibbles(key: bytes) -> Nibbles:
    """Split a byte string into nibbles, high nibble first."""
    out = []
    for b in key:
        out.append(b >> 4)
        out.append(b & 0x0F)
    return tuple(out)


def nibbles_to_bytes(nibbles: Nibbles) -> bytes:
    if len(nibbles) % 2:
        raise ValueError("odd nibble count cannot form whole bytes")
    return bytes((nibbles[i] << 4) | nibbles[i + 1] for i in range(0, len(nibbles), 2))


def pack_hex_prefix(nibbles: Nibbles, is_leaf: bool) -> bytes:
    flag = 2 if is_leaf else 0
    if len(nibbles) % 2:
        head = [((flag | 1) << 4) | nibbles[0]]
        body = nibbles[1:]
    else:
        head = [flag << 4]
        body = nibbles
    return bytes(head) + nibbles_to_bytes(tuple(body))


def unpack_hex_prefix(data: bytes) -> tuple[Nibbles, bool]:
    """Inverse of pack_hex_prefix; raises EncodingError on malformed input."""
    if not data:
        raise EncodingError("empty hex-prefix string")
    flag = data[0] >> 4
    if flag > 3:
        raise EncodingError(f"bad hex-prefix flag nibble {flag:#x}")
    is_leaf = bool(flag & 2)
    rest = bytes_to_nibbles(data[1:])
    if flag & 1:
        return (data[0] & 0x0F,) + rest, is_leaf
    if data[0] & 0x0F:
        raise EncodingError("even-length hex-prefix with nonzero pad nibble")
    return rest, is_leaf


def common_prefix_len(a: Nibbles, b: Nibbles) -> int:
    n = min(len(a), len(b))
    for i in range(n):
        if a[i] != b[i]:
            return i
    return n
