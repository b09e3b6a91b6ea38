"""Canonical recursive length-prefix serialization.

Items are byte strings or (nested) lists of items.  The encoding is the
interchange format hashed for node identity and must stay bit-exact across
processes, so the decoder enforces canonical form: minimal length prefixes,
minimal single-byte strings, and no trailing bytes.

`Raw` wraps bytes that are already a complete encoded item and are spliced
verbatim; the trie uses it to embed child nodes whose encoding is shorter
than a digest.
"""

from __future__ import annotations

from shardtrie.errors import EncodingError


class Raw:
    """A pre-encoded item inserted into an outer encoding as-is."""

    __slots__ = ("data",)

    def __init__(self, data: bytes):
        self.data = data


def encode_uint(n: int) -> bytes:
    """Minimal big-endian byte string; zero encodes as empty."""
    if n < 0:
        raise ValueError("negative integers are not encodable")
    return n.to_bytes((n.bit_length() + 7) // 8, "big")


def decode_uint(data: bytes) -> int:
    if data and data[0] == 0:
        raise EncodingError("non-minimal integer encoding")
    return int.from_bytes(data, "big")


def _encode_length(length: int, short_base: int) -> bytes:
    if length <= 55:
        return bytes([short_base + length])
    len_bytes = encode_uint(length)
    return bytes([short_base + 55 + len(len_bytes)]) + len_bytes


def encode(item) -> bytes:
    if isinstance(item, Raw):
        return item.data
    if isinstance(item, (bytes, bytearray, memoryview)):
        data = bytes(item)
        if len(data) == 1 and data[0] < 0x80:
            return data
        return _encode_length(len(data), 0x80) + data
    if isinstance(item, (list, tuple)):
        payload = b"".join(encode(sub) for sub in item)
        return _encode_length(len(payload), 0xC0) + payload
    raise TypeError(f"cannot encode {type(item).__name__}")


def _decode_item(data: bytes, pos: int):
    """Decode one item at `pos`; returns (value, next_pos)."""
    if pos >= len(data):
        raise EncodingError("truncated item")
    tag = data[pos]
    if tag < 0x80:
        return bytes([tag]), pos + 1
    if tag <= 0xBF:
        if tag <= 0xB7:
            length, start = tag - 0x80, pos + 1
        else:
            n = tag - 0xB7
            start = pos + 1 + n
            if start > len(data):
                raise EncodingError("truncated length prefix")
            if data[pos + 1] == 0:
                raise EncodingError("length prefix with leading zero")
            length = int.from_bytes(data[pos + 1 : start], "big")
            if length <= 55:
                raise EncodingError("non-minimal long string length")
        end = start + length
        if end > len(data):
            raise EncodingError("truncated string payload")
        value = data[start:end]
        if length == 1 and value[0] < 0x80:
            raise EncodingError("non-minimal single-byte string")
        return value, end
    if tag <= 0xF7:
        length, start = tag - 0xC0, pos + 1
    else:
        n = tag - 0xF7
        start = pos + 1 + n
        if start > len(data):
            raise EncodingError("truncated length prefix")
        if data[pos + 1] == 0:
            raise EncodingError("length prefix with leading zero")
        length = int.from_bytes(data[pos + 1 : start], "big")
        if length <= 55:
            raise EncodingError("non-minimal long list length")
    end = start + length
    if end > len(data):
        raise EncodingError("truncated list payload")
    items = []
    cur = start
    while cur < end:
        value, cur = _decode_item(data, cur)
        items.append(value)
    if cur != end:
        raise EncodingError("list payload overrun")
    return items, end


def decode(data: bytes):
    """Decode a complete item; rejects trailing bytes."""
    value, end = _decode_item(bytes(data), 0)
    if end != len(data):
        raise EncodingError("trailing bytes after item")
    return value
