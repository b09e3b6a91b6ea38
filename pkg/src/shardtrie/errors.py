"""Exception types shared across the package."""


class ShardTrieError(Exception):
    """Base class for all package errors."""


class EncodingError(ShardTrieError):
    """Bytes that do not decode as a canonical node or frame."""


class NodeNotResident(ShardTrieError):
    """A traversal hit a hash stub that no resolver could expand.

    Carries the digest of the missing node so the caller can fetch it.
    """

    def __init__(self, digest: bytes):
        super().__init__(f"node not resident: {digest.hex()}")
        self.digest = digest


class TxClosed(ShardTrieError):
    """Operation on a transaction that already committed or aborted."""


class ShardUnavailable(ShardTrieError):
    """A storage shard could not be reached."""


class BadShardData(ShardTrieError):
    """A shard response failed verification and was discarded."""


class ShardRejection(ShardTrieError):
    """A shard service rejected a request; `code` is the wire error code."""

    def __init__(self, code: str, message: str = ""):
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code


class WireError(ShardTrieError):
    """Malformed frame or message on the shard wire protocol."""
