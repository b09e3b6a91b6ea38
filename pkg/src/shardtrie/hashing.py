"""Content hashing: Keccak-256 over canonical node encodings."""

import warnings

try:
    from shardtrie._keccak import keccak256
    HAVE_NATIVE_KECCAK = True
except ImportError:  # pragma: no cover - exercised only without the extension
    from shardtrie._keccak_py import keccak256
    HAVE_NATIVE_KECCAK = False
    warnings.warn(
        "shardtrie._keccak extension not built; using the slow pure-Python "
        "Keccak-256 fallback",
        RuntimeWarning,
    )

DIGEST_SIZE = 32

__all__ = ["keccak256", "DIGEST_SIZE", "HAVE_NATIVE_KECCAK"]
