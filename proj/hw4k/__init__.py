"""2-factorizations of K_n minus a perfect matching into Hamilton cycles and
C_4k-factors, with an independent certificate verifier."""

import json

from ._hw4k import (
    UnsupportedError,
    construct_hamilton_only_json,
    construct_json,
    supported,
    to_json,
    to_text,
    verify,
)

__all__ = [
    "UnsupportedError",
    "construct",
    "construct_hamilton_only",
    "construct_hamilton_only_json",
    "construct_json",
    "supported",
    "to_json",
    "to_text",
    "verify",
    "verify_ok",
]


def construct(k: int, t: int, r: int) -> dict:
    """Certificate for HW(n; r, s; n, 4k) with n = 4kt, as a dict."""
    return json.loads(construct_json(k, t, r))


def construct_hamilton_only(n: int) -> dict:
    """Hamilton-decomposition certificate (s = 0) for any n >= 3, as a dict."""
    return json.loads(construct_hamilton_only_json(n))


def verify_ok(certificate) -> bool:
    """True iff every verifier check passes. Accepts a dict or a serialized
    certificate string (JSON or text format)."""
    if isinstance(certificate, dict):
        certificate = json.dumps(certificate)
    return all(check["pass"] for check in verify(certificate))
