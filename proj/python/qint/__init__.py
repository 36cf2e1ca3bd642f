"""Exact symbolic arithmetic for quantum integers.

Thin wrapper over the native ``_qint`` extension. Functions that produce
structured reports return parsed JSON (dicts); scalar helpers return
strings because values are exact big rationals.
"""

import json as _json

from ._qint import (
    QuantumNumber,
    evaluate,
    genfun,
    limit_at_one,
    q_add,
    q_int,
    q_mul,
    q_negate,
    q_rational,
    q_reciprocal,
)
from . import _qint as _native

__all__ = [
    "QuantumNumber",
    "classify",
    "decompose_add",
    "decompose_mul",
    "direct_sum",
    "evaluate",
    "genfun",
    "limit_at_one",
    "multiterm_product",
    "multiterm_sum",
    "q_add",
    "q_int",
    "q_mul",
    "q_negate",
    "q_rational",
    "q_reciprocal",
    "verify_afe",
    "verify_genfun",
    "verify_mfe",
    "verify_ring",
]


def verify_ring(bound=10):
    """Check the ring isomorphism and ring laws for all |m|, |n| <= bound."""
    return _json.loads(_native.verify_ring_json(bound))


def verify_afe(h, n=20):
    """Check the additive functional equation on f_k = h * [k]_q, k <= n."""
    return _json.loads(_native.verify_afe_json(h, n))


def verify_mfe(h, n=20):
    """Check the multiplicative functional equation on f_k = h * [k]_q."""
    return _json.loads(_native.verify_mfe_json(h, n))


def classify(h, n=20):
    """Joint-solution trichotomy for f_k = h * [k]_q: ZERO, QUANTUM or not."""
    return _json.loads(_native.classify_json(h, n))


def multiterm_sum(ms):
    """Verify the r-fold quantum addition identity for the tuple ms."""
    return _json.loads(_native.multiterm_sum_json(list(ms)))


def multiterm_product(ms):
    """Verify the r-fold quantum multiplication identity for the tuple ms."""
    return _json.loads(_native.multiterm_product_json(list(ms)))


def decompose_add(ms):
    """Partition the interval [m_1+...+m_r] into translated intervals."""
    return _json.loads(_native.decompose_add_json(list(ms)))


def decompose_mul(ms):
    """Decompose the interval [m_1*...*m_r] as a direct sum of dilations."""
    return _json.loads(_native.decompose_mul_json(list(ms)))


def direct_sum(a, b):
    """Unique-representation test for A + B."""
    return _json.loads(_native.direct_sum_json(list(a), list(b)))


def verify_genfun(a, b, m):
    """Check the generating-function identities for the sets A, B and scale m."""
    return _json.loads(_native.verify_genfun_json(list(a), list(b), m))
