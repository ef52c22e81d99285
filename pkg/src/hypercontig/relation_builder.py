"""Three-term contiguous relations between arbitrary contiguous 2F1's."""

from __future__ import annotations

from .errors import DegenerateRelationError
from .gauss_core import ContigRelation, apply_shift, as_shift, eliminate
from .pq_engine import pq, pq_det_closed


def _prepare(s1, s2, s3):
    s1, s2, s3 = as_shift(s1), as_shift(s2), as_shift(s3)
    if len({s1, s2, s3}) != 3:
        raise ValueError(f"shifts must be pairwise distinct: {s1}, {s2}, {s3}")
    return s1, s2, s3


def _finish(terms, s1):
    # translate back: coefficients pick up S^(s1), shifts move by s1
    raw = [(s + s1, apply_shift(c, s1)) for s, c in terms]
    if all(c.is_zero() for _, c in raw):
        raise DegenerateRelationError("all three coefficients vanish")
    return ContigRelation.normalized(raw)


def three_term(s1, s2, s3, method: str = "auto") -> ContigRelation:
    """Normalized relation between F at ``s1``, ``s2`` and ``s3``.

    ``s1`` is moved to the origin, the basis function ``F(a+1)`` is
    eliminated between the expansions of the other two, and the result is
    shifted back.
    """
    s1, s2, s3 = _prepare(s1, s2, s3)
    t2, t3 = s2 - s1, s3 - s1
    v2, v3 = pq(t2, method), pq(t3, method)
    return _finish(eliminate(t2, (v2.p, v2.q), t3, (v3.p, v3.q), origin=s1 - s1), s1)


def three_term_det(s1, s2, s3, method: str = "auto") -> ContigRelation:
    """Like :func:`three_term`, with the ``s1`` coefficient taken from the
    closed-form determinant, so every coefficient is linear in Q's."""
    s1, s2, s3 = _prepare(s1, s2, s3)
    t2, t3 = s2 - s1, s3 - s1
    q2, q3 = pq(t2, method).q, pq(t3, method).q
    terms = ((t2, q3), (t3, -q2), (s1 - s1, -pq_det_closed(t2, t3, method)))
    return _finish(terms, s1)
