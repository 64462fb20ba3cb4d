"""Built-in example algebras, operators and representations."""

from fractions import Fraction

from .algebra import abelian, from_leibniz, from_lie, make_algebra
from .linalg import Q, identity, qarray
from .representations import adjoint_representation

__all__ = [
    "ly2", "ly3", "so3", "lie2", "leibniz2", "ly2_operator", "ly3_operator",
    "adjoint", "corpus_pairs", "NAMES",
]


def ly2():
    """[e0, e1] = e0 and {e0, e1, e1} = e0."""
    return make_algebra(2, [(0, 1, [1, 0])], [(0, 1, 1, [1, 0])])


def ly3():
    """[e0, e1] = e2 and {e0, e1, e0} = e2."""
    return make_algebra(3, [(0, 1, [0, 0, 1])], [(0, 1, 0, [0, 0, 1])])


def so3():
    """Cross product on Q^3 viewed through {x,y,z} = [[x,y],z]."""
    return from_lie(3, [(0, 1, [0, 0, 1]), (1, 2, [1, 0, 0]), (0, 2, [0, -1, 0])])


def lie2():
    """Non-abelian 2-dim Lie algebra [e0, e1] = e0."""
    return from_lie(2, [(0, 1, [1, 0])])


def leibniz2():
    """Left Leibniz product with e1 * e0 = e0."""
    return from_leibniz(2, [(1, 0, [1, 0])])


def ly2_operator(k=1, k1=0):
    """The operator [[1, k1], [0, k]] on :func:`ly2`; modified Rota-Baxter for all k, k1."""
    return qarray([[1, k1], [0, k]])


def ly3_operator(k=1, k1=1, k2=0, k3=0):
    """[[0, k1, 0], [(1-k^2)/k1, k, 0], [k2, k3, k]] on :func:`ly3`.

    Modified Rota-Baxter exactly when k is 0, 1 or -1; other values of k are
    accepted here and fail the check.
    """
    k, k1, k2, k3 = Q(k), Q(k1), Q(k2), Q(k3)
    if k1 == 0:
        raise ValueError("k1 must be nonzero")
    return qarray([[0, k1, 0], [Fraction(1 - k * k) / k1, k, 0], [k2, k3, k]])


def adjoint(A, R=None):
    """Adjoint representation, with ``rv = R`` when an operator is given."""
    rep = adjoint_representation(A)
    return rep if R is None else rep.with_rv(R)


def corpus_pairs():
    """(name, algebra, operator) triples every suite runs on; all pass the checks."""
    A2, A3 = ly2(), ly3()
    return [
        ("ly2/id", A2, identity(2)),
        ("ly2/k=2,k1=3", A2, ly2_operator(2, 3)),
        ("ly2/k=0,k1=0", A2, ly2_operator(0, 0)),
        ("ly2/k=1/2,k1=-1", A2, ly2_operator(Fraction(1, 2), -1)),
        ("ly3/id", A3, identity(3)),
        ("ly3/k=0,k1=1", A3, ly3_operator(0, 1)),
        ("ly3/k=-1,k1=2,k2=1,k3=-1", A3, ly3_operator(-1, 2, 1, -1)),
        ("so3/id", so3(), identity(3)),
        ("abelian2", abelian(2), qarray([[1, 2], [3, 4]])),
    ]


NAMES = ("ly2", "ly3", "so3", "lie2", "leibniz2", "abelian",
         "ly2-op", "ly3-op", "identity", "ly2-adjoint", "ly3-adjoint")
