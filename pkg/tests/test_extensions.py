import random
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

import oracle
from lyt import (
    CheckFailed, ExtensionCocycle, TotalCochain2, adjoint_mrb_representation, check_ly_axioms,
    check_modified_rb, cocycle_from_section, d1, extension_from_cocycle, extensions_equivalent,
    matrix_of, sections_cohomologous, semidirect_product,
)
from lyt.cohomology import cocycle_basis, ly_extra_conditions
from lyt.corpus import ly2, ly2_operator, ly3
from lyt.deformations import ENTRY_SET
from lyt.extensions import canonical_section
from lyt.linalg import identity, is_zero, matmul, qarray, solve, zeros

from conftest import CORPUS

CORPUS_BY_NAME = {name: (A, R) for name, A, R in CORPUS}


def same(a, b):
    a, b = np.asarray(a), np.asarray(b)
    return a.shape == b.shape and bool(np.all(a == b))


def cocycle(vec, n, m):
    return ExtensionCocycle.from_total(TotalCochain2.from_vector(vec, n, m))


def extendable(A, R, rep):
    """Kernel basis vectors of d2 whose twisted brackets also meet the cyclic axioms."""
    out = []
    for vec in cocycle_basis("d2", A, R, rep):
        c = TotalCochain2.from_vector(vec, A.dim, rep.dim_v)
        first, second = ly_extra_conditions(A, rep, c.ly)
        if is_zero(first) and is_zero(second):
            out.append(vec)
    return out


def random_section(rng, n, m):
    s = canonical_section(n, m)
    s[n:, :] = qarray([[rng.choice(ENTRY_SET) for _ in range(n)] for _ in range(m)])
    return s


def test_zero_cocycle_gives_the_semidirect_product(pair):
    _, A, R = pair
    rep = adjoint_mrb_representation(A, R)
    ext = extension_from_cocycle(A, R, rep, ExtensionCocycle.zero(A.dim, A.dim))
    semi = semidirect_product(A, R, rep)
    assert ext.total.algebra == semi.algebra
    assert same(ext.total.operator, semi.operator)


def test_twisted_brackets_match_their_definition():
    A, R = ly2(), ly2_operator(2, 3)
    rep = adjoint_mrb_representation(A, R)
    vec = extendable(A, R, rep)[0]
    c = cocycle(vec, 2, 2)
    ext = extension_from_cocycle(A, R, rep, c)
    alg = oracle.Alg(A)
    total = oracle.Alg(ext.total.algebra)
    rng = random.Random(3)
    for _ in range(10):
        x, y, z, u, v, w = (tuple(Fraction(rng.choice(ENTRY_SET)) for _ in range(2)) for _ in range(6))
        nu = tuple(np.einsum("i,j,iju->u", np.array(x, dtype=object), np.array(y, dtype=object), c.nu))
        got = total.br(x + u, y + v)
        assert got[:2] == alg.br(x, y)
        assert got[2:] == oracle.add(alg.br(x, v), oracle.neg(alg.br(y, u)), nu)
        psi = tuple(np.einsum("i,j,k,ijku->u", *(np.array(a, dtype=object) for a in (x, y, z)), c.psi))
        got3 = total.tr(x + u, y + v, z + w)
        # theta(y,z)u = {u,y,z}, theta(x,z)v = {v,x,z}, D(x,y)w = {x,y,w}
        tail = oracle.add(alg.tr(u, y, z), oracle.neg(alg.tr(v, x, z)), alg.tr(x, y, w), psi)
        assert got3[:2] == alg.tr(x, y, z) and got3[2:] == tail
    op = ext.total.operator
    assert same(op[:2, :2], R) and same(op[2:, :2], c.chi) and same(op[2:, 2:], R)
    assert not any(op[:2, 2:].flat)


def test_round_trip_through_the_canonical_section(pair):
    _, A, R = pair
    n = A.dim
    rep = adjoint_mrb_representation(A, R)
    for vec in extendable(A, R, rep)[:6]:
        c = cocycle(vec, n, n)
        ext = extension_from_cocycle(A, R, rep, c)
        got_rep, got_c = cocycle_from_section(ext, canonical_section(n, n))
        assert got_rep == rep
        assert got_c == c
        assert check_ly_axioms(ext.total.algebra).passed
        assert check_modified_rb(ext.total.algebra, ext.total.operator).passed


def test_semidirect_product_has_zero_cocycle():
    A, R = ly3(), identity(3)
    rep = adjoint_mrb_representation(A, R)
    ext = extension_from_cocycle(A, R, rep, ExtensionCocycle.zero(3, 3))
    got_rep, got_c = cocycle_from_section(ext, canonical_section(3, 3))
    assert got_rep == rep and got_c == ExtensionCocycle.zero(3, 3)


def test_non_cocycle_is_refused():
    A, R = ly2(), ly2_operator(2, 3)
    rep = adjoint_mrb_representation(A, R)
    M = matrix_of("d2", A, R, rep)
    for k in range(M.shape[1]):
        if any(M[:, k]):
            vec = zeros(M.shape[1])
            vec[k] = 1
            break
    with pytest.raises(CheckFailed, match="not a 2-cocycle") as info:
        extension_from_cocycle(A, R, rep, cocycle(vec, 2, 2))
    assert info.value.report.failed_axioms()


def test_cocycle_breaking_the_cyclic_axioms_is_refused():
    A, R = ly3(), identity(3)
    rep = adjoint_mrb_representation(A, R)
    good = {tuple(v) for v in extendable(A, R, rep)}
    basis = cocycle_basis("d2", A, R, rep)
    bad = [v for v in basis if tuple(v) not in good]
    assert len(basis) == 22 and len(bad) == 4
    for vec in bad:
        with pytest.raises(CheckFailed) as info:
            extension_from_cocycle(A, R, rep, cocycle(vec, 3, 3))
        assert info.value.report.failed_axioms() == ["LY3"]


def test_section_must_split_the_projection():
    A, R = ly2(), identity(2)
    rep = adjoint_mrb_representation(A, R)
    ext = extension_from_cocycle(A, R, rep, ExtensionCocycle.zero(2, 2))
    with pytest.raises(ValueError):
        cocycle_from_section(ext, 2 * canonical_section(2, 2))


def test_coboundary_twist_is_equivalent_to_the_semidirect_product():
    A, R = ly2(), ly2_operator(Fraction(1, 2), -1)
    rep = adjoint_mrb_representation(A, R)
    lam = qarray([[1, -2], [Fraction(1, 2), 3]])
    c = ExtensionCocycle.from_total(d1(A, R, rep, lam))
    extension_from_cocycle(A, R, rep, c)
    phi = extensions_equivalent(A, R, rep, c, ExtensionCocycle.zero(2, 2))
    assert phi is not None
    assert same(phi[:2, :2], identity(2)) and same(phi[2:, 2:], identity(2))
    assert not any(phi[:2, 2:].flat)
    assert same(d1(A, R, rep, phi[2:, :2]).to_vector(), c.to_total().to_vector())


def test_equal_cocycles_are_related_by_the_identity():
    A, R = ly2(), ly2_operator(2, 3)
    rep = adjoint_mrb_representation(A, R)
    c = cocycle(extendable(A, R, rep)[1], 2, 2)
    assert same(extensions_equivalent(A, R, rep, c, c), identity(4))


@pytest.mark.parametrize("name", [name for name, _, _ in CORPUS])
def test_sections_give_cohomologous_cocycles(name):
    A, R = CORPUS_BY_NAME[name]
    n = A.dim
    rep = adjoint_mrb_representation(A, R)
    vec = extendable(A, R, rep)[-1]
    ext = extension_from_cocycle(A, R, rep, cocycle(vec, n, n))
    rng = random.Random(name)
    for _ in range(5):
        s1, s2 = random_section(rng, n, n), random_section(rng, n, n)
        lam = sections_cohomologous(ext, s1, s2)
        assert same(lam, s1[n:] - s2[n:])
        _, c1 = cocycle_from_section(ext, s1)
        _, c2 = cocycle_from_section(ext, s2)
        diff = c1.to_total().to_vector() - c2.to_total().to_vector()
        assert same(diff, d1(A, R, rep, lam).to_vector())


def test_shifting_a_section_by_the_ideal_recovers_the_shift():
    A, R = ly2(), ly2_operator(2, 3)
    rep = adjoint_mrb_representation(A, R)
    ext = extension_from_cocycle(A, R, rep, cocycle(extendable(A, R, rep)[0], 2, 2))
    s1 = canonical_section(2, 2)
    lam0 = qarray([[3, -1], [Fraction(2, 3), 0]])
    s2 = s1 + matmul(ext.inclusion, lam0)
    assert same(sections_cohomologous(ext, s2, s1), lam0)
    assert is_zero(sections_cohomologous(ext, s1, s1))


def test_equivalence_partitions_like_second_cohomology():
    A, R = ly2(), ly2_operator(2, 3)
    rep = adjoint_mrb_representation(A, R)
    M1 = matrix_of("d1", A, R, rep)
    kernel = extendable(A, R, rep)
    assert len(kernel) == 5
    rng = random.Random(0)
    cocycles = []
    for vec in kernel:
        for _ in range(2):
            lam = qarray([[rng.choice(ENTRY_SET) for _ in range(2)] for _ in range(2)])
            cocycles.append(vec + d1(A, R, rep, lam).to_vector())
    for a, b in combinations(range(len(cocycles)), 2):
        same_class = solve(M1, cocycles[a] - cocycles[b]) is not None
        phi = extensions_equivalent(A, R, rep, cocycle(cocycles[a], 2, 2), cocycle(cocycles[b], 2, 2))
        assert (phi is not None) == same_class


def test_equivalence_refuses_non_cocycles():
    A, R = ly2(), identity(2)
    rep = adjoint_mrb_representation(A, R)
    bad = ExtensionCocycle.zero(2, 2)
    nu = zeros((2, 2, 2))
    nu[0, 1, 1], nu[1, 0, 1] = 1, -1
    bad = ExtensionCocycle(nu, bad.psi, bad.chi)
    with pytest.raises(CheckFailed):
        extensions_equivalent(A, R, rep, bad, ExtensionCocycle.zero(2, 2))
