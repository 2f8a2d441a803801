# coding: utf-8
#
# Copyright (c) 2026 RAMANUJAN Authors (see AUTHORS.md).
#
# SPDX-License-Identifier: BSD-3-Clause.

"""Symplectic linear algebra over the rationals.

A family of vectors is a matrix whose columns are the vectors. The pairing of
a :class:`SymplecticSpace` is ``<u, v> = u.T * gram * v``. Bases are acted on
from the right: ``b . p`` has basis matrix ``[omega | eta] * p``.

All arithmetic is done on dense :class:`~sympy.polys.matrices.DomainMatrix`
objects over ``QQ``. Functions accept either sympy matrices or domain
matrices; results meant for callers (blocks, group elements, pairing
matrices) come back as sympy matrices.
"""

import logging
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, NamedTuple, Tuple

from sympy import ImmutableMatrix, Matrix, Rational
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .model import Group

logger = logging.getLogger("ramanujan")


def as_qq_matrix(M) -> DomainMatrix:
    """A dense domain matrix over QQ with the entries of ``M``."""
    if isinstance(M, DomainMatrix):
        if M.domain == QQ and M.rep.fmt == "dense":
            return M
        return M.convert_to(QQ).to_dense()
    M = Matrix(M)
    if 0 in M.shape:
        return DomainMatrix.zeros(M.shape, QQ).to_dense()
    return DomainMatrix.from_Matrix(M).convert_to(QQ).to_dense()


def _equal(A: DomainMatrix, B: DomainMatrix) -> bool:
    if A.shape != B.shape:
        return False
    if 0 in A.shape:
        return True
    return (A - B).is_zero_matrix


def _eye(n: int) -> DomainMatrix:
    return DomainMatrix.eye(n, QQ).to_dense()


def _zeros(rows: int, cols: int) -> DomainMatrix:
    return DomainMatrix.zeros((rows, cols), QQ).to_dense()


def _block(A: DomainMatrix, B: DomainMatrix, C: DomainMatrix, D: DomainMatrix) -> DomainMatrix:
    return A.hstack(B).vstack(C.hstack(D))


@lru_cache(maxsize=None)
def _standard_form(g: int) -> DomainMatrix:
    eye, zero = _eye(g), _zeros(g, g)
    return _block(zero, eye, -eye, zero)


def standard_gram(g: int) -> ImmutableMatrix:
    """The standard form with <e_i, f_j> = delta_ij, i.e. [[0, 1], [-1, 0]] blocks."""
    if g < 1:
        raise ValueError("g must be positive")
    return ImmutableMatrix(_standard_form(g).to_Matrix())


@dataclass(frozen=True)
class SymplecticSpace:
    """A 2g-dimensional rational vector space with a symplectic form.

    Parameters
    ----------
    g : int
        Half the dimension.
    gram : Matrix, optional
        The Gram matrix of the pairing in the coordinate basis; it must be
        antisymmetric and invertible. Defaults to :func:`standard_gram`.
    """

    g: int
    gram: ImmutableMatrix = None
    form: DomainMatrix = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.g < 1:
            raise ValueError("g must be positive")
        form = _standard_form(self.g) if self.gram is None else as_qq_matrix(self.gram)
        if form.shape != (2 * self.g, 2 * self.g):
            raise ValueError(f"gram matrix must be {2 * self.g}x{2 * self.g}")
        if not _equal(form.transpose(), -form):
            raise ValueError("gram matrix is not alternating")
        if form.det() == 0:
            raise ValueError("gram matrix is degenerate")
        object.__setattr__(self, "form", form)
        object.__setattr__(self, "gram", ImmutableMatrix(form.to_Matrix()))

    @property
    def dim(self) -> int:
        return 2 * self.g

    def pair(self, us: DomainMatrix, vs: DomainMatrix) -> DomainMatrix:
        """The domain matrix (<u_i, v_j>) for domain matrices of columns."""
        return us.transpose() * self.form * vs

    def pairing(self, u, v) -> Rational:
        """<u, v> for two column vectors."""
        return self.pair(as_qq_matrix(u), as_qq_matrix(v)).getitem_sympy(0, 0)

    def pairing_matrix(self, us, vs) -> Matrix:
        """The matrix (<u_i, v_j>) for the columns of ``us`` and ``vs``."""
        return self.pair(as_qq_matrix(us), as_qq_matrix(vs)).to_Matrix()


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace stored by its reduced row-echelon basis.

    The rows of :attr:`echelon` span the subspace, so equal subspaces have
    equal echelon matrices. Use :meth:`from_vectors` to build one from any
    spanning family of columns.
    """

    echelon: DomainMatrix

    @classmethod
    def from_rows(cls, rows: DomainMatrix, independent: bool = False) -> "Subspace":
        """Span of the rows of a domain matrix."""
        n = rows.shape[1]
        if rows.shape[0] == 0:
            return cls(_zeros(0, n))
        reduced, pivots = rows.rref()
        if independent and len(pivots) < rows.shape[0]:
            raise ValueError("dependent spanning set")
        if not pivots:
            return cls(_zeros(0, n))
        return cls(as_qq_matrix(reduced[: len(pivots), :]))

    @classmethod
    def from_vectors(cls, vectors, independent: bool = True) -> "Subspace":
        """Span of the columns of ``vectors``.

        Raises
        ------
        ValueError
            if ``independent`` is True and the columns are linearly dependent
        """
        return cls.from_rows(as_qq_matrix(vectors).transpose(), independent)

    @property
    def dim(self) -> int:
        return self.echelon.shape[0]

    @property
    def ambient_dim(self) -> int:
        return self.echelon.shape[1]

    @property
    def columns(self) -> DomainMatrix:
        return self.echelon.transpose()

    @property
    def basis(self) -> Matrix:
        """The basis vectors as the columns of a sympy matrix."""
        return self.columns.to_Matrix()

    def contains_row(self, row: DomainMatrix) -> bool:
        if self.dim == 0:
            return row.is_zero_matrix
        return self.echelon.vstack(row).rank() == self.dim

    def contains(self, v) -> bool:
        return self.contains_row(as_qq_matrix(v).transpose())

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return _equal(self.echelon, other.echelon)


def _as_subspace(subspace) -> Subspace:
    if isinstance(subspace, Subspace):
        return subspace
    return Subspace.from_vectors(subspace)


def is_isotropic(space: SymplecticSpace, subspace) -> bool:
    """Whether the pairing vanishes identically on the subspace."""
    sub = _as_subspace(subspace)
    if sub.dim == 0:
        return True
    return space.pair(sub.columns, sub.columns).is_zero_matrix


def is_lagrangian(space: SymplecticSpace, subspace) -> bool:
    """Isotropic of dimension g."""
    sub = _as_subspace(subspace)
    return sub.dim == space.g and is_isotropic(space, sub)


def _is_lagrangian_frame(space: SymplecticSpace, F: DomainMatrix) -> bool:
    return (
        F.shape == (space.dim, space.g)
        and F.rank() == space.g
        and space.pair(F, F).is_zero_matrix
    )


def annihilator(space: SymplecticSpace, subspace) -> Subspace:
    """The subspace of vectors pairing to zero with all of ``subspace``."""
    sub = _as_subspace(subspace)
    if sub.dim == 0:
        return Subspace(_eye(space.dim))
    return Subspace.from_rows(as_qq_matrix((sub.echelon * space.form).nullspace()))


def find_lagrangian(space: SymplecticSpace) -> Subspace:
    """Grow an isotropic subspace one vector at a time until it is Lagrangian.

    Each step adds the first basis vector of the current annihilator that is
    not yet in the span; the annihilator of an isotropic subspace of
    dimension below g is strictly larger than the subspace.
    """
    current = Subspace(_zeros(0, space.dim))
    while current.dim < space.g:
        candidates = annihilator(space, current).echelon
        for k in range(candidates.shape[0]):
            v = candidates[k, :]
            if not current.contains_row(v):
                rows = v if current.dim == 0 else current.echelon.vstack(v)
                current = Subspace.from_rows(rows)
                break
    logger.debug(f"Found Lagrangian of dimension {current.dim}")
    return current


@dataclass(frozen=True, eq=False)
class SymplecticBasis:
    """A symplectic basis (omega_1..omega_g, eta_1..eta_g).

    The blocks are 2g x g families of column vectors with <omega_i, eta_j> =
    delta_ij and all other pairings zero; construction validates this.
    """

    omega: DomainMatrix
    eta: DomainMatrix
    space: SymplecticSpace = None
    frame: DomainMatrix = field(default=None, init=False, repr=False)

    def __post_init__(self):
        omega = as_qq_matrix(self.omega)
        eta = as_qq_matrix(self.eta)
        space = self.space
        if space is None:
            space = SymplecticSpace(omega.shape[1])
        g = space.g
        if omega.shape != (2 * g, g) or eta.shape != (2 * g, g):
            raise ValueError("vectors do not form a symplectic basis")
        frame = omega.hstack(eta)
        if not _equal(space.pair(frame, frame), _standard_form(g)):
            raise ValueError("vectors do not form a symplectic basis")
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "frame", frame)

    @property
    def g(self) -> int:
        return self.space.g

    @property
    def omega_block(self) -> Matrix:
        return self.omega.to_Matrix()

    @property
    def eta_block(self) -> Matrix:
        return self.eta.to_Matrix()

    @property
    def matrix(self) -> Matrix:
        """The 2g x 2g matrix [omega | eta]."""
        return self.frame.to_Matrix()

    @classmethod
    def from_matrix(cls, matrix, space: SymplecticSpace = None) -> "SymplecticBasis":
        matrix = as_qq_matrix(matrix)
        g = matrix.shape[1] // 2
        return cls(matrix[:, :g], matrix[:, g:], space)

    def __eq__(self, other):
        if not isinstance(other, SymplecticBasis):
            return NotImplemented
        return self.space == other.space and _equal(self.frame, other.frame)


def standard_basis(g: int) -> SymplecticBasis:
    """(e_1..e_g, f_1..f_g) in the standard space."""
    return SymplecticBasis.from_matrix(_eye(2 * g), SymplecticSpace(g))


def _blocks(M: DomainMatrix):
    n, m = M.shape
    if n != m:
        raise ValueError("matrix is not square")
    if n % 2:
        raise ValueError("matrix has odd dimension")
    g = n // 2
    return M[:g, :g], M[:g, g:], M[g:, :g], M[g:, g:]


def is_symplectic_matrix(M) -> bool:
    """Block test AB^T = BA^T, CD^T = DC^T, AD^T - BC^T = 1."""
    A, B, C, D = _blocks(as_qq_matrix(M))
    At, Bt, Ct, Dt = (X.transpose() for X in (A, B, C, D))
    return (
        _equal(A * Bt, B * At)
        and _equal(C * Dt, D * Ct)
        and _equal(A * Dt - B * Ct, _eye(A.shape[0]))
    )


def is_siegel_parabolic(M) -> bool:
    """Symplectic with vanishing lower-left block."""
    M = as_qq_matrix(M)
    A, B, C, D = _blocks(M)
    return C.is_zero_matrix and is_symplectic_matrix(M)


def is_levi(M) -> bool:
    """Parabolic with vanishing upper-right block: diag(A, (A^T)^-1)."""
    M = as_qq_matrix(M)
    A, B, C, D = _blocks(M)
    return B.is_zero_matrix and is_siegel_parabolic(M)


_MEMBERSHIP = {
    Group.SP: is_symplectic_matrix,
    Group.P: is_siegel_parabolic,
    Group.L: is_levi,
}


@dataclass(frozen=True)
class GroupElement:
    """A matrix validated as a member of Sp_2g, P_g or L_g."""

    matrix: ImmutableMatrix
    group: Group = Group.SP
    element: DomainMatrix = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        group = self.group
        if not isinstance(group, Group):
            if isinstance(group, int):
                group = Group(group)
            elif isinstance(group, str):
                group = Group[group.upper().replace("-", "_")]
            else:
                raise TypeError(f"group cannot be of type {type(group)}")
        element = as_qq_matrix(self.matrix)
        if not _MEMBERSHIP[group](element):
            raise ValueError(f"matrix is not in {group.name}")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "element", element)
        object.__setattr__(self, "matrix", ImmutableMatrix(element.to_Matrix()))

    @property
    def g(self) -> int:
        return self.element.shape[0] // 2

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.element * other.element, min(self.group, other.group))


def act_parabolic(b: SymplecticBasis, p) -> SymplecticBasis:
    """The right action b . p = (omega A, omega B + eta D).

    Raises
    ------
    ValueError
        if ``p`` is not a Siegel parabolic matrix
    """
    matrix = p.element if isinstance(p, GroupElement) else as_qq_matrix(p)
    if not is_siegel_parabolic(matrix):
        raise ValueError("group element is not Siegel parabolic")
    return SymplecticBasis.from_matrix(b.frame * matrix, b.space)


def transition_parabolic(b1: SymplecticBasis, b2: SymplecticBasis) -> GroupElement:
    """The unique parabolic p with b1 . p = b2.

    Raises
    ------
    ValueError
        if the bases live in different spaces or their omega-blocks span
        different Lagrangians
    """
    if b1.space != b2.space:
        raise ValueError("bases live in different symplectic spaces")
    p = b1.frame.inv() * b2.frame
    if not p[b1.g :, : b1.g].is_zero_matrix:
        raise ValueError("omega-blocks span different Lagrangians")
    return GroupElement(p, Group.P)


def _strictly_lower(A: DomainMatrix) -> DomainMatrix:
    rows = A.to_list()
    n = len(rows)
    return DomainMatrix(
        [[rows[i][j] if i > j else QQ.zero for j in range(n)] for i in range(n)], (n, n), QQ
    )


def complete_to_symplectic(F, space: SymplecticSpace = None) -> SymplecticBasis:
    """Complete a Lagrangian frame F to a symplectic basis (F, eta).

    A dual lift X with <F_i, X_j> = delta_ij is corrected by
    ``eta = X + F B`` where B is the strictly lower-triangular part of the
    antisymmetric matrix (<X_i, X_j>).

    Raises
    ------
    ValueError
        if the columns of F are dependent or do not span an isotropic
        g-dimensional subspace
    """
    F = as_qq_matrix(F)
    if space is None:
        space = SymplecticSpace(F.shape[0] // 2)
    if F.shape != (space.dim, space.g):
        raise ValueError(f"expected {space.dim}x{space.g} frame, got {F.shape}")
    if F.rank() < F.shape[1]:
        raise ValueError("frame vectors are not independent")
    if not space.pair(F, F).is_zero_matrix:
        raise ValueError("frame does not span an isotropic subspace")
    M = F.transpose() * space.form
    X = M.transpose() * (M * M.transpose()).inv()
    B = _strictly_lower(space.pair(X, X))
    return SymplecticBasis(F, X + F * B, space)


def dual_lagrangian_basis(F, G, space: SymplecticSpace = None) -> SymplecticBasis:
    """The unique omega-block in span(F) making (omega, G) symplectic.

    Raises
    ------
    ValueError
        if either frame is not Lagrangian or the spans are not complementary
    """
    F = as_qq_matrix(F)
    G = as_qq_matrix(G)
    if space is None:
        space = SymplecticSpace(F.shape[0] // 2)
    if not _is_lagrangian_frame(space, F) or not _is_lagrangian_frame(space, G):
        raise ValueError("frames must span Lagrangian subspaces")
    K = space.pair(F, G)
    if K.det() == 0:
        raise ValueError("Lagrangian spans are not complementary")
    return SymplecticBasis(F * K.inv().transpose(), G, space)


class SymmetryCheck(NamedTuple):
    matrix: Matrix
    symmetric: bool


def sg_symmetry_check(alphas, b: SymplecticBasis) -> SymmetryCheck:
    """The pairing matrix (<alpha_i, eta_j>) and whether it is symmetric."""
    M = b.space.pair(as_qq_matrix(alphas), b.eta)
    return SymmetryCheck(M.to_Matrix(), _equal(M, M.transpose()))


def fiber_dimensions(b: SymplecticBasis) -> Tuple[int, int]:
    """Dimensions of the symmetric-pairing fibre and of its image.

    The fibre is the space of g-tuples (alpha_i) whose matrix
    (<alpha_i, eta_j>) is symmetric; it has dimension g(3g+1)/2 and maps onto
    the g(g+1)/2-dimensional space of symmetric matrices.
    """
    g = b.g
    n = 2 * g
    weights = (b.space.form * b.eta).transpose().to_list()
    pairing_rows = []
    for i in range(g):
        for j in range(g):
            row = [QQ.zero] * (n * g)
            row[i * n : (i + 1) * n] = weights[j]
            pairing_rows.append(row)
    pairing_map = DomainMatrix(pairing_rows, (g * g, n * g), QQ)
    constraints = [
        [a - c for a, c in zip(pairing_rows[i * g + j], pairing_rows[j * g + i])]
        for i in range(g)
        for j in range(i + 1, g)
    ]
    if constraints:
        fibre = DomainMatrix(constraints, (len(constraints), n * g), QQ).nullspace()
        fibre = as_qq_matrix(fibre).transpose()
    else:
        fibre = _eye(n * g)
    return fibre.shape[1], (pairing_map * fibre).rank()


def _random_rational(rng: random.Random, bound: int = 5):
    return QQ(rng.randint(-bound, bound), rng.randint(1, 3))


def _random_square(g: int, rng: random.Random) -> DomainMatrix:
    return DomainMatrix(
        [[_random_rational(rng) for _ in range(g)] for _ in range(g)], (g, g), QQ
    )


def _random_invertible(g: int, rng: random.Random) -> DomainMatrix:
    while True:
        M = _random_square(g, rng)
        if M.det() != 0:
            return M


def _random_symmetric(g: int, rng: random.Random) -> DomainMatrix:
    M = _random_square(g, rng)
    return M + M.transpose()


def _random_parabolic(g: int, rng: random.Random, levi: bool = False) -> DomainMatrix:
    A = _random_invertible(g, rng)
    D = A.transpose().inv()
    B = _zeros(g, g) if levi else _random_symmetric(g, rng) * D
    return _block(A, B, _zeros(g, g), D)


def _random_symplectic(g: int, rng: random.Random) -> DomainMatrix:
    eye, zero = _eye(g), _zeros(g, g)
    upper = _block(eye, _random_symmetric(g, rng), zero, eye)
    lower = _block(eye, zero, _random_symmetric(g, rng), eye)
    return upper * lower * _random_parabolic(g, rng, levi=True)


def _random_lagrangian_frame(g: int, rng: random.Random) -> DomainMatrix:
    return _random_symplectic(g, rng)[:, :g] * _random_invertible(g, rng)


def random_invertible(g: int, rng: random.Random) -> Matrix:
    return _random_invertible(g, rng).to_Matrix()


def random_symmetric(g: int, rng: random.Random) -> Matrix:
    return _random_symmetric(g, rng).to_Matrix()


def random_parabolic(g: int, rng: random.Random, levi: bool = False) -> Matrix:
    """A random element [[A, S A^-T], [0, A^-T]] of P_g (S symmetric)."""
    return _random_parabolic(g, rng, levi).to_Matrix()


def random_levi(g: int, rng: random.Random) -> Matrix:
    return random_parabolic(g, rng, levi=True)


def random_symplectic_matrix(g: int, rng: random.Random) -> Matrix:
    """Product of upper unipotent, lower unipotent and Levi factors."""
    return _random_symplectic(g, rng).to_Matrix()


def random_hodge_basis(g: int, rng: random.Random) -> SymplecticBasis:
    return SymplecticBasis.from_matrix(_random_symplectic(g, rng), SymplecticSpace(g))


def random_lagrangian_frame(g: int, rng: random.Random) -> Matrix:
    """A random basis of a random Lagrangian of the standard space."""
    return _random_lagrangian_frame(g, rng).to_Matrix()


def scrambled_space(g: int, rng: random.Random) -> SymplecticSpace:
    """The standard form under a random change of coordinates T^T J T."""
    T = _random_invertible(2 * g, rng)
    return SymplecticSpace(g, T.transpose() * _standard_form(g) * T)


def selftest(
    g: int, trials: int = 500, torsor_trials: int = 200, seed: int = 1729
) -> Dict[str, Dict[str, int]]:
    """Run the randomized property suite for one value of g.

    Returns
    -------
    dict
        property name to ``{"passed": n, "failed": m}``
    """
    rng = random.Random(f"{seed}-{g}")
    counts = dict()

    def record(name: str, ok: bool):
        tally = counts.setdefault(name, {"passed": 0, "failed": 0})
        tally["passed" if ok else "failed"] += 1

    space = SymplecticSpace(g)
    eye = _eye(2 * g)
    for _ in range(trials):
        F = _random_lagrangian_frame(g, rng)
        try:
            b = complete_to_symplectic(F, space)
            record("completion", _equal(b.omega, F))
        except ValueError:
            record("completion", False)
            continue
        try:
            C = _random_invertible(g, rng)
            dual = dual_lagrangian_basis(F * C, b.eta, space)
            roundtrip = dual_lagrangian_basis(F, b.eta, space)
            record(
                "dual_basis",
                _equal(roundtrip.omega, F)
                and Subspace.from_vectors(dual.omega) == Subspace.from_vectors(F),
            )
        except ValueError:
            record("dual_basis", False)
        record("find_lagrangian", is_lagrangian(*_scrambled_pair(g, rng)))
    for _ in range(torsor_trials):
        b = random_hodge_basis(g, rng)
        p = _random_parabolic(g, rng)
        q = _random_parabolic(g, rng)
        moved = act_parabolic(b, p)
        record("freeness", _equal(p, eye) or moved != b)
        try:
            record("transitivity", _equal(transition_parabolic(b, moved).element, p))
        except ValueError:
            record("transitivity", False)
        record(
            "associativity",
            act_parabolic(moved, q) == act_parabolic(b, p * q),
        )
        M = _random_symplectic(g, rng)
        N = _random_symplectic(g, rng)
        record(
            "group_closure",
            is_symplectic_matrix(M * N) and is_symplectic_matrix(M.inv()),
        )
    fibre, image = fiber_dimensions(random_hodge_basis(g, rng))
    record("symmetric_rank", fibre == g * (3 * g + 1) // 2 and image == g * (g + 1) // 2)
    logger.info(f"Symplectic selftest g={g}: {counts}")
    return counts


def _scrambled_pair(g: int, rng: random.Random):
    space = scrambled_space(g, rng)
    return space, find_lagrangian(space)
