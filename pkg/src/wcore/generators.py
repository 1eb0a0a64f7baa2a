"""Seeded instance generators.

Each generator is a pure function of ``(cfg, rng)`` where ``rng`` is a
:class:`random.Random` derived from ``cfg.seed`` and a counter via
:func:`rng_for`.  Hypothesis sets that have measure zero (``ab = 0``,
``a^2 = ba``, ...) are hit with projector constructions instead of
rejection sampling; rejection is only used for generic conditions such as
"index at most one", with a fixed retry budget.

The block families conjugate a block-diagonal configuration by a random
invertible ``S``, transforming the weight by congruence
(``m -> S^-T m S^-1``), which preserves every weighted core equation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional, TypeVar

from .inverses import Weight, gi, is_group_invertible, wc, wdc
from .linalg import (
    Matrix,
    block_diag,
    column_space,
    hstack,
    inverse,
    is_invertible,
    left_null_space,
    null_space,
    rank,
    vstack,
)

T = TypeVar("T")


class GenerationError(RuntimeError):
    pass


@dataclass(frozen=True)
class GenConfig:
    dim: int = 3
    entry_bound: int = 5
    seed: int = 0
    max_retries: int = 200
    weight_bound: int = 2
    indefinite: bool = False

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be at least 1")
        if self.max_retries < 1:
            raise ValueError("max_retries must be at least 1")


def rng_for(cfg: GenConfig, *counter: object) -> random.Random:
    """Deterministic stream for ``(seed, counter...)``; string seeding is stable across runs."""
    return random.Random("/".join([str(cfg.seed), *map(str, counter)]))


def retry(cfg: GenConfig, attempt: Callable[[], Optional[T]], what: str) -> T:
    for _ in range(cfg.max_retries):
        out = attempt()
        if out is not None:
            return out
    raise GenerationError(f"{what}: no valid instance after {cfg.max_retries} attempts")


def random_integer_matrix(rng: random.Random, rows: int, cols: int, bound: int) -> Matrix:
    return Matrix(rows, cols, (rng.randint(-bound, bound) for _ in range(rows * cols)))


def random_rank_matrix(cfg: GenConfig, rng: random.Random, r: int, dim: int | None = None) -> Matrix:
    """A ``dim x dim`` matrix of exact rank ``r`` built as a product of full-rank factors."""
    k = dim or cfg.dim
    if not 0 <= r <= k:
        raise ValueError(f"rank {r} outside [0, {k}]")
    if r == 0:
        return Matrix.zeros(k)

    def attempt():
        a = random_integer_matrix(rng, k, r, cfg.entry_bound) @ random_integer_matrix(rng, r, k, cfg.entry_bound)
        return a if rank(a) == r else None

    return retry(cfg, attempt, f"rank-{r} matrix")


def random_invertible(cfg: GenConfig, rng: random.Random, dim: int | None = None, bound: int | None = None) -> Matrix:
    k = dim or cfg.dim
    b = cfg.entry_bound if bound is None else bound

    def attempt():
        s = random_integer_matrix(rng, k, k, b)
        return s if is_invertible(s) else None

    return retry(cfg, attempt, "invertible matrix")


def random_pd_weight(cfg: GenConfig, rng: random.Random, dim: int | None = None) -> Weight:
    """``P^T P + I`` for a random integer ``P``: symmetric positive definite."""
    k = dim or cfg.dim
    p = random_integer_matrix(rng, k, k, cfg.weight_bound)
    return Weight(p.T @ p + Matrix.identity(k))


def random_indefinite_weight(cfg: GenConfig, rng: random.Random, dim: int | None = None) -> Weight:
    """Random symmetric invertible integer matrix; signature unconstrained."""
    k = dim or cfg.dim

    def attempt():
        p = random_integer_matrix(rng, k, k, cfg.weight_bound)
        s = p + p.T
        return Weight(s) if is_invertible(s) else None

    return retry(cfg, attempt, "indefinite weight")


def random_weight(cfg: GenConfig, rng: random.Random, dim: int | None = None) -> Weight:
    if cfg.indefinite:
        return random_indefinite_weight(cfg, rng, dim)
    return random_pd_weight(cfg, rng, dim)


def _singular_rank(rng: random.Random, k: int) -> int:
    return rng.randint(1, k - 1) if k > 1 else 1


def gen_core_invertible(cfg: GenConfig, rng: random.Random, m: Weight, r: int | None = None) -> Matrix:
    """Random ``a`` with index <= 1 and a{1,3^m} nonempty (so ``a`` is m-weighted core invertible)."""

    def attempt():
        a = random_rank_matrix(cfg, rng, _singular_rank(rng, cfg.dim) if r is None else r)
        return a if wc(a, m) is not None else None

    return retry(cfg, attempt, "m-weighted core invertible matrix")


def gen_dual_core_invertible(cfg: GenConfig, rng: random.Random, n: Weight, r: int | None = None) -> Matrix:
    def attempt():
        a = random_rank_matrix(cfg, rng, _singular_rank(rng, cfg.dim) if r is None else r)
        return a if wdc(a, n) is not None else None

    return retry(cfg, attempt, "n-weighted dual core invertible matrix")


def gen_index_matrix(cfg: GenConfig, rng: random.Random, index: int, dim: int | None = None) -> Matrix:
    """``S diag(C, J) S^-1`` with ``C`` invertible and ``J`` a nilpotent Jordan block of size ``index``."""
    k = dim or cfg.dim
    if index > k:
        raise ValueError("index cannot exceed the dimension")
    if index == 0:
        return random_invertible(cfg, rng, k)
    nil = Matrix(index, index, (1 if j == i + 1 else 0 for i in range(index) for j in range(index)))
    blocks = [nil]
    if k > index:
        blocks.insert(0, random_invertible(cfg, rng, k - index, bound=3))
    s = random_invertible(cfg, rng, k, bound=2)
    return s @ block_diag(*blocks) @ inverse(s)


def gen_unitary(cfg: GenConfig, rng: random.Random, dim: int | None = None) -> Matrix:
    """Random signed permutation matrix: ``u^T u = u u^T = I`` exactly."""
    k = dim or cfg.dim
    perm = list(range(k))
    rng.shuffle(perm)
    return Matrix(k, k, ((rng.choice((-1, 1)) if perm[i] == j else 0) for i in range(k) for j in range(k)))


# ---------------------------------------------------------------------------
# Additive pairs
# ---------------------------------------------------------------------------


def _basis_rows(space) -> Matrix:
    return space.basis.T


def _m_ep_matrix(cfg: GenConfig, rng: random.Random, m: Weight, r: int) -> Matrix:
    """``F C F^T m``: null(a) = null(a^T m), so the additive constructions have room even at k = 2."""
    k = cfg.dim
    f = random_integer_matrix(rng, k, r, cfg.entry_bound)
    c = random_integer_matrix(rng, r, r, 3)
    return f @ c @ f.T @ m.matrix


def gen_additive_pair(cfg: GenConfig, rng: random.Random, m: Weight, disjoint: bool = False) -> tuple[Matrix, Matrix]:
    """``(a, b)`` in R^(#,m) with ``a^T m b = 0`` and ``ab = 0`` (and ``ba = 0`` when disjoint).

    ``b = N R L`` where the columns of ``N`` span null(a) ∩ null(a^T m) and, for
    the disjoint variant, the rows of ``L`` span the left null space of ``a``.
    """
    k = cfg.dim

    def attempt():
        r = rng.randint(1, max(1, (k - 1) // 2)) if k > 2 else 1
        if rng.random() < 0.5 or k < 3:
            a = _m_ep_matrix(cfg, rng, m, r)
        else:
            a = random_rank_matrix(cfg, rng, r)
        if rank(a) != r or wc(a, m) is None:
            return None
        n_basis = null_space(vstack(a, a.T @ m.matrix)).basis
        if n_basis.cols == 0:
            return None
        left = _basis_rows(left_null_space(a)) if disjoint else Matrix.identity(k)
        if left.rows == 0:
            return None
        b = n_basis @ random_integer_matrix(rng, n_basis.cols, left.rows, cfg.entry_bound) @ left
        if b.is_zero() or wc(b, m) is None:
            return None
        return a, b

    return retry(cfg, attempt, "additive pair")


def _dual_ep_matrix(cfg: GenConfig, rng: random.Random, n: Weight, r: int) -> Matrix:
    """``n^-1 G^T C G``: col(a) = col(n^-1 a^T)."""
    k = cfg.dim
    g = random_integer_matrix(rng, r, k, cfg.entry_bound)
    c = random_integer_matrix(rng, r, r, 3)
    return n.inverse.matrix @ g.T @ c @ g


def gen_dual_additive_pair(cfg: GenConfig, rng: random.Random, n: Weight, disjoint: bool = False) -> tuple[Matrix, Matrix]:
    """``(a, b)`` in R_(n,#) with ``ab = 0`` and ``a n^-1 b^T = 0`` (and ``ba = 0`` when disjoint)."""
    k = cfg.dim

    def attempt():
        r = rng.randint(1, max(1, (k - 1) // 2)) if k > 2 else 1
        if rng.random() < 0.5 or k < 3:
            a = _dual_ep_matrix(cfg, rng, n, r)
        else:
            a = random_rank_matrix(cfg, rng, r)
        if rank(a) != r or wdc(a, n) is None:
            return None
        n_basis = null_space(a).basis
        blockers = hstack(n.inverse.matrix @ a.T, a) if disjoint else n.inverse.matrix @ a.T
        left = _basis_rows(left_null_space(blockers))
        if n_basis.cols == 0 or left.rows == 0:
            return None
        b = n_basis @ random_integer_matrix(rng, n_basis.cols, left.rows, cfg.entry_bound) @ left
        if b.is_zero() or wdc(b, n) is None:
            return None
        return a, b

    return retry(cfg, attempt, "dual additive pair")


def gen_sum_alt_pair(cfg: GenConfig, rng: random.Random, m: Weight) -> tuple[Matrix, Matrix]:
    """``b = a + w (I - a^(#,m) a)`` so that ``b a^(#,m) a = a``."""
    k = cfg.dim

    def attempt():
        a = gen_core_invertible(cfg, rng, m)
        proj = wc(a, m) @ a
        b = a + random_integer_matrix(rng, k, k, cfg.entry_bound) @ (Matrix.identity(k) - proj)
        return (a, b) if wc(b, m) is not None else None

    return retry(cfg, attempt, "sum-alternative pair")


def gen_range_cover_pair(cfg: GenConfig, rng: random.Random, m: Weight) -> tuple[Matrix, Matrix]:
    """``(a, b)`` with ``aR ⊆ bR``, equivalently ``b b^(#,m) a = a``."""
    k = cfg.dim

    def attempt():
        a = gen_core_invertible(cfg, rng, m)
        basis = column_space(a).basis
        extra = rng.randint(0, k - basis.cols)
        cols = hstack(basis, random_integer_matrix(rng, k, extra, cfg.entry_bound)) if extra else basis
        if rank(cols) != cols.cols:
            return None
        b = cols @ random_integer_matrix(rng, cols.cols, k, cfg.entry_bound)
        if rank(b) != cols.cols or wc(b, m) is None:
            return None
        return a, b

    return retry(cfg, attempt, "range-cover pair")


def gen_difference_pair(cfg: GenConfig, rng: random.Random, m: Weight) -> tuple[Matrix, Matrix]:
    """``b = a + (I - a a^(#,m)) w (I - a^(#,m) a)`` so that ``a a^(#,m) b = a = b a^(#,m) a``."""
    k = cfg.dim
    eye = Matrix.identity(k)

    def attempt():
        a = gen_core_invertible(cfg, rng, m)
        x = wc(a, m)
        w = random_integer_matrix(rng, k, k, cfg.entry_bound)
        b = a + (eye - a @ x) @ w @ (eye - x @ a)
        return (a, b) if wc(b, m) is not None else None

    return retry(cfg, attempt, "difference pair")


# ---------------------------------------------------------------------------
# Reverse-order-law instances
# ---------------------------------------------------------------------------


def gen_a2ba_pair(cfg: GenConfig, rng: random.Random, m: Weight) -> tuple[Matrix, Matrix]:
    """``b = a (a a^(#,m)) + w (I - a a^(#,m))``, giving ``ba = a^2``."""
    k = cfg.dim
    eye = Matrix.identity(k)

    def attempt():
        a = gen_core_invertible(cfg, rng, m)
        p = a @ wc(a, m)
        b = a @ p + random_integer_matrix(rng, k, k, cfg.entry_bound) @ (eye - p)
        return (a, b) if wc(b, m) is not None else None

    return retry(cfg, attempt, "a^2 = ba pair")


def gen_b2ba_pair(cfg: GenConfig, rng: random.Random, n: Weight) -> tuple[Matrix, Matrix]:
    """``a = b + (I - b^# b) w``, giving ``b(a - b) = 0``, i.e. ``b^2 = ba``."""
    k = cfg.dim
    eye = Matrix.identity(k)

    def attempt():
        b = gen_dual_core_invertible(cfg, rng, n)
        a = b + (eye - gi(b) @ b) @ random_integer_matrix(rng, k, k, cfg.entry_bound)
        return (a, b) if wdc(a, n) is not None else None

    return retry(cfg, attempt, "b^2 = ba pair")


def _congruence(cfg: GenConfig, rng: random.Random, sizes: list[int], orthogonal: bool = False) -> tuple[Matrix, Matrix, Weight]:
    # a plain transpose of a block only transforms covariantly when S is orthogonal
    s = gen_unitary(cfg, rng) if orthogonal else random_invertible(cfg, rng, bound=2)
    si = s.T if orthogonal else inverse(s)
    w0 = block_diag(*(random_pd_weight(cfg, rng, d).matrix for d in sizes))
    return s, si, Weight(si.T @ w0 @ si)


def _split(rng: random.Random, k: int) -> list[int]:
    if k == 1:
        return [1]
    k1 = rng.randint(1, k - 1)
    return [k1, k - k1]


def _block(cfg: GenConfig, rng: random.Random, kind: str, d: int) -> Matrix:
    if kind == "inv":
        return random_invertible(cfg, rng, d, bound=3)
    if kind == "zero":
        return Matrix.zeros(d)
    if kind == "scalar":
        return Matrix.identity(d) * rng.choice((-2, -1, 1, 2, 3))
    if kind == "index1":
        return random_rank_matrix(cfg, rng, _singular_rank(rng, d), d) if d > 1 else random_invertible(cfg, rng, 1, 3)
    raise ValueError(kind)


_COMMUTING_KINDS = [("inv", "inv"), ("inv", "zero"), ("zero", "inv"), ("zero", "zero"), ("scalar", "index1")]


def gen_block_pair(
    cfg: GenConfig, rng: random.Random, kinds: list[tuple[str, str]] | None = None, orthogonal: bool = False
) -> tuple[Matrix, Matrix, Weight]:
    """``a = S diag(a_i) S^-1``, ``b = S diag(b_i) S^-1`` with congruent block weight.

    With the default block kinds every block either is trivially invertible,
    zero, or has ``a_i`` scalar; the reverse order laws hold exactly there.
    Pass ``orthogonal`` when the checked identities involve bare transposes
    such as ``m b a^T``: only then is a signed permutation used for ``S``.
    """
    k = cfg.dim

    def attempt():
        sizes = _split(rng, k)
        chosen = kinds or [rng.choice(_COMMUTING_KINDS) for _ in sizes]
        s, si, w = _congruence(cfg, rng, sizes, orthogonal)
        a = s @ block_diag(*(_block(cfg, rng, ka, d) for (ka, _), d in zip(chosen, sizes))) @ si
        b = s @ block_diag(*(_block(cfg, rng, kb, d) for (_, kb), d in zip(chosen, sizes))) @ si
        if wc(a, w) is None or wc(b, w) is None or wdc(a, w) is None or wdc(b, w) is None:
            return None
        return a, b, w

    return retry(cfg, attempt, "block pair")


def gen_rol_suff_pair(cfg: GenConfig, rng: random.Random) -> tuple[Matrix, Matrix, Weight]:
    """ROL sufficiency family: ``a = S diag(A, 0) S^-1``, ``b = S diag(A, B) S^-1``; ``b = a`` at k = 1."""
    k = cfg.dim
    if k == 1 or rng.random() < 0.25:
        m = random_weight(cfg, rng)
        a = gen_core_invertible(cfg, rng, m) if k > 1 else random_invertible(cfg, rng, 1)
        return a, a, m

    def attempt():
        sizes = _split(rng, k)
        s, si, w = _congruence(cfg, rng, sizes)
        a1 = random_invertible(cfg, rng, sizes[0], bound=3)
        b2 = _block(cfg, rng, rng.choice(("inv", "zero", "index1")), sizes[1])
        a = s @ block_diag(a1, Matrix.zeros(sizes[1])) @ si
        b = s @ block_diag(a1, b2) @ si
        return (a, b, w) if wc(b, w) is not None else None

    return retry(cfg, attempt, "ROL sufficiency pair")


def gen_rol_dual_suff_pair(cfg: GenConfig, rng: random.Random) -> tuple[Matrix, Matrix, Weight]:
    """Dual family: ``b = S diag(B, 0) S^-1``, ``a = S diag(B, A) S^-1``."""
    k = cfg.dim
    if k == 1 or rng.random() < 0.25:
        n = random_weight(cfg, rng)
        b = gen_dual_core_invertible(cfg, rng, n) if k > 1 else random_invertible(cfg, rng, 1)
        return b, b, n

    def attempt():
        sizes = _split(rng, k)
        s, si, w = _congruence(cfg, rng, sizes)
        b1 = random_invertible(cfg, rng, sizes[0], bound=3)
        a2 = _block(cfg, rng, rng.choice(("inv", "zero", "index1")), sizes[1])
        b = s @ block_diag(b1, Matrix.zeros(sizes[1])) @ si
        a = s @ block_diag(b1, a2) @ si
        return (a, b, w) if wdc(a, w) is not None else None

    return retry(cfg, attempt, "dual ROL sufficiency pair")


def gen_core_pair(cfg: GenConfig, rng: random.Random, m: Weight, product: bool = False) -> tuple[Matrix, Matrix]:
    """Undirected pair of m-weighted core invertible matrices (``ab`` too when ``product``)."""

    def attempt():
        a = gen_core_invertible(cfg, rng, m, r=rng.randint(1, cfg.dim))
        b = gen_core_invertible(cfg, rng, m, r=rng.randint(1, cfg.dim))
        if product and wc(a @ b, m) is None:
            return None
        return a, b

    return retry(cfg, attempt, "core invertible pair")


def gen_dual_pair(cfg: GenConfig, rng: random.Random, n: Weight) -> tuple[Matrix, Matrix]:
    def attempt():
        a = gen_dual_core_invertible(cfg, rng, n, r=rng.randint(1, cfg.dim))
        b = gen_dual_core_invertible(cfg, rng, n, r=rng.randint(1, cfg.dim))
        return a, b

    return retry(cfg, attempt, "dual core invertible pair")


def gen_unitary_b_instance(cfg: GenConfig, rng: random.Random, m: Weight) -> tuple[Matrix, Matrix]:
    """Signed permutation ``b`` and ``a`` whose range is a Krylov subspace of ``b^T``.

    Then ``b^T a^(#,m) R ⊆ a^(#,m) R`` because ``a^(#,m) R = aR``.
    """
    k = cfg.dim

    def attempt():
        b = gen_unitary(cfg, rng)
        bt = b.T
        coords = [j for j in range(k) if rng.random() < 0.6] or [rng.randrange(k)]
        v = Matrix(k, 1, ((rng.randint(-cfg.entry_bound, cfg.entry_bound) if i in coords else 0) for i in range(k)))
        if v.is_zero():
            return None
        krylov = v
        while True:
            nxt = hstack(krylov, bt @ Matrix(k, 1, krylov.column(krylov.cols - 1)))
            if rank(nxt) == krylov.cols:
                break
            krylov = nxt
        r = krylov.cols
        a = krylov @ random_integer_matrix(rng, r, k, cfg.entry_bound)
        if rank(a) != r or wc(a, m) is None or wc(a @ b, m) is None:
            return None
        return a, b

    return retry(cfg, attempt, "unitary-b instance")


def gen_unitary_a_instance(cfg: GenConfig, rng: random.Random, m: Weight) -> tuple[Matrix, Matrix]:
    """Signed permutation ``a`` and invertible ``b`` (``aR ⊆ bR`` forces ``b`` invertible)."""
    return gen_unitary(cfg, rng), random_invertible(cfg, rng)


def gen_bab_instance(cfg: GenConfig, rng: random.Random, m: Weight) -> tuple[Matrix, Matrix]:
    """Index-one ``a`` and, usually, an invertible ``b`` that maps aR onto itself."""
    k = cfg.dim

    def attempt():
        a = gen_core_invertible(cfg, rng, m)
        if rng.random() < 0.35:
            b = random_rank_matrix(cfg, rng, rng.randint(1, k))
        else:
            b = _preserving_invertible(cfg, rng, column_space(a).basis)
        if wc(a @ b, m) is None:
            return None
        return a, b

    return retry(cfg, attempt, "bab-range instance")


def gen_group_orthogonal_pair(cfg: GenConfig, rng: random.Random) -> tuple[Matrix, Matrix]:
    """Group invertible ``c, d`` with ``cd = 0``: the columns of ``d`` lie in null(c)."""
    k = cfg.dim

    def attempt():
        c = random_rank_matrix(cfg, rng, _singular_rank(rng, k))
        if not is_group_invertible(c):
            return None
        nb = null_space(c).basis
        d = nb @ random_integer_matrix(rng, nb.cols, k, cfg.entry_bound)
        if d.is_zero() or not is_group_invertible(d):
            return None
        return c, d

    return retry(cfg, attempt, "cd = 0 pair")


def gen_cline_pair(cfg: GenConfig, rng: random.Random) -> tuple[Matrix, Matrix]:
    """Pairs ``(x, y)`` covering index 0, 1 and higher for ``xy``."""
    k = cfg.dim
    mode = rng.randrange(3)
    if mode == 0:
        x = random_rank_matrix(cfg, rng, rng.randint(0, k))
        y = random_rank_matrix(cfg, rng, rng.randint(0, k))
    elif mode == 1:
        x = random_invertible(cfg, rng, bound=2)
        y = inverse(x) @ gen_index_matrix(cfg, rng, rng.randint(1, k))
    else:
        d = gen_index_matrix(cfg, rng, rng.randint(1, k))
        x = random_rank_matrix(cfg, rng, rng.randint(1, k))
        y = d
    return x, y


def _preserving_invertible(cfg: GenConfig, rng: random.Random, basis: Matrix) -> Matrix:
    """Random invertible ``t`` with ``t col(basis) = col(basis)``."""
    k, r = basis.rows, basis.cols
    if r in (0, k):
        return random_invertible(cfg, rng, k, bound=3)
    frame = hstack(basis, null_space(basis.T).basis)
    top = hstack(random_invertible(cfg, rng, r, 3), random_integer_matrix(rng, r, k - r, 3))
    bottom = hstack(Matrix.zeros(k - r, r), random_invertible(cfg, rng, k - r, 3))
    return frame @ vstack(top, bottom) @ inverse(frame)


def gen_range_swap_pair(cfg: GenConfig, rng: random.Random, m: Weight) -> tuple[Matrix, Matrix]:
    """Invertible ``a`` whose transpose maps ``m bR`` onto itself, so ``a^T m bR = m b a^T R``."""

    def attempt():
        b = gen_core_invertible(cfg, rng, m)
        a = _preserving_invertible(cfg, rng, column_space(m.matrix @ b).basis).T
        return (a, b) if wc(a @ b, m) is not None else None

    return retry(cfg, attempt, "range-swap pair")
