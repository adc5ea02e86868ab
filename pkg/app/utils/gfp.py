"""GF(p) 上の行列・多項式演算を numpy で提供するユーティリティ。

すべての配列は int64 で保持し、各演算の最後で p を法として簡約する。
"""

from collections.abc import Iterator
from itertools import product

import numpy as np
import numpy.typing as npt

IntArray = npt.NDArray[np.int64]


def mod_p(a: npt.ArrayLike, p: int) -> IntArray:
    """配列を p を法として簡約する。"""
    return np.asarray(np.asarray(a, dtype=np.int64) % p, dtype=np.int64)


def inv_scalar(a: int, p: int) -> int:
    """GF(p) の 0 でない元の逆元を返す。"""
    return pow(int(a) % p, p - 2, p)


def is_prime(n: int) -> bool:
    """n が素数かどうかを試し割りで判定する。"""
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def rref(matrix: npt.ArrayLike, p: int, n_cols: int | None = None) -> tuple[IntArray, list[int]]:
    """GF(p) 上の被約行階段形を求める。

    最も左の列から順に軸を選び、軸は 1 に正規化する。零行は取り除く。

    Args:
        matrix: 入力行列。
        p: 標数。
        n_cols: 行列が空のときの列数。

    Returns:
        (零行を除いた RREF, 軸の列番号のリスト)。
    """
    a = mod_p(matrix, p)
    if a.ndim != 2:
        a = a.reshape(0, n_cols or 0) if a.size == 0 else a.reshape(1, -1)
    a = a.copy()
    m, n = a.shape
    r = 0
    pivots: list[int] = []
    for c in range(n):
        if r >= m:
            break
        nonzero = np.nonzero(a[r:, c])[0]
        if nonzero.size == 0:
            continue
        piv = r + int(nonzero[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * inv_scalar(int(a[r, c]), p)) % p
        factors = a[:, c].copy()
        factors[r] = 0
        a = (a - np.outer(factors, a[r])) % p
        pivots.append(c)
        r += 1
    return np.asarray(a[:r], dtype=np.int64), pivots


def rank(matrix: npt.ArrayLike, p: int) -> int:
    """GF(p) 上の階数を返す。"""
    reduced, _ = rref(matrix, p)
    return int(reduced.shape[0])


def nullspace(matrix: npt.ArrayLike, p: int, n_cols: int | None = None) -> IntArray:
    """右零化空間 {v : A v = 0} の基底を行ベクトルとして返す。

    Args:
        matrix: 入力行列 A。
        p: 標数。
        n_cols: A が空行列のときの列数。

    Returns:
        形状 (k, n) の配列。各行が零化空間の基底ベクトル。
    """
    a = mod_p(matrix, p)
    n = a.shape[1] if a.ndim == 2 else int(n_cols or 0)
    reduced, pivots = rref(a.reshape(-1, n) if a.size else np.zeros((0, n)), p)
    free = [j for j in range(n) if j not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for row, f in enumerate(free):
        basis[row, f] = 1
        for k, pc in enumerate(pivots):
            basis[row, pc] = (-reduced[k, f]) % p
    return basis


def left_nullspace(matrix: npt.ArrayLike, p: int) -> IntArray:
    """左零化空間 {c : c A = 0} の基底を行ベクトルとして返す。"""
    a = mod_p(matrix, p)
    return nullspace(a.T, p, n_cols=a.shape[0])


def solve(matrix: npt.ArrayLike, rhs: npt.ArrayLike, p: int) -> IntArray | None:
    """A v = b の特殊解を1つ返す。解がなければ None。"""
    a = mod_p(matrix, p)
    b = mod_p(rhs, p).reshape(-1, 1)
    n = a.shape[1]
    reduced, pivots = rref(np.concatenate([a, b], axis=1), p)
    if n in pivots:
        return None
    v = np.zeros(n, dtype=np.int64)
    for k, pc in enumerate(pivots):
        v[pc] = reduced[k, n]
    return v


# ---------------------------------------------------------------------------
# 多項式（係数は低次から高次）
# ---------------------------------------------------------------------------


def poly_trim(coeffs: npt.ArrayLike, p: int) -> IntArray:
    """末尾（高次側）の 0 を取り除く。"""
    c = mod_p(coeffs, p)
    nz = np.nonzero(c)[0]
    if nz.size == 0:
        return np.zeros(0, dtype=np.int64)
    return c[: int(nz[-1]) + 1]


def poly_mul(a: npt.ArrayLike, b: npt.ArrayLike, p: int) -> IntArray:
    """多項式の積を返す。"""
    a_arr = mod_p(a, p)
    b_arr = mod_p(b, p)
    if a_arr.size == 0 or b_arr.size == 0:
        return np.zeros(0, dtype=np.int64)
    return poly_trim(np.convolve(a_arr, b_arr), p)


def poly_divmod(a: npt.ArrayLike, b: npt.ArrayLike, p: int) -> tuple[IntArray, IntArray]:
    """多項式の商と余りを返す。b は 0 でないこと。"""
    num = poly_trim(a, p).copy()
    den = poly_trim(b, p)
    if den.size == 0:
        raise ZeroDivisionError('division by the zero polynomial')
    db = den.size - 1
    lead_inv = inv_scalar(int(den[-1]), p)
    if num.size - 1 < db:
        return np.zeros(0, dtype=np.int64), num
    quot = np.zeros(num.size - db, dtype=np.int64)
    for shift in range(num.size - 1 - db, -1, -1):
        coef = (int(num[shift + db]) * lead_inv) % p
        if coef:
            quot[shift] = coef
            num[shift : shift + db + 1] = (num[shift : shift + db + 1] - coef * den) % p
    return poly_trim(quot, p), poly_trim(num, p)


def poly_mod(a: npt.ArrayLike, b: npt.ArrayLike, p: int) -> IntArray:
    """多項式の剰余を返す。"""
    return poly_divmod(a, b, p)[1]


def monic_polynomials(p: int, degree: int) -> Iterator[IntArray]:
    """次数 degree のモニック多項式をすべて列挙する。"""
    for lower in product(range(p), repeat=degree):
        yield np.asarray([*lower, 1], dtype=np.int64)


def find_factor(poly: npt.ArrayLike, p: int) -> IntArray | None:
    """次数 d/2 以下のモニック因子を試し割りで探す。見つからなければ None。"""
    f = poly_trim(poly, p)
    d = f.size - 1
    for deg in range(1, d // 2 + 1):
        for g in monic_polynomials(p, deg):
            if poly_mod(f, g, p).size == 0:
                return g
    return None
