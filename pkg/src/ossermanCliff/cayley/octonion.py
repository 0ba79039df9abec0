"""
Octonion arithmetic by Cayley–Dickson doubling of the quaternions.

An octonion is stored as 8 real coefficients on the basis 1, e1, ..., e7,
where (1, e1, e2, e3) is the quaternion half ``a`` and (e4, ..., e7) the
half ``b`` of the pair (a, b). Products follow

    (a, b)(c, d) = (ac − d*b, da + bc*).
"""
import numbers

import numpy as np


def quat_mul(p, q) -> np.ndarray:
    """Hamilton product of quaternions given as (w, x, y, z)."""
    p0, p1, p2, p3 = p
    q0, q1, q2, q3 = q
    return np.array([
        p0 * q0 - p1 * q1 - p2 * q2 - p3 * q3,
        p0 * q1 + p1 * q0 + p2 * q3 - p3 * q2,
        p0 * q2 - p1 * q3 + p2 * q0 + p3 * q1,
        p0 * q3 + p1 * q2 - p2 * q1 + p3 * q0,
    ])


def quat_conj(p) -> np.ndarray:
    return np.array([p[0], -p[1], -p[2], -p[3]])


def _cayley_dickson(x, y) -> np.ndarray:
    a, b = x[:4], x[4:]
    c, d = y[:4], y[4:]
    return np.concatenate([
        quat_mul(a, c) - quat_mul(quat_conj(d), b),
        quat_mul(d, a) + quat_mul(b, quat_conj(c)),
    ])


def _structure_constants() -> np.ndarray:
    E = np.eye(8)
    table = np.empty((8, 8, 8))
    for i in range(8):
        for j in range(8):
            table[i, j] = _cayley_dickson(E[i], E[j])
    table.setflags(write=False)
    return table


# e_i e_j = Σ_k _TABLE[i, j, k] e_k
_TABLE = _structure_constants()
CONJUGATION = np.diag([1.0, -1.0, -1.0, -1.0, -1.0, -1.0, -1.0, -1.0])


def _coeffs(x) -> np.ndarray:
    if isinstance(x, Octonion):
        return x.coeffs
    arr = np.asarray(x, dtype=float).ravel()
    if arr.shape != (8,):
        raise ValueError(f"an octonion needs 8 coefficients, got {arr.shape[0]}")
    return arr


def oct_mul(a, b) -> np.ndarray:
    """Product ab of two octonions given as 8-vectors or Octonion objects."""
    return np.einsum("i,j,ijk->k", _coeffs(a), _coeffs(b), _TABLE)


def oct_conj(a) -> np.ndarray:
    return CONJUGATION @ _coeffs(a)


def left_multiplication_matrix(w) -> np.ndarray:
    """Matrix of x ↦ wx."""
    return np.einsum("i,ikj->jk", _coeffs(w), _TABLE)


def right_multiplication_matrix(w) -> np.ndarray:
    """Matrix of x ↦ xw."""
    return np.einsum("i,kij->jk", _coeffs(w), _TABLE)


class Octonion:
    def __init__(self, coeffs):
        self.coeffs = _coeffs(coeffs).copy()

    @classmethod
    def one(cls) -> "Octonion":
        return cls.unit(0)

    @classmethod
    def unit(cls, i: int) -> "Octonion":
        """Basis element e_i (e_0 = 1)."""
        return cls(np.eye(8)[i])

    @classmethod
    def from_quaternions(cls, a, b) -> "Octonion":
        return cls(np.concatenate([np.asarray(a, dtype=float), np.asarray(b, dtype=float)]))

    @property
    def real(self) -> float:
        return float(self.coeffs[0])

    @property
    def imag(self) -> np.ndarray:
        return self.coeffs[1:].copy()

    @property
    def norm_squared(self) -> float:
        return float(self.coeffs @ self.coeffs)

    @property
    def norm(self) -> float:
        return float(np.sqrt(self.norm_squared))

    def conj(self) -> "Octonion":
        return Octonion(oct_conj(self.coeffs))

    def inner(self, other) -> float:
        """Euclidean inner product ⟨a, b⟩ = ½(ab* + ba*)."""
        return float(self.coeffs @ _coeffs(other))

    def inverse(self) -> "Octonion":
        n2 = self.norm_squared
        if n2 == 0.0:
            raise ZeroDivisionError("zero octonion has no inverse")
        return Octonion(oct_conj(self.coeffs) / n2)

    def isclose(self, other, atol: float = 1e-12) -> bool:
        return bool(np.allclose(self.coeffs, _coeffs(other), rtol=0.0, atol=atol))

    def __add__(self, other):
        return Octonion(self.coeffs + _coeffs(other))

    def __sub__(self, other):
        return Octonion(self.coeffs - _coeffs(other))

    def __neg__(self):
        return Octonion(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, numbers.Number):
            return Octonion(other * self.coeffs)
        return Octonion(oct_mul(self.coeffs, other))

    def __rmul__(self, other):
        if isinstance(other, numbers.Number):
            return Octonion(other * self.coeffs)
        return Octonion(oct_mul(other, self.coeffs))

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.coeffs, dtype=dtype)

    def __repr__(self):
        terms = " + ".join(f"{c:.6g} e{i}" for i, c in enumerate(self.coeffs))
        return f"Octonion({terms})"
