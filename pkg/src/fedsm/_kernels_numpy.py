"""Pure-numpy reference implementations of the hot numeric kernels.

Every function here has a numba twin in ``_kernels_numba``; the active set
is chosen once at import time by :mod:`fedsm.backend`. Both variants compute
the same quantities in float64, though last-ulp rounding may differ because
BLAS and explicit loops accumulate in different orders. Nothing in the
library relies on cross-backend bit equality; determinism is guaranteed
within a backend.
"""

import numpy as np


def axpby(a, x, b, y):
    return a * x + b * y


def affine_forward(x, w, b):
    # x: (n, d_in), w: (d_out, d_in), b: (d_out,) -> (n, d_out)
    return x @ w.T + b


def affine_backward(x, w, gout):
    # returns (gx, gw, gb) for out = x @ w.T + b
    gx = gout @ w
    gw = gout.T @ x
    gb = gout.sum(axis=0)
    return gx, gw, gb


def relu(z):
    return np.maximum(z, 0.0)


def relu_backward(z, g):
    return np.where(z > 0.0, g, 0.0)


def tanh(z):
    return np.tanh(z)


def tanh_backward(z, g):
    t = np.tanh(z)
    return g * (1.0 - t * t)


def softmax_rows(z):
    shifted = z - z.max(axis=1, keepdims=True)
    e = np.exp(shifted)
    return e / e.sum(axis=1, keepdims=True)


def sigmoid(z):
    out = np.empty_like(z)
    pos = z >= 0.0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def adam_step(w, g, m, v, t, lr, beta1, beta2, eps):
    # t is the 1-based step count after this update.
    m2 = beta1 * m + (1.0 - beta1) * g
    v2 = beta2 * v + (1.0 - beta2) * g * g
    mhat = m2 / (1.0 - beta1**t)
    vhat = v2 / (1.0 - beta2**t)
    w2 = w - lr * mhat / (np.sqrt(vhat) + eps)
    return w2, m2, v2


def sgd_momentum_step(w, g, vel, lr, mu):
    vel2 = mu * vel + g
    w2 = w - lr * vel2
    return w2, vel2
