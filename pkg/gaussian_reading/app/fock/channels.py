"""Canal de ruido aditivo gaussiano en la base de Fock.

El canal que suma 2n a la varianza de cada cuadratura se realiza como
pérdida de transmisividad η = 1/(1+n) seguida de un amplificador de
ganancia G = 1+n. Ambos actúan elemento a elemento sobre ρ(j, k, j', k').
"""

import numpy as np
from scipy.special import gammaln


def _log_binom(top: np.ndarray, l: int) -> np.ndarray:
    return gammaln(top + 1) - gammaln(l + 1) - gammaln(top - l + 1)


def _loss(block: np.ndarray, eta: float) -> np.ndarray:
    dim = block.shape[0]
    out = np.zeros_like(block)
    for l in range(dim):
        size = dim - l
        levels = np.arange(size)
        log_w = _log_binom(levels + l, l) + levels * np.log(eta)
        if l:
            log_w = log_w + l * np.log1p(-eta)
        weights = np.exp(0.5 * log_w)
        out[:size, :size] += np.multiply.outer(weights, weights)[:, :, None, None] * block[l:, l:]
    return out


def _amplify(block: np.ndarray, gain: float) -> np.ndarray:
    dim = block.shape[0]
    out = np.zeros_like(block)
    for l in range(dim):
        size = dim - l
        levels = np.arange(size)
        log_v = _log_binom(levels + l, l) - (levels + 1) * np.log(gain)
        if l:
            log_v = log_v + l * np.log1p(-1.0 / gain)
        weights = np.exp(0.5 * log_v)
        out[l:, l:] += np.multiply.outer(weights, weights)[:, :, None, None] * block[:size, :size]
    return out


def _on_mode(rho: np.ndarray, dim: int, mode: int, channel, param: float) -> np.ndarray:
    axes = [0, 2] if mode == 0 else [1, 3]
    tensor = np.moveaxis(rho.reshape(dim, dim, dim, dim), axes, [0, 1])
    tensor = channel(tensor, param)
    return np.moveaxis(tensor, [0, 1], axes).reshape(dim * dim, dim * dim)


def additive_noise(rho: np.ndarray, dim: int, n1: float, n2: float) -> np.ndarray:
    """Aplicar el ruido aditivo (n1, n2) a una matriz densidad de dos modos."""
    out = rho
    for mode, noise in enumerate((n1, n2)):
        if noise == 0:
            continue
        out = _on_mode(out, dim, mode, _loss, 1.0 / (1.0 + noise))
        out = _on_mode(out, dim, mode, _amplify, 1.0 + noise)
    return out
