"""Conditional layer-instance normalization.

Both normalized views of the input are mixed by a learnable per-channel
weight rho in [0,1], then scaled and shifted by an affine whose gamma/beta
are predicted from a conditioning vector:

    aI  = (x - mean_{H,W}) / sqrt(var_{H,W} + eps)        per (sample, channel)
    aL  = (x - mean_{C,H,W}) / sqrt(var_{C,H,W} + eps)    per sample
    out = gamma(cond) * (rho * aI + (1 - rho) * aL) + beta(cond)

gamma(cond) = cond @ W_g^T + b_g and beta(cond) = cond @ W_b^T + b_b are
broadcast over H and W. Variances are biased (divide by count). rho starts
at 0.9 (near instance norm) and is clamped back into [0,1] after every
optimizer step.
"""

from __future__ import annotations

import torch
from torch import Tensor, nn

from .errors import ShapeError

RHO_INIT = 0.9
EPS_DEFAULT = 1e-5
AFFINE_WEIGHT_STD = 0.02


class CLIN(nn.Module):
    def __init__(self, channels: int, cond_dim: int, eps: float = EPS_DEFAULT) -> None:
        super().__init__()
        if eps <= 0:
            raise ValueError(f"eps must be > 0, got {eps}")
        self.channels = channels
        self.cond_dim = cond_dim
        self.eps = eps
        self.rho = nn.Parameter(torch.full((channels,), RHO_INIT))
        self.gamma_map = nn.Linear(cond_dim, channels)
        self.beta_map = nn.Linear(cond_dim, channels)
        nn.init.normal_(self.gamma_map.weight, std=AFFINE_WEIGHT_STD)
        nn.init.normal_(self.beta_map.weight, std=AFFINE_WEIGHT_STD)
        nn.init.ones_(self.gamma_map.bias)
        nn.init.zeros_(self.beta_map.bias)

    def forward(self, x: Tensor, cond: Tensor) -> Tensor:
        return clin_forward(x, cond, self)

    def extra_repr(self) -> str:
        return f"channels={self.channels}, cond_dim={self.cond_dim}, eps={self.eps}"


def clin_forward(x: Tensor, cond: Tensor, p: CLIN) -> Tensor:
    if x.dim() != 4:
        raise ShapeError("clin_forward expects x of shape [N,C,H,W]", x.shape)
    if cond.dim() != 2:
        raise ShapeError("clin_forward expects cond of shape [N,D]", cond.shape)
    if x.shape[0] != cond.shape[0]:
        raise ShapeError("batch sizes differ", x.shape, cond.shape)
    if x.shape[1] != p.channels:
        raise ShapeError(f"x channels != CLIN channels ({p.channels})", x.shape)
    if cond.shape[1] != p.cond_dim:
        raise ShapeError(f"cond dim != CLIN cond_dim ({p.cond_dim})", cond.shape)

    mu_in = x.mean(dim=(2, 3), keepdim=True)
    var_in = x.var(dim=(2, 3), unbiased=False, keepdim=True)
    a_inst = (x - mu_in) / torch.sqrt(var_in + p.eps)

    mu_ln = x.mean(dim=(1, 2, 3), keepdim=True)
    var_ln = x.var(dim=(1, 2, 3), unbiased=False, keepdim=True)
    a_layer = (x - mu_ln) / torch.sqrt(var_ln + p.eps)

    rho = p.rho.view(1, -1, 1, 1)
    mixed = rho * a_inst + (1.0 - rho) * a_layer

    gamma = p.gamma_map(cond).view(x.shape[0], -1, 1, 1)
    beta = p.beta_map(cond).view(x.shape[0], -1, 1, 1)
    return gamma * mixed + beta
