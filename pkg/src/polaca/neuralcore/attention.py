"""Class-activation channel attention.

A classifier weight vector w over channels turns a feature map into a
class-sensitive representation: each channel is rescaled by its weight,
the classifier logit is the weighted sum of global average pools, and the
heatmap is the channel sum of the attended map.
"""

from __future__ import annotations

import torch
from torch import Tensor

from .errors import ShapeError


def cam_attention(features: Tensor, w: Tensor) -> tuple[Tensor, Tensor, Tensor]:
    """Return (logit [N], attended [N,C,H,W], heatmap [N,H,W])."""
    if features.dim() != 4:
        raise ShapeError("cam_attention expects features [N,C,H,W]", features.shape)
    if w.dim() != 1 or w.shape[0] != features.shape[1]:
        raise ShapeError("weight vector must have one entry per channel",
                         w.shape, features.shape)
    pooled = features.mean(dim=(2, 3))           # [N, C]
    logit = pooled @ w                           # [N]
    attended = w.view(1, -1, 1, 1) * features    # [N, C, H, W]
    heatmap = attended.sum(dim=1)                # [N, H, W]
    return logit, attended, heatmap
