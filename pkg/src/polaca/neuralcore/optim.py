"""Adam-style optimizer with post-step interval clamping.

Adversarial training uses beta1 = 0.5. Parameters registered as
unit-interval constrained (the CLIN mixing weights) are clamped back into
[0,1] after every step, so the constraint holds at all times regardless of
gradient magnitude.
"""

from __future__ import annotations

from typing import Iterable

import torch
from torch import Tensor, nn

from .clin import CLIN
from .errors import DivergedError


def unit_interval_params(module: nn.Module) -> list[Tensor]:
    """All CLIN mixing weights below `module`, for Adam's clamp01 argument."""
    return [m.rho for m in module.modules() if isinstance(m, CLIN)]


class Adam:
    def __init__(
        self,
        params: Iterable[Tensor],
        lr: float = 2e-4,
        beta1: float = 0.5,
        beta2: float = 0.999,
        eps: float = 1e-8,
        clamp01: Iterable[Tensor] = (),
    ) -> None:
        self.params = [p for p in params]
        self.lr = lr
        self.beta1 = beta1
        self.beta2 = beta2
        self.eps = eps
        self.step_count = 0
        self._clamp_ids = {id(p) for p in clamp01}
        self._m = [torch.zeros_like(p) for p in self.params]
        self._v = [torch.zeros_like(p) for p in self.params]

    @torch.no_grad()
    def step(self, grads: list[Tensor] | None = None) -> None:
        """One update. `grads` defaults to each parameter's .grad (missing
        gradients are treated as zero)."""
        if grads is None:
            grads = [p.grad if p.grad is not None else torch.zeros_like(p) for p in self.params]
        if len(grads) != len(self.params):
            raise ValueError(f"got {len(grads)} gradients for {len(self.params)} parameters")
        for g in grads:
            if not torch.isfinite(g).all():
                raise DivergedError("non-finite gradient", step=self.step_count)
        self.step_count += 1
        t = self.step_count
        bias1 = 1.0 - self.beta1 ** t
        bias2 = 1.0 - self.beta2 ** t
        for p, g, m, v in zip(self.params, grads, self._m, self._v):
            m.mul_(self.beta1).add_(g, alpha=1.0 - self.beta1)
            v.mul_(self.beta2).addcmul_(g, g, value=1.0 - self.beta2)
            m_hat = m / bias1
            v_hat = v / bias2
            p.sub_(self.lr * m_hat / (v_hat.sqrt() + self.eps))
            if id(p) in self._clamp_ids:
                p.clamp_(0.0, 1.0)

    def zero_grad(self) -> None:
        for p in self.params:
            p.grad = None

    def state_dict(self) -> dict:
        return {
            "step": self.step_count,
            "m": [m.clone() for m in self._m],
            "v": [v.clone() for v in self._v],
        }

    def load_state_dict(self, state: dict) -> None:
        self.step_count = int(state["step"])
        for dst, src in zip(self._m, state["m"]):
            dst.copy_(src)
        for dst, src in zip(self._v, state["v"]):
            dst.copy_(src)
