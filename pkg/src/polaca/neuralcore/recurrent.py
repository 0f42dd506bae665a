"""Gated recurrent cell and bidirectional LSTM encoder, written out gate by
gate so the update equations are pinned rather than delegated.
"""

from __future__ import annotations

import torch
from torch import Tensor, nn

from .errors import EmptySequenceError, ShapeError

WEIGHT_STD = 0.08


class GRUCell(nn.Module):
    """Classic update/reset/candidate gating:

    z = sigmoid(Wz x + Uz h + bz)
    r = sigmoid(Wr x + Ur h + br)
    h~ = tanh(Wh x + Uh (r * h) + bh)
    h' = (1 - z) * h + z * h~
    """

    def __init__(self, input_size: int, hidden_size: int) -> None:
        super().__init__()
        self.input_size = input_size
        self.hidden_size = hidden_size

        def w(out, inp):
            return nn.Parameter(torch.randn(out, inp) * WEIGHT_STD)

        self.Wz, self.Uz, self.bz = w(hidden_size, input_size), w(hidden_size, hidden_size), nn.Parameter(torch.zeros(hidden_size))
        self.Wr, self.Ur, self.br = w(hidden_size, input_size), w(hidden_size, hidden_size), nn.Parameter(torch.zeros(hidden_size))
        self.Wh, self.Uh, self.bh = w(hidden_size, input_size), w(hidden_size, hidden_size), nn.Parameter(torch.zeros(hidden_size))

    def forward(self, x: Tensor, h: Tensor) -> Tensor:
        return gru_step(x, h, self)


def gru_step(x: Tensor, h: Tensor, p: GRUCell) -> Tensor:
    if x.dim() != 2 or x.shape[1] != p.input_size:
        raise ShapeError(f"gru_step expects x [N,{p.input_size}]", x.shape)
    if h.dim() != 2 or h.shape[1] != p.hidden_size:
        raise ShapeError(f"gru_step expects h [N,{p.hidden_size}]", h.shape)
    if x.shape[0] != h.shape[0]:
        raise ShapeError("batch sizes differ", x.shape, h.shape)
    z = torch.sigmoid(x @ p.Wz.T + h @ p.Uz.T + p.bz)
    r = torch.sigmoid(x @ p.Wr.T + h @ p.Ur.T + p.br)
    h_cand = torch.tanh(x @ p.Wh.T + (r * h) @ p.Uh.T + p.bh)
    return (1.0 - z) * h + z * h_cand


class _LSTMDirection(nn.Module):
    """One direction of the encoder; standard input/forget/output/cell gates."""

    def __init__(self, input_size: int, hidden_size: int) -> None:
        super().__init__()
        self.input_size = input_size
        self.hidden_size = hidden_size

        def w(out, inp):
            return nn.Parameter(torch.randn(out, inp) * WEIGHT_STD)

        for gate in ("i", "f", "o", "g"):
            setattr(self, f"W{gate}", w(hidden_size, input_size))
            setattr(self, f"U{gate}", w(hidden_size, hidden_size))
            setattr(self, f"b{gate}", nn.Parameter(torch.zeros(hidden_size)))

    def run(self, sequence: Tensor) -> Tensor:
        n, t_steps, _ = sequence.shape
        h = sequence.new_zeros(n, self.hidden_size)
        c = sequence.new_zeros(n, self.hidden_size)
        for t in range(t_steps):
            x = sequence[:, t, :]
            i = torch.sigmoid(x @ self.Wi.T + h @ self.Ui.T + self.bi)
            f = torch.sigmoid(x @ self.Wf.T + h @ self.Uf.T + self.bf)
            o = torch.sigmoid(x @ self.Wo.T + h @ self.Uo.T + self.bo)
            g = torch.tanh(x @ self.Wg.T + h @ self.Ug.T + self.bg)
            c = f * c + i * g
            h = o * torch.tanh(c)
        return h


class BiLSTM(nn.Module):
    """Bidirectional encoder; output is [final forward h, final backward h]."""

    def __init__(self, input_size: int, hidden_size: int) -> None:
        super().__init__()
        self.input_size = input_size
        self.hidden_size = hidden_size
        self.forward_cell = _LSTMDirection(input_size, hidden_size)
        self.backward_cell = _LSTMDirection(input_size, hidden_size)

    def forward(self, sequence: Tensor) -> Tensor:
        return bilstm_encode(sequence, self)

    def tie_directions(self) -> None:
        """Copy forward parameters into the backward cell (test hook)."""
        with torch.no_grad():
            for (_, pf), (_, pb) in zip(
                self.forward_cell.named_parameters(), self.backward_cell.named_parameters()
            ):
                pb.copy_(pf)


def bilstm_encode(sequence: Tensor, p: BiLSTM) -> Tensor:
    if sequence.dim() != 3 or sequence.shape[2] != p.input_size:
        raise ShapeError(f"bilstm_encode expects [N,T,{p.input_size}]", sequence.shape)
    if sequence.shape[1] == 0:
        raise EmptySequenceError("bilstm_encode requires at least one time step")
    h_fwd = p.forward_cell.run(sequence)
    h_bwd = p.backward_cell.run(torch.flip(sequence, dims=(1,)))
    return torch.cat([h_fwd, h_bwd], dim=1)
