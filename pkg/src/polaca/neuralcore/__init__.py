"""Shared numeric substrate: normalization, attention, recurrent cells,
optimizer and checkpoint serialization.

All published tensors are float32 NCHW (images) or NT-major (sequences);
torch supplies array storage and reverse-mode differentiation, while every
formula that matters is written out explicitly in this package.
"""

from .errors import DivergedError, EmptySequenceError, ShapeError
from .clin import CLIN, clin_forward
from .attention import cam_attention
from .recurrent import BiLSTM, GRUCell, bilstm_encode, gru_step
from .optim import Adam, unit_interval_params
from .checkpoint import (
    CheckpointFormatError,
    CheckpointIncompatibleError,
    checkpoint_hash,
    load_checkpoint,
    read_checkpoint,
    save_checkpoint,
)

__all__ = [
    "CLIN",
    "clin_forward",
    "cam_attention",
    "GRUCell",
    "gru_step",
    "BiLSTM",
    "bilstm_encode",
    "Adam",
    "unit_interval_params",
    "save_checkpoint",
    "load_checkpoint",
    "read_checkpoint",
    "checkpoint_hash",
    "ShapeError",
    "DivergedError",
    "EmptySequenceError",
    "CheckpointFormatError",
    "CheckpointIncompatibleError",
]
