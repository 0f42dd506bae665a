"""Versioned binary checkpoints.

Layout (all integers little-endian u32):

    magic "PLCA" | version | entry count
    per entry: name length | UTF-8 name | rank | dims... | raw f32 data (LE)
    trailer:   json length | UTF-8 JSON metadata

Entries are written in sorted name order so identical parameters always
produce identical bytes. Loading into a network is strict: unknown names,
missing names or shape drift raise with the full offender list.
"""

from __future__ import annotations

import hashlib
import json
import struct
from pathlib import Path

import numpy as np
import torch
from torch import nn

MAGIC = b"PLCA"
VERSION = 1


class CheckpointFormatError(RuntimeError):
    """File is not a readable checkpoint (bad magic, truncation, garbage)."""


class CheckpointIncompatibleError(RuntimeError):
    """Checkpoint entries do not line up with the target network."""

    def __init__(self, offenders: list[str]) -> None:
        super().__init__("checkpoint incompatible: " + "; ".join(offenders))
        self.offenders = offenders


def _named_tensors(net) -> dict[str, torch.Tensor]:
    if isinstance(net, nn.Module):
        return {name: t for name, t in net.state_dict().items()}
    return dict(net)


def save_checkpoint(net, path: str | Path, metadata: dict | None = None) -> None:
    """Serialize a module's state (or a name->tensor mapping) plus metadata."""
    tensors = _named_tensors(net)
    path = Path(path)
    meta = dict(metadata or {})
    with open(path, "wb") as f:
        f.write(MAGIC)
        f.write(struct.pack("<II", VERSION, len(tensors)))
        for name in sorted(tensors):
            t = tensors[name].detach().cpu()
            if t.dtype != torch.float32:
                raise ValueError(f"checkpoint entries must be float32, {name} is {t.dtype}")
            data = np.ascontiguousarray(t.numpy(), dtype="<f4")
            raw_name = name.encode("utf-8")
            f.write(struct.pack("<I", len(raw_name)))
            f.write(raw_name)
            f.write(struct.pack("<I", data.ndim))
            f.write(struct.pack(f"<{data.ndim}I", *data.shape))
            f.write(data.tobytes())
        raw_meta = json.dumps(meta, ensure_ascii=False, sort_keys=True).encode("utf-8")
        f.write(struct.pack("<I", len(raw_meta)))
        f.write(raw_meta)


def read_checkpoint(path: str | Path) -> tuple[dict[str, np.ndarray], dict]:
    """Parse a checkpoint into (name -> float32 array, metadata)."""
    blob = Path(path).read_bytes()
    view = memoryview(blob)
    off = 0

    def take(n: int) -> memoryview:
        nonlocal off
        if off + n > len(view):
            raise CheckpointFormatError(f"{path}: truncated at byte {off} (wanted {n} more)")
        chunk = view[off:off + n]
        off += n
        return chunk

    if bytes(take(4)) != MAGIC:
        raise CheckpointFormatError(f"{path}: bad magic")
    version, count = struct.unpack("<II", take(8))
    if version != VERSION:
        raise CheckpointFormatError(f"{path}: unsupported version {version}")
    entries: dict[str, np.ndarray] = {}
    for _ in range(count):
        (name_len,) = struct.unpack("<I", take(4))
        name = bytes(take(name_len)).decode("utf-8")
        (rank,) = struct.unpack("<I", take(4))
        dims = struct.unpack(f"<{rank}I", take(4 * rank)) if rank else ()
        n_values = int(np.prod(dims, dtype=np.int64)) if rank else 1
        data = np.frombuffer(take(4 * n_values), dtype="<f4").reshape(dims)
        entries[name] = data
    (meta_len,) = struct.unpack("<I", take(4))
    metadata = json.loads(bytes(take(meta_len)).decode("utf-8"))
    return entries, metadata


def load_checkpoint(path: str | Path, net) -> dict:
    """Copy checkpoint values into `net` (module or name->tensor mapping).

    Returns the metadata dict. Every declared tensor must be present with
    the declared shape; the copy is bit-exact.
    """
    entries, metadata = read_checkpoint(path)
    tensors = _named_tensors(net)
    offenders = []
    for name in sorted(set(tensors) - set(entries)):
        offenders.append(f"missing entry {name!r}")
    for name in sorted(set(entries) - set(tensors)):
        offenders.append(f"unexpected entry {name!r}")
    for name in sorted(set(entries) & set(tensors)):
        want = tuple(tensors[name].shape)
        got = tuple(entries[name].shape)
        if want != got:
            offenders.append(f"shape mismatch for {name!r}: net {want} vs file {got}")
    if offenders:
        raise CheckpointIncompatibleError(offenders)
    with torch.no_grad():
        for name, array in entries.items():
            tensors[name].copy_(torch.from_numpy(array.copy()))
    return metadata


def checkpoint_hash(path: str | Path) -> str:
    """sha256 of the checkpoint file; used in lineage records."""
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()
