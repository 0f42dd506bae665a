import math

import numpy as np
import pytest
import torch

from polaca.neuralcore import (
    Adam,
    BiLSTM,
    CLIN,
    CheckpointFormatError,
    CheckpointIncompatibleError,
    DivergedError,
    EmptySequenceError,
    GRUCell,
    ShapeError,
    bilstm_encode,
    cam_attention,
    checkpoint_hash,
    clin_forward,
    gru_step,
    load_checkpoint,
    read_checkpoint,
    save_checkpoint,
    unit_interval_params,
)

torch.manual_seed(0)


def finite_difference_grads(loss_fn, params, h=1e-3):
    """Central differences of a scalar loss with respect to each parameter."""
    grads = []
    for p in params:
        g = torch.zeros_like(p, dtype=torch.float64)
        flat = p.data.view(-1)
        gflat = g.view(-1)
        for i in range(flat.numel()):
            orig = flat[i].item()
            flat[i] = orig + h
            up = loss_fn()
            flat[i] = orig - h
            down = loss_fn()
            flat[i] = orig
            gflat[i] = (up - down) / (2 * h)
        grads.append(g)
    return grads


def assert_grads_close(analytic, numeric, rel=1e-3):
    for a, n in zip(analytic, numeric):
        a = a.double()
        denom = torch.maximum(a.abs().maximum(n.abs()), torch.tensor(1e-4, dtype=torch.float64))
        rel_err = ((a - n).abs() / denom).max().item()
        assert rel_err < rel, f"gradient mismatch: rel err {rel_err}"


# ---------------------------------------------------------------- CLIN

def instance_norm_oracle(x, eps):
    mu = x.mean(axis=(2, 3), keepdims=True)
    var = x.var(axis=(2, 3), keepdims=True)
    return (x - mu) / np.sqrt(var + eps)


def layer_norm_oracle(x, eps):
    mu = x.mean(axis=(1, 2, 3), keepdims=True)
    var = x.var(axis=(1, 2, 3), keepdims=True)
    return (x - mu) / np.sqrt(var + eps)


def make_identity_affine_clin(channels, cond_dim, rho_value):
    clin = CLIN(channels, cond_dim)
    with torch.no_grad():
        clin.rho.fill_(rho_value)
        clin.gamma_map.weight.zero_()
        clin.gamma_map.bias.fill_(1.0)
        clin.beta_map.weight.zero_()
        clin.beta_map.bias.zero_()
    return clin


def test_clin_rho1_is_instance_norm():
    rng = np.random.default_rng(1)
    for _ in range(20):
        n, c = int(rng.integers(1, 4)), int(rng.integers(1, 5))
        hw = int(rng.integers(2, 7))
        x = rng.standard_normal((n, c, hw, hw)).astype(np.float32)
        clin = make_identity_affine_clin(c, 3, rho_value=1.0)
        out = clin(torch.from_numpy(x), torch.zeros(n, 3)).detach().numpy()
        expected = instance_norm_oracle(x.astype(np.float64), clin.eps)
        assert np.abs(out - expected).max() < 1e-5
        assert np.abs(out.mean(axis=(2, 3))).max() < 1e-5


def test_clin_rho0_is_layer_norm():
    rng = np.random.default_rng(2)
    for _ in range(20):
        n, c = int(rng.integers(1, 4)), int(rng.integers(2, 5))
        hw = int(rng.integers(2, 7))
        x = rng.standard_normal((n, c, hw, hw)).astype(np.float32)
        clin = make_identity_affine_clin(c, 3, rho_value=0.0)
        out = clin(torch.from_numpy(x), torch.zeros(n, 3)).detach().numpy()
        expected = layer_norm_oracle(x.astype(np.float64), clin.eps)
        assert np.abs(out - expected).max() < 1e-5
        assert np.abs(out.mean(axis=(1, 2, 3))).max() < 1e-5


def test_clin_constant_input_returns_beta():
    clin = CLIN(3, 4)
    x = torch.full((2, 3, 5, 5), 2.5)
    cond = torch.randn(2, 4)
    out = clin(x, cond)
    beta = clin.beta_map(cond).view(2, 3, 1, 1).expand_as(out)
    assert torch.equal(out, beta)


def test_clin_shape_errors():
    clin = CLIN(3, 4)
    with pytest.raises(ShapeError):
        clin(torch.randn(2, 2, 4, 4), torch.randn(2, 4))
    with pytest.raises(ShapeError):
        clin(torch.randn(2, 3, 4, 4), torch.randn(2, 5))
    with pytest.raises(ShapeError):
        clin(torch.randn(2, 3, 4, 4), torch.randn(3, 4))


def test_clin_gradient_check():
    torch.manual_seed(7)
    clin = CLIN(3, 5).double()
    x = torch.randn(2, 3, 4, 4, dtype=torch.float64, requires_grad=True)
    cond = torch.randn(2, 5, dtype=torch.float64, requires_grad=True)
    weights = torch.randn(2, 3, 4, 4, dtype=torch.float64)

    def loss_fn():
        return (clin(x, cond) * weights).sum().item()

    params = [x, cond] + list(clin.parameters())
    loss = (clin(x, cond) * weights).sum()
    analytic = torch.autograd.grad(loss, params)
    numeric = finite_difference_grads(loss_fn, params)
    assert_grads_close(analytic, numeric)


# ---------------------------------------------------------------- CAM attention

def test_cam_identity_weighting():
    f = torch.randn(2, 4, 3, 3)
    w = torch.ones(4)
    logit, attended, heatmap = cam_attention(f, w)
    assert torch.equal(attended, f)
    assert torch.allclose(logit, f.mean(dim=(2, 3)).sum(dim=1))
    assert torch.allclose(heatmap, f.sum(dim=1))


def test_cam_zero_weighting():
    f = torch.randn(2, 4, 3, 3)
    logit, attended, heatmap = cam_attention(f, torch.zeros(4))
    assert torch.equal(attended, torch.zeros_like(f))
    assert torch.equal(heatmap, torch.zeros(2, 3, 3))
    assert torch.equal(logit, torch.zeros(2))


def test_cam_logit_matches_scalar_oracle():
    rng = np.random.default_rng(3)
    f = rng.standard_normal((2, 5, 4, 4))
    w = rng.standard_normal(5)
    logit, _, _ = cam_attention(torch.from_numpy(f), torch.from_numpy(w))
    for n in range(2):
        expected = sum(w[c] * f[n, c].mean() for c in range(5))
        assert abs(logit[n].item() - expected) < 1e-6


def test_cam_shape_error():
    with pytest.raises(ShapeError):
        cam_attention(torch.randn(2, 4, 3, 3), torch.ones(5))


def test_cam_gradient_check():
    torch.manual_seed(8)
    f = torch.randn(2, 3, 3, 3, dtype=torch.float64, requires_grad=True)
    w = torch.randn(3, dtype=torch.float64, requires_grad=True)
    mix = torch.randn(2, 3, 3, 3, dtype=torch.float64)

    def loss_fn():
        logit, attended, heatmap = cam_attention(f, w)
        return (logit.sum() + (attended * mix).sum() + heatmap.pow(2).sum()).item()

    logit, attended, heatmap = cam_attention(f, w)
    loss = logit.sum() + (attended * mix).sum() + heatmap.pow(2).sum()
    analytic = torch.autograd.grad(loss, [f, w])
    numeric = finite_difference_grads(loss_fn, [f, w])
    assert_grads_close(analytic, numeric)


# ---------------------------------------------------------------- GRU

def zero_gru(input_size, hidden_size):
    cell = GRUCell(input_size, hidden_size)
    with torch.no_grad():
        for p in cell.parameters():
            p.zero_()
    return cell


def test_gru_zero_params_zero_state():
    cell = zero_gru(3, 4)
    h = gru_step(torch.randn(2, 3), torch.zeros(2, 4), cell)
    assert torch.equal(h, torch.zeros(2, 4))


def test_gru_zero_params_halves_state():
    cell = zero_gru(3, 4)
    v = torch.randn(2, 4)
    h = gru_step(torch.randn(2, 3), v, cell)
    assert torch.allclose(h, 0.5 * v)


def gru_scalar_oracle(x, h, p):
    """Literal per-element transcription of the four gate equations."""
    def sig(v):
        return 1.0 / (1.0 + math.exp(-v))

    n, hidden = h.shape
    W = {g: getattr(p, f"W{g}").detach().numpy() for g in "zrh"}
    U = {g: getattr(p, f"U{g}").detach().numpy() for g in "zrh"}
    b_ = {g: getattr(p, f"b{g}").detach().numpy() for g in "zrh"}
    out = np.zeros_like(h)
    for b in range(n):
        for j in range(hidden):
            z = sig(float(x[b] @ W["z"][j] + h[b] @ U["z"][j] + b_["z"][j]))
            r_vec = [
                sig(float(x[b] @ W["r"][k] + h[b] @ U["r"][k] + b_["r"][k]))
                for k in range(hidden)
            ]
            rh = np.array(r_vec) * h[b]
            cand = math.tanh(float(x[b] @ W["h"][j] + rh @ U["h"][j] + b_["h"][j]))
            out[b, j] = (1.0 - z) * h[b, j] + z * cand
    return out


def test_gru_matches_scalar_oracle():
    torch.manual_seed(9)
    cell = GRUCell(3, 4).double()
    x = np.random.default_rng(4).standard_normal((2, 3))
    h = np.random.default_rng(5).standard_normal((2, 4))
    out = gru_step(torch.from_numpy(x), torch.from_numpy(h), cell)
    expected = gru_scalar_oracle(x, h, cell)
    assert np.abs(out.detach().numpy() - expected).max() < 1e-6


def test_gru_shape_errors():
    cell = GRUCell(3, 4)
    with pytest.raises(ShapeError):
        gru_step(torch.randn(2, 5), torch.randn(2, 4), cell)
    with pytest.raises(ShapeError):
        gru_step(torch.randn(2, 3), torch.randn(2, 5), cell)


def test_gru_gradient_check():
    torch.manual_seed(10)
    cell = GRUCell(2, 3).double()
    x = torch.randn(2, 2, dtype=torch.float64, requires_grad=True)
    h = torch.randn(2, 3, dtype=torch.float64, requires_grad=True)
    mix = torch.randn(2, 3, dtype=torch.float64)

    def loss_fn():
        return (gru_step(x, h, cell) * mix).sum().item()

    params = [x, h] + list(cell.parameters())
    loss = (gru_step(x, h, cell) * mix).sum()
    analytic = torch.autograd.grad(loss, params)
    numeric = finite_difference_grads(loss_fn, params)
    assert_grads_close(analytic, numeric)


# ---------------------------------------------------------------- BiLSTM

def lstm_scalar_oracle(seq, cell):
    def sig(v):
        return 1.0 / (1.0 + np.exp(-v))

    W = {g: getattr(cell, f"W{g}").detach().numpy() for g in "ifog"}
    U = {g: getattr(cell, f"U{g}").detach().numpy() for g in "ifog"}
    b = {g: getattr(cell, f"b{g}").detach().numpy() for g in "ifog"}
    n, t_steps, _ = seq.shape
    h = np.zeros((n, cell.hidden_size))
    c = np.zeros((n, cell.hidden_size))
    for t in range(t_steps):
        x = seq[:, t, :]
        i = sig(x @ W["i"].T + h @ U["i"].T + b["i"])
        f = sig(x @ W["f"].T + h @ U["f"].T + b["f"])
        o = sig(x @ W["o"].T + h @ U["o"].T + b["o"])
        g = np.tanh(x @ W["g"].T + h @ U["g"].T + b["g"])
        c = f * c + i * g
        h = o * np.tanh(c)
    return h


def test_bilstm_t1_shared_params_halves_equal():
    torch.manual_seed(11)
    net = BiLSTM(3, 4)
    net.tie_directions()
    out = bilstm_encode(torch.randn(2, 1, 3), net)
    assert torch.allclose(out[:, :4], out[:, 4:])


def test_bilstm_zero_params_zero_output():
    net = BiLSTM(3, 4)
    with torch.no_grad():
        for p in net.parameters():
            p.zero_()
    out = bilstm_encode(torch.randn(2, 5, 3), net)
    assert torch.equal(out, torch.zeros(2, 8))


def test_bilstm_matches_scalar_oracle():
    torch.manual_seed(12)
    net = BiLSTM(3, 4).double()
    seq = np.random.default_rng(6).standard_normal((2, 3, 3))
    out = bilstm_encode(torch.from_numpy(seq), net).detach().numpy()
    fwd = lstm_scalar_oracle(seq, net.forward_cell)
    bwd = lstm_scalar_oracle(seq[:, ::-1, :], net.backward_cell)
    assert np.abs(out[:, :4] - fwd).max() < 1e-6
    assert np.abs(out[:, 4:] - bwd).max() < 1e-6


def test_bilstm_reversal_swaps_halves_with_tied_params():
    torch.manual_seed(13)
    net = BiLSTM(3, 4)
    net.tie_directions()
    seq = torch.randn(2, 5, 3)
    out = bilstm_encode(seq, net)
    flipped = bilstm_encode(torch.flip(seq, dims=(1,)), net)
    assert torch.allclose(out[:, :4], flipped[:, 4:], atol=1e-6)
    assert torch.allclose(out[:, 4:], flipped[:, :4], atol=1e-6)


def test_bilstm_empty_sequence():
    net = BiLSTM(3, 4)
    with pytest.raises(EmptySequenceError):
        bilstm_encode(torch.zeros(2, 0, 3), net)


def test_bilstm_gradient_check():
    torch.manual_seed(14)
    net = BiLSTM(2, 2).double()
    seq = torch.randn(1, 3, 2, dtype=torch.float64, requires_grad=True)
    mix = torch.randn(1, 4, dtype=torch.float64)

    def loss_fn():
        return (bilstm_encode(seq, net) * mix).sum().item()

    params = [seq] + list(net.parameters())
    loss = (bilstm_encode(seq, net) * mix).sum()
    analytic = torch.autograd.grad(loss, params)
    numeric = finite_difference_grads(loss_fn, params)
    assert_grads_close(analytic, numeric)


# ---------------------------------------------------------------- optimizer

def test_adam_zero_gradients_leave_params():
    p = torch.tensor([1.0, -2.0])
    opt = Adam([p], lr=0.1)
    opt.step(grads=[torch.zeros(2)])
    assert torch.equal(p, torch.tensor([1.0, -2.0]))
    assert opt.step_count == 1


def test_adam_clamps_unit_interval_params():
    clin = CLIN(2, 2)
    opt = Adam(list(clin.parameters()), lr=10.0, clamp01=unit_interval_params(clin))
    grads = [torch.zeros_like(p) for p in clin.parameters()]
    grads[0] = torch.tensor([-5.0, 5.0])  # rho is the first registered parameter
    opt.step(grads=grads)
    assert clin.rho.min().item() == 0.0
    assert clin.rho.max().item() == 1.0


def test_adam_clamp_survives_adversarial_gradient_storm():
    clin = CLIN(3, 2)
    opt = Adam(list(clin.parameters()), lr=1.0, clamp01=unit_interval_params(clin))
    rng = np.random.default_rng(7)
    for _ in range(50):
        grads = [
            torch.from_numpy(rng.standard_normal(tuple(p.shape)).astype(np.float32) * 1e4)
            for p in clin.parameters()
        ]
        opt.step(grads=grads)
        assert clin.rho.min().item() >= 0.0
        assert clin.rho.max().item() <= 1.0


def test_adam_matches_hand_iteration():
    lr, b1, b2, eps = 0.1, 0.5, 0.999, 1e-8
    p = torch.tensor([1.0], dtype=torch.float64)
    opt = Adam([p], lr=lr, beta1=b1, beta2=b2, eps=eps)
    grad_seq = [0.3, -0.2, 0.7]
    for g in grad_seq:
        opt.step(grads=[torch.tensor([g], dtype=torch.float64)])

    # Hand iteration of the update rule in plain floats.
    theta, m, v = 1.0, 0.0, 0.0
    for t, g in enumerate(grad_seq, start=1):
        m = b1 * m + (1 - b1) * g
        v = b2 * v + (1 - b2) * g * g
        m_hat = m / (1 - b1 ** t)
        v_hat = v / (1 - b2 ** t)
        theta -= lr * m_hat / (math.sqrt(v_hat) + eps)
    assert abs(p.item() - theta) < 1e-7


def test_adam_rejects_nonfinite_gradient():
    p = torch.tensor([1.0])
    opt = Adam([p], lr=0.1)
    with pytest.raises(DivergedError):
        opt.step(grads=[torch.tensor([float("nan")])])


# ---------------------------------------------------------------- checkpoint

def test_checkpoint_roundtrip_bit_exact(tmp_path):
    torch.manual_seed(15)
    net = CLIN(4, 3)
    path = tmp_path / "net.plca"
    save_checkpoint(net, path, metadata={"step": 12, "config_hash": "abc"})
    before = {k: v.clone() for k, v in net.state_dict().items()}
    with torch.no_grad():
        for p in net.parameters():
            p.add_(1.0)
    meta = load_checkpoint(path, net)
    assert meta["step"] == 12
    for k, v in net.state_dict().items():
        assert torch.equal(v, before[k]), k


def test_checkpoint_missing_name(tmp_path):
    net = GRUCell(2, 2)
    path = tmp_path / "net.plca"
    save_checkpoint(net, path)
    other = BiLSTM(2, 2)
    with pytest.raises(CheckpointIncompatibleError) as err:
        load_checkpoint(path, other)
    assert any("missing entry" in o for o in err.value.offenders)
    assert any("Wz" in o for o in err.value.offenders)


def test_checkpoint_shape_mismatch(tmp_path):
    path = tmp_path / "net.plca"
    save_checkpoint({"w": torch.zeros(2, 3)}, path)
    with pytest.raises(CheckpointIncompatibleError) as err:
        load_checkpoint(path, {"w": torch.zeros(3, 2)})
    assert "shape mismatch" in str(err.value)


def test_checkpoint_truncated_file(tmp_path):
    path = tmp_path / "net.plca"
    save_checkpoint({"w": torch.zeros(4, 4)}, path)
    blob = path.read_bytes()
    path.write_bytes(blob[: len(blob) // 2])
    with pytest.raises(CheckpointFormatError):
        read_checkpoint(path)


def test_checkpoint_bad_magic(tmp_path):
    path = tmp_path / "net.plca"
    path.write_bytes(b"NOPE" + b"\x00" * 32)
    with pytest.raises(CheckpointFormatError):
        read_checkpoint(path)


def test_checkpoint_hash_stable(tmp_path):
    path = tmp_path / "net.plca"
    save_checkpoint({"w": torch.ones(2)}, path)
    h1 = checkpoint_hash(path)
    save_checkpoint({"w": torch.ones(2)}, path)
    assert checkpoint_hash(path) == h1
