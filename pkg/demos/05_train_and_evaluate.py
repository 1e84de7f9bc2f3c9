"""Train a small model on a small dataset and score it with NMSE and rho."""
import tempfile
from pathlib import Path

from csilab.dataset import build_dataset, load_dataset
from csilab.geometry import ChannelConfig
from csilab.metrics import evaluate, model_predictor
from csilab.models.checkpoint import load_checkpoint
from csilab.models.zoo import ModelSpec
from csilab.temporal import SequenceConfig
from csilab.training import TrainConfig, train

root = Path(tempfile.mkdtemp()) / "data"
build_dataset(ChannelConfig(), SequenceConfig(), {"train": 200, "val": 50, "test": 50},
              master_seed=0, out_path=root)
train_batch = load_dataset(root, "train")
val_batch = load_dataset(root, "val")
test_batch = load_dataset(root, "test")

ckpt = root / "csinet_cr4.ckpt"
spec = ModelSpec("csinet", 4)
cfg = TrainConfig(epochs=10, batch_size=50, learning_rate=1e-3, seed=0)
model, history = train(spec, train_batch.data, val_batch.data, cfg, checkpoint_path=ckpt)
print("train loss first/last: %.3e / %.3e" % (history["train_loss"][0], history["train_loss"][-1]))
print("best epoch by validation loss:", history["best_epoch"])

report = evaluate(model_predictor(model), test_batch)
print("test NMSE: %.2f dB  rho: %.4f  over %d samples"
      % (report.nmse_db, report.rho, report.n_samples))

# the checkpoint restores an identical model
restored, _ = load_checkpoint(ckpt)
again = evaluate(model_predictor(restored), test_batch)
assert again.nmse_db == report.nmse_db and again.rho == report.rho
print("checkpoint round trip reproduces the metrics exactly")
