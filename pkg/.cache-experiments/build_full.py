import json, time
import numpy as np
from manifold_calib import contact as ct
from manifold_calib import projection as pj

geom = ct.AssemblyGeometry()
t0 = time.time()
ms = ct.generate_manifold(geom, 20000, seed=101)
t1 = time.time()
print("manifold 20000: %.0fs" % (t1 - t0), flush=True)
np.save(".cache-experiments/manifold.npy", ms.poses)

ds = pj.build_dataset(ms, 100000, seed=202)
t2 = time.time()
print("dataset 1e5: %.0fs" % (t2 - t1), flush=True)
np.save(".cache-experiments/ds_inputs.npy", ds.inputs)
np.save(".cache-experiments/ds_targets.npy", ds.targets)

model = pj.init_model((6, 256, 256, 256, 256, 6), seed=303)
trained, hist = pj.train(model, ds, pj.TrainConfig(epochs=90, batch_size=256, learning_rate=1e-3, seed=404))
t3 = time.time()
print("train 90 epochs: %.0fs" % (t3 - t2), flush=True)
with open(".cache-experiments/model.json", "w") as f:
    json.dump(pj.model_to_dict(trained), f)
print("val mse trace:", [round(v, 5) for v in hist["val_mse"][::10]], flush=True)

# held-out metric: fresh dataset (different seed), the model never saw it
hold = pj.build_dataset(ms, 20000, seed=999)
pred = pj.mlp_forward(trained, hold.inputs)
pos = np.abs(pred[:, :3] - hold.targets[:, :3]).sum(axis=1).mean()
rot = np.abs(pred[:, 3:] - hold.targets[:, 3:]).sum(axis=1).mean()
pos2 = np.linalg.norm(pred[:, :3] - hold.targets[:, :3], axis=1).mean()
rot2 = np.linalg.norm(pred[:, 3:] - hold.targets[:, 3:], axis=1).mean()
print("held-out: L1-split pos %.3f mm rot %.3f deg | L2 pos %.3f rot %.3f" % (pos, rot, pos2, rot2), flush=True)
print("total %.0fs" % (time.time() - t0), flush=True)
