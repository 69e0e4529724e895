"""Quick pilot: does beta=1e3 allow useful displacement at desk scale,
and does privileged already order below direct at 1200 iterations?"""
import sys, time
import numpy as np, torch
torch.set_num_threads(1)
from scipy import stats
from privreg.synthdata import load_split
from privreg.training import TrainConfig, train
from privreg.evaluation import evaluate_method, paired_ttest, jacobian_stats
from privreg.regnet import predict_ddf

root = "/root/pkg/experiments/desk_ds"
train_split = load_split(root, "train")
val_split = load_split(root, "val")
holdout = load_split(root, "holdout")
dataset = {"train": train_split, "val": val_split}
before = evaluate_method(holdout, None, "before")
b_vals = [r.tre_before_mm for r in before.records]
print("before: mean TRE %.3f over %d pairs" % (before.summary["mean"], before.summary["n"]), flush=True)

for beta in (1000.0, 100.0):
    for strategy in ("direct", "privileged"):
        cfg = TrainConfig(strategy=strategy, beta=beta, iterations=1200, seed=0)
        t0 = time.time()
        res = train(dataset, cfg)
        wall = time.time() - t0
        ev = evaluate_method(holdout, res.models["theta"], strategy)
        a_vals = [r.tre_after_mm for r in ev.records]
        tt = paired_ttest(b_vals, a_vals)
        negs = [jacobian_stats(predict_ddf(res.models["theta"], t.moving, t.fixed))["neg_fraction"]
                for t in holdout]
        print("beta %g %s: TRE %.3f (p=%.2e t=%.2f) negdet max %.5f mean %.6f [%.0fs]"
              % (beta, strategy, ev.summary["mean"], tt.p_value, tt.t,
                 max(negs), float(np.mean(negs)), wall), flush=True)
