import numpy as np
import pandas as pd

from .statements import FAIL, NA, NOFLIP, PASS

CONTROL_SUFFIX = "~control"


def is_control(df):
    return df["statement"].str.endswith(CONTROL_SUFFIX)


def pass_counts(df):
    """Per (statement, mode, flavor): PASS / FAIL / NA counts over the main cells."""
    main = df[~is_control(df)]
    if main.empty:
        return pd.DataFrame(columns=[PASS, FAIL, NA], dtype=int)
    counts = main.groupby(["statement", "mode", "flavor", "status"]).size().unstack("status", fill_value=0)
    for status in (PASS, FAIL, NA):
        if status not in counts.columns:
            counts[status] = 0
    return counts[[PASS, FAIL, NA]].sort_index()


def control_flip_rates(df):
    """Fraction of evaluable negative controls whose verdict flipped, per control statement."""
    controls = df[is_control(df) & (df["status"] != NA)]
    if controls.empty:
        return pd.Series(dtype=float, name="flip_rate")
    rates = controls.groupby("statement")["status"].agg(lambda s: np.mean(s.to_numpy() == PASS))
    return rates.rename("flip_rate").sort_index()


def rejection_rate(df):
    """Rejected draws per accepted instance."""
    instances = df.attrs.get("instances", 0)
    if not instances:
        return 0.0
    return df.attrs.get("rejections", 0) / instances


def unary_metrics(df):
    main = df[~is_control(df)]
    metrics = {}
    metrics["cells"] = len(main)
    metrics["pass"] = int((main["status"] == PASS).sum())
    metrics["fail"] = int((main["status"] == FAIL).sum())
    metrics["na"] = int((main["status"] == NA).sum())
    metrics["controls"] = int(is_control(df).sum())
    metrics["noflip"] = int((is_control(df) & (df["status"] == NOFLIP)).sum())
    flips = control_flip_rates(df)
    metrics["min_flip_rate"] = float(flips.min()) if len(flips) else float("nan")
    metrics["rejection_rate"] = rejection_rate(df)
    return metrics
