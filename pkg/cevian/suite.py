"""Batch verification of the statements over generated instances."""
import json
import logging
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

import pandas as pd

from .errors import CevianError
from .generators import draw, mutate
from .metrics import CONTROL_SUFFIX
from .rand import Rand
from .statements import FAIL, NA, NOFLIP, PASS, Statement, Verdict, context_of
from .triangle import trace_signs

COLUMNS = ["statement", "mode", "flavor", "index", "status", "fingerprint", "witnesses", "seed", "bound", "error"]
CELL_KEY = ["statement", "mode", "flavor", "index"]


def strtobool(val):
    """Convert a string representation of truth to true (1) or false (0).
    True values are 'y', 'yes', 't', 'true', 'on', and '1'; false values
    are 'n', 'no', 'f', 'false', 'off', and '0'.  Raises ValueError if
    'val' is anything else.
    """
    val = val.lower()
    if val in ("y", "yes", "t", "true", "on", "1"):
        return 1
    elif val in ("n", "no", "f", "false", "off", "0"):
        return 0
    else:
        raise ValueError("invalid truth value %r" % (val,))


def default_workers():
    return int(os.environ.get("CEVIAN_WORKERS", "1"))


def default_controls():
    return bool(strtobool(os.environ.get("CEVIAN_NEGATIVE_CONTROLS", "True")))


def _row(spec, index, verdict, statement_id, error=""):
    return {
        "statement": statement_id,
        "mode": spec.mode,
        "flavor": spec.flavor,
        "index": index,
        "status": verdict.status,
        "fingerprint": verdict.fingerprint,
        "witnesses": json.dumps({k: str(v) for k, v in verdict.witnesses}),
        "seed": spec.seed,
        "bound": spec.bound,
        "error": error,
    }


def _control_rows(spec, index, instance, checked):
    rows = []
    try:
        mutated = mutate(instance, Rand.for_cell(spec.seed, "control", spec.flavor, spec.mode, index))
    except CevianError as e:
        logging.info(f"no control for {spec.flavor}/{spec.mode}#{index}: {e}")
        return rows
    for statement, verdict in checked:
        if verdict.status != PASS or not statement.controlled:
            continue
        control_id = statement.id + CONTROL_SUFFIX
        try:
            witnesses = tuple(statement.witnesses(mutated))
        except CevianError as e:
            logging.info(f"{control_id} on {spec.flavor}/{spec.mode}#{index} undefined: {e}")
            rows.append(_row(spec, index, Verdict(control_id, NA, (), mutated.fingerprint), control_id, str(e)))
            continue
        flipped = statement.flipped(witnesses)
        if not flipped:
            logging.warning(f"{control_id} did not flip on {spec.flavor}/{spec.mode}#{index}")
        status = PASS if flipped else NOFLIP
        rows.append(_row(spec, index, Verdict(control_id, status, witnesses, mutated.fingerprint), control_id))
    return rows


def run_cell(spec, index, controls=True):
    """Rows for one generated instance, its rejected draw count, and its trace sign pattern."""
    instance, rejections = draw(spec, index)
    context = "none" if spec.flavor == "pairs" else context_of(instance, spec.flavor)
    rows, checked = [], []
    for statement in Statement.for_flavor(spec.flavor):
        try:
            verdict = statement.check(instance, context)
        except CevianError as e:
            logging.warning(f"{statement.id} raised on {spec.flavor}/{spec.mode}#{index}: {e}")
            rows.append(_row(spec, index, Verdict(statement.id, FAIL), statement.id, str(e)))
            continue
        rows.append(_row(spec, index, verdict, statement.id))
        checked.append((statement, verdict))
    if controls and context not in ("none", "free"):
        rows.extend(_control_rows(spec, index, instance, checked))
    signs = trace_signs(instance.traces) if spec.flavor != "pairs" else ""
    return rows, rejections, signs


def _run_cell_args(args):
    return run_cell(*args)


def run_suite(spec, workers=None, controls=None):
    """Check every statement on spec.count generated instances.

    Returns one row per (statement, mode, flavor, index) cell, sorted by that
    key. Negative-control cells carry the statement id with a '~control'
    suffix. ``attrs`` holds the wall time and generator rejection count.
    """
    workers = default_workers() if workers is None else workers
    controls = default_controls() if controls is None else controls
    start = time.perf_counter()
    jobs = [(spec, index, controls) for index in range(spec.count)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_cell_args, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        results = [_run_cell_args(job) for job in jobs]

    rows = [row for cell_rows, _, _ in results for row in cell_rows]
    rejections = sum(r for _, r, _ in results)
    signs = Counter(s for _, _, s in results if s)
    wall_time = time.perf_counter() - start

    df = pd.DataFrame(rows, columns=COLUMNS)
    df = df.sort_values(CELL_KEY, kind="mergesort").reset_index(drop=True)
    df.attrs["wall_time"] = wall_time
    df.attrs["rejections"] = rejections
    df.attrs["instances"] = spec.count
    logging.info(f"{spec.flavor}/{spec.mode}: {spec.count} instances, {rejections} rejected draws, {wall_time:.2f}s")
    if signs:
        logging.info(f"trace sign patterns seen: {dict(sorted(signs.items()))}")
    return df


def run_suites(specs, workers=None, controls=None):
    frames = [run_suite(spec, workers=workers, controls=controls) for spec in specs]
    if not frames:
        return pd.DataFrame(columns=COLUMNS)
    df = pd.concat(frames, ignore_index=True)
    df = df.sort_values(CELL_KEY, kind="mergesort").reset_index(drop=True)
    df.attrs["wall_time"] = sum(f.attrs["wall_time"] for f in frames)
    df.attrs["rejections"] = sum(f.attrs["rejections"] for f in frames)
    df.attrs["instances"] = sum(f.attrs["instances"] for f in frames)
    return df
