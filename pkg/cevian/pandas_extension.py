import logging

import pandas as pd

from .metrics import is_control, pass_counts, unary_metrics
from .references import GeneratedCell
from .statements import FAIL


@pd.api.extensions.register_dataframe_accessor("verdicts")
class VerdictsAccessor:
    """Report helpers on suite DataFrames (``df.verdicts``)."""

    required = ("statement", "mode", "flavor", "index", "status", "fingerprint")

    def __init__(self, pandas_obj):
        self._validate(pandas_obj)
        self._obj = pandas_obj

    @classmethod
    def _validate(cls, obj):
        missing = [c for c in cls.required if c not in obj.columns]
        if missing:
            raise AttributeError(f"not a suite report, missing columns {missing}")

    def to_lines(self):
        """One line per cell: statement, mode, flavor, index, status, fingerprint, tab separated."""
        rows = self._obj.sort_values(["statement", "mode", "flavor", "index"], kind="mergesort")
        columns = [rows[c].astype(str) for c in self.required]
        return "".join("\t".join(cells) + "\n" for cells in zip(*columns))

    def summary(self):
        return pass_counts(self._obj)

    def metrics(self):
        return unary_metrics(self._obj)

    def failures(self):
        """FAIL cells among the main (non-control) cells."""
        df = self._obj
        return df[(df["status"] == FAIL) & ~is_control(df)]

    @property
    def has_failures(self):
        return not self.failures().empty

    def references(self):
        """Replayable references for the failing cells."""
        refs = []
        failures = self.failures()
        for seed, index, mode, flavor, bound in zip(
            failures["seed"], failures["index"], failures["mode"], failures["flavor"], failures["bound"]
        ):
            refs.append(GeneratedCell(int(seed), int(index), mode, flavor, int(bound)))
        if refs:
            logging.info(f"{len(refs)} failing cells, first replay: {refs[0].to_json()}")
        return refs
