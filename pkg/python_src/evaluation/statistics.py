"""ResultStatistics class: tabular views of validation results"""
import pandas as pd

from python_src.shacl.model import Severity

RESULT_COLUMNS = ["severity", "shape", "focus", "message"]
SEVERITIES = [s.value for s in Severity]


class ResultStatistics:
    def __init__(self, results, compact=str):
        self.results = list(results)
        self.compact = compact

    def results_frame(self):
        """One row per result, in report order"""
        rows = [{
            "severity": r.severity.value,
            "shape": self.compact(r.shape_id),
            "focus": self.compact(r.focus_node),
            "message": r.message,
        } for r in self.results]
        return pd.DataFrame(rows, columns=RESULT_COLUMNS)

    def shape_summary(self):
        """Result counts per shape and severity"""
        frame = self.results_frame()
        if frame.empty:
            return pd.DataFrame(columns=["shape"] + SEVERITIES)
        summary = frame.groupby(["shape", "severity"]).size().unstack(fill_value=0)
        summary = summary.reindex(columns=SEVERITIES, fill_value=0)
        return summary.reset_index().rename_axis(columns=None)

    def focus_counts(self):
        """Number of results per focus node"""
        frame = self.results_frame()
        return frame["focus"].value_counts().sort_index()
