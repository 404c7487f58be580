"""
Trace export utilities for the simultaneous root finder.

Supports multiple export formats: CSV, JSON, Excel.
"""

import csv
import json
import re
from datetime import datetime
from pathlib import Path
from typing import TYPE_CHECKING, Any, Dict, List, Optional

import numpy as np
import pandas as pd

from .logging import Logger, default_logger

if TYPE_CHECKING:
    from solvers.base import SolverResult


class TraceExporter:
    """
    Exports solver results and their iterate traces.

    Supported formats:
    - CSV (default)
    - JSON
    - Excel (requires openpyxl)
    """

    def __init__(self, output_dir: str = "outputs", logger: Optional[Logger] = None):
        """
        Initialize exporter.

        Args:
            output_dir: Base directory for generated filenames
            logger: Logger instance (library default if None)
        """
        self.base_output_dir = Path(output_dir)
        self.logger = logger or default_logger()

    def _sanitize_name(self, name: str) -> str:
        """Sanitize name for use in filename."""
        sanitized = re.sub(r'[^\w\-]', '_', name)
        sanitized = re.sub(r'_+', '_', sanitized)
        return sanitized.strip('_')

    def _get_date_folder(self) -> Path:
        """Get date-based output folder, creating if needed."""
        date_folder = self.base_output_dir / datetime.now().strftime("%Y-%m-%d")
        date_folder.mkdir(parents=True, exist_ok=True)
        return date_folder

    def generate_filename(self, label: str, format: str = "csv") -> Path:
        """
        Generate descriptive filename with date-based folder.

        Example:
            outputs/2026-01-07/quartic_wdk_130736.csv
        """
        timestamp = datetime.now().strftime("%H%M%S")
        return self._get_date_folder() / f"{self._sanitize_name(label)}_{timestamp}.{format}"

    def export_to_path(
        self,
        results: List["SolverResult"],
        filepath: Path,
        metadata: Optional[Dict[str, Any]] = None
    ) -> str:
        """
        Export results to the given path; the suffix selects the format.

        Args:
            results: One SolverResult per method run
            filepath: Target file (.csv, .json or .xlsx)
            metadata: Additional metadata to include

        Returns:
            Path to exported file
        """
        filepath = Path(filepath)
        filepath.parent.mkdir(parents=True, exist_ok=True)

        ext = filepath.suffix.lower()
        if ext == ".json":
            return self._export_json(results, filepath, metadata)
        elif ext in [".xlsx", ".xls"]:
            return self._export_excel(results, filepath, metadata)
        else:
            return self._export_csv(results, filepath, metadata)

    def _run_metadata(self, results: List["SolverResult"], metadata: Optional[Dict]) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "export_time": datetime.now().strftime("%Y-%m-%d %H:%M:%S"),
            "methods": "|".join(r.method.value for r in results),
        }
        for r in results:
            key = r.method.value
            data[f"{key}_status"] = r.status.value
            data[f"{key}_iterations"] = r.iterations
            data[f"{key}_final_step_norm"] = repr(r.final_step_norm)
            data[f"{key}_final_residual"] = repr(r.final_residual)
            data[f"{key}_jitter_count"] = r.jitter_count
        data.update(metadata or {})
        return data

    @staticmethod
    def _frame(result: "SolverResult") -> pd.DataFrame:
        if result.trace is not None:
            return result.trace.to_frame()
        roots = np.asarray(result.roots)
        data = {"m": [result.iterations]}
        for j, z in enumerate(roots):
            data[f"x{j + 1}_re"] = [z.real]
            data[f"x{j + 1}_im"] = [z.imag]
        data["step_norm"] = [result.final_step_norm]
        data["residual"] = [result.final_residual]
        return pd.DataFrame(data)

    def _export_csv(
        self,
        results: List["SolverResult"],
        filepath: Path,
        metadata: Optional[Dict] = None
    ) -> str:
        """Export to CSV with a RUN_METADATA block and one table per method."""
        with open(filepath, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f)

            writer.writerow(["# RUN_METADATA"])
            for key, value in self._run_metadata(results, metadata).items():
                writer.writerow([f"# {key}", value])
            writer.writerow([])

            for r in results:
                frame = self._frame(r)
                writer.writerow([f"# ITERATE_ROWS {r.method.value}"])
                writer.writerow(list(frame.columns))
                for row in frame.itertuples(index=False):
                    writer.writerow(["" if pd.isna(v) else repr(float(v)) if isinstance(v, float) else v
                                     for v in row])
                writer.writerow([])

        self.logger.info(f"Exported CSV: {filepath}")
        return str(filepath)

    def _export_json(
        self,
        results: List["SolverResult"],
        filepath: Path,
        metadata: Optional[Dict] = None
    ) -> str:
        """Export to JSON format."""
        data = {"metadata": self._run_metadata(results, metadata), "runs": []}

        for r in results:
            iterates = r.trace.iterates if r.trace is not None else [r.roots]
            data["runs"].append({
                "method": r.method.value,
                "status": r.status.value,
                "iterations": r.iterations,
                "roots": [[float(z.real), float(z.imag)] for z in np.asarray(r.roots)],
                "iterates": [[[float(z.real), float(z.imag)] for z in x] for x in iterates],
                "step_norms": list(r.trace.step_norms) if r.trace is not None else [],
                "residuals": list(r.trace.residual_norms) if r.trace is not None else [],
            })

        with open(filepath, "w", encoding="utf-8") as f:
            json.dump(data, f, indent=2, ensure_ascii=False)

        self.logger.info(f"Exported JSON: {filepath}")
        return str(filepath)

    def _export_excel(
        self,
        results: List["SolverResult"],
        filepath: Path,
        metadata: Optional[Dict] = None
    ) -> str:
        """Export to Excel format (requires openpyxl)."""
        try:
            import openpyxl  # noqa: F401
        except ImportError:
            self.logger.warning("openpyxl not available, falling back to CSV")
            return self._export_csv(results, filepath.with_suffix(".csv"), metadata)

        meta = self._run_metadata(results, metadata)
        with pd.ExcelWriter(filepath, engine="openpyxl") as writer:
            pd.DataFrame({"Key": list(meta.keys()), "Value": [str(v) for v in meta.values()]}) \
                .to_excel(writer, sheet_name="Metadata", index=False)
            for r in results:
                self._frame(r).to_excel(writer, sheet_name=r.method.value[:31], index=False)

        self.logger.info(f"Exported Excel: {filepath}")
        return str(filepath)
