"""
Rendering of command results as text tables, CSV or JSON.

Every number leaves this module as a decimal string; binary floats never reach the output.
"""

import csv
import io
import json
import logging
from typing import Any, Dict, List, Optional, Sequence

from src.config.constants import Constants
from src.models.series_value import SeriesValue
from src.models.verification_report import VerificationReport

logger = logging.getLogger(__name__)

REPORT_COLUMNS = ['identity_id', 'params', 'pass', 'expect_failure', 'residual', 'tolerance',
                  'lhs_mid', 'lhs_rad', 'rhs_mid', 'rhs_rad', 'terms_used', 'elapsed_ms', 'notes']


def render_rows(rows: Sequence[Dict[str, Any]], columns: Sequence[str], output_format: str) -> str:
    """
    Render a list of flat rows.

    Args:
        rows: Row dictionaries with string or integer values
        columns: Column order
        output_format: "text", "csv" or "json"

    Returns:
        Rendered output ending with a newline
    """
    if output_format == Constants.FORMAT_JSON:
        return json.dumps([{column: row.get(column) for column in columns} for row in rows], indent=2) + "\n"
    if output_format == Constants.FORMAT_CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([row.get(column, "") for column in columns])
        return buffer.getvalue()

    # Plain text: left-aligned columns
    table = [list(columns)] + [[str(row.get(column, "")) for column in columns] for row in rows]
    widths = [max(len(line[index]) for line in table) for index in range(len(columns))]
    lines = ["  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip() for line in table]
    return "\n".join(lines) + "\n"


def render_series_value(series_id: str, parameters: Dict[str, Any], value: SeriesValue,
                        output_format: str) -> str:
    """
    Render one evaluated series.

    The text form shows only the digits the radius certifies; CSV and JSON carry the full
    midpoint and radius as decimal strings.
    """
    record = {'series': series_id, 'params': {key: str(item) for key, item in parameters.items()}}
    record.update(value.to_dict())
    if output_format == Constants.FORMAT_JSON:
        return json.dumps(record, indent=2) + "\n"
    if output_format == Constants.FORMAT_CSV:
        flat = dict(record, params=_params_text(record['params']), details=_params_text(record['details']))
        return render_rows([flat], list(flat), Constants.FORMAT_CSV)

    lines = [f"series:      {series_id} ({_params_text(record['params'])})",
             f"value:       {record['value']}",
             f"radius:      {record['rad']}",
             f"terms used:  {record['terms_used']}",
             f"method:      {record['method']}"]
    if not value.target_met:
        lines.append("warning:     accuracy target not met within resource caps")
    return "\n".join(lines) + "\n"


def _params_text(parameters: Dict[str, Any]) -> str:
    return " ".join(f"{key}={value}" for key, value in parameters.items())


def report_rows(reports: Sequence[VerificationReport], digits: Optional[int] = None) -> List[Dict[str, Any]]:
    """Flatten reports into rows for CSV and text output."""
    rows = []
    for report in reports:
        data = report.to_dict(digits)
        rows.append({
            'identity_id': data['identity_id'],
            'params': _params_text(data['params']),
            'pass': "pass" if data['pass'] else "FAIL",
            'expect_failure': "yes" if data['expect_failure'] else "",
            'residual': data['residual'],
            'tolerance': data['tolerance'],
            'lhs_mid': data['lhs']['mid'],
            'lhs_rad': data['lhs']['rad'],
            'rhs_mid': data['rhs']['mid'],
            'rhs_rad': data['rhs']['rad'],
            'terms_used': data['terms_used'],
            'elapsed_ms': data['elapsed_ms'],
            'notes': data['notes'],
        })
    return rows


def render_reports(reports: Sequence[VerificationReport], output_format: str) -> str:
    """
    Render verification reports.

    JSON follows the report schema (lhs/rhs as {mid, rad}); the text table uses short decimals.
    """
    if output_format == Constants.FORMAT_JSON:
        return json.dumps([report.to_dict() for report in reports], indent=2) + "\n"
    if output_format == Constants.FORMAT_CSV:
        return render_rows(report_rows(reports), REPORT_COLUMNS, Constants.FORMAT_CSV)

    columns = ['identity_id', 'params', 'pass', 'expect_failure', 'residual', 'tolerance', 'elapsed_ms']
    text = render_rows(report_rows(reports, digits=8), columns, Constants.FORMAT_TEXT)
    unexpected = sum(1 for report in reports if not report.as_expected)
    summary = f"{len(reports)} report(s), {unexpected} unexpected outcome(s)"
    return text + summary + "\n"
