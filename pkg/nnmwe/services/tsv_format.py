import math

import nnmwe
from nnmwe.exceptions import FormatError


def lines_of(stream):
    """Iterate over the lines of a text stream, or of a string."""
    if isinstance(stream, str):
        return iter(stream.splitlines())
    return (line.rstrip("\r\n") for line in stream)


def header(columns):
    """The '#' header line every output TSV starts with."""
    return "\t".join([f"# nnmwe {nnmwe.__version__}", *columns])


def data_rows(stream, columns, error=FormatError):
    """
    Yield the data rows of a TSV written with ``header``.

    Args:
        stream: Text stream or string
        columns (int): Expected number of columns per row
        error (type): Exception raised for malformed rows; called with
            (message, line_number)

    Yields:
        tuple: (line_number, fields)
    """
    for line_number, line in enumerate(lines_of(stream), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != columns:
            raise error(f"expected {columns} tab-separated columns, found {len(fields)}", line_number)
        yield line_number, fields


def fmt(value):
    """Deterministic text form of a score."""
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, int):
        return str(value)
    if math.isnan(value):
        return "nan"
    return f"{value:.6f}"


def parse_float(text):
    return float("nan") if text == "nan" else float(text)
