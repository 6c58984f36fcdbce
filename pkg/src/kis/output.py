"""CSV output with a commented metadata header.

Every file records the package version, the subcommand, the full resolved
config, and the kernel backend.  The "# generated:" timestamp line is the
only nondeterministic byte in a run; comparisons exclude it.
"""

import datetime

FLOAT_FMT = "%.17g"


def _fmt(value) -> str:
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, float):
        return FLOAT_FMT % value
    return str(value)


class CsvWriter:
    """Streaming CSV writer; supports a failure-marker row for aborted runs."""

    def __init__(self, path: str, command: str, version: str, backend: str,
                 config: dict, columns: list, notes: tuple = ()):
        self.path = path
        self.fh = open(path, "w", encoding="utf-8", newline="\n")
        self.fh.write(f"# kis {version}\n")
        self.fh.write(f"# command: {command}\n")
        stamp = datetime.datetime.now(datetime.timezone.utc).strftime(
            "%Y-%m-%dT%H:%M:%SZ")
        self.fh.write(f"# generated: {stamp}\n")
        self.fh.write(f"# backend: {backend}\n")
        for note in notes:
            self.fh.write(f"# note: {note}\n")
        for key in sorted(config):
            self.fh.write(f"# config.{key}: {_fmt(config[key])}\n")
        self.fh.write(",".join(columns) + "\n")

    def write_row(self, values) -> None:
        self.fh.write(",".join(_fmt(v) for v in values) + "\n")

    def write_marker(self, text: str) -> None:
        self.fh.write(f"# error: {text}\n")

    def close(self) -> None:
        self.fh.close()

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        self.close()
        return False


def strip_timestamp(text: str) -> str:
    """Drop the generated-at line so byte comparisons see only the payload."""
    return "\n".join(line for line in text.splitlines()
                     if not line.startswith("# generated:")) + "\n"
