from pathlib import Path

from ..core.errors import UsageError


def read_ideal_argument(value: str) -> str:
    """Return the ideal text, reading it from a file when given as ``@path``."""
    if not value.startswith("@"):
        return value
    path = Path(value[1:])
    if not path.is_file():
        raise UsageError(f"ideal file not found: {path}")
    return path.read_text(encoding="utf-8").strip()


def validate_svg_path(destination: str) -> Path:
    path = Path(destination)
    if get_file_extension(path.name) != "svg":
        raise UsageError(f"--svg expects a .svg file, got {destination}")
    if path.parent and not path.parent.exists():
        raise UsageError(f"directory does not exist: {path.parent}")
    return path


def save_text_file(content: str, destination: Path) -> None:
    """Write text with fixed newlines, so output is byte-identical across platforms."""
    with open(destination, "w", encoding="utf-8", newline="\n") as f:
        f.write(content)


def get_file_extension(filename: str) -> str:
    return filename.split(".")[-1].lower() if "." in filename else ""
