"""polaca: classical Chinese poetry to complete landscape artwork.

Pipeline stages: entity extraction from poetry, poetry-image dataset
construction, text-to-painting generation, calligraphy rendering and
stylization, inscription placement and pixel fusion, evaluation tooling,
and an HTTP generation service.
"""

from importlib import resources as _resources
from pathlib import Path

__version__ = "0.1.0"


def data_path(name: str) -> Path:
    """Filesystem path of a bundled data file (lexicon, stroke font, fixtures)."""
    return Path(_resources.files("polaca") / "data" / name)
